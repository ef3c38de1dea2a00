"""Embedded data tables: small-degree maxima, chief factor profiles of small
primitive groups, and the printed smooth, Mersenne and exceptional tables
that regenerated values are compared against.
"""

from __future__ import annotations

__all__ = (
    "DATA_DIR",
    "EmbeddedTables",
    "ExceptionalRow",
    "SmoothRow",
    "degree_expr",
    "load_tables",
)

import hashlib
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Any

import yaml

from .bounds import ChiefFactorProfile
from .errors import TableIntegrityError
from .mersenne import MersenneTriple

DATA_DIR = Path(__file__).parent / "data"
"""Directory holding the embedded YAML tables."""

SMALL_DEGREE_LIMIT = 32

_TABLE_FILES = (
    "exceptional_degrees.yaml",
    "mersenne_triples.yaml",
    "primitive_profiles.yaml",
    "small_degrees.yaml",
    "smooth_degrees.yaml",
)


def degree_expr(d: int) -> str:
    """Format a degree as ``2^k·v`` with ``v`` odd, for example
    ``degree_expr(655360) == "2^17·5"``.
    """
    if d < 1:
        raise ValueError(f"Degree must be positive, got {d}")
    k = (d & -d).bit_length() - 1
    v = d >> k
    if k == 0:
        return str(d)
    power = "2" if k == 1 else f"2^{k}"
    return power if v == 1 else f"{power}·{v}"


@dataclass(frozen=True)
class SmoothRow:
    """A printed row for degree ``2**u * v`` with ``v`` in ``{1, 3}``."""

    u: int
    v: int
    bound: int

    @property
    def degree(self) -> int:
        return 2**self.u * self.v


@dataclass(frozen=True)
class ExceptionalRow:
    """A printed row for the exceptional degree ``2**k * v``, ``v`` in
    ``{5, 15}``.
    """

    k: int
    v: int

    f: int | None
    """Number of 2-blocks from which `bound` applies; `None` when it applies
    to every transitive group of the degree.
    """

    bound: int

    @property
    def degree(self) -> int:
        return 2**self.k * self.v


@dataclass(frozen=True)
class EmbeddedTables:
    """The embedded tables, checked against their recorded checksums."""

    small_degrees: Mapping[int, int]
    """Maximum ``d(G)`` for transitive groups of degree 2 to 32."""

    small_degree_groups: Mapping[int, tuple[int, ...]]
    """Transitive group numbers attaining the maximum, where it exceeds 2."""

    profiles: Mapping[int, tuple[ChiefFactorProfile, ...]]
    """Chief factor profiles keyed by primitive degree, including the
    supplementary profiles of degrees 10, 15 and 24.
    """

    smooth: tuple[SmoothRow, ...]
    mersenne: Mapping[int, tuple[MersenneTriple, ...]]
    """Printed triples keyed by the index ``n = 3 * 2**m``."""

    exceptional: tuple[ExceptionalRow, ...]

    @classmethod
    def load(cls, data_dir: Path | str | None = None, verify: bool = True) -> EmbeddedTables:
        """Load the tables from a data directory.

        Parameters
        ----------
        data_dir
            Directory with the YAML tables and ``checksums.yaml``. Defaults
            to the package's `DATA_DIR`.
        verify
            Check each file's SHA-256 against ``checksums.yaml``.

        Raises
        ------
        TableIntegrityError
            Raised if a file is missing, a checksum does not match, or a
            table has the wrong shape.
        """
        logger = logging.getLogger(__name__)
        data_dir = DATA_DIR if data_dir is None else Path(data_dir)
        if verify:
            _verify_checksums(data_dir)
        raw = {name: _read_yaml(data_dir / name) for name in _TABLE_FILES}
        tables = cls(
            small_degrees=_parse_small_degrees(raw["small_degrees.yaml"]),
            small_degree_groups=_parse_small_degree_groups(raw["small_degrees.yaml"]),
            profiles=_parse_profiles(raw["primitive_profiles.yaml"]),
            smooth=_parse_smooth(raw["smooth_degrees.yaml"]),
            mersenne=_parse_mersenne(raw["mersenne_triples.yaml"]),
            exceptional=_parse_exceptional(raw["exceptional_degrees.yaml"]),
        )
        tables._check_shape()
        logger.debug("Loaded embedded tables from %s", data_dir)
        return tables

    def _check_shape(self) -> None:
        if sorted(self.small_degrees) != list(range(2, SMALL_DEGREE_LIMIT + 1)):
            raise TableIntegrityError("Small-degree table must cover degrees 2 to 32")
        for row in self.smooth:
            if row.v not in (1, 3):
                raise TableIntegrityError(f"Smooth row with v={row.v}")
        for row in self.exceptional:
            if row.v not in (5, 15) or (row.f is not None and not 1 <= row.f <= row.k):
                raise TableIntegrityError(f"Malformed exceptional row {row}")
        for n, triples in self.mersenne.items():
            if any(3 * 2**t.m != n for t in triples):
                raise TableIntegrityError(f"Mersenne triples for n={n} do not match the degree")

    def profiles_for(self, m: int) -> tuple[ChiefFactorProfile, ...]:
        """Profiles of degree ``m``; empty when the degree is not tabulated."""
        return self.profiles.get(m, ())

    @cached_property
    def smooth_degrees(self) -> dict[int, int]:
        """Printed smooth bounds keyed by degree."""
        return {row.degree: row.bound for row in self.smooth}

    @cached_property
    def exceptional_degrees(self) -> dict[int, ExceptionalRow]:
        return {row.degree: row for row in self.exceptional}

    def is_smooth_degree(self, d: int) -> bool:
        return d in self.smooth_degrees

    def is_exceptional_degree(self, d: int) -> bool:
        return d in self.exceptional_degrees


@lru_cache(maxsize=1)
def load_tables() -> EmbeddedTables:
    """The package's embedded tables, loaded and verified once."""
    return EmbeddedTables.load()


def _verify_checksums(data_dir: Path) -> None:
    logger = logging.getLogger(__name__)
    listed = _read_yaml(data_dir / "checksums.yaml").get("files") or {}
    for name in _TABLE_FILES:
        expected = listed.get(name)
        if expected is None:
            raise TableIntegrityError(f"No checksum recorded for {name}")
        digest = hashlib.sha256((data_dir / name).read_bytes()).hexdigest()
        if digest != expected:
            raise TableIntegrityError(f"Checksum mismatch for {name}: {digest} != {expected}")
        logger.debug("Checksum ok: %s", name)


def _read_yaml(path: Path) -> dict[str, Any]:
    if not path.is_file():
        raise TableIntegrityError(f"Table file not found: {path}")
    with open(path) as f:
        data = yaml.safe_load(f)
    if not isinstance(data, dict):
        raise TableIntegrityError(f"Expected a mapping in {path}")
    return data


def _parse_small_degrees(data: Mapping[str, Any]) -> dict[int, int]:
    try:
        return {int(d): int(entry["max"]) for d, entry in data["degrees"].items()}
    except (KeyError, TypeError, ValueError) as e:
        raise TableIntegrityError("Malformed small-degree table") from e


def _parse_small_degree_groups(data: Mapping[str, Any]) -> dict[int, tuple[int, ...]]:
    return {
        int(d): tuple(int(i) for i in entry["groups"])
        for d, entry in data["degrees"].items()
        if entry.get("groups")
    }


def _parse_profiles(data: Mapping[str, Any]) -> dict[int, tuple[ChiefFactorProfile, ...]]:
    profiles: dict[int, tuple[ChiefFactorProfile, ...]] = {}
    for section in ("degrees", "supplementary"):
        for degree, entries in (data.get(section) or {}).items():
            profiles[int(degree)] = tuple(ChiefFactorProfile.from_mapping(int(degree), e) for e in entries)
    return profiles


def _parse_smooth(data: Mapping[str, Any]) -> tuple[SmoothRow, ...]:
    try:
        return tuple(SmoothRow(u=int(r["u"]), v=int(r["v"]), bound=int(r["bound"])) for r in data["rows"])
    except (KeyError, TypeError, ValueError) as e:
        raise TableIntegrityError("Malformed smooth table") from e


def _parse_exceptional(data: Mapping[str, Any]) -> tuple[ExceptionalRow, ...]:
    try:
        return tuple(
            ExceptionalRow(k=int(r["k"]), v=int(r["v"]), f=r.get("f"), bound=int(r["bound"]))
            for r in data["rows"]
        )
    except (KeyError, TypeError, ValueError) as e:
        raise TableIntegrityError("Malformed exceptional table") from e


def _parse_mersenne(data: Mapping[str, Any]) -> dict[int, tuple[MersenneTriple, ...]]:
    try:
        return {
            int(n): tuple(sorted(MersenneTriple(int(e), int(r), int(t)) for e, r, t in triples))
            for n, triples in data["rows"].items()
        }
    except (KeyError, TypeError, ValueError) as e:
        raise TableIntegrityError("Malformed Mersenne triple table") from e

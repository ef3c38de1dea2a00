"""Chief factor profiles of primitive groups."""

from __future__ import annotations

__all__ = ("ChiefFactorProfile",)

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

from ..errors import TableIntegrityError
from ..numth import is_prime


@dataclass(frozen=True)
class ChiefFactorProfile:
    """Chief factors of a primitive group ``R`` of degree ``m``."""

    degree: int
    name: str

    abelian: tuple[tuple[int, int], ...]
    """``(p, a)`` for each abelian chief factor of order ``p**a``, in the
    order they are listed.
    """

    nonabelian: tuple[str, ...] = ()
    """Names of the nonabelian chief factors."""

    def __post_init__(self) -> None:
        for p, a in self.abelian:
            if not is_prime(p) or a < 1:
                raise TableIntegrityError(f"Bad abelian chief factor {p}^{a} in {self.name}")

    @classmethod
    def from_mapping(cls, degree: int, data: Mapping[str, Any]) -> ChiefFactorProfile:
        """Build a profile from a data-file entry with keys ``name``,
        ``abelian`` (list of ``[p, a]``) and ``nonabelian`` (list of names).
        """
        try:
            return cls(
                degree=degree,
                name=str(data["name"]),
                abelian=tuple((int(p), int(a)) for p, a in data.get("abelian") or ()),
                nonabelian=tuple(str(t) for t in data.get("nonabelian") or ()),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise TableIntegrityError(f"Malformed profile entry for degree {degree}: {data!r}") from e

    @property
    def primes(self) -> tuple[int, ...]:
        """Distinct primes of the abelian factors, increasing."""
        return tuple(sorted({p for p, _ in self.abelian}))

    def a_p(self, p: int) -> int:
        """Abelian composition factors of order ``p``."""
        return sum(a for q, a in self.abelian if q == p)

    def a_pprime(self, p: int) -> int:
        """Abelian composition factors of order prime to ``p``."""
        return self.a_ab - self.a_p(p)

    @property
    def a_ab(self) -> int:
        return sum(a for _, a in self.abelian)

    @property
    def c_nonab(self) -> int:
        return len(self.nonabelian)

    @property
    def composition_length(self) -> int:
        """``a(R)``; every nonabelian chief factor listed is simple."""
        return self.a_ab + self.c_nonab

    @property
    def is_soluble(self) -> bool:
        return not self.nonabelian

    def __str__(self) -> str:
        factors = [f"{p}^{a}" if a > 1 else str(p) for p, a in self.abelian] + list(self.nonabelian)
        return f"{self.name} [{', '.join(factors)}]"

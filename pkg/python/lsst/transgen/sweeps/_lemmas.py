"""Standalone numeric checks: prime-power growth, the central binomial
bound, the Wallis product, rank-level widths, the extremal 2-group family,
the exceptional envelope and the printed decimal of ``c1``. Also the
loader for the composition-length data.
"""

from __future__ import annotations

__all__ = (
    "LemmaLimits",
    "check_c1_decimal",
    "check_central_binomial",
    "check_exceptional_envelope",
    "check_extremal_family",
    "check_prime_power_growth",
    "check_rank_width",
    "check_wallis",
    "load_as_data",
    "run_lemma_checks",
)

import csv
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..engine import BAND_LIMIT, DegreeStore, exceptional_envelope, generic_target
from ..errors import BoundInputError, ConfigError, ResourceGuardError
from ..numth import factorize, lpp_table, ws
from ..poset import ChainProduct, chain_product_bound, width_oracle, width_rank
from ..xreal import ConstantId, Pi, c1_decimal_report, certified_le, certified_lt, const, lit, log2, sqrt
from ._report import SweepReport, SweepStatus

AS_DATA_MIN = 10
"""Smallest block size in the composition-length data."""


@dataclass(frozen=True)
class LemmaLimits:
    """Ranges of the standalone checks."""

    prime_power_n: int = 10**6
    central_binomial_k: int = 10**5
    wallis_t: int = 10**6
    rank_width_n: int = 2000
    extremal_k: int = 64


def check_prime_power_growth(n_max: int) -> SweepReport:
    """``lpp(n) >= c' log n`` for ``2 <= n <= n_max``."""
    table = lpp_table(n_max)
    tested = range(2, n_max + 1)
    failures = [n for n in tested if not certified_le(const(ConstantId.CPRIME) * log2(n), lit(table[n]))]
    return SweepReport.from_failures("prime-power-growth", ("c' log n", "lpp(n)"), 2, tested, failures)


def check_central_binomial(k_max: int) -> SweepReport:
    """``binom(K, K // 2) <= b 2**K / sqrt(K)`` for ``1 <= K <= k_max``."""
    tested = range(1, k_max + 1)
    failures = []
    central = 1
    for k in tested:
        # binom(K, K // 2) from binom(K - 1, (K - 1) // 2)
        central = 2 * central if k % 2 == 0 else central * k // (k // 2 + 1)
        if not certified_le(lit(central), const(ConstantId.B) * lit(2**k) / sqrt(k)):
            failures.append(k)
    return SweepReport.from_failures(
        "central-binomial", ("binom(K, K//2)", "b 2^K / sqrt(K)"), 1, tested, failures
    )


def check_wallis(t_max: int) -> SweepReport:
    """``P(t) = 2t binom(2t, t)**2 / 16**t`` increases strictly and stays
    below ``2 / pi`` for ``1 <= t <= t_max``.
    """
    if t_max < 1:
        raise BoundInputError(f"t_max must be positive, got {t_max}")
    # P(t + 1) / P(t) = (2t + 1)**2 / (4t (t + 1))
    failures = [t + 1 for t in range(1, t_max) if (2 * t + 1) ** 2 <= 4 * t * (t + 1)]
    last = Fraction(2 * t_max * math.comb(2 * t_max, t_max) ** 2, 16**t_max)
    # Increasing, so the last value bounds every earlier one.
    if not certified_lt(lit(last), lit(2) / Pi()):
        failures.append(t_max)
    return SweepReport.from_failures(
        "wallis",
        ("2t binom(2t,t)^2 / 16^t", "2/pi"),
        1,
        range(1, t_max + 1),
        failures,
        details={"last": f"{float(last):.8f}"},
    )


def _prime_chains(n: int) -> ChainProduct:
    return ChainProduct(tuple(p for p, e in factorize(n) for _ in range(e)))


def check_rank_width(n_max: int) -> SweepReport:
    """Rank-level widths for ``2 <= n <= n_max``.

    For the product of chains of prime sizes with ``n`` elements and for
    the divisor lattice of ``n``, the middle rank level is a maximum
    antichain (checked against the matching oracle within its resource
    guard); for the former, that width is at most ``ws(n)`` and at most
    ``b n / sqrt(log n)``.
    """
    logger = logging.getLogger(__name__)
    tested = range(2, n_max + 1)
    failures = []
    oracle_checks = 0
    for n in tested:
        chains = _prime_chains(n)
        width = width_rank(chains)
        holds = Fraction(width) <= chain_product_bound(chains) == ws(n)
        holds = holds and certified_le(lit(width), const(ConstantId.B) * n / sqrt(log2(n)))
        for poset in (chains, ChainProduct.from_divisors(n)):
            try:
                holds = holds and width_oracle(poset) == width_rank(poset)
                oracle_checks += 1
            except ResourceGuardError:
                logger.debug("Oracle skipped for %s", poset.sizes)
        if not holds:
            failures.append(n)
    return SweepReport.from_failures(
        "rank-width",
        ("|R_(K//2)|", "ws(n) <= b n / sqrt(log n)"),
        2,
        tested,
        failures,
        details={"oracle_checks": oracle_checks},
    )


def check_extremal_family(k_max: int) -> SweepReport:
    """The 2-groups of degree ``4**k`` with ``binom(2k-1, k-1) + 2k - 1``
    generators stay within ``floor(c 4**k / sqrt(2k))``, and
    ``sqrt(2k) binom(2k, k) / 4**k`` increases strictly towards ``b``.

    Raises
    ------
    BoundInputError
        Raised if ``k_max < 2``.
    """
    if k_max < 2:
        raise BoundInputError(f"k_max must be at least 2, got {k_max}")
    tested = range(2, k_max + 1)
    failures = []
    generators = {}
    for k in tested:
        d_g = math.comb(2 * k - 1, k - 1) + 2 * k - 1
        generators[k] = d_g
        ratio = sqrt(2 * k) * lit(Fraction(math.comb(2 * k, k), 4**k))
        following = sqrt(2 * k + 2) * lit(Fraction(math.comb(2 * k + 2, k + 1), 4 ** (k + 1)))
        holds = d_g <= generic_target(4**k)
        holds = holds and certified_lt(ratio, following) and certified_lt(ratio, const(ConstantId.B))
        if not holds:
            failures.append(k)
    return SweepReport.from_failures(
        "extremal-family",
        ("binom(2k-1,k-1) + 2k - 1", "floor(c 4^k / sqrt(2k))"),
        2,
        tested,
        failures,
        details={"generators": {str(k): v for k, v in list(generators.items())[:8]}},
    )


def check_exceptional_envelope(store: DegreeStore | None = None) -> SweepReport:
    """Every regenerated and printed exceptional bound is at most
    ``floor(c1 d / sqrt(log d))``.
    """
    rows = exceptional_envelope(store)
    return SweepReport.from_failures(
        "exceptional-envelope",
        ("bound", "floor(c1 d / sqrt(log d))"),
        None,
        [row.d for row in rows],
        [row.d for row in rows if not row.holds],
        details={"rows": len(rows)},
    )


def check_c1_decimal() -> SweepReport:
    """Which printed six-digit decimal of ``c1`` its definition supports."""
    report = c1_decimal_report()
    matched = [
        label
        for label, matches in (("table", report.table_matches), ("prose", report.prose_matches))
        if matches
    ]
    return SweepReport(
        case_id="c1-decimal",
        inequality=(report.truncated, report.rounded),
        threshold=None,
        verified_range=None,
        status=SweepStatus.VERIFIED if matched else SweepStatus.FAILED,
        note=f"definition matches the {' and '.join(matched) or 'neither'} decimal",
        details={
            "truncated": report.truncated,
            "rounded": report.rounded,
            "table_decimal": report.table_decimal,
            "prose_decimal": report.prose_decimal,
            "table_matches": report.table_matches,
            "prose_matches": report.prose_matches,
        },
    )


def run_lemma_checks(
    limits: LemmaLimits | None = None, store: DegreeStore | None = None
) -> list[SweepReport]:
    """Every standalone check, in case-id order."""
    limits = LemmaLimits() if limits is None else limits
    reports = [
        check_prime_power_growth(limits.prime_power_n),
        check_central_binomial(limits.central_binomial_k),
        check_wallis(limits.wallis_t),
        check_rank_width(limits.rank_width_n),
        check_extremal_family(limits.extremal_k),
        check_exceptional_envelope(store),
        check_c1_decimal(),
    ]
    return sorted(reports, key=lambda report: report.case_id)


def load_as_data(path: Path | str) -> dict[int, int]:
    """Read the composition-length maxima ``as(m)``.

    The file is CSV with the header ``m,as`` and one row per block size
    ``10 <= m <= 480``.

    Raises
    ------
    ConfigError
        Raised for a missing header, a malformed row, a block size outside
        the range, a duplicate or a nonpositive value.
    """
    logger = logging.getLogger(__name__)
    path = Path(path)
    data: dict[int, int] = {}
    with path.open(newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or list(reader.fieldnames) != ["m", "as"]:
            raise ConfigError(f"{path} must start with the header 'm,as'")
        for line, row in enumerate(reader, start=2):
            try:
                m = int(row["m"])
                value = int(row["as"])
            except (TypeError, ValueError):
                raise ConfigError(f"{path}:{line}: malformed row {row}") from None
            if not AS_DATA_MIN <= m <= BAND_LIMIT:
                raise ConfigError(f"{path}:{line}: block size {m} is outside {AS_DATA_MIN}..{BAND_LIMIT}")
            if m in data:
                raise ConfigError(f"{path}:{line}: duplicate block size {m}")
            if value < 1:
                raise ConfigError(f"{path}:{line}: as({m}) must be positive, got {value}")
            data[m] = value
    logger.debug("Loaded as(m) for %d block sizes from %s", len(data), path)
    return data

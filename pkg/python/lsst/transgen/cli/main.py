"""Implements the ``transgen`` CLI for generator bounds of transitive
permutation groups.
"""

__all__ = ("main",)

import dataclasses
import functools
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

import click

from ..bounds import e_bound, e_sol_bound
from ..config import OutputFormat, RunConfig
from ..engine import DegreeStore, Verdict, certify, regenerate_exceptional_table, regenerate_smooth_table
from ..errors import ConfigError, TransgenError
from ..mersenne import enumerate_triples, triple_table
from ..numth import ws
from ..poset import ChainProduct, chain_product_bound, width_oracle, width_rank
from ..sweeps import (
    LemmaLimits,
    SweepStatus,
    check_extremal_family,
    load_as_data,
    run_lemma_checks,
    sweep_large_blocks,
    sweep_small_blocks,
    sweep_two_block_finite,
)
from ..tables import load_tables
from ..version import __version__
from ..xreal import ConstantId, c1_decimal_report, certified_floor, const, lit, log2, precision_cap, sqrt
from ._report import (
    Report,
    certificate_report,
    emit_report,
    exceptional_table_report,
    mersenne_table_report,
    smooth_table_report,
    sweep_report,
    values_report,
)

# Add -h as a help shortcut option
CONTEXT_SETTINGS = {"help_option_names": ["-h", "--help"]}

EXIT_DISCREPANCY = 2

_F = TypeVar("_F", bound=Callable[..., Any])


def _reports_errors(func: _F) -> _F:
    """Turn package errors into a one-line message and exit status 1."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except TransgenError as e:
            raise click.ClickException(str(e)) from e

    return wrapper  # type: ignore[return-value]


def _emit(ctx: click.Context, report: Report, ok: bool = True) -> None:
    config: RunConfig = ctx.obj["config"]
    click.echo(emit_report(report, config.output_format), nl=False)
    if not ok:
        ctx.exit(EXIT_DISCREPANCY)


@click.group(context_settings=CONTEXT_SETTINGS)
@click.option(
    "-v",
    "--verbose",
    is_flag=True,
    help="Enable verbose output (debug-level logging).",
)
@click.option(
    "--precision-cap",
    "cap",
    type=click.IntRange(min=64),
    default=None,
    help="Largest working precision, in bits, for certified floors and comparisons. "
    "Defaults to $TRANSGEN_PRECISION_CAP or 4096.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=None,
    help="Report format.",
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="YAML file of run settings. Command-line options take priority.",
)
@click.version_option(version=__version__)
@click.pass_context
@_reports_errors
def main(
    ctx: click.Context,
    verbose: bool,
    cap: int | None,
    output_format: str | None,
    config_path: Path | None,
) -> None:
    """transgen computes and certifies upper bounds on the number of
    generators of transitive permutation groups.

    Every floor and comparison is either proven with interval arithmetic or
    reported as undecided.

    Exit status is 0 when everything checked holds, 2 when a check fails or
    a regenerated value differs from the printed one, and 1 on errors.
    """
    if verbose:
        log_level = logging.DEBUG
    else:
        log_level = logging.INFO
    logger = logging.getLogger("lsst.transgen")
    logger.addHandler(logging.StreamHandler())
    logger.setLevel(log_level)

    overrides = {"precision_cap": cap, "output_format": output_format}
    try:
        if config_path is not None:
            config = RunConfig.from_yaml(config_path, **overrides)
        else:
            config = RunConfig.from_env(**overrides)
    except ConfigError as e:
        raise click.BadParameter(str(e)) from e
    ctx.obj = {"config": config, "store": None}
    ctx.with_resource(precision_cap(config.precision_cap))


def _store(ctx: click.Context) -> DegreeStore:
    # One store per invocation; tables regenerate at most once.
    if ctx.obj["store"] is None:
        ctx.obj["store"] = DegreeStore()
    return ctx.obj["store"]


@main.command()
@click.argument("topic", default=None, required=False, nargs=1)
@click.pass_context
def help(ctx: click.Context, topic: str | None, **kw: object) -> None:
    """Show help for any command."""
    if topic is None:
        if ctx.parent is not None:
            click.echo(ctx.parent.get_help())
        else:
            click.echo(main.get_help(ctx))
    else:
        click.echo(main.commands[topic].get_help(ctx))


@main.command(name="ws")
@click.argument("n", type=click.IntRange(min=2))
@click.pass_context
@_reports_errors
def ws_command(ctx: click.Context, n: int) -> None:
    """Width bound ws(N) and the closed form floor(b N / sqrt(log N))."""
    value = ws(n)
    closed = certified_floor(const(ConstantId.B) * n / sqrt(log2(n)))
    _emit(ctx, values_report("ws", {"n": n, "ws": str(value), "floor_ws": int(value), "closed_form": closed}))


@main.command()
@click.argument("n", type=click.IntRange(min=2))
@click.argument("p", type=click.IntRange(min=2))
@click.option("--sol", is_flag=True, help="Compute E_sol(N, P) instead of E(N, P).")
@click.pass_context
@_reports_errors
def ebound(ctx: click.Context, n: int, p: int, sol: bool) -> None:
    """Induced-module bound E(N, P) or E_sol(N, P)."""
    bound = e_sol_bound(n, p) if sol else e_bound(n, p)
    name = "E_sol" if sol else "E"
    values = {
        "n": n,
        "p": p,
        "bound": name,
        "value": str(bound),
        "trace": [str(step) for step in bound.trace],
    }
    _emit(ctx, values_report("ebound", values))


def _parse_chains(value: str | None) -> tuple[int, ...] | None:
    if value is None:
        return None
    try:
        return tuple(int(item) for item in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from None


@main.command()
@click.option("--chains", help="Comma-separated chain sizes, for example 3,3,2.")
@click.option("--divisors", type=click.IntRange(min=1), help="Use the divisor lattice of this integer.")
@click.option("--oracle", is_flag=True, help="Cross-check with the maximum-matching oracle.")
@click.pass_context
@_reports_errors
def width(ctx: click.Context, chains: str | None, divisors: int | None, oracle: bool) -> None:
    """Width of a product of chains from its middle rank level."""
    sizes = _parse_chains(chains)
    if (sizes is None) == (divisors is None):
        raise click.UsageError("Give exactly one of --chains and --divisors.")
    poset = ChainProduct(sizes) if sizes is not None else ChainProduct.from_divisors(divisors or 1)
    values: dict[str, Any] = {
        "chains": list(poset.sizes),
        "elements": poset.cardinality,
        "rank": poset.rank,
        "width": width_rank(poset),
    }
    if poset.cardinality >= 2:
        values["bound"] = str(chain_product_bound(poset))
    ok = True
    if oracle:
        values["oracle"] = width_oracle(poset)
        ok = values["oracle"] == values["width"]
    _emit(ctx, values_report("width", values), ok)


@main.command(name="mersenne-triples")
@click.argument("m", type=click.IntRange(min=1))
@click.pass_context
@_reports_errors
def mersenne_triples(ctx: click.Context, m: int) -> None:
    """Triples (e, r, t) with e r + t = M for degree 3 * 2^M."""
    rows = [{"e": t.e, "r": t.r, "t": t.t, "p": t.p} for t in enumerate_triples(m)]
    _emit(ctx, Report("mersenne-triples", ("e", "r", "t", "p"), rows, {"m": m, "n": 3 * 2**m}))


def _as_data(ctx: click.Context, path: Path | None) -> dict[int, int] | None:
    path = path if path is not None else ctx.obj["config"].as_data
    return None if path is None else load_as_data(path)


@main.command(name="certify")
@click.argument("d", type=click.IntRange(min=2))
@click.option(
    "--as-data",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="CSV file of composition-length maxima as(m) with header m,as.",
)
@click.pass_context
@_reports_errors
def certify_command(ctx: click.Context, d: int, as_data: Path | None) -> None:
    """Certify the generator bound at degree D."""
    certificate = certify(d, _store(ctx), _as_data(ctx, as_data))
    _emit(ctx, certificate_report(certificate), certificate.verdict is Verdict.PASS)


@main.command()
@click.argument("name", type=click.Choice(["smooth", "exceptional", "mersenne"]))
@click.pass_context
@_reports_errors
def table(ctx: click.Context, name: str) -> None:
    """Regenerate a table and compare it with the printed values."""
    match name:
        case "smooth":
            records = regenerate_smooth_table(_store(ctx))
            _emit(ctx, smooth_table_report(records), not any(r.discrepancy for r in records))
        case "exceptional":
            records = regenerate_exceptional_table(_store(ctx))
            _emit(ctx, exceptional_table_report(records), not any(r.discrepancy for r in records))
        case _:
            printed = load_tables().mersenne
            exponents = [(n // 3).bit_length() - 1 for n in printed]
            regenerated = triple_table(range(min(exponents), max(exponents) + 1))
            report = mersenne_table_report(regenerated, printed)
            ok = all(row["matches"] for row in report.rows) and set(regenerated) == set(printed)
            _emit(ctx, report, ok)


@main.group()
def sweep() -> None:
    """Threshold sweeps and standalone checks."""


@sweep.command(name="small-blocks")
@click.option("--m", "m", type=click.IntRange(2, 9), default=None, help="Only this block size.")
@click.option(
    "--span", type=click.IntRange(min=0), default=None, help="Integers scanned above each threshold."
)
@click.option("--below", type=click.IntRange(min=0), default=0, help="Look this far below each threshold.")
@click.option("-j", "--jobs", type=click.IntRange(min=1), default=None, help="Worker processes.")
@click.pass_context
@_reports_errors
def small_blocks(ctx: click.Context, m: int | None, span: int | None, below: int, jobs: int | None) -> None:
    """Closed-form inequalities for block sizes 2 to 9."""
    config = ctx.obj["config"].with_overrides(sweep_span=span, jobs=jobs)
    reports = sweep_small_blocks(m, config, below=below)
    _emit(ctx, sweep_report(reports), all(r.verified for r in reports))


@sweep.command(name="two-block")
@click.option("--exhaustive", is_flag=True, help="Test every k instead of the sampled grid.")
@click.pass_context
@_reports_errors
def two_block(ctx: click.Context, exhaustive: bool) -> None:
    """Blocks of size 2 with n below 10^66 and a small odd part."""
    config = ctx.obj["config"].with_overrides(exhaustive=exhaustive or None)
    report = sweep_two_block_finite(store=_store(ctx), config=config)
    _emit(ctx, sweep_report([report]), report.verified)


@sweep.command()
@click.option("--prime-power-n", type=click.IntRange(min=2), default=None, help="Largest n for lpp(n).")
@click.option(
    "--central-binomial-k", type=click.IntRange(min=1), default=None, help="Largest K for binom(K, K//2)."
)
@click.option("--wallis-t", type=click.IntRange(min=1), default=None, help="Largest t of the Wallis product.")
@click.option(
    "--rank-width-n", type=click.IntRange(min=2), default=None, help="Largest n for rank-level widths."
)
@click.option("--extremal-k", type=click.IntRange(min=2), default=None, help="Largest k of the 2-groups.")
@click.pass_context
@_reports_errors
def lemmas(ctx: click.Context, **ranges: int | None) -> None:
    """Standalone numeric checks."""
    limits = dataclasses.replace(
        LemmaLimits(), **{name: value for name, value in ranges.items() if value is not None}
    )
    reports = run_lemma_checks(limits, store=_store(ctx))
    _emit(ctx, sweep_report(reports), all(r.verified for r in reports))


@sweep.command(name="large-blocks")
@click.option(
    "--as-data",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="CSV file of composition-length maxima as(m) with header m,as.",
)
@click.pass_context
@_reports_errors
def large_blocks(ctx: click.Context, as_data: Path | None) -> None:
    """Block sizes of at least 10; checks needing as(m) are skipped without
    data.
    """
    reports = sweep_large_blocks(_as_data(ctx, as_data))
    checked = [r for r in reports if r.status is not SweepStatus.SKIPPED]
    _emit(ctx, sweep_report(reports), all(r.verified for r in checked))


@main.command()
@click.option("--kmax", type=click.IntRange(min=2), default=12, show_default=True, help="Largest k.")
@click.pass_context
@_reports_errors
def example62(ctx: click.Context, kmax: int) -> None:
    """The 2-groups of degree 4^k with binom(2k-1, k-1) + 2k - 1 generators."""
    report = check_extremal_family(kmax)
    _emit(ctx, sweep_report([report]), report.verified)


def _decimal(cid: ConstantId, digits: int = 12) -> str:
    scale = 10**digits
    units = certified_floor(const(cid) * lit(scale))
    whole, frac = divmod(units, scale)
    return f"{whole}.{frac:0{digits}d}"


@main.command()
@click.pass_context
@_reports_errors
def constants(ctx: click.Context) -> None:
    """Named constants, truncated to 12 decimals."""
    rows = [{"name": cid.value, "value": _decimal(cid)} for cid in ConstantId]
    c1 = c1_decimal_report()
    meta = {"c1_table_decimal_matches": c1.table_matches, "c1_prose_decimal_matches": c1.prose_matches}
    _emit(ctx, Report("constants", ("name", "value"), rows, meta))


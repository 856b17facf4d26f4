"""Command-line interface.

Exit codes: 0 success, 2 usage/input error, 3 no divisor realization,
4 verification failure.  Every command takes --format json|<text form>;
JSON output is wrapped in {"schema_version", "command", "payload"} and is
byte-stable across runs and worker counts.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import resolution
from .dpd import FractionalDivisor, deg_total
from .enumerator import (
    ClassificationEntry,
    FamilyEntry,
    classify,
    default_workers,
    divisor_search_with_verdicts,
    special_alpha_nonpositive,
)
from .graded import (
    WeightedType,
    a_invariant,
    deg_D,
    genus,
    geometric_genus,
    hilbert_coeffs,
    normality_filter,
)
from .verify import format_report, reconcile

SCHEMA_VERSION = "1"
ALPHA_GUARD = 12


def _emit_json(command: str, payload) -> None:
    record = {"schema_version": SCHEMA_VERSION, "command": command, "payload": payload}
    click.echo(json.dumps(record, separators=(", ", ": ")))


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_type(a: int, b: int, c: int, h: int) -> WeightedType:
    try:
        return WeightedType.of(a, b, c, h)
    except ValueError as exc:
        raise click.UsageError(str(exc))


@click.group()
def main() -> None:
    """Classify 2-dimensional normal graded hypersurface singularities
    k[x,y,z]/(f) by a-invariant."""


@main.command()
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.argument("c", type=int)
@click.argument("h", type=int)
@click.option("--series-n", type=int, default=12, show_default=True,
              help="How many Hilbert coefficients to print.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
def invariants(a: int, b: int, c: int, h: int, series_n: int, fmt: str) -> None:
    """Invariants of the type (A,B,C;H): a-invariant, deg D, genus,
    geometric genus, Hilbert coefficients, normality filter verdict."""
    wt = _parse_type(a, b, c, h)
    alpha = a_invariant(wt)
    coeffs = hilbert_coeffs(wt, max(series_n, 0))
    g = genus(wt) if alpha >= 0 else None
    pg = geometric_genus(wt) if alpha >= 0 else None
    violations = normality_filter(wt, alpha)
    if fmt == "json":
        _emit_json("invariants", {
            "type": [wt.a, wt.b, wt.c, wt.h],
            "alpha": alpha,
            "degD": _frac_str(deg_D(wt)),
            "genus": g,
            "pg": pg,
            "hilbert": coeffs,
            "normality": {"ok": not violations, "violations": list(violations)},
        })
        return
    click.echo(f"type       {wt}")
    click.echo(f"alpha      {alpha}")
    click.echo(f"deg D      {_frac_str(deg_D(wt))}")
    click.echo(f"genus      {g if g is not None else 'n/a (negative a-invariant)'}")
    click.echo(f"p_g        {pg if pg is not None else 'n/a (negative a-invariant)'}")
    click.echo(f"hilbert    {coeffs}")
    verdict = "pass" if not violations else f"fail {', '.join(violations)}"
    click.echo(f"normality  {verdict}")


def _divisor_text(D: FractionalDivisor) -> str:
    parts = []
    if D.deg_e or not D.branches:
        parts.append(f"E({D.deg_e})")
    parts.extend(f"{p}/{q}" for p, q in D.branches)
    return "+".join(parts)


def _entry_lines(entry: ClassificationEntry) -> list[str]:
    head = f"{str(entry.wt):<16} g={entry.genus:<3} pg={entry.p_g:<4} br={entry.branch_count}"
    blank = " " * len(head)
    out = []
    for i, (D, verdict) in enumerate(zip(entry.divisors, entry.verdicts)):
        prefix = head if i == 0 else blank
        out.append(f"{prefix}  D: {_divisor_text(D)} [{verdict}]")
    return out


@main.command("enumerate")
@click.option("--alpha", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.option("--workers", type=int, default=None,
              help="Parallel divisor searches (default: WHSL_WORKERS or CPU count).")
@click.option("--max-n", type=int, default=None,
              help="Dimension-comparison horizon per type (default 3h).")
@click.option("--force", is_flag=True, help="Allow alpha beyond the runtime guard.")
def enumerate_cmd(alpha: int, fmt: str, workers: int | None, max_n: int | None,
                  force: bool) -> None:
    """Complete classification for a given a-invariant."""
    if alpha <= 0:
        _families_output(alpha, fmt, command="enumerate")
        return
    if alpha > ALPHA_GUARD and not force:
        raise click.UsageError(
            f"alpha={alpha} exceeds the runtime guard ({ALPHA_GUARD}); pass --force"
        )
    if workers is None:
        workers = default_workers()
    entries = classify(alpha, n_max=max_n, workers=workers)
    if fmt == "json":
        _emit_json("enumerate", {
            "alpha": alpha,
            "count": len(entries),
            "entries": [entry.to_json_dict() for entry in entries],
        })
        return
    for entry in entries:
        for line in _entry_lines(entry):
            click.echo(line)
    click.echo(f"total: {len(entries)}")


def _families_output(alpha: int, fmt: str, command: str = "families") -> None:
    items = special_alpha_nonpositive(alpha)
    if fmt == "json":
        payload = {"alpha": alpha, "entries": [], "families": []}
        for item in items:
            if isinstance(item, FamilyEntry):
                payload["entries"].append(item.to_json_dict())
            else:
                payload["families"].append(item.to_json_dict())
        _emit_json(command, payload)
        return
    for item in items:
        if isinstance(item, FamilyEntry):
            click.echo(
                f"{item.label:<12} {str(item.wt):<14} alpha={item.alpha}  "
                f"D: {_divisor_text(item.divisor)}"
            )
        else:
            caveat = f"  ({item.caveat})" if item.caveat else ""
            click.echo(f"{item.label:<12} {item.pattern}  alpha={item.alpha_range}{caveat}")


@main.command()
@click.option("--alpha", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
def families(alpha: int, fmt: str) -> None:
    """Closed-form families for a-invariant <= 0."""
    if alpha > 0:
        raise click.UsageError(f"families covers alpha <= 0, got {alpha}")
    _families_output(alpha, fmt)


@main.command()
@click.option("--type", "type_", nargs=4, type=int, default=None,
              help="Weight type a b c h; resolves every divisor realizing it.")
@click.option("--divisor", "divisor_json", type=str, default=None,
              help='Divisor JSON {"genus": g, "degE": e, "branches": [[p,q],...]}.')
@click.option("--check", is_flag=True,
              help="Also certify negative definiteness; nonzero exit on failure.")
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="dot")
def resolve(type_, divisor_json: str | None, check: bool, fmt: str) -> None:
    """Star-shaped resolution graph(s), as DOT text or JSON."""
    if (type_ is None or len(type_) == 0) == (divisor_json is None):
        raise click.UsageError("pass exactly one of --type or --divisor")
    divisors = []
    if divisor_json is not None:
        try:
            divisors = [FractionalDivisor.from_json_dict(json.loads(divisor_json))]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise click.UsageError(f"bad divisor JSON: {exc}")
    else:
        wt = _parse_type(*type_)
        if a_invariant(wt) < 1:
            raise click.UsageError(
                f"{wt} has a(R) = {a_invariant(wt)}; divisor search needs a(R) >= 1"
            )
        divisors = [D for D, _ in divisor_search_with_verdicts(wt)]
        if not divisors:
            click.echo(f"no divisor realizes {wt}", err=True)
            sys.exit(3)
    graphs = [resolution.build_graph(D) for D in divisors]
    if check:
        for G in graphs:
            if not resolution.is_negative_definite(resolution.intersection_matrix(G)):
                click.echo("intersection matrix is not negative definite", err=True)
                sys.exit(4)
    if fmt == "json":
        _emit_json("resolve", {"graphs": [G.to_json_dict() for G in graphs]})
        return
    click.echo("\n".join(resolution.to_dot(G) for G in graphs), nl=False)


@main.command("verify-paper")
@click.option("--alpha", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.option("--workers", type=int, default=None)
def verify_paper(alpha: int, fmt: str, workers: int | None) -> None:
    """Reconcile the enumeration against the published case list and
    count table; exits 4 if any published case is not reproduced."""
    if not (1 <= alpha <= 6):
        raise click.UsageError(f"published data covers alpha 1..6, got {alpha}")
    if workers is None:
        workers = default_workers()
    report = reconcile(alpha, entries=classify(alpha, workers=workers))
    if fmt == "json":
        _emit_json("verify-paper", report.to_json_dict())
    else:
        click.echo(format_report(report))
    if not report.ok:
        sys.exit(4)


if __name__ == "__main__":
    main()

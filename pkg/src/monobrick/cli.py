"""Command line front end.

Subcommands cover enumeration streams, count tables with closed-form and
recurrence cross-checks, cofinal closure and maximal-element queries on
diagrams, conversion between arc diagrams and non-crossing linked
partitions, the bundled module-category audits, and ASCII rendering.

Exit codes are a stable contract: 0 success, 1 a verification suite
reported failures, 2 command-line misuse, 3 enumeration budget exceeded,
4 mathematically invalid input data.
"""

import json
import os
import sys
from contextlib import contextmanager

import click

from monobrick import __version__
from monobrick.arcs import Algebra
from monobrick.diagrams import (
    BudgetExceeded,
    Diagram,
    DiagramKind,
    count_closed_form,
    crossing_violation,
    cyclic_count_from_recurrence,
    diagram_from_json,
    diagram_to_json,
    enumerate_diagrams,
    linear_count_from_recurrence,
)
from monobrick.ncl import (
    from_diagram,
    partition_from_json,
    partition_to_json,
    to_diagram,
)
from monobrick.poset import cofinal_closure, hasse_covers, mmax
from monobrick.render import render_diagram
from monobrick.verify import EXPECTED_COUNTS, run_checks


class DataError(click.ClickException):
    """Input parsed as JSON but is mathematically invalid."""

    exit_code = 4


class BudgetError(click.ClickException):
    """Requested rank exceeds the enumeration budget."""

    exit_code = 3


_KINDS = {
    "monobrick": DiagramKind.MONOBRICK,
    "semibrick": DiagramKind.SEMIBRICK,
    "cofinally-closed": DiagramKind.COFINALLY_CLOSED,
}

_KIND_CHOICE = click.Choice(sorted(_KINDS))
_FAMILY_CHOICE = click.Choice(["A", "B"])
_PRESET_CHOICE = click.Choice(sorted(EXPECTED_COUNTS))


@contextmanager
def _sink(out_path):
    if out_path is None:
        yield sys.stdout
        return
    with open(out_path, "w", encoding="utf-8") as fh:
        yield fh


def _dumps(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _make_algebra(family: str, n: int) -> Algebra:
    try:
        return Algebra(family, n)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _budget_override(family: str, flag: int | None) -> int | None:
    if flag is not None:
        if flag < 1:
            raise click.UsageError("--budget must be a positive integer")
        return flag
    name = f"MONOBRICK_BUDGET_{family}"
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise click.UsageError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise click.UsageError(f"{name} must be positive, got {value}")
    return value


def _read_json(in_path):
    text = sys.stdin.read() if in_path is None else open(in_path, encoding="utf-8").read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"input is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise DataError("input must be a JSON object")
    return payload


def _read_diagram(in_path) -> Diagram:
    try:
        return diagram_from_json(_read_json(in_path))
    except ValueError as exc:
        raise DataError(str(exc)) from exc


def _require_monobrick(diagram: Diagram) -> None:
    bad = crossing_violation(diagram, DiagramKind.MONOBRICK)
    if bad is not None:
        a, b, crossing = bad
        raise DataError(
            f"not a monobrick diagram: arcs ({a.start},{a.end}) and "
            f"({b.start},{b.end}) form a {crossing.value} pair"
        )


_IN_OPTION = click.option(
    "--in",
    "in_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Read the JSON input from a file instead of stdin.",
)
_OUT_OPTION = click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write output to a file instead of stdout.",
)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="monobrick")
def main() -> None:
    """Arc diagram enumeration and module-category audits."""


@main.command("enumerate")
@click.option("--algebra", "family", type=_FAMILY_CHOICE, required=True,
              help="Arc family: A (linear) or B (cyclic).")
@click.option("--n", "rank", type=int, required=True, help="Rank of the family.")
@click.option("--kind", type=_KIND_CHOICE, default="monobrick", show_default=True)
@click.option("--budget", type=int, default=None,
              help="Rank cap override (default 10 for A, 7 for B; also via "
                   "MONOBRICK_BUDGET_A / MONOBRICK_BUDGET_B).")
@click.option("--workers", type=int, default=1, show_default=True,
              help="Accepted for interface stability; enumeration is "
                   "sequential and output does not depend on this value.")
@_OUT_OPTION
def enumerate_command(family, rank, kind, budget, workers, out_path):
    """Stream every diagram of one kind as JSON, one object per line.

    The final line is {"count":N}.
    """
    if workers < 1:
        raise click.UsageError("--workers must be a positive integer")
    algebra = _make_algebra(family, rank)
    limit = _budget_override(family, budget)
    try:
        with _sink(out_path) as fh:
            total = 0
            for diagram in enumerate_diagrams(algebra, _KINDS[kind], limit):
                fh.write(_dumps(diagram_to_json(diagram)) + "\n")
                total += 1
            fh.write(_dumps({"count": total}) + "\n")
    except BudgetExceeded as exc:
        raise BudgetError(str(exc)) from exc


def _format_flag(value) -> str:
    if value is None:
        return "-"
    return "true" if value else "false"


@main.command("count")
@click.option("--algebra", "family", type=_FAMILY_CHOICE, required=True)
@click.option("--n-max", type=int, required=True, help="Largest rank to count.")
@click.option("--n-min", type=int, default=1, show_default=True)
@click.option("--kind", type=_KIND_CHOICE, default="monobrick", show_default=True)
@click.option("--budget", type=int, default=None,
              help="Rank cap override, as for enumerate.")
@click.option("--format", "fmt", type=click.Choice(["markdown", "csv", "json"]),
              default="markdown", show_default=True)
@_OUT_OPTION
def count_command(family, n_max, n_min, kind, budget, fmt, out_path):
    """Count diagrams over a rank range and cross-check both closed routes.

    The recurrence-ok column rebuilds the monobrick count from a
    recurrence instead of the closed form; for other kinds it prints "-".
    """
    if n_max < n_min:
        raise click.UsageError("--n-max must be at least --n-min")
    diagram_kind = _KINDS[kind]
    limit = _budget_override(family, budget)
    rows = []
    try:
        for rank in range(n_min, n_max + 1):
            algebra = _make_algebra(family, rank)
            enumerated = sum(
                1 for _ in enumerate_diagrams(algebra, diagram_kind, limit)
            )
            closed = count_closed_form(algebra, diagram_kind)
            if diagram_kind is DiagramKind.MONOBRICK:
                second = (
                    linear_count_from_recurrence(rank)
                    if family == "A"
                    else cyclic_count_from_recurrence(rank)
                )
                recurrence_ok = second == enumerated
            else:
                recurrence_ok = None
            rows.append((rank, enumerated, closed, recurrence_ok))
    except BudgetExceeded as exc:
        raise BudgetError(str(exc)) from exc

    with _sink(out_path) as fh:
        if fmt == "json":
            for rank, enumerated, closed, recurrence_ok in rows:
                fh.write(_dumps({
                    "n": rank,
                    "enumerated": enumerated,
                    "closed_form": closed,
                    "recurrence_ok": recurrence_ok,
                }) + "\n")
        elif fmt == "csv":
            fh.write("n,enumerated,closed-form,recurrence-ok\n")
            for rank, enumerated, closed, recurrence_ok in rows:
                fh.write(
                    f"{rank},{enumerated},{closed},{_format_flag(recurrence_ok)}\n"
                )
        else:
            fh.write("| n | enumerated | closed-form | recurrence-ok |\n")
            fh.write("| --- | --- | --- | --- |\n")
            for rank, enumerated, closed, recurrence_ok in rows:
                fh.write(
                    f"| {rank} | {enumerated} | {closed} "
                    f"| {_format_flag(recurrence_ok)} |\n"
                )


def _hasse_payload(diagram: Diagram) -> list:
    pairs = sorted(
        hasse_covers(diagram),
        key=lambda pair: (tuple(pair[0]), tuple(pair[1])),
    )
    return [[[a.start, a.end], [b.start, b.end]] for a, b in pairs]


def _poset_query(in_path, with_hasse, out_path, operation) -> None:
    diagram = _read_diagram(in_path)
    _require_monobrick(diagram)
    result = operation(diagram)
    payload = diagram_to_json(result)
    if with_hasse:
        payload["hasse"] = _hasse_payload(result)
    with _sink(out_path) as fh:
        fh.write(_dumps(payload) + "\n")


@main.command("closure")
@_IN_OPTION
@click.option("--hasse", is_flag=True,
              help="Also emit the covering pairs of the result, as "
                   "[lower, upper] arc pairs.")
@_OUT_OPTION
def closure_command(in_path, hasse, out_path):
    """Cofinal closure of a monobrick diagram, same JSON schema."""
    _poset_query(in_path, hasse, out_path, cofinal_closure)


@main.command("mmax")
@_IN_OPTION
@click.option("--hasse", is_flag=True,
              help="Also emit the covering pairs of the result (an "
                   "antichain, so always empty).")
@_OUT_OPTION
def mmax_command(in_path, hasse, out_path):
    """Maximal arcs of a monobrick diagram in the submodule order."""
    _poset_query(in_path, hasse, out_path, mmax)


@main.command("ncl")
@_IN_OPTION
@_OUT_OPTION
def ncl_command(in_path, out_path):
    """Convert a linked partition to its arc diagram, or back.

    The direction is detected from the input: an object with "blocks" is
    a partition, one with "arcs" is a diagram.
    """
    payload = _read_json(in_path)
    has_blocks = "blocks" in payload
    has_arcs = "arcs" in payload
    if has_blocks == has_arcs:
        raise DataError('input must carry exactly one of "blocks" or "arcs"')
    try:
        if has_blocks:
            result = diagram_to_json(to_diagram(partition_from_json(payload)))
        else:
            result = partition_to_json(from_diagram(diagram_from_json(payload)))
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    with _sink(out_path) as fh:
        fh.write(_dumps(result) + "\n")


@main.group("oracle")
def oracle_group() -> None:
    """Audits of the exhaustive module-category model."""


@oracle_group.command("verify")
@click.option("--preset", type=_PRESET_CHOICE, required=True)
@click.option("-p", "--char", "p", type=int, default=2, show_default=True,
              help="Field characteristic for the matrix model.")
@_OUT_OPTION
def oracle_verify(preset, p, out_path):
    """Run every applicable audit for one bundled preset.

    One PASS/FAIL line per check, a summary line, exit 0 iff all pass.
    """
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise click.UsageError("field characteristic must be prime")
    results = run_checks(preset, p=p)
    passed = sum(1 for result in results if result.passed)
    with _sink(out_path) as fh:
        for result in results:
            line = f"{'PASS' if result.passed else 'FAIL'} {result.name}"
            if not result.passed and result.detail:
                line += f": {result.detail}"
            fh.write(line + "\n")
        fh.write(f"{passed} of {len(results)} checks passed\n")
    if passed != len(results):
        sys.exit(1)


@main.command("render")
@_IN_OPTION
@_OUT_OPTION
def render_command(in_path, out_path):
    """ASCII picture: marks on a baseline, bracket arcs above it.

    Cyclic diagrams are drawn over two copies of the mark circle.
    """
    diagram = _read_diagram(in_path)
    with _sink(out_path) as fh:
        fh.write(render_diagram(diagram) + "\n")


if __name__ == "__main__":
    main()

"""Arc diagrams: pairwise-compatible arc sets, enumeration, exact counts.

A diagram collects arcs over one algebra.  The three diagram kinds differ only
in which crossing kinds a pair of member arcs may have:

* monobrick diagrams allow mono-crossing and non-crossing pairs,
* semibrick diagrams allow non-crossing pairs only,
* cofinally closed diagrams are the monobrick diagrams fixed by cofinal
  closure (the filter lives in :mod:`monobrick.poset`).

Enumeration is clique search over the compatibility graph, emitted in lex
order on the (start, length)-sorted arc index sequence, so output order is
deterministic and independent of set iteration order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from monobrick.arcs import Algebra, Arc, Crossing, arc_length, crossing_kind

DEFAULT_BUDGET = {"A": 10, "B": 7}


class BudgetExceeded(RuntimeError):
    """Enumeration refused: the rank exceeds the configured budget."""


class DiagramKind(enum.Enum):
    MONOBRICK = "Monobrick"
    SEMIBRICK = "Semibrick"
    COFINALLY_CLOSED = "CofinallyClosed"


_ALLOWED_CROSSINGS = {
    DiagramKind.MONOBRICK: frozenset(
        {Crossing.MONO_CROSSING, Crossing.NON_CROSSING}
    ),
    DiagramKind.SEMIBRICK: frozenset({Crossing.NON_CROSSING}),
    DiagramKind.COFINALLY_CLOSED: frozenset(
        {Crossing.MONO_CROSSING, Crossing.NON_CROSSING}
    ),
}


@dataclass(frozen=True)
class Diagram:
    algebra: Algebra
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for arc in self.arcs:
            self.algebra.check_arc(arc)

    def sorted_arcs(self) -> list[Arc]:
        n = self.algebra.marks
        return sorted(self.arcs, key=lambda a: (a.start, arc_length(a, n)))

    def __len__(self) -> int:
        return len(self.arcs)

    def __contains__(self, arc: Arc) -> bool:
        return arc in self.arcs

    def __str__(self) -> str:
        inner = ", ".join(f"({a.start},{a.end})" for a in self.sorted_arcs())
        return f"{self.algebra}:{{{inner}}}"


def crossing_violation(
    diagram: Diagram, kind: DiagramKind
) -> tuple[Arc, Arc, Crossing] | None:
    """First arc pair whose crossing kind the diagram kind forbids, or None."""
    allowed = _ALLOWED_CROSSINGS[kind]
    arcs = diagram.sorted_arcs()
    for i, a in enumerate(arcs):
        for b in arcs[i + 1 :]:
            found = crossing_kind(a, b, diagram.algebra.marks)
            if found not in allowed:
                return a, b, found
    return None


def is_monobrick(diagram: Diagram) -> bool:
    return crossing_violation(diagram, DiagramKind.MONOBRICK) is None


def is_semibrick(diagram: Diagram) -> bool:
    return crossing_violation(diagram, DiagramKind.SEMIBRICK) is None


def iter_index_cliques(adjacency: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All cliques of a graph given as bitmask adjacency rows, lex order.

    Yields index tuples; a clique always appears before its extensions and
    extensions are explored in ascending index order.
    """

    def rec(chosen: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        yield chosen
        m = cand
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            above = ~((1 << (i + 1)) - 1)
            yield from rec(chosen + (i,), cand & adjacency[i] & above)

    yield from rec((), (1 << len(adjacency)) - 1)


def resolve_budget(algebra: Algebra, override: int | None = None) -> int:
    return DEFAULT_BUDGET[algebra.kind] if override is None else override


def enumerate_diagrams(
    algebra: Algebra, kind: DiagramKind, budget: int | None = None
) -> Iterator[Diagram]:
    limit = resolve_budget(algebra, budget)
    if algebra.rank > limit:
        raise BudgetExceeded(
            f"rank {algebra.rank} of {algebra} exceeds enumeration budget {limit}"
        )
    arcs = algebra.arcs()
    allowed = _ALLOWED_CROSSINGS[kind]
    adjacency = [0] * len(arcs)
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if crossing_kind(arcs[i], arcs[j], algebra.marks) in allowed:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i

    keep = None
    if kind is DiagramKind.COFINALLY_CLOSED:
        # Imported here: the poset module works on Diagram objects.
        from monobrick.poset import is_cofinally_closed

        keep = is_cofinally_closed

    for indices in iter_index_cliques(adjacency):
        diagram = Diagram(algebra, frozenset(arcs[i] for i in indices))
        if keep is not None and not keep(diagram):
            continue
        yield diagram


def count_diagrams(
    algebra: Algebra, kind: DiagramKind, budget: int | None = None
) -> int:
    return sum(1 for _ in enumerate_diagrams(algebra, kind, budget))


def schroder(n: int) -> int:
    """Large Schroeder number: 1, 2, 6, 22, 90, 394, 1806, 8558, ..."""
    total = 0
    for i in range(n + 1):
        term, rem = divmod(math.comb(n, i) * math.comb(n + i, i), i + 1)
        assert rem == 0
        total += term
    return total


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def central_binomial(n: int) -> int:
    return math.comb(2 * n, n)


def count_closed_form(algebra: Algebra, kind: DiagramKind) -> int:
    if kind is DiagramKind.MONOBRICK:
        if algebra.kind == "A":
            return schroder(algebra.rank)
        n = algebra.rank
        return 2 * sum(math.comb(n - 1, i) * math.comb(n + i, i) for i in range(n))
    # Semibrick diagrams and cofinally closed diagrams are equinumerous.
    if algebra.kind == "A":
        return catalan(algebra.rank + 1)
    return central_binomial(algebra.rank)


def cyclic_count_from_recurrence(n: int) -> int:
    """Cyclic-family monobrick count rebuilt from the linear-family counts.

    With a_i the monobrick count of the linear family at rank i - 1, the rank-n
    cyclic count is a_n + sum_{i=1..n} i * a_i * a_{n+1-i}.  This is a second
    route to the same number as ``count_closed_form``; tests insist they agree.
    """
    if n < 1:
        raise ValueError("recurrence needs n >= 1")

    def a(i: int) -> int:
        return schroder(i - 1)

    return a(n) + sum(i * a(i) * a(n + 1 - i) for i in range(1, n + 1))


def linear_count_from_recurrence(n: int) -> int:
    """Linear-family monobrick count rebuilt from its own recurrence.

    With s_0 = 1 and s_m = s_{m-1} + sum_{k=0..m-1} s_k * s_{m-1-k}, the
    rank-n count is s_n.  A second route to the same number as
    :func:`schroder`, used to cross-check enumeration in count tables.
    """
    if n < 0:
        raise ValueError("recurrence needs n >= 0")
    values = [1]
    for m in range(1, n + 1):
        values.append(
            values[m - 1] + sum(values[k] * values[m - 1 - k] for k in range(m))
        )
    return values[n]


def diagram_to_json(diagram: Diagram) -> dict:
    return {
        "n": diagram.algebra.rank,
        "algebra": diagram.algebra.kind,
        "arcs": [[a.start, a.end] for a in diagram.sorted_arcs()],
    }


def diagram_from_json(data: dict) -> Diagram:
    try:
        algebra = Algebra(str(data["algebra"]), int(data["n"]))
        raw = [Arc(int(s), int(e)) for s, e in data["arcs"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram object: {exc}") from exc
    arcs = frozenset(raw)
    if len(arcs) != len(raw):
        raise ValueError("diagram lists a duplicate arc")
    return Diagram(algebra, arcs)

"""Submodule order on the arcs of a diagram, maxima, and cofinal closure."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence, TypeVar

from monobrick.arcs import Algebra, Arc, HomKind, arc_length, hom_kind, submodule_arcs
from monobrick.diagrams import Diagram

T = TypeVar("T")


def submodule_leq(a: Arc, b: Arc, algebra: Algebra) -> bool:
    """True when ``a`` embeds in ``b`` (equality included)."""
    return hom_kind(a, b, algebra) in (HomKind.INJECTION, HomKind.ISO)


def maximal_elements(
    elements: Sequence[T], leq: Callable[[T, T], bool]
) -> list[T]:
    return [
        a
        for a in elements
        if not any(a != b and leq(a, b) for b in elements)
    ]


def covering_pairs(
    elements: Sequence[T], leq: Callable[[T, T], bool]
) -> list[tuple[T, T]]:
    """Hasse edges (lower, upper) of the order restricted to ``elements``."""
    pairs = []
    for a in elements:
        for b in elements:
            if a == b or not leq(a, b):
                continue
            between = any(
                c != a and c != b and leq(a, c) and leq(c, b) for c in elements
            )
            if not between:
                pairs.append((a, b))
    return pairs


def _leq_in(diagram: Diagram) -> Callable[[Arc, Arc], bool]:
    algebra = diagram.algebra
    return lambda a, b: submodule_leq(a, b, algebra)


def mmax(diagram: Diagram) -> Diagram:
    """Sub-diagram of maximal arcs in the submodule order."""
    arcs = maximal_elements(diagram.sorted_arcs(), _leq_in(diagram))
    return Diagram(diagram.algebra, frozenset(arcs))


def hasse_covers(diagram: Diagram) -> list[tuple[Arc, Arc]]:
    return covering_pairs(diagram.sorted_arcs(), _leq_in(diagram))


def cofinal_closure(diagram: Diagram) -> Diagram:
    """Adjoin every submodule arc of a member that stays compatible.

    A candidate joins when its hom to every member is zero or injective, so no
    mono-crossing or plain non-crossing pair is disturbed.  One pass suffices:
    submodule arcs of a candidate are submodule arcs of the original member,
    and the admission test does not depend on other candidates.
    """
    algebra = diagram.algebra
    members = set(diagram.arcs)
    candidates: set[Arc] = set()
    for member in diagram.arcs:
        candidates.update(submodule_arcs(member, algebra))
    admitted = {
        cand
        for cand in candidates - members
        if all(
            hom_kind(cand, member, algebra)
            in (HomKind.ZERO, HomKind.INJECTION, HomKind.ISO)
            for member in members
        )
    }
    return Diagram(algebra, frozenset(members | admitted))


def is_cofinally_closed(diagram: Diagram) -> bool:
    return cofinal_closure(diagram).arcs == diagram.arcs


def is_cofinal_extension(small: Diagram, large: Diagram) -> bool:
    """``large`` contains ``small`` and every arc of ``large`` sits under some arc of ``small``."""
    if small.algebra != large.algebra:
        raise ValueError("diagrams live over different algebras")
    if not small.arcs <= large.arcs:
        return False
    algebra = small.algebra
    return all(
        any(submodule_leq(x, m, algebra) for m in small.arcs)
        for x in large.arcs
    )

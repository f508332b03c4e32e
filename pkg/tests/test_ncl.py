import pytest

from monobrick.arcs import Algebra, Arc
from monobrick.diagrams import Diagram, DiagramKind, enumerate_diagrams, schroder
from monobrick.ncl import (
    NclPartition,
    count_partitions,
    enumerate_partitions,
    from_diagram,
    is_valid,
    partition_from_json,
    partition_to_json,
    to_diagram,
    violation,
)


def P(n, *blocks):
    return NclPartition(n, frozenset(frozenset(b) for b in blocks))


def D(rank, *arcs):
    return Diagram(Algebra.linear_a(rank), frozenset(Arc(*a) for a in arcs))


def test_validate_examples():
    assert is_valid(P(4, {1, 2, 4}, {2, 3}))
    assert is_valid(P(3, {1}, {2}, {3}))
    assert not is_valid(P(4, {1, 3}, {2, 4}))
    assert violation(P(4, {1, 3}, {2, 4})).startswith("NCL2")


def test_violation_messages_name_the_condition():
    assert violation(P(3, {1, 2})).startswith("NCL1")
    assert "[3]" in violation(P(3, {1, 2}))
    assert violation(P(3, {1, 2, 3}, {2, 3})).startswith("NCL3")
    # A shared mark must not be the minimum of both blocks.
    assert violation(P(3, {1, 2}, {1, 3})).startswith("NCL3")
    # A shared mark must not sit in a singleton block.
    assert violation(P(2, {1, 2}, {2})).startswith("NCL3")


def test_shared_mark_as_second_minimum_is_fine():
    assert is_valid(P(3, {1, 2}, {2, 3}))


def test_malformed_partitions_rejected():
    with pytest.raises(ValueError):
        P(3, {1, 2, 4})
    with pytest.raises(ValueError):
        P(3, set())
    with pytest.raises(ValueError):
        NclPartition(0, frozenset())


def test_to_diagram_examples():
    assert to_diagram(P(4, {1, 2, 4}, {2, 3})) == D(3, (1, 2), (1, 4), (2, 3))
    assert to_diagram(P(3, {1}, {2}, {3})) == D(2)
    assert to_diagram(P(4, {1, 2}, {3, 4})) == D(3, (1, 2), (3, 4))
    with pytest.raises(ValueError, match="NCL2"):
        to_diagram(P(4, {1, 3}, {2, 4}))


def test_from_diagram_examples():
    assert from_diagram(D(3, (1, 2), (1, 4), (2, 3))) == P(4, {1, 2, 4}, {2, 3})
    assert from_diagram(D(2)) == P(3, {1}, {2}, {3})
    assert from_diagram(D(3, (1, 2), (3, 4))) == P(4, {1, 2}, {3, 4})


def test_from_diagram_rejects_bad_input():
    with pytest.raises(ValueError, match="EpiCrossing"):
        from_diagram(D(3, (1, 4), (3, 4)))
    with pytest.raises(ValueError, match="linear"):
        from_diagram(Diagram(Algebra.cyclic_b(3), frozenset({Arc(1, 1)})))


@pytest.mark.parametrize("n", range(1, 7))
def test_partition_counts(n):
    assert count_partitions(n) == schroder(n - 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_roundtrip_both_ways(n):
    partitions = list(enumerate_partitions(n))
    assert len(partitions) == len({p.blocks for p in partitions})
    for p in partitions:
        assert from_diagram(to_diagram(p)) == p
    diagrams = list(enumerate_diagrams(Algebra.linear_a(n - 1), DiagramKind.MONOBRICK))
    for d in diagrams:
        assert to_diagram(from_diagram(d)) == d
    # The bijection is onto: partition images exhaust the diagrams.
    assert {to_diagram(p).arcs for p in partitions} == {d.arcs for d in diagrams}


def test_block_minima_are_distinct():
    for p in enumerate_partitions(5):
        minima = [min(b) for b in p.blocks]
        assert len(minima) == len(set(minima))


def test_json_roundtrip():
    p = P(4, {2, 3}, {1, 2, 4})
    data = partition_to_json(p)
    assert data == {"n": 4, "blocks": [[1, 2, 4], [2, 3]]}
    assert partition_from_json(data) == p
    with pytest.raises(ValueError):
        partition_from_json({"blocks": [[1]]})
    with pytest.raises(ValueError):
        partition_from_json({"n": 2, "blocks": [[1, 3]]})

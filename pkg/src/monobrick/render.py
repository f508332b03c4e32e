"""ASCII pictures of arc diagrams.

Marks sit on a baseline four columns apart and every arc becomes a
bracket above it: a horizontal bar at the arc's level with legs dropping
to its two marks.  Cyclic diagrams unroll over two copies of the mark
circle so that wrap-around arcs stay readable; each arc is drawn once,
starting in the first copy.

The layout is deterministic.  Arcs claim the lowest free level, shortest
span first, and taller arcs are painted before lower ones so a leg is
never overwritten by a neighbouring bar.
"""

from monobrick.arcs import arc_length, reduce_mark
from monobrick.diagrams import Diagram

_STEP = 4


def _column(position: int) -> int:
    return (position - 1) * _STEP


def _spans(diagram: Diagram) -> list[tuple[int, int]]:
    """Arc endpoints as positions on the unrolled baseline."""
    n = diagram.algebra.marks
    cyclic = diagram.algebra.kind == "B"
    spans = []
    for arc in diagram.sorted_arcs():
        if cyclic:
            spans.append((arc.start, arc.start + arc_length(arc, n)))
        else:
            spans.append((arc.start, arc.end))
    spans.sort(key=lambda se: (se[1] - se[0], se[0]))
    return spans


def _assign_levels(spans: list[tuple[int, int]]) -> list[tuple[int, int, int]]:
    occupied: list[list[tuple[int, int]]] = []
    placed = []
    for start, end in spans:
        level = 0
        while level < len(occupied) and any(
            not (end < s or e < start) for s, e in occupied[level]
        ):
            level += 1
        if level == len(occupied):
            occupied.append([])
        occupied[level].append((start, end))
        placed.append((start, end, level + 1))
    return placed


def render_diagram(diagram: Diagram) -> str:
    n = diagram.algebra.marks
    cyclic = diagram.algebra.kind == "B"
    positions = 2 * n if cyclic else n

    placed = _assign_levels(_spans(diagram))
    height = max((level for _, _, level in placed), default=0)

    labels = [
        str(reduce_mark(p, n)) if cyclic else str(p)
        for p in range(1, positions + 1)
    ]
    width = _column(positions) + len(labels[-1])
    grid = [[" "] * width for _ in range(height + 1)]

    def paint(row: int, col: int, char: str) -> None:
        if grid[row][col] == " ":
            grid[row][col] = char

    for start, end, level in sorted(placed, key=lambda p: (-p[2], p[0], p[1])):
        row = height - level
        left, right = _column(start), _column(end)
        paint(row, left, ".")
        paint(row, right, ".")
        for col in range(left + 1, right):
            paint(row, col, "_")
        for leg_row in range(row + 1, height):
            paint(leg_row, left, "|")
            paint(leg_row, right, "|")

    for position, label in enumerate(labels, start=1):
        col = _column(position)
        for offset, char in enumerate(label):
            grid[height][col + offset] = char

    return "\n".join("".join(row).rstrip() for row in grid)

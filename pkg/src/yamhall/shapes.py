"""Lattice diagrams: reading order, pistols, legs, and inversion templates.

A diagram is a finite set of cells ``(col, row)`` in ZxZ, drawn in French
orientation (row 0 at the bottom, rows increase upward).  The row reading
order lists cells top row first, left to right within a row; all reported
indices are 1-based.

A pistol anchored at a cell c is the reading-order interval running from c
to the lattice position directly below c, inclusive.  The lower endpoint is
a *position*, not necessarily a cell of the diagram, so a bottom-row pistol
extends to the end of its row.  Pistols are what couple the combinatorics
of a word to the geometry of the diagram.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .limits import InputError

Cell = tuple[int, int]
Partition = tuple[int, ...]


def _reading_key(cell: Cell) -> tuple[int, int]:
    x, y = cell
    return (-y, x)


class Diagram:
    """An immutable finite set of lattice cells with derived reading data."""

    def __init__(self, cells: Iterable[Cell]):
        cell_list = [(int(x), int(y)) for x, y in cells]
        cell_set = frozenset(cell_list)
        if len(cell_set) != len(cell_list):
            raise InputError("duplicate cells in diagram")
        self.cells = cell_set

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.reading_order)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Diagram) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Diagram({sorted(self.cells)})"

    def issubset(self, other: "Diagram") -> bool:
        return self.cells <= other.cells

    @cached_property
    def reading_order(self) -> tuple[Cell, ...]:
        """Cells sorted top row first, left to right within rows."""
        return tuple(sorted(self.cells, key=_reading_key))

    @cached_property
    def index(self) -> dict[Cell, int]:
        """1-based reading index of each cell."""
        return {c: i for i, c in enumerate(self.reading_order, start=1)}

    @cached_property
    def pistols(self) -> tuple[tuple[int, int], ...]:
        """One (start, end) reading-index interval per cell, start = anchor.

        The interval collects every cell whose reading key lies between the
        anchor and the position one row below the anchor, whether or not
        that position is itself a cell.
        """
        keys = [_reading_key(c) for c in self.reading_order]
        out = []
        for i, (x, y) in enumerate(self.reading_order, start=1):
            below = _reading_key((x, y - 1))
            end = bisect.bisect_right(keys, below)
            out.append((i, end))
        return tuple(out)

    @cached_property
    def _pistol_reach(self) -> tuple[int, ...]:
        """reach[i] = furthest pistol endpoint over anchors <= i (1-based)."""
        reach = [0] * (len(self) + 1)
        best = 0
        for start, end in self.pistols:
            best = max(best, end)
            reach[start] = best
        return tuple(reach)

    def is_pistoled(self, indices: Iterable[int]) -> bool:
        """True when the given reading indices all fit in a single pistol."""
        idx = list(indices)
        if not idx:
            return True
        lo, hi = min(idx), max(idx)
        if lo < 1 or hi > len(self):
            raise InputError(f"reading index out of range: {idx}")
        return self._pistol_reach[lo] >= hi

    def leg(self, cell: Cell) -> int:
        """Number of cells strictly above ``cell`` in its column."""
        if cell not in self.cells:
            raise InputError(f"cell {cell} not in diagram")
        x, y = cell
        return sum(1 for (cx, cy) in self.cells if cx == x and cy > y)

    @cached_property
    def rows(self) -> dict[int, list[int]]:
        """Row index -> sorted column indices present in that row."""
        rows: dict[int, list[int]] = {}
        for x, y in sorted(self.cells):
            rows.setdefault(y, []).append(x)
        return rows

    @cached_property
    def columns(self) -> dict[int, list[int]]:
        """Column index -> sorted row indices present in that column."""
        cols: dict[int, list[int]] = {}
        for x, y in sorted(self.cells, key=lambda c: (c[0], c[1])):
            cols.setdefault(x, []).append(y)
        return cols

    @cached_property
    def triple_templates(self) -> "TripleTemplates":
        return _build_templates(self)

    @cached_property
    def descent_positions(self) -> tuple[tuple[int, int, int], ...]:
        """(cell index, below-cell index, 1 + leg) for descent-capable cells."""
        out = []
        for c in self.reading_order:
            x, y = c
            below = (x, y - 1)
            if below in self.cells:
                out.append((self.index[c], self.index[below], 1 + self.leg(c)))
        return tuple(out)

    def conjugate(self) -> "Diagram":
        """Reflect over the line x = y."""
        return Diagram((y, x) for x, y in self.cells)


@dataclass(frozen=True)
class TripleTemplates:
    """Positions of all inversion triples and pairs a diagram supports.

    ``triples`` lists (c, d, e) with c, d in one row (c left of d, any
    horizontal distance) and e the cell directly below c.  ``pairs_cd``
    lists the same configurations with e missing from the diagram,
    ``pairs_de`` those with c missing.  ``max_inv`` is the template count,
    i.e. the largest value inv can take on the diagram.
    """

    triples: tuple[tuple[Cell, Cell, Cell], ...]
    pairs_cd: tuple[tuple[Cell, Cell], ...]
    pairs_de: tuple[tuple[Cell, Cell], ...]

    @property
    def max_inv(self) -> int:
        return len(self.triples) + len(self.pairs_cd) + len(self.pairs_de)


def _build_templates(diagram: Diagram) -> TripleTemplates:
    cells = diagram.cells
    triples = []
    pairs_cd = []
    pairs_de = []
    # Scan row by row in reading order so output order is deterministic.
    for y in sorted(diagram.rows, reverse=True):
        row_cols = diagram.rows[y]
        below_cols = diagram.rows.get(y - 1, [])
        candidate_cols = sorted(set(row_cols) | set(below_cols))
        for xi, xc in enumerate(candidate_cols):
            for xd in candidate_cols[xi + 1:]:
                c, d, e = (xc, y), (xd, y), (xc, y - 1)
                if d not in cells:
                    continue
                c_in, e_in = c in cells, e in cells
                if c_in and e_in:
                    triples.append((c, d, e))
                elif c_in and not e_in:
                    pairs_cd.append((c, d))
                elif e_in and not c_in:
                    pairs_de.append((d, e))
    return TripleTemplates(tuple(triples), tuple(pairs_cd), tuple(pairs_de))


def max_inv(diagram: Diagram) -> int:
    """Largest possible inversion count on the diagram."""
    return diagram.triple_templates.max_inv


def validate_partition(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a partition tuple, dropping trailing zeros."""
    seq = tuple(int(p) for p in parts)
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    if any(p <= 0 for p in seq):
        raise InputError(f"partition parts must be positive: {seq}")
    if any(a < b for a, b in zip(seq, seq[1:])):
        raise InputError(f"partition must be weakly decreasing: {seq}")
    return seq


def diagram_from_partition(parts: Iterable[int]) -> Diagram:
    """Left-justified rows, longest row at the bottom, corner at the origin."""
    shape = validate_partition(parts)
    return Diagram((x, y) for y, width in enumerate(shape) for x in range(width))


def is_partition_diagram(diagram: Diagram) -> bool:
    """True when the diagram is exactly some origin-anchored partition shape."""
    if not diagram.cells:
        return True
    rows = diagram.rows
    if sorted(rows) != list(range(len(rows))):
        return False
    widths = []
    for y in range(len(rows)):
        cols = rows[y]
        if cols != list(range(len(cols))):
            return False
        widths.append(len(cols))
    return all(a >= b for a, b in zip(widths, widths[1:]))


def partition_contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """Origin-anchored containment of partition diagrams."""
    mu = validate_partition(outer)
    nu = validate_partition(inner)
    if len(mu) < len(nu):
        return False
    return all(m >= n for m, n in zip(mu, nu))


def parse_diagram(text: str) -> Diagram:
    """Parse ``"p:4,3,2"`` (partition) or ``"c:0,0;1,0;0,1"`` (cells).

    Whitespace is ignored.  ``"c:"`` with no cells denotes the empty
    diagram (useful for empty descent sets).
    """
    compact = "".join(text.split())
    if compact.startswith("p:"):
        body = compact[2:]
        if not body:
            raise InputError("empty partition spec")
        return diagram_from_partition(int(p) for p in body.split(","))
    if compact.startswith("c:"):
        body = compact[2:]
        if not body:
            return Diagram(())
        cells = []
        for chunk in body.split(";"):
            xy = chunk.split(",")
            if len(xy) != 2:
                raise InputError(f"bad cell {chunk!r} in diagram spec")
            try:
                cells.append((int(xy[0]), int(xy[1])))
            except ValueError as exc:
                raise InputError(f"bad cell {chunk!r} in diagram spec") from exc
        return Diagram(cells)
    raise InputError(f"diagram spec must start with 'p:' or 'c:', got {text!r}")


def format_diagram(diagram: Diagram) -> str:
    """Inverse of :func:`parse_diagram`, preferring the partition form."""
    if is_partition_diagram(diagram) and diagram.cells:
        widths = [len(diagram.rows[y]) for y in range(len(diagram.rows))]
        return "p:" + ",".join(str(w) for w in widths)
    return "c:" + ";".join(f"{x},{y}" for x, y in sorted(diagram.cells))

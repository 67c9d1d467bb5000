"""Fillings of diagrams and their descent/inversion statistics.

A filling assigns a positive integer to every cell; since the reading order
is fixed, a filling is determined by its reading word, and that word is the
canonical representation used here.

``inv`` counts inversion triples and pairs over the diagram's templates:
a triple (c, d, e) inverts when T(e) < T(d) < T(c), T(c) <= T(e) < T(d), or
T(d) < T(c) <= T(e) (the three cells read counterclockwise); a (c, d) pair
with no cell below c inverts when T(c) > T(d); a (d, e) pair with no cell
above e's row partner inverts when T(d) > T(e).  ``maj`` adds 1 + leg(c)
over the descent cells, those whose value strictly exceeds the value
directly below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Iterator, Optional

from .limits import InputError, check_enum_bound
from .shapes import Cell, Diagram
from .words import Word, as_word


@dataclass(frozen=True)
class Filling:
    """A diagram together with the word filling it in reading order."""

    diagram: Diagram
    word: Word

    def __post_init__(self):
        if len(self.word) != len(self.diagram):
            raise InputError(
                f"word length {len(self.word)} != diagram size {len(self.diagram)}"
            )

    def __getitem__(self, cell: Cell) -> int:
        return self.word[self.diagram.index[cell] - 1]

    @property
    def values(self) -> dict[Cell, int]:
        return {c: self.word[i] for i, c in enumerate(self.diagram.reading_order)}

    def is_standard(self) -> bool:
        return sorted(self.word) == list(range(1, len(self.word) + 1))


def fill(diagram: Diagram, word: Iterable[int]) -> Filling:
    """Fill the diagram so its reading word is ``word``."""
    return Filling(diagram, as_word(word))


def reading_word(filling: Filling) -> Word:
    return filling.word


# Index-level template tables, 0-based for direct word indexing.

@lru_cache(maxsize=None)
def _index_templates(diagram: Diagram):
    ix = diagram.index
    t = diagram.triple_templates
    triples = tuple((ix[c] - 1, ix[d] - 1, ix[e] - 1) for c, d, e in t.triples)
    pairs_cd = tuple((ix[c] - 1, ix[d] - 1) for c, d in t.pairs_cd)
    pairs_de = tuple((ix[d] - 1, ix[e] - 1) for d, e in t.pairs_de)
    return triples, pairs_cd, pairs_de


@lru_cache(maxsize=None)
def _descent_table(diagram: Diagram):
    """(cell idx, below idx, weight) 0-based, plus the descent-capable cells."""
    table = tuple((i - 1, j - 1, w) for i, j, w in diagram.descent_positions)
    capable = tuple(diagram.reading_order[i] for i, _, _ in table)
    return table, capable


def _triple_inverts(vc: int, vd: int, ve: int) -> bool:
    return (ve < vd < vc) or (vc <= ve < vd) or (vd < vc <= ve)


def inv_word(diagram: Diagram, word: Word) -> int:
    """Inversion count of the filling with the given reading word."""
    triples, pairs_cd, pairs_de = _index_templates(diagram)
    count = 0
    for ic, idd, ie in triples:
        if _triple_inverts(word[ic], word[idd], word[ie]):
            count += 1
    for ic, idd in pairs_cd:
        if word[ic] > word[idd]:
            count += 1
    for idd, ie in pairs_de:
        if word[idd] > word[ie]:
            count += 1
    return count


def has_inversion(diagram: Diagram, word: Word) -> bool:
    """Early-exit test for inv > 0."""
    triples, pairs_cd, pairs_de = _index_templates(diagram)
    for ic, idd, ie in triples:
        if _triple_inverts(word[ic], word[idd], word[ie]):
            return True
    for ic, idd in pairs_cd:
        if word[ic] > word[idd]:
            return True
    for idd, ie in pairs_de:
        if word[idd] > word[ie]:
            return True
    return False


def maj_word(diagram: Diagram, word: Word) -> int:
    table, _ = _descent_table(diagram)
    return sum(w for i, j, w in table if word[i] > word[j])


def descent_cells_word(diagram: Diagram, word: Word) -> frozenset[Cell]:
    table, _ = _descent_table(diagram)
    order = diagram.reading_order
    return frozenset(order[i] for i, j, _ in table if word[i] > word[j])


def inv(filling: Filling) -> int:
    return inv_word(filling.diagram, filling.word)


def maj(filling: Filling) -> int:
    return maj_word(filling.diagram, filling.word)


def descent_cells(filling: Filling) -> Diagram:
    """Cells whose value strictly exceeds the value directly below."""
    return Diagram(descent_cells_word(filling.diagram, filling.word))


def descent_capable_cells(diagram: Diagram) -> Diagram:
    """Cells with a diagram cell directly below (the possible descents)."""
    _, capable = _descent_table(diagram)
    return Diagram(capable)


def maj_of_descents(diagram: Diagram, descents: Diagram | Iterable[Cell]) -> int:
    """maj of any filling whose descent set is ``descents``."""
    cells = descents.cells if isinstance(descents, Diagram) else frozenset(descents)
    _, capable = _descent_table(diagram)
    capable_set = set(capable)
    total = 0
    for c in cells:
        if c not in capable_set:
            raise InputError(f"cell {c} cannot be a descent of the diagram")
        total += 1 + diagram.leg(c)
    return total


def max_maj(diagram: Diagram) -> int:
    """maj when every descent-capable cell is a descent."""
    table, _ = _descent_table(diagram)
    return sum(w for _, _, w in table)


def enumerate_standard_fillings(
    diagram: Diagram,
    predicate: Optional[Callable[[Filling], bool]] = None,
    force: bool = False,
) -> Iterator[Filling]:
    """All n! standard fillings in lexicographic reading-word order."""
    n = len(diagram)
    check_enum_bound(n, force)
    for word in permutations(range(1, n + 1)):
        filling = Filling(diagram, word)
        if predicate is None or predicate(filling):
            yield filling


@lru_cache(maxsize=None)
def _templates_by_last(diagram: Diagram):
    """Templates grouped by their largest 0-based index, for prefix pruning.

    Entry format: (kind, i, j) where kind 0 = triple (i, j = c, d and the
    final index is e), 1 = pair_cd (i = c), 2 = pair_de (i = d).
    """
    n = len(diagram)
    triples, pairs_cd, pairs_de = _index_templates(diagram)
    by_last: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for ic, idd, ie in triples:
        by_last[ie].append((0, ic, idd))
    for ic, idd in pairs_cd:
        by_last[idd].append((1, ic, -1))
    for idd, ie in pairs_de:
        by_last[ie].append((2, idd, -1))
    return tuple(tuple(group) for group in by_last)


def _prefix_inverts(group, word, k) -> bool:
    vk = word[k]
    for kind, i, j in group:
        if kind == 0:
            if _triple_inverts(word[i], word[j], vk):
                return True
        elif kind == 1:
            if word[i] > vk:
                return True
        else:
            if word[i] > vk:
                return True
    return False


def inversion_free_words(diagram: Diagram, force: bool = False) -> Iterator[Word]:
    """Standard reading words with inv = 0, in lexicographic order.

    Backtracking over reading-word prefixes: a template is tested as soon
    as its last cell is placed, so any prefix containing an inversion is
    abandoned wholesale.
    """
    n = len(diagram)
    check_enum_bound(n, force)
    if n == 0:
        yield ()
        return
    by_last = _templates_by_last(diagram)
    word = [0] * n
    free = [True] * (n + 1)

    def extend(k: int) -> Iterator[Word]:
        for v in range(1, n + 1):
            if not free[v]:
                continue
            word[k] = v
            if not _prefix_inverts(by_last[k], word, k):
                if k + 1 == n:
                    yield tuple(word)
                else:
                    free[v] = False
                    yield from extend(k + 1)
                    free[v] = True

    yield from extend(0)

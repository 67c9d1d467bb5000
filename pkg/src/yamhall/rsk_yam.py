"""Row insertion, Yamanouchi words, and the jamming condition.

Tableaux are stored as tuples of row tuples, bottom row first, so the
reading word concatenates the rows top row first.  ``Yam(lam)`` is the set
of words with i appearing lam_i times in which every suffix has at least as
many i's as i+1's.  A Yamanouchi word *jams* a diagram when, for some i and
j, the j-th-from-last i and the (j+1)-th-from-last i+1 sit together in a
pistol; the generators here can filter those words out incrementally.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from .fillings import _index_templates, _triple_inverts
from .limits import InputError
from .shapes import Diagram, Partition, is_partition_diagram, validate_partition
from .words import Word, as_word, is_permutation, unstandardize

Tableau = tuple[tuple[int, ...], ...]


def tableau_shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def tableau_reading_word(t: Tableau) -> Word:
    """Rows concatenated top row first."""
    out: list[int] = []
    for row in reversed(t):
        out.extend(row)
    return tuple(out)


def is_standard_tableau(t: Tableau) -> bool:
    n = sum(len(row) for row in t)
    if sorted(v for row in t for v in row) != list(range(1, n + 1)):
        return False
    for row in t:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for lower, upper in zip(t, t[1:]):
        if len(upper) > len(lower):
            return False
        if any(lower[i] >= upper[i] for i in range(len(upper))):
            return False
    return True


def rsk(word: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-bumping insertion; returns (insertion, recording) tableaux.

    Rows are weakly increasing and an entry bumps the leftmost strictly
    greater one, so of two equal letters the later behaves as the larger.
    """
    w = as_word(word)
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, value in enumerate(w, start=1):
        v = value
        for row_idx, row in enumerate(p):
            spot = _bump_position(row, v)
            if spot is None:
                row.append(v)
                q[row_idx].append(step)
                break
            row[spot], v = v, row[spot]
        else:
            p.append([v])
            q.append([step])
    return tuple(tuple(r) for r in p), tuple(tuple(r) for r in q)


def _bump_position(row: list[int], v: int) -> Optional[int]:
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] <= v:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo < len(row) else None


def insertion_tableau(word: Sequence[int]) -> Tableau:
    return rsk(word)[0]


def superstandard(shape: Sequence[int]) -> Tableau:
    """1..n written row by row, bottom row first."""
    lam = validate_partition(shape)
    rows = []
    start = 1
    for width in lam:
        rows.append(tuple(range(start, start + width)))
        start += width
    return tuple(rows)


def is_yamanouchi(word: Sequence[int]) -> Optional[Partition]:
    """The content partition when the suffix-count condition holds, else None."""
    w = as_word(word)
    if not w:
        return None
    top = max(w)
    counts = [0] * (top + 2)
    for v in reversed(w):
        counts[v] += 1
        if v > 1 and counts[v] > counts[v - 1]:
            return None
    content = tuple(counts[1 : top + 1])
    if 0 in content:
        return None
    return content


def jams(word: Sequence[int], diagram: Diagram) -> bool:
    """Whether the word jams the diagram.

    Permutations (and general words) are judged through their
    unstandardization.
    """
    w = as_word(word)
    if len(w) != len(diagram):
        raise InputError("word and diagram sizes differ")
    if is_yamanouchi(w) is None:
        w = unstandardize(w)
    top = max(w) if w else 0
    from_last = {v: [] for v in range(1, top + 1)}
    for i in range(len(w), 0, -1):
        from_last[w[i - 1]].append(i)
    for i in range(1, top):
        lower = from_last[i]
        upper = from_last[i + 1]
        for j in range(1, min(len(lower), len(upper) - 1) + 1):
            if diagram.is_pistoled((lower[j - 1], upper[j])):
                return True
    return False


def syam_member(pi: Sequence[int], shape: Sequence[int], diagram: Diagram) -> bool:
    """Standardized Yamanouchi word of the given shape that does not jam."""
    lam = validate_partition(shape)
    perm = as_word(pi)
    if not is_permutation(perm):
        raise InputError(f"not a permutation: {perm}")
    if len(perm) != sum(lam) or len(perm) != len(diagram):
        raise InputError("permutation, shape, and diagram sizes differ")
    if insertion_tableau(perm) != superstandard(lam):
        return False
    return not jams(unstandardize(perm), diagram)


@lru_cache(maxsize=None)
def yamanouchi_words(shape: Partition) -> tuple[Word, ...]:
    """All Yamanouchi words of the given content, lexicographically sorted."""
    return generate_yam(validate_partition(shape))


@lru_cache(maxsize=None)
def _templates_by_first(diagram: Diagram):
    """Templates grouped by smallest 0-based index, for right-to-left growth.

    Entries are (kind, i, j, k): kind 0 = triple at (c, d, e), kind 1 =
    (c, d) pair, kind 2 = (d, e) pair.  The grouping key is the first slot.
    """
    n = len(diagram)
    triples, pairs_cd, pairs_de = _index_templates(diagram)
    by_first: list[list[tuple[int, int, int, int]]] = [[] for _ in range(n)]
    for ic, idd, ie in triples:
        by_first[ic].append((0, ic, idd, ie))
    for ic, idd in pairs_cd:
        by_first[ic].append((1, ic, idd, -1))
    for idd, ie in pairs_de:
        by_first[idd].append((2, idd, ie, -1))
    return tuple(tuple(group) for group in by_first)


def _suffix_inverts(group, word) -> bool:
    for kind, a, b, c in group:
        if kind == 0:
            if _triple_inverts(word[a], word[b], word[c]):
                return True
        elif word[a] > word[b]:
            return True
    return False


def generate_yam(
    shape: Sequence[int],
    diagram: Optional[Diagram] = None,
    no_jam: bool = False,
    inv_zero: bool = False,
    bottom_rows_pruning: bool = False,
) -> tuple[Word, ...]:
    """Yamanouchi words of content ``shape`` passing the requested filters.

    Words grow right to left: suffix counts keep the Yamanouchi condition
    incremental, a new letter v is tested under ``no_jam`` against the
    pistol shared with its matching v-1 occurrence, and under ``inv_zero``
    every template whose cells are now all placed is tested.  Branches can
    still dead-end; the tree is simply backtracked.

    ``bottom_rows_pruning`` additionally forces the bottom row to be all
    1's and the second row to be 2's followed by 1's.  It only applies for
    partition-shaped diagrams with ``inv_zero`` set (where it is a pure
    optimization); output is identical with the flag off.
    """
    lam = validate_partition(shape)
    if (no_jam or inv_zero) and diagram is None:
        raise InputError("filters no_jam/inv_zero require a diagram")
    if diagram is not None and len(diagram) != sum(lam):
        raise InputError("diagram size must equal the content size")
    n = sum(lam)
    if n == 0:
        return ((),)
    k = len(lam)

    pistol_reach = diagram._pistol_reach if (no_jam and diagram) else None
    by_first = _templates_by_first(diagram) if (inv_zero and diagram) else None

    row_of_index = None
    if bottom_rows_pruning and inv_zero and diagram is not None and is_partition_diagram(diagram):
        row_of_index = [c[1] for c in diagram.reading_order]

    word = [0] * n
    remaining = list(lam)
    # 1-based reading indices of each placed letter, ordered right to left.
    from_last: list[list[int]] = [[] for _ in range(k + 2)]
    results: list[Word] = []

    def allowed_by_pruning(pos0: int, v: int) -> bool:
        row = row_of_index[pos0]
        if row == 0:
            return v == 1
        if row == 1:
            if v > 2:
                return False
            if v == 1:
                # Left-to-right the row reads 2...21...1, so a 1 may not
                # have a 2 already placed immediately to its right.
                nxt = pos0 + 1
                return nxt >= n or row_of_index[nxt] != 1 or word[nxt] == 1
        return True

    def place(pos0: int) -> None:
        idx1 = pos0 + 1
        for v in range(1, k + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and len(from_last[v]) + 1 > len(from_last[v - 1]):
                continue  # would break the Yamanouchi suffix condition
            if row_of_index is not None and not allowed_by_pruning(pos0, v):
                continue
            word[pos0] = v
            if pistol_reach is not None and v > 1:
                j = len(from_last[v])  # the new v is the (j+1)-th from last
                if j >= 1 and pistol_reach[idx1] >= from_last[v - 1][j - 1]:
                    continue
            if by_first is not None and _suffix_inverts(by_first[pos0], word):
                continue
            if pos0 == 0:
                results.append(tuple(word))
                continue
            from_last[v].append(idx1)
            remaining[v - 1] -= 1
            place(pos0 - 1)
            remaining[v - 1] += 1
            from_last[v].pop()

    place(n - 1)
    results.sort()
    return tuple(results)

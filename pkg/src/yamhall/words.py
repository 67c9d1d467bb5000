"""Words, permutations, signatures, standardization, and strict patterns.

Words are tuples of positive integers; permutations are words whose letters
are exactly 1..n.  Signatures are strings over ``+``/``-`` of length n-1:
position i holds ``+`` exactly when i appears before i+1.  All reported
index tuples are 1-based.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .limits import InputError

Word = tuple[int, ...]


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(int(v) for v in letters)
    if any(v < 1 for v in w):
        raise InputError(f"word letters must be >= 1: {w}")
    return w


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def require_permutation(w: Sequence[int]) -> Word:
    word = as_word(w)
    if not is_permutation(word):
        raise InputError(f"not a permutation: {word}")
    return word


def positions(w: Sequence[int]) -> dict[int, int]:
    """Letter -> 1-based index of its first occurrence."""
    pos: dict[int, int] = {}
    for i, v in enumerate(w, start=1):
        pos.setdefault(v, i)
    return pos


def signature(pi: Sequence[int]) -> str:
    """``+`` at position i iff i appears before i+1 (inverse-descent signs)."""
    perm = require_permutation(pi)
    if not perm:
        raise InputError("signature of the empty permutation is undefined")
    pos = positions(perm)
    return "".join("+" if pos[i] < pos[i + 1] else "-" for i in range(1, len(perm)))


def standardize(w: Sequence[int]) -> Word:
    """Relabel letters to 1..n, equal letters numbered left to right."""
    word = as_word(w)
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    out = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def unstandardize(w: Sequence[int]) -> Word:
    """Smallest word with the same standardization.

    Under standardization, consecutive values i, i+1 collapse to one letter
    exactly when i appears before i+1; otherwise the letter steps up by one.
    Idempotent, and a left inverse of :func:`standardize` on permutations.
    """
    word = as_word(w)
    if not word:
        return ()
    perm = standardize(word)
    pos = positions(perm)
    letter = {1: 1}
    for i in range(1, len(perm)):
        letter[i + 1] = letter[i] + (0 if pos[i] < pos[i + 1] else 1)
    return tuple(letter[v] for v in perm)


def restrict(w: Sequence[int], values: Iterable[int]) -> Word:
    """Subword of the letters lying in ``values``, order preserved."""
    keep = set(values)
    return tuple(v for v in as_word(w) if v in keep) if w else ()


def reverse_values(pi: Sequence[int]) -> Word:
    """Letter-wise complement i -> n+1-i."""
    perm = require_permutation(pi)
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


def strict_pattern_find(pi: Sequence[int], pattern: Sequence[int]) -> list[Word]:
    """All index tuples where ``pattern`` occurs shifted by a constant.

    An occurrence at indices i_1 < ... < i_m means pi[i_j] = pattern[j] + k
    for one fixed k.  For each shift k there is at most one occurrence (the
    positions of the values k+1..k+m are forced), so occurrences are
    returned ordered by k.
    """
    perm = require_permutation(pi)
    pat = require_permutation(pattern)
    m, n = len(pat), len(perm)
    if m > n:
        raise InputError("pattern longer than permutation")
    pos = positions(perm)
    found = []
    for k in range(n - m + 1):
        idx = sorted(pos[v] for v in range(k + 1, k + m + 1))
        if all(perm[i - 1] == pat[j] + k for j, i in enumerate(idx)):
            found.append(tuple(idx))
    return found

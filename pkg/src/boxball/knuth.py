"""Elementary Knuth transformations and Knuth equivalence of words.

The two three-letter rearrangements (with their inverses) generate the
equivalence; two words are equivalent exactly when they bump to the same
tableau, which is how ``knuth_equivalent`` decides it.
"""

from __future__ import annotations

from typing import Iterable

from .tableau import Word, as_word, tab


def elementary_moves(letters: Iterable[int]) -> set[Word]:
    """All words one elementary Knuth transformation away from the input.

    Windows of three letters (a, b, c) rewrite as:

    * swap the last two when  c < a <= b  or  b < a <= c,
    * swap the first two when a <= c < b  or  b <= c < a.

    Each pair of conditions covers one transformation and its inverse, so
    the returned set is symmetric: b in moves(a) iff a in moves(b).
    """
    w = as_word(letters)
    out: set[Word] = set()
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        if c < a <= b or b < a <= c:
            out.add(w[:i] + (a, c, b) + w[i + 3:])
        if a <= c < b or b <= c < a:
            out.add(w[:i] + (b, a, c) + w[i + 3:])
    return out


def knuth_equivalent(a: Iterable[int], b: Iterable[int]) -> bool:
    """Decide equivalence via insertion: equivalent words share a tableau."""
    return tab(a) == tab(b)


def strip_largest(letters: Iterable[int], p: int) -> Word:
    """Delete the p largest letters (with multiplicity), keeping the rest in order.

    Among equal letters the rightmost occurrences are deleted first; any
    tie-break gives the same surviving value sequence, this one is fixed
    for determinism.
    """
    w = as_word(letters)
    if not 0 <= p <= len(w):
        raise ValueError(f"cannot remove {p} letters from a word of length {len(w)}")
    doomed = set(sorted(range(len(w)), key=lambda i: (-w[i], -i))[:p])
    return tuple(x for i, x in enumerate(w) if i not in doomed)

"""Bi-words, dual bi-words, and the RSK correspondence.

A bi-word is a pair of equal-length integer rows whose columns sit in
lexicographic order (top weakly increasing, bottom weakly increasing
within each run of equal top entries).  ``rsk`` sends a bi-word to its
insertion tableau P and recording tableau Q; ``inverse_rsk`` is the exact
inverse.  Entries of a bi-word may be any integers, but RSK itself needs
positive entries on both rows since tableau letters are positive.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .tableau import Tableau, _insert, shape

IntegerMatrix = dict[tuple[int, int], int]


@dataclass(frozen=True)
class BiWord:
    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        top = tuple(int(x) for x in self.top)
        bottom = tuple(int(x) for x in self.bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        if len(top) != len(bottom):
            raise ValueError(f"row lengths differ: {len(top)} vs {len(bottom)}")
        for k in range(len(top) - 1):
            if top[k] > top[k + 1]:
                raise ValueError(f"top row decreases at column {k + 1}")
            if top[k] == top[k + 1] and bottom[k] > bottom[k + 1]:
                raise ValueError(f"bottom row decreases within equal top entries at column {k + 1}")

    def __len__(self) -> int:
        return len(self.top)

    def columns(self) -> list[tuple[int, int]]:
        return list(zip(self.top, self.bottom))


EMPTY_BIWORD = BiWord()


def make_biword(columns: Iterable[tuple[int, int]]) -> BiWord:
    """Sort (top, bottom) pairs lexicographically into a bi-word."""
    cols = sorted((int(i), int(j)) for i, j in columns)
    return BiWord(tuple(i for i, _ in cols), tuple(j for _, j in cols))


def dual(bw: BiWord) -> BiWord:
    """Swap the rows and re-sort the columns; an involution."""
    return make_biword((j, i) for i, j in zip(bw.top, bw.bottom))


def rsk(bw: BiWord) -> tuple[Tableau, Tableau]:
    """RSK correspondence: P from bumping the bottom row, Q recording the top.

    The k-th insertion of bottom[k] creates one box; Q carries top[k] in
    that box.  Lexicographic column order makes Q column-strict, which the
    Tableau constructor checks rather than assumes.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, j in zip(bw.top, bw.bottom):
        if j < 1 or i < 1:
            raise ValueError("RSK needs positive entries in both rows")
        r, c = _insert(p_rows, j)
        if r > len(q_rows):
            q_rows.append([])
        assert c == len(q_rows[r - 1]) + 1
        q_rows[r - 1].append(i)
    p = Tableau(tuple(tuple(row) for row in p_rows))
    q = Tableau(tuple(tuple(row) for row in q_rows))
    return p, q


def inverse_rsk(p: Tableau, q: Tableau) -> BiWord:
    """Reverse RSK: recover the bi-word that produced (p, q).

    Boxes are removed in decreasing order of their Q entry; among equal
    entries the rightmost column goes first (equal entries never share a
    column).  Each removal reverse-bumps a letter up and out of P.
    """
    if shape(p) != shape(q):
        raise ValueError(f"shape mismatch: {shape(p)} vs {shape(q)}")
    p_rows = [list(row) for row in p.rows]
    order = sorted(
        ((v, r, c) for r, row in enumerate(q.rows) for c, v in enumerate(row)),
        key=lambda cell: (-cell[0], -cell[2], -cell[1]),
    )
    cols: list[tuple[int, int]] = []
    for v, r, c in order:
        if c != len(p_rows[r]) - 1 or (r + 1 < len(p_rows) and len(p_rows[r + 1]) > c):
            raise ValueError(f"recording tableau entry {v} does not sit at a removable corner")
        x = p_rows[r].pop()
        if not p_rows[r]:
            p_rows.pop()
        for k in range(r - 1, -1, -1):
            row = p_rows[k]
            j = _rightmost_below(row, x)
            x, row[j] = row[j], x
        cols.append((v, x))
    cols.reverse()
    out = make_biword(cols)
    if out.columns() != cols:
        raise ValueError("recording tableau is not consistent with any bi-word")
    return out


def _rightmost_below(row: list[int], x: int) -> int:
    """Index of the rightmost entry strictly smaller than x in a sorted row."""
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    if lo == 0:
        raise ValueError("reverse bumping found no smaller entry; tableau pair is inconsistent")
    return lo - 1


def matrix_of(bw: BiWord) -> IntegerMatrix:
    """Count matrix of the bi-word: entry (i, j) counts columns (i over j)."""
    return dict(Counter(zip(bw.top, bw.bottom)))


def transpose(m: IntegerMatrix) -> IntegerMatrix:
    return {(j, i): c for (i, j), c in m.items()}


def render_biword(bw: BiWord) -> str:
    """Two lines of space-separated integers: top row, then bottom row."""
    return " ".join(str(x) for x in bw.top) + "\n" + " ".join(str(x) for x in bw.bottom)


def parse_biword(text: str) -> BiWord:
    lines = text.splitlines()
    while len(lines) < 2:
        lines.append("")
    top = tuple(int(tok) for tok in lines[0].split())
    bottom = tuple(int(tok) for tok in lines[1].split())
    return BiWord(top, bottom)


def render_matrix(m: IntegerMatrix) -> str:
    """One ``i j count`` triple per line, sorted lexicographically."""
    return "\n".join(f"{i} {j} {c}" for (i, j), c in sorted(m.items()))


def parse_matrix(text: str) -> IntegerMatrix:
    out: IntegerMatrix = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        i, j, c = (int(tok) for tok in line.split())
        if c < 1:
            raise ValueError(f"count {c} at ({i}, {j}) must be at least 1")
        out[(i, j)] = c
    return out

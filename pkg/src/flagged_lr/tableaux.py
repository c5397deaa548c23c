"""Skew shapes, semistandard skew tableaux and jeu de taquin."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .core import as_partition, contains

__all__ = [
    "SkewShape",
    "SkewTableau",
    "enumerate_tableaux",
    "reading_word",
    "word_weight",
    "reading_word_and_weight",
    "dominant_tableau",
    "rectify",
    "row_insert",
    "insertion_tableau",
    "naive_tableau_count",
]


@dataclass(frozen=True)
class SkewShape:
    """A pair of same-ambient partitions; the diagram is outer minus inner.

    Pairs with inner not contained in outer are representable (the tableau
    set is then empty, which coefficient-level callers rely on).
    """

    outer: tuple
    inner: tuple

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner, len(self.outer)))

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    @property
    def is_valid(self) -> bool:
        return contains(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def row_span(self, i: int):
        """Half-open absolute column range of row i (0-indexed)."""
        return self.inner[i], self.outer[i]


@dataclass(frozen=True)
class SkewTableau:
    """Row-wise filling of a skew shape; rows are ragged tuples.

    Rows weakly increase, absolute columns strictly increase.
    """

    shape: SkewShape
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        sh = self.shape
        if len(rows) != sh.n_rows:
            raise ValueError("row count does not match shape")
        if not sh.is_valid and any(rows):
            raise ValueError("nonempty filling of an invalid shape")
        for i, row in enumerate(rows):
            lo, hi = sh.row_span(i)
            if len(row) != hi - lo:
                raise ValueError(f"row {i} has {len(row)} entries, expected {hi - lo}")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {i} is not weakly increasing")
            if any(v < 1 for v in row):
                raise ValueError("entries must be positive")
        for i in range(len(rows) - 1):
            lo0, hi0 = sh.row_span(i)
            lo1, hi1 = sh.row_span(i + 1)
            for c in range(max(lo0, lo1), min(hi0, hi1)):
                if rows[i][c - lo0] >= rows[i + 1][c - lo1]:
                    raise ValueError(f"column {c} is not strictly increasing")

    def entry(self, i: int, c: int):
        """Entry at row i, absolute column c, or None outside the diagram."""
        lo, hi = self.shape.row_span(i)
        if lo <= c < hi:
            return self.rows[i][c - lo]
        return None

    @property
    def size(self) -> int:
        return self.shape.size

    def render(self) -> str:
        """Rows with '.' standing for the inner boxes."""
        lines = []
        for i, row in enumerate(self.rows):
            lo, _ = self.shape.row_span(i)
            lines.append(" ".join(["."] * lo + [str(v) for v in row]))
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "outer": list(self.shape.outer),
                "inner": list(self.shape.inner),
                "rows": [list(r) for r in self.rows],
            }
        )


def enumerate_tableaux(shape: SkewShape, row_bounds):
    """All semistandard fillings with row i entries at most row_bounds[i].

    The bounds are arbitrary positive integers per row; they need not form a
    flag.  Fillings are produced in lexicographic order of the row-major
    entry sequence.  An invalid shape yields the empty list.
    """
    if not shape.is_valid:
        return []
    bounds = tuple(row_bounds)
    if len(bounds) < shape.n_rows:
        raise ValueError("row_bounds shorter than the shape")
    spans = [shape.row_span(i) for i in range(shape.n_rows)]
    rows = [[0] * (hi - lo) for lo, hi in spans]
    cells = [(i, c) for i, (lo, hi) in enumerate(spans) for c in range(lo, hi)]
    out = []

    def fill(k: int):
        if k == len(cells):
            out.append(SkewTableau(shape, tuple(tuple(r) for r in rows)))
            return
        i, c = cells[k]
        lo, _ = spans[i]
        least = 1
        if c > lo:
            least = max(least, rows[i][c - lo - 1])
        if i > 0:
            plo, phi = spans[i - 1]
            if plo <= c < phi:
                least = max(least, rows[i - 1][c - plo] + 1)
        for v in range(least, bounds[i] + 1):
            rows[i][c - lo] = v
            fill(k + 1)
        rows[i][c - lo] = 0

    fill(0)
    return out


def reading_word(t: SkewTableau):
    """Reverse-row reading word: right to left within rows, top row first."""
    out = []
    for row in t.rows:
        out.extend(reversed(row))
    return tuple(out)


def word_weight(word, n: int):
    counts = [0] * n
    for v in word:
        counts[v - 1] += 1
    return tuple(counts)


def reading_word_and_weight(t: SkewTableau, n=None):
    """The reading word together with its letter-multiplicity vector.

    The weight length defaults to the shape's ambient length and must cover
    every letter actually present.
    """
    word = reading_word(t)
    if n is None:
        n = max(t.shape.n_rows, max(word, default=0))
    return word, word_weight(word, n)


def dominant_tableau(lam) -> SkewTableau:
    """The tableau of straight shape lam with row i filled by the letter i."""
    lam = as_partition(lam)
    shape = SkewShape(lam, (0,) * len(lam))
    return SkewTableau(shape, tuple((i + 1,) * lam[i] for i in range(len(lam))))


# ---------------------------------------------------------------------------
# jeu de taquin
# ---------------------------------------------------------------------------

def _slide(grid, outer, inner, i, c):
    """One inward slide from the hole (i, c); mutates grid and outer."""
    n = len(outer)
    while True:
        right = grid[i].get(c + 1) if c + 1 < outer[i] else None
        below = grid[i + 1].get(c) if i + 1 < n and c < outer[i + 1] else None
        if right is None and below is None:
            outer[i] = c
            return
        if right is None or (below is not None and below <= right):
            grid[i][c] = below
            del grid[i + 1][c]
            i += 1
        else:
            grid[i][c] = right
            del grid[i][c + 1]
            c += 1


def rectify(t: SkewTableau, rng: random.Random = None) -> SkewTableau:
    """Jeu-de-taquin rectification to a straight shape.

    The result is independent of the order in which inner corners are
    chosen; pass rng to randomize that order (used by tests).
    """
    outer = list(t.shape.outer)
    inner = list(t.shape.inner)
    grid = []
    for i in range(len(outer)):
        lo, _ = t.shape.row_span(i)
        grid.append({lo + j: v for j, v in enumerate(t.rows[i])})
    while any(inner):
        corners = [
            i
            for i in range(len(inner))
            if inner[i] > 0 and (i + 1 >= len(inner) or inner[i + 1] < inner[i])
        ]
        i = corners[rng.randrange(len(corners))] if rng else corners[-1]
        c = inner[i] - 1
        inner[i] = c
        _slide(grid, outer, inner, i, c)
    while outer and outer[-1] == 0:
        outer.pop()
    shape = SkewShape(tuple(outer) or (0,), (0,) * max(len(outer), 1))
    rows = tuple(tuple(grid[i][c] for c in range(outer[i])) for i in range(len(outer)))
    if not rows:
        rows = ((),)
    return SkewTableau(shape, rows)


def row_insert(rows, x: int):
    """Schensted row insertion; returns (new rows, cell where the shape grew)."""
    rows = [list(r) for r in rows]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return [tuple(r) for r in rows], (i, 0)
        row = rows[i]
        for j, v in enumerate(row):
            if v > x:
                row[j], x = x, v
                break
        else:
            row.append(x)
            return [tuple(r) for r in rows], (i, len(row) - 1)
        i += 1


def insertion_tableau(word) -> SkewTableau:
    """Row-insert the letters of word in order; the oracle behind rectify."""
    rows = []
    for x in word:
        rows, _ = row_insert(rows, x)
    outer = tuple(len(r) for r in rows) or (0,)
    return SkewTableau(SkewShape(outer, (0,) * len(outer)), tuple(rows) or ((),))


def naive_tableau_count(shape: SkewShape, row_bounds) -> int:
    """Count fillings by filtering all candidate row combinations.

    Deliberately independent of enumerate_tableaux's backtracking: builds
    each row from all weakly increasing words below its bound and checks
    columns afterwards.
    """
    if not shape.is_valid:
        return 0

    def rows_for(i):
        lo, hi = shape.row_span(i)
        length = hi - lo
        bound = row_bounds[i]
        words = [()]
        for _ in range(length):
            words = [w + (v,) for w in words for v in range(w[-1] if w else 1, bound + 1)]
        return words

    stack = [()]
    for i in range(shape.n_rows):
        options = rows_for(i)
        new_stack = []
        for chosen in stack:
            for row in options:
                try:
                    SkewTableau(
                        SkewShape(shape.outer[: i + 1], shape.inner[: i + 1]),
                        chosen + (row,),
                    )
                except ValueError:
                    continue
                new_stack.append(chosen + (row,))
        stack = new_stack
    return len(stack)

"""Biwords, the Burge correspondence, reverse fillings and left keys.

The insertion convention is pinned executably rather than by prose: the
test suite requires the transpose-symmetry property on a matrix census and
the identity that inserting a tableau's reversed reading word under its
row-block word reproduces the jeu-de-taquin rectification.  Column
insertion processing the display-rightmost biword column first passes both.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import as_partition, sub, validate_flag
from .tableaux import (
    SkewShape,
    SkewTableau,
    enumerate_tableaux,
    reading_word,
    word_weight,
)

__all__ = [
    "Biword",
    "biword_from_matrix",
    "matrix_from_biword",
    "biword_from_words",
    "block_word",
    "burge",
    "is_j_phi_compatible",
    "reverse_filling",
    "is_shape_compatible",
    "key_tableau",
    "is_key",
    "essential_subword",
    "ascents",
    "standardize",
    "knuth_class",
    "left_key",
    "InsertionClass",
    "insertion_decomposition",
]


@dataclass(frozen=True)
class Biword:
    """Two-rowed word, stored as (i_k, j_k) pairs for k = 1..t.

    The display convention puts k = 1 rightmost.  The top letters weakly
    increase with k, and strictly increase whenever the bottom letters do.
    """

    columns: tuple

    def __post_init__(self):
        cols = tuple((int(a), int(b)) for a, b in self.columns)
        object.__setattr__(self, "columns", cols)
        for k in range(len(cols) - 1):
            (i1, j1), (i2, j2) = cols[k], cols[k + 1]
            if i2 < i1:
                raise ValueError("top letters must weakly increase")
            if j2 > j1 and not i2 > i1:
                raise ValueError(
                    "top letters must strictly increase when bottom letters do"
                )

    def __len__(self):
        return len(self.columns)

    @property
    def top(self):
        return tuple(c[0] for c in self.columns)

    @property
    def bottom(self):
        return tuple(c[1] for c in self.columns)

    def display(self) -> str:
        """Two aligned rows, k = 1 rightmost."""
        tops = [str(i) for i, _ in reversed(self.columns)]
        bots = [str(j) for _, j in reversed(self.columns)]
        width = max((max(len(a), len(b)) for a, b in zip(tops, bots)), default=1)
        top = " ".join(a.rjust(width) for a in tops)
        bot = " ".join(b.rjust(width) for b in bots)
        return top + "\n" + bot


def biword_from_matrix(matrix) -> Biword:
    """Read entries left to right within rows, bottom row first; entry m_ij
    contributes m_ij copies of the column (i, j)."""
    display = []
    for i in range(len(matrix), 0, -1):
        row = matrix[i - 1]
        for j in range(1, len(row) + 1):
            if row[j - 1] < 0:
                raise ValueError("matrix entries must be nonnegative")
            display.extend([(i, j)] * row[j - 1])
    return Biword(tuple(reversed(display)))


def matrix_from_biword(w: Biword, shape=None):
    """Inverse of biword_from_matrix; shape may widen the matrix."""
    r = max((i for i, _ in w.columns), default=0)
    n = max((j for _, j in w.columns), default=0)
    if shape is not None:
        r, n = max(r, shape[0]), max(n, shape[1])
    matrix = [[0] * n for _ in range(r)]
    for i, j in w.columns:
        matrix[i - 1][j - 1] += 1
    return [tuple(row) for row in matrix]


def biword_from_words(top_display, bottom_display) -> Biword:
    """Assemble a biword from its two displayed (left-to-right) rows."""
    if len(top_display) != len(bottom_display):
        raise ValueError("rows must have equal length")
    return Biword(tuple(reversed(tuple(zip(top_display, bottom_display)))))


def block_word(alpha):
    """The displayed word ... 2^{a_2} 1^{a_1}: block j holds a_j copies of j."""
    out = []
    for j in range(len(alpha), 0, -1):
        out.extend([j] * alpha[j - 1])
    return tuple(out)


def _column_insert(columns, x):
    """Insert x, bumping the topmost entry >= x into the next column.

    Returns the (row, column) index of the cell where the shape grew.
    """
    c = 0
    while True:
        if c == len(columns):
            columns.append([x])
            return 0, c
        col = columns[c]
        for r, v in enumerate(col):
            if v >= x:
                col[r], x = x, v
                break
        else:
            col.append(x)
            return len(col) - 1, c
        c += 1


def _rows_from_columns(columns):
    if not columns:
        return ((),)
    n_rows = len(columns[0])
    return tuple(
        tuple(col[r] for col in columns if len(col) > r) for r in range(n_rows)
    )


def _straight_tableau(rows) -> SkewTableau:
    outer = tuple(len(r) for r in rows if r) or (0,)
    rows = tuple(r for r in rows if r) or ((),)
    return SkewTableau(SkewShape(outer, (0,) * len(outer)), rows)


def burge(w: Biword):
    """Insertion pair (P, Q): column-insert the bottom letters for k = 1..t,
    recording each top letter in the cell where P grows."""
    columns = []
    record = {}
    for i, j in w.columns:
        r, c = _column_insert(columns, j)
        record[(r, c)] = i
    p_rows = _rows_from_columns(columns)
    q_rows = tuple(
        tuple(record[(r, c)] for c in range(len(row))) for r, row in enumerate(p_rows)
    ) or ((),)
    return _straight_tableau(p_rows), _straight_tableau(q_rows)


def is_j_phi_compatible(w: Biword, phi) -> bool:
    """Each top letter is bounded by the flag entry of its bottom letter."""
    if any(j > len(phi) for _, j in w.columns):
        raise ValueError("bottom letter exceeds the flag length")
    return all(i <= phi[j - 1] for i, j in w.columns)


# ---------------------------------------------------------------------------
# reverse fillings and shape compatibility
# ---------------------------------------------------------------------------

def reverse_filling(shape: SkewShape):
    """Number the boxes right to left within rows, top row first.

    Returned as ragged rows aligned with the shape (left to right)."""
    rows = []
    counter = 1
    for i in range(shape.n_rows):
        lo, hi = shape.row_span(i)
        row = list(range(counter + hi - lo - 1, counter - 1, -1))
        counter += hi - lo
        rows.append(tuple(row))
    return tuple(rows)


def _positions(t: SkewTableau):
    pos = {}
    for i in range(t.shape.n_rows):
        lo, _ = t.shape.row_span(i)
        for k, v in enumerate(t.rows[i]):
            pos[v] = (i, lo + k)
    return pos


def is_shape_compatible(q: SkewTableau, shape: SkewShape) -> bool:
    """Whether the standard tableau q is compatible with the reverse filling
    of the shape: row neighbours force 'weakly north, strictly east' and
    column neighbours force 'weakly west, strictly south'."""
    if q.size != shape.size:
        raise ValueError("size mismatch between tableau and shape")
    rf = reverse_filling(shape)
    pos = _positions(q)
    for i in range(shape.n_rows):
        lo, hi = shape.row_span(i)
        for c in range(lo, hi - 1):
            left, right = rf[i][c - lo], rf[i][c - lo + 1]
            ri, ci = pos[right]
            rk, ck = pos[left]
            if not (rk <= ri and ck > ci):
                return False
    for i in range(shape.n_rows - 1):
        lo0, hi0 = shape.row_span(i)
        lo1, hi1 = shape.row_span(i + 1)
        for c in range(max(lo0, lo1), min(hi0, hi1)):
            above, below = rf[i][c - lo0], rf[i + 1][c - lo1]
            ra, ca = pos[above]
            rb, cb = pos[below]
            if not (cb <= ca and rb > ra):
                return False
    return True


# ---------------------------------------------------------------------------
# key tableaux, essential subwords, left keys
# ---------------------------------------------------------------------------

def key_tableau(alpha) -> SkewTableau:
    """The unique tableau of sorted shape and weight alpha: its first
    alpha_k columns contain the letter k."""
    shape = as_partition(sorted(alpha, reverse=True))
    n_cols = shape[0] if shape else 0
    columns = [
        sorted(k + 1 for k in range(len(alpha)) if alpha[k] >= c)
        for c in range(1, n_cols + 1)
    ]
    rows = _rows_from_columns([list(c) for c in columns])
    return _straight_tableau(rows)


def _columns_of(t: SkewTableau):
    cols = []
    for c in range(t.shape.outer[0] if t.shape.outer else 0):
        col = []
        for i in range(t.shape.n_rows):
            v = t.entry(i, c)
            if v is not None:
                col.append(v)
        cols.append(col)
    return cols


def is_key(t: SkewTableau) -> bool:
    """Column letter sets are nested right-to-left."""
    cols = [set(c) for c in _columns_of(t)]
    return all(cols[c + 1] <= cols[c] for c in range(len(cols) - 1))


def essential_subword(word, bound=None):
    """Recursive subword filter: keep the last letter when it is below the
    bound and tighten the bound to it while recursing left."""
    if not word:
        return ()
    last = word[-1]
    if bound is None or last < bound:
        return essential_subword(word[:-1], last) + (last,)
    return essential_subword(word[:-1], bound)


def ascents(word):
    """1-indexed positions k with word_k < word_{k+1}."""
    return {k + 1 for k in range(len(word) - 1) if word[k] < word[k + 1]}


def standardize(t: SkewTableau) -> SkewTableau:
    """Relabel occurrences of each letter left to right with 1, 2, ..."""
    order = []
    for i in range(t.shape.n_rows):
        lo, _ = t.shape.row_span(i)
        for k, v in enumerate(t.rows[i]):
            order.append((v, lo + k, i))
    order.sort()
    relabel = {(i, c): rank + 1 for rank, (_, c, i) in enumerate(order)}
    rows = []
    for i in range(t.shape.n_rows):
        lo, _ = t.shape.row_span(i)
        rows.append(tuple(relabel[(i, lo + k)] for k in range(len(t.rows[i]))))
    return SkewTableau(t.shape, tuple(rows))


def _knuth_moves(word):
    out = []
    for p in range(len(word) - 2):
        a, b, c = word[p : p + 3]
        if min(b, c) < a <= max(b, c):
            out.append(word[:p] + (a, c, b) + word[p + 3 :])
        if min(a, b) <= c < max(a, b):
            out.append(word[:p] + (b, a, c) + word[p + 3 :])
    return out


def knuth_class(word):
    """All words reachable by elementary Knuth transformations."""
    seen = {tuple(word)}
    frontier = [tuple(word)]
    while frontier:
        w = frontier.pop()
        for v in _knuth_moves(w):
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    return frozenset(seen)


def _parses_into_columns(word, lengths):
    """Can word split into strictly decreasing blocks of the given lengths
    (in some order)?"""

    @lru_cache(maxsize=None)
    def rec(w, ls):
        if not w:
            return not ls
        for length in set(ls):
            block = w[:length]
            if len(block) == length and all(
                block[i] > block[i + 1] for i in range(length - 1)
            ):
                rest = list(ls)
                rest.remove(length)
                if rec(w[length:], tuple(sorted(rest))):
                    return True
        return False

    return rec(tuple(word), tuple(sorted(lengths)))


def left_key(t: SkewTableau) -> SkewTableau:
    """Left key tableau, computed from the definition via column-rearranged
    words: the length-L column of the key collects the letters of the first
    block in any Knuth-equivalent word that factors into strictly decreasing
    blocks whose lengths rearrange the column lengths, starting with L.

    Words in a plactic class are finite in number, so for the desk-scale
    tableaux this library handles the search is exact."""
    cols = _columns_of(t)
    if not cols or not cols[0]:
        return t
    lengths = [len(c) for c in cols]
    word = tuple(reversed(reading_word(t)))
    cls = sorted(knuth_class(word))
    letter_sets = {}
    for length in sorted(set(lengths)):
        found = None
        rest = list(lengths)
        rest.remove(length)
        for w in cls:
            head = w[:length]
            if all(head[i] > head[i + 1] for i in range(length - 1)):
                if _parses_into_columns(w[length:], rest):
                    found = frozenset(head)
                    break
        if found is None:
            raise ValueError(f"no column-rearranged word with first block {length}")
        letter_sets[length] = found
    key_cols = [sorted(letter_sets[len(c)]) for c in cols]
    key = _straight_tableau(_rows_from_columns(key_cols))
    if not is_key(key):
        raise ValueError(f"left key extraction produced a non-key {key.rows}")
    return key


# ---------------------------------------------------------------------------
# the explicit decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InsertionClass:
    """One insertion class: the recording tableau R, its standardization Q,
    the weight of R's left key, and the member tableaux."""

    recording: SkewTableau
    standard: SkewTableau
    beta: tuple
    members: tuple


def insertion_decomposition(mu, gam, phi):
    """Partition the flagged skew tableaux by recording tableau under the
    insertion of the reversed reading word below the row-block word."""
    mu = as_partition(mu)
    n = len(mu)
    gam = as_partition(gam, n)
    validate_flag(phi, n)
    shape = SkewShape(mu, gam)
    rho = sub(mu, gam)
    groups = {}
    for t in enumerate_tableaux(shape, phi):
        bw = biword_from_words(block_word(rho), tuple(reversed(reading_word(t))))
        _, rec = burge(bw)
        groups.setdefault(rec.rows, []).append(t)
    out = []
    for rec_rows in sorted(groups):
        members = groups[rec_rows]
        rec = _straight_tableau(rec_rows)
        if any(shape.size != m.size for m in members) or (
            shape.size and word_weight(reading_word(rec), n) != tuple(rho)
        ):
            raise ValueError("recording tableau does not partition the set")
        q = standardize(rec)
        if shape.size and not is_shape_compatible(q, shape):
            raise ValueError(f"recording standardization {q.rows} is not compatible")
        beta = word_weight(reading_word(left_key(rec)), n)
        out.append(InsertionClass(rec, q, beta, tuple(members)))
    return out

"""Partitions, compositions, flags and permutations.

Everything downstream indexes into these types.  A partition/composition of
ambient length ``n`` is a plain tuple of ``n`` nonnegative integers with
trailing zeros kept explicit, so the ambient length is always readable from
the value itself.  Permutations are tuples in one-line notation over
``{1..n}``.
"""

from __future__ import annotations

from itertools import permutations as _all_perms

__all__ = [
    "FlagError",
    "as_partition",
    "as_composition",
    "is_partition",
    "contains",
    "weight",
    "part_length",
    "add",
    "sub",
    "scale",
    "sort_descending",
    "partial_sums",
    "sort_to_partition",
    "permutation_act",
    "inverse",
    "compose",
    "inversions",
    "identity",
    "longest_element",
    "transposition",
    "reduced_word",
    "permutation_from_word",
    "validate_flag",
    "standard_flag",
    "all_flags",
    "parse_int_tuple",
]


class FlagError(ValueError):
    """Raised when a sequence fails the flag conditions."""


def as_composition(parts, n=None):
    """Return ``parts`` as a composition tuple, optionally padded to length n."""
    t = tuple(int(p) for p in parts)
    if any(p < 0 for p in t):
        raise ValueError(f"negative part in composition {t}")
    if n is not None:
        if len(t) > n:
            raise ValueError(f"composition {t} longer than ambient {n}")
        t = t + (0,) * (n - len(t))
    return t


def as_partition(parts, n=None):
    """Return ``parts`` as a partition tuple (weakly decreasing, padded to n)."""
    t = as_composition(parts, n)
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"parts {t} are not weakly decreasing")
    return t


def is_partition(parts) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def contains(outer, inner) -> bool:
    """Componentwise containment of same-ambient partitions."""
    if len(outer) != len(inner):
        raise ValueError("ambient lengths differ")
    return all(o >= i for o, i in zip(outer, inner))


def weight(parts) -> int:
    return sum(parts)


def part_length(parts) -> int:
    """Index of the last nonzero part."""
    last = 0
    for i, p in enumerate(parts):
        if p:
            last = i + 1
    return last


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a):
    return tuple(k * x for x in a)


def sort_descending(alpha):
    """The partition obtained by sorting the parts of a composition."""
    return tuple(sorted(alpha, reverse=True))


def partial_sums(lam):
    """Cumulative sums (0, l1, l1+l2, ..., |l|); length is one more than ambient."""
    out = [0]
    for p in lam:
        out.append(out[-1] + p)
    return tuple(out)


# ---------------------------------------------------------------------------
# permutations (one-line notation over {1..n})
# ---------------------------------------------------------------------------

def identity(n: int):
    return tuple(range(1, n + 1))


def longest_element(n: int):
    return tuple(range(n, 0, -1))


def transposition(n: int, i: int):
    """Simple transposition s_i in S_n."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def inverse(w):
    inv = [0] * len(w)
    for i, wi in enumerate(w):
        inv[wi - 1] = i + 1
    return tuple(inv)


def compose(u, v):
    """(u o v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def permutation_act(w, v):
    """Left action on tuples: (w.v)_i = v_{w^-1(i)}."""
    winv = inverse(w)
    return tuple(v[winv[i] - 1] for i in range(len(v)))


def inversions(w) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reduced_word(w):
    """A reduced expression (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.

    Produced by bubble sort: repeatedly clear the leftmost descent, which is
    deterministic and yields exactly inversions(w) letters.
    """
    cur = list(w)
    swaps = []
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                swaps.append(i + 1)
                break
        else:
            break
    return tuple(reversed(swaps))


def permutation_from_word(word, n: int):
    """Multiply out s_{i_1} ... s_{i_k}."""
    w = identity(n)
    for i in word:
        w = compose(w, transposition(n, i))
    return w


def sort_to_partition(alpha):
    """Sort a composition into a partition together with the sorting permutation.

    Returns (a, w) where a is the descending sort of alpha and w is the unique
    minimal-length permutation with w.a = alpha.  Ties between equal parts are
    broken stably so the output is deterministic.
    """
    n = len(alpha)
    order = sorted(range(n), key=lambda j: (-alpha[j], j))
    winv = [0] * n
    for rank, j in enumerate(order):
        winv[j] = rank + 1
    w = inverse(tuple(winv))
    return sort_descending(alpha), w


def minimal_sorting_permutation_bruteforce(alpha):
    """Exhaustive-search oracle for sort_to_partition's minimality claim."""
    target = sort_descending(alpha)
    best = None
    for w in _all_perms(range(1, len(alpha) + 1)):
        if permutation_act(w, target) == tuple(alpha):
            if best is None or inversions(w) < inversions(best):
                best = w
    return best


# ---------------------------------------------------------------------------
# flags
# ---------------------------------------------------------------------------

def validate_flag(bounds, n: int):
    """Check the flag conditions: weakly increasing, positive, last entry n."""
    t = tuple(int(b) for b in bounds)
    if len(t) != n:
        raise FlagError(f"flag {t} must have length {n}")
    if any(b < 1 for b in t):
        raise FlagError(f"flag {t} has a nonpositive entry")
    if any(t[i] > t[i + 1] for i in range(n - 1)):
        raise FlagError(f"flag {t} is not weakly increasing")
    if t and t[-1] != n:
        raise FlagError(f"flag {t} must end with {n}")
    return t


def standard_flag(n: int):
    return tuple(range(1, n + 1))


def all_flags(n: int):
    """Every valid flag of ambient n, lexicographically."""
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == n - 1:
            out.append(tuple(prefix) + (n,))
            return
        lo = prefix[-1] if prefix else 1
        for b in range(lo, n + 1):
            rec(prefix + [b])

    if n == 0:
        return [()]
    rec([])
    return out


def parse_int_tuple(text: str, n=None):
    """Parse a comma-separated integer list; empty string is the zero tuple."""
    text = text.strip()
    if not text:
        if n is None:
            return ()
        return (0,) * n
    t = tuple(int(x) for x in text.split(","))
    if n is not None:
        if len(t) > n:
            raise ValueError(f"{t} longer than ambient {n}")
        t = t + (0,) * (n - len(t))
    return t

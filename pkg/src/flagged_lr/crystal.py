"""Type A crystal structure on words and flagged skew tableaux.

Words carry the crystal structure of tensor powers of the standard crystal
through the reverse-row reading embedding.  The raising/lowering operators
are implemented twice: ``tensor_raising``/``tensor_lowering`` unroll the
defining tensor-product recursion and serve as the reference; ``raising``/
``lowering`` use the matched-bracket signature rule and are the fast path.
Their agreement is enforced by the test suite over a word census.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .core import is_partition, sort_descending, sub, contains, validate_flag
from .tableaux import (
    SkewShape,
    SkewTableau,
    dominant_tableau,
    enumerate_tableaux,
    reading_word,
    word_weight,
)

__all__ = [
    "raising",
    "lowering",
    "apply_operator",
    "tensor_raising",
    "tensor_lowering",
    "epsilon_phi",
    "is_dominant",
    "prefix_dominant",
    "is_lambda_dominant",
    "flagged_word_set",
    "tableau_word_set",
    "generate_demazure",
    "string_property_witness",
    "has_string_property",
    "DemazureComponent",
    "StringPropertyError",
    "decompose",
    "coefficient_by_tableaux",
    "character",
    "crystal_graph_dot",
]


# ---------------------------------------------------------------------------
# signature rule (fast path)
# ---------------------------------------------------------------------------

def _unmatched(word, i):
    """Positions of unmatched letters i ('opening') and i+1 ('closing').

    A letter i is matched with a later unmatched i+1.
    """
    open_positions = []
    unmatched_close = []
    for p, v in enumerate(word):
        if v == i:
            open_positions.append(p)
        elif v == i + 1:
            if open_positions:
                open_positions.pop()
            else:
                unmatched_close.append(p)
    return open_positions, unmatched_close


def lowering(word, i: int):
    """f_i: turn the leftmost unmatched i into i+1, or None."""
    if i < 1:
        raise IndexError(f"operator index {i} out of range")
    opens, _ = _unmatched(word, i)
    if not opens:
        return None
    p = opens[0]
    return word[:p] + (i + 1,) + word[p + 1 :]


def raising(word, i: int):
    """e_i: turn the rightmost unmatched i+1 into i, or None."""
    if i < 1:
        raise IndexError(f"operator index {i} out of range")
    _, closes = _unmatched(word, i)
    if not closes:
        return None
    p = closes[-1]
    return word[:p] + (i,) + word[p + 1 :]


def apply_operator(word, i: int, direction: str, n=None):
    """Apply e_i ('raise') or f_i ('lower'); None encodes the null element."""
    if n is not None and not 1 <= i <= n - 1:
        raise IndexError(f"operator index {i} out of range for ambient {n}")
    if direction == "raise":
        return raising(word, i)
    if direction == "lower":
        return lowering(word, i)
    raise ValueError(f"unknown direction {direction!r}")


def epsilon_phi(word, i: int, n=None):
    """(eps_i, phi_i): maximal numbers of raising/lowering applications."""
    if n is not None and not 1 <= i <= n - 1:
        raise IndexError(f"operator index {i} out of range for ambient {n}")
    opens, closes = _unmatched(word, i)
    return len(closes), len(opens)


# ---------------------------------------------------------------------------
# tensor-product recursion (reference implementation)
# ---------------------------------------------------------------------------

def _letter_lower(v, i):
    return i + 1 if v == i else None


def _letter_raise(v, i):
    return i if v == i + 1 else None


@lru_cache(maxsize=1 << 20)
def _tensor_phi(word, i):
    """phi_i by literally counting lowering applications."""
    count = 0
    w = word
    while True:
        w = tensor_lowering(w, i)
        if w is None:
            return count
        count += 1


def tensor_lowering(word, i: int):
    """f_i on w1 (x) ... (x) wk via the left-associated tensor recursion."""
    if not word:
        return None
    if len(word) == 1:
        v = _letter_lower(word[0], i)
        return None if v is None else (v,)
    x, y = word[:-1], word[-1]
    eps_y = 1 if y == i + 1 else 0
    if eps_y < _tensor_phi(x, i):
        fx = tensor_lowering(x, i)
        return None if fx is None else fx + (y,)
    v = _letter_lower(y, i)
    return None if v is None else x + (v,)


def tensor_raising(word, i: int):
    """e_i on w1 (x) ... (x) wk via the left-associated tensor recursion."""
    if not word:
        return None
    if len(word) == 1:
        v = _letter_raise(word[0], i)
        return None if v is None else (v,)
    x, y = word[:-1], word[-1]
    eps_y = 1 if y == i + 1 else 0
    if eps_y <= _tensor_phi(x, i):
        ex = tensor_raising(x, i)
        return None if ex is None else ex + (y,)
    v = _letter_raise(y, i)
    return None if v is None else x + (v,)


# ---------------------------------------------------------------------------
# dominance
# ---------------------------------------------------------------------------

def is_dominant(word, n: int) -> bool:
    """True iff every raising operator kills the word."""
    return all(raising(word, i) is None for i in range(1, n))


def prefix_dominant(word, n: int) -> bool:
    """Prefix characterization: every prefix has at least as many i as i+1."""
    counts = [0] * (n + 1)
    for v in word:
        counts[v] += 1
        if any(counts[i] < counts[i + 1] for i in range(1, n)):
            return False
    return True


def is_lambda_dominant(t: SkewTableau, lam, n: int) -> bool:
    """True iff the reading word of the dominant tableau of shape lam,
    concatenated with the reading word of t, is dominant."""
    head = reading_word(dominant_tableau(lam))
    return is_dominant(head + reading_word(t), n)


# ---------------------------------------------------------------------------
# word sets
# ---------------------------------------------------------------------------

def flagged_word_set(phi, rho):
    """Words whose letter blocks are capped rowwise: the first rho_1 letters
    are at most phi_1, the next rho_2 at most phi_2, and so on."""
    if len(rho) > len(phi):
        raise ValueError("rho longer than phi")
    ranges = []
    for j, r in enumerate(rho):
        ranges.extend([range(1, phi[j] + 1)] * r)
    return {tuple(w) for w in product(*ranges)}


def tableau_word_set(mu, gam, row_bounds):
    """Reading words of the flagged skew tableaux of shape mu/gam."""
    return {reading_word(t) for t in enumerate_tableaux(SkewShape(mu, gam), row_bounds)}


def generate_demazure(b, reduced, n: int):
    """Closure {f_{i_1}^{k_1} ... f_{i_p}^{k_p} b} along a reduced word.

    The rightmost index is saturated first, matching the monomial form.
    The seed word must be dominant.
    """
    if not is_dominant(b, n):
        raise ValueError(f"seed word {b} is not dominant")
    words = {b}
    for i in reversed(reduced):
        grown = set(words)
        for w in words:
            x = w
            while True:
                x = lowering(x, i)
                if x is None:
                    break
                grown.add(x)
        words = grown
    return words


# ---------------------------------------------------------------------------
# string property and decomposition
# ---------------------------------------------------------------------------

def string_property_witness(words, n: int):
    """None when the set has the string property, else a violating (word, i)."""
    words = set(words)
    for w in sorted(words):
        for i in range(1, n):
            if raising(w, i) is None:
                continue
            if raising(w, i) not in words:
                return (w, i)
            f = lowering(w, i)
            if f is not None and f not in words:
                return (w, i)
    return None


def has_string_property(words, n: int) -> bool:
    return string_property_witness(words, n) is None


class StringPropertyError(ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"string property fails at word {witness[0]}, i={witness[1]}")


@dataclass(frozen=True)
class DemazureComponent:
    """One Demazure crystal inside a decomposition.

    head is killed by every raising operator; its weight is the component's
    highest weight and the character is the key polynomial of key_weight.
    """

    head: tuple
    members: frozenset
    highest_weight: tuple
    key_weight: tuple


def _raise_to_head(word, n: int):
    while True:
        for i in range(1, n):
            up = raising(word, i)
            if up is not None:
                word = up
                break
        else:
            return word


def decompose(words, n: int):
    """Split a string-closed word set into its Demazure components.

    Raises StringPropertyError when the set is not string-closed, and
    ValueError when some component character is not a single key polynomial
    (which would signal an internal inconsistency).
    """
    from .polynomials import expand_in_key

    witness = string_property_witness(words, n)
    if witness is not None:
        raise StringPropertyError(witness)
    groups = {}
    for w in words:
        groups.setdefault(_raise_to_head(w, n), set()).add(w)
    components = []
    for head in sorted(groups):
        members = frozenset(groups[head])
        hw = word_weight(head, n)
        if not is_partition(hw):
            raise ValueError(f"head {head} has non-partition weight {hw}")
        ch = character(members, n)
        expansion = expand_in_key(ch)
        if len(expansion) != 1 or set(expansion.values()) != {1}:
            raise ValueError(
                f"component at head {head} is not a single key polynomial: {expansion}"
            )
        (alpha,) = expansion
        if sort_descending(alpha) != hw:
            raise ValueError(
                f"key weight {alpha} does not sort to highest weight {hw}"
            )
        components.append(DemazureComponent(head, members, hw, alpha))
    return components


def character(words, n: int):
    """Sum of the weight monomials over a set of words."""
    from .polynomials import IntPolynomial

    terms = {}
    for w in words:
        e = word_weight(w, n)
        terms[e] = terms.get(e, 0) + 1
    return IntPolynomial(n, terms)


# ---------------------------------------------------------------------------
# coefficients, route one
# ---------------------------------------------------------------------------

def coefficient_by_tableaux(lam, mu, gam, nu, phi) -> int:
    """Count lambda-dominant flagged skew tableaux of weight nu - lam."""
    n = len(mu)
    if not len(lam) == len(gam) == len(nu) == n:
        raise ValueError("ambient lengths differ")
    validate_flag(phi, n)
    if not contains(mu, gam) or not contains(nu, lam):
        return 0
    target = sub(nu, lam)
    head = reading_word(dominant_tableau(lam))
    count = 0
    for t in enumerate_tableaux(SkewShape(mu, gam), phi):
        word = reading_word(t)
        if word_weight(word, n) != target:
            continue
        if is_dominant(head + word, n):
            count += 1
    return count


# ---------------------------------------------------------------------------
# graph export
# ---------------------------------------------------------------------------

_EDGE_COLORS = ("red", "blue", "forestgreen", "orange", "purple", "brown", "cyan")


def _word_label(word):
    if all(v <= 9 for v in word):
        return "".join(map(str, word)) or "()"
    return ",".join(map(str, word)) or "()"


def crystal_graph_dot(words, n: int) -> str:
    """DOT digraph of the lowering operators restricted to a word set."""
    words = sorted(words)
    members = set(words)
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for w in words:
        lines.append(f'  "{_word_label(w)}";')
    for w in words:
        for i in range(1, n):
            f = lowering(w, i)
            if f is not None and f in members:
                color = _EDGE_COLORS[(i - 1) % len(_EDGE_COLORS)]
                lines.append(
                    f'  "{_word_label(w)}" -> "{_word_label(f)}"'
                    f' [label="{i}", color="{color}"];'
                )
    lines.append("}")
    return "\n".join(lines)

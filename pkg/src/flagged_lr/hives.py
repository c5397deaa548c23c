"""Skew GT patterns, skew hive parallelograms, triangular hives.

Lattice points of these polytopes count the coefficients; the maps between
them (Upsilon, the row-difference map, the doubling embedding into a
triangular hive) are implemented exactly as affine maps on integer labels.

Node indexing: row i counts from the top.  A parallelogram hive has rows
0..n each with nodes 0..n; a triangular hive has rows 0..N where row i has
nodes 0..i.  Rhombus contents are the sum of labels at the obtuse corners
minus the sum at the acute corners; all three orientations below were
anchored against a worked example and are test-gated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import as_partition, contains, partial_sums, validate_flag, weight
from .tableaux import SkewShape, SkewTableau

__all__ = [
    "HiveValidationError",
    "ScaleExceededError",
    "SkewGTPattern",
    "upsilon",
    "upsilon_inverse",
    "enumerate_flagged_gt_points",
    "SkewHive",
    "skew_hive_contents",
    "check_skew_hive",
    "validate_skew_hive",
    "skew_flat_region",
    "hive_from_gt",
    "gt_from_hive",
    "enumerate_skew_hive_points",
    "lift_tilde",
    "TriHive",
    "tri_hive_contents",
    "check_tri_hive",
    "validate_tri_hive",
    "tri_kogan_region",
    "enumerate_tri_hive_points",
    "psi",
    "psi_inverse",
    "scale_labels",
]


class HiveValidationError(ValueError):
    """Carries the full list of boundary/content violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class ScaleExceededError(RuntimeError):
    """Enumeration visited more nodes than the configured ceiling."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit):
        self.left = limit

    def spend(self):
        if self.left is None:
            return
        self.left -= 1
        if self.left < 0:
            raise ScaleExceededError("enumeration ceiling exceeded")


# ---------------------------------------------------------------------------
# skew Gelfand-Tsetlin patterns
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SkewGTPattern:
    """Rows x_0..x_m (top to bottom), each of length n, interlacing downward:
    x_{ij} >= x_{(i-1)j} and x_{(i-1)j} >= x_{i(j+1)}."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("rows must share a length")
        for i in range(1, len(rows)):
            for j in range(n):
                if rows[i][j] < rows[i - 1][j]:
                    raise ValueError(f"NE violation at ({i},{j + 1})")
                if j + 1 < n and rows[i - 1][j] < rows[i][j + 1]:
                    raise ValueError(f"SE violation at ({i},{j + 1})")

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def m(self) -> int:
        return len(self.rows) - 1

    @property
    def top(self):
        return self.rows[0]

    @property
    def bottom(self):
        return self.rows[-1]

    def render(self) -> str:
        width = max(len(str(v)) for r in self.rows for v in r)
        lines = []
        for i, r in enumerate(self.rows):
            pad = " " * ((len(self.rows) - 1 - i) * (width + 1) // 2)
            lines.append(pad + " ".join(str(v).rjust(width) for v in r))
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])


def upsilon(x: SkewGTPattern) -> SkewTableau:
    """Tableau whose row j contains the letter i exactly x_{ij} - x_{(i-1)j}
    times; requires as many rows of letters as pattern steps (m = n)."""
    if any(v != int(v) for r in x.rows for v in r):
        raise ValueError("pattern must be integral")
    mu = as_partition(int(v) for v in x.bottom)
    gam = as_partition((int(v) for v in x.top), len(mu))
    rows = []
    for j in range(x.n):
        row = []
        for i in range(1, x.m + 1):
            row.extend([i] * int(x.rows[i][j] - x.rows[i - 1][j]))
        rows.append(tuple(row))
    return SkewTableau(SkewShape(mu, gam), tuple(rows))


def upsilon_inverse(t: SkewTableau, m=None) -> SkewGTPattern:
    """x_{ij} = (entries <= i in row j of t) + the inner baseline."""
    gam = t.shape.inner
    if m is None:
        m = t.shape.n_rows
    rows = [tuple(gam)]
    for i in range(1, m + 1):
        rows.append(
            tuple(
                gam[j] + sum(1 for v in t.rows[j] if v <= i)
                for j in range(t.shape.n_rows)
            )
        )
    return SkewGTPattern(tuple(rows))


def enumerate_flagged_gt_points(mu, gam, phi, limit=None):
    """Integral skew GT patterns with top gam, bottom mu and the flag
    equalities x_{nj} = ... = x_{Phi_j, j}."""
    mu = as_partition(mu)
    n = len(mu)
    gam = as_partition(gam, n)
    if len(phi) != n:
        raise ValueError("flag length must match ambient")
    if not contains(mu, gam):
        return []
    budget = _Budget(limit)
    rows = [list(gam)] + [[0] * n for _ in range(n)]
    rows[n] = list(mu)
    out = []

    def fill(i, j):
        if i == n:
            out.append(SkewGTPattern(tuple(tuple(r) for r in rows)))
            return
        if j == n:
            fill(i + 1, 0)
            return
        # interlacing with the row above, the column chain down to mu, and
        # (on the second-to-last row) interlacing with the fixed bottom row
        lo = rows[i - 1][j]
        if i == n - 1 and j + 1 < n:
            lo = max(lo, mu[j + 1])
        hi = mu[j]
        if j >= 1:
            hi = min(hi, rows[i - 1][j - 1])
        if i >= phi[j]:
            choices = (mu[j],) if lo <= mu[j] <= hi else ()
        else:
            choices = range(lo, hi + 1)
        for v in choices:
            budget.spend()
            rows[i][j] = v
            fill(i, j + 1)
        rows[i][j] = 0

    if n == 0:
        return [SkewGTPattern((gam,))]
    fill(1, 0)
    return out


# ---------------------------------------------------------------------------
# skew hive parallelogram
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SkewHive:
    """Labelling of the (n+1) x (n+1) parallelogram node grid.

    Boundary reads: left edge (top to bottom) the partial sums of lam;
    bottom edge those of mu shifted by |lam|; top edge those of gam; right
    edge those of nu shifted by |gam|.  All rhombus contents nonnegative.
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("node grid must be square")

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    def boundary(self):
        """Recover (lam, mu, gam, nu) by differencing the four edges."""
        n = self.n
        lam = tuple(self.rows[i + 1][0] - self.rows[i][0] for i in range(n))
        mu = tuple(self.rows[n][j + 1] - self.rows[n][j] for j in range(n))
        gam = tuple(self.rows[0][j + 1] - self.rows[0][j] for j in range(n))
        nu = tuple(self.rows[i + 1][n] - self.rows[i][n] for i in range(n))
        return lam, mu, gam, nu

    def render(self) -> str:
        width = max(len(str(v)) for r in self.rows for v in r)
        lines = []
        for i, r in enumerate(self.rows):
            pad = " " * (i * (width + 1) // 2)
            lines.append(pad + " ".join(str(v).rjust(width) for v in r))
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])


def skew_hive_contents(rows):
    """Yield (kind, (i, j), content) for every small rhombus.

    NE_{ij} (1<=i,j<=n) has acute corners (i-1,j) and (i,j-1);
    SE_{ij} (1<=i<=n, 1<=j<=n-1) acute (i-1,j-1) and (i,j+1);
    V_{ik} (1<=i<=n-1, 0<=k<=n-1) acute (i-1,k) and (i+1,k+1).
    """
    n = len(rows) - 1
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            yield "NE", (i, j), rows[i][j] + rows[i - 1][j - 1] - rows[i - 1][j] - rows[i][j - 1]
    for i in range(1, n + 1):
        for j in range(1, n):
            yield "SE", (i, j), rows[i - 1][j] + rows[i][j] - rows[i - 1][j - 1] - rows[i][j + 1]
    for i in range(1, n):
        for k in range(n):
            yield "V", (i, k), rows[i][k] + rows[i][k + 1] - rows[i - 1][k] - rows[i + 1][k + 1]


def skew_hive_boundary(lam, mu, gam, nu):
    """Fixed node values (only the boundary keys are present)."""
    n = len(lam)
    bl, bm, bg, bn = partial_sums(lam), partial_sums(mu), partial_sums(gam), partial_sums(nu)
    fixed = {}
    for i in range(n + 1):
        fixed[(i, 0)] = bl[i]
        fixed[(i, n)] = weight(gam) + bn[i]
    for j in range(n + 1):
        fixed[(0, j)] = bg[j]
        fixed[(n, j)] = weight(lam) + bm[j]
    return fixed


def check_skew_hive(rows, lam, mu, gam, nu, phi=None):
    """Every violated condition, as human-readable strings; empty means valid."""
    violations = []
    n = len(lam)
    if weight(lam) + weight(mu) != weight(gam) + weight(nu):
        violations.append(
            f"weight mismatch: |lam|+|mu|={weight(lam) + weight(mu)} "
            f"but |gam|+|nu|={weight(gam) + weight(nu)}"
        )
        return violations
    if len(rows) != n + 1 or any(len(r) != n + 1 for r in rows):
        violations.append(f"grid is not ({n + 1})x({n + 1})")
        return violations
    for (i, j), v in skew_hive_boundary(lam, mu, gam, nu).items():
        if rows[i][j] != v:
            violations.append(f"boundary node ({i},{j}) is {rows[i][j]}, expected {v}")
    flat = skew_flat_region(phi) if phi is not None else set()
    for kind, (i, j), c in skew_hive_contents(rows):
        if c < 0:
            violations.append(f"{kind} rhombus ({i},{j}) has negative content {c}")
        elif kind == "NE" and (i, j) in flat and c != 0:
            violations.append(f"NE rhombus ({i},{j}) must be flat but has content {c}")
    return violations


def validate_skew_hive(rows, lam, mu, gam, nu, phi=None) -> SkewHive:
    violations = check_skew_hive(rows, lam, mu, gam, nu, phi)
    if violations:
        raise HiveValidationError(violations)
    return SkewHive(tuple(tuple(r) for r in rows))


def skew_flat_region(phi):
    """NE rhombus indices forced flat by the flag: rows Phi_j+1..n in column j."""
    n = len(phi)
    return {(i, j) for j in range(1, n + 1) for i in range(phi[j - 1] + 1, n + 1)}


def hive_from_gt(x: SkewGTPattern, lam) -> tuple:
    """Cumulative-sum lift: h_{i0} runs over partial sums of lam and each row
    accumulates the pattern row.  NE/SE contents hold automatically; the
    vertical ones must be checked by the caller."""
    lam = as_partition(lam)
    if x.m != len(lam):
        raise ValueError("pattern depth must equal ambient length")
    bl = partial_sums(lam)
    rows = []
    for i in range(x.m + 1):
        row = [bl[i]]
        for j in range(x.n):
            row.append(row[-1] + x.rows[i][j])
        rows.append(tuple(row))
    return tuple(rows)


def gt_from_hive(rows) -> SkewGTPattern:
    """Row differences of the labels (the linear injection into GT patterns)."""
    return SkewGTPattern(
        tuple(
            tuple(r[j + 1] - r[j] for j in range(len(r) - 1))
            for r in rows
        )
    )


def enumerate_skew_hive_points(lam, mu, gam, nu, phi=None, limit=None):
    """All integral skew hives with the given boundary, optionally restricted
    to the flag face (every NE rhombus in the flat region has content zero).

    Backtracks node by node in row-major order; bounds for a free node come
    from the rhombus constraints among already-placed nodes plus the implied
    column bound (row differences never exceed the bottom boundary's)."""
    n = len(lam)
    if not len(mu) == len(gam) == len(nu) == n:
        raise ValueError("ambient lengths differ")
    if weight(lam) + weight(mu) != weight(gam) + weight(nu):
        raise ValueError("weight mismatch: |lam|+|mu| != |gam|+|nu|")
    if phi is not None:
        validate_flag(phi, n)
    fixed = skew_hive_boundary(lam, mu, gam, nu)
    flat = skew_flat_region(phi) if phi is not None else set()
    budget = _Budget(limit)
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    out = []

    def checks_ok(i, j):
        if i >= 1 and j >= 1:
            c = grid[i][j] + grid[i - 1][j - 1] - grid[i - 1][j] - grid[i][j - 1]
            if c < 0 or ((i, j) in flat and c != 0):
                return False
        if i >= 1 and 1 <= j - 1 <= n - 1:
            if grid[i - 1][j - 1] + grid[i][j - 1] - grid[i - 1][j - 2] - grid[i][j] < 0:
                return False
        if 1 <= i - 1 <= n - 1 and 0 <= j - 1 <= n - 1:
            if grid[i - 1][j - 1] + grid[i - 1][j] - grid[i - 2][j - 1] - grid[i][j] < 0:
                return False
        return True

    def fill(k):
        if k == (n + 1) * (n + 1):
            out.append(SkewHive(tuple(tuple(r) for r in grid)))
            return
        i, j = divmod(k, n + 1)
        if (i, j) in fixed:
            choices = (fixed[(i, j)],)
        else:
            lo = grid[i - 1][j] + grid[i][j - 1] - grid[i - 1][j - 1]
            hi = grid[i][j - 1] + mu[j - 1]
            if j >= 2:
                hi = min(hi, grid[i - 1][j - 1] + grid[i][j - 1] - grid[i - 1][j - 2])
            if i >= 2:
                hi = min(hi, grid[i - 1][j - 1] + grid[i - 1][j] - grid[i - 2][j - 1])
            if (i, j) in flat:
                choices = (lo,) if lo <= hi else ()
            else:
                choices = range(lo, hi + 1)
        for v in choices:
            budget.spend()
            grid[i][j] = v
            if checks_ok(i, j):
                fill(k + 1)
        grid[i][j] = 0

    fill(0)
    return out


# ---------------------------------------------------------------------------
# triangular hives and the doubling map
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriHive:
    """Labelling of the triangular node array: row i has nodes 0..i.

    Left edge reads the partial sums of alpha, bottom edge those of beta
    shifted by |alpha|, right edge (top to bottom) those of gamma."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) != i + 1 for i, r in enumerate(rows)):
            raise ValueError("row i must have i+1 nodes")

    @property
    def size(self) -> int:
        return len(self.rows) - 1

    def boundary(self):
        rows = self.rows
        nn = self.size
        alpha = tuple(rows[i + 1][0] - rows[i][0] for i in range(nn))
        beta = tuple(rows[nn][j + 1] - rows[nn][j] for j in range(nn))
        gam = tuple(rows[i + 1][i + 1] - rows[i][i] for i in range(nn))
        return alpha, beta, gam

    def render(self) -> str:
        width = max(len(str(v)) for r in self.rows for v in r)
        lines = []
        for i, r in enumerate(self.rows):
            pad = " " * ((self.size - i) * (width + 1) // 2)
            lines.append(pad + " ".join(str(v).rjust(width) for v in r))
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])


def tri_hive_contents(rows):
    """Yield (kind, (i, j), content) for the triangular array.

    NE R_{ij} (1<=j<=i<=N-1) uses rows i, i+1 with acute corners (i,j) and
    (i+1,j-1); SE_{ij} (1<=j<=i<=N-1) acute (i,j-1) and (i+1,j+1);
    V_{ik} (0<=k<=i<=N-2) acute (i,k) and (i+2,k+1).
    """
    big_n = len(rows) - 1
    for i in range(1, big_n):
        for j in range(1, i + 1):
            yield "NE", (i, j), rows[i][j - 1] + rows[i + 1][j] - rows[i][j] - rows[i + 1][j - 1]
    for i in range(1, big_n):
        for j in range(1, i + 1):
            yield "SE", (i, j), rows[i][j] + rows[i + 1][j] - rows[i][j - 1] - rows[i + 1][j + 1]
    for i in range(big_n - 1):
        for k in range(i + 1):
            yield "V", (i, k), rows[i + 1][k] + rows[i + 1][k + 1] - rows[i][k] - rows[i + 2][k + 1]


def tri_hive_boundary(alpha, beta, gam):
    nn = len(alpha)
    ba, bb, bg = partial_sums(alpha), partial_sums(beta), partial_sums(gam)
    fixed = {}
    for i in range(nn + 1):
        fixed[(i, 0)] = ba[i]
        fixed[(i, i)] = bg[i]
    for j in range(nn + 1):
        fixed[(nn, j)] = weight(alpha) + bb[j]
    return fixed


def tri_kogan_region(phi, big_n):
    """Kogan face: NE rhombi R_{ij} with Phi_j <= i <= N-1.

    Entries of phi beyond its length impose nothing (treated as N)."""
    region = set()
    for j in range(1, len(phi) + 1):
        for i in range(max(phi[j - 1], j), big_n):
            region.add((i, j))
    return region


def check_tri_hive(rows, alpha, beta, gam, phi=None):
    violations = []
    nn = len(alpha)
    if weight(alpha) + weight(beta) != weight(gam):
        violations.append(
            f"weight mismatch: |alpha|+|beta|={weight(alpha) + weight(beta)}"
            f" but |gamma|={weight(gam)}"
        )
        return violations
    if len(rows) != nn + 1 or any(len(r) != i + 1 for i, r in enumerate(rows)):
        violations.append(f"array is not triangular of size {nn}")
        return violations
    for (i, j), v in tri_hive_boundary(alpha, beta, gam).items():
        if rows[i][j] != v:
            violations.append(f"boundary node ({i},{j}) is {rows[i][j]}, expected {v}")
    region = tri_kogan_region(phi, nn) if phi is not None else set()
    for kind, (i, j), c in tri_hive_contents(rows):
        if c < 0:
            violations.append(f"{kind} rhombus ({i},{j}) has negative content {c}")
        elif kind == "NE" and (i, j) in region and c != 0:
            violations.append(f"NE rhombus ({i},{j}) must be flat but has content {c}")
    return violations


def validate_tri_hive(rows, alpha, beta, gam, phi=None) -> TriHive:
    violations = check_tri_hive(rows, alpha, beta, gam, phi)
    if violations:
        raise HiveValidationError(violations)
    return TriHive(tuple(tuple(r) for r in rows))


def enumerate_tri_hive_points(alpha, beta, gam, phi=None, limit=None):
    """All integral triangular hives with the given boundary, optionally on
    the Kogan face of a flag.  With no flag this counts the classical
    Littlewood-Richardson coefficient of (alpha, beta; gamma)."""
    alpha = as_partition(alpha)
    nn = len(alpha)
    beta = as_partition(beta, nn)
    gam = as_partition(gam, nn)
    if weight(alpha) + weight(beta) != weight(gam):
        raise ValueError("weight mismatch: |alpha|+|beta| != |gamma|")
    fixed = tri_hive_boundary(alpha, beta, gam)
    region = tri_kogan_region(phi, nn) if phi is not None else set()
    budget = _Budget(limit)
    grid = [[0] * (i + 1) for i in range(nn + 1)]
    cells = [(i, j) for i in range(nn + 1) for j in range(i + 1)]
    out = []

    def checks_ok(i, j):
        if 1 <= j <= i - 1:
            c = grid[i - 1][j - 1] + grid[i][j] - grid[i - 1][j] - grid[i][j - 1]
            if c < 0 or ((i - 1, j) in region and c != 0):
                return False
        if 2 <= j <= i:
            if grid[i - 1][j - 1] + grid[i][j - 1] - grid[i - 1][j - 2] - grid[i][j] < 0:
                return False
        if i >= 2 and 1 <= j <= i - 1:
            if grid[i - 1][j - 1] + grid[i - 1][j] - grid[i - 2][j - 1] - grid[i][j] < 0:
                return False
        return True

    def fill(k):
        if k == len(cells):
            out.append(TriHive(tuple(tuple(r) for r in grid)))
            return
        i, j = cells[k]
        if (i, j) in fixed:
            choices = (fixed[(i, j)],)
        else:
            lo = grid[i - 1][j] + grid[i][j - 1] - grid[i - 1][j - 1]
            hi = grid[i - 1][j - 1] + grid[i - 1][j] - grid[i - 2][j - 1]
            if j >= 2:
                hi = min(hi, grid[i - 1][j - 1] + grid[i][j - 1] - grid[i - 1][j - 2])
            if (i - 1, j) in region:
                choices = (lo,) if lo <= hi else ()
            else:
                choices = range(lo, hi + 1)
        for v in choices:
            budget.spend()
            grid[i][j] = v
            if checks_ok(i, j):
                fill(k + 1)
        grid[i][j] = 0

    fill(0)
    return out


def lift_tilde(lam, mu, gam, nu, phi):
    """Boundary data of the doubled triangular hive.

    Returns (lam~, mu~, nu~, phi~) in ambient 2n; the flag is padded with n
    copies of 2n, which imposes no flatness beyond the image of the skew
    flat region."""
    n = len(lam)
    if not len(mu) == len(gam) == len(nu) == n:
        raise ValueError("ambient lengths differ")
    if not contains(mu, gam) or not contains(nu, lam):
        raise ValueError("need gam inside mu and lam inside nu")
    if weight(lam) + weight(mu) != weight(gam) + weight(nu):
        raise ValueError("weight mismatch: |lam|+|mu| != |gam|+|nu|")
    validate_flag(phi, n)
    nu1 = nu[0] if nu else 0
    lam_t = as_partition((nu1,) * n + tuple(lam))
    mu_t = as_partition(tuple(mu) + (0,) * n)
    nu_t = as_partition(tuple(nu1 + g for g in gam) + tuple(nu))
    phi_t = tuple(p + n for p in phi) + (2 * n,) * n
    return lam_t, mu_t, nu_t, phi_t


def psi(h: SkewHive) -> TriHive:
    """Embed the parallelogram into the doubled triangle.

    The top n rows are forced by the constant head of the lifted left
    boundary, the bottom-left parallelogram carries the labels shifted by
    n*nu_1, and the bottom-right wedge replicates the right column."""
    n = h.n
    _, _, gam, nu = h.boundary()
    nu1 = nu[0] if nu else 0
    bg = partial_sums(gam)
    rows = []
    for i in range(n):
        rows.append(tuple(i * nu1 + bg[j] for j in range(i + 1)))
    for i in range(n, 2 * n + 1):
        rows.append(
            tuple(n * nu1 + h.rows[i - n][min(j, n)] for j in range(i + 1))
        )
    return TriHive(tuple(rows))


def psi_inverse(t: TriHive) -> SkewHive:
    """Extract the parallelogram labels back out of the doubled triangle."""
    if t.size % 2:
        raise ValueError("triangle size must be even")
    n = t.size // 2
    nu1 = t.rows[1][0] if n else 0
    rows = tuple(
        tuple(t.rows[n + i][j] - n * nu1 for j in range(n + 1))
        for i in range(n + 1)
    )
    return SkewHive(rows)


def scale_labels(rows, k: int):
    """Dilate a labelling by the stretch factor k."""
    return tuple(tuple(k * v for v in r) for r in rows)

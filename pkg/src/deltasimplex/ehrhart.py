"""Brute-force lattice-point counting in dilates of a simplex.

This is the independent ground truth for delta-vectors: count points of the
dilates, extract the delta-vector by the alternating binomial transform, and
check the interior/closed count reciprocity. Nothing here shares code with
the parallelepiped-group path.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .lattice import Simplex, adjugate, mat_vec, row_hermite_form

DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """Estimated work exceeds the caller's budget; carries the estimate."""

    def __init__(self, estimate: int, budget: int):
        super().__init__(f"estimated {estimate} bounding-box cells exceeds budget {budget}")
        self.estimate = estimate
        self.budget = budget


def cell_estimate(s: Simplex, n: int) -> int:
    """Bounding-box cell count of the n-th dilate (the budgeted work estimate)."""
    cells = 1
    for k in range(s.dim):
        coords = [v[k] for v in s.vertices]
        cells *= n * (max(coords) - min(coords)) + 1
    return cells


class _CountingFrame:
    """Per-simplex data for membership counting.

    A unimodular change of coordinates makes the edge matrix upper triangular,
    so the scaled barycentric coordinates y = adj(H) @ (x - n*c) resolve one
    ambient coordinate at a time; membership needs y >= 0 with sum(y) <= n*det.
    """

    def __init__(self, s: Simplex):
        w, h = row_hermite_form(s.edge_matrix())
        self.dim = s.dim
        self.det = 1
        for i in range(s.dim):
            self.det *= h[i][i]
        self.adj = adjugate(h)  # upper triangular, positive diagonal
        self.origin = mat_vec(w, s.vertices[0])


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _count_level(frame, level, affine, used, total_budget, q):
    """Count integer points below `level` given fixed outer coordinates.

    `affine[k]` holds the affine part of y_k accumulated so far; `used` is the
    sum of the y values already fixed. Levels are processed from dim-1 down to
    0, matching the upper-triangular adjugate.
    """
    adj = frame.adj
    pivot = adj[level][level]
    low = _ceil_div(q - affine[level], pivot)
    high = (total_budget - used - level * q - affine[level]) // pivot
    if level == 0:
        return high - low + 1 if high >= low else 0
    count = 0
    for x in range(low, high + 1):
        y = affine[level] + pivot * x
        inner = [affine[i] + adj[i][level] * x for i in range(level)]
        count += _count_level(frame, level - 1, inner, used + y, total_budget, q)
    return count


def count_lattice_points(
    s: Simplex,
    n: int,
    interior: bool = False,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> int:
    """Exact number of lattice points in the n-th dilate (interior points if asked)."""
    if n < 1:
        raise ValueError("dilation factor must be >= 1")
    estimate = cell_estimate(s, n)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)
    frame = _CountingFrame(s)
    return _count_dilate(frame, n, interior, threads)


def _count_dilate(frame, n, interior, threads=1):
    d = frame.dim
    q = 1 if interior else 0
    total_budget = n * frame.det - q
    shift = [-n * c for c in frame.origin]
    affine = [sum(frame.adj[i][j] * shift[j] for j in range(d)) for i in range(d)]
    level = d - 1
    if d == 1 or threads <= 1:
        return _count_level(frame, level, affine, 0, total_budget, q)

    pivot = frame.adj[level][level]
    low = _ceil_div(q - affine[level], pivot)
    high = (total_budget - level * q - affine[level]) // pivot
    if high < low:
        return 0

    def slab(x):
        y = affine[level] + pivot * x
        inner = [affine[i] + frame.adj[i][level] * x for i in range(level)]
        return _count_level(frame, level - 1, inner, y, total_budget, q)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(slab, range(low, high + 1)))


@dataclass(frozen=True)
class EhrhartTable:
    """Counts of the dilates: closed for n = 0..d+1, interior for n = 1..d+1."""

    simplex: Simplex
    counts: tuple[int, ...]
    interior_counts: tuple[int, ...]

    def __post_init__(self):
        d = self.simplex.dim
        assert len(self.counts) == d + 2 and len(self.interior_counts) == d + 1
        assert self.counts[0] == 1
        assert all(self.counts[i] < self.counts[i + 1] for i in range(d + 1))
        assert all(
            self.interior_counts[i] <= self.counts[i + 1] for i in range(d + 1)
        )


def ehrhart_table(s: Simplex, budget: int = DEFAULT_BUDGET, threads: int = 1) -> EhrhartTable:
    """Count closed and interior lattice points of the dilates n = 0..d+1."""
    d = s.dim
    estimate = cell_estimate(s, d + 1)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)
    frame = _CountingFrame(s)
    counts = (1,) + tuple(_count_dilate(frame, n, False, threads) for n in range(1, d + 2))
    interior = tuple(_count_dilate(frame, n, True, threads) for n in range(1, d + 2))
    return EhrhartTable(s, counts, interior)


def ehrhart_delta(s: Simplex, budget: int = DEFAULT_BUDGET, threads: int = 1) -> tuple[int, ...]:
    """Delta-vector from dilate counts via the alternating binomial transform."""
    d = s.dim
    estimate = cell_estimate(s, d)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)
    frame = _CountingFrame(s)
    counts = [1] + [_count_dilate(frame, n, False, threads) for n in range(1, d + 1)]
    delta = tuple(
        sum((-1) ** j * comb(d + 1, j) * counts[i - j] for j in range(i + 1))
        for i in range(d + 1)
    )
    assert delta[0] == 1 and all(x >= 0 for x in delta)
    assert sum(delta) == s.normalized_volume
    return delta


def interpolate_at(values, x: int) -> Fraction:
    """Evaluate the polynomial through (i, values[i]) for i = 0..len-1 at x (Lagrange)."""
    total = Fraction(0)
    k = len(values)
    for i, y in enumerate(values):
        term = Fraction(y)
        for j in range(k):
            if j != i:
                term *= Fraction(x - j, i - j)
        total += term
    return total


def leading_coefficient(s: Simplex, budget: int = DEFAULT_BUDGET) -> Fraction:
    """Leading coefficient of the dilate-count polynomial (finite differences)."""
    table = ehrhart_table(s, budget=budget)
    d = s.dim
    top = sum((-1) ** (d - k) * comb(d, k) * table.counts[k] for k in range(d + 1))
    denom = 1
    for i in range(2, d + 1):
        denom *= i
    return Fraction(top, denom)


@dataclass(frozen=True)
class ReciprocityReport:
    """Verdict for interior(n) == (-1)^d closed(-n) over n = 1..d+1."""

    ok: bool
    first_mismatch: tuple[int, int, int] | None
    table: EhrhartTable


def reciprocity_check(s: Simplex, budget: int = DEFAULT_BUDGET, threads: int = 1) -> ReciprocityReport:
    """Compare directly counted interior points against the negated polynomial values.

    The closed-count polynomial is interpolated exactly from n = 0..d and
    evaluated at -n with rational arithmetic.
    """
    d = s.dim
    table = ehrhart_table(s, budget=budget, threads=threads)
    nodes = table.counts[: d + 1]
    for n in range(1, d + 2):
        value = interpolate_at(nodes, -n) * (-1) ** d
        assert value.denominator == 1
        expected = table.interior_counts[n - 1]
        if value != expected:
            return ReciprocityReport(False, (n, expected, int(value)), table)
    return ReciprocityReport(True, None, table)

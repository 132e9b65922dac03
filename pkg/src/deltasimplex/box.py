"""Lattice points of the half-open parallelepiped over a simplex's homogenized vertices.

These points form a finite abelian group under coordinate-wise fractional
addition of their coefficient vectors; counting them by degree yields the
delta-vector.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .lattice import Simplex, smith_normal_form


@dataclass(frozen=True)
class BoxPoint:
    """One parallelepiped point, written as coefficients over the group denominator.

    The coefficient of vertex i is numerators[i] / denominator, in [0, 1).
    The degree is the (integral) sum of the coefficients.
    """

    simplex: Simplex = field(repr=False)
    numerators: tuple[int, ...]
    denominator: int
    degree: int

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.denominator) for n in self.numerators)

    def is_identity(self) -> bool:
        return all(n == 0 for n in self.numerators)


@dataclass(frozen=True)
class BoxGroup:
    """All parallelepiped points of one simplex, in canonical (lexicographic) order."""

    simplex: Simplex
    denominator: int
    points: tuple[BoxPoint, ...]

    @property
    def identity(self) -> BoxPoint:
        return self.points[0]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def enumerate_box(s: Simplex) -> BoxGroup:
    """Enumerate the parallelepiped group of a simplex.

    The coefficient vectors r with sum_i r_i (v_i, 1) integral form a lattice
    between Z^(d+1) and its rational superlattice; the Smith normal form of
    the transposed homogenized vertex matrix gives generators of the quotient,
    whose order equals the normalized volume.
    """
    d = s.dim
    vol = s.normalized_volume
    hom = s.homogeneous_matrix()
    transposed = tuple(tuple(hom[i][j] for i in range(d + 1)) for j in range(d + 1))
    snf = smith_normal_form(transposed)
    den = snf.diagonal[-1]

    generators = []
    for j, order in enumerate(snf.diagonal):
        if order == 1:
            continue
        scale = den // order
        column = tuple(snf.right[i][j] * scale % den for i in range(d + 1))
        generators.append((column, order))

    seen = set()
    for combo in product(*(range(order) for _, order in generators)):
        nums = [0] * (d + 1)
        for (column, _), k in zip(generators, combo):
            if k:
                for i in range(d + 1):
                    nums[i] = (nums[i] + k * column[i]) % den
        seen.add(tuple(nums))
    assert len(seen) == vol  # group order must equal the normalized volume

    points = []
    for nums in sorted(seen):
        total = sum(nums)
        assert total % den == 0
        degree = total // den
        assert 0 <= degree <= d
        points.append(BoxPoint(s, nums, den, degree))
    assert points[0].is_identity() and points[0].degree == 0
    return BoxGroup(s, den, tuple(points))


def box_add(a: BoxPoint, b: BoxPoint) -> BoxPoint:
    """Group operation: coordinate-wise fractional addition of coefficients."""
    if a.simplex != b.simplex or a.denominator != b.denominator:
        raise ValueError("box points belong to different groups")
    den = a.denominator
    nums = tuple((x + y) % den for x, y in zip(a.numerators, b.numerators))
    total = sum(nums)
    assert total % den == 0
    return BoxPoint(a.simplex, nums, den, total // den)


def box_inverse(a: BoxPoint) -> BoxPoint:
    """Group inverse: each coefficient r maps to the fractional part of 1 - r."""
    den = a.denominator
    nums = tuple(-x % den for x in a.numerators)
    total = sum(nums)
    assert total % den == 0
    return BoxPoint(a.simplex, nums, den, total // den)


def delta_from_box(s: Simplex) -> tuple[int, ...]:
    """Delta-vector of a simplex: entry i counts parallelepiped points of degree i."""
    group = enumerate_box(s)
    delta = [0] * (s.dim + 1)
    for point in group.points:
        delta[point.degree] += 1
    assert delta[0] == 1 and sum(delta) == s.normalized_volume
    return tuple(delta)

"""Classification of delta-vectors with normalized volume 5 or 7.

Admissibility is the pairing constraint plus superadditivity of the
exponents; for these two volumes every admissible vector is realized by an
explicit member of the one-row Hermite family, constructed case by case from
the multiplicity pattern of the exponents. An exhaustive search over
triangular vertex matrices provides the ground truth at small dimension.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement, groupby, product

from .box import delta_from_box
from .constraints import (
    CheckReport,
    ExponentList,
    check_pairing,
    check_superadditive,
    delta_from_exponents,
    exponents,
    is_prime,
    reduced_pairs,
)
from .ehrhart import DEFAULT_BUDGET, BudgetExceededError
from .hnf import HNFSpec, closed_form_delta
from .lattice import Simplex

_PATTERN_CASES = {
    5: {
        (4,): "i",
        (2, 2): "ii",
        (1, 2, 1): "iii",
        (1, 1, 1, 1): "iv",
    },
    7: {
        (6,): "i",
        (3, 3): "ii",
        (1, 4, 1): "iii",
        (2, 2, 2): "iv",
        (1, 2, 2, 1): "v",
        (2, 1, 1, 2): "vi",
        (1, 1, 2, 1, 1): "vii",
        (1, 1, 1, 1, 1, 1): "viii",
    },
}


@dataclass(frozen=True)
class CaseId:
    """Which multiplicity-pattern case an exponent list falls into.

    `branch` is only set for the all-distinct volume-7 case: the sign of
    i_1 + i_3 - 2*i_2, which selects between the two witness formulas.
    """

    p: int
    label: str
    branch: int | None = None


@dataclass(frozen=True)
class Witness:
    """A family spec whose closed-form delta-vector equals the requested one."""

    spec: HNFSpec
    case: CaseId
    delta: tuple[int, ...]


def admissible(delta, p: int) -> CheckReport:
    """Combined pairing + superadditivity verdict for volume 5 or 7.

    Superadditivity is checked on the reduced pair set, which is equivalent
    to the full set once the pairing equalities hold. Violations merge both
    sub-checks' index pairs.
    """
    if p not in (5, 7):
        raise ValueError("classification covers volumes 5 and 7 only")
    e = exponents(delta)
    if e.m != p:
        raise ValueError(f"delta-vector sums to {e.m}, expected {p}")
    pairing = check_pairing(e)
    superadd = check_superadditive(e, pairs=reduced_pairs(p))
    return CheckReport(
        "admissible",
        pairing.ok and superadd.ok,
        pairing.violations + superadd.violations,
    )


def classify_case(e: ExponentList) -> CaseId:
    """Case of an admissible exponent list, from its multiplicity pattern."""
    p = e.m
    if p not in _PATTERN_CASES:
        raise ValueError("classification covers volumes 5 and 7 only")
    pattern = tuple(len(list(run)) for _, run in groupby(e.values))
    label = _PATTERN_CASES[p].get(pattern)
    if label is None:
        raise ValueError(f"no case matches multiplicity pattern {pattern}")
    branch = None
    if label == "viii":
        i1, i2, i3 = e.values[0], e.values[1], e.values[2]
        diff = i1 + i3 - 2 * i2
        branch = (diff > 0) - (diff < 0)
    return CaseId(p, label, branch)


def _coefficients_vol5(label: str, vals) -> tuple[int, ...]:
    i1, i2, i3, i4 = vals
    if label == "i":
        return (0, i1 - 1, i1 - 1, 0)
    if label == "ii":
        i, j = i1, i3
        return (0, i, 2 * i - j, 2 * j - 2 * i - 2)
    if label == "iii":
        i, j = i1, i2
        return (0, 2 * i - j, i, 3 * j - 3 * i - 2)
    return (0, 2 * i1 - i2, i1 + i2 - i3, i2 + 2 * i3 - 3 * i1 - 2)


def _coefficients_vol7(label: str, vals, branch) -> tuple[int, ...]:
    i1, i2, i3, i4, i5, i6 = vals
    if label == "i":
        return (0, 0, i1 - 1, i1 - 1, 0, 0)
    if label == "ii":
        i, j = i1, i4
        return (0, j - i, 2 * i - j, 2 * i - j, 0, 2 * j - 2 * i - 2)
    if label == "iii":
        i, j, k = i1, i2, i6
        return (i + j - k, k - j, k - i - 1, 0, 0, i - 1)
    if label == "iv":
        i, j, k = i1, i3, i5
        return (0, 0, i - 1, i + j - k, 0, 3 * k - 3 * j - 1)
    if label == "v":
        k1, k2, k3 = i1, i2, i4
        return (0, 2 * k1 - k2, 0, k2 - k1, k1 + k2 - k3, 2 * k3 - 2 * k1 - 2)
    if label == "vi":
        k1, k2, k3 = i1, i3, i4
        return (0, k3 - k2 - 1, k1 + k2 - k3, 2 * k1 - k3, 0, k2 + 2 * k3 - 3 * k1 - 1)
    if label == "vii":
        k1, k2, k3 = i1, i2, i3
        return (0, 0, 2 * k1 - k2, k1 + k2 - k3, k2 - k1, 3 * k3 - 2 * k1 - k2 - 2)
    if branch >= 0:
        return (
            0,
            i1 + i2 - i3,
            i1 + i3 - 2 * i2,
            0,
            2 * i2 - i4,
            i3 + 2 * i4 - 2 * i1 - i2 - 2,
        )
    return (
        0,
        2 * i1 - i2,
        0,
        2 * i2 - i1 - i3,
        i1 + i3 - i4,
        i3 + 2 * i4 - 2 * i1 - i2 - 2,
    )


def witness(delta, p: int) -> Witness:
    """Construct a family member realizing an admissible delta-vector.

    The construction self-verifies: the instantiated coefficients must be
    nonnegative, fit the carried dimension, and reproduce the requested
    vector through the closed form.
    """
    verdict = admissible(delta, p)
    if not verdict.ok:
        raise ValueError(f"delta-vector is not admissible: violations {verdict.violations}")
    e = exponents(delta)
    case = classify_case(e)
    if p == 5:
        coeffs = _coefficients_vol5(case.label, e.values)
    else:
        coeffs = _coefficients_vol7(case.label, e.values, case.branch)
    assert all(c >= 0 for c in coeffs)
    spec = HNFSpec(p, coeffs, e.dim)
    produced = closed_form_delta(spec)
    assert produced == tuple(int(x) for x in delta)
    return Witness(spec, case, produced)


def enumerate_admissible(p: int, d: int, shards: int = 1) -> list[Witness]:
    """All admissible delta-vectors with volume p and dimension d, each with a witness.

    `shards` splits the candidate stream round-robin into independently
    processed parts; the merged, sorted result never depends on it.
    """
    if p not in (5, 7):
        raise ValueError("classification covers volumes 5 and 7 only")
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if shards < 1:
        raise ValueError("need shards >= 1")
    pairs = reduced_pairs(p)
    shard_results = [[] for _ in range(shards)]
    for index, vals in enumerate(combinations_with_replacement(range(1, d + 1), p - 1)):
        constant = vals[0] + vals[-1]
        if constant > d + 1:
            continue
        if any(vals[k - 1] + vals[p - k - 1] != constant for k in range(2, (p - 1) // 2 + 1)):
            continue
        if any(vals[k - 1] + vals[l - 1] < vals[k + l - 1] for k, l in pairs):
            continue
        shard_results[index % shards].append(
            witness(delta_from_exponents(ExponentList(vals, d)), p)
        )
    results = [w for shard in shard_results for w in shard]
    results.sort(key=lambda w: w.delta)
    return results


def counterexample_family(p: int, ell: int) -> tuple[int, ...]:
    """Vector (1, 0, ell, 0, 1...1, 0, ell, 0) of volume p and dimension p - 2*ell + 5.

    Passes the pairing and both exponent-form bounds, yet fails
    superadditivity, so the latter is genuinely needed.
    """
    if not is_prime(p) or p < 7:
        raise ValueError("need a prime p >= 7")
    middle = p - 2 * ell - 1
    if ell < 1 or middle < 0:
        raise ValueError("need 1 <= ell <= (p - 1) / 2")
    return (1, 0, ell, 0) + (1,) * middle + (0, ell, 0)


def _ordered_factorizations(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for divisor in range(1, n + 1):
        if n % divisor == 0:
            for rest in _ordered_factorizations(n // divisor, parts - 1):
                yield (divisor,) + rest


def iter_hnf_matrices(d: int, vol: int):
    """All d x d lower-triangular vertex matrices of determinant vol, one per class.

    Diagonal entries are positive with product vol; the entries left of each
    diagonal entry run over [0, that diagonal entry). Every full-dimensional
    lattice simplex with a vertex at the origin is equivalent, under a
    unimodular change of ambient coordinates, to the hull of the origin and
    the rows of exactly one such matrix.
    """
    for diag in _ordered_factorizations(vol, d):
        ranges = [range(diag[i]) for i in range(d) for _ in range(i)]
        for flat in product(*ranges):
            rows = []
            pos = 0
            for i in range(d):
                row = list(flat[pos : pos + i]) + [diag[i]] + [0] * (d - i - 1)
                pos += i
                rows.append(tuple(row))
            yield tuple(rows)


def iter_hnf_simplices(d: int, vol: int):
    origin = tuple([0] * d)
    for rows in iter_hnf_matrices(d, vol):
        yield Simplex((origin,) + rows)


def exhaustive_search(
    d: int, vol: int, budget: int = DEFAULT_BUDGET, shards: int = 1
) -> tuple[tuple[int, ...], ...]:
    """Ground truth: the set of delta-vectors over all matrices from `iter_hnf_matrices`.

    Returned sorted. `shards` partitions the stream round-robin into
    independent parts whose results are merged by union, so the output never
    depends on the shard count.
    """
    if d < 1 or vol < 1:
        raise ValueError("need d >= 1 and vol >= 1")
    if shards < 1:
        raise ValueError("need shards >= 1")
    estimate = d * vol ** (d - 1)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)
    shard_sets = [set() for _ in range(shards)]
    for index, simplex in enumerate(iter_hnf_simplices(d, vol)):
        shard_sets[index % shards].add(delta_from_box(simplex))
    return tuple(sorted(set().union(*shard_sets)))

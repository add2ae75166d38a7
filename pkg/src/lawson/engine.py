"""Evaluation engine: from variety expressions to rank tables.

Each constructor in :mod:`lawson.varieties` has a table builder here that
implements the corresponding structure theorem:

* cellular varieties (point, projective space, affine space, explicit cell
  lists, smooth toric varieties, Hilbert schemes of points on surfaces) have
  rank tables that are constant down each column, equal to the cell counts
  or to generating-function coefficients;
* the torus has a closed-form table, reproducible by iterating the two-term
  splitting for a product with the punctured affine line;
* suspensions shift the table down one cycle dimension and two degrees;
* products with a cellular factor, cellular fiber bundles, and
  fixed-component decompositions are shifted direct sums;
* symmetric products specialize to rational coefficients through the
  MacDonald product.

The split quadric deliberately has two independent routes: a closed form
here, and its fixed-component decomposition into two projective spaces.
``run_checks`` replays those dual routes (and the other cross-checks) as a
built-in oracle suite.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .grading import (
    BiGradedTable,
    ChiProfile,
    Coefficients,
    binomial,
    chi_profile,
    euler_chi,
    rank_at,
    shift_and_sum,
)
from .series import cheah_series, macdonald_series
from .varieties import (
    AffineSpace,
    Cellular,
    CellularFiberBundle,
    Decomposition,
    FixedComponent,
    HilbertScheme,
    Point,
    Product,
    ProjectiveSpace,
    SingularHypersurface,
    Smoothness,
    SplitQuadric,
    Suspension,
    SymmetricProduct,
    Toric,
    Torus,
    ValidationError,
    VarietyAttributes,
    VarietyExpr,
    render,
    smooth_toric_betti,
    validate,
)


class UnsupportedQueryError(ValueError):
    """A valid expression whose requested answer is beyond the known theorems."""


@dataclass(frozen=True)
class EvaluationResult:
    """A fully evaluated expression: canonical text, attributes, and table."""

    expr_text: str
    attributes: VarietyAttributes
    table: BiGradedTable

    def __post_init__(self) -> None:
        a, t = self.attributes, self.table
        if (t.dim, t.proper, t.coefficients) != (a.dim, a.proper, a.coefficients):
            raise ValueError(
                "evaluation produced a table inconsistent with the validated attributes"
            )


# ---------------------------------------------------------------------------
# table builders


def cellular_table(cells: Iterable[int], proper: bool = True) -> BiGradedTable:
    """Table of a variety with cells of the given dimensions: every group in
    degree k = 2m has rank equal to the number of m-cells, independent of r."""
    cell_list = tuple(cells)
    if not cell_list:
        raise ValueError("the cell list must be nonempty")
    if any(c < 0 for c in cell_list):
        raise ValueError("cell dimensions must be nonnegative")
    ranks: dict[tuple[int, int], int] = {}
    for m, count in Counter(cell_list).items():
        for r in range(m + 1):
            ranks[(r, 2 * m)] = count
    return BiGradedTable(max(cell_list), proper, Coefficients.INTEGER, ranks)


def torus_table(n: int) -> BiGradedTable:
    """Closed-form table of the split torus (C*)^n: rank C(n, k - n) when
    k >= r + n and zero below that line.  Non-proper, so the ranks are of
    Borel-Moore flavor."""
    if n < 1:
        raise ValueError("the torus requires a positive dimension")
    ranks: dict[tuple[int, int], int] = {}
    for r in range(n + 1):
        for k in range(max(2 * r, r + n), 2 * n + 1):
            ranks[(r, k)] = binomial(n, k - n)
    return BiGradedTable(n, False, Coefficients.INTEGER, ranks)


def _cstar_split(table: BiGradedTable) -> BiGradedTable:
    # Core of the two-term splitting for X x C*: the (r, k) rank is
    # rank(r-1, k-2) + rank(r, k-1), terms below the Lawson range vanishing.
    n = table.dim + 1
    ranks: dict[tuple[int, int], int] = {}
    for r in range(n + 1):
        for k in range(2 * r, 2 * n + 1):
            value = rank_at(table, r - 1, k - 2)
            if k - 1 >= 2 * r:
                value += rank_at(table, r, k - 1)
            if value:
                ranks[(r, k)] = value
    return BiGradedTable(n, False, table.coefficients, ranks)


def cstar_product(table: BiGradedTable) -> BiGradedTable:
    """Table of X x C* from the table of a projective X, via the splitting
    rank(r, k) = rank_X(r-1, k-2) + rank_X(r, k-1)."""
    if not table.proper:
        raise ValueError("the splitting is stated for a projective factor")
    return _cstar_split(table)


def suspend(table: BiGradedTable) -> BiGradedTable:
    """Table of the algebraic suspension of a projective variety with
    integral table: row r >= 1 is row r-1 shifted up two degrees, and row 0
    restarts with a single class in degree 0."""
    if not table.proper:
        raise ValueError("suspension requires a projective variety")
    if table.coefficients is not Coefficients.INTEGER:
        raise ValueError("suspension requires integer coefficients")
    n = table.dim + 1
    ranks: dict[tuple[int, int], int] = {(0, 0): 1}
    for k in range(2, 2 * n + 1):
        value = rank_at(table, 0, k - 2)
        if value:
            ranks[(0, k)] = value
    for r in range(1, n + 1):
        for k in range(2 * r, 2 * n + 1):
            value = rank_at(table, r - 1, k - 2)
            if value:
                ranks[(r, k)] = value
    return BiGradedTable(n, True, Coefficients.INTEGER, ranks)


def decompose(components: Sequence[FixedComponent]) -> BiGradedTable:
    """Assemble a table from the fixed components of a C*-action: component
    (F, s) contributes its table shifted by s in cycle dimension and 2s in
    degree.  All components must be projective with integer coefficients."""
    fixed = tuple(components)
    if not fixed:
        raise ValueError("a decomposition needs at least one component")
    summands = []
    for part in fixed:
        if part.shift < 0:
            raise ValidationError("component shifts must be nonnegative")
        result = evaluate(part.component)
        if not result.table.proper:
            raise ValidationError("decomposition components must be projective")
        if result.table.coefficients is not Coefficients.INTEGER:
            raise UnsupportedQueryError(
                "decomposition components must carry integer coefficients"
            )
        summands.append((result.table, part.shift))
    target = max(table.dim + shift for table, shift in summands)
    return shift_and_sum(summands, target, proper=True)


def fiber_bundle_table(
    base: BiGradedTable, fiber_cells: Iterable[int], proper: bool | None = None
) -> BiGradedTable:
    """Table of a Zariski-locally trivial bundle with cellular fibers: one
    shifted copy of the base table per fiber cell.  Properness follows the
    base unless overridden, as when the cells come from a non-proper product
    factor."""
    cells = tuple(fiber_cells)
    if not cells:
        raise ValueError("the fiber needs at least one cell")
    if any(c < 0 for c in cells):
        raise ValueError("fiber cell dimensions must be nonnegative")
    target = base.dim + max(cells)
    flag = base.proper if proper is None else proper
    return shift_and_sum([(base, c) for c in cells], target, flag)


def quadric_table(d: int) -> BiGradedTable:
    """Closed-form table of the split quadric of dimension 2d: rank 2 in the
    middle degree k = 2d, rank 1 in every other even degree, on every
    admissible row.  Kept independent of :func:`decompose` on purpose so the
    two routes can check each other."""
    if d < 1:
        raise ValueError("the split quadric requires d >= 1")
    n = 2 * d
    ranks: dict[tuple[int, int], int] = {}
    for k in range(0, 2 * n + 1, 2):
        value = 2 if k == 2 * d else 1
        for r in range(k // 2 + 1):
            ranks[(r, k)] = value
    return BiGradedTable(n, True, Coefficients.INTEGER, ranks)


def toric_smooth_table(cone_counts: Sequence[int]) -> BiGradedTable:
    """Table of a smooth proper toric variety from its cone counts, through
    the alternating-sum Betti numbers; constant down each column."""
    counts = tuple(cone_counts)
    if not counts:
        raise ValidationError("cone counts must be nonempty")
    if counts[0] != 1:
        raise ValidationError("d_0 must be 1: the zero cone is unique")
    betti = smooth_toric_betti(counts)
    ranks: dict[tuple[int, int], int] = {}
    for m, b in enumerate(betti):
        if b:
            for r in range(m + 1):
                ranks[(r, 2 * m)] = b
    return BiGradedTable(len(counts) - 1, True, Coefficients.INTEGER, ranks)


def hilb_table(b2: int, d: int) -> BiGradedTable:
    """Table of the Hilbert scheme of d points on a simply connected surface
    with middle Betti number b2: the degree-k rank is the z^k t^d Cheah
    coefficient, on every admissible row."""
    if d < 1:
        raise ValueError("the Hilbert scheme requires d >= 1")
    if b2 < 0:
        raise ValueError("the middle Betti number must be nonnegative")
    series = cheah_series(b2, d)
    ranks: dict[tuple[int, int], int] = {}
    for k in range(0, 4 * d + 1):
        value = series.coefficient(k, d)
        if value:
            for r in range(k // 2 + 1):
                ranks[(r, k)] = value
    return BiGradedTable(2 * d, True, Coefficients.INTEGER, ranks)


def sp_table(
    inner_profile: Iterable[int], d: int, proper: bool = True
) -> BiGradedTable:
    """Rational table of the d-th symmetric product of a cellular variety
    with the given cell profile, through the MacDonald product."""
    cells = tuple(inner_profile)
    if not cells:
        raise ValueError("the cell profile must be nonempty")
    if any(c < 0 for c in cells):
        raise ValueError("cell dimensions must be nonnegative")
    if d < 1:
        raise ValueError("a symmetric product requires d >= 1")
    # The MacDonald product needs a class in degree zero, so profiles with a
    # positive minimal cell are reduced by that minimum and the degrees
    # shifted back afterwards: a size-d multiset gains exactly d copies of
    # the common offset.
    base = min(cells)
    top = max(cells)
    counts = Counter(c - base for c in cells)
    betti = [counts.get(i, 0) for i in range(top - base + 1)]
    series = macdonald_series(betti, d)
    n = d * top
    offset = 2 * d * base
    ranks: dict[tuple[int, int], int] = {}
    for k in range(0, 2 * d * (top - base) + 1):
        value = series.coefficient(k, d)
        if value:
            for r in range((k + offset) // 2 + 1):
                ranks[(r, k + offset)] = value
    return BiGradedTable(n, proper, Coefficients.RATIONAL, ranks)


# ---------------------------------------------------------------------------
# evaluation


def evaluate(expr: VarietyExpr) -> EvaluationResult:
    """Validate an expression and build its rank table.

    Simplicial and general toric descriptions are rejected here with an
    unsupported-query error: only their Euler profiles are computable, via
    :func:`euler_profile` or :func:`chi_toric`.  Suspensions and
    decompositions of rational-coefficient expressions are likewise
    unsupported, since those two rules are stated integrally.
    """
    attributes = validate(expr)
    table = _build_table(expr, attributes)
    return EvaluationResult(render(expr), attributes, table)


def _build_table(expr: VarietyExpr, attributes: VarietyAttributes) -> BiGradedTable:
    if isinstance(expr, Point):
        return cellular_table((0,))
    if isinstance(expr, ProjectiveSpace):
        return cellular_table(range(expr.n + 1))
    if isinstance(expr, AffineSpace):
        return cellular_table((expr.n,), proper=False)
    if isinstance(expr, Cellular):
        return cellular_table(expr.cells, proper=expr.proper)
    if isinstance(expr, Torus):
        return torus_table(expr.n)
    if isinstance(expr, (SplitQuadric, SingularHypersurface)):
        return quadric_table(expr.d)
    if isinstance(expr, Toric):
        if expr.smoothness is not Smoothness.SMOOTH:
            raise UnsupportedQueryError(
                "unsupported full-table query: only the chi profile is computable "
                "from simplicial or general cone counts; use `chi`"
            )
        return toric_smooth_table(expr.cone_counts)
    if isinstance(expr, Suspension):
        inner = evaluate(expr.inner).table
        if inner.coefficients is not Coefficients.INTEGER:
            raise UnsupportedQueryError(
                "unsupported full-table query: the suspension rule is stated "
                "for integer coefficients"
            )
        return suspend(inner)
    if isinstance(expr, Product):
        base, fiber_cells = _product_as_bundle(expr)
        return fiber_bundle_table(
            evaluate(base).table, fiber_cells, proper=attributes.proper
        )
    if isinstance(expr, CellularFiberBundle):
        return fiber_bundle_table(evaluate(expr.base).table, expr.fiber_cells)
    if isinstance(expr, Decomposition):
        return decompose(expr.components)
    if isinstance(expr, SymmetricProduct):
        profile = validate(expr.inner).cell_profile
        return sp_table(profile, expr.d, proper=attributes.proper)
    if isinstance(expr, HilbertScheme):
        return hilb_table(expr.b2, expr.d)
    raise TypeError(f"not a variety expression: {expr!r}")


def _product_as_bundle(expr: Product) -> tuple[VarietyExpr, tuple[int, ...]]:
    # A product is evaluated as a bundle whose fiber is a cellular factor;
    # validate() has already guaranteed at least one side qualifies.
    right = validate(expr.right)
    if right.cell_profile is not None:
        return expr.left, right.cell_profile
    return expr.right, validate(expr.left).cell_profile


# ---------------------------------------------------------------------------
# Euler profiles and higher Chow ranks


def chi_torus(n: int, p: int) -> int:
    """chi_p of the split torus (C*)^n: sum_{i=p}^{n} (-1)^(n+i) C(n, i).
    The empty torus (n = 0) is a point with chi_0 = 1."""
    if n < 0:
        raise ValueError("the torus dimension must be nonnegative")
    if p < 0 or p > n:
        raise ValueError(f"p must lie in 0..{n}")
    return sum((-1) ** (n + i) * binomial(n, i) for i in range(p, n + 1))


def chi_toric(cone_counts: Sequence[int], p: int) -> int:
    """chi_p of any toric variety from its cone counts, by summing torus
    contributions over orbits: sum_i d_i * chi_p((C*)^(n-i))."""
    counts = tuple(cone_counts)
    if not counts:
        raise ValidationError("cone counts must be nonempty")
    if counts[0] != 1:
        raise ValidationError("d_0 must be 1: the zero cone is unique")
    if any(c < 0 for c in counts):
        raise ValidationError("cone counts must be nonnegative")
    n = len(counts) - 1
    if p < 0 or p > n:
        raise ValueError(f"p must lie in 0..{n}")
    return sum(
        (-1) ** (n - i + j) * counts[i] * binomial(n - i, j)
        for i in range(0, n - p + 1)
        for j in range(p, n - i + 1)
    )


def euler_profile(expr: VarietyExpr) -> ChiProfile:
    """Euler profile chi_0 .. chi_n of an expression.  Unlike full tables,
    this works for simplicial and general toric descriptions, where the
    orbit formula applies directly to the cone counts."""
    attributes = validate(expr)
    if isinstance(expr, Toric):
        values = tuple(
            chi_toric(expr.cone_counts, p) for p in range(attributes.dim + 1)
        )
        return ChiProfile(values)
    return chi_profile(evaluate(expr).table)


def higher_chow(expr: VarietyExpr, r: int, m: int) -> int:
    """Rank of the weight-r, degree-m higher Chow group, read off the table
    at (r, 2r + m).  Only expressions built entirely from torus-invariant
    atoms are accepted; for anything else the identification is not known."""
    if r < 0 or m < 0:
        raise ValueError("both indices must be nonnegative")
    attributes = validate(expr)
    if not attributes.toric:
        raise UnsupportedQueryError(
            "identification proven only for toric varieties"
        )
    return rank_at(evaluate(expr).table, r, 2 * r + m)


# ---------------------------------------------------------------------------
# built-in check suites


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one oracle property over its stated instance range."""

    name: str
    instances: str
    passed: bool


CHECK_SUITES = ("all", "torus", "toric", "quadric", "hilb", "sp", "suspension")

_CHECK_SEED = 20210923

# Proper expressions with cell profiles, used by the cross-cutting checks.
_PROFILED_CORPUS: tuple[VarietyExpr, ...] = (
    Point(),
    ProjectiveSpace(2),
    ProjectiveSpace(4),
    SplitQuadric(1),
    Cellular((0, 1, 1, 2)),
    Suspension(ProjectiveSpace(1)),
    Product(ProjectiveSpace(1), ProjectiveSpace(2)),
    CellularFiberBundle(ProjectiveSpace(1), (0, 1)),
    Decomposition((FixedComponent(ProjectiveSpace(2), 0), FixedComponent(Point(), 3))),
    Toric((1, 3, 3)),
)

_SUSPENSION_CORPUS: tuple[VarietyExpr, ...] = (
    Point(),
    ProjectiveSpace(1),
    ProjectiveSpace(2),
    ProjectiveSpace(3),
    ProjectiveSpace(4),
    SplitQuadric(1),
    Cellular((0, 1, 1, 2)),
    Toric((1, 4, 4)),
    HilbertScheme(1, 1),
)


def _torus_table_by_recursion(n: int) -> BiGradedTable:
    # Independent oracle: iterate the two-term splitting n times from the
    # point, never consulting the binomial closed form.
    table = cellular_table((0,))
    for _ in range(n):
        table = _cstar_split(table)
    return table


def _pn_cone_counts(n: int) -> tuple[int, ...]:
    # The fan of P^n has C(n+1, i) cones of dimension i.
    return tuple(binomial(n + 1, i) for i in range(n + 1))


def _convolve(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _random_smooth_cone_counts(rng: random.Random) -> tuple[int, ...]:
    # Sample from two provably realizable families: products of projective
    # spaces, and P^2 blown up at fixed points (counts (1, m, m)).
    if rng.random() < 0.4:
        m = rng.randint(3, 9)
        return (1, m, m)
    counts: tuple[int, ...] = (1,)
    for _ in range(rng.randint(1, 3)):
        counts = _convolve(counts, _pn_cone_counts(rng.randint(1, 3)))
    return counts


def _cheah_coefficient_by_enumeration(b2: int, k: int, d: int) -> int:
    # Independent oracle for the Cheah coefficient of z^k t^d: enumerate
    # exponent tuples over the factors (1 - z^a t^b)^-m with b <= d, the
    # j-th power of a factor weighing C(m-1+j, j).
    factors = []
    for fk in range(1, d + 1):
        factors.append((2 * fk - 2, fk, 1))
        if b2:
            factors.append((2 * fk, fk, b2))
        factors.append((2 * fk + 2, fk, 1))

    def count(index: int, t_left: int, z_left: int) -> int:
        if index == len(factors):
            return 1 if t_left == 0 and z_left == 0 else 0
        a, b, m = factors[index]
        total = count(index + 1, t_left, z_left)  # j = 0
        j = 1
        while b * j <= t_left and a * j <= z_left:
            weight = binomial(m - 1 + j, j)
            total += weight * count(index + 1, t_left - b * j, z_left - a * j)
            j += 1
        return total

    return count(0, d, k)


def _symmetric_power_dims_by_enumeration(profile: Sequence[int], d: int) -> Counter:
    # Independent oracle for symmetric-power dimensions: with all classes in
    # even degree, the degree-k dimension counts size-d multisets of basis
    # elements whose degrees add up to k.
    basis = [2 * c for c in profile]
    dims: Counter = Counter()
    for combo in itertools.combinations_with_replacement(range(len(basis)), d):
        dims[sum(basis[i] for i in combo)] += 1
    return dims


def _torus_checks() -> list[CheckResult]:
    results = []
    ok = all(
        torus_table(n) == _torus_table_by_recursion(n) for n in range(1, 9)
    )
    results.append(
        CheckResult("torus closed form matches the iterated splitting", "n=1..8", ok)
    )
    ok = all(
        chi_torus(n, p) == euler_chi(torus_table(n), p)
        for n in range(1, 9)
        for p in range(n + 1)
    )
    results.append(
        CheckResult("torus chi formula matches its table", "n=1..8, p=0..n", ok)
    )
    ok = all(chi_torus(n, 0) == 0 for n in range(1, 9))
    results.append(CheckResult("torus chi_0 telescopes to zero", "n=1..8", ok))
    return results


def _toric_checks() -> list[CheckResult]:
    rng = random.Random(_CHECK_SEED)
    fans = [(1, 3, 3), (1, 4, 4)]
    fans += [_random_smooth_cone_counts(rng) for _ in range(20)]
    ok = True
    for counts in fans:
        table = toric_smooth_table(counts)
        if any(
            chi_toric(counts, p) != euler_chi(table, p)
            for p in range(len(counts))
        ):
            ok = False
    results = [
        CheckResult(
            "toric chi formula matches the Betti table",
            "[1,3,3], [1,4,4], and 20 seeded random smooth fans",
            ok,
        )
    ]
    ok = all(chi_toric(counts, 0) == counts[-1] for counts in fans)
    results.append(
        CheckResult("toric chi_0 equals the top cone count", "same fans", ok)
    )
    return results


def _quadric_checks() -> list[CheckResult]:
    results = []
    ok = all(
        quadric_table(d)
        == decompose(
            (
                FixedComponent(ProjectiveSpace(d), 0),
                FixedComponent(ProjectiveSpace(d), d),
            )
        )
        for d in range(1, 7)
    )
    results.append(
        CheckResult(
            "quadric closed form equals its fixed-component decomposition",
            "d=1..6",
            ok,
        )
    )
    ok = all(
        evaluate(SingularHypersurface(m, d)).table == quadric_table(d)
        for d in range(1, 5)
        for m in (2, 3)
    )
    results.append(
        CheckResult(
            "singular hypersurface shares the quadric table", "d=1..4, m=2..3", ok
        )
    )
    return results


def _hilb_checks() -> list[CheckResult]:
    results = []
    ok = True
    for b2 in range(3):
        series = cheah_series(b2, 3)
        for d in range(1, 4):
            for k in range(4 * d + 1):
                if series.coefficient(k, d) != _cheah_coefficient_by_enumeration(
                    b2, k, d
                ):
                    ok = False
    results.append(
        CheckResult(
            "Cheah coefficients match direct enumeration", "b2=0..2, d=1..3", ok
        )
    )
    ok = all(
        cheah_series(b2, 3).coefficient(k, d) == 0
        for b2 in range(3)
        for d in range(4)
        for k in range(1, 13, 2)
    )
    results.append(
        CheckResult("odd-degree Cheah coefficients vanish", "b2=0..2, d=0..3", ok)
    )
    ok = all(
        hilb_table(b2, 1) == cellular_table((0,) + (1,) * b2 + (2,))
        for b2 in range(4)
    )
    results.append(
        CheckResult("one point reproduces the base surface", "b2=0..3", ok)
    )
    return results


def _sp_checks() -> list[CheckResult]:
    results = []
    ok = all(
        dict(sp_table((0, 1), d).ranks) == dict(evaluate(ProjectiveSpace(d)).table.ranks)
        for d in range(1, 7)
    )
    results.append(
        CheckResult(
            "symmetric powers of the line are projective spaces", "d=1..6", ok
        )
    )
    ok = True
    for profile, d in (((0, 1), 2), ((0, 1), 4), ((0, 1, 1, 2), 2), ((0, 1, 2), 3)):
        table = sp_table(profile, d)
        dims = _symmetric_power_dims_by_enumeration(profile, d)
        top = 2 * table.dim
        if any(rank_at(table, 0, k) != dims.get(k, 0) for k in range(top + 1)):
            ok = False
    results.append(
        CheckResult(
            "symmetric-power dimensions match multiset enumeration",
            "profiles of dim <= 2, d <= 4",
            ok,
        )
    )
    ok = all(dict(sp_table((0,), d).ranks) == {(0, 0): 1} for d in range(1, 8))
    results.append(
        CheckResult("symmetric powers of the point stay a point", "d=1..7", ok)
    )
    return results


def _suspension_checks() -> list[CheckResult]:
    results = []
    ok = all(
        suspend(evaluate(expr).table)
        == decompose((FixedComponent(expr, 1), FixedComponent(Point(), 0)))
        for expr in _SUSPENSION_CORPUS
    )
    results.append(
        CheckResult(
            "suspension equals the two-component decomposition",
            "proper corpus up to dimension 4",
            ok,
        )
    )
    ok = all(
        rank_at(suspend(evaluate(expr).table), 0, 1) == 0
        for expr in _SUSPENSION_CORPUS
    )
    results.append(
        CheckResult("degree-one rank of a suspension vanishes", "same corpus", ok)
    )
    ok = suspend(cellular_table((0,))) == evaluate(ProjectiveSpace(1)).table
    results.append(
        CheckResult("suspending the point gives the line", "single instance", ok)
    )
    return results


def _general_checks() -> list[CheckResult]:
    results = []
    ok = True
    for expr in _PROFILED_CORPUS:
        attributes = validate(expr)
        table = evaluate(expr).table
        counts = Counter(attributes.cell_profile)
        for m in range(attributes.dim + 1):
            if rank_at(table, 0, 2 * m) != counts.get(m, 0):
                ok = False
        if any(rank_at(table, 0, k) != 0 for k in range(1, 2 * attributes.dim + 1, 2)):
            ok = False
    results.append(
        CheckResult(
            "row zero counts cells (Dold-Thom rows)", "profiled corpus", ok
        )
    )
    ok = all(
        rank_at(evaluate(expr).table, -r, k) == rank_at(evaluate(expr).table, 0, k)
        for expr in _PROFILED_CORPUS[:4]
        for r in (1, 2, 3)
        for k in range(2 * validate(expr).dim + 1)
    )
    results.append(
        CheckResult("negative cycle dimension falls back to row zero", "r=1..3", ok)
    )
    ok = True
    for expr in _PROFILED_CORPUS:
        table = evaluate(expr).table
        if any(
            value != rank_at(table, 0, k) for (r, k), value in table.ranks.items()
        ):
            ok = False
    results.append(
        CheckResult(
            "cellular tables are constant down each column", "profiled corpus", ok
        )
    )
    aliased: list[VarietyExpr] = [Torus(n) for n in range(1, 5)]
    aliased += [ProjectiveSpace(n) for n in range(1, 5)]
    aliased.append(Toric((1, 3, 3)))
    ok = True
    for expr in aliased:
        table = evaluate(expr).table
        for r in range(table.dim + 1):
            for m in range(2 * table.dim + 1):
                if higher_chow(expr, r, m) != rank_at(table, r, 2 * r + m):
                    ok = False
    results.append(
        CheckResult(
            "higher Chow ranks alias the table",
            "torus/P^n for n=1..4 and toric([1,3,3])",
            ok,
        )
    )
    return results


_SUITE_RUNNERS = {
    "torus": _torus_checks,
    "toric": _toric_checks,
    "quadric": _quadric_checks,
    "hilb": _hilb_checks,
    "sp": _sp_checks,
    "suspension": _suspension_checks,
}


def run_checks(suite: str = "all") -> tuple[CheckResult, ...]:
    """Run one named oracle suite, or all of them plus the cross-cutting
    properties.  Returns one result per property; the caller decides how to
    surface failures."""
    if suite not in CHECK_SUITES:
        raise ValueError(f"unknown check suite {suite!r}")
    if suite == "all":
        results: list[CheckResult] = []
        for name in CHECK_SUITES[1:]:
            results.extend(_SUITE_RUNNERS[name]())
        results.extend(_general_checks())
        return tuple(results)
    return tuple(_SUITE_RUNNERS[suite]())

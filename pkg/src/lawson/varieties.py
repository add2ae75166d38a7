"""Variety expressions: the abstract syntax the calculator evaluates.

An expression describes a variety compositionally, from atoms with known
tables (point, projective and affine space, the algebraic torus, split
quadrics and their singular-hypersurface cousins, cellular varieties, smooth
toric varieties given by cone counts, punctual Hilbert schemes of surfaces)
and from constructors that mirror the structure theorems (suspension,
products, cellular fiber bundles, fixed-component decompositions, symmetric
products).

Constructors here are structural only; all semantic checking lives in
:func:`validate`, which either returns the derived :class:`VarietyAttributes`
or raises :class:`ValidationError`.  :func:`render` writes the canonical
textual form, the inverse of the parser in :mod:`lawson.dsl`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .grading import Coefficients, binomial


class ValidationError(ValueError):
    """A structurally well-formed expression that violates a semantic rule."""


class Smoothness(enum.Enum):
    SMOOTH = "smooth"
    SIMPLICIAL = "simplicial"
    GENERAL = "general"


class VarietyExpr:
    """Base class for all variety expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class Point(VarietyExpr):
    pass


@dataclass(frozen=True)
class ProjectiveSpace(VarietyExpr):
    n: int


@dataclass(frozen=True)
class AffineSpace(VarietyExpr):
    n: int


@dataclass(frozen=True)
class Torus(VarietyExpr):
    """The split algebraic torus (C*)^n, the basic non-proper atom."""

    n: int


@dataclass(frozen=True)
class SplitQuadric(VarietyExpr):
    """Smooth quadric of even complex dimension 2d, split over the base field."""

    d: int


@dataclass(frozen=True)
class SingularHypersurface(VarietyExpr):
    """Degree-m hypersurface of dimension 2d singular along a linear center;
    its table coincides with the split quadric of the same dimension."""

    m: int
    d: int


@dataclass(frozen=True)
class Cellular(VarietyExpr):
    """Variety with an algebraic cell decomposition, recorded as the multiset
    of cell dimensions.  Cells are stored sorted."""

    cells: tuple[int, ...]
    proper: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", tuple(sorted(self.cells)))


@dataclass(frozen=True)
class Toric(VarietyExpr):
    """Toric variety described by its cone counts d_0, ..., d_n."""

    cone_counts: tuple[int, ...]
    smoothness: Smoothness = Smoothness.SMOOTH

    def __post_init__(self) -> None:
        object.__setattr__(self, "cone_counts", tuple(self.cone_counts))


@dataclass(frozen=True)
class Suspension(VarietyExpr):
    """Algebraic suspension: the Thom-space analogue joining with a point."""

    inner: VarietyExpr


@dataclass(frozen=True)
class Product(VarietyExpr):
    left: VarietyExpr
    right: VarietyExpr


@dataclass(frozen=True)
class CellularFiberBundle(VarietyExpr):
    """Zariski-locally trivial bundle with cellular fibers over any base."""

    base: VarietyExpr
    fiber_cells: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "fiber_cells", tuple(sorted(self.fiber_cells)))


@dataclass(frozen=True)
class FixedComponent:
    """One fixed component of a torus action, with its normal-weight shift."""

    component: VarietyExpr
    shift: int


@dataclass(frozen=True)
class Decomposition(VarietyExpr):
    """A variety presented through the fixed components of a C*-action."""

    components: tuple[FixedComponent, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))


@dataclass(frozen=True)
class SymmetricProduct(VarietyExpr):
    inner: VarietyExpr
    d: int


@dataclass(frozen=True)
class HilbertScheme(VarietyExpr):
    """Hilbert scheme of d points on a simply connected surface with
    middle Betti number b2."""

    b2: int
    d: int


@dataclass(frozen=True)
class VarietyAttributes:
    """Facts validate() derives: dimension, properness, coefficient tag,
    the cell profile when one is licensed, and the toric flag."""

    dim: int
    proper: bool
    coefficients: Coefficients
    cell_profile: Optional[tuple[int, ...]] = None
    toric: bool = False

    def __post_init__(self) -> None:
        if self.cell_profile is not None:
            profile = tuple(sorted(self.cell_profile))
            if not profile:
                raise ValueError("a cell profile must be nonempty")
            if profile[-1] > self.dim:
                raise ValueError("cell dimensions cannot exceed the variety dimension")
            object.__setattr__(self, "cell_profile", profile)


def smooth_toric_betti(cone_counts) -> list[int]:
    """Even Betti numbers of a smooth proper toric variety from its cone
    counts: b_{2m} = sum_{i=m}^{n} (-1)^(i-m) C(i, m) d_{n-i}.

    Rejects count vectors whose alternating sums go negative, since no fan
    realizes them.
    """
    counts = tuple(cone_counts)
    n = len(counts) - 1
    betti = []
    for m in range(n + 1):
        b = sum(
            (-1) ** (i - m) * binomial(i, m) * counts[n - i] for i in range(m, n + 1)
        )
        if b < 0:
            raise ValidationError(
                f"inconsistent cone counts: derived Betti number b_{2 * m} = {b}"
            )
        betti.append(b)
    return betti


def _pairwise_sums(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(a + b for a in left for b in right))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationError(message)


def validate(expr: VarietyExpr) -> VarietyAttributes:
    """Check an expression against the semantic rules and derive its
    attributes.

    Dimension, properness, and the coefficient tag are computed recursively;
    the coefficient tag is rational exactly when the expression contains a
    symmetric product or a simplicial toric description.  The cell profile is
    the multiset of cell dimensions when the constructions license one, and
    the toric flag marks expressions entirely built from torus-invariant
    atoms and products.
    """
    if isinstance(expr, Point):
        return VarietyAttributes(0, True, Coefficients.INTEGER, (0,), True)

    if isinstance(expr, ProjectiveSpace):
        _require(expr.n >= 1, "projective space requires a positive dimension")
        profile = tuple(range(expr.n + 1))
        return VarietyAttributes(expr.n, True, Coefficients.INTEGER, profile, True)

    if isinstance(expr, AffineSpace):
        _require(expr.n >= 1, "affine space requires a positive dimension")
        return VarietyAttributes(expr.n, False, Coefficients.INTEGER, (expr.n,), True)

    if isinstance(expr, Torus):
        _require(expr.n >= 1, "the torus requires a positive dimension")
        return VarietyAttributes(expr.n, False, Coefficients.INTEGER, None, True)

    if isinstance(expr, SplitQuadric):
        _require(expr.d >= 1, "the split quadric requires d >= 1")
        profile = tuple(sorted(list(range(expr.d + 1)) + list(range(expr.d, 2 * expr.d + 1))))
        return VarietyAttributes(2 * expr.d, True, Coefficients.INTEGER, profile, False)

    if isinstance(expr, SingularHypersurface):
        _require(expr.m >= 2, "the hypersurface degree must exceed 1")
        _require(expr.d >= 1, "the hypersurface requires d >= 1")
        # Same table as the split quadric, but no cell profile is claimed
        # for the singular model.
        return VarietyAttributes(2 * expr.d, True, Coefficients.INTEGER, None, False)

    if isinstance(expr, Cellular):
        _require(len(expr.cells) >= 1, "a cellular variety needs at least one cell")
        _require(all(c >= 0 for c in expr.cells), "cell dimensions must be nonnegative")
        dim = max(expr.cells)
        return VarietyAttributes(dim, expr.proper, Coefficients.INTEGER, expr.cells, False)

    if isinstance(expr, Toric):
        counts = expr.cone_counts
        _require(len(counts) >= 1, "cone counts must be nonempty")
        _require(all(c >= 0 for c in counts), "cone counts must be nonnegative")
        _require(counts[0] == 1, "d_0 must be 1: the zero cone is unique")
        n = len(counts) - 1
        if expr.smoothness is Smoothness.SMOOTH:
            betti = smooth_toric_betti(counts)
            profile = tuple(m for m, b in enumerate(betti) for _ in range(b))
            return VarietyAttributes(n, True, Coefficients.INTEGER, profile, True)
        if expr.smoothness is Smoothness.SIMPLICIAL:
            return VarietyAttributes(n, True, Coefficients.RATIONAL, None, True)
        return VarietyAttributes(n, True, Coefficients.INTEGER, None, True)

    if isinstance(expr, Suspension):
        inner = validate(expr.inner)
        _require(inner.proper, "suspension requires a projective inner variety")
        profile = None
        if inner.cell_profile is not None:
            profile = tuple(sorted((0,) + tuple(c + 1 for c in inner.cell_profile)))
        return VarietyAttributes(inner.dim + 1, True, inner.coefficients, profile, False)

    if isinstance(expr, Product):
        left = validate(expr.left)
        right = validate(expr.right)
        _require(
            left.cell_profile is not None or right.cell_profile is not None,
            "a product is supported only when at least one factor has a cell profile",
        )
        profile = None
        if left.cell_profile is not None and right.cell_profile is not None:
            profile = _pairwise_sums(left.cell_profile, right.cell_profile)
        rational = Coefficients.RATIONAL in (left.coefficients, right.coefficients)
        return VarietyAttributes(
            left.dim + right.dim,
            left.proper and right.proper,
            Coefficients.RATIONAL if rational else Coefficients.INTEGER,
            profile,
            left.toric and right.toric,
        )

    if isinstance(expr, CellularFiberBundle):
        base = validate(expr.base)
        _require(len(expr.fiber_cells) >= 1, "a bundle needs at least one fiber cell")
        _require(
            all(c >= 0 for c in expr.fiber_cells),
            "fiber cell dimensions must be nonnegative",
        )
        profile = None
        if base.cell_profile is not None:
            profile = _pairwise_sums(base.cell_profile, expr.fiber_cells)
        return VarietyAttributes(
            base.dim + max(expr.fiber_cells),
            base.proper,
            base.coefficients,
            profile,
            False,
        )

    if isinstance(expr, Decomposition):
        _require(len(expr.components) >= 1, "a decomposition needs at least one component")
        parts = []
        for fixed in expr.components:
            _require(fixed.shift >= 0, "component shifts must be nonnegative")
            attrs = validate(fixed.component)
            _require(attrs.proper, "decomposition components must be projective")
            parts.append((attrs, fixed.shift))
        dim = max(attrs.dim + shift for attrs, shift in parts)
        profile = None
        if all(attrs.cell_profile is not None for attrs, _ in parts):
            combined: list[int] = []
            for attrs, shift in parts:
                combined.extend(c + shift for c in attrs.cell_profile)
            profile = tuple(sorted(combined))
        rational = any(
            attrs.coefficients is Coefficients.RATIONAL for attrs, _ in parts
        )
        return VarietyAttributes(
            dim,
            True,
            Coefficients.RATIONAL if rational else Coefficients.INTEGER,
            profile,
            False,
        )

    if isinstance(expr, SymmetricProduct):
        _require(expr.d >= 1, "a symmetric product requires d >= 1")
        inner = validate(expr.inner)
        _require(
            inner.cell_profile is not None,
            "a symmetric product requires an inner expression with a cell profile",
        )
        return VarietyAttributes(
            expr.d * inner.dim, inner.proper, Coefficients.RATIONAL, None, False
        )

    if isinstance(expr, HilbertScheme):
        _require(expr.b2 >= 0, "the middle Betti number must be nonnegative")
        _require(expr.d >= 1, "the Hilbert scheme requires d >= 1")
        return VarietyAttributes(2 * expr.d, True, Coefficients.INTEGER, None, False)

    raise TypeError(f"not a variety expression: {expr!r}")


def _natlist(values) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def render(expr: VarietyExpr) -> str:
    """Canonical textual form of an expression.

    parse(render(e)) reproduces e for every expression the grammar can
    spell.  The grammar has no marker for non-proper cellular varieties, so
    rendering one produces the projective spelling; use AffineSpace for the
    non-proper single-cell case.
    """
    if isinstance(expr, Point):
        return "pt"
    if isinstance(expr, ProjectiveSpace):
        return f"P({expr.n})"
    if isinstance(expr, AffineSpace):
        return f"affine({expr.n})"
    if isinstance(expr, Torus):
        return f"torus({expr.n})"
    if isinstance(expr, SplitQuadric):
        return f"quadric({expr.d})"
    if isinstance(expr, SingularHypersurface):
        return f"singquadric({expr.m},{expr.d})"
    if isinstance(expr, Cellular):
        return f"cellular({_natlist(expr.cells)})"
    if isinstance(expr, Toric):
        if expr.smoothness is Smoothness.SMOOTH:
            return f"toric({_natlist(expr.cone_counts)})"
        return f"toric({_natlist(expr.cone_counts)},{expr.smoothness.value})"
    if isinstance(expr, Suspension):
        return f"susp({render(expr.inner)})"
    if isinstance(expr, Product):
        return f"prod({render(expr.left)},{render(expr.right)})"
    if isinstance(expr, CellularFiberBundle):
        return f"bundle({render(expr.base)},{_natlist(expr.fiber_cells)})"
    if isinstance(expr, Decomposition):
        parts = ", ".join(
            f"{render(fixed.component)}:{fixed.shift}" for fixed in expr.components
        )
        return f"decomp({parts})"
    if isinstance(expr, SymmetricProduct):
        return f"sp({render(expr.inner)},{expr.d})"
    if isinstance(expr, HilbertScheme):
        return f"hilb({expr.b2},{expr.d})"
    raise TypeError(f"not a variety expression: {expr!r}")

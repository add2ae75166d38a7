"""Bigraded rank tables with exact integer arithmetic.

A variety of complex dimension n carries a family of cycle-space homology
groups indexed by a cycle dimension r and a topological degree k, defined
for 0 <= 2r <= k <= 2n.  Every group that the calculator can reach is free
abelian (or a rational vector space), so a table records nothing but the
nonzero ranks, keyed by the pair (r, k).

Three conventions are baked into lookups and are relied on everywhere else:

* a negative cycle dimension falls back to the r = 0 row, which agrees with
  ordinary singular homology by the Dold-Thom identification of 0-cycles;
* degrees k outside [0, 2n] have rank zero;
* r >= 1 with k < 2r is *undefined* rather than zero, and raises
  :class:`LawsonRangeError` so caller bugs are not silently absorbed.

All arithmetic is exact; ranks are plain Python integers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Sequence


class Coefficients(enum.Enum):
    """Coefficient ring tag: honest integral ranks, or rational dimensions."""

    INTEGER = "Z"
    RATIONAL = "Q"


class LawsonRangeError(ValueError):
    """Raised for queries at r >= 1, k < 2r, where no group is defined."""


def binomial(n: int, j: int) -> int:
    """Binomial coefficient C(n, j); 0 when j < 0 or j > n.

    The upper argument must be nonnegative.  Out-of-range lower arguments
    return 0 so that shifted sums can be written without edge guards.
    """
    if n < 0:
        raise ValueError("binomial requires a nonnegative upper argument")
    if j < 0 or j > n:
        return 0
    return math.comb(n, j)


@dataclass(frozen=True)
class BiGradedTable:
    """Sparse table of ranks, keyed by (r, k) with 0 <= 2r <= k <= 2*dim.

    ``dim`` is the complex dimension of the underlying variety, ``proper``
    records whether the variety is compact (non-proper tables hold
    Borel-Moore style ranks), and ``coefficients`` tags the ring.  Absent
    keys mean rank zero; zero values are normalized away on construction so
    equality is representation-independent.
    """

    dim: int
    proper: bool
    coefficients: Coefficients
    ranks: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("complex dimension must be nonnegative")
        if not isinstance(self.coefficients, Coefficients):
            raise TypeError("coefficients must be a Coefficients tag")
        cleaned: dict[tuple[int, int], int] = {}
        for (r, k), value in self.ranks.items():
            if value == 0:
                continue
            if value < 0:
                raise ValueError(f"rank at {(r, k)} is negative")
            if not (0 <= 2 * r <= k <= 2 * self.dim):
                raise ValueError(
                    f"grading pair {(r, k)} violates 0 <= 2r <= k <= {2 * self.dim}"
                )
            cleaned[(r, k)] = value
        object.__setattr__(self, "ranks", MappingProxyType(cleaned))


@dataclass(frozen=True)
class ChiProfile:
    """Euler characteristics chi_0, ..., chi_n of the rows of a table."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))


def rank_at(table: BiGradedTable, r: int, k: int) -> int:
    """Rank of the (r, k) group of ``table``, applying the standard
    conventions: negative r resolves to the singular-homology row, degrees
    outside [0, 2*dim] are zero, and r >= 1 with k < 2r is an error."""
    if r < 0:
        r = 0
    elif r >= 1 and k < 2 * r:
        raise LawsonRangeError(
            f"({r}, {k}) is outside the Lawson range: no group is defined for k < 2r"
        )
    if k < 0 or k > 2 * table.dim:
        return 0
    return table.ranks.get((r, k), 0)


def shift_and_sum(
    summands: Sequence[tuple[BiGradedTable, int]],
    target_dimension: int,
    proper: bool,
) -> BiGradedTable:
    """Direct sum of tables, each shifted by a nonnegative weight.

    A summand (T, s) contributes rank_at(T, r - s, k - 2s) to the (r, k)
    entry of the result.  This is the common engine behind fixed-component
    decompositions and cellular fiber bundles.  All summands must carry the
    same coefficient tag, and the target dimension must be large enough to
    hold every shifted summand.
    """
    summands = list(summands)
    if not summands:
        raise ValueError("at least one summand is required")
    tags = {table.coefficients for table, _ in summands}
    if len(tags) > 1:
        raise ValueError("summands carry mixed coefficient tags")
    for table, shift in summands:
        if shift < 0:
            raise ValueError("shifts must be nonnegative")
        if target_dimension < table.dim + shift:
            raise ValueError(
                f"target dimension {target_dimension} cannot hold a summand of "
                f"dimension {table.dim} shifted by {shift}"
            )
    ranks: dict[tuple[int, int], int] = {}
    for r in range(target_dimension + 1):
        for k in range(2 * r, 2 * target_dimension + 1):
            # Inside 0 <= 2r <= k the shifted indices never dip below the
            # Lawson range, so rank_at applies all conventions for us.
            total = sum(rank_at(table, r - s, k - 2 * s) for table, s in summands)
            if total:
                ranks[(r, k)] = total
    return BiGradedTable(target_dimension, proper, tags.pop(), ranks)


def euler_chi(table: BiGradedTable, p: int) -> int:
    """Signed rank sum of row p: sum over k >= 2p of (-1)^k rank(p, k)."""
    if p < 0 or p > table.dim:
        raise ValueError(f"row index p must lie in 0..{table.dim}")
    total = 0
    for k in range(2 * p, 2 * table.dim + 1):
        value = rank_at(table, p, k)
        total += -value if k % 2 else value
    return total


def chi_profile(table: BiGradedTable) -> ChiProfile:
    """All row Euler characteristics of a table, chi_0 through chi_dim."""
    return ChiProfile(tuple(euler_chi(table, p) for p in range(table.dim + 1)))

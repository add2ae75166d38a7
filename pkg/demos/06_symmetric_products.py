"""
Symmetric products
==================

Symmetric products of cellular varieties work with rational coefficients:
the degree-k rank of SP^d comes from a product formula over the cell
dimensions, and the result is again constant down each column.
"""

from lawson import evaluate, macdonald_series, parse, rank_at, sp_table

# SP^d of the projective line is projective d-space.
for d in (2, 4):
    table = sp_table((0, 1), d)
    print(f"sp(P(1),{d}) row r=0:",
          [rank_at(table, 0, k) for k in range(0, 2 * d + 1, 2)])

# The symmetric square of the quadric surface (cells 0, 1, 1, 2).
square = evaluate(parse("sp(quadric(1),2)")).table
print("sp(quadric(1),2) even row:",
      [rank_at(square, 0, k) for k in range(0, 9, 2)])
print("coefficients tag:", square.coefficients.value)

# The raw series behind it: one factor per even Betti number.
series = macdonald_series([1, 2, 1], 2)
print("series row at t^2:", list(series.t_row(2)))

# Profiles without a zero-cell work too; a common offset just shifts all
# degrees.  SP^3 of a single 2-cell is a single 6-cell.
print("sp of one 2-cell, d=3:", dict(sp_table((2,), 3, proper=False).ranks))

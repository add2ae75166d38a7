"""
The torus and higher Chow ranks
===============================

The split torus is the basic non-proper example: its table has a clean
binomial closed form, reproducible by splitting off one factor at a time.
For torus-built expressions the table entries double as ranks of higher
Chow groups.
"""

from lawson import (
    Torus,
    cstar_product,
    evaluate,
    higher_chow,
    parse,
    run_checks,
    torus_table,
)

# The closed form for (C*)^2: binomial(2, k-2) once k >= r + 2.
table = torus_table(2)
print("torus(2) table:")
for r in range(3):
    print(f"  r={r}:", [table.ranks.get((r, k), 0) for k in range(5)])

# One splitting step from the point produces the table of C* itself; the
# splitting is stated for a projective factor, so the full iteration lives
# in the built-in check suite rather than here.
step = cstar_product(evaluate(parse("pt")).table)
print("one splitting step equals torus(1):", step == torus_table(1))
print("torus suite:",
      all(result.passed for result in run_checks("torus")))

# Entry (r, 2r + m) of the table is the rank of the weight-r, degree-m
# higher Chow group.  The aliasing works for any expression built out of
# torus-invariant pieces.
print("chow ranks of torus(2) at r=0:",
      [higher_chow(Torus(2), 0, m) for m in range(5)])
print("chow ranks of P(3) at r=1:",
      [higher_chow(parse("P(3)"), 1, m) for m in range(5)])

# Anything else is refused: the identification is not available for a
# general variety, so asking is an unsupported query, not a zero.
try:
    higher_chow(parse("quadric(1)"), 0, 0)
except ValueError as exc:
    print("chow of a quadric:", exc)

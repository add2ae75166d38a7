"""
Bundles, products, and suspensions
==================================

Products with a cellular factor, cellular fiber bundles, and suspensions
are all shifted direct sums of the input table, so big tables assemble
from small ones without any new computation rules.
"""

from lawson import (
    cellular_table,
    evaluate,
    fiber_bundle_table,
    parse,
    quadric_table,
    suspend,
)

# A projective line bundle over the line: two shifted copies of the base,
# which is exactly the quadric surface again.
base = cellular_table((0, 1))
print("P^1-bundle over P^1 == quadric surface:",
      fiber_bundle_table(base, (0, 1)) == quadric_table(1))

# The product rewrite picks whichever factor has a cell structure as the
# fiber; the other side can be anything with a table, proper or not.
product = evaluate(parse("prod(torus(1),P(1))")).table
print("torus(1) x P(1): dim", product.dim, "proper", product.proper)
print("  row r=0:", [product.ranks.get((0, k), 0) for k in range(5)])

# Suspension shifts every row down-and-over by one cycle dimension and two
# degrees; suspending the point repeatedly walks up the projective spaces.
table = evaluate(parse("pt")).table
for n in (1, 2, 3):
    table = suspend(table)
    same = table == evaluate(parse(f"P({n})")).table
    print(f"susp^{n}(pt) == P({n}):", same)

# Bundles over non-cellular bases are fine as long as the fiber is
# cellular: a three-cell fiber over the torus.
bundle = evaluate(parse("bundle(torus(2),[0,1,2])")).table
print("bundle over torus(2): dim", bundle.dim, "proper", bundle.proper)

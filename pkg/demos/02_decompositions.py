"""
Fixed-component decompositions
==============================

A torus action with projective fixed components determines the whole table:
each component enters shifted by its normal weight.  The split quadric is
the classic example, and the closed form and the decomposition route are
independent implementations that must agree.
"""

from lawson import (
    FixedComponent,
    Point,
    ProjectiveSpace,
    decompose,
    evaluate,
    parse,
    quadric_table,
)

# The 2d-dimensional split quadric decomposes into two projective d-spaces,
# one of them shifted by d.
for d in (1, 2, 3):
    split = decompose(
        (
            FixedComponent(ProjectiveSpace(d), 0),
            FixedComponent(ProjectiveSpace(d), d),
        )
    )
    closed = quadric_table(d)
    print(f"d={d}: decomposition == closed form? {split == closed}")

# The same thing straight from the expression language.
table = evaluate(parse("decomp(P(2):0, P(2):2)")).table
print("decomp(P(2):0, P(2):2) middle column:",
      [table.ranks.get((r, 4), 0) for r in range(3)])

# A single shifted point is the smallest decomposition: one cell in the top
# degree on every row.
print("decomp(pt:2) ranks:", dict(decompose((FixedComponent(Point(), 2),)).ranks))

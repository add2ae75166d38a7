"""
First rank tables
=================

Describe a variety with the little expression language, evaluate it, and
read ranks off the bigraded table.
"""

from lawson import evaluate, parse, rank_at

# The point, projective space, and a split quadric surface.  parse() turns
# the text into an expression tree; evaluate() validates it and builds the
# table of exact integer ranks.
for text in ("pt", "P(2)", "quadric(1)"):
    result = evaluate(parse(text))
    table = result.table
    print(f"{text}: dimension {table.dim}, proper={table.proper}")
    for r in range(table.dim + 1):
        row = " ".join(
            str(table.ranks.get((r, k), 0)) for k in range(2 * table.dim + 1)
        )
        print(f"  r={r}: {row}")
    print()

# Individual entries come from rank_at.  Rows are indexed by the cycle
# dimension r, columns by the homological degree k, with 2r <= k <= 2n.
quadric = evaluate(parse("quadric(1)")).table
print("quadric surface, middle entry (r=1, k=2):", rank_at(quadric, 1, 2))

# Below the line k = 2r the groups are not defined, and rank_at refuses
# the query rather than inventing a zero.
try:
    rank_at(quadric, 2, 2)
except ValueError as exc:
    print("query at (2, 2):", exc)

# Negative cycle dimension falls back to the r = 0 row, which matches
# ordinary homology.
print("rank at (-3, 4) equals rank at (0, 4):", rank_at(quadric, -3, 4))

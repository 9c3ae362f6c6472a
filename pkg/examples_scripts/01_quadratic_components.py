"""Connected components of quadratic strata with a pole of order at least 2.

Walks through a handful of signatures, showing which line of the case list
fires and how the hyperelliptic component can coincide with a component of
squares of abelian differentials.
"""

from stratakit import validate_stratum
from stratakit.classify import classify, hyperelliptic_shapes, merge_to_minimal

# Signatures are entered in the analytic convention: negative entries are poles.
for orders in ([12, -8], [8, -4], [8, -2, -2], [6, -2], [5, 1, -2], [10, -2, -4]):
    stratum = validate_stratum(2, orders)
    result = classify(stratum)
    print(f"{stratum}: case ({result.case}), {result.count} components")
    for comp in result.components:
        extra = f" = {', '.join(comp.coincides_with)}" if comp.coincides_with else ""
        print(f"    {comp.label}{extra}")

# The hyperelliptic test looks for a decomposition into one of five shapes.
print(hyperelliptic_shapes(validate_stratum(2, [6, -2])))

# Merging the zeros gives an upper bound on the number of components.
merged = merge_to_minimal(validate_stratum(2, [4, 4, -2, -2]))
print(f"merge {merged.source.orders} -> {merged.merged.orders}, at most {merged.bound} components")

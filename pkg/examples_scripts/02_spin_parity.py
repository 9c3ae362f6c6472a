"""Spin parity of k-differentials.

Even k goes through the intermediate quadratic differential. Odd k in genus
zero and one uses the counting function n_k, whose values are conditional on
a divisor-count conjecture until the relevant k have been checked.
"""

from stratakit import validate_stratum
from stratakit.classify import classify
from stratakit.divisor_count import verify_and_stamp
from stratakit.parity import even_k_parity, genus0_parity, genus1_parity, nk

# Even k: the primitive locus has a single parity.
print("k=4 (1,-9):", even_k_parity(validate_stratum(4, [1, -9])))

# Odd k, genus zero: n_3(1, 1, -5) = 3 counts the three entries prime to 3.
print("n_3(1,1,-5) =", nk(3, [1, 1, -5]))
cubic = validate_stratum(3, [2, 2, -10])
print("k=3 (2,2,-10):", genus0_parity(cubic))

# Checking the conjecture for k = 3 makes the answer unconditional.
verify_and_stamp([3])
print("after checking k=3:", genus0_parity(cubic))

# Genus one: the parity moves with the rotation number d.
for d in (1, 2, 3):
    print(f"k=3 (6,-6) rotation {d}:", genus1_parity(3, [3, -3], d))

# The cubic genus-two strata (4, 2) and (2, 2, 2) have swapped parities.
for orders in ([4, 2], [2, 2, 2]):
    result = classify(validate_stratum(3, orders))
    print(orders, [(c.kind, c.parity.name) for c in result.components])

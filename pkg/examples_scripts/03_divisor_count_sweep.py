"""The divisor-count sweep behind the odd-k parity formulas.

For odd k and n with gcd(n, k) = gcd(n + 1, k) = 1 the count N_k(n) should
have the parity of floor((k + 1) / 4). The reduced count is checked against
a brute-force lattice computation, then swept over a range of k.
"""

import time

from stratakit.divisor_count import (
    format_tsv,
    nk_reduced_count,
    nk_triple_count,
    reduce_triple,
    sweep_conjecture,
)

# Two routes to the same number for the triple (1, 2, -8) with k = 5.
k, triple = 5, (1, 2, -8)
n = reduce_triple(k, *triple)
print(f"reduced n = {n}: count {nk_reduced_count(k, n)}, lattice count {nk_triple_count(k, *triple)}")

# The small range, in the layout of the published table.
print(format_tsv(sweep_conjecture(5, 13)), end="")

if __name__ == "__main__":
    # A wider sweep, spread over four processes. Output order never depends on
    # the number of workers.
    start = time.perf_counter()
    rows = sweep_conjecture(3, 199, jobs=4)
    failures = [r for r in rows if not r.passed]
    print(f"{len(rows)} rows up to k=199, {len(failures)} failures, {time.perf_counter() - start:.2f}s")

"""Counting effective half-canonical divisor classes on cyclic covers.

Two independent routes to the same numbers:

* ``nk_reduced_count`` counts pairs (b1, b2) with b2 = n*b1 mod k.
* ``nk_triple_count`` enumerates all effective divisors of the right degree
  and tests linear equivalence by exact membership in a rank-2 integer
  lattice.

``sweep_conjecture`` checks that the reduced count has the parity of
floor((k+1)/4), producing rows in the layout of the published table.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    ConjectureCounterexample,
    GcdViolation,
    NotPartitionOfMinusK,
    PreconditionViolation,
)

TSV_HEADER = ("k", "n", "n_prime", "N_k_n", "floor_k1_4", "pass")


def _check_odd_k(k: int) -> None:
    if k < 3 or k % 2 == 0:
        raise PreconditionViolation(f"k must be odd and at least 3, got {k}")


def nk_reduced_count(k: int, n: int, *, check_domain: bool = True) -> int:
    """Number of b1 in [1, (k-1)/2] whose partner b2 = n*b1 mod k is small.

    A pair counts when b2 <= (k-1)/2 and b1 + b2 >= (k+1)/2. With
    ``check_domain`` the coprimality conditions gcd(n, k) = gcd(n+1, k) = 1
    are enforced; turning it off just evaluates the count.
    """
    _check_odd_k(k)
    n %= k
    if check_domain and (gcd(n, k) != 1 or gcd(n + 1, k) != 1):
        raise GcdViolation(f"need gcd(n, k) = gcd(n+1, k) = 1, got k={k}, n={n}")
    h = (k - 1) // 2
    count = 0
    for b1 in range(1, h + 1):
        b2 = (n * b1) % k or k
        if b2 <= h and b1 + b2 >= h + 1:
            assert b1 >= 1 and b2 >= 1
            count += 1
    return count


def _check_triple(k: int, ms: Sequence[int]) -> None:
    _check_odd_k(k)
    if sum(ms) != -k:
        raise NotPartitionOfMinusK(f"{tuple(ms)} does not sum to -{k}")
    if any(gcd(m, k) != 1 for m in ms):
        raise GcdViolation(f"entries of {tuple(ms)} must be coprime to {k}")


def reduce_triple(k: int, m1: int, m2: int, m3: int) -> int:
    """The n with N_k(m1, m2, m3) = N_k(1, n, -k-1-n)."""
    _check_triple(k, (m1, m2, m3))
    return (m2 * pow(m1, -1, k)) % k


# -- lattice membership -------------------------------------------------------


def echelon_rows(rows: Iterable[Sequence[int]]) -> list[tuple[int, list[int]]]:
    """Integer row echelon form of the row span.

    Returns (pivot column, row) pairs with positive pivots and strictly
    increasing pivot columns; zero rows are dropped. Only unimodular row
    operations are used, so the span over Z is unchanged.
    """
    work = [list(map(int, r)) for r in rows]
    ncols = len(work[0]) if work else 0
    out: list[tuple[int, list[int]]] = []
    for col in range(ncols):
        live = [r for r in work if r[col] != 0]
        if not live:
            continue
        # Euclid on the column: keep reducing by the smallest entry.
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            for r in live[1:]:
                q = r[col] // piv[col]
                for j in range(col, ncols):
                    r[j] -= q * piv[j]
            live = [piv] + [r for r in live[1:] if r[col] != 0]
        piv = live[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        out.append((col, piv))
        work = [r for r in work if r is not piv and any(r)]
    return out


class LatticeQuotient:
    """Z^3 modulo span{(k,-k,0), (k,0,-k), (m1+k, m2, m3)}."""

    def __init__(self, k: int, m1: int, m2: int, m3: int):
        self.k = k
        self.ms = (m1, m2, m3)
        self.generators = ((k, -k, 0), (k, 0, -k), (m1 + k, m2, m3))
        self.basis = echelon_rows(self.generators)
        self.rank = len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        v = list(v)
        for col, row in self.basis:
            for j in range(col):
                if v[j]:
                    return False
            q, rem = divmod(v[col], row[col])
            if rem:
                return False
            if q:
                for j in range(col, 3):
                    v[j] -= q * row[j]
        return not any(v)

    def equivalent(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.contains([x - y for x, y in zip(a, b)])


def nk_triple_count(k: int, m1: int, m2: int, m3: int) -> int:
    """Brute-force count of effective divisors equivalent to the half-canonical one."""
    _check_triple(k, (m1, m2, m3))
    lat = LatticeQuotient(k, m1, m2, m3)
    h = (k - 1) // 2
    t = (k - 3) // 2
    b1, b2, b3 = m1 + h, m2 + h, m3 + h
    count = 0
    for c1 in range(t + 1):
        for c2 in range(t - c1 + 1):
            c3 = t - c1 - c2
            if lat.contains((c1 - b1, c2 - b2, c3 - b3)):
                count += 1
    return count


# -- sweep ------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    k: int
    n: int
    n_prime: int
    count: int
    target: int
    passed: bool

    def tsv(self) -> str:
        flag = "pass" if self.passed else "fail"
        return f"{self.k}\t{self.n}\t{self.n_prime}\t{self.count}\t{self.target}\t{flag}"


def _rows_for_k(k: int, include_unit: bool = False) -> list[SweepRow]:
    target = (k + 1) // 4
    rows = []
    for n in range(1 if include_unit else 2, k):
        if gcd(n, k) != 1 or gcd(n + 1, k) != 1:
            continue
        n_prime = pow(n, -1, k)
        if n_prime < n:
            continue  # reported with its smaller partner
        count = nk_reduced_count(k, n, check_domain=False)
        rows.append(SweepRow(k, n, n_prime, count, target, count % 2 == target % 2))
    return rows


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("STRATAKIT_JOBS", "1")))
    except ValueError:
        return 1


def sweep_conjecture(
    k_lo: int,
    k_hi: int,
    strict: bool = False,
    *,
    jobs: int | None = None,
    include_unit: bool = False,
) -> list[SweepRow]:
    """Rows for all odd k in [k_lo, k_hi], ordered by (k, n).

    Rows with n = 1 are omitted unless ``include_unit`` is set, since that
    case has a closed form. In strict mode the first failing row (in output
    order) raises ``ConjectureCounterexample``.
    """
    if k_lo < 3 or k_hi < k_lo:
        raise PreconditionViolation(f"need 3 <= k_lo <= k_hi, got {k_lo}, {k_hi}")
    ks = [k for k in range(k_lo, k_hi + 1) if k % 2]
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or len(ks) < 2:
        chunks = [_rows_for_k(k, include_unit) for k in ks]
    else:
        # map() returns results in submission order, so output bytes do not
        # depend on which worker finishes first.
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_rows_for_k, ks, [include_unit] * len(ks)))
    rows = [row for chunk in chunks for row in chunk]
    if strict:
        for row in rows:
            if not row.passed:
                raise ConjectureCounterexample(row)
    return rows


def format_tsv(rows: Iterable[SweepRow]) -> str:
    lines = ["\t".join(TSV_HEADER)]
    lines.extend(row.tsv() for row in rows)
    return "\n".join(lines) + "\n"


def unit_count_closed_form(k: int) -> int:
    """N_k(1) = #{b : (k+1)/4 <= b <= (k-1)/2}."""
    _check_odd_k(k)
    lo = -(-(k + 1) // 4)
    return max(0, (k - 1) // 2 - lo + 1)


def verify_and_stamp(ks: Iterable[int], jobs: int | None = None) -> list[int]:
    """Check every admissible n for each odd k and stamp the ones that pass.

    Returns the list of k that passed.
    """
    from .parity import stamp_verified

    good = []
    for k in ks:
        if k < 3 or k % 2 == 0:
            continue
        rows = sweep_conjecture(k, k, jobs=1, include_unit=True)
        if all(r.passed for r in rows):
            good.append(k)
    stamp_verified(*good)
    return good

"""Spin parity of strata of k-differentials.

Even k uses the closed formula through the intermediate quadratic cover.
Odd k in genus 0 and 1 goes through the counting function n_k, whose link to
the parity depends on a conjecture about divisor counts. Such values are
marked ``conditional`` unless every divisor of k has been stamped as checked
(see ``stamp_verified``).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Collection, Iterable, Sequence

from .cover import is_parity_type, v2
from .errors import (
    InvalidTorsion,
    KEven,
    KOdd,
    NotOddPrime,
    NotParityType,
    PreconditionViolation,
    WrongGenus,
    ZeroEntry,
)
from .strata_core import Stratum, divisors, signature_gcd, validate_stratum

EVEN, ODD = 0, 1


@dataclass(frozen=True)
class Parity:
    bit: int
    conditional: bool = False

    @property
    def name(self) -> str:
        return "odd" if self.bit else "even"

    def __str__(self) -> str:
        return self.name + (" (conditional)" if self.conditional else "")


@dataclass(frozen=True)
class PrimeClass:
    prime: int
    cls: str  # "P" or "Q"


# -- verified-k registry ----------------------------------------------------

_lock = threading.Lock()
_verified: frozenset[int] = frozenset()


def stamp_verified(*ks: int) -> None:
    """Record odd k for which the divisor-count conjecture was checked."""
    global _verified
    with _lock:
        _verified = _verified | frozenset(int(k) for k in ks)


def verified_ks() -> frozenset[int]:
    return _verified


def reset_verified() -> None:
    global _verified
    with _lock:
        _verified = frozenset()


def _is_unconditional(k: int, verified: Collection[int] | None) -> bool:
    ks = verified_ks() if verified is None else verified
    return all(d in ks for d in divisors(k) if d > 1)


# -- primes -----------------------------------------------------------------


@lru_cache(maxsize=4096)
def _prime_factors(k: int) -> dict[int, int]:
    from sympy import factorint

    return {int(p): int(e) for p, e in factorint(k).items()}


def classify_prime(p: int) -> PrimeClass:
    from sympy import isprime

    if p < 3 or not isprime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    return PrimeClass(p, "P" if p % 8 in (1, 7) else "Q")


def _q_primes(k: int) -> list[tuple[int, int]]:
    return [(p, e) for p, e in sorted(_prime_factors(k).items()) if p % 8 in (3, 5)]


def _val(p: int, m: int) -> int:
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def nu_q(m: int, k: int) -> int:
    """Sum over Q-class primes q of k of min(v_q(m), v_q(k))."""
    return sum(min(_val(q, m), e) for q, e in _q_primes(k))


def nk(k: int, mu: Iterable[int]) -> int:
    """Number of entries m with nu_q(m) and nu_q(k) of different parity.

    ``mu`` is the half-signature: the stratum itself is (2 mu).
    """
    if k % 2 == 0:
        raise KEven(f"n_k needs odd k, got {k}")
    mu = list(mu)
    if any(m == 0 for m in mu):
        raise ZeroEntry("entries must be nonzero")
    ref = nu_q(k, k) % 2
    return sum(1 for m in mu if nu_q(m, k) % 2 != ref)


# -- even k -----------------------------------------------------------------


def quadratic_parity(mu: Sequence[int]) -> Parity:
    """Parity of a quadratic stratum of parity type: (n+ - n-)/4 mod 2."""
    if any(m == 0 for m in mu):
        raise ZeroEntry("entries must be nonzero")
    if any(v2(m) == 1 for m in mu):
        raise NotParityType("an entry is 2 mod 4")
    n_plus = sum(1 for m in mu if m % 4 == 1)
    n_minus = sum(1 for m in mu if m % 4 == 3)
    if (n_plus - n_minus) % 4:
        raise PreconditionViolation("entries do not sum to a multiple of 4")
    return Parity(((n_plus - n_minus) // 4) % 2)


def quadratic_orders(k: int, orders: Iterable[int]) -> list[int]:
    """Singularities of the intermediate quadratic differential, k = 2d.

    Preimages of order 0 are regular points and are left out.
    """
    d = k // 2
    out = []
    for m in orders:
        r = gcd(m, d)
        q = (m + k) // r - 2
        if q:
            out.extend([q] * r)
    return out


def even_k_parity(stratum: Stratum) -> Parity:
    """Parity of the primitive locus of a stratum with k even."""
    if stratum.k % 2:
        raise KOdd(f"k = {stratum.k} is odd")
    if not is_parity_type(stratum):
        raise NotParityType(str(stratum))
    return quadratic_parity(quadratic_orders(stratum.k, stratum.orders))


# -- odd k, genus 0 and 1 ---------------------------------------------------


def genus0_parity(stratum: Stratum, verified: Collection[int] | None = None) -> Parity:
    if stratum.genus != 0:
        raise WrongGenus(f"genus is {stratum.genus}, expected 0")
    if not is_parity_type(stratum):
        raise NotParityType(str(stratum))
    k = stratum.k
    if k % 2 == 0:
        # Every genus-0 differential with e | k and e | mu is an e-th power,
        # and the parity of a power is e times the parity of its root.
        e = gcd(k, signature_gcd(stratum))
        if e == 1:
            return even_k_parity(stratum)
        if e % 2 == 0:
            return Parity(EVEN)
        root = validate_stratum(k // e, [m // e for m in stratum.orders])
        return genus0_parity(root, verified)
    half = [m // 2 for m in stratum.orders]
    bit = nk(k, half) % 2
    forced = all(m % k == 0 for m in half) or (
        len(half) == 3 and any(m % k == 0 for m in half)
    )
    return Parity(bit, conditional=not (forced or _is_unconditional(k, verified)))


def torsion_numbers(orders: Sequence[int]) -> list[int]:
    """Rotation (torsion) numbers realized in a genus-one stratum."""
    g = signature_gcd(orders)
    ds = divisors(g)
    if len(orders) == 2 and orders[0] == -orders[1]:
        ds = [d for d in ds if d != abs(orders[0])]
    return ds


def genus1_parity(
    k: int, mu_half: Sequence[int], d: int, verified: Collection[int] | None = None
) -> Parity:
    """Parity of the genus-one component of (2 mu) with rotation number d."""
    if k % 2 == 0:
        raise KEven(f"k = {k} is even")
    stratum = validate_stratum(k, [2 * m for m in mu_half])
    if stratum.genus != 1:
        raise WrongGenus(f"genus is {stratum.genus}, expected 1")
    if d not in torsion_numbers(stratum.orders):
        raise InvalidTorsion(f"{d} is not a rotation number of {stratum}")
    bit = (nk(k, mu_half) + d + 1) % 2
    two_point = len(mu_half) == 2 and mu_half[0] == -mu_half[1]
    return Parity(bit, conditional=not (two_point or _is_unconditional(k, verified)))


def glue_parity(d0: int, phi0: int, d1: int, phi1: int) -> int:
    """Parity of a differential glued from a d0-th and a d1-th power."""
    if min(d0, d1) < 1:
        raise PreconditionViolation("d0 and d1 must be positive")
    return (d0 * phi0 + d1 * phi1) % 2

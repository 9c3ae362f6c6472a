"""Local and global data of the canonical k-cyclic cover."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ZeroEntry
from .strata_core import Stratum, power_decompositions


@dataclass(frozen=True)
class CoverLocal:
    r: int  # preimages of the singularity
    ell: int  # ramification order at each preimage
    m_hat: int  # order of the abelian differential upstairs


@dataclass(frozen=True)
class CoverProfile:
    locals: tuple[CoverLocal, ...]
    cover_genus: int
    # The genus above is the genus of a connected cover, which is only right
    # for primitive differentials.
    assumes_primitive: bool = True
    power_loci: tuple[int, ...] = ()


def cover_local(m: int, k: int) -> CoverLocal:
    if m == 0:
        raise ZeroEntry("order must be nonzero")
    r = gcd(m, k)
    return CoverLocal(r=r, ell=k // r, m_hat=(m + k) // r - 1)


def cover_profile(stratum: Stratum) -> CoverProfile:
    k = stratum.k
    locs = tuple(cover_local(m, k) for m in stratum.orders)
    # Riemann-Hurwitz: 2g^ - 2 = k(2g - 2) + sum(k - r_i)
    chi = k * (2 * stratum.genus - 2) + sum(k - c.r for c in locs)
    return CoverProfile(
        locals=locs,
        cover_genus=chi // 2 + 1,
        power_loci=tuple(power_decompositions(stratum)),
    )


def v2(n: int) -> int:
    n = abs(n)
    return (n & -n).bit_length() - 1


def is_parity_type(stratum: Stratum) -> bool:
    """Every entry has 2-adic valuation different from that of k."""
    vk = v2(stratum.k)
    return all(v2(m) != vk for m in stratum.orders)

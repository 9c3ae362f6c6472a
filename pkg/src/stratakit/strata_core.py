"""Signatures and strata.

Orders are stored in the analytic convention: a pole of order m is the entry
-m. Where metric notions matter the threshold is explicit: an entry is a
metric zero iff it is > -k, and a metric pole iff it is <= -k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import NegativeGenus, NotPartition, PreconditionViolation, ZeroEntry


def _canonical(orders: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted((int(m) for m in orders), reverse=True))


@dataclass(frozen=True)
class Signature:
    """Unlabeled multiset of nonzero orders for k-differentials."""

    orders: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise PreconditionViolation(f"k must be positive, got {self.k}")
        if not self.orders:
            raise PreconditionViolation("a signature needs at least one entry")
        if any(m == 0 for m in self.orders):
            raise ZeroEntry("zero-order entries are not part of a signature")
        total = sum(self.orders)
        if total % (2 * self.k):
            raise NotPartition(f"sum {total} is not divisible by 2k = {2 * self.k}")
        object.__setattr__(self, "orders", _canonical(self.orders))

    def __len__(self) -> int:
        return len(self.orders)

    def __iter__(self):
        return iter(self.orders)

    def __str__(self) -> str:
        return format_signature(self.orders)


@dataclass(frozen=True)
class Stratum:
    signature: Signature
    genus: int

    @property
    def k(self) -> int:
        return self.signature.k

    @property
    def orders(self) -> tuple[int, ...]:
        return self.signature.orders

    @property
    def zeros(self) -> tuple[int, ...]:
        return tuple(m for m in self.orders if m > 0)

    @property
    def poles(self) -> tuple[int, ...]:
        return tuple(m for m in self.orders if m < 0)

    def metric_poles(self) -> tuple[int, ...]:
        return tuple(m for m in self.orders if m <= -self.k)

    def has_metric_pole(self) -> bool:
        return any(m <= -self.k for m in self.orders)

    def __str__(self) -> str:
        return f"k={self.k} g={self.genus} ({self.signature})"


def validate_stratum(k: int, orders: Sequence[int]) -> Stratum:
    """Build a stratum, computing the genus from sum(orders) = k(2g - 2)."""
    if k < 1:
        raise PreconditionViolation(f"k must be positive, got {k}")
    if len(orders) == 0:
        raise PreconditionViolation("a signature needs at least one entry")
    if any(int(m) == 0 for m in orders):
        raise ZeroEntry("zero-order entries are not part of a signature")
    sig = Signature(tuple(orders), k)
    genus = sum(sig.orders) // (2 * k) + 1
    if genus < 0:
        raise NegativeGenus(f"sum {sum(sig.orders)} gives genus {genus}")
    return Stratum(sig, genus)


def parse_orders(text: str) -> list[int]:
    """Parse "12,-8" style text. Whitespace is ignored."""
    cleaned = "".join(text.split())
    if not cleaned:
        raise PreconditionViolation("empty signature text")
    try:
        return [int(tok) for tok in cleaned.split(",")]
    except ValueError as exc:
        raise PreconditionViolation(f"cannot parse signature {text!r}") from exc


def format_signature(orders: Iterable[int]) -> str:
    return ",".join(str(m) for m in orders)


def signature_gcd(sig: Signature | Stratum | Iterable[int]) -> int:
    """gcd of the absolute values of all entries."""
    if isinstance(sig, Stratum):
        sig = sig.signature
    orders = sig.orders if isinstance(sig, Signature) else tuple(sig)
    return reduce(gcd, (abs(m) for m in orders), 0)


def divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def power_decompositions(stratum: Stratum) -> list[int]:
    """All d > 1 dividing k and every entry.

    Each such d marks the locus of d-th powers of (k/d)-differentials with
    signature mu/d.
    """
    g = gcd(stratum.k, signature_gcd(stratum))
    return [d for d in divisors(g) if d > 1]


def genus_of(k: int, orders: Iterable[int]) -> int:
    return sum(orders) // (2 * k) + 1

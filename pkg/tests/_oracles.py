"""Independent oracles shared by the unit and acceptance tests."""

from __future__ import annotations

from stratakit.classify import AB, AB_EVEN, AB_ODD, HYP, NONAB_NONHYP, NONHYP

CASE_1B = {(8, -4), (4, 4, -4), (8, -2, -2), (4, 4, -2, -2)}


def partitions(total: int, lo: int, hi: int, max_len: int):
    """Nonincreasing tuples of nonzero integers in [lo, hi] summing to total."""

    def rec(remaining, cap, length):
        if remaining == 0 and length:
            yield ()
        if length == max_len:
            return
        left = max_len - length - 1
        for m in range(min(cap, hi), lo - 1, -1):
            if m == 0:
                continue
            rest = remaining - m
            # the remaining entries lie in [lo, m]
            if rest > left * m or rest < left * lo:
                continue
            for tail in rec(rest, m, length + 1):
                yield (m,) + tail

    yield from rec(total, hi, 0)


def quadratic_metric_pole_signatures(genus: int, lo: int = -12, hi: int = 12, max_len: int = 8):
    for orders in partitions(2 * (2 * genus - 2), lo, hi, max_len):
        if any(m <= -2 for m in orders):
            yield orders


def structural_kinds(orders: tuple[int, ...], hyperelliptic: bool) -> list[str]:
    """Expected component kinds of a quadratic stratum with a metric pole.

    Built from the defining properties of each component type rather than
    the case list: squares of abelian differentials need all orders even and
    a polar part other than a single double pole; they split by parity when
    all orders are 0 mod 4 (double poles counted as a pair of simple poles).
    """
    zeros = [m for m in orders if m > 0]
    poles = sorted(-m for m in orders if m < 0)
    ab = all(m % 2 == 0 for m in orders) and poles != [2]
    ab_split = ab and (
        all(m % 4 == 0 for m in orders) or (poles == [2, 2] and all(z % 4 == 0 for z in zeros))
    )
    kinds = []
    if hyperelliptic:
        kinds.append(HYP)
    if ab_split:
        kinds += [AB_EVEN, AB_ODD]
    elif ab:
        kinds.append(AB)
    if tuple(orders) in CASE_1B:
        # hyperelliptic coincides with one of the abelian parity components
        kinds.remove(AB_ODD if tuple(orders) in {(8, -4), (4, 4, -4)} else AB_EVEN)
    kinds.append(NONHYP if hyperelliptic and not ab else NONAB_NONHYP)
    return sorted(kinds)

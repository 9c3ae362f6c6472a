"""Exception hierarchy.

Everything raised on bad input derives from ``StrataError`` so callers (and
the CLI) can catch a single type. ``ConjectureCounterexample`` is kept apart
because it signals a mathematical finding, not a usage mistake.
"""

from __future__ import annotations


class StrataError(ValueError):
    """Base class for invalid input or violated preconditions."""


class ZeroEntry(StrataError):
    pass


class NotPartition(StrataError):
    pass


class NegativeGenus(StrataError):
    pass


class NotParityType(StrataError):
    pass


class KEven(StrataError):
    pass


class KOdd(StrataError):
    pass


class NotOddPrime(StrataError):
    pass


class WrongGenus(StrataError):
    pass


class InvalidTorsion(StrataError):
    pass


class GcdViolation(StrataError):
    pass


class NotPartitionOfMinusK(StrataError):
    pass


class PreconditionViolation(StrataError):
    pass


class RangeViolation(StrataError):
    pass


class NonRealizable(StrataError):
    pass


class RuleInapplicable(StrataError):
    pass


class ConjectureCounterexample(Exception):
    """A sweep row whose count has the wrong parity.

    The offending row is available as ``.row``.
    """

    def __init__(self, row):
        super().__init__(
            f"parity mismatch at k={row.k}, n={row.n}: "
            f"N={row.count}, floor((k+1)/4)={row.target}"
        )
        self.row = row

import pytest
from hypothesis import given, strategies as st

from stratakit.errors import NotPartition, PreconditionViolation, ZeroEntry
from stratakit.strata_core import (
    Signature,
    divisors,
    format_signature,
    genus_of,
    parse_orders,
    power_decompositions,
    signature_gcd,
    validate_stratum,
)


def test_signature_is_canonical():
    assert Signature((-4, 8), 2).orders == (8, -4)
    assert Signature((-4, 8), 2) == Signature((8, -4), 2)


def test_genus_from_sum():
    assert validate_stratum(2, [8, -4]).genus == 2
    assert validate_stratum(3, [2, 2, -10]).genus == 0
    assert validate_stratum(3, [6, -6]).genus == 1
    assert genus_of(3, [6]) == 2


@pytest.mark.parametrize(
    "k, orders, exc",
    [
        (2, [3, -8], NotPartition),
        (2, [0, 4], ZeroEntry),
        (0, [2], PreconditionViolation),
        (2, [], PreconditionViolation),
    ],
)
def test_invalid_signatures(k, orders, exc):
    with pytest.raises(exc):
        validate_stratum(k, orders)


def test_parse_and_format_round_trip():
    assert parse_orders("12, -8") == [12, -8]
    assert format_signature((12, -8)) == "12,-8"
    with pytest.raises(PreconditionViolation):
        parse_orders("1,x")


def test_metric_zeros_and_poles():
    s = validate_stratum(3, [5, 1, -1, -2, -3])
    assert s.zeros == (5, 1)
    assert s.poles == (-1, -2, -3)
    assert s.metric_poles() == (-3,)
    assert s.has_metric_pole()


def test_divisors_and_gcd():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert signature_gcd((12, -8)) == 4


def test_power_decompositions():
    # arithmetic condition only: d > 1 divides k and every entry
    assert power_decompositions(validate_stratum(3, [12])) == [3]
    assert power_decompositions(validate_stratum(6, [12, -12])) == [2, 3, 6]
    assert power_decompositions(validate_stratum(2, [5, 1, -2])) == []


@given(st.integers(1, 6), st.lists(st.integers(-20, 20).filter(bool), min_size=1, max_size=6))
def test_genus_formula(k, orders):
    total = sum(orders)
    if total % (2 * k):
        with pytest.raises(NotPartition):
            Signature(tuple(orders), k)
        return
    g = total // (2 * k) + 1
    if g < 0:
        return
    assert validate_stratum(k, orders).genus == g

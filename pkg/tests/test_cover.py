from math import gcd

import pytest
from hypothesis import given, strategies as st

from stratakit.cover import cover_local, cover_profile, is_parity_type, v2
from stratakit.errors import ZeroEntry
from stratakit.strata_core import validate_stratum


def test_local_data():
    c = cover_local(-8, 2)
    assert (c.r, c.ell, c.m_hat) == (2, 1, -4)
    c = cover_local(2, 3)
    assert (c.r, c.ell, c.m_hat) == (1, 3, 4)
    with pytest.raises(ZeroEntry):
        cover_local(0, 3)


def test_cover_genus_examples():
    # quadratic (4) in genus 2 lifts to an abelian differential with two zeros of order 2
    prof = cover_profile(validate_stratum(2, [4]))
    assert prof.cover_genus == 3
    assert [c.m_hat for c in prof.locals] == [2]
    # cubic (2, 2, -10): three fully ramified points
    prof = cover_profile(validate_stratum(3, [2, 2, -10]))
    assert prof.cover_genus == 1 + (3 * -2 + 3 * 2) // 2
    assert prof.assumes_primitive


def test_v2():
    assert [v2(n) for n in (1, 2, 3, 4, 12, -8)] == [0, 1, 0, 2, 2, 3]


def test_parity_type():
    assert is_parity_type(validate_stratum(3, [2, 2, -10]))
    assert not is_parity_type(validate_stratum(3, [3, -3]))
    assert is_parity_type(validate_stratum(2, [8, -4]))
    assert not is_parity_type(validate_stratum(2, [6, -2]))


@given(st.integers(1, 12), st.lists(st.integers(-40, 40).filter(bool), min_size=1, max_size=6))
def test_riemann_hurwitz_consistency(k, orders):
    """Upstairs orders of the abelian differential sum to 2g^ - 2."""
    total = sum(orders)
    if total % (2 * k) or total // (2 * k) + 1 < 0:
        return
    s = validate_stratum(k, orders)
    prof = cover_profile(s)
    upstairs = sum(c.r * c.m_hat for c in prof.locals)
    assert upstairs == 2 * prof.cover_genus - 2
    for m, c in zip(s.orders, prof.locals):
        assert c.r == gcd(m, k) and c.r * c.ell == k

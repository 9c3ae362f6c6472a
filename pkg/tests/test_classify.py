import json

import pytest

from _oracles import quadratic_metric_pole_signatures, structural_kinds
from stratakit.classify import (
    AB_EVEN,
    AB_ODD,
    COMPLETE,
    CONNECTED,
    HYP,
    NONHYP,
    OUT_OF_SCOPE,
    PARTIAL,
    POWER,
    classify,
    classify_cubic_g2,
    classify_quadratic,
    genus1_components,
    hyperelliptic_component,
    hyperelliptic_shapes,
    matching_quadratic_cases,
    merge_to_minimal,
    rotation_from_bubbling,
)
from stratakit.errors import PreconditionViolation, RangeViolation, WrongGenus
from stratakit.strata_core import validate_stratum

GOLDENS = [
    ((12, -8), "1a", 4),
    ((8, -4), "1b", 3),
    ((4, 4, -4), "1b", 3),
    ((8, -2, -2), "1b", 3),
    ((4, 4, -2, -2), "1b", 3),
    ((6, -2), "4", 2),
    ((5, 1, -2), "6", 1),
    ((6, 2, -2, -2), "5", 2),
    ((4, 8, -2, -2), "3", 3),
    ((10, -2, -4), "5", 2),
]


@pytest.mark.parametrize("orders, case, count", GOLDENS)
def test_quadratic_goldens(orders, case, count):
    res = classify(validate_stratum(2, orders))
    assert res.status == COMPLETE
    assert res.case == case
    assert res.count == count


def test_case_1b_coincidences():
    hyp = classify(validate_stratum(2, [8, -4])).components[0]
    assert hyp.kind == HYP and hyp.coincides_with == (AB_ODD,)
    hyp = classify(validate_stratum(2, [8, -2, -2])).components[0]
    assert hyp.kind == HYP and hyp.coincides_with == (AB_EVEN,)


def test_structural_oracle_genus2():
    n = 0
    for orders in quadratic_metric_pole_signatures(2, -8, 8, 6):
        st = validate_stratum(2, orders)
        assert len(matching_quadratic_cases(st.orders)) == 1, orders
        hyp = hyperelliptic_component(st) is not None
        assert sorted(classify_quadratic(st).kinds()) == structural_kinds(st.orders, hyp), orders
        n += 1
    assert n > 1000


def test_hyperelliptic_shapes():
    assert hyperelliptic_shapes(validate_stratum(2, [6, -2])) == ["(2m1,2m2)"]
    assert hyperelliptic_shapes(validate_stratum(3, [12])) == ["(k(2g-2))"]
    assert hyperelliptic_component(validate_stratum(2, [5, 1, -2])) is None


def test_genus1_components():
    comps = genus1_components(3, (6, -6))
    assert [c.d for c in comps] == [1, 2, 3]
    assert [c.parity.bit for c in comps] == [0, 1, 0]
    assert [c.primitive for c in comps] == [True, True, False]
    # n = -m exclusion: (4, -4) has no rotation number 4
    assert [c.d for c in genus1_components(2, (4, -4))] == [1, 2]
    with pytest.raises(WrongGenus):
        genus1_components(3, (6,))


def test_rotation_from_bubbling():
    assert rotation_from_bubbling(2, 2, (0, -4)) == 2
    assert rotation_from_bubbling(2, 1, (0, -4)) == 1
    with pytest.raises(RangeViolation):
        rotation_from_bubbling(2, 4, (0, -4))


def test_cubic_genus2():
    r = classify_cubic_g2(validate_stratum(3, [6]))
    assert [c.label for c in r.components] == ["PowerLocus(3)", NONHYP]
    assert r.components[0].coincides_with == (HYP,)
    assert r.components[1].parity.bit == 0
    r = classify(validate_stratum(3, [4, 2]))
    assert [(c.kind, c.parity.bit) for c in r.components] == [(HYP, 1), (NONHYP, 0)]
    r = classify(validate_stratum(3, [2, 2, 2]))
    assert [(c.kind, c.parity.bit) for c in r.components] == [(HYP, 0), (NONHYP, 1)]
    with pytest.raises(PreconditionViolation):
        classify_cubic_g2(validate_stratum(3, [12]))


def test_dispatch():
    assert classify(validate_stratum(3, [2, 2, -10])).components[0].kind == CONNECTED
    assert classify(validate_stratum(1, [2])).status == OUT_OF_SCOPE
    assert classify(validate_stratum(2, [4])).status == OUT_OF_SCOPE
    r = classify(validate_stratum(3, [12]))
    assert r.status == PARTIAL
    assert POWER in {c.kind for c in r.components}


def test_json_shape():
    data = json.loads(json.dumps(classify(validate_stratum(3, [6, -6])).to_json()))
    assert set(data) == {"status", "components", "notes"}
    first = data["components"][0]
    assert first["kind"] == "Rotation(1)" and first["rotation"] == 1
    assert {"parity", "conditional", "primitive", "provenance"} <= set(first)


def test_merge_bound():
    for orders in quadratic_metric_pole_signatures(2, -6, 6, 5):
        st = validate_stratum(2, orders)
        for b in range(st.orders.count(-1) + 1):
            for poles in (False, True):
                res = merge_to_minimal(st, b=b, poles=poles)
                assert classify(st).count <= res.bound, (orders, b, poles)


def test_merge_guards():
    with pytest.raises(PreconditionViolation):
        merge_to_minimal(validate_stratum(2, [4]))
    with pytest.raises(PreconditionViolation):
        merge_to_minimal(validate_stratum(2, [3, 1, -1, -3]), b=2)
    res = merge_to_minimal(validate_stratum(2, [3, 1, -1, -3]), b=1)
    assert res.merged.orders == (3, -3)

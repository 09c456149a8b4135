import pytest
from hypothesis import given
from hypothesis import strategies as st

from rigidity.extnat import INF, OMEGA, from_json, is_finite, parse, pos_pred, to_json

nat = st.integers(min_value=0, max_value=10**6)


def test_omega_is_inf():
    assert OMEGA is INF
    assert not is_finite(INF) and is_finite(3)


@given(nat)
def test_order_and_arithmetic(k):
    assert k < INF and INF > k and max(INF, k) is INF
    assert INF + k is INF and k + INF is INF
    assert str(INF) == "INF"


def test_cardinal_products():
    assert 0 * INF == 0 and INF * 0 == 0
    assert 3 * INF is INF and INF * INF is INF


def test_pos_pred():
    assert pos_pred(0) == 0 and pos_pred(4) == 3 and pos_pred(INF) is INF


def test_json_tokens():
    assert to_json(INF) == "inf" and to_json(INF, "omega") == "omega" and to_json(5) == 5
    for token in ("inf", "omega", "∞", "ω"):
        assert from_json(token) is INF
    assert parse("7") == 7 and parse("inf") is INF
    for bad in ("many", -1, True, 1.5):
        with pytest.raises(ValueError):
            from_json(bad)

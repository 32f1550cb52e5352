import pytest

from parameters import (
    INFINITY,
    ConsistencyError,
    HeckeTypeBError,
    OutOfScopeError,
    Params,
    format_order,
    is_infinite,
    normalize_params,
    parse_order,
    validate_order,
)


@pytest.mark.parametrize("text, expected", [("7", 7), (" 12 ", 12), ("inf", INFINITY), ("Infinity", INFINITY), ("∞", INFINITY)])
def test_parse_order(text, expected):
    assert parse_order(text) == expected


def test_parse_order_rejects_garbage():
    with pytest.raises(HeckeTypeBError):
        parse_order("seven")


def test_format_order():
    assert format_order(INFINITY) == "inf"
    assert format_order(5) == "5"
    assert is_infinite(INFINITY)
    assert not is_infinite(5)


@pytest.mark.parametrize("e", [1, 2])
def test_q_plus_minus_one_is_out_of_scope(e):
    with pytest.raises(OutOfScopeError, match="out of scope"):
        validate_order(e)
    with pytest.raises(OutOfScopeError):
        Params(e, 0)


def test_error_hierarchy():
    assert issubclass(OutOfScopeError, HeckeTypeBError)
    assert issubclass(HeckeTypeBError, ValueError)
    assert not issubclass(ConsistencyError, HeckeTypeBError)


@pytest.mark.parametrize("e, f", [(5, 3), (6, -1), (4, 3)])
def test_params_rejects_charge_out_of_range(e, f):
    with pytest.raises(HeckeTypeBError):
        Params(e, f)


def test_params_accepts_any_charge_for_infinite_e():
    params = Params(INFINITY, 9)
    assert not params.is_finite
    assert params.finite_type_bound == 22
    assert params.residue(-4) == -4


def test_finite_type_bound():
    assert Params(5, 1).finite_type_bound == 5
    assert Params(10, 2).finite_type_bound == 8
    assert Params(4, 2).finite_type_bound == 4


def test_residues():
    params = Params(5, 2)
    assert params.residues() == [0, 1, 2, 3, 4]
    assert params.residue(-1) == 4
    assert params.residue(7) == 2
    with pytest.raises(HeckeTypeBError):
        Params(INFINITY, 0).residues()


def test_renormalized_round_trip():
    params = Params(7, 3)
    frame = params.renormalized()
    assert frame == Params(7, 4, swapped=True)
    assert frame.renormalized() == params
    assert str(frame) == "e=7, f=4 (swapped)"
    assert str(params) == "e=7, f=3"


def test_renormalized_needs_finite_e():
    with pytest.raises(HeckeTypeBError):
        Params(INFINITY, 1).renormalized()


@pytest.mark.parametrize("e, f0, f", [(10, 7, 3), (10, 4, 4), (5, 0, 0), (5, 4, 1), (6, 3, 3)])
def test_normalize_params(e, f0, f):
    assert normalize_params(e, f0) == Params(e, f)


def test_normalize_params_bounds():
    with pytest.raises(HeckeTypeBError):
        normalize_params(5, 5)
    with pytest.raises(HeckeTypeBError):
        normalize_params(5, -1)
    assert normalize_params(INFINITY, 12) == Params(INFINITY, 12)

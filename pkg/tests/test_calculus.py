import pytest
from hypothesis import given, settings

from qcp1.algebra import B_minus, B_plus, B_zero, a, a_star, c, c_star, mul
from qcp1.calculus import (
    SWAP, Form, FormError, d2_on_oneform, d3, dbar, del_, form_from_json, form_to_json, integrand_top,
    order_label, parse_label, push_left, star_form, wedge,
)
from qcp1.scalar import ONE, vpow
from strategies import elements, l0_elements

Q = vpow(2)


def d(f):
    return d3(Form.function(f))


def _oneform(x, y, z):
    return Form(1, {("-",): x, ("+",): y, ("z",): z})


def test_swap_rules():
    assert SWAP[("+", "-")] == -Q ** 2
    assert SWAP[("z", "-")] == -Q ** 4
    assert SWAP[("z", "+")] == -Q ** -4
    assert order_label(("-", "-")) is None
    s, lab = order_label(("z", "+", "-"))
    assert lab == ("-", "+", "z")


def test_wedge_reorders():
    lhs = wedge(Form.basis("+"), Form.basis("-"))
    assert lhs == Form.basis("-", "+").scale(-Q ** 2)
    assert wedge(Form.basis("-"), Form.basis("-")).is_zero()


@pytest.mark.parametrize("x,s", [(a, Q ** -1), (a_star, Q), (c, Q ** -1), (c_star, Q)])
@pytest.mark.parametrize("lab", ["+", "-"])
def test_push_rules_horizontal(x, s, lab):
    assert push_left(x, (lab,)) == Form(1, {(lab,): x.scale(s)})


@pytest.mark.parametrize("x,s", [(a, Q ** -2), (a_star, Q ** 2), (c, Q ** -2), (c_star, Q ** 2)])
def test_push_rules_vertical(x, s):
    assert push_left(x, ("z",)) == Form(1, {("z",): x.scale(s)})


def test_maurer_cartan_forms():
    assert d(a).left_mul(a_star) + d(c).left_mul(c_star) == Form.basis("z")
    assert d(a_star).left_mul(c_star) - d(c_star).left_mul(a_star).scale(Q) == Form.basis("-")
    assert d(c).left_mul(a) - d(a).left_mul(c).scale(Q) == Form.basis("+")


def test_structure_equations():
    assert d3(Form.basis("z")) == Form.basis("-", "+").scale(-ONE)
    assert d3(Form.basis("+")) == Form.basis("z", "+").scale(Q ** 2 + Q ** 4)
    assert d3(Form.basis("-")) == Form.basis("z", "-").scale(-(ONE + Q ** -2))


def test_relations_among_differentials():
    r1 = del_(B_zero) - del_(B_plus).left_mul(B_minus).scale(Q ** -2) + del_(B_minus).left_mul(B_plus).scale(Q ** 2)
    r2 = dbar(B_zero) - dbar(B_minus).left_mul(B_plus) + dbar(B_plus).left_mul(B_minus).scale(Q ** -4)
    assert r1.is_zero()
    assert r2.is_zero()


def test_d_of_cp1_function_splits():
    for f in (B_zero, B_plus, B_minus, mul(B_zero, B_plus)):
        assert d(f) == del_(f) + dbar(f)


def test_del_requires_degree_zero():
    with pytest.raises(Exception):
        del_(a)


def test_d_refuses_three_forms():
    with pytest.raises(FormError):
        d3(Form.basis("-", "+", "z"))


def test_json_round_trip():
    w = _oneform(a, mul(c, c_star), B_minus)
    assert form_from_json(form_to_json(w)) == w
    assert parse_label("w-^w+") == ("-", "+")


def test_integrand_top_rejects_vertical():
    with pytest.raises(FormError):
        integrand_top(Form.basis("-", "z"))


@settings(max_examples=40, deadline=None)
@given(elements())
def test_d_squared_zero_on_functions(f):
    assert d3(d(f)).is_zero()


@settings(max_examples=25, deadline=None)
@given(elements(1), elements(1), elements(1))
def test_d_squared_zero_on_oneforms(x, y, z):
    assert d3(d3(_oneform(x, y, z))).is_zero()


@settings(max_examples=25, deadline=None)
@given(elements(1), elements(1), elements(1), elements(1))
def test_graded_leibniz(f, x, y, z):
    w = _oneform(x, y, z)
    F = Form.function(f)
    assert d3(wedge(F, w)) == wedge(d(f), w) + wedge(F, d3(w))


@settings(max_examples=40, deadline=None)
@given(elements())
def test_star_commutes_with_d(f):
    assert d(f.star()) == star_form(d(f))


@settings(max_examples=25, deadline=None)
@given(elements(1), elements(1), elements(1))
def test_star_commutes_with_d_on_oneforms(x, y, z):
    w = _oneform(x, y, z)
    assert d3(star_form(w)) == star_form(d3(w))


@settings(max_examples=40, deadline=None)
@given(l0_elements())
def test_del_star_is_dbar(f):
    assert star_form(del_(f)) == dbar(f.star())


@settings(max_examples=40, deadline=None)
@given(l0_elements(), l0_elements())
def test_top_form_commutes_with_cp1(f, g):
    top = Form.basis("-", "+")
    assert top.right_mul(f) == top.left_mul(f)


@settings(max_examples=40, deadline=None)
@given(l0_elements(2, 3))
def test_del_dbar_is_d_of_dbar(b):
    assert d2_on_oneform(dbar(b)) == d3(dbar(b))

import pytest
from hypothesis import given, settings

from qcp1.algebra import AlgebraElement, B_zero, a, a_star, c, c_star, mul
from qcp1.bundles import weight
from qcp1.scalar import ONE, vpow
from qcp1.symmetry import (
    SIGMA_SIGN, UqWord, act_left, act_right, k_power_left, left_weight, modular_sigma,
    right_weight, sigma_scalar, vector_field,
)
from qcp1.verify import lact_power_cases
from strategies import elements

Q = vpow(2)
GENS = {"a": a, "a*": a_star, "c": c, "c*": c_star}

# Dual pairing of U_q(su2) with the matrix entries, and the coproduct of the
# generators read off from u = [[a, -q c*], [c, a*]].  Everything below is an
# independent route to the four generator tables.
PAIRING = {
    ("K", "a"): vpow(-1), ("K", "a*"): vpow(1),
    ("Kinv", "a"): vpow(1), ("Kinv", "a*"): vpow(-1),
    ("E", "c"): ONE,
    ("F", "c*"): -vpow(-2),
}
COPRODUCT = {
    "a": [(ONE, "a", "a"), (-Q, "c*", "c")],
    "c": [(ONE, "c", "a"), (ONE, "a*", "c")],
    "a*": [(ONE, "a*", "a*"), (-Q, "c", "c*")],
    "c*": [(ONE, "c*", "a*"), (ONE, "a", "c*")],
}


def _pair(g, x):
    return PAIRING.get((g, x), 0 * ONE)


def _left_from_pairing(g, x):
    out = AlgebraElement()
    for coef, x1, x2 in COPRODUCT[x]:
        out = out + GENS[x1].scale(coef * _pair(g, x2))
    return out


def _right_from_pairing(x, g):
    out = AlgebraElement()
    for coef, x1, x2 in COPRODUCT[x]:
        out = out + GENS[x2].scale(coef * _pair(g, x1))
    return out


@pytest.mark.parametrize("g", ["K", "Kinv", "E", "F"])
@pytest.mark.parametrize("x", ["a", "a*", "c", "c*"])
def test_left_tables_match_pairing(g, x):
    assert act_left(g, GENS[x]) == _left_from_pairing(g, x)


@pytest.mark.parametrize("g", ["K", "Kinv", "E", "F"])
@pytest.mark.parametrize("x", ["a", "a*", "c", "c*"])
def test_right_tables_match_pairing(g, x):
    assert act_right(GENS[x], g) == _right_from_pairing(x, g)


def test_weights():
    assert left_weight((1, 0, 0)) == -1
    assert left_weight((0, 0, 1)) == 1
    assert right_weight((0, 1, 0)) == 1
    assert weight((2, 1, 0)) == -3


def test_power_formulas():
    bad = [case for case in lact_power_cases(6) if not case[0]]
    assert not bad


def _comm(g, h, x):
    return act_left(g, act_left(h, x)) - act_left(h, act_left(g, x))


@settings(max_examples=40)
@given(elements())
def test_uq_relations_left(x):
    k2 = act_left("K", act_left("K", x))
    kinv2 = act_left("Kinv", act_left("Kinv", x))
    assert _comm("E", "F", x) == (k2 - kinv2).scale((Q - Q.inverse()).inverse())
    assert act_left("K", act_left("E", act_left("Kinv", x))) == act_left("E", x).scale(Q)
    assert act_left("K", act_left("F", act_left("Kinv", x))) == act_left("F", x).scale(Q.inverse())
    assert act_left("K", act_left("Kinv", x)) == x


@settings(max_examples=40)
@given(elements())
def test_uq_relations_right(x):
    def r(y, *gs):
        for g in gs:
            y = act_right(y, g)
        return y
    lhs = r(x, "E", "F") - r(x, "F", "E")
    rhs = (r(x, "K", "K") - r(x, "Kinv", "Kinv")).scale((Q - Q.inverse()).inverse())
    assert lhs == rhs


@settings(max_examples=40)
@given(elements(), elements())
def test_module_algebra(x, y):
    # Delta E = E (x) K + K^-1 (x) E,  Delta F = F (x) K + K^-1 (x) F
    for g in ("E", "F"):
        want = mul(act_left(g, x), act_left("K", y)) + mul(act_left("Kinv", x), act_left(g, y))
        assert act_left(g, mul(x, y)) == want
    assert act_left("K", mul(x, y)) == mul(act_left("K", x), act_left("K", y))


@settings(max_examples=40)
@given(elements())
def test_left_and_right_commute(x):
    for g in ("K", "E", "F"):
        for h in ("K", "E", "F"):
            assert act_right(act_left(g, x), h) == act_left(g, act_right(x, h))


def test_uqword():
    w = UqWord(["E", "F"], Q)
    assert w.act_left(c) == act_left("E", act_left("F", c)).scale(Q)
    with pytest.raises(ValueError):
        UqWord(["X"])


def test_k_power_left_matches_repeated_action():
    x = mul(a, c_star) + mul(c, c) + a_star
    y = x
    for _ in range(4):
        y = act_left("K", y)
    assert k_power_left(4, x) == y


def test_vector_fields_on_b_zero():
    assert vector_field("Xplus", B_zero) == mul(c_star, a_star)
    assert vector_field("Xminus", mul(a, c)).is_zero()
    assert vector_field("Xz", B_zero).is_zero()


@pytest.mark.parametrize("n", range(-4, 5))
def test_xz_eigenvalue(n):
    # on L_n: (1 - q^{2n}) / (1 - q^{-2})
    x = AlgebraElement.monomial(-n, 0, 0) if n >= 0 else AlgebraElement.monomial(0, -n, 0)
    assert weight(next(iter(x.terms))) == n
    want = (ONE - Q ** (2 * n)) / (ONE - Q ** -2) if n else 0 * ONE
    assert vector_field("Xz", x) == x.scale(want)


def test_unknown_vector_field():
    with pytest.raises(ValueError):
        vector_field("Xw", a)


def test_sigma_is_two_sided_k_power():
    assert SIGMA_SIGN == -1
    for x in (a, a_star, c, c_star, mul(a, c_star), mul(a_star, a_star)):
        mono = next(iter(x.terms))
        assert modular_sigma(x) == x.scale(sigma_scalar(mono))
    assert modular_sigma(a) == a.scale(Q ** 2)
    assert modular_sigma(c) == c

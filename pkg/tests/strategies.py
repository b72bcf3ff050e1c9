"""Hypothesis strategies shared by the property tests."""
from hypothesis import strategies as st

from qcp1.algebra import AlgebraElement
from qcp1.scalar import GaussianRational, ONE, Scalar, vpow

small = st.integers(min_value=-3, max_value=3)


@st.composite
def gaussians(draw):
    return GaussianRational(draw(small), draw(small))


@st.composite
def scalars(draw, allow_den=True, even=False):
    out = Scalar()
    for _ in range(draw(st.integers(0, 3))):
        e = draw(st.integers(-4, 4))
        out = out + Scalar.from_gaussian(draw(gaussians())) * vpow(2 * e if even else e)
    if allow_den and draw(st.booleans()):
        out = out / (ONE + vpow(2 * draw(st.integers(1, 3))))
    return out


@st.composite
def nonzero_scalars(draw):
    s = draw(scalars())
    return s if not s.is_zero() else ONE + vpow(2)


@st.composite
def elements(draw, max_exp=2, max_terms=3):
    e = st.integers(0, max_exp)
    x = AlgebraElement()
    for _ in range(draw(st.integers(0, max_terms))):
        m = draw(st.integers(-max_exp, max_exp))
        x = x + AlgebraElement.monomial(m, draw(e), draw(e), Scalar.from_gaussian(draw(gaussians())))
    return x


@st.composite
def l0_elements(draw, max_exp=1, max_terms=2):
    """Elements of A(CP^1): weight -m - k + l = 0."""
    x = AlgebraElement()
    for _ in range(draw(st.integers(0, max_terms))):
        m = draw(st.integers(-max_exp, max_exp))
        k = draw(st.integers(0, max_exp))
        l = m + k
        if l < 0:
            k, l = k - l, 0
        x = x + AlgebraElement.monomial(m, k, l, Scalar.from_gaussian(draw(gaussians())))
    return x

"""Haar state, the integral on CP^1_q, and twisted cochains.

The production Haar state is the closed formula

    h(a^m c^k c*^l) = 0 unless m = 0 and k = l,   h((cc*)^k) = (1 - q^2)/(1 - q^{2k+2}),

cross-checked by :func:`haar_oracle`, which solves the invariance equations on
the truncated algebra without using the formula.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .algebra import AlgebraElement, a, a_star, as_element, c, c_star, mul
from .bundles import filtered_basis, require_bundle, weight
from .calculus import Form, d2_on_oneform, dbar, del_, integrand_top, wedge
from .linalg import nullspace
from .scalar import ONE, ZERO, GaussianRational, Scalar, eval_at, vpow
from .symmetry import SIGMA_SIGN, act_left, act_right, sigma_scalar


@lru_cache(maxsize=None)
def haar_value(k: int) -> Scalar:
    """H_k = h((c c*)^k) = (1 - q^2)/(1 - q^{2k+2})."""
    return (ONE - vpow(4)) / (ONE - vpow(4 * k + 4))


def haar(x) -> Scalar:
    x = as_element(x)
    by_k: dict = {}
    for (m, k, l), coef in x.terms.items():
        if m == 0 and k == l:
            s = by_k.get(k)
            by_k[k] = coef if s is None else s + coef
    out = ZERO
    for k, s in by_k.items():
        if s:
            out = out + s * haar_value(k)
    return out


def haar_oracle(max_len: int = 12) -> dict:
    """Solve the invariance equations for h on L_0 up to word length max_len.

    Unknowns are h(x) for the L_0 monomials of length <= max_len (left K-invariance
    already kills every other weight).  Equations:

        h(E |> x) = 0 for x in L_-2,   h(F |> x) = 0 for x in L_2,
        h(x <| g) = eps(g) h(x) for g in {K, E, F} and x in L_0,   h(1) = 1.

    All x are taken of length <= max_len; the actions never increase length.
    Returns {monomial: value}; raises if the solution is not unique.
    """
    cols = filtered_basis(0, max_len - max_len % 2)
    index = {m: i for i, m in enumerate(cols)}
    n = len(cols)
    rows = []

    def add_row(img: AlgebraElement, rhs: Scalar = ZERO):
        row = [ZERO] * (n + 1)
        for mono, coef in img.terms.items():
            if weight(mono) != 0:
                continue
            row[index[mono]] = row[index[mono]] + coef
        row[n] = -rhs
        if any(not e.is_zero() for e in row):
            rows.append(row)

    top = max_len - max_len % 2
    for mono in filtered_basis(-2, top):
        add_row(act_left("E", AlgebraElement.monomial(*mono)))
    for mono in filtered_basis(2, top):
        add_row(act_left("F", AlgebraElement.monomial(*mono)))
    for mono in cols:
        x = AlgebraElement.monomial(*mono)
        add_row(act_right(x, "E"))
        add_row(act_right(x, "F"))
        add_row(act_right(x, "K") - x)
    # h(1) = 1 as an affine row: h(1) - 1 = 0
    one = [ZERO] * (n + 1)
    one[index[(0, 0, 0)]] = ONE
    one[n] = -ONE
    rows.append(one)
    # affine system A h + b = 0  <=>  (A | b) (h, 1)^T = 0
    kern = nullspace(rows, n + 1)
    if len(kern) != 1:
        raise ArithmeticError(f"invariance system has a {len(kern)}-dimensional solution space")
    vec = kern[0]
    scale = vec[n]
    if scale.is_zero():
        raise ArithmeticError("invariance system is inconsistent with h(1) = 1")
    return {m: vec[index[m]] / scale for m in cols}


def check_haar_closed_form(max_k: int = 6) -> dict:
    """Compare H_k with the oracle solution for k <= max_k.  Returns {k: bool}."""
    sol = haar_oracle(2 * max_k)
    out = {}
    for k in range(max_k + 1):
        out[k] = sol[(0, k, k)] == haar_value(k)
    # the oracle must also vanish off the diagonal monomials
    out["selection_rule"] = all(v.is_zero() for m, v in sol.items() if not (m[0] == 0 and m[1] == m[2]))
    return out


# -- modular automorphism ----------------------------------------------------

def sigma(x, sign: int = SIGMA_SIGN) -> AlgebraElement:
    """sigma on elements via its diagonal action on PBW monomials."""
    x = as_element(x)
    return AlgebraElement._raw({m: coef * sigma_scalar(m, sign) for m, coef in x.terms.items()})


def twisted_trace_check(x, y, sign: int = SIGMA_SIGN) -> bool:
    x, y = as_element(x), as_element(y)
    return haar(mul(x, y)) == haar(mul(sigma(y, sign), x))


def check_sigma_sign() -> int:
    """The unique sign making h(xy) = h(sigma(y) x) on (a, a*) and (c, c*)."""
    good = [s for s in (1, -1)
            if all(twisted_trace_check(x, y, s) for x, y in ((a, a_star), (a_star, a), (c, c_star), (c_star, c)))]
    if len(good) != 1:
        raise AssertionError(f"twisted trace selects signs {good}")
    return good[0]


# -- integration and cochains ------------------------------------------------

def integrate2(x: Form) -> Scalar:
    """int_h f w- ^ w+ = h(f) for f in A(CP^1)."""
    if x.is_zero():
        return ZERO
    f = integrand_top(x)
    require_bundle(f, 0, "integrand")
    return haar(f)


def _in_cp1(*xs):
    out = []
    for x in xs:
        x = as_element(x)
        require_bundle(x, 0, "cochain argument")
        out.append(x)
    return out


def _d(f) -> Form:
    return del_(f) + dbar(f)


def tau(a0, a1, a2) -> Scalar:
    a0, a1, a2 = _in_cp1(a0, a1, a2)
    w = wedge(_d(a1), _d(a2)).left_mul(a0)
    return integrate2(w) * HALF


def phi(a0, a1, a2) -> Scalar:
    a0, a1, a2 = _in_cp1(a0, a1, a2)
    return integrate2(wedge(del_(a1), dbar(a2)).left_mul(a0))


def del_dbar(b) -> Form:
    """del dbar b = d(dbar b), a multiple of w- ^ w+."""
    return d2_on_oneform(dbar(b))


def psi(a0, b) -> Scalar:
    a0, b = _in_cp1(a0, b)
    return integrate2(del_dbar(b).left_mul(a0)) * HALF


HALF = ONE / Scalar.from_gaussian(2)


@dataclass(frozen=True)
class Cochain:
    """A multilinear functional on (arity + 1)-tuples."""

    arity: int
    evaluator: Callable
    name: str = field(default="", compare=False)

    def __call__(self, *args) -> Scalar:
        if len(args) != self.arity + 1:
            raise TypeError(f"{self.name or 'cochain'} takes {self.arity + 1} arguments, got {len(args)}")
        return self.evaluator(*args)


TAU = Cochain(2, tau, "tau")
PHI = Cochain(2, phi, "phi")
PSI = Cochain(1, psi, "psi")


def b_sigma(ch: Cochain) -> Cochain:
    """Twisted coboundary.

    (b f)(a_0..a_{n+1}) = sum_j (-1)^j f(.., a_j a_{j+1}, ..) + (-1)^{n+1} f(sigma(a_{n+1}) a_0, a_1, .., a_n)
    """
    n = ch.arity

    def ev(*args):
        args = [as_element(x) for x in args]
        out = ZERO
        for j in range(n + 1):
            merged = args[:j] + [mul(args[j], args[j + 1])] + args[j + 2:]
            t = ch(*merged)
            out = out + t if j % 2 == 0 else out - t
        t = ch(mul(sigma(args[n + 1]), args[0]), *args[1:n + 1])
        return out + t if (n + 1) % 2 == 0 else out - t

    return Cochain(n + 1, ev, f"b({ch.name})")


def lambda_sigma(ch: Cochain) -> Cochain:
    """(lambda f)(a_0..a_n) = (-1)^n f(sigma(a_n), a_0, .., a_{n-1})."""
    n = ch.arity

    def ev(*args):
        args = [as_element(x) for x in args]
        t = ch(sigma(args[n]), *args[:n])
        return t if n % 2 == 0 else -t

    return Cochain(n, ev, f"lambda({ch.name})")


def difference(c1: Cochain, c2: Cochain) -> Cochain:
    if c1.arity != c2.arity:
        raise ValueError("arity mismatch")
    return Cochain(c1.arity, lambda *xs: c1(*xs) - c2(*xs), f"{c1.name}-{c2.name}")


# -- positivity --------------------------------------------------------------

@dataclass
class GramReport:
    size: int
    q0: GaussianRational
    matrix: list
    hermitian: bool
    char_poly_coeffs: list
    psd: bool

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "q0": str(self.q0),
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "hermitian": self.hermitian,
            "char_poly_coeffs": [str(x) for x in self.char_poly_coeffs],
            "psd": self.psd,
        }


class GramError(ArithmeticError):
    pass


def gram_entry(r, s) -> Scalar:
    """<a0 del a1, b0 del b1> = phi(sigma(b0*) a0, a1, b1*) as a Scalar."""
    a0, a1 = (as_element(x) for x in r)
    b0, b1 = (as_element(x) for x in s)
    return phi(mul(sigma(b0.star()), a0), a1, b1.star())


def gram_symbolic(family: Sequence) -> list:
    return [[gram_entry(r, s) for s in family] for r in family]


def char_poly(mat: list) -> list:
    """Coefficients of det(t I - M), highest degree first (Faddeev-LeVerrier)."""
    n = len(mat)
    zero = GaussianRational(0)
    coeffs = [GaussianRational(1)]
    m_prev = [[zero] * n for _ in range(n)]
    c_prev = GaussianRational(1)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k)/k
        mk = [[sum((mat[i][t] * m_prev[t][j] for t in range(n)), zero) + (c_prev if i == j else zero)
               for j in range(n)] for i in range(n)]
        am = [[sum((mat[i][t] * mk[t][j] for t in range(n)), zero) for j in range(n)] for i in range(n)]
        tr = sum((am[i][i] for i in range(n)), zero)
        c_prev = -(tr / GaussianRational(k))
        coeffs.append(c_prev)
        m_prev = mk
    return coeffs


def psd_from_char_poly(coeffs: list) -> bool:
    """For a Hermitian matrix: all eigenvalues >= 0 iff the coefficients of det(tI - M) alternate."""
    for j, cf in enumerate(coeffs):
        if not cf.is_real():
            return False
        v = cf.re if j % 2 == 0 else -cf.re
        if v < 0:
            return False
    return True


def evaluate_gram(sym: list, q0) -> GramReport:
    q0 = GaussianRational.coerce(q0)
    mat = [[eval_at(x, q0) for x in row] for row in sym]
    n = len(mat)
    herm = all(mat[i][j] == mat[j][i].conj() for i in range(n) for j in range(n))
    if not herm:
        raise GramError("Gram matrix is not Hermitian")
    coeffs = char_poly(mat)
    return GramReport(n, q0, mat, herm, coeffs, psd_from_char_poly(coeffs))


def positivity_check(family: Sequence, q0) -> GramReport:
    if len(family) > 8:
        raise ValueError("family size is limited to 8")
    return evaluate_gram(gram_symbolic(family), q0)


def diagonal_value(a0, a1) -> Scalar:
    """phi(sigma(a0*) a0, a1, a1*), the norm of a0 del a1."""
    return gram_entry((a0, a1), (a0, a1))


def positivity_oracle_b0(variant: str = "engine") -> Scalar:
    """Independent value of <del B0, del B0> from del B0 = y w+ and the Haar formula.

    With y = X+ B0, dbar(B0*) = -w- y*, and w+ ^ w- y* = q^-4 y* w+ ^ w-, the
    pairing is q^-2 h(y y*).  ``variant='stated'`` returns q^2 h(y y*), which
    omits the reordering of y* past w+ ^ w-.
    """
    from .symmetry import vector_field
    from .algebra import B_zero
    y = vector_field("Xplus", B_zero)
    hv = haar(mul(y, y.star()))
    return hv * (vpow(-4) if variant == "engine" else vpow(4))


def positivity_closed_b0(variant: str = "engine") -> Scalar:
    """q^2/((1+q^2)(1+q^2+q^4)) (engine) or q^6/(...) (stated)."""
    q2 = vpow(4)
    den = (ONE + q2) * (ONE + q2 + q2 * q2)
    return (q2 if variant == "engine" else q2 * q2 * q2) / den


__all__ = [
    "haar", "haar_value", "haar_oracle", "check_haar_closed_form", "sigma", "twisted_trace_check",
    "check_sigma_sign", "integrate2", "tau", "phi", "psi", "del_dbar", "Cochain", "TAU", "PHI", "PSI",
    "b_sigma", "lambda_sigma", "difference", "GramReport", "GramError", "gram_entry", "gram_symbolic",
    "char_poly", "psd_from_char_poly", "evaluate_gram", "positivity_check", "diagonal_value",
    "positivity_oracle_b0", "positivity_closed_b0",
]

"""The canonical connection on L_n and its curvature."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, a, a_star, as_element, c, c_star, mul
from .bundles import filtered_basis, require_bundle
from .calculus import Form, d3, wedge
from .scalar import ONE, Scalar, q_int, vpow
from .symmetry import k_power_left, vector_field


class CurvatureError(ArithmeticError):
    """Curvature is not a constant multiple of the identity on the sample."""


@dataclass(frozen=True)
class ConnectionValue:
    """nabla(phi) = plus_part w+ + minus_part w-, coefficients on the left."""

    n: int
    plus_part: AlgebraElement
    minus_part: AlgebraElement

    def as_form(self) -> Form:
        return Form(1, {("+",): self.plus_part, ("-",): self.minus_part})


def nabla(n: int, phi) -> ConnectionValue:
    phi = as_element(phi)
    require_bundle(phi, n, "section")
    return ConnectionValue(n, vector_field("Xplus", phi), vector_field("Xminus", phi))


def nabla_dbar(n: int, phi) -> AlgebraElement:
    """Coefficient of w- in the antiholomorphic part of nabla."""
    phi = as_element(phi)
    require_bundle(phi, n, "section")
    return vector_field("Xminus", phi)


def nabla_del(n: int, phi) -> AlgebraElement:
    phi = as_element(phi)
    require_bundle(phi, n, "section")
    return vector_field("Xplus", phi)


def nabla_dbar_right_form(n: int, phi) -> Form:
    """The same 1-form written as q^{-n+2} w- (X- phi), then pushed left."""
    y = nabla_dbar(n, phi)
    return Form(1, {("-",): k_power_left(2, y).scale(vpow(2 * (2 - n)))})


def nabla_del_right_form(n: int, phi) -> Form:
    y = nabla_del(n, phi)
    return Form(1, {("+",): k_power_left(2, y).scale(vpow(2 * (-n - 2)))})


# Partitions of unity 1 = sum u_j w_j with u_j in L_2, w_j in L_-2 and the
# reverse.  From a*a + c*c = 1 and aa* + q^2 cc* = 1, each squared.
def _partitions():
    q2 = vpow(4)
    first = [(a_star, ONE), (c_star, ONE)]
    up = []
    for x, s in first:
        for y, t in first:
            up.append((mul(x, y), mul(y.star(), x.star()).scale(s * t)))
    second = [(a, ONE), (c, q2)]
    down = []
    for x, s in second:
        for y, t in second:
            down.append((mul(x, y), mul(y.star(), x.star()).scale(s * t)))
    return up, down


_UP, _DOWN = _partitions()


def split_oneform(n: int, phi) -> list:
    """Write nabla(phi) as sum_i  omega_i (x) psi_i  with omega_i in Omega^1(CP^1), psi_i in L_n.

    Returns [(omega_i, psi_i)].  The tensor product over A(CP^1) is realized by
    multiplication, so sum omega_i psi_i recovers nabla(phi) as a 1-form.
    """
    val = nabla(n, phi)
    out = []
    for label, y, parts, k in (("+", val.plus_part, _UP, 2), ("-", val.minus_part, _DOWN, -2)):
        if y.is_zero():
            continue
        # y w = w (K^-2 |> y) = sum w u_j (w_j K^-2 |> y)
        z = k_power_left(-2, y)
        for u, w in parts:
            psi = mul(w, z)
            if psi.is_zero():
                continue
            omega = Form(1, {(label,): k_power_left(2, u)})
            out.append((omega, psi))
    return out


def curvature_form(n: int, phi) -> Form:
    """nabla^2 phi via nabla(w psi) = (dw) psi - w ^ nabla(psi), as a 2-form in SU_q(2)."""
    out = Form.zero(2)
    for omega, psi in split_oneform(n, phi):
        out = out + d3(omega).right_mul(psi) - wedge(omega, nabla(n, psi).as_form())
    return out


def curvature_ratio(n: int, phi) -> Scalar:
    """The scalar s with nabla^2 phi = s (w+ ^ w-) phi."""
    phi = as_element(phi)
    r = curvature_form(n, phi)
    if r.coeff("-", "z") or r.coeff("+", "z"):
        raise CurvatureError("curvature has vertical components")
    top = r.coeff("-", "+")
    # (w+ ^ w-) phi = -q^2 (K^4 |> phi) w- ^ w+ = -q^{2n+2} phi w- ^ w+
    target = phi.scale(-vpow(4 * n + 4))
    mono, coef = next(iter(target.terms.items()))
    s = top.coeff(mono) / coef
    if top != target.scale(s):
        raise CurvatureError(f"nabla^2 is not proportional to the section on L_{n}")
    return s


def curvature_sample(n: int) -> list:
    """Basis monomials of L_n with word length <= max(|n|, 4)."""
    d = max(abs(n), 4)
    if (d - n) % 2:
        d -= 1
    return [AlgebraElement.monomial(*m) for m in filtered_basis(n, d)]


def curvature_constant(n: int) -> Scalar:
    """nabla^2 on L_n as a multiple of w+ ^ w-, checked constant over a basis sample."""
    s = None
    for phi in curvature_sample(n):
        t = curvature_ratio(n, phi)
        if s is None:
            s = t
        elif t != s:
            raise CurvatureError(f"curvature ratio varies on L_{n}: {s.pretty()} vs {t.pretty()}")
    return s


def curvature_expected(n: int) -> Scalar:
    """The closed form -q^{-n-1}[n]."""
    return -vpow(-2 * n - 2) * q_int(n)


def curvature_from_xz(n: int) -> Scalar:
    """-q^{-2n-2} times the X_z eigenvalue on L_n: the curvature in terms of the vertical field."""
    xz = (ONE - vpow(4 * n)) / (ONE - vpow(-4))
    return -vpow(-4 * n - 4) * xz


__all__ = [
    "ConnectionValue", "CurvatureError", "nabla", "nabla_dbar", "nabla_del", "nabla_dbar_right_form",
    "nabla_del_right_form", "split_oneform", "curvature_form", "curvature_ratio", "curvature_sample",
    "curvature_constant", "curvature_expected", "curvature_from_xz",
]

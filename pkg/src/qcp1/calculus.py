"""The 3D left-covariant calculus on SU_q(2) and its restriction to CP^1_q.

Forms are stored as {label: coefficient} with coefficients on the left.  A
label is an increasing tuple over the ordered alphabet  - < + < z,  so the
stored bases are

    ()                          degree 0
    (-), (+), (z)               degree 1
    (-,+), (-,z), (+,z)         degree 2
    (-,+,z)                     degree 3
"""
from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .algebra import AlgebraElement, as_element, from_json, to_json
from .bundles import require_bundle
from .scalar import ONE, vpow
from .symmetry import k_power_left, vector_field

ORDER = {"-": 0, "+": 1, "z": 2}
LABELS = {
    0: [()],
    1: [("-",), ("+",), ("z",)],
    2: [("-", "+"), ("-", "z"), ("+", "z")],
    3: [("-", "+", "z")],
}

# omega_s omega_t = SWAP[s, t] omega_t omega_s  for s after t
SWAP = {
    ("+", "-"): -vpow(4),
    ("z", "-"): -vpow(8),
    ("z", "+"): -vpow(-8),
}

# K-power W_s with omega_s f = (W_s |> f) omega_s, in units of K
_PUSH = {"-": 2, "+": 2, "z": 4}


class FormError(ValueError):
    pass


def label_name(label: tuple) -> str:
    return "^".join("w" + s for s in label) if label else "1"


def parse_label(name: str) -> tuple:
    if name == "1":
        return ()
    out = []
    for part in name.split("^"):
        if not part.startswith("w") or part[1:] not in ORDER:
            raise FormError(f"bad form label {name!r}")
        out.append(part[1:])
    return tuple(out)


@lru_cache(maxsize=None)
def order_label(word: tuple) -> tuple:
    """Bring a word of basis 1-forms to stored order: (scalar, label) or None if it vanishes."""
    if len(set(word)) < len(word):
        return None
    w = list(word)
    coef = ONE
    # bubble sort; each adjacent swap contributes its commutation scalar
    for i in range(len(w)):
        for j in range(len(w) - 1 - i):
            s, t = w[j], w[j + 1]
            if ORDER[s] > ORDER[t]:
                coef = coef * SWAP[s, t]
                w[j], w[j + 1] = t, s
    return coef, tuple(w)


def push_weight(label: tuple) -> int:
    return sum(_PUSH[s] for s in label)


class Form:
    """A homogeneous element of Omega^p(SU_q(2)) with left coefficients."""

    __slots__ = ("degree", "parts")

    def __init__(self, degree: int, parts: Mapping[tuple, AlgebraElement] | None = None):
        if degree not in LABELS:
            raise FormError(f"degree {degree} out of range")
        self.degree = degree
        clean = {}
        for lab, f in (parts or {}).items():
            lab = tuple(lab)
            if len(lab) != degree:
                raise FormError(f"label {lab} does not have degree {degree}")
            r = order_label(lab)
            if r is None:
                continue
            s, lab = r
            f = as_element(f).scale(s)
            g = clean.get(lab)
            clean[lab] = f if g is None else g + f
        self.parts = {lab: f for lab, f in clean.items() if not f.is_zero()}

    @classmethod
    def zero(cls, degree: int) -> "Form":
        return cls(degree)

    @classmethod
    def function(cls, f) -> "Form":
        return cls(0, {(): as_element(f)})

    @classmethod
    def basis(cls, *label: str) -> "Form":
        return cls(len(label), {tuple(label): AlgebraElement.scalar(ONE)})

    def coeff(self, *label: str) -> AlgebraElement:
        return self.parts.get(tuple(label), AlgebraElement())

    def is_zero(self) -> bool:
        return not self.parts

    def __add__(self, other: "Form") -> "Form":
        if self.degree != other.degree:
            raise FormError("adding forms of different degree")
        parts = dict(self.parts)
        for lab, f in other.parts.items():
            g = parts.get(lab)
            parts[lab] = f if g is None else g + f
        return Form(self.degree, parts)

    def __neg__(self):
        return Form(self.degree, {lab: -f for lab, f in self.parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "Form":
        return Form(self.degree, {lab: f.scale(s) for lab, f in self.parts.items()})

    def left_mul(self, f) -> "Form":
        f = as_element(f)
        return Form(self.degree, {lab: f * g for lab, g in self.parts.items()})

    def right_mul(self, f) -> "Form":
        f = as_element(f)
        return Form(self.degree, {lab: g * push_coeff(f, lab) for lab, g in self.parts.items()})

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.parts == other.parts

    def __hash__(self):
        return hash((self.degree, frozenset(self.parts.items())))

    def __repr__(self):
        if not self.parts:
            return f"Form({self.degree}, 0)"
        inner = ", ".join(f"{label_name(l)}: {f!r}" for l, f in sorted(self.parts.items(), key=_label_key))
        return f"Form({self.degree}, {{{inner}}})"


def _label_key(item):
    return tuple(ORDER[s] for s in item[0])


def push_coeff(f: AlgebraElement, label: tuple) -> AlgebraElement:
    """The coefficient g with omega_label f = g omega_label."""
    return k_power_left(push_weight(label), f)


def push_left(f, label) -> Form:
    """Rewrite omega_label * f with the coefficient on the left."""
    label = tuple(label)
    return Form(len(label), {label: push_coeff(as_element(f), label)})


def wedge(x: Form, y: Form) -> Form:
    deg = x.degree + y.degree
    if deg > 3:
        raise FormError(f"wedge of degrees {x.degree} and {y.degree} exceeds 3")
    parts: dict = {}
    for l1, f in x.parts.items():
        for l2, g in y.parts.items():
            r = order_label(l1 + l2)
            if r is None:
                continue
            s, lab = r
            t = (f * push_coeff(g, l1)).scale(s)
            h = parts.get(lab)
            parts[lab] = t if h is None else h + t
    return Form(deg, parts)


def wedge_all(*forms: Form) -> Form:
    out = Form.function(AlgebraElement.scalar(ONE))
    for w in forms:
        out = wedge(out, w)
    return out


def _basis(*label):
    return Form.basis(*label)


def _d_basis_one(s: str) -> Form:
    if s == "z":
        return _basis("-", "+").scale(-ONE)
    if s == "+":
        return _basis("z", "+").scale(vpow(4) * (ONE + vpow(4)))
    if s == "-":
        return _basis("z", "-").scale(-(ONE + vpow(-4)))
    raise FormError(s)


def _d_label(label: tuple) -> Form:
    """d of a basis form, by the graded Leibniz rule on the labels."""
    if not label:
        return Form.zero(1)
    head = _basis(label[0])
    tail = _basis(*label[1:]) if len(label) > 1 else Form.function(AlgebraElement.scalar(ONE))
    first = wedge(_d_basis_one(label[0]), tail)
    if len(label) == 1:
        return first
    return first - wedge(head, _d_label(label[1:]))


_D_LABEL_CACHE: dict = {}


def d_label(label: tuple) -> Form:
    f = _D_LABEL_CACHE.get(label)
    if f is None:
        f = _D_LABEL_CACHE[label] = _d_label(label)
    return f


def d_function(f) -> Form:
    f = as_element(f)
    return Form(1, {
        ("-",): vector_field("Xminus", f),
        ("+",): vector_field("Xplus", f),
        ("z",): vector_field("Xz", f),
    })


def d3(x: Form) -> Form:
    """Exterior derivative on Omega^p, p <= 2."""
    if x.degree >= 3:
        raise FormError("d of a 3-form is zero by degree; refusing to build a 4-form")
    if x.degree == 0:
        return d_function(x.coeff())
    out = Form.zero(x.degree + 1)
    for lab, f in x.parts.items():
        out = out + wedge(d_function(f), _basis(*lab)) + d_label(lab).left_mul(f)
    return out


_LABEL_STAR = {"-": ("+", -ONE), "+": ("-", -ONE), "z": ("z", -ONE)}


def star_form(x: Form) -> Form:
    """Conjugation on forms: (f w)* = w* f*, with (a ^ b)* = (-1)^{|a||b|} b* ^ a*.

    For a product of 1-forms this gives (w_1 ... w_p)* = (-1)^{p(p-1)/2} w_p* ... w_1*.
    """
    out = Form.zero(x.degree)
    sign = ONE if (x.degree * (x.degree - 1) // 2) % 2 == 0 else -ONE
    for lab, f in x.parts.items():
        coef = sign
        rev = []
        for s in reversed(lab):
            t, e = _LABEL_STAR[s]
            rev.append(t)
            coef = coef * e
        w = Form(x.degree, {tuple(rev): AlgebraElement.scalar(coef)})
        out = out + w.right_mul(f.star())
    return out


def dbar(f) -> Form:
    f = as_element(f)
    require_bundle(f, 0, "dbar argument")
    return Form(1, {("-",): vector_field("Xminus", f)})


def del_(f) -> Form:
    f = as_element(f)
    require_bundle(f, 0, "del argument")
    return Form(1, {("+",): vector_field("Xplus", f)})


def d2_on_oneform(alpha: Form) -> Form:
    """d(x w- + y w+) = (X- y - q^2 X+ x) w- ^ w+  for x in L_-2, y in L_2."""
    if alpha.degree != 1 or alpha.coeff("z"):
        raise FormError("expected x w- + y w+")
    x, y = alpha.coeff("-"), alpha.coeff("+")
    require_bundle(x, -2, "w- coefficient")
    require_bundle(y, 2, "w+ coefficient")
    top = vector_field("Xminus", y) - vector_field("Xplus", x).scale(vpow(4))
    return Form(2, {("-", "+"): top})


def integrand_top(x: Form) -> AlgebraElement:
    """Coefficient of w- ^ w+ of a 2-form that has no w_z part."""
    if x.degree != 2:
        raise FormError("expected a 2-form")
    if x.coeff("-", "z") or x.coeff("+", "z"):
        raise FormError("2-form has w_z components")
    return x.coeff("-", "+")


def form_to_json(x: Form) -> dict:
    parts = {label_name(l): to_json(f) for l, f in sorted(x.parts.items(), key=_label_key)}
    return {"degree": x.degree, "parts": parts}


def form_from_json(data: dict) -> Form:
    deg = int(data["degree"])
    return Form(deg, {parse_label(k): from_json(v) for k, v in data.get("parts", {}).items()})


__all__ = [
    "Form", "FormError", "LABELS", "SWAP", "order_label", "push_coeff", "push_left", "wedge",
    "wedge_all", "d3", "d_function", "d_label", "star_form", "dbar", "del_", "d2_on_oneform",
    "integrand_top", "form_to_json", "form_from_json", "label_name", "parse_label",
]

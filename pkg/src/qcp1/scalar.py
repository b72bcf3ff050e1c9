"""Exact coefficients: the field Q(i)(v) with v = q^(1/2).

A :class:`Scalar` is stored as ``(re + i*im) / den`` where ``re``, ``im`` and
``den`` are polynomials in ``v`` with rational coefficients and ``den`` is
monic.  Keeping the denominator real means the only gcd ever needed is over
Q, which python-flint does in C.  The form is canonical: ``den`` is the
smallest monic real polynomial clearing the value, so equality is structural.
"""
from __future__ import annotations

import re as _re
from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly

__all__ = [
    "GaussianRational",
    "Scalar",
    "PoleError",
    "OddPowerError",
    "ZERO",
    "ONE",
    "I",
    "V",
    "Q",
    "vpow",
    "qpow",
    "q_int",
    "arith",
    "eval_at",
    "as_scalar",
    "parse_scalar",
    "parse_gaussian",
]


class PoleError(ArithmeticError):
    """Evaluation point is a zero of the denominator."""


class OddPowerError(ArithmeticError):
    """A value that should be a function of q = v^2 has odd powers of v."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def _fmpq(x: Fraction) -> fmpq:
    return fmpq(x.numerator, x.denominator)


class GaussianRational:
    """An exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, str):
            return parse_gaussian(x)
        return cls(x, 0)

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussianRational({self})"


_GAUSS_RE = _re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\s*i\s*$")


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``"a+bi"`` (or a plain rational) into a GaussianRational."""
    m = _GAUSS_RE.match(text)
    if m:
        im = Fraction(m.group(3))
        return GaussianRational(Fraction(m.group(1)), im if m.group(2) == "+" else -im)
    return GaussianRational(Fraction(text.strip()), 0)


_P0 = fmpq_poly()
_P1 = fmpq_poly([1])


class Scalar:
    __slots__ = ("re", "im", "den")

    def __init__(self, re=None, im=None, den=None, *, _canonical=False):
        re = _P0 if re is None else re
        im = _P0 if im is None else im
        den = _P1 if den is None else den
        if not _canonical:
            re, im, den = _normalize(re, im, den)
        self.re = re
        self.im = im
        self.den = den

    # construction helpers -------------------------------------------------
    @classmethod
    def from_gaussian(cls, x) -> "Scalar":
        g = GaussianRational.coerce(x)
        return cls(fmpq_poly([_fmpq(g.re)]), fmpq_poly([_fmpq(g.im)]), _P1)

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_even(self) -> bool:
        """True when the value is a rational function of q = v^2."""
        return all(_even(p) for p in (self.re, self.im, self.den))

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = as_scalar(other)
        if self.den == o.den:
            return Scalar(self.re + o.re, self.im + o.im, self.den)
        return Scalar(self.re * o.den + o.re * self.den,
                      self.im * o.den + o.im * self.den,
                      self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im, self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        o = as_scalar(other)
        if self.im.is_zero() and o.im.is_zero():
            return Scalar(self.re * o.re, _P0, self.den * o.den)
        return Scalar(self.re * o.re - self.im * o.im,
                      self.re * o.im + self.im * o.re,
                      self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        # den / (re + i im) = den (re - i im) / (re^2 + im^2)
        if self.im.is_zero():
            return Scalar(self.den, _P0, self.re)
        norm = self.re * self.re + self.im * self.im
        return Scalar(self.den * self.re, -(self.den * self.im), norm)

    def __truediv__(self, other):
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im, self.den, _canonical=True)

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        try:
            o = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im and self.den == o.den

    def __hash__(self):
        return hash((tuple(self.re.coeffs()), tuple(self.im.coeffs()), tuple(self.den.coeffs())))

    # display --------------------------------------------------------------
    def to_string(self) -> str:
        """Serialize as ``(p)/(r)``; coefficients ``a+bi``, decreasing degree."""
        if self.is_zero():
            return "0"
        return f"({_poly_str(self.re, self.im)})/({_poly_str(self.den, _P0)})"

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"Scalar({self.to_string()})"

    def pretty(self) -> str:
        num = _pretty_poly(self.re, self.im)
        if self.den.is_one():
            return num
        return f"({num})/({_pretty_poly(self.den, _P0)})"


def _even(p: fmpq_poly) -> bool:
    c = p.coeffs()
    return all(not c[j] for j in range(1, len(c), 2))


def _normalize(re, im, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if re.is_zero() and im.is_zero():
        return _P0, _P0, _P1
    if not den.is_one():
        g = den.gcd(re)
        if not im.is_zero() and not g.is_one():
            g = g.gcd(im)
        if not g.is_one():
            re = re // g
            im = im // g if not im.is_zero() else im
            den = den // g
    lc = den.leading_coefficient()
    if lc != 1:
        re = re / lc
        im = im / lc if not im.is_zero() else im
        den = den / lc
    return re, im, den


def _coeff_str(re: fmpq, im: fmpq) -> str:
    a, b = _frac(re), _frac(im)
    return f"{a}{'+' if b >= 0 else '-'}{abs(b)}i"


def _poly_str(re: fmpq_poly, im: fmpq_poly) -> str:
    rc, ic = re.coeffs(), im.coeffs()
    deg = max(len(rc), len(ic)) - 1
    parts = []
    for e in range(deg, -1, -1):
        a = rc[e] if e < len(rc) else fmpq(0)
        b = ic[e] if e < len(ic) else fmpq(0)
        if a or b:
            parts.append(f"({_coeff_str(a, b)})v^{e}")
    return "+".join(parts)


def _pretty_poly(re: fmpq_poly, im: fmpq_poly) -> str:
    rc, ic = re.coeffs(), im.coeffs()
    deg = max(len(rc), len(ic)) - 1
    parts = []
    for e in range(deg, -1, -1):
        a = _frac(rc[e]) if e < len(rc) else Fraction(0)
        b = _frac(ic[e]) if e < len(ic) else Fraction(0)
        if not (a or b):
            continue
        if b == 0:
            c = str(a)
        elif a == 0:
            c = f"{b}i"
        else:
            c = f"({_coeff_str(fmpq(a.numerator, a.denominator), fmpq(b.numerator, b.denominator))})"
        mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
        if mono and c in ("1", "-1"):
            c = c[:-1]
        parts.append(c + ("*" if mono and c not in ("", "-") else "") + mono)
    return " + ".join(parts).replace("+ -", "- ") or "0"


_TERM_RE = _re.compile(r"\(([^()]*)\)v\^(\d+)")


def _parse_poly(text: str):
    re_c: dict[int, Fraction] = {}
    im_c: dict[int, Fraction] = {}
    for coeff, exp in _TERM_RE.findall(text):
        g = parse_gaussian(coeff)
        re_c[int(exp)] = g.re
        im_c[int(exp)] = g.im
    deg = max(re_c, default=-1)
    re = fmpq_poly([_fmpq(re_c.get(e, Fraction(0))) for e in range(deg + 1)])
    im = fmpq_poly([_fmpq(im_c.get(e, Fraction(0))) for e in range(deg + 1)])
    return re, im


def parse_scalar(text: str) -> Scalar:
    """Inverse of :meth:`Scalar.to_string`."""
    text = text.strip()
    if text == "0":
        return ZERO
    depth = 0
    for pos, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "/" and depth == 0:
            break
    else:
        raise ValueError(f"not a serialized Scalar: {text!r}")
    nre, nim = _parse_poly(text[1:pos - 1])
    dre, dim = _parse_poly(text[pos + 2:-1])
    if not dim.is_zero():
        raise ValueError("serialized denominator must be real")
    return Scalar(nre, nim, dre)


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return _int_scalar(x)
    if isinstance(x, (Fraction, fmpq, GaussianRational)):
        return Scalar.from_gaussian(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")


@lru_cache(maxsize=256)
def _int_scalar(n: int) -> Scalar:
    return Scalar(fmpq_poly([n]), _P0, _P1, _canonical=True) if n else ZERO


ZERO = Scalar(_P0, _P0, _P1, _canonical=True)
ONE = Scalar(_P1, _P0, _P1, _canonical=True)
I = Scalar(_P0, _P1, _P1, _canonical=True)


@lru_cache(maxsize=None)
def vpow(k: int) -> Scalar:
    """v^k = q^(k/2)."""
    if k >= 0:
        return Scalar(fmpq_poly([0] * k + [1]), _P0, _P1, _canonical=True)
    return Scalar(_P1, _P0, fmpq_poly([0] * (-k) + [1]), _canonical=True)


def qpow(e) -> Scalar:
    """q^e for integer or half-integer e."""
    two_e = Fraction(e) * 2
    if two_e.denominator != 1:
        raise ValueError(f"q-exponent {e} is not a half-integer")
    return vpow(int(two_e))


V = vpow(1)
Q = vpow(2)


@lru_cache(maxsize=None)
def q_int(s: int) -> Scalar:
    """The q-number [s] = (q^-s - q^s) / (q^-1 - q)."""
    return (qpow(-s) - qpow(s)) / (qpow(-1) - Q)


def arith(op: str, x, y=None) -> Scalar:
    """Dispatch form of the field operations (add, sub, mul, div, neg, conj)."""
    x = as_scalar(x)
    if op == "neg":
        return -x
    if op == "conj":
        return x.conj()
    y = as_scalar(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def _eval_even(p: fmpq_poly, q0: GaussianRational) -> GaussianRational:
    c = p.coeffs()
    acc = GaussianRational(0)
    for j in range(len(c) - 1 - (len(c) - 1) % 2, -1, -2):
        acc = acc * q0 + _frac(c[j])
    return acc


def eval_at(x, q0) -> GaussianRational:
    """Substitute q = q0 (that is v^2 = q0) into an even Scalar."""
    x = as_scalar(x)
    q0 = GaussianRational.coerce(q0)
    if not q0:
        raise PoleError("q0 = 0 is excluded")
    if not x.is_even():
        raise OddPowerError(f"value {x} is not a function of q")
    d = _eval_even(x.den, q0)
    if not d:
        raise PoleError(f"q0 = {q0} is a pole of {x}")
    n = _eval_even(x.re, q0) + _eval_even(x.im, q0) * GaussianRational(0, 1)
    return n / d

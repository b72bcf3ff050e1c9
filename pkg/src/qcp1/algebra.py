"""The *-algebra A(SU_q(2)) in the PBW basis a^m c^k c*^l.

A monomial is the triple ``(m, k, l)``; a negative ``m`` stands for
``a*^|m|``.  Elements are sparse maps monomial -> :class:`Scalar`.

Two independent routes to normal forms live here: :func:`normal_form`
rewrites generator words with the oriented relations, and :func:`mono_mul`
multiplies monomials with closed formulas.  The test-suite checks one
against the other.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .scalar import ONE, ZERO, Scalar, as_scalar, qpow, vpow

Monomial = tuple  # (m, k, l)

LETTERS = ("a", "a*", "c", "c*")

UNIT: Monomial = (0, 0, 0)


class AlgebraElement:
    """Finite linear combination of PBW monomials.  Treat as immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = as_scalar(c)
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, c) -> "AlgebraElement":
        return cls({UNIT: c})

    @classmethod
    def monomial(cls, m: int, k: int = 0, l: int = 0, coeff=ONE) -> "AlgebraElement":
        if k < 0 or l < 0:
            raise ValueError("powers of c and c* must be nonnegative")
        return cls({(m, k, l): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def coeff(self, mono: Monomial) -> Scalar:
        return self.terms.get(tuple(mono), ZERO)

    def __add__(self, other):
        other = as_element(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono)
            s = c if s is None else s + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return AlgebraElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-as_element(other))

    def __rsub__(self, other):
        return as_element(other) - self

    def scale(self, s) -> "AlgebraElement":
        s = as_scalar(s)
        if not s:
            return AlgebraElement()
        return AlgebraElement._raw({m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in A(SU_q(2))")
        out = ONE_ELEMENT
        for _ in range(e):
            out = mul(out, self)
        return out

    def __eq__(self, other):
        try:
            other = as_element(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"AlgebraElement({format_element(self)})"

    __str__ = lambda self: format_element(self)  # noqa: E731

    def star(self) -> "AlgebraElement":
        return star(self)

    def max_length(self) -> int:
        return max((mono_length(m) for m in self.terms), default=0)


def as_element(x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        return x
    return AlgebraElement.scalar(x)


ONE_ELEMENT = AlgebraElement.scalar(ONE)


def mono_length(mono: Monomial) -> int:
    m, k, l = mono
    return abs(m) + k + l


def mono_letters(mono: Monomial) -> tuple:
    m, k, l = mono
    return ("a",) * m + ("a*",) * (-m) + ("c",) * k + ("c*",) * l


# -- rewriting route --------------------------------------------------------

def _q(e: int) -> Scalar:
    return vpow(2 * e)


# pair -> ((coefficient, replacement word), ...)
RULES = {
    ("c", "a"): ((vpow(-2), ("a", "c")),),
    ("c*", "a"): ((vpow(-2), ("a", "c*")),),
    ("c", "a*"): ((vpow(2), ("a*", "c")),),
    ("c*", "a*"): ((vpow(2), ("a*", "c*")),),
    ("c*", "c"): ((ONE, ("c", "c*")),),
    ("a", "a*"): ((ONE, ()), (-vpow(4), ("c", "c*"))),
    ("a*", "a"): ((ONE, ()), (-ONE, ("c*", "c"))),
}


def _word_to_mono(word: tuple) -> Monomial:
    m = word.count("a") - word.count("a*")
    return (m, word.count("c"), word.count("c*"))


def normal_form(word: Iterable[str], coeff=ONE) -> AlgebraElement:
    """Normal-order a generator word by rewriting adjacent pairs.

    Rules (left side -> right side)::

        c a -> q^-1 a c      c* a -> q^-1 a c*
        c a* -> q a* c       c* a* -> q a* c*
        c* c -> c c*
        a a* -> 1 - q^2 c c* a* a -> 1 - c* c
    """
    word = tuple(word)
    for g in word:
        if g not in LETTERS:
            raise ValueError(f"unknown generator {g!r}")
    pending = {word: as_scalar(coeff)}
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        for i in range(len(w) - 1):
            rule = RULES.get(w[i:i + 2])
            if rule is not None:
                for coef, rep in rule:
                    nw = w[:i] + rep + w[i + 2:]
                    nc = c * coef
                    s = pending.get(nw)
                    s = nc if s is None else s + nc
                    if s:
                        pending[nw] = s
                    else:
                        pending.pop(nw, None)
                break
        else:
            mono = _word_to_mono(w)
            s = done.get(mono)
            done[mono] = c if s is None else s + c
    return AlgebraElement(done)


# -- closed-form route ------------------------------------------------------

@lru_cache(maxsize=None)
def _a_product(m1: int, m2: int) -> tuple:
    """a^m1 a^m2 as ((r, j, coeff), ...) meaning coeff * a^r (c c*)^j."""
    if m1 * m2 >= 0:
        return ((m1 + m2, 0, ONE),)
    if m1 > 0:
        # a^m a*^n = a^(m-n) prod_{i<min} (1 - q^{2(n-i)} cc*)
        m, n = m1, -m2
        factors = [2 * (n - i) for i in range(min(m, n))]
    else:
        # a*^n a^m = a^(m-n) prod_{i<min} (1 - q^{-2(m-1-i)} cc*)
        n, m = -m1, m2
        factors = [-2 * (m - 1 - i) for i in range(min(m, n))]
    poly = [ONE]
    for e in factors:
        nxt = poly + [ZERO]
        for j, c in enumerate(poly):
            nxt[j + 1] = nxt[j + 1] - c * _q(e)
        poly = nxt
    r = m - n
    return tuple((r, j, c) for j, c in enumerate(poly) if c)


@lru_cache(maxsize=None)
def mono_mul(x: Monomial, y: Monomial) -> tuple:
    """Product of two PBW monomials as ((monomial, coeff), ...)."""
    m1, k1, l1 = x
    m2, k2, l2 = y
    # c^K c*^L a^M = q^{-(K+L)M} a^M c^K c*^L
    pref = _q(-(k1 + l1) * m2)
    out = []
    for r, j, c in _a_product(m1, m2):
        out.append(((r, k1 + k2 + j, l1 + l2 + j), c * pref))
    return tuple(out)


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    acc: dict = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            cxy = cx * cy
            for mono, c in mono_mul(mx, my):
                t = cxy * c
                s = acc.get(mono)
                acc[mono] = t if s is None else s + t
    return AlgebraElement._raw({m: c for m, c in acc.items() if c})


def product(*factors: AlgebraElement) -> AlgebraElement:
    out = ONE_ELEMENT
    for f in factors:
        out = mul(out, as_element(f))
    return out


@lru_cache(maxsize=None)
def _mono_star(mono: Monomial) -> tuple:
    m, k, l = mono
    # (a^m c^k c*^l)* = c^l c*^k a^-m = q^{(k+l)m} a^-m c^l c*^k
    return ((-m, l, k), _q((k + l) * m))


def star(x: AlgebraElement) -> AlgebraElement:
    """The antilinear anti-automorphism a -> a*, c -> c*."""
    out = {}
    for mono, c in x.terms.items():
        nm, s = _mono_star(mono)
        out[nm] = c.conj() * s
    return AlgebraElement._raw(out)


# -- named elements ---------------------------------------------------------

a = AlgebraElement.monomial(1)
a_star = AlgebraElement.monomial(-1)
c = AlgebraElement.monomial(0, 1)
c_star = AlgebraElement.monomial(0, 0, 1)

GENERATORS = {"a": a, "a*": a_star, "c": c, "c*": c_star}

# B_- = a c*, B_+ = c a*, B_0 = c c*
B_minus = mul(a, c_star)
B_plus = mul(c, a_star)
B_zero = mul(c, c_star)


def from_word(word: Iterable[str], coeff=ONE) -> AlgebraElement:
    """Normal form of a word computed with the closed-form product."""
    out = AlgebraElement.scalar(coeff)
    for g in word:
        out = mul(out, GENERATORS[g])
    return out


# -- serialization ----------------------------------------------------------

def to_json(x: AlgebraElement) -> list:
    return [{"m": m, "k": k, "l": l, "coeff": c.to_string()} for (m, k, l), c in sorted(x.terms.items())]


def from_json(data: list) -> AlgebraElement:
    from .scalar import parse_scalar

    terms: dict = {}
    for item in data:
        mono = (int(item["m"]), int(item["k"]), int(item["l"]))
        if mono[1] < 0 or mono[2] < 0:
            raise ValueError(f"bad monomial {mono}")
        if mono in terms:
            raise ValueError(f"duplicate monomial {mono}")
        terms[mono] = parse_scalar(item["coeff"])
    return AlgebraElement(terms)


def format_monomial(mono: Monomial) -> str:
    m, k, l = mono
    parts = []
    for name, e in (("a", m), ("a*", -m), ("c", k), ("c*", l)):
        if e > 0:
            parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts) or "1"


def format_element(x: AlgebraElement) -> str:
    if not x.terms:
        return "0"
    out = []
    for mono, c in sorted(x.terms.items()):
        out.append(f"({c.pretty()})*{format_monomial(mono)}" if mono != UNIT else f"({c.pretty()})")
    return " + ".join(out)


def to_expression(x: AlgebraElement) -> str:
    """Render as an expression the CLI parser reads back exactly."""
    if not x.terms:
        return "0"
    out = []
    for mono, c in sorted(x.terms.items()):
        out.append(f"{scalar_expression(c)} * {format_monomial(mono)}")
    return " + ".join(out)


def scalar_expression(s: Scalar) -> str:
    def poly(re, im):
        rc, ic = re.coeffs(), im.coeffs()
        terms = []
        for e in range(max(len(rc), len(ic))):
            a_ = rc[e] if e < len(rc) else 0
            b_ = ic[e] if e < len(ic) else 0
            if a_ or b_:
                terms.append(f"({a_} + ({b_}) i) v^{e}")
        return " + ".join(terms) or "0"

    return f"(({poly(s.re, s.im)}) / ({poly(s.den, s.den * 0)}))"


__all__ = [
    "AlgebraElement", "Monomial", "UNIT", "ONE_ELEMENT", "as_element", "mono_length",
    "mono_letters", "normal_form", "mono_mul", "mul", "product", "star", "a", "a_star",
    "c", "c_star", "GENERATORS", "B_minus", "B_plus", "B_zero", "from_word", "to_json",
    "from_json", "format_monomial", "format_element", "to_expression", "scalar_expression",
    "qpow",
]

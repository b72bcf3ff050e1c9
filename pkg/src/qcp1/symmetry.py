"""Left and right U_q(su(2)) actions on A(SU_q(2)).

Generator images are tabulated once; products are handled letter by letter
with the coproducts

    Delta(K^{+-1}) = K^{+-1} (x) K^{+-1},   Delta(E) = E (x) K + K^-1 (x) E,
    Delta(F) = F (x) K + K^-1 (x) F.

A PBW monomial is a word of generators, so ``g |> (g_1 ... g_N)`` is a sum of
N words with one letter replaced, each renormalized by :func:`mono_mul`.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .algebra import AlgebraElement, Monomial, mono_mul, mono_letters
from .scalar import ONE, Scalar, as_scalar, vpow

UQ_GENERATORS = ("K", "Kinv", "E", "F")

# Sign of the exponent in sigma(x) = K^{2s} |> x <| K^{2s}.  Fixed by the
# twisted-trace identity h(xy) = h(sigma(y) x); see haar.check_sigma_sign.
SIGMA_SIGN = -1

_LETTER_MONO = {"a": (1, 0, 0), "a*": (-1, 0, 0), "c": (0, 1, 0), "c*": (0, 0, 1)}

# K-weights in units of v = q^(1/2)
_LEFT_WEIGHT = {"a": -1, "a*": 1, "c": -1, "c*": 1}
_RIGHT_WEIGHT = {"a": -1, "a*": 1, "c": 1, "c*": -1}

# letter -> (coefficient, letter) or None
_LEFT_E = {"a": (-vpow(2), "c*"), "c": (ONE, "a*")}
_LEFT_F = {"a*": (ONE, "c"), "c*": (-vpow(-2), "a")}
_RIGHT_E = {"c": (ONE, "a"), "a*": (-vpow(2), "c*")}
_RIGHT_F = {"a": (ONE, "c"), "c*": (-vpow(-2), "a*")}


def left_weight(mono: Monomial) -> int:
    """Exponent w with K |> x = v^w x, i.e. w = -m - k + l."""
    m, k, l = mono
    return -m - k + l


def right_weight(mono: Monomial) -> int:
    m, k, l = mono
    return -m + k - l


def _word_product(letters: Iterable[str]) -> dict:
    acc = {(0, 0, 0): ONE}
    for g in letters:
        nxt: dict = {}
        for mono, c in acc.items():
            for mono2, c2 in mono_mul(mono, _LETTER_MONO[g]):
                t = c * c2
                s = nxt.get(mono2)
                nxt[mono2] = t if s is None else s + t
        acc = {m: c for m, c in nxt.items() if c}
    return acc


def _leibniz(mono: Monomial, table: dict, weights: dict) -> tuple:
    """Apply a skew-primitive generator (E or F) to a monomial word.

    Letters before the replaced one see K^-1, letters after see K.
    """
    letters = mono_letters(mono)
    acc: dict = {}
    n = len(letters)
    for i, g in enumerate(letters):
        img = table.get(g)
        if img is None:
            continue
        coef, new = img
        w = -sum(weights[x] for x in letters[:i]) + sum(weights[x] for x in letters[i + 1:])
        coef = coef * vpow(w)
        word = letters[:i] + (new,) + letters[i + 1:n]
        for m2, c2 in _word_product(word).items():
            t = coef * c2
            s = acc.get(m2)
            acc[m2] = t if s is None else s + t
    return tuple((m, c) for m, c in acc.items() if c)


@lru_cache(maxsize=None)
def _left_mono(g: str, mono: Monomial) -> tuple:
    if g == "K":
        return ((mono, vpow(left_weight(mono))),)
    if g == "Kinv":
        return ((mono, vpow(-left_weight(mono))),)
    if g == "E":
        return _leibniz(mono, _LEFT_E, _LEFT_WEIGHT)
    if g == "F":
        return _leibniz(mono, _LEFT_F, _LEFT_WEIGHT)
    raise ValueError(f"unknown U_q generator {g!r}")


@lru_cache(maxsize=None)
def _right_mono(g: str, mono: Monomial) -> tuple:
    if g == "K":
        return ((mono, vpow(right_weight(mono))),)
    if g == "Kinv":
        return ((mono, vpow(-right_weight(mono))),)
    if g == "E":
        return _leibniz(mono, _RIGHT_E, _RIGHT_WEIGHT)
    if g == "F":
        return _leibniz(mono, _RIGHT_F, _RIGHT_WEIGHT)
    raise ValueError(f"unknown U_q generator {g!r}")


def _apply(table, g: str, x: AlgebraElement) -> AlgebraElement:
    acc: dict = {}
    for mono, c in x.terms.items():
        for m2, c2 in table(g, mono):
            t = c * c2
            s = acc.get(m2)
            acc[m2] = t if s is None else s + t
    return AlgebraElement._raw({m: c for m, c in acc.items() if c})


def act_left(g: str, x: AlgebraElement) -> AlgebraElement:
    """g |> x for a generator g in {K, Kinv, E, F}."""
    return _apply(_left_mono, g, x)


def act_right(x: AlgebraElement, g: str) -> AlgebraElement:
    """x <| g for a generator g in {K, Kinv, E, F}."""
    return _apply(_right_mono, g, x)


class UqWord:
    """A scalar multiple of a product g_1 g_2 ... g_n of U_q generators."""

    def __init__(self, gens: Iterable[str], coeff=ONE):
        self.gens = tuple(gens)
        for g in self.gens:
            if g not in UQ_GENERATORS:
                raise ValueError(f"unknown U_q generator {g!r}")
        self.coeff = as_scalar(coeff)

    def act_left(self, x: AlgebraElement) -> AlgebraElement:
        for g in reversed(self.gens):
            x = act_left(g, x)
        return x.scale(self.coeff)

    def act_right(self, x: AlgebraElement) -> AlgebraElement:
        for g in self.gens:
            x = act_right(x, g)
        return x.scale(self.coeff)

    def __repr__(self):
        return f"UqWord({self.coeff.pretty()}, {'.'.join(self.gens) or '1'})"


def k_power_left(j: int, x: AlgebraElement) -> AlgebraElement:
    """K^j |> x, computed from the diagonal weights."""
    return AlgebraElement._raw({m: c * vpow(j * left_weight(m)) for m, c in x.terms.items()})


def k_power_right(x: AlgebraElement, j: int) -> AlgebraElement:
    return AlgebraElement._raw({m: c * vpow(j * right_weight(m)) for m, c in x.terms.items()})


_XZ_DEN = (ONE - vpow(-4)).inverse()


def vector_field(X: str, f: AlgebraElement) -> AlgebraElement:
    """Quantum tangent vectors: X- = q^-1/2 F K, X+ = q^1/2 E K, Xz = (1 - K^4)/(1 - q^-2)."""
    if X in ("Xminus", "x-"):
        return act_left("F", act_left("K", f)).scale(vpow(-1))
    if X in ("Xplus", "x+"):
        return act_left("E", act_left("K", f)).scale(vpow(1))
    if X in ("Xz", "xz"):
        return (f - k_power_left(4, f)).scale(_XZ_DEN)
    raise ValueError(f"unknown vector field {X!r}")


def modular_sigma(x: AlgebraElement, sign: int = SIGMA_SIGN) -> AlgebraElement:
    """sigma(x) = K^{2s} |> x <| K^{2s} with s = SIGMA_SIGN."""
    g = "K" if sign > 0 else "Kinv"
    y = act_left(g, act_left(g, x))
    return act_right(act_right(y, g), g)


def sigma_scalar(mono: Monomial, sign: int = SIGMA_SIGN) -> Scalar:
    """Eigenvalue of sigma on a PBW monomial (it is diagonal)."""
    return vpow(2 * sign * (left_weight(mono) + right_weight(mono)))


__all__ = [
    "UQ_GENERATORS", "SIGMA_SIGN", "left_weight", "right_weight", "act_left", "act_right",
    "UqWord", "k_power_left", "k_power_right", "vector_field", "modular_sigma", "sigma_scalar",
]

"""Line bundles L_n: the K-weight grading of A(SU_q(2))."""
from __future__ import annotations

from itertools import product as iproduct

from .algebra import AlgebraElement, Monomial, a, a_star, c, c_star, mono_length, mul
from .scalar import vpow
from .symmetry import left_weight


class GradingError(ValueError):
    pass


def weight(mono: Monomial) -> int:
    """Bundle label n of a monomial: K |> x = q^{n/2} x."""
    return left_weight(mono)


def grade_decompose(x: AlgebraElement) -> dict:
    """Split x into its L_n components, returned as {n: element}."""
    parts: dict = {}
    for mono, coef in x.terms.items():
        parts.setdefault(weight(mono), {})[mono] = coef
    return {n: AlgebraElement._raw(t) for n, t in sorted(parts.items())}


def grade_of(x: AlgebraElement):
    """The unique n with x in L_n, or None when x is zero or mixed."""
    ns = {weight(m) for m in x.terms}
    return ns.pop() if len(ns) == 1 else None


def in_bundle(x: AlgebraElement, n: int) -> bool:
    return all(weight(m) == n for m in x.terms)


def require_bundle(x: AlgebraElement, n: int, what: str = "element") -> None:
    if not in_bundle(x, n):
        raise GradingError(f"{what} is not in L_{n}")


def bundle_basis(n: int, d: int) -> list:
    """PBW monomials of L_n with word length exactly d, lexicographically sorted."""
    if d < abs(n) or (d - n) % 2:
        return []
    out = []
    # -m - k + l = n and |m| + k + l = d
    for m in range(-d, d + 1):
        rest = d - abs(m)
        # k + l = rest, l - k = n + m
        s = n + m
        if (rest + s) % 2 or abs(s) > rest:
            continue
        l = (rest + s) // 2
        k = rest - l
        out.append((m, k, l))
    return sorted(out)


def filtered_basis(n: int, d: int) -> list:
    """bundle_basis(n, e) for all e <= d of the parity of n, shortest first."""
    out = []
    for e in range(d % 2, d + 1, 2):
        out.extend(bundle_basis(n, e))
    return out


def generator_set(n: int) -> list:
    """Module generators of L_n over A(CP^1): c*^mu a*^(n-mu) or a^mu c^(|n|-mu)."""
    if n >= 0:
        return [mul(c_star ** mu, a_star ** (n - mu)) for mu in range(n + 1)]
    return [mul(a ** mu, c ** (-n - mu)) for mu in range(-n + 1)]


def verify_tensor_identification(n: int, m: int) -> dict:
    """Products of generators of L_n and L_m land in L_{n+m}; balanced relations vanish."""
    q = vpow(2)
    rels = {
        "a(x)c - q c(x)a": mul(a, c) - mul(c, a).scale(q),
        "a(x)c* - q c*(x)a": mul(a, c_star) - mul(c_star, a).scale(q),
        "c(x)c* - c*(x)c": mul(c, c_star) - mul(c_star, c),
    }
    grades = set()
    ok = True
    for x, y in iproduct(generator_set(n), generator_set(m)):
        g = grade_of(mul(x, y))
        grades.add(g)
        ok = ok and g == n + m
    relations_ok = all(r.is_zero() for r in rels.values())
    return {
        "n": n,
        "m": m,
        "product_grades": sorted(g for g in grades if g is not None),
        "relations_vanish": relations_ok,
        "ok": ok and relations_ok,
    }


__all__ = [
    "GradingError", "weight", "grade_decompose", "grade_of", "in_bundle", "require_bundle",
    "bundle_basis", "filtered_basis", "generator_set", "verify_tensor_identification", "mono_length",
]

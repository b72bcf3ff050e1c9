"""Holomorphic sections: the kernel of X- on L_n, by word length.

X- does not preserve word length (F |> (a* c*) contains a* a = 1 - c* c), but
it never increases it.  The kernel is therefore computed on the filtration
F_D = span of L_n monomials of length <= D, with columns ordered by length.
Gauss-Jordan elimination then produces, for each free column of length d, a
kernel vector whose longest monomials have length d; these vectors make up
kernel_basis(n, d).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import AlgebraElement, a, c, mono_length, mul
from .bundles import filtered_basis
from .linalg import nullspace, rank
from .scalar import ONE, ZERO, Scalar, q_int, vpow
from .symmetry import act_left, vector_field


@dataclass(frozen=True)
class SectionBasis:
    n: int
    d: int
    vectors: tuple

    @property
    def dim(self) -> int:
        return len(self.vectors)


def _column_order(n: int, max_len: int) -> list:
    cols = filtered_basis(n, max_len)
    return sorted(cols, key=lambda m: (mono_length(m), m))


def xminus_matrix(n: int, max_len: int):
    """Matrix of X- from F_max_len(L_n) to F_max_len(L_{n-2}); returns (rows, cols, row_monos)."""
    cols = _column_order(n, max_len)
    row_monos = _column_order(n - 2, max_len)
    index = {m: i for i, m in enumerate(row_monos)}
    rows = [[ZERO] * len(cols) for _ in row_monos]
    for j, mono in enumerate(cols):
        img = vector_field("Xminus", AlgebraElement.monomial(*mono))
        for m2, coef in img.terms.items():
            rows[index[m2]][j] = coef
    return rows, cols, row_monos


def filtration_preserved(n: int, max_len: int) -> bool:
    """No monomial of length d is sent to a monomial longer than d."""
    for mono in filtered_basis(n, max_len):
        img = vector_field("Xminus", AlgebraElement.monomial(*mono))
        if any(mono_length(m2) > mono_length(mono) for m2 in img.terms):
            return False
    return True


def length_preserved(n: int, max_len: int) -> bool:
    """Whether X- maps every length-d monomial into length exactly d (it does not in general)."""
    for mono in filtered_basis(n, max_len):
        img = vector_field("Xminus", AlgebraElement.monomial(*mono))
        if any(mono_length(m2) != mono_length(mono) for m2 in img.terms):
            return False
    return True


@lru_cache(maxsize=None)
def kernel_by_length(n: int, max_len: int) -> dict:
    """{d: tuple of kernel vectors with top length d} for d <= max_len."""
    if max_len < 0:
        return {}
    rows, cols, _ = xminus_matrix(n, max_len)
    out: dict = {d: [] for d in range(max_len % 2, max_len + 1, 2)}
    if not cols:
        return {d: () for d in out}
    for vec in nullspace(rows, len(cols)):
        terms = {cols[j]: x for j, x in enumerate(vec) if not x.is_zero()}
        top = max(mono_length(m) for m in terms)
        out.setdefault(top, []).append(AlgebraElement(terms))
    return {d: tuple(v) for d, v in out.items()}


def kernel_basis(n: int, d: int) -> SectionBasis:
    if d < 0:
        raise ValueError("word length must be nonnegative")
    if (d - n) % 2:
        return SectionBasis(n, d, ())
    return SectionBasis(n, d, kernel_by_length(n, d).get(d, ()))


def section_dims(n: int, max_len: int) -> dict:
    """{d: dim kernel_basis(n, d)} over d <= max_len of the parity of n."""
    start = abs(n) % 2
    if max_len < start:
        return {}
    top = max_len if (max_len - n) % 2 == 0 else max_len - 1
    ker = kernel_by_length(n, top)
    return {d: len(ker.get(d, ())) for d in range(start, top + 1, 2)}


def total_h0_dimension(n: int, d_max: int) -> int:
    return sum(section_dims(n, d_max).values())


def _monomial_vectors(elements, n: int, d: int) -> list:
    cols = _column_order(n, d)
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for x in elements:
        r = [ZERO] * len(cols)
        for m, coef in x.terms.items():
            r[index[m]] = coef
        rows.append(r)
    return rows, len(cols)


def ring_check(n_max: int) -> dict:
    """Holomorphic sections of the L_{-N} form the quantum plane C<a, c>/(ac - q ca)."""
    if n_max > 6:
        raise ValueError("n_max is limited to 6")
    gens = kernel_basis(-1, 1).vectors
    span_ok = _same_span(gens, [a, c], -1, 1)
    relation = (mul(a, c) - mul(c, a).scale(vpow(2))).is_zero()
    dims = []
    surjective = []
    for N in range(n_max + 1):
        words = [AlgebraElement.scalar(ONE)]
        for _ in range(N):
            words = [mul(w, g) for w in words for g in (a, c)]
        in_kernel = all(vector_field("Xminus", w).is_zero() for w in words)
        ker = kernel_basis(-N, N).vectors
        rows, ncols = _monomial_vectors(words, -N, N)
        r = rank(rows, ncols) if rows else 0
        both, _ = _monomial_vectors(list(words) + list(ker), -N, N)
        r_both = rank(both, ncols)
        dims.append(r)
        surjective.append(in_kernel and r == len(ker) == r_both == N + 1)
    return {
        "generators_span_a_c": span_ok,
        "relation_ac_minus_q_ca": relation,
        "graded_dims": dims,
        "surjective": surjective,
        "ok": span_ok and relation and all(surjective),
    }


def _same_span(xs, ys, n: int, d: int) -> bool:
    rows, ncols = _monomial_vectors(list(xs), n, d)
    rows_y, _ = _monomial_vectors(list(ys), n, d)
    r1, r2 = rank(rows, ncols), rank(rows_y, ncols)
    return r1 == r2 == rank(rows + rows_y, ncols)


# -- Hilbert-space count -----------------------------------------------------

def _qint_half(x: Fraction) -> Scalar:
    if x.denominator != 1:
        raise ValueError("q-integer of a non-integer")
    return q_int(int(x))


def hilbert_kernel_dims(n: int, l_max) -> int:
    """Dimension of ker sigma(F) on the spin <= l_max part of L^2(L_n).

    L_n carries the right index j = n/2; sigma(F) lowers the left index with
    coefficient sqrt([l - j + 1][l + j]), so a whole (2l+1)-multiplet lies in
    the kernel exactly when that q-integer product vanishes.
    """
    j = Fraction(n, 2)
    l_max = Fraction(l_max)
    count = 0
    l = abs(j)
    while l <= l_max:
        if (_qint_half(l - j + 1) * _qint_half(l + j)).is_zero():
            count += int(2 * l + 1)
        l += 1
    return count


# -- ladder norms ------------------------------------------------------------

def ladder_norm_check(l) -> dict:
    """Squared norms of matrix elements against h(x* x) = (ladder factors) q^{-2m}/[2l+1]."""
    from .haar import haar
    l = Fraction(l)
    if 2 * l not in (1, 2):
        raise ValueError("ladder_norm_check supports l = 1/2 and l = 1")
    results = []
    if l == Fraction(1, 2):
        for name, x, m in (("a", a, Fraction(-1, 2)), ("c", c, Fraction(1, 2))):
            got = haar(mul(x.star(), x))
            want = vpow(int(-4 * m)) / q_int(2)
            results.append({"x": name, "m": str(m), "ok": got == want})
    else:
        m = -1
        x = mul(a, a)
        factor = ONE
        two_l = int(2 * l)
        for step in range(3):
            if step:
                nn = Fraction(-1 + step - 1)
                factor = factor * _qint_half(l - nn) * _qint_half(l + nn + 1)
                x = act_left("E", x)
            got = haar(mul(x.star(), x))
            want = factor * vpow(-4 * m) / q_int(two_l + 1)
            results.append({"j": step, "ok": got == want})
    return {"l": str(l), "cases": results, "ok": all(r["ok"] for r in results)}


__all__ = [
    "SectionBasis", "xminus_matrix", "filtration_preserved", "length_preserved", "kernel_by_length",
    "kernel_basis", "section_dims", "total_h0_dimension", "ring_check", "hilbert_kernel_dims",
    "ladder_norm_check",
]

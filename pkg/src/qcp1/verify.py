"""Seeded invariant batteries behind ``qcp1 verify``.

Random elements: 1-4 PBW terms with |m| <= 3, k, l <= 3 and coefficients from
a small Gaussian-rational pool.  CP^1 elements use the same recipe restricted
to weight 0 (l = m + k).  Every suite draws from its own ``random.Random``
seeded by the string "<seed>:<suite>", so suites are reproducible in isolation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import algebra as alg
from . import calculus as cal
from . import connections as con
from . import haar as hr
from . import sections as sec
from .algebra import AlgebraElement, a, a_star, c, c_star, mul, to_expression
from .bundles import bundle_basis, grade_of, in_bundle
from .scalar import ONE, GaussianRational, Scalar, eval_at, q_int, vpow
from .symmetry import act_left, act_right, vector_field

SUITES = ("algebra", "actions", "calculus", "connections", "sections", "haar", "cocycles", "positivity")

COEFF_POOL = (
    Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 2),
    GaussianRational(0, 1), GaussianRational(1, 1), GaussianRational(-1, 2),
)

DEFAULT_Q0 = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def random_coeff(rng: random.Random) -> Scalar:
    return Scalar.from_gaussian(rng.choice(COEFF_POOL))


def random_element(rng: random.Random, max_exp: int = 3) -> AlgebraElement:
    out = AlgebraElement()
    for _ in range(rng.randint(1, 4)):
        m = rng.randint(-max_exp, max_exp)
        k = rng.randint(0, max_exp)
        l = rng.randint(0, max_exp)
        out = out + AlgebraElement.monomial(m, k, l, coeff=random_coeff(rng))
    return out


def random_l0(rng: random.Random, max_exp: int = 2) -> AlgebraElement:
    out = AlgebraElement()
    for _ in range(rng.randint(1, 4)):
        m = rng.randint(-max_exp, max_exp)
        k = rng.randint(max(0, -m), max_exp + max(0, -m))
        out = out + AlgebraElement.monomial(m, k, m + k, coeff=random_coeff(rng))
    return out


def random_bundle(rng: random.Random, n: int, max_len: int = 5) -> AlgebraElement:
    out = AlgebraElement()
    lengths = [d for d in range(abs(n), max_len + 1) if (d - n) % 2 == 0] or [abs(n)]
    for _ in range(rng.randint(1, 3)):
        mono = rng.choice(bundle_basis(n, rng.choice(lengths)))
        out = out + AlgebraElement.monomial(*mono, coeff=random_coeff(rng))
    return out


def random_word(rng: random.Random, max_len: int = 5) -> tuple:
    return tuple(rng.choice(alg.LETTERS) for _ in range(rng.randint(0, max_len)))


def _show(x) -> str:
    if isinstance(x, AlgebraElement):
        return to_expression(x)
    if isinstance(x, Scalar):
        return x.to_string()
    if isinstance(x, cal.Form):
        return repr(x)
    return str(x)


@dataclass
class Context:
    rng: random.Random
    samples: int
    q0: tuple


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "cases": self.cases, "failures": self.failures}


Case = tuple  # (ok, inputs dict, lhs, rhs)

_REGISTRY: dict = {s: [] for s in SUITES}


def check(suite: str, name: str):
    def deco(fn: Callable[[Context], Iterator[Case]]):
        _REGISTRY[suite].append((name, fn))
        return fn
    return deco


def _eq_case(inputs: dict, lhs, rhs) -> Case:
    return (lhs == rhs, inputs, lhs, rhs)


# -- algebra -----------------------------------------------------------------

@check("algebra", "associativity_of_words")
def _assoc(ctx):
    for _ in range(ctx.samples):
        x, y, z = (random_word(ctx.rng) for _ in range(3))
        X, Y, Z = (alg.normal_form(w) for w in (x, y, z))
        yield _eq_case({"x": x, "y": y, "z": z}, mul(X, mul(Y, Z)), mul(mul(X, Y), Z))


@check("algebra", "rewriting_matches_product")
def _rewrite(ctx):
    for _ in range(ctx.samples):
        w = random_word(ctx.rng, 6)
        yield _eq_case({"word": w}, alg.normal_form(w), alg.from_word(w))


@check("algebra", "star_antihomomorphism")
def _star(ctx):
    for _ in range(ctx.samples):
        x, y = random_element(ctx.rng), random_element(ctx.rng)
        yield _eq_case({"x": x, "y": y}, mul(x, y).star(), mul(y.star(), x.star()))
        yield _eq_case({"x": x}, x.star().star(), x)


@check("algebra", "unitarity")
def _unitary(ctx):
    q = vpow(2)
    u = [[a, -c_star.scale(q)], [c, a_star]]
    ustar = [[a_star, c_star], [-c.scale(q), a]]
    for name, left, right in (("UU*", u, ustar), ("U*U", ustar, u)):
        for i in range(2):
            for j in range(2):
                entry = mul(left[i][0], right[0][j]) + mul(left[i][1], right[1][j])
                want = AlgebraElement.scalar(ONE) if i == j else AlgebraElement()
                yield _eq_case({"product": name, "entry": (i, j)}, entry, want)


@check("algebra", "podles_relations")
def _b_rel(ctx):
    q2 = vpow(4)
    bm, bp, b0 = alg.B_minus, alg.B_plus, alg.B_zero
    one = AlgebraElement.scalar(ONE)
    yield _eq_case({"rel": "B+B- = B0(1-B0)"}, mul(bp, bm), mul(b0, one - b0))
    yield _eq_case({"rel": "B-B+ = q^2 B0(1-q^2 B0)"}, mul(bm, bp), mul(b0, one - b0.scale(q2)).scale(q2))
    yield _eq_case({"rel": "B-B0 = q^2 B0B-"}, mul(bm, b0), mul(b0, bm).scale(q2))
    yield _eq_case({"rel": "B+* = B-"}, bp.star(), bm)
    yield _eq_case({"rel": "B0* = B0"}, b0.star(), b0)


# -- actions -----------------------------------------------------------------

_COPRODUCT = {"K": (("K", "K"),), "Kinv": (("Kinv", "Kinv"),), "E": (("E", "K"), ("Kinv", "E")), "F": (("F", "K"), ("Kinv", "F"))}


@check("actions", "module_algebra_left")
def _ma_left(ctx):
    for _ in range(ctx.samples):
        x, y = random_element(ctx.rng), random_element(ctx.rng)
        for g, terms in _COPRODUCT.items():
            rhs = AlgebraElement()
            for g1, g2 in terms:
                rhs = rhs + mul(act_left(g1, x), act_left(g2, y))
            yield _eq_case({"g": g, "x": x, "y": y}, act_left(g, mul(x, y)), rhs)


@check("actions", "module_algebra_right")
def _ma_right(ctx):
    for _ in range(ctx.samples):
        x, y = random_element(ctx.rng), random_element(ctx.rng)
        for g, terms in _COPRODUCT.items():
            rhs = AlgebraElement()
            for g1, g2 in terms:
                rhs = rhs + mul(act_right(x, g1), act_right(y, g2))
            yield _eq_case({"g": g, "x": x, "y": y}, act_right(mul(x, y), g), rhs)


@check("actions", "left_right_commute")
def _commute(ctx):
    for _ in range(ctx.samples):
        x = random_element(ctx.rng)
        g, h = ctx.rng.choice(("K", "E", "F")), ctx.rng.choice(("K", "E", "F"))
        yield _eq_case({"g": g, "h": h, "x": x}, act_right(act_left(g, x), h), act_left(g, act_right(x, h)))


def _relsu_cases(x, left: bool):
    if left:
        A = lambda g, y: act_left(g, y)
    else:
        # a right action represents the opposite product: x <| (gh) = (x <| g) <| h
        A = lambda g, y: act_right(y, g)
    q = vpow(2)
    inv = (q - q.inverse()).inverse()
    side = "left" if left else "right"

    def op(word, y):
        # apply the product g_1 g_2 ... as an operator
        seq = reversed(word) if left else word
        for g in seq:
            y = A(g, y)
        return y

    yield _eq_case({"side": side, "rel": "K E = q E K", "x": x}, op(("K", "E"), x), op(("E", "K"), x).scale(q))
    yield _eq_case({"side": side, "rel": "K F = q^-1 F K", "x": x}, op(("K", "F"), x), op(("F", "K"), x).scale(q.inverse()))
    yield _eq_case({"side": side, "rel": "K Kinv = 1", "x": x}, op(("K", "Kinv"), x), x)
    lhs = op(("E", "F"), x) - op(("F", "E"), x)
    rhs = (op(("K", "K"), x) - op(("Kinv", "Kinv"), x)).scale(inv)
    yield _eq_case({"side": side, "rel": "[E,F]", "x": x}, lhs, rhs)


@check("actions", "uq_relations")
def _relsu(ctx):
    for _ in range(ctx.samples):
        x = random_element(ctx.rng)
        yield from _relsu_cases(x, True)
        yield from _relsu_cases(x, False)


@check("actions", "star_compatibility")
def _star_compat(ctx):
    q = vpow(2)
    # (S g)^* for g = K, E, F with S(E) = -qE, S(F) = -q^-1 F, E* = F, K* = K
    sg = {"K": ("Kinv", ONE), "E": ("F", -q), "F": ("E", -q.inverse())}
    for _ in range(ctx.samples):
        x = random_element(ctx.rng)
        for g, (h, s) in sg.items():
            yield _eq_case({"g": g, "x": x}, act_left(g, x.star()), act_left(h, x).scale(s).star())
            yield _eq_case({"g": g, "x": x, "side": "right"}, act_right(x.star(), g), act_right(x, h).scale(s).star())


def lact_power_cases(smax: int = 6):
    """The closed action formulas on generator powers, against the Leibniz extension."""
    for s in range(1, smax + 1):
        qs = q_int(s)
        cases = {
            ("K", "a"): (a ** s, (a ** s).scale(vpow(-s))),
            ("K", "a*"): (a_star ** s, (a_star ** s).scale(vpow(s))),
            ("K", "c"): (c ** s, (c ** s).scale(vpow(-s))),
            ("K", "c*"): (c_star ** s, (c_star ** s).scale(vpow(s))),
            ("Kinv", "a"): (a ** s, (a ** s).scale(vpow(s))),
            ("Kinv", "a*"): (a_star ** s, (a_star ** s).scale(vpow(-s))),
            ("Kinv", "c"): (c ** s, (c ** s).scale(vpow(s))),
            ("Kinv", "c*"): (c_star ** s, (c_star ** s).scale(vpow(-s))),
            ("F", "a"): (a ** s, AlgebraElement()),
            ("F", "a*"): (a_star ** s, mul(c, a_star ** (s - 1)).scale(vpow(1 - s) * qs)),
            ("F", "c"): (c ** s, AlgebraElement()),
            ("F", "c*"): (c_star ** s, mul(a, c_star ** (s - 1)).scale(-vpow(-1 - s) * qs)),
            ("E", "a"): (a ** s, mul(a ** (s - 1), c_star).scale(-vpow(3 - s) * qs)),
            ("E", "a*"): (a_star ** s, AlgebraElement()),
            ("E", "c"): (c ** s, mul(c ** (s - 1), a_star).scale(vpow(1 - s) * qs)),
            ("E", "c*"): (c_star ** s, AlgebraElement()),
        }
        for (g, x), (arg, want) in cases.items():
            yield _eq_case({"g": g, "x": f"{x}^{s}"}, act_left(g, arg), want)


@check("actions", "power_formulas")
def _lact(ctx):
    yield from lact_power_cases(6)


@check("actions", "grading_shifts")
def _grading(ctx):
    for n in range(-4, 5):
        for d in range(abs(n), 7, 2):
            for mono in bundle_basis(n, d):
                x = AlgebraElement.monomial(*mono)
                for g, shift in (("E", 2), ("F", -2), ("K", 0)):
                    y = act_left(g, x)
                    yield (in_bundle(y, n + shift), {"g": g, "x": x, "side": "left"}, grade_of(y), n + shift)
                    z = act_right(x, g)
                    yield (in_bundle(z, n), {"g": g, "x": x, "side": "right"}, grade_of(z), n)


# -- calculus ----------------------------------------------------------------

def _random_oneform(rng):
    return cal.Form(1, {("-",): random_element(rng, 2), ("+",): random_element(rng, 2), ("z",): random_element(rng, 2)})


@check("calculus", "d_squared_functions")
def _dd_f(ctx):
    for _ in range(ctx.samples):
        f = random_element(ctx.rng)
        r = cal.d3(cal.d3(cal.Form.function(f)))
        yield (r.is_zero(), {"f": f}, r, 0)


@check("calculus", "d_squared_oneforms")
def _dd_w(ctx):
    for lab in cal.LABELS[1]:
        r = cal.d3(cal.d3(cal.Form.basis(*lab)))
        yield (r.is_zero(), {"form": cal.label_name(lab)}, r, 0)
    for _ in range(ctx.samples):
        w = _random_oneform(ctx.rng)
        r = cal.d3(cal.d3(w))
        yield (r.is_zero(), {"w": w}, r, 0)


@check("calculus", "graded_leibniz")
def _leibniz(ctx):
    for _ in range(ctx.samples):
        f = cal.Form.function(random_element(ctx.rng, 2))
        w1, w2 = _random_oneform(ctx.rng), _random_oneform(ctx.rng)
        yield _eq_case({"f": f, "w": w1}, cal.d3(cal.wedge(f, w1)), cal.wedge(cal.d3(f), w1) + cal.wedge(f, cal.d3(w1)))
        yield _eq_case({"w1": w1, "w2": w2}, cal.d3(cal.wedge(w1, w2)), cal.wedge(cal.d3(w1), w2) - cal.wedge(w1, cal.d3(w2)))


@check("calculus", "star_compatibility")
def _dstar(ctx):
    for _ in range(ctx.samples):
        f = random_element(ctx.rng)
        yield _eq_case({"f": f}, cal.d3(cal.Form.function(f.star())), cal.star_form(cal.d3(cal.Form.function(f))))


@check("calculus", "del_star_is_dbar")
def _delstar(ctx):
    for _ in range(ctx.samples):
        f = random_l0(ctx.rng)
        yield _eq_case({"f": f}, cal.star_form(cal.del_(f)), cal.dbar(f.star()))


@check("calculus", "bimodule_rules")
def _bi1(ctx):
    q = vpow(2)
    rules = [
        ("z", a, q ** -2), ("z", a_star, q ** 2), ("+", a, q ** -1), ("-", a, q ** -1),
        ("+", a_star, q), ("-", a_star, q), ("z", c, q ** -2), ("z", c_star, q ** 2),
        ("+", c, q ** -1), ("-", c, q ** -1), ("+", c_star, q), ("-", c_star, q),
    ]
    for lab, x, s in rules:
        yield _eq_case({"w": lab, "x": x}, cal.push_left(x, (lab,)), cal.Form(1, {(lab,): x.scale(s)}))
    # each rule again inside a random right context: w (x f) = s x (w f)
    for _ in range(ctx.samples):
        for lab, x, s in rules:
            f = random_element(ctx.rng, 2)
            lhs = cal.push_left(mul(x, f), (lab,))
            rhs = cal.push_left(f, (lab,)).left_mul(x).scale(s)
            yield _eq_case({"w": lab, "x": x, "f": f}, lhs, rhs)


@check("calculus", "maurer_cartan")
def _mc(ctx):
    d = lambda f: cal.d3(cal.Form.function(f))
    q = vpow(2)
    wz = d(a).left_mul(a_star) + d(c).left_mul(c_star)
    wm = d(a_star).left_mul(c_star) - d(c_star).left_mul(a_star).scale(q)
    wp = d(c).left_mul(a) - d(a).left_mul(c).scale(q)
    yield _eq_case({"basis": "wz"}, wz, cal.Form.basis("z"))
    yield _eq_case({"basis": "w-"}, wm, cal.Form.basis("-"))
    yield _eq_case({"basis": "w+"}, wp, cal.Form.basis("+"))
    # d of the defining expressions versus the structure equations
    yield _eq_case({"d": "wz"}, cal.wedge(d(a_star), d(a)) + cal.wedge(d(c_star), d(c)), cal.d3(cal.Form.basis("z")))
    yield _eq_case({"d": "w-"}, cal.wedge(d(c_star), d(a_star)) - cal.wedge(d(a_star), d(c_star)).scale(q), cal.d3(cal.Form.basis("-")))
    yield _eq_case({"d": "w+"}, cal.wedge(d(a), d(c)) - cal.wedge(d(c), d(a)).scale(q), cal.d3(cal.Form.basis("+")))
    yield _eq_case({"d": "wz"}, cal.d3(cal.Form.basis("z")), cal.Form.basis("-", "+").scale(-ONE))
    yield _eq_case({"d": "w+"}, cal.d3(cal.Form.basis("+")), cal.Form.basis("z", "+").scale(q * q + q ** 4))
    yield _eq_case({"d": "w-"}, cal.d3(cal.Form.basis("-")), cal.Form.basis("z", "-").scale(-(ONE + q ** -2)))
    # structure equations inside random coefficients: d(f w) = df ^ w + f dw
    struct = {
        "z": cal.Form.basis("-", "+").scale(-ONE),
        "+": cal.Form.basis("z", "+").scale(q * q + q ** 4),
        "-": cal.Form.basis("z", "-").scale(-(ONE + q ** -2)),
    }
    for _ in range(ctx.samples):
        f = random_element(ctx.rng, 2)
        for lab, dw in struct.items():
            w = cal.Form.basis(lab)
            lhs = cal.d3(w.left_mul(f))
            rhs = cal.wedge(d(f), w) + dw.left_mul(f)
            yield _eq_case({"f": f, "w": lab}, lhs, rhs)


@check("calculus", "relations_among_differentials")
def _rel_diff(ctx):
    q = vpow(2)
    bm, bp, b0 = alg.B_minus, alg.B_plus, alg.B_zero
    r1 = cal.del_(b0) - cal.del_(bp).left_mul(bm).scale(q ** -2) + cal.del_(bm).left_mul(bp).scale(q ** 2)
    r2 = cal.dbar(b0) - cal.dbar(bm).left_mul(bp) + cal.dbar(bp).left_mul(bm).scale(q ** -4)
    yield (r1.is_zero(), {"rel": "del"}, r1, 0)
    yield (r2.is_zero(), {"rel": "dbar"}, r2, 0)


@check("calculus", "top_form_central")
def _central(ctx):
    for _ in range(ctx.samples):
        f = random_l0(ctx.rng)
        top = cal.Form.basis("-", "+")
        yield _eq_case({"f": f}, top.right_mul(f), top.left_mul(f))


# -- connections -------------------------------------------------------------

@check("connections", "leibniz_left")
def _con_leibniz(ctx):
    for _ in range(ctx.samples):
        n = ctx.rng.randint(-4, 4)
        f, phi = random_l0(ctx.rng), random_bundle(ctx.rng, n)
        lhs = con.nabla(n, mul(f, phi)).as_form()
        df = cal.d3(cal.Form.function(f))
        rhs = con.nabla(n, phi).as_form().left_mul(f) + df.right_mul(phi)
        yield _eq_case({"n": n, "f": f, "phi": phi}, lhs, rhs)


@check("connections", "splitting")
def _con_split(ctx):
    for _ in range(ctx.samples):
        n = ctx.rng.randint(-4, 4)
        phi = random_bundle(ctx.rng, n)
        whole = con.nabla(n, phi).as_form()
        parts = con.nabla_del_right_form(n, phi) + con.nabla_dbar_right_form(n, phi)
        yield _eq_case({"n": n, "phi": phi}, whole, parts)


@check("connections", "dbar_leibniz")
def _dbar_leibniz(ctx):
    for _ in range(ctx.samples):
        n = ctx.rng.randint(-4, 4)
        f, phi = random_l0(ctx.rng), random_bundle(ctx.rng, n)
        lhs = cal.Form(1, {("-",): con.nabla_dbar(n, mul(f, phi))})
        rhs = cal.Form(1, {("-",): con.nabla_dbar(n, phi)}).left_mul(f) + cal.dbar(f).right_mul(phi)
        yield _eq_case({"n": n, "f": f, "phi": phi}, lhs, rhs)
        # right version: nabla_dbar(phi f) = nabla_dbar(phi) f + Phi(phi (x) dbar f)
        lhs = cal.Form(1, {("-",): con.nabla_dbar(n, mul(phi, f))})
        rhs = cal.Form(1, {("-",): con.nabla_dbar(n, phi)}).right_mul(f) + cal.dbar(f).left_mul(phi)
        yield _eq_case({"n": n, "f": f, "phi": phi, "side": "right"}, lhs, rhs)


@check("connections", "dbar_flat")
def _flat(ctx):
    for n in range(-4, 5):
        for phi in con.curvature_sample(n)[:4]:
            # the (0,2) part: nabla_dbar applied twice lands on w- ^ w- = 0
            x = con.nabla_dbar(n, phi)
            y = con.nabla_dbar(n - 2, x) if not x.is_zero() else AlgebraElement()
            w = cal.wedge(cal.Form(1, {("-",): ONE_ELEMENT}), cal.Form(1, {("-",): y}))
            yield (w.is_zero(), {"n": n, "phi": phi}, w, 0)


ONE_ELEMENT = AlgebraElement.scalar(ONE)


@check("connections", "curvature_constant")
def _curv(ctx):
    for n in range(-8, 9):
        try:
            s = con.curvature_constant(n)
        except con.CurvatureError as e:
            yield (False, {"n": n}, str(e), "constant")
            continue
        yield _eq_case({"n": n, "form": "-q^(-2n-2) Xz"}, s, con.curvature_from_xz(n))


# -- sections ----------------------------------------------------------------

@check("sections", "holomorphic_dimensions")
def _sec_dims(ctx):
    for n in range(1, 7):
        dims = sec.section_dims(-n, n + 6)
        want = {d: (n + 1 if d == n else 0) for d in dims}
        yield _eq_case({"n": -n, "max_len": n + 6}, dims, want)
        dims = sec.section_dims(n, 10)
        yield _eq_case({"n": n, "max_len": 10}, dims, {d: 0 for d in dims})
    dims = sec.section_dims(0, 8)
    yield _eq_case({"n": 0, "max_len": 8}, dims, {d: (1 if d == 0 else 0) for d in dims})


@check("sections", "ring")
def _ring(ctx):
    r = sec.ring_check(6)
    yield (r["ok"] and r["graded_dims"] == list(range(1, 8)), {"n_max": 6}, r, "quantum plane")


@check("sections", "hilbert_agreement")
def _hilbert(ctx):
    for n in range(-4, 5):
        yield _eq_case({"n": n}, sec.total_h0_dimension(n, 10), sec.hilbert_kernel_dims(n, 5))


@check("sections", "kernel_vectors")
def _kernel(ctx):
    for n in range(-4, 3):
        for d in range(abs(n), abs(n) + 5, 2):
            for v in sec.kernel_basis(n, d).vectors:
                ok = vector_field("Xminus", v).is_zero() and in_bundle(v, n)
                yield (ok, {"n": n, "d": d, "v": v}, "X- v", 0)
    for j in range(5):
        for k in range(5):
            x = mul(a ** j, c ** k)
            y = vector_field("Xminus", x)
            yield (y.is_zero(), {"j": j, "k": k}, y, 0)


@check("sections", "filtration")
def _filtration(ctx):
    for n in range(-4, 5):
        yield (sec.filtration_preserved(n, 8), {"n": n}, "X- never lengthens", True)


# -- haar --------------------------------------------------------------------

@check("haar", "closed_form_vs_oracle")
def _haar_oracle(ctx):
    r = hr.check_haar_closed_form(6)
    yield (all(r.values()), {"max_k": 6}, r, "all true")


@check("haar", "matrix_element_norms")
def _haar_norm(ctx):
    yield _eq_case({"x": "c*c"}, hr.haar(mul(c_star, c)), ONE / (ONE + vpow(4)))
    for l in (Fraction(1, 2), Fraction(1)):
        r = sec.ladder_norm_check(l)
        yield (r["ok"], {"l": str(l)}, r, "ok")


@check("haar", "sigma_sign")
def _sigma(ctx):
    from .symmetry import SIGMA_SIGN
    yield _eq_case({"pairs": "(a,a*),(c,c*)"}, hr.check_sigma_sign(), SIGMA_SIGN)


@check("haar", "twisted_trace")
def _trace(ctx):
    for _ in range(ctx.samples):
        x = AlgebraElement.monomial(*_rand_mono(ctx.rng, 4))
        y = AlgebraElement.monomial(*_rand_mono(ctx.rng, 4))
        yield _eq_case({"x": x, "y": y}, hr.haar(mul(x, y)), hr.haar(mul(hr.sigma(y), x)))


def _rand_mono(rng, max_len):
    while True:
        m = rng.randint(-max_len, max_len)
        k = rng.randint(0, max_len)
        l = rng.randint(0, max_len)
        if abs(m) + k + l <= max_len:
            return (m, k, l)


@check("haar", "integral_lemma")
def _lemma(ctx):
    for _ in range(max(1, ctx.samples // 2)):
        a0, a1, a2, a3 = (random_l0(ctx.rng, 1) for _ in range(4))
        w = cal.wedge(cal.del_(a1), cal.dbar(a2))
        lhs = hr.integrate2(w.left_mul(a0).right_mul(a3))
        rhs = hr.integrate2(w.left_mul(mul(hr.sigma(a3), a0)))
        yield _eq_case({"a0": a0, "a1": a1, "a2": a2, "a3": a3}, lhs, rhs)


# -- cocycles ----------------------------------------------------------------

def _zero_case(inputs, value):
    return (value.is_zero(), inputs, value, 0)


@check("cocycles", "b_sigma_phi")
def _bphi(ctx):
    b = hr.b_sigma(hr.PHI)
    for _ in range(ctx.samples):
        xs = [random_l0(ctx.rng, 1) for _ in range(4)]
        yield _zero_case({"a": xs}, b(*xs))


@check("cocycles", "b_sigma_tau")
def _btau(ctx):
    b = hr.b_sigma(hr.TAU)
    for _ in range(ctx.samples):
        xs = [random_l0(ctx.rng, 1) for _ in range(4)]
        yield _zero_case({"a": xs}, b(*xs))


@check("cocycles", "lambda_tau")
def _ltau(ctx):
    lt = hr.lambda_sigma(hr.TAU)
    for _ in range(ctx.samples):
        xs = [random_l0(ctx.rng) for _ in range(3)]
        yield _eq_case({"a": xs}, lt(*xs), hr.TAU(*xs))


@check("cocycles", "lambda_cubed")
def _l3(ctx):
    l3phi = hr.lambda_sigma(hr.lambda_sigma(hr.lambda_sigma(hr.PHI)))
    l3tau = hr.lambda_sigma(hr.lambda_sigma(hr.lambda_sigma(hr.TAU)))
    for _ in range(ctx.samples):
        xs = [random_l0(ctx.rng) for _ in range(3)]
        yield _eq_case({"a": xs, "cochain": "phi"}, l3phi(*xs), hr.PHI(*xs))
        yield _eq_case({"a": xs, "cochain": "tau"}, l3tau(*xs), hr.TAU(*xs))


@check("cocycles", "sigma_invariance")
def _sinv(ctx):
    for _ in range(ctx.samples):
        xs = [random_l0(ctx.rng) for _ in range(3)]
        yield _eq_case({"a": xs}, hr.PHI(*(hr.sigma(x) for x in xs)), hr.PHI(*xs))


@check("cocycles", "cohomologous")
def _cohom(ctx):
    # tau - phi = b_sigma psi with psi(a, b) = 1/2 int a del dbar b
    bpsi = hr.b_sigma(hr.PSI)
    for _ in range(ctx.samples):
        xs = [random_l0(ctx.rng) for _ in range(3)]
        yield _eq_case({"a": xs}, hr.TAU(*xs) - hr.PHI(*xs), bpsi(*xs))


# -- positivity --------------------------------------------------------------

@check("positivity", "diagonal_nonnegative")
def _diag(ctx):
    for _ in range(ctx.samples):
        a0, a1 = random_l0(ctx.rng), random_l0(ctx.rng)
        val = hr.diagonal_value(a0, a1)
        for q0 in ctx.q0:
            g = eval_at(val, q0)
            ok = g.is_real() and g.re >= 0
            yield (ok, {"a0": a0, "a1": a1, "q0": str(q0)}, g, ">= 0")


@check("positivity", "gram_psd")
def _gram(ctx):
    for _ in range(max(1, ctx.samples // 20)):
        size = ctx.rng.randint(1, 5)
        fam = [(random_l0(ctx.rng, 1), random_l0(ctx.rng, 1)) for _ in range(size)]
        sym = hr.gram_symbolic(fam)
        for q0 in ctx.q0:
            try:
                rep = hr.evaluate_gram(sym, q0)
                yield (rep.psd, {"family": fam, "q0": str(q0)}, rep.to_json(), "psd")
            except hr.GramError as e:
                yield (False, {"family": fam, "q0": str(q0)}, str(e), "hermitian")


@check("positivity", "pinned_value")
def _pinned(ctx):
    fam = [(ONE_ELEMENT, alg.B_zero)]
    rep = hr.positivity_check(fam, Fraction(1, 2))
    want = eval_at(hr.positivity_oracle_b0(), Fraction(1, 2))
    yield _eq_case({"family": "(1, B0)", "q0": "1/2"}, rep.matrix[0][0], want)


# -- driver ------------------------------------------------------------------

def _serialize_inputs(inputs: dict) -> dict:
    out = {}
    for k, v in sorted(inputs.items()):
        if isinstance(v, (list, tuple)):
            out[k] = [_show(x) for x in v]
        else:
            out[k] = _show(v)
    return out


def run_suite(suite: str, samples: int, seed: int, q0=None) -> dict:
    if suite not in _REGISTRY:
        raise ValueError(f"unknown suite {suite!r}")
    rng = random.Random(f"{seed}:{suite}")
    q0s = (Fraction(q0),) if q0 is not None else DEFAULT_Q0
    ctx = Context(rng, samples, q0s)
    checks = []
    for name, fn in _REGISTRY[suite]:
        res = CheckResult(name)
        for ok, inputs, lhs, rhs in fn(ctx):
            res.cases += 1
            if not ok:
                res.failures.append({
                    "case": res.cases,
                    "inputs": _serialize_inputs(inputs),
                    "lhs": _show(lhs),
                    "rhs": _show(rhs),
                })
        checks.append(res)
    return {
        "suite": suite,
        "cases": sum(c.cases for c in checks),
        "failures": sum(len(c.failures) for c in checks),
        "checks": [c.to_json() for c in checks],
    }


def run_verify(suite: str, samples: int = 100, seed: int = 0, q0=None) -> dict:
    """VerifyReport as a dict; deterministic in (suite, samples, seed, q0)."""
    names = SUITES if suite == "all" else (suite,)
    reports = [run_suite(s, samples, seed, q0) for s in names]
    return {
        "schema_version": 1,
        "kind": "verify",
        "suite": suite,
        "samples": samples,
        "seed": seed,
        "q0": None if q0 is None else str(Fraction(q0)),
        "cases": sum(r["cases"] for r in reports),
        "failures": sum(r["failures"] for r in reports),
        "suites": reports,
    }


__all__ = [
    "SUITES", "COEFF_POOL", "random_element", "random_l0", "random_bundle", "random_word",
    "run_suite", "run_verify", "lact_power_cases",
]

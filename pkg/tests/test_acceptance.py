"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Criteria are asserted exactly as stated.  Three of them (curvature sign,
the sign in the cohomology relation, the pinned positivity value) are known
not to hold for the computed objects; the tests are left failing.
"""
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

from qcp1.algebra import AlgebraElement, B_zero, a, c, mul
from qcp1.cli import main
from qcp1.connections import curvature_constant, curvature_expected
from qcp1.haar import (
    PHI, PSI, TAU, b_sigma, check_haar_closed_form, diagonal_value, haar, lambda_sigma,
    positivity_check, positivity_oracle_b0, sigma,
)
from qcp1.scalar import ONE, eval_at, vpow
from qcp1.sections import _same_span, hilbert_kernel_dims, kernel_basis, ladder_norm_check, ring_check, total_h0_dimension
from qcp1.verify import random_l0, run_suite

Q = vpow(2)
SEED = 42


def _cli(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, json.loads(out)


def _checks(report, names):
    by = {c["name"]: c for c in report["checks"]}
    return {n: (by[n]["cases"], len(by[n]["failures"])) for n in names}


def test_criterion_01_section_dimensions(capsys, acceptance):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 7):
        code, obj = _cli(capsys, "sections", "--n", str(-n), "--max-len", str(n + 6))
        dims = {e["len"]: e["dim"] for e in obj["lengths"]}
        if code or dims.get(n) != n + 1 or any(v for d, v in dims.items() if d != n):
            bad.append(f"L_-{n}: {dims}")
        code, obj = _cli(capsys, "sections", "--n", str(n), "--max-len", "10")
        if code or obj["total"] != 0:
            bad.append(f"L_{n}: total {obj['total']}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    acceptance(1, "section dimensions", ok, f"{elapsed:.1f}s" + (f"; {bad}" if bad else ""))


def test_criterion_02_quantum_plane(acceptance):
    span = _same_span(kernel_basis(-1, 1).vectors, [a, c], -1, 1)
    rel = (mul(a, c) - mul(c, a).scale(Q)).is_zero()
    rep = ring_check(6)
    ok = span and rel and rep["ok"] and rep["graded_dims"] == [1, 2, 3, 4, 5, 6, 7]
    acceptance(2, "quantum plane ring", ok, f"dims {rep['graded_dims']}")


def test_criterion_03_curvature(acceptance):
    bad = []
    for n in range(-8, 9):
        got, want = curvature_constant(n), curvature_expected(n)
        if got != want:
            bad.append(f"n={n}: {got.pretty()} vs {want.pretty()}")
    acceptance(3, "curvature equals -q^(-n-1)[n]", not bad,
               f"{len(bad)}/17 mismatches" + (f", e.g. {bad[0]}" if bad else ""))


def test_criterion_04_calculus(acceptance):
    rep = run_suite("calculus", 200, SEED)
    res = _checks(rep, ["d_squared_functions", "d_squared_oneforms", "graded_leibniz", "del_star_is_dbar",
                        "maurer_cartan", "bimodule_rules"])
    ok = all(n >= 200 and f == 0 for n, f in res.values())
    acceptance(4, "calculus identities", ok, ", ".join(f"{k} {f}/{n}" for k, (n, f) in res.items()))


def test_criterion_05_hopf_actions(acceptance):
    rep = run_suite("actions", 200, SEED)
    res = _checks(rep, ["module_algebra_left", "module_algebra_right", "uq_relations", "power_formulas",
                        "left_right_commute"])
    total = sum(n for n, _ in res.values())
    ok = total >= 200 and all(f == 0 for _, f in res.values()) and res["power_formulas"][0] == 96
    acceptance(5, "Hopf action laws", ok, ", ".join(f"{k} {f}/{n}" for k, (n, f) in res.items()))


def test_criterion_06_haar(acceptance):
    norm = haar(mul(c.star(), c)) == ONE / (ONE + Q ** 2)
    closed = all(check_haar_closed_form(6).values())
    ladder = ladder_norm_check("1/2")["ok"] and ladder_norm_check(1)["ok"]
    trace = _checks(run_suite("haar", 200, SEED), ["twisted_trace"])["twisted_trace"]
    ok = norm and closed and ladder and trace[0] >= 200 and trace[1] == 0
    acceptance(6, "Haar state", ok, f"norm {norm}, oracle {closed}, ladder {ladder}, trace {trace[1]}/{trace[0]}")


def test_criterion_07_cocycles(acceptance):
    rng = random.Random(f"{SEED}:acceptance7")
    bphi, btau, bpsi = b_sigma(PHI), b_sigma(TAU), b_sigma(PSI)
    l3 = lambda_sigma(lambda_sigma(lambda_sigma(PHI)))
    ltau = lambda_sigma(TAU)
    fails = dict.fromkeys(["b_sigma phi = 0", "lambda^3 phi = phi", "lambda tau = tau", "b_sigma tau = 0",
                           "phi o sigma = phi", "phi - tau = b_sigma psi"], 0)
    cases = 100
    for _ in range(cases):
        x = [random_l0(rng) for _ in range(4)]
        t = x[:3]
        fails["b_sigma phi = 0"] += not bphi(*x).is_zero()
        fails["b_sigma tau = 0"] += not btau(*x).is_zero()
        fails["lambda^3 phi = phi"] += l3(*t) != PHI(*t)
        fails["lambda tau = tau"] += ltau(*t) != TAU(*t)
        fails["phi o sigma = phi"] += PHI(*(sigma(y) for y in t)) != PHI(*t)
        fails["phi - tau = b_sigma psi"] += PHI(*t) - TAU(*t) != bpsi(*t)
    ok = not any(fails.values())
    acceptance(7, "cocycle identities", ok, ", ".join(f"{k} {v}/{cases} failed" for k, v in fails.items()))


def test_criterion_08_positivity(acceptance):
    rng = random.Random(f"{SEED}:acceptance8")
    q0s = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    diag_bad = 0
    for _ in range(100):
        val = diagonal_value(random_l0(rng), random_l0(rng))
        for q0 in q0s:
            g = eval_at(val, q0)
            diag_bad += not (g.is_real() and g.re >= 0)
    gram_bad = 0
    for _ in range(10):
        fam = [(random_l0(rng, 1), random_l0(rng, 1)) for _ in range(rng.randint(1, 5))]
        for q0 in q0s:
            gram_bad += not positivity_check(fam, q0).psd
    # the pre-build oracle: del B0 = y w+, pairing = q^2 h(y y*), closed Haar formula
    entry = positivity_check([(AlgebraElement.scalar(ONE), B_zero)], Fraction(1, 2)).matrix[0][0]
    stated = eval_at(positivity_oracle_b0("stated"), Fraction(1, 2))
    pinned = entry == stated
    ok = diag_bad == 0 and gram_bad == 0 and pinned
    acceptance(8, "twisted positivity", ok,
               f"diagonal {diag_bad}/300 negative, gram {gram_bad}/30 not PSD, pinned {entry.re} vs oracle {stated.re}")


def test_criterion_09_hilbert(acceptance):
    bad = []
    for n in range(-4, 5):
        d_max = 8 if n % 2 == 0 else 9
        h, alg = hilbert_kernel_dims(n, Fraction(d_max, 2)), total_h0_dimension(n, d_max)
        if h != alg:
            bad.append(f"n={n}: {h} vs {alg}")
    acceptance(9, "Hilbert cross-check", not bad, "; ".join(bad))


def test_criterion_10_determinism(acceptance):
    cmd = [sys.executable, "-m", "qcp1.cli", "verify", "--suite", "all", "--samples", "200", "--seed", "42"]
    r1 = subprocess.run(cmd, capture_output=True)
    r2 = subprocess.run(cmd, capture_output=True)
    same = r1.stdout == r2.stdout and len(r1.stdout) > 0
    ok = same and r1.returncode == 0 and r2.returncode == 0
    fails = json.loads(r1.stdout)["failures"] if r1.stdout else "n/a"
    acceptance(10, "verify determinism", ok, f"identical {same}, exit {r1.returncode}/{r2.returncode}, failures {fails}")

import json
import random

from qcp1.bundles import in_bundle
from qcp1.verify import SUITES, random_bundle, random_element, random_l0, run_suite, run_verify


def test_suite_names():
    assert SUITES == ("algebra", "actions", "calculus", "connections", "sections", "haar", "cocycles", "positivity")


def test_generators_are_seeded():
    r1, r2 = random.Random(5), random.Random(5)
    assert [random_element(r1) for _ in range(10)] == [random_element(r2) for _ in range(10)]


def test_generator_shapes():
    rng = random.Random(1)
    for _ in range(50):
        x = random_element(rng)
        assert 1 <= len(x.terms) <= 4 or x.is_zero()
        assert all(abs(m) <= 3 and k <= 3 and l <= 3 for m, k, l in x.terms)
        assert in_bundle(random_l0(rng), 0)
        assert in_bundle(random_bundle(rng, 3), 3)


def test_report_is_deterministic():
    a = json.dumps(run_verify("cocycles", 5, 9), sort_keys=True)
    b = json.dumps(run_verify("cocycles", 5, 9), sort_keys=True)
    assert a == b


def test_report_shape():
    rep = run_suite("haar", 3, 0)
    assert rep["failures"] == 0
    assert {c["name"] for c in rep["checks"]} >= {"twisted_trace", "closed_form_vs_oracle"}


def test_positivity_at_fixed_q():
    rep = run_verify("positivity", 10, 7, "1/2")
    assert rep["failures"] == 0
    assert rep["q0"] == "1/2"

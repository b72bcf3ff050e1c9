import json

import pytest

from qcp1.algebra import a, c, from_json, mul
from qcp1.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def payload(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    lines = out.strip().splitlines()
    assert len(lines) == 1
    obj = json.loads(lines[0])
    assert obj["schema_version"] == 1
    return obj


def test_nf(capsys):
    obj = payload(capsys, "nf", "c a")
    assert obj["verb"] == "nf"
    assert from_json(obj["element"]) == mul(c, a)


def test_act_and_vf(capsys):
    obj = payload(capsys, "act", "--gen", "E", "c")
    assert obj["expression"] == payload(capsys, "nf", "a*")["expression"]
    obj = payload(capsys, "act", "--side", "right", "--gen", "E", "c")
    assert from_json(obj["element"]) == a
    obj = payload(capsys, "vf", "--op", "x-", "a c")
    assert obj["element"] == []


def test_diff(capsys):
    obj = payload(capsys, "diff", "--op", "d", "B0")
    assert obj["form"]["degree"] == 1
    assert set(obj["form"]["parts"]) == {"w-", "w+"}
    obj = payload(capsys, "diff", "--op", "dbar", "B0")
    assert set(obj["form"]["parts"]) == {"w-"}


def test_basis(capsys):
    obj = payload(capsys, "basis", "--n", "-1", "--len", "1")
    assert {(m["m"], m["k"], m["l"]) for m in obj["basis"]} == {(1, 0, 0), (0, 1, 0)}


def test_sections(capsys):
    obj = payload(capsys, "sections", "--n", "-2", "--max-len", "6")
    dims = {e["len"]: e["dim"] for e in obj["lengths"]}
    assert dims == {0: 0, 2: 3, 4: 0, 6: 0}
    assert obj["total"] == 3


def test_nabla(capsys):
    obj = payload(capsys, "nabla", "--n", "-1", "c")
    assert obj["minus_part"] == []
    assert from_json(obj["plus_part"]) != from_json([])


def test_curvature(capsys):
    obj = payload(capsys, "curvature", "--n", "2", "--q", "1/2")
    assert obj["curvature"]["at_q"] == "20+0i"
    assert obj["closed_form"]["at_q"] == "-20+0i"
    assert obj["equals_xz_form"] is True
    assert obj["equals_closed_form"] is False


def test_haar(capsys):
    obj = payload(capsys, "haar", "--q", "1/2", "c c*")
    assert obj["haar"]["at_q"] == "4/5+0i"


def test_cocycle(capsys):
    obj = payload(capsys, "cocycle", "--which", "phi", "--args", '["1", "B0", "B0"]', "--q", "1/2")
    assert obj["value"]["at_q"] == "16/105+0i"


def test_human_output(capsys):
    code, out, _ = run(capsys, "haar", "--human", "1")
    assert code == 0
    assert "haar:" in out


@pytest.mark.parametrize("argv", [
    ["nf", "a +"],
    ["haar", "a $"],
    ["nabla", "--n", "0", "a"],
    ["cocycle", "--which", "tau", "--args", '["1"]'],
    ["cocycle", "--which", "tau", "--args", "{"],
    ["haar", "--q", "zz", "1"],
    ["haar", "--q", "1", "1 / (1 - q)"],
    ["bogus"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_verify_small(capsys):
    obj = payload(capsys, "verify", "--suite", "algebra", "--samples", "5", "--seed", "3")
    assert obj["failures"] == 0
    assert obj["suite"] == "algebra"


def test_verify_rejects_bad_q(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "algebra", "--samples", "1", "--q", "2")
    assert code == 2

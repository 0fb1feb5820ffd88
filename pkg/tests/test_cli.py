import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzyqubit import jsonio
from fuzzyqubit.cli import main
from fuzzyqubit.qubit import Qubit

GOLDEN = Path(__file__).parent / "golden"
QUARTER = (GOLDEN / "quarter_state.json").read_text()


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def qubit_of(text):
    return Qubit.from_dict(json.loads(text))


def test_state():
    code, out, _ = run(["state", "--a", "0.6", "--b", "0.8"])
    assert code == 0
    q = qubit_of(out)
    assert q.a == 0.6 and q.b == 0.8


def test_state_from_angles():
    code, out, _ = run(["state", "--theta", str(math.pi / 2), "--azimuth", "0", "--compact"])
    assert code == 0
    assert abs(qubit_of(out).a - 1 / math.sqrt(2)) <= 1e-15


def test_state_zero_vector_is_domain_error():
    code, out, err = run(["state", "--a", "0", "--b", "0"])
    assert code == 1 and out == "" and "zero vector" in err


@pytest.mark.parametrize("name,argv,stdin", [
    ("measure_seed42.json", ["measure", "--seed", "42"], QUARTER),
    ("fuzzy_n2_info.json", ["fuzzy", "--n", "2", "info"], ""),
    ("register_3.json", ["register", "--qubits", "3"], ""),
    ("decompose_hadamard.json", ["decompose", "--gate", "hadamard"], ""),
])
def test_golden(name, argv, stdin):
    code, out, _ = run(argv, stdin)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_fuzzy_info_k():
    _, out, _ = run(["fuzzy", "--n", "2"])
    assert json.loads(out)["k"] == 0.5773502691896258


def test_register():
    _, out, _ = run(["register", "--qubits", "3"])
    assert json.loads(out) == {"n": 8}


def test_measure_rerun_identical():
    runs = {run(["measure", "--seed", "42"], QUARTER)[1] for _ in range(3)}
    assert len(runs) == 1


def test_measure_shots():
    code, out, _ = run(["measure", "--seed", "5", "--shots", "100000"], QUARTER)
    counts = json.loads(out)["counts"]
    assert code == 0 and sum(counts) == 100000
    assert 0.24 <= counts[0] / 100000 <= 0.26


def test_measure_requires_seed():
    code, _, _ = run(["measure"], QUARTER)
    assert code == 2


def test_basic_then_recover():
    _, state, _ = run(["state", "--a", "0.6", "--b", "0.8"])
    flags = ["--phi", "0", "--alpha-re", "0", "--alpha-im", "1"]
    _, measured, _ = run(["basic", *flags], state)
    assert qubit_of(measured).probabilities == pytest.approx((0.36, 0.64), abs=1e-14)
    code, recovered, _ = run(["recover", *flags], measured)
    assert code == 0
    a, b = qubit_of(state), qubit_of(recovered)
    assert abs(a.a - b.a) <= 1e-12 and abs(a.b - b.b) <= 1e-12


def test_dual_basis_round_trip():
    _, state, _ = run(["state", "--a", "0.6", "--b-im", "0.8"])
    flags = ["--phi", "0.3", "--alpha-re", "0", "--alpha-im", "1", "--basis", "dual"]
    _, measured, _ = run(["basic", *flags], state)
    _, recovered, _ = run(["recover", *flags], measured)
    a, b = qubit_of(state), qubit_of(recovered)
    assert abs(a.a - b.a) <= 1e-12 and abs(a.b - b.b) <= 1e-12


def test_invalid_alpha():
    code, _, err = run(["basic", "--alpha-re", "2"], QUARTER)
    assert code == 1 and "unimodular" in err


def test_rotate_hadamard():
    _, state, _ = run(["state", "--a", "1", "--b", "0"])
    code, out, _ = run(["rotate", "--gate", "hadamard"], state)
    q = qubit_of(out)
    assert code == 0 and abs(q.a - q.b) <= 1e-15


def test_rotate_needs_gate():
    code, _, err = run(["rotate"], QUARTER)
    assert code == 1 and "--gate" in err


def test_decompose_from_stdin_matrix():
    doc = {"matrix": [[{"re": 0, "im": -1}, {"re": 0, "im": 0}], [{"re": 0, "im": 0}, {"re": 0, "im": 1}]]}
    code, out, _ = run(["decompose"], json.dumps(doc))
    r = json.loads(out)
    assert code == 0
    assert r["theta"] == pytest.approx(math.pi) and r["axis"] == [0.0, 0.0, 1.0]


def test_decompose_non_unitary():
    doc = {"matrix": [[{"re": 1, "im": 0}, {"re": 0, "im": 0}], [{"re": 0, "im": 0}, {"re": 0, "im": 0}]]}
    code, _, err = run(["decompose"], json.dumps(doc))
    assert code == 1 and "not unitary" in err


@pytest.mark.parametrize("n", [2, 64])
def test_fuzzy_verify(n):
    code, out, _ = run(["fuzzy", "--n", str(n), "verify"])
    assert code == 0
    assert max(json.loads(out)["residuals"].values()) <= 1e-9


@pytest.mark.parametrize("n", ["1", "4097"])
def test_fuzzy_out_of_range(n):
    assert run(["fuzzy", "--n", n])[0] == 1


@pytest.mark.parametrize("argv", [["bogus"], ["state", "--nope", "1"], ["fuzzy", "--n", "2", "draw"], []])
def test_usage_errors(argv):
    code, out, _ = run(argv)
    assert code == 2 and out == ""


@pytest.mark.parametrize("stdin,needle", [
    ("{not json", "malformed JSON"),
    ("", "expected a JSON document"),
    ('{"a": {"re": 1, "im": 0}}', "'b'"),
    ('{"a": {"re": "x", "im": 0}, "b": {"re": 0, "im": 0}}', "'a.re'"),
    ('{"a": {"re": 1, "im": 0}, "b": {"re": 1, "im": 0}}', "normalized"),
])
def test_bad_stdin(stdin, needle):
    code, out, err = run(["basic"], stdin)
    assert code == 1 and out == "" and needle in err


def test_out_file(tmp_path):
    target = tmp_path / "state.json"
    code, out, _ = run(["state", "--a", "1", "--b", "1", "--out", str(target)])
    assert code == 0 and out == ""
    assert abs(qubit_of(target.read_text()).a - 1 / math.sqrt(2)) <= 1e-15


def test_compact_is_single_line():
    _, out, _ = run(["fuzzy", "--n", "4", "verify", "--compact"])
    assert out.count("\n") == 1


@pytest.mark.parametrize("argv,stdin", [
    (["state", "--a", "0.6", "--b", "0.8"], ""),
    (["measure", "--seed", "42"], QUARTER),
    (["decompose", "--gate", "hadamard"], ""),
    (["fuzzy", "--n", "8", "verify"], ""),
    (["basic", "--phi", "1.1", "--alpha-re", "0", "--alpha-im", "-1"], QUARTER),
])
def test_documents_round_trip(argv, stdin):
    for compact in (False, True):
        _, out, _ = run(argv + (["--compact"] if compact else []), stdin)
        assert jsonio.dumps(json.loads(out), compact=compact) + "\n" == out


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_format_round_trip(x):
    text = jsonio.dumps([x], compact=True)
    assert json.loads(text) == [x]
    assert jsonio.dumps(json.loads(text), compact=True) == text


def test_real_pipe():
    exe = [sys.executable, "-m", "fuzzyqubit"]
    flags = ["--phi", "0", "--alpha-re", "0", "--alpha-im", "1"]
    state = subprocess.run(exe + ["state", "--a", "0.6", "--b", "0.8"], capture_output=True, text=True, check=True).stdout
    measured = subprocess.run(exe + ["basic", *flags], input=state, capture_output=True, text=True, check=True).stdout
    recovered = subprocess.run(exe + ["recover", *flags], input=measured, capture_output=True, text=True, check=True).stdout
    a, b = qubit_of(state), qubit_of(recovered)
    assert abs(a.a - b.a) <= 1e-12 and abs(a.b - b.b) <= 1e-12

"""End-to-end CLI tests driven through subprocess.

The test runner sets NEGABOUND_CLI to the built binary; without it the tests
are skipped (e.g. when pytest is invoked outside the build).
"""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("NEGABOUND_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="NEGABOUND_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def write_json(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def bell_state(tmp_path):
    return write_json(tmp_path / "state.json", {"kind": "bell_like", "lambda0": 0.5})


@pytest.fixture
def lowering_ops(tmp_path):
    return write_json(tmp_path / "ops.json", {"kind": "pauli_lowering"})


def test_neg_prints_negativity(bell_state):
    result = run("neg", "--state", bell_state)
    assert result.returncode == 0
    assert result.stdout.strip() == "0.5"


def test_neg_json_output(bell_state):
    result = run("neg", "--state", bell_state, "--json")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["negativity"] == pytest.approx(0.5, abs=1e-12)
    assert doc["state"]["kind"] == "bell_like"


def test_kappa_exit_codes(tmp_path, bell_state, lowering_ops):
    result = run("kappa", "--state", bell_state, "--ops", lowering_ops)
    assert result.returncode == 0
    assert "kappa: 0.25" in result.stdout

    # A product state violates no condition: exit code 2.
    product = write_json(tmp_path / "product.json", {"kind": "bell_like", "lambda0": 0.0})
    result = run("kappa", "--state", product, "--ops", lowering_ops)
    assert result.returncode == 2


def test_bound_first_qubit(bell_state, lowering_ops):
    result = run("bound", "--state", bell_state, "--ops", lowering_ops,
                 "--method", "first_qubit")
    assert result.returncode == 0
    assert "lower_bound: 0.207106781187" in result.stdout
    assert "applicable: true" in result.stdout


def test_bound_second_method_quadratic_display(bell_state, lowering_ops):
    result = run("bound", "--state", bell_state, "--ops", lowering_ops,
                 "--method", "second_method", "--json")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["applicable"]
    # Vanishing cross term: the headline value is the closed-form quadratic
    # sqrt(5) - 2, with the bisection value retained for comparison.
    assert doc["lower_bound"] == pytest.approx(5 ** 0.5 - 2, abs=1e-9)
    assert "bisection_lower_bound" in doc["inputs"]
    assert doc["inputs"]["bisection_lower_bound"] == pytest.approx(0.125, abs=1e-9)


def test_bound_not_applicable_exits_2(tmp_path, lowering_ops):
    product = write_json(tmp_path / "product.json", {"kind": "bell_like", "lambda0": 1.0})
    result = run("bound", "--state", product, "--ops", lowering_ops,
                 "--method", "first_qubit")
    assert result.returncode == 2
    assert "applicable: false" in result.stdout


def test_bound_schmidt_partition(tmp_path):
    state = write_json(tmp_path / "max.json", {"kind": "max_entangled", "n": 4})
    result = run("bound", "--state", state, "--method", "schmidt_known", "--k", "2")
    assert result.returncode == 0
    assert "lower_bound: 1.5" in result.stdout


def test_parse_errors_exit_1(tmp_path, bell_state):
    assert run("neg", "--state", str(tmp_path / "missing.json")).returncode == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("neg", "--state", str(bad)).returncode == 1
    assert run("bound", "--state", bell_state, "--method", "nope").returncode == 1
    assert run("nonsense").returncode == 1


def test_sweep_csv(tmp_path):
    spec = write_json(
        tmp_path / "sweep.json",
        {
            "family": "bell_like",
            "variable": "lambda0",
            "range": [0.0, 1.0],
            "points": 5,
            "quantities": ["kappa_first", "negativity_exact", "bound_first_qubit"],
        },
    )
    out = tmp_path / "sweep.csv"
    result = run("sweep", "--spec", spec, "--out", str(out))
    assert result.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "lambda0,kappa_first,negativity_exact,bound_first_qubit"
    assert len(lines) == 6
    # lambda0 = 0 is a product state: kappa = 0, so the bound cell is empty.
    assert lines[1].split(",") == ["0", "0", "0", ""]

    # Byte determinism across runs.
    again = run("sweep", "--spec", spec)
    assert again.stdout == out.read_text()


def test_search_subcommand(tmp_path):
    state = write_json(tmp_path / "state.json", {"kind": "bell_like", "lambda0": 0.3})
    result = run("search", "--state", state, "--method", "first_qubit",
                 "--restarts", "4", "--seed", "3", "--json")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["certificate"]["applicable"]
    assert len(doc["restart_best"]) == 4
    assert doc["certificate"]["lower_bound"] <= 0.3**0.5 * 0.7**0.5 + 1e-9


def test_dicke_rabi_csv():
    result = run("dicke", "rabi", "--j", "0.5", "--n-max", "2", "--points", "5",
                 "--t-max", "10")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "t,excited_population,closed_form"
    assert len(lines) == 6
    first = lines[1].split(",")
    assert first[0] == "0"
    assert float(first[1]) == pytest.approx(1.0, abs=1e-12)
    for line in lines[1:]:
        t, pop, closed = map(float, line.split(","))
        assert pop == pytest.approx(closed, abs=1e-9)


def test_dicke_schmidt_and_bound():
    args = ["--j", "4", "--n-max", "4", "--l1", "0", "--l2", "4", "--t", "1.37"]
    result = run("dicke", "schmidt", *args, "--json")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert len(doc["entries"]) == 3

    result = run("dicke", "bound", *args, "--json")
    assert result.returncode in (0, 2)
    doc = json.loads(result.stdout)
    if result.returncode == 0:
        assert doc["certificate"]["lower_bound"] <= doc["negativity_exact"] + 1e-9

    # t = 0 is a product state: no bound, exit code 2.
    zero = run("dicke", "bound", "--j", "4", "--n-max", "4", "--l1", "0", "--l2", "4",
               "--t", "0")
    assert zero.returncode == 2


def test_verify_subcommand():
    result = run("verify", "--suite", "golden")
    assert result.returncode == 0
    assert "suite golden: PASS" in result.stdout
    assert run("verify", "--suite", "no_such_suite").returncode == 1

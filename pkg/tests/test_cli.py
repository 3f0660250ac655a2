import json
import subprocess
import sys

import pytest

from cli_cases import FIXTURES, GRAPHS, cases, load_golden, run, run_full
from subcomp.io import parse_edge_list

CASES = cases()
GOLDEN_PARAMS = [(cmd, key, argv) for cmd, items in CASES.items() for key, argv in items]


@pytest.mark.parametrize("command, key, argv", GOLDEN_PARAMS, ids=[f"{c}-{k}" for c, k, _ in GOLDEN_PARAMS])
def test_golden(command, key, argv):
    expected = load_golden(command)[key]
    assert expected["argv"] == argv
    code, out = run(argv)
    assert (code, out) == (expected["exit"], expected["stdout"])


def test_goldens_cover_exactly_the_case_matrix():
    for command, items in CASES.items():
        assert set(load_golden(command)) == {key for key, _ in items}


def _json(argv):
    code, out = run(argv)
    return code, (json.loads(out) if out.strip() else None)


def test_solve_c4_to_split():
    code, rec = _json(["solve", "--target", "split", "--input", "{fix}/c4.el"])
    assert code == 0
    assert list(rec) == ["target", "source", "solution", "size", "weight", "status", "verified"]
    assert rec["solution"] == [0, 1] and rec["size"] == 2 and rec["status"] == "optimal"
    assert rec["verified"] is True and rec["weight"] is None


def test_solve_k1_disconnected_has_no_solution():
    code, rec = _json(["solve", "--target", "disconnected", "--input", "{fix}/k1.el"])
    assert code == 2 and rec["status"] == "none"


def test_solve_unsupported_pair():
    code, out, err = run_full(["solve", "--target", "chordal", "--input", "{fix}/p4.el"])
    assert code == 1 and out == ""
    assert "unsupported source/target pair" in err and "2-connected biregular" in err


def test_summary_goes_to_stderr():
    code, out, err = run_full(["solve", "--target", "split", "--input", "{fix}/c4.el"])
    assert err.startswith("split: optimal set of size 2")
    assert out.count("\n") == 1


def test_decimal_weights_are_printed_exactly():
    code, rec = _json(["solve", "--target", "disconnected", "--input", "{fix}/c5.el",
                       "--weights", "{fix}/c5_decimal.w"])
    assert code == 0 and rec["weight"] == "2.75" and rec["solution"] == [1, 2, 3]


@pytest.mark.parametrize("cls, name, member", [
    ("split", "p4", True), ("bipartite", "k3", False), ("degeneracy", "c4", True),
])
def test_check_examples(cls, name, member):
    argv = ["check", "--class", cls, "--input", f"{{fix}}/{name}.el"]
    if cls == "degeneracy":
        argv[3:3] = ["--k", "2"]
    code, rec = _json(argv)
    assert rec["member"] is member and code == (0 if member else 1)
    if cls == "split":
        assert rec["certificate"] == {"K": [1, 2], "I": [0, 3]}


def test_oracle_examples():
    assert _json(["oracle", "--target", "2-connected", "--input", "{fix}/k1_k3.el"])[1]["size"] == 3
    assert _json(["oracle", "--target", "2-connected", "--input", "{fix}/c5.el"])[1]["solution"] == []
    code, rec = _json(["oracle", "--target", "split", "--input", "{fix}/c20.el"])
    assert code == 1 and rec is None


def test_oracle_cap_can_be_raised():
    code, rec = _json(["oracle", "--target", "2-connected", "--cap", "20", "--input", "{fix}/c20.el"])
    assert code == 0 and rec["solution"] == []


def test_gen_examples(tmp_path):
    assert run(["gen", "--family", "cycle", "--n", "10"])[1] == (FIXTURES / "c10.el").read_text()
    assert run(["gen", "--family", "forest", "--n", "0"])[1] == "0 0\n"
    out = tmp_path / "g.el"
    assert run(["gen", "--family", "biregular", "--k", "3", "--n", "10", "--seed", "7", "-o", str(out)]) == (0, "")
    from subcomp import recognizers as rec
    assert rec.biregular_degree(parse_edge_list(out.read_text())) == 3


def test_complement_examples(tmp_path):
    code, out = run(["complement", "--input", "{fix}/k5.el", "--set", "0,1"])
    g = parse_edge_list(out)
    assert code == 0 and g.m == 9 and not g.has_edge(0, 1)
    assert run(["complement", "--input", "{fix}/p4.el", "--set", ""])[1] == (FIXTURES / "p4.el").read_text()


@pytest.mark.parametrize("name", GRAPHS)
def test_complement_twice_restores_file_bytes(name, tmp_path):
    original = (FIXTURES / f"{name}.el").read_text()
    ids = ",".join(str(v) for v in range(min(3, parse_edge_list(original).n)))
    once = tmp_path / "once.el"
    once.write_text(run(["complement", "--input", f"{{fix}}/{name}.el", "--set", ids])[1])
    assert run(["complement", "--input", str(once), "--set", ids])[1] == original
    once.write_text(run(["complement", "--input", f"{{fix}}/{name}.el", "--full"])[1])
    assert run(["complement", "--input", str(once), "--full"])[1] == original


@pytest.mark.parametrize("name", GRAPHS)
def test_solve_and_oracle_agree(name):
    g = parse_edge_list((FIXTURES / f"{name}.el").read_text())
    if g.n > 16:
        pytest.skip("beyond the oracle cap")
    for target in ("bipartite", "co-bipartite", "split", "chordal", "degeneracy", "2-connected", "disconnected"):
        extra = ["--k", "2"] if target == "degeneracy" else []
        code, rec = _json(["solve", "--target", target, *extra, "--input", f"{{fix}}/{name}.el"])
        if code == 1:
            continue
        ocode, orec = _json(["oracle", "--target", target, *extra, "--input", f"{{fix}}/{name}.el"])
        assert (code, rec["status"], rec["size"]) == (ocode, orec["status"], orec["size"])
        assert rec["weight"] == orec["weight"]


def test_usage_errors_exit_with_one():
    assert run(["solve", "--target", "split"])[0] == 1
    assert run([])[0] == 1
    assert run(["complement", "--input", "{fix}/p3.el", "--set", "0,a"])[0] == 1
    assert run(["complement", "--input", "{fix}/p3.el", "--set", "0,5"])[0] == 1
    assert run(["check", "--class", "split", "--k", "2", "--input", "{fix}/p3.el"])[0] == 1


def test_repeated_runs_are_byte_identical():
    argv = ["solve", "--target", "split", "--input", "{fix}/q3.el"]
    assert run(argv) == run(argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "subcomp.cli", "solve", "--target", "split", "--input", str(FIXTURES / "c4.el")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["solution"] == [0, 1]
    assert "split" in proc.stderr

import json

import pytest

import yfpaths.functions as functions
import yfpaths.oracle as oracle
from yfpaths.cli import hasse_dot, main, run_verification


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_down(capsys):
    code, out, _ = run(capsys, "down", "e", "22")
    assert code == 0
    assert out.strip() == "3"


def test_down_known_values(capsys):
    assert run(capsys, "down", "1", "1")[1].strip() == "1"
    assert run(capsys, "down", "21", "12")[1].strip() == "0"


def test_down_verify(capsys):
    code, out, _ = run(capsys, "down", "e", "22", "--verify")
    assert code == 0
    assert out.splitlines() == ["3", "oracle: 3 (agree)"]


def test_down_json(capsys):
    code, out, _ = run(capsys, "down", "e", "22", "--json", "--verify")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "command": "down",
        "args": ["e", "22"],
        "value": "3",
        "oracle": "3",
        "agree": True,
        "millis": payload["millis"],
    }
    assert isinstance(payload["millis"], float)


def test_traj(capsys):
    assert run(capsys, "traj", "e", "e", "0,1,0")[1].strip() == "1"
    assert run(capsys, "traj", "e", "22", "4,3,2,1,0")[1].strip() == "3"
    assert run(capsys, "traj", "1", "1", "1,0,1")[1].strip() == "1"


def test_spaths(capsys):
    assert run(capsys, "spaths", "e", "e", "1")[1].strip() == "1"
    assert run(capsys, "spaths", "e", "1", "1")[1].strip() == "3"
    assert run(capsys, "spaths", "e", "22", "0")[1].strip() == "3"


def test_f_modes(capsys):
    assert run(capsys, "f", "21221", "0", "0")[1].strip() == "1/720"
    assert run(capsys, "f", "1111", "4", "4", "--mode", "explicit")[1].strip() == "3/8"
    assert run(capsys, "f", "12", "1", "0")[1].strip() == "0"
    assert run(capsys, "f", "21221", "5", "0", "--mode", "base")[1].strip() == "-1/120"
    code, out, _ = run(capsys, "f", "1111", "4", "4", "--verify")
    assert code == 0
    assert "agree" in out


def test_f_base_mode_requires_z_zero(capsys):
    code, _, err = run(capsys, "f", "12", "1", "1", "--mode", "base")
    assert code == 1
    assert "base" in err


def test_xi_command(capsys):
    assert run(capsys, "xi", "2", "3", "2", "0")[1].strip() == "95"
    code, out, _ = run(capsys, "xi", "2", "3", "2", "0", "--verify")
    assert code == 0 and "agree" in out


def test_level(capsys):
    code, out, _ = run(capsys, "level", "3")
    assert code == 0
    assert out.splitlines() == ["111", "12", "21"]
    code, out, _ = run(capsys, "level", "3", "--json")
    assert json.loads(out)["value"] == "111,12,21"


def _dot_stats(text):
    nodes = [line for line in text.splitlines() if '";' in line and "->" not in line]
    edges = [line for line in text.splitlines() if "->" in line]
    return len(nodes), len(edges)


def test_dot_rank_one(capsys):
    code, out, _ = run(capsys, "dot", "1")
    assert code == 0
    assert _dot_stats(out) == (2, 1)
    assert '"e" -> "1";' in out


def test_dot_rank_three():
    text = hasse_dot(3)
    nodes, edges = _dot_stats(text)
    assert nodes == 1 + 1 + 2 + 3
    # edge count = sum of out-degrees of all words below the cutoff
    from yfpaths.words import level, successors

    expected = sum(len(successors(w)) for n in range(3) for w in level(n))
    assert edges == expected == 7


def test_dot_edges_match_successor_lists():
    from yfpaths.words import level, successors

    text = hasse_dot(4)
    edges = {line.strip() for line in text.splitlines() if "->" in line}
    expected = {
        f'"{w}" -> "{v}";'
        for n in range(4)
        for w in level(n)
        for v in successors(w)
    }
    assert edges == expected


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "down", "120", "22")[0] == 1
    assert run(capsys, "down", "22", "e")[0] == 1
    assert run(capsys, "traj", "e", "22", "4,3")[0] == 1
    assert run(capsys, "traj", "e", "22", "nope")[0] == 1
    assert run(capsys, "f", "12", "9", "0")[0] == 1
    assert run(capsys, "xi", "3", "2", "1", "0")[0] == 1
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys)[0] == 1


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "4", "--max-S", "1")
    assert code == 0
    assert "checks passed" in out.splitlines()[-1]


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "3", "--max-S", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["agree"] is True
    assert "checks passed" in payload["value"]


def test_verify_trivial_rank_zero(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "0", "--max-S", "0")
    assert code == 0


def test_verify_detects_injected_fault(capsys):
    # flipping the sign of the base values must be caught and the offending
    # instance named
    original = functions.f_base
    with pytest.MonkeyPatch.context() as mp:
        mp.setattr(functions, "f_base", lambda x, y: -original(x, y))
        functions.clear_caches()
        oracle.clear_caches()
        report = run_verification(max_rank=3, max_s=1)
        assert not report.ok
        assert any("(" in failure for failure in report.failures)
        code, out, _ = run(capsys, "verify", "--max-rank", "3", "--max-S", "1")
        assert code == 2
        assert "FAIL" in out
    functions.clear_caches()
    oracle.clear_caches()


def test_verify_cap_blocks_expensive_oracle(capsys):
    code, _, err = run(
        capsys, "down", "e", "2222222", "--verify", "--verify-cap", "10"
    )
    assert code == 1
    assert "cap" in err


def test_verify_rejects_negative_bounds(capsys):
    code, _, err = run(capsys, "verify", "--max-rank", "-1")
    assert code == 1
    assert "nonnegative" in err


def test_spaths_verify_agrees(capsys):
    code, out, _ = run(capsys, "spaths", "e", "22", "1", "--verify")
    assert code == 0
    assert out.splitlines() == ["45", "oracle: 45 (agree)"]

import json

import pytest

from cubesum import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


GOLDEN_262 = {
    "schema_version": "1",
    "n": "262",
    "profile": {
        "primes": [
            {"l": "2", "e": 1, "mod9": 2, "split": False},
            {"l": "131", "e": 1, "mod9": 5, "split": False},
        ],
        "k1": 0,
        "k2": 2,
        "n_mod_9": 1,
    },
    "selmer": {"closed": 1, "direct": 1, "basis": ["(n^2, n)"]},
    "verdict": {
        "t": 1, "rank_upper": 0, "parity": 0, "possible_ranks": [0],
        "unconditional": "rank_zero", "cube_sum": "proven_not", "root_number": 1,
    },
    "search": {"bound": "50", "witness": None},
}


def test_rank_json_golden(capsys):
    code, out, _ = run(capsys, "rank", "262", "--bound", "50", "--json")
    assert code == 0
    report = json.loads(out)
    assert report.pop("timing")["seconds"] >= 0
    assert report == GOLDEN_262
    assert json.loads(json.dumps(report)) == report


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "262")
    assert code == 0 and "(2, 1), (131, 1)" in out and "(2, 5)" in out
    code, out, _ = run(capsys, "classify", "20", "--json")
    assert json.loads(out)["profile"]["primes"][0] == {"l": "2", "e": 2, "mod9": 2, "split": False}
    code, _, err = run(capsys, "classify", "45")
    assert code == 2 and "DivisibleByThree" in err and "hint" in err


@pytest.mark.parametrize("n, dim", [(262, 1), (20, 2), (1339, 4)])
def test_selmer_both(capsys, n, dim):
    code, out, _ = run(capsys, "selmer", str(n), "--method", "both", "--json")
    frag = json.loads(out)["selmer"]
    assert code == 0 and frag["closed"] == frag["direct"] == dim


def test_selmer_mismatch_exits_3_with_trace(capsys, monkeypatch):
    from cubesum.selmer import SelmerReport

    real = cli.dim_selmer_closed

    def wrong(p):
        r = real(p)
        return SelmerReport(dim=r.dim + 1, method=r.method, branch="forced")

    monkeypatch.setattr(cli, "dim_selmer_closed", wrong)
    code, _, err = run(capsys, "selmer", "262")
    assert code == 3 and "trace" in err and "(0, 1, 1)" in err


def test_rank_text(capsys):
    code, out, _ = run(capsys, "rank", "262")
    assert code == 0 and "proven_not" in out and "rank <= 0" in out


def test_search(capsys):
    code, out, _ = run(capsys, "search", "20", "--bound", "10", "--json")
    frag = json.loads(out)["search"]
    assert frag["witness"] == {"a": "19", "b": "1", "c": "7"}
    assert frag["point"] == {"u": "84", "v": "648"}
    code, out, _ = run(capsys, "search", "14", "--bound", "100")
    assert code == 0 and "evidence only" in out


def test_usage_errors(capsys):
    for argv in ([], ["classify"], ["classify", "x"], ["selmer", "20", "--method", "fast"]):
        with pytest.raises(SystemExit) as info:
            cli.main(argv)
        assert info.value.code == 1
    capsys.readouterr()


def test_worked_examples_and_scan(capsys):
    code, out, _ = run(capsys, "paper-examples")
    assert code == 0 and "38/38 passed" in out and "FAIL" not in out
    code, out, _ = run(capsys, "scan", "--max-prime", "40", "--jobs", "2")
    assert code == 0 and out.strip().endswith("0 violations")


def test_seed_does_not_change_output(capsys, monkeypatch):
    outs = []
    for seed in ("1", "2"):
        monkeypatch.setenv("SEED", seed)
        run(capsys, "classify", "1339")
        code, out, _ = run(capsys, "classify", "1339")
        outs.append(out)
    assert outs[0] == outs[1]


def test_big_n_serialized_as_string(capsys):
    n = (2**61 - 1) * 17**2
    code, out, _ = run(capsys, "classify", str(n), "--json")
    assert code == 0 and json.loads(out)["n"] == str(n)

import json
import random
import subprocess
import sys

import pytest

from cyclecomm.cli import format_permutation, main, parse_permutation
from cyclecomm.errors import PermutationSyntaxError
from cyclecomm.perm import identity, perm_from_cycles, shift
from cyclecomm.sampling import random_perm


def test_parse_cycles():
    assert parse_permutation("(1 2 4 3 6 5)") == perm_from_cycles([(1, 2, 4, 3, 6, 5)], 6)
    assert parse_permutation("", n=4) == identity(4)
    assert parse_permutation("(1 2)", n=5).n == 5
    assert parse_permutation("2 3 4 1") == shift(4)


@pytest.mark.parametrize(
    "text,n,pos",
    [("(1 2)(2 3)", None, 6), ("(1 2", None, 4), ("(1 9)", 5, 3), ("(1 x)", None, 3), ("(0 1)", None, 1), ("", None, 0)],
)
def test_parse_errors_report_position(text, n, pos):
    with pytest.raises(PermutationSyntaxError) as err:
        parse_permutation(text, n)
    assert err.value.position == pos


def test_format():
    assert format_permutation(identity(3)) == "(1)(2)(3)"
    assert format_permutation(shift(4), "oneline") == "2 3 4 1"
    rho = perm_from_cycles([(1, 4), (3, 6)], 6)
    assert format_permutation(rho) == "(1 4)(3 6)(2)(5)"


def test_round_trip_random():
    rng = random.Random(5)
    for n in (1, 2, 7, 100, 4096):
        p = random_perm(rng, n)
        assert parse_permutation(format_permutation(p)) == p
        assert parse_permutation(format_permutation(p, "oneline")) == p


def test_solve_json_key_order(capsys):
    assert main(["solve", "--class", "4,2,3", "--n", "9", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert list(out) == ["n", "tau", "pi", "rho", "class", "verified"]
    assert out["class"] == [4, 3, 2] and out["verified"] is True


def test_solve_rho_explain(capsys):
    assert main(["solve", "--rho", "(1 2 3)(4 5 6)", "--explain"]) == 0
    out = capsys.readouterr().out
    assert "verified OK" in out and "plan" in out


def test_exit_codes(capsys):
    assert main(["solve", "--class", "2,2", "--n", "4"]) == 3
    assert "DegreeTooSmall" in capsys.readouterr().err
    assert main(["solve", "--rho", "(1 2)(2 3)"]) == 2
    assert main(["solve", "--rho", "(1 2)", "--n", "6"]) == 3
    assert main(["solve"]) == 2
    assert main(["verify", "--tau", "(1 2 3 4 5 6)", "--pi", "(1 2 3 4 5 6)", "--rho", "(1 2 3 4 5 6)"]) == 1
    s = "(1 2 3 4 5 6)"
    assert main(["verify", "--tau", s, "--pi", s, "--rho", "", "--n", "6"]) == 0
    with pytest.raises(SystemExit) as err:
        main(["oracle"])
    assert err.value.code == 2


def test_oracle_report(capsys):
    assert main(["oracle", "--n", "4"]) == 0
    captured = capsys.readouterr()
    assert "2,2 missing 0" in captured.out and "missing: (2,2)" in captured.err


def test_oracle_pairs_to_file(tmp_path, capsys):
    out = tmp_path / "r.txt"
    assert main(["oracle", "--pairs", "--n", "5", "--out", str(out)]) == 0
    assert "2,2,1 missing 0" in out.read_text()


def test_batch(tmp_path):
    out = tmp_path / "b.jsonl"
    assert main(["batch", "--n", "8", "--out", str(out)]) == 0
    records = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(records) == 12 and all(r["verified"] for r in records)


def test_sweep_is_seeded(capsys):
    assert main(["--seed", "9", "sweep", "--count", "10", "--max-n", "64"]) == 0
    assert "seed=9: 10/10" in capsys.readouterr().out


def test_paper_check_subprocess():
    proc = subprocess.run([sys.executable, "-m", "cyclecomm", "paper-check"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout
    assert "FAIL" not in proc.stdout

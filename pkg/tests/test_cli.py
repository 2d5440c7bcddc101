import csv
import json

import pytest

from sl2nav import Mat2Fp, Word
from sl2nav.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDecompose:
    def test_json_output_verifies(self, capsys):
        code, out, err = run(
            capsys,
            "decompose", "--prime", "13", "--matrix", "0,12,1,0",
            "--seed", "1", "--format", "json",
        )
        assert code == 0
        report = json.loads(out)
        word = Word.from_json_pairs(report["word"])
        assert word.eval_fp(13) == Mat2Fp(0, 12, 1, 0, 13)
        assert report["p"] == "13"
        assert report["length"] == word.length
        assert report["used_fallback"] in (False, True)

    def test_text_output_pipes_to_verify(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--prime", "101", "--matrix", "3,7,8,19", "--seed", "4"
        )
        assert code == 0
        word_line = next(line for line in out.splitlines() if line.startswith("word: "))
        word_text = word_line[len("word: "):]
        code, _, _ = run(
            capsys, "verify", "--prime", "101", "--word", word_text, "--matrix", "3,7,8,19"
        )
        assert code == 0

    def test_byte_identical_repeat(self, capsys):
        argv = ("decompose", "--prime", "10007", "--matrix", "12,5,7,1234", "--seed", "9")
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2

    def test_rejects_composite_prime(self, capsys):
        code, out, err = run(capsys, "decompose", "--prime", "10001", "--matrix", "1,0,0,1")
        assert code == 2
        assert out == ""
        assert "--prime" in err

    def test_rejects_non_unimodular_matrix(self, capsys):
        code, out, err = run(capsys, "decompose", "--prime", "13", "--matrix", "2,0,0,1")
        assert code == 2
        assert out == ""
        assert "--matrix" in err

    def test_huge_entries_reduced(self, capsys):
        big = str(13 * 10**30 + 1)
        code, out, _ = run(
            capsys, "decompose", "--prime", "13", "--matrix", f"{big},0,0,1",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["target"] == "1,0,0,1"


class TestVerify:
    def test_identity(self, capsys):
        code, out, err = run(
            capsys, "verify", "--prime", "13", "--word", "e", "--matrix", "1,0,0,1"
        )
        assert code == 0
        assert out.strip() == "ok"

    def test_mismatch_exits_3(self, capsys):
        code, out, err = run(
            capsys, "verify", "--prime", "13", "--word", "U", "--matrix", "1,0,0,1"
        )
        assert code == 3
        assert out == ""
        assert "verification failed" in err

    def test_json(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--prime", "13", "--word", "L^13", "--matrix", "1,0,0,1",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out) == {"verified": True}

    def test_malformed_word(self, capsys):
        code, out, err = run(
            capsys, "verify", "--prime", "13", "--word", "U^x", "--matrix", "1,0,0,1"
        )
        assert code == 2
        assert out == ""
        assert "--word" in err


class TestEval:
    def test_generator_power_wraps(self, capsys):
        code, out, _ = run(capsys, "eval", "--prime", "5", "--word", "U^5")
        assert code == 0
        assert out.strip() == "1,0,0,1"

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--prime", "13", "--word", "U L", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == {"matrix": "2,1,1,1", "p": "13"}


class TestStats:
    def test_summary_and_csv(self, capsys, tmp_path):
        path = tmp_path / "hist.csv"
        code, out, _ = run(
            capsys, "stats", "--prime", "101", "--output", str(path)
        )
        assert code == 0
        assert "count: 100" in out
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["t_value", "count"]

    def test_sample_mode_deterministic(self, capsys):
        argv = ("stats", "--prime", "10007", "--samples", "200", "--seed", "3",
                "--format", "json")
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2
        assert json.loads(out1)["count"] == 200

    def test_exhaustive_ceiling_diagnostic(self, capsys):
        code, out, err = run(capsys, "stats", "--prime", str(10**8 + 7))
        assert code == 2
        assert out == ""
        assert "sample" in err


class TestOracle:
    def test_summary_and_csv(self, capsys, tmp_path):
        path = tmp_path / "dist.csv"
        code, out, _ = run(capsys, "oracle", "--prime", "13", "--output", str(path))
        assert code == 0
        assert "order: 2184" in out
        assert "diameter:" in out
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["distance", "count"]

    def test_too_large(self, capsys):
        code, out, err = run(capsys, "oracle", "--prime", "1009")
        assert code == 2
        assert "--prime" in err


class TestOracleCompare:
    def test_runs_clean(self, capsys, tmp_path):
        path = tmp_path / "cmp.csv"
        code, out, _ = run(
            capsys,
            "oracle-compare", "--prime", "13", "--samples", "25", "--seed", "2",
            "--output", str(path),
        )
        assert code == 0
        assert "violations: 0" in out
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert len(rows) == 26


class TestParser:
    def test_unknown_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == 2

    def test_missing_required_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["decompose", "--prime", "13"])
        assert exc.value.code == 2

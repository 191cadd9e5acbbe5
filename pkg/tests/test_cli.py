"""
Tests for the command-line front end.
"""

import json
import logging
import os

import pytest

from main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)


@pytest.fixture
def run(temp_config_dir, capsys):
    """run(*argv) -> (exit code, stdout, stderr) against the temp config."""
    config_path = str(temp_config_dir / "config.yaml")

    def _run(*argv):
        code = main([argv[0], "--config", config_path, *argv[1:]])
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def _without_micros(line):
    record = json.loads(line)
    record.pop("micros", None)
    return record


class TestCompare:
    def test_sequence_pair(self, run):
        code, out, _ = run("compare", "G(0)", "G(1)")
        assert code == EXIT_OK
        assert "G <= H: true" in out
        assert "H <= G: false" in out
        assert out.strip().endswith("verdict: <")

    def test_identical_games(self, run):
        code, out, _ = run("compare", "0", "0")
        assert code == EXIT_OK
        assert "verdict: equivalent" in out

    def test_incomparable(self, run):
        code, out, _ = run("compare", "star", "-2")
        assert code == EXIT_OK
        assert "verdict: incomparable" in out

    def test_json(self, run):
        code, out, _ = run("compare", "--json", "0", "{0|0}")
        assert code == EXIT_OK
        result = json.loads(out)
        assert result["h"] == "{0|0}"
        assert result["verdict"] == "equivalent"

    def test_parse_error_exit_code(self, run):
        code, out, err = run("compare", "{|0}", "0")
        assert code == EXIT_USAGE
        assert out == ""
        assert "line 1, column 2" in err


class TestVerify:
    def test_passes(self, run):
        code, out, _ = run("verify", "--n-max", "3")
        assert code == EXIT_OK
        assert out.strip().splitlines()[-1].endswith("0 failed, 7 skipped")

    def test_json_matches_golden(self, run):
        code, out, _ = run("verify", "--n-max", "0", "--json")
        assert code == EXIT_OK
        with open(os.path.join(GOLDEN_DIR, "verify_n0.jsonl")) as f:
            expected = [json.loads(line) for line in f if line.strip()]
        actual = [_without_micros(line) for line in out.splitlines()]
        assert actual == expected
        assert sum(r["claim"].isdigit() for r in actual) == 8

    def test_negated_claim_fails(self, run):
        code, _, err = run("verify", "--n-max", "2", "--negate", "8")
        assert code == EXIT_FAILED
        assert "Claim 8" in err

    def test_unknown_claim_rejected(self, run):
        with pytest.raises(SystemExit):
            run("verify", "--negate", "9")


class TestEnumerate:
    def test_two_chain_matches_golden(self, run):
        code, out, _ = run("enumerate", "L2", "--json")
        assert code == EXIT_OK
        with open(os.path.join(GOLDEN_DIR, "enumerate_L2.json")) as f:
            assert json.loads(out) == json.load(f)

    def test_single_atom(self, run):
        code, out, _ = run("enumerate", "L1")
        assert code == EXIT_OK
        assert "final: 1 values over L1, saturated" in out

    def test_text_output(self, run):
        code, out, _ = run("enumerate", "L3")
        assert code == EXIT_OK
        assert "final: 8 values over L3, saturated" in out

    def test_out_of_budget_finite_chain_fails(self, run):
        code, out, err = run("enumerate", "L3", "--max-rounds", "1")
        assert code == EXIT_FAILED
        assert "not saturated" in out

    def test_infinite_chain_budget_is_not_failure(self, run):
        code, out, _ = run("enumerate", "L5", "--max-rounds", "1")
        assert code == EXIT_OK
        assert "not saturated (max_rounds=1 reached)" in out

    def test_export_file(self, run, tmp_path):
        target = tmp_path / "l2.json"
        code, _, _ = run("enumerate", "L2", "--no-prune", "--export", str(target))
        assert code == EXIT_OK
        export = json.loads(target.read_text())
        assert export["representatives"] == ["0", "1", "{1|0}"]


class TestNormalPlay:
    def test_sequence_pair(self, run):
        code, out, _ = run("np", "G(0)", "G(1)")
        assert code == EXIT_OK
        assert "agree: yes" in out
        assert "warning" not in out

    def test_zero_against_star(self, run):
        code, out, _ = run("np", "0", "star")
        assert code == EXIT_OK
        assert "G <= H: false" in out
        assert "np(G) <= np(H): false" in out
        assert "agree: yes" in out
        assert "warning: mean values differ" in out

    def test_different_means_warn(self, run):
        code, out, _ = run("np", "0", "1")
        assert code == EXIT_OK
        assert "warning: mean values differ" in out

    def test_out_of_class_warns(self, run):
        code, out, _ = run("np", "--json", "{1|1}", "0")
        result = json.loads(out)
        assert code == EXIT_OK
        assert result["claimed"] is False
        assert result["mean_g"] is None
        assert result["warnings"]

    def test_translation_in_json(self, run):
        _, out, _ = run("np", "--json", "star", "G(1)")
        result = json.loads(out)
        assert result["np_g"] == "{0|0}"
        assert result["np_h"] == "{0|{0|{0|0}}}"


class TestParse:
    def test_summary(self, run):
        code, out, _ = run("parse", "--json", "G(1)")
        assert code == EXIT_OK
        summary = json.loads(out)
        assert summary == {
            "game": "{1|{0|{-1|-3}}}",
            "size": 7,
            "depth": 3,
            "positions": 7,
            "mean_value": 0,
            "locally_monotone": True,
            "monotone": True,
        }

    def test_text(self, run):
        code, out, _ = run("parse", "{-3|1}")
        assert code == EXIT_OK
        assert "mean value: absent" in out
        assert "monotone: false (locally: false)" in out

    def test_unknown_atom(self, run):
        code, _, err = run("parse", "{5|0}")
        assert code == EXIT_USAGE
        assert "unknown atom 5" in err

    def test_macro_on_short_chain(self, run):
        code, _, err = run("parse", "--poset", "L3", "star")
        assert code == EXIT_USAGE
        assert "unavailable" in err


class TestDomination:
    def test_three_chain(self, run):
        code, out, _ = run("domination", "--poset", "L3", "--samples", "300", "--json")
        assert code == EXIT_OK
        result = json.loads(out)
        assert result["ok"] is True
        assert result["trials"] == 300 + 12 * 12 * 12 * 2
        assert result["exhaustive"]["counterexamples"] == 0


class TestConfigErrors:
    def test_bad_poset(self, run):
        code, _, err = run("compare", "--poset", "V3", "0", "0")
        assert code == EXIT_USAGE
        assert "poset" in err

    def test_malformed_config(self, temp_config_dir, capsys):
        (temp_config_dir / "config.yaml").write_text("verify: [unclosed\n")
        code = main(["verify", "--config", str(temp_config_dir / "config.yaml")])
        assert code == EXIT_USAGE

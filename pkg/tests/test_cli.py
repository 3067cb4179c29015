"""CLI tests: text output, canonical JSON round-trips and exit codes."""

import json

import pytest

from monocurve.cli import main

BIG = ["11", "13", "15", "17", "19", "21", "23"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDerivations:
    def test_both_methods_golden(self, capsys):
        code, out, _ = run(capsys, "derivations", *BIG, "--method", "both")
        assert code == 0
        for display in (
            "t d/dt",
            "t^26 u^44 d/dt",
            "t^28 u^42 d/dt",
            "t^30 u^40 d/dt",
            "t^32 u^38 d/dt",
            "u d/du",
            "t^48 u^22 d/du",
        ):
            assert display in out
        assert "closed == brute: true" in out
        assert "mu = 7" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "derivations", *BIG, "--json")
        assert code == 0
        parsed = json.loads(out)
        assert parsed["schema"] == "monocurve/1"
        assert parsed["mu"] == 7
        rendered = json.dumps(parsed, sort_keys=True, separators=(",", ":"))
        assert rendered == out.strip()

    def test_brute_only(self, capsys):
        code, out, _ = run(capsys, "derivations", "5", "9", "--method", "brute")
        assert code == 0
        assert "t^32 u^32 d/dt" in out
        assert "t^40 u^24 d/du" in out

    def test_invalid_input_exit_1(self, capsys):
        code, _, err = run(capsys, "derivations", "6", "10")
        assert code == 1
        assert "gcd" in err

    def test_cap_exceeded_exit_2(self, capsys):
        code, _, err = run(capsys, "derivations", "5", "9", "--cap", "3")
        assert code == 2
        assert "cap" in err

    def test_non_cm_needs_flag(self, capsys):
        code, _, err = run(capsys, "derivations", "1", "2", "4")
        assert code == 1
        code, out, err = run(capsys, "derivations", "1", "2", "4", "--assume-cm")
        assert code == 0
        assert "warning" in err

    def test_env_cap_override(self, capsys, monkeypatch):
        monkeypatch.setenv("MONOCURVE_SEARCH_CAP", "3")
        code, _, _ = run(capsys, "derivations", "5", "9")
        assert code == 2

    def test_env_cap_invalid(self, capsys, monkeypatch):
        monkeypatch.setenv("MONOCURVE_SEARCH_CAP", "zero")
        code, _, err = run(capsys, "derivations", "5", "9")
        assert code == 1
        assert "MONOCURVE_SEARCH_CAP" in err

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("MONOCURVE_SEARCH_CAP", "3")
        code, _, _ = run(capsys, "derivations", "5", "9", "--cap", "10000")
        assert code == 0


class TestHk:
    def test_golden_integer(self, capsys):
        code, out, _ = run(capsys, "hk", "1", "2", "3")
        assert code == 0
        assert "e_HK = 2 (2/1)" in out

    def test_golden_both_paths(self, capsys):
        code, out, _ = run(capsys, "hk", "7", "10", "13", "16", "19", "--method", "both")
        assert code == 0
        assert out.count("223/19") == 2
        assert "closed == staircase: true" in out

    def test_frobenius_power(self, capsys):
        code, out, _ = run(
            capsys, "hk", "1", "2", "3", "--frobenius-power", "4", "--assume-cm"
        )
        assert code == 0
        assert "colength at q = 4: 31" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "hk", "1", "3", "4", "--json")
        assert code == 0
        parsed = json.loads(out)
        assert parsed["hk"] == {"num": 11, "den": 4, "decimal": 2.75}
        rendered = json.dumps(parsed, sort_keys=True, separators=(",", ":"))
        assert rendered == out.strip()


class TestPfAndApery:
    def test_pf(self, capsys):
        code, out, _ = run(capsys, "pf", *BIG)
        assert code == 0
        assert "PF(S1) = [25, 27, 29, 31]" in out
        assert "PF(S2) = [21]" in out

    def test_apery(self, capsys):
        code, out, _ = run(capsys, "apery", "3", "5", "--mod", "3")
        assert code == 0
        assert "[0, 5, 10]" in out

    def test_apery_bad_modulus(self, capsys):
        code, _, err = run(capsys, "apery", "3", "5", "--mod", "4")
        assert code == 1


class TestValidate:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "validate", "--max-np", "12")
        assert code == 0
        assert "overall: PASS" in out
        assert "FAIL" not in out.replace("overall: PASS", "")

    def test_family_selection(self, capsys):
        code, out, _ = run(capsys, "validate", "--family", "p1", "--max-np", "15")
        assert code == 0
        assert "two-generator" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "validate", "--family", "p1", "--max-np", "10", "--json")
        assert code == 0
        parsed = json.loads(out)
        assert parsed["ok"] is True
        assert all(c["ok"] for c in parsed["checks"])

    def test_failed_sweep_exits_3(self, capsys, monkeypatch):
        from monocurve import reports
        from monocurve.validate import CheckResult

        monkeypatch.setattr(
            reports,
            "run_validation",
            lambda family, max_top: [CheckResult("forced failure", False, 1, "x")],
        )
        code, out, _ = run(capsys, "validate")
        assert code == 3
        assert "overall: FAIL" in out

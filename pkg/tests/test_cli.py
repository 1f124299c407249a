"""Command-line interface: envelopes, determinism, exit codes."""

import io
import json

import pytest

from coverkit.arith import PrimeCtx
from coverkit.cli import main
from coverkit.ringlab import (
    algebra_from_json,
    algebra_to_json,
    equivariantly_isomorphic,
    kummer_extension,
    nilpotent_extension,
    trivial_extension,
)


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, monkeypatch, argv, stdin=""):
    code, out, _ = run(capsys, monkeypatch, argv, stdin)
    return code, json.loads(out)


class TestCount:
    def test_exact_example(self, capsys, monkeypatch):
        code, env = run_json(
            capsys, monkeypatch, ["count", "--p", "3", "--g", "0", "--r-exact", "3"]
        )
        assert code == 0
        assert env["status"] == "ok"
        assert env["result"] == {"count": "1"}

    def test_unramified(self, capsys, monkeypatch):
        code, env = run_json(
            capsys, monkeypatch, ["count", "--p", "2", "--g", "1", "--unramified"]
        )
        assert code == 0 and env["result"]["count"] == "3"

    def test_contained(self, capsys, monkeypatch):
        code, env = run_json(
            capsys, monkeypatch,
            ["count", "--p", "3", "--g", "1", "--r-contained", "1"],
        )
        assert code == 0 and env["result"]["count"] == "4"

    def test_large_count_is_decimal_string(self, capsys, monkeypatch):
        code, env = run_json(
            capsys, monkeypatch,
            ["count", "--p", "101", "--g", "9", "--r-contained", "4"],
        )
        assert code == 0
        expected = (101 ** (18 + 4 - 1) - 1) // 100
        assert env["result"]["count"] == str(expected)

    def test_not_prime_is_validation_error(self, capsys, monkeypatch):
        code, env = run_json(
            capsys, monkeypatch, ["count", "--p", "6", "--g", "0", "--unramified"]
        )
        assert code == 2
        assert env["status"] == "error" and env["code"] == "validation-error"


class TestExists:
    def test_false_example(self, capsys, monkeypatch):
        payload = json.dumps({"vv": {"coeffs": [{"point": "a", "c": 1}]}})
        code, env = run_json(capsys, monkeypatch, ["exists", "--p", "3"], payload)
        assert code == 0
        assert env["result"] == {"exists": False}

    def test_true_with_witness(self, capsys, monkeypatch):
        payload = json.dumps(
            {"vv": {"coeffs": [{"point": "a", "c": 1}, {"point": "b", "c": 2}]}}
        )
        code, env = run_json(
            capsys, monkeypatch, ["exists", "--p", "3", "--g", "1"], payload
        )
        assert code == 0
        assert env["result"]["exists"] is True
        assert env["result"]["witness"]["jac"] == [0, 0]
        assert env["result"]["witness"]["vv"]["coeffs"] == [
            {"point": "a", "c": 1},
            {"point": "b", "c": 2},
        ]

    def test_input_file(self, capsys, monkeypatch, tmp_path):
        path = tmp_path / "payload.json"
        path.write_text(json.dumps({"vv": {"coeffs": []}}), encoding="utf-8")
        code, env = run_json(
            capsys, monkeypatch, ["exists", "--p", "3", "--input", str(path)]
        )
        assert code == 0 and env["result"]["exists"] is True

    def test_bad_json_payload(self, capsys, monkeypatch):
        code, env = run_json(capsys, monkeypatch, ["exists", "--p", "3"], "{nope")
        assert code == 2 and env["code"] == "validation-error"


class TestEquivalent:
    def test_jacobian_invisible(self, capsys, monkeypatch):
        payload = json.dumps(
            {
                "s1": {"vv": {"coeffs": []}, "jac": [1, 0]},
                "s2": {"vv": {"coeffs": []}, "jac": [0, 1]},
            }
        )
        code, env = run_json(
            capsys, monkeypatch, ["equivalent", "--p", "2", "--g", "1"], payload
        )
        assert code == 0 and env["result"] == {"equivalent": True}

    def test_different_vectors(self, capsys, monkeypatch):
        payload = json.dumps(
            {
                "s1": {"vv": {"coeffs": [{"point": "a", "c": 1}, {"point": "b", "c": 1}]}},
                "s2": {"vv": {"coeffs": []}},
            }
        )
        code, env = run_json(
            capsys, monkeypatch, ["equivalent", "--p", "2", "--g", "0"], payload
        )
        assert code == 0 and env["result"] == {"equivalent": False}


class TestClassify:
    def test_canonical_form_and_branch_data(self, capsys, monkeypatch):
        payload = json.dumps(
            {"vv": {"coeffs": [{"point": "a", "c": 2}, {"point": "b", "c": 1}]}}
        )
        code, env = run_json(
            capsys, monkeypatch, ["classify", "--p", "3", "--g", "0"], payload
        )
        assert code == 0
        rep = env["result"]["representative"]
        assert rep["vv"]["coeffs"] == [
            {"point": "a", "c": 1},
            {"point": "b", "c": 2},
        ]
        cornalba = env["result"]["cornalba"]
        assert cornalba["degL"] == 1
        assert env["result"]["ramification"]["locus"] == ["a", "b"]
        assert env["result"]["ramification"]["profile"] == {"a": 3, "b": 3}

    def test_zero_sum_violation_rejected(self, capsys, monkeypatch):
        payload = json.dumps({"vv": {"coeffs": [{"point": "a", "c": 1}]}})
        code, env = run_json(
            capsys, monkeypatch, ["classify", "--p", "3", "--g", "0"], payload
        )
        assert code == 2 and env["code"] == "validation-error"


class TestRamification:
    def test_profile(self, capsys, monkeypatch):
        payload = json.dumps(
            {"vv": {"coeffs": [{"point": "a", "c": 1}, {"point": "b", "c": 2}]}}
        )
        code, env = run_json(capsys, monkeypatch, ["ramification", "--p", "3"], payload)
        assert code == 0
        assert env["result"] == {"locus": ["a", "b"], "profile": {"a": 3, "b": 3}}


class TestStrata:
    def test_sizes(self, capsys, monkeypatch):
        payload = json.dumps({"points": ["a", "b"]})
        code, env = run_json(capsys, monkeypatch, ["strata", "--p", "3"], payload)
        assert code == 0
        assert env["result"] == {"filtration_size": "9", "stratum_size": "4"}

    def test_duplicate_points_rejected(self, capsys, monkeypatch):
        payload = json.dumps({"points": ["a", "a"]})
        code, env = run_json(capsys, monkeypatch, ["strata", "--p", "3"], payload)
        assert code == 2


class TestRotation:
    def test_example(self, capsys, monkeypatch):
        payload = json.dumps({"branch": ["x1", "x2"], "exps": [2, 3]})
        code, env = run_json(capsys, monkeypatch, ["rotation", "--p", "5"], payload)
        assert code == 0
        assert env["result"]["rotation"] == {"x1": 3, "x2": 2}
        assert env["result"]["genus"] == 0
        assert env["result"]["irreducible"] is True

    def test_p_mismatch(self, capsys, monkeypatch):
        payload = json.dumps({"p": 3, "branch": ["a", "b"], "exps": [1, 2]})
        code, env = run_json(capsys, monkeypatch, ["rotation", "--p", "5"], payload)
        assert code == 2


class TestRingCommands:
    def test_ring_check_galois(self, capsys, monkeypatch):
        ctx = PrimeCtx(2, 3)
        payload = json.dumps(algebra_to_json(*kummer_extension(ctx, 2)))
        code, env = run_json(capsys, monkeypatch, ["ring-check", "--p", "2"], payload)
        assert code == 0 and env["result"] == {"galois": True}

    def test_ring_check_nilpotent(self, capsys, monkeypatch):
        ctx = PrimeCtx(3, 7)
        payload = json.dumps(algebra_to_json(*nilpotent_extension(ctx)))
        code, env = run_json(capsys, monkeypatch, ["ring-check", "--p", "3"], payload)
        assert code == 0 and env["result"] == {"galois": False}

    def test_ring_check_rejects_bad_q(self, capsys, monkeypatch):
        ctx = PrimeCtx(2, 3)
        payload = json.dumps(algebra_to_json(*trivial_extension(ctx)))
        code, env = run_json(capsys, monkeypatch, ["ring-check", "--p", "3"], payload)
        assert code == 2  # 3 is not 1 mod 3

    def test_ring_product(self, capsys, monkeypatch):
        ctx = PrimeCtx(2, 3)
        alg = algebra_to_json(*kummer_extension(ctx, 2))
        payload = json.dumps({"a1": alg, "a2": alg})
        code, env = run_json(capsys, monkeypatch, ["ring-product", "--p", "2"], payload)
        assert code == 0
        S, act = algebra_from_json(env["result"], 2)
        assert equivariantly_isomorphic(ctx, S, act, *kummer_extension(ctx, 1))


class TestCensus:
    def test_rows(self, capsys, monkeypatch):
        code, env = run_json(
            capsys, monkeypatch, ["census", "--p", "2", "--g", "1", "--max-r", "2"]
        )
        assert code == 0
        assert env["result"]["rows"] == [
            {"r": 0, "contained": "3", "exact": "3", "oracle": "3"},
            {"r": 1, "contained": "3", "exact": "0", "oracle": "0"},
            {"r": 2, "contained": "7", "exact": "4", "oracle": "4"},
        ]

    def test_budget_gives_partial_table(self, capsys, monkeypatch):
        monkeypatch.setenv("COVERKIT_BUDGET", "50")
        code, env = run_json(
            capsys, monkeypatch, ["census", "--p", "5", "--g", "1", "--max-r", "5"]
        )
        assert code == 3
        assert env["status"] == "error" and env["code"] == "budget-exceeded"
        assert env["result"]["truncated_at_r"] == 2
        assert [row["r"] for row in env["result"]["rows"]] == [0, 1]

    def test_table_mode(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["census", "--p", "3", "--g", "0", "--max-r", "2", "--table"],
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "status: ok"
        assert lines[1].split() == ["r", "contained", "exact", "oracle"]
        assert lines[2].split() == ["0", "0", "0", "0"]
        assert lines[4].split() == ["2", "1", "1", "1"]


class TestDeterminism:
    def test_byte_identical_output(self, capsys, monkeypatch):
        argv = ["count", "--p", "5", "--g", "2", "--r-exact", "4"]
        code1, out1, _ = run(capsys, monkeypatch, argv)
        code2, out2, _ = run(capsys, monkeypatch, argv)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_payload_commands_deterministic(self, capsys, monkeypatch):
        payload = json.dumps(
            {"vv": {"coeffs": [{"point": "b", "c": 2}, {"point": "a", "c": 1}]}}
        )
        argv = ["classify", "--p", "3", "--g", "0"]
        _, out1, _ = run(capsys, monkeypatch, argv, payload)
        _, out2, _ = run(capsys, monkeypatch, argv, payload)
        assert out1 == out2


class TestUsageErrors:
    def test_unknown_command(self, capsys, monkeypatch):
        code, out, err = run(capsys, monkeypatch, ["frobnicate", "--p", "3"])
        assert code == 2
        assert out == ""
        assert "usage" in err.lower()

    def test_no_command(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, [])
        assert code == 2 and "usage" in err.lower()

    def test_count_needs_a_mode(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["count", "--p", "3", "--g", "0"])
        assert code == 2

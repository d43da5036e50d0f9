"""CLI behavior: exit codes, deterministic reports, CSV format, and the
registry covering every named statement."""

import json
from fractions import Fraction

import pytest

from qlg2 import cli
from qlg2.checks import CHECKS, CheckResult, Context, digest, run_check
from qlg2.rmatrix import casimir_eigenvalue

# every named statement in scope must have a check id
REQUIRED_CHECK_IDS = {
    "uqg-relations", "eq-comm-rel-uqg",
    "eq-condition-i", "lem-equiv-maps", "lem-canonical-square",
    "def-dolb-dirac", "prop-dolbeault-invariant",
    "lem-fundamental-c2", "lem-root-e",
    "prop-sq-relations", "lem-levi-up", "lem-levi-um", "prop-lq-relations",
    "lem-rel-xi-xis", "prop-d-squared",
    "prop-cas-general", "prop-casimir-rmatrix", "cor-value-casimir",
    "lem-f-vanish",
    "lem-rel-e-es", "lem-rel-rewrite-cas", "lem-quantum-casimir",
    "prop-cas-to-the-right", "prop-casimir-clifford", "eq-relation-cliff",
    "lem-levi-lq", "lem-inner-prod", "lem-action-gamma", "lem-gamma-star",
    "cor-iso-exterior",
    "lem-kappa-constraints", "lem-clifford-off", "lem-clifford-diag",
    "thm-parthasarathy", "thm-spectral-triple",
}


def test_registry_covers_every_statement():
    missing = REQUIRED_CHECK_IDS - set(CHECKS)
    assert not missing, f"registry misses {sorted(missing)}"
    assert set(CHECKS) == REQUIRED_CHECK_IDS


def test_unknown_check_is_usage_error(capsys):
    rc = cli.main(["verify", "--check", "no-such-check"])
    assert rc == cli.EXIT_USAGE
    assert "unknown check id" in capsys.readouterr().err


def test_single_check_passes(tmp_path):
    out = tmp_path / "r.md"
    rc = cli.main(["verify", "--check", "lem-f-vanish", "--out", str(out)])
    assert rc == cli.EXIT_PASS
    assert "lem-f-vanish | pass" in out.read_text()


def test_json_report_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        rc = cli.main(["verify", "--check", "lem-inner-prod",
                       "--report", "json", "--seed", "7", "--out", str(path)])
        assert rc == cli.EXIT_PASS
    assert a.read_bytes() == b.read_bytes()
    payload = json.loads(a.read_text())
    assert payload["schema"] == "qlg2-check-report/1"
    assert payload["seed"] == 7
    (res,) = payload["results"]
    assert res["status"] == "pass"
    assert res["residual"] == ""
    assert "elapsed_ms" not in res


def test_digests_canonical():
    ctx = Context()
    r1 = run_check("prop-casimir-rmatrix", ctx)
    # on a passing equality check both serializations digest identically
    assert r1.status == "pass"
    assert r1.lhs_digest == r1.rhs_digest


def test_failing_check_exit_code(tmp_path):
    def broken(ctx):
        return "lhs", "rhs", "forced residual", ("detail",)

    CHECKS["tmp-broken"] = ("always fails", broken)
    try:
        rc = cli.main(["verify", "--check", "tmp-broken",
                       "--out", str(tmp_path / "x.md")])
        assert rc == cli.EXIT_FAIL
    finally:
        del CHECKS["tmp-broken"]


def test_internal_error_exit_code(tmp_path, capsys):
    def exploding(ctx):
        raise RuntimeError("engine defect")

    CHECKS["tmp-explode"] = ("always raises", exploding)
    try:
        rc = cli.main(["verify", "--check", "tmp-explode"])
        assert rc == cli.EXIT_INTERNAL
    finally:
        del CHECKS["tmp-explode"]
    assert "engine defect" in capsys.readouterr().err


def test_check_result_status_matches_residual():
    ctx = Context()
    r = run_check("lem-gamma-star", ctx)
    assert (r.status == "pass") == (r.residual == "")


def test_spectrum_csv(tmp_path, capsys):
    out = tmp_path / "spec.csv"
    rc = cli.main(["spectrum", "--v-num", "1", "--v-den", "2",
                   "--shell-max", "5", "--csv", str(out)])
    assert rc == cli.EXIT_PASS
    data = out.read_bytes().decode()
    lines = data.split("\n")
    assert lines[0] == "n1,n2,c_lambda_exact_num,c_lambda_exact_den,c_lambda_float"
    assert len([l for l in lines if l]) == 1 + 21
    assert "\r" not in data
    # first data row agrees with the eigenvalue formula
    n1, n2, num, den, flt = lines[1].split(",")
    val = casimir_eigenvalue((0, 0)).evaluate(Fraction(1, 2))
    assert (int(num), int(den)) == (val.numerator, val.denominator)
    err = capsys.readouterr()
    assert "strictly increasing: True" in err.out


def test_spectrum_rejects_bad_v(capsys):
    assert cli.main(["spectrum", "--v-num", "1", "--v-den", "1",
                     "--shell-max", "5"]) == cli.EXIT_USAGE
    assert cli.main(["spectrum", "--v-num", "3", "--v-den", "2",
                     "--shell-max", "5"]) == cli.EXIT_USAGE
    assert cli.main(["spectrum", "--v-num", "1", "--v-den", "2",
                     "--shell-max", "0"]) == cli.EXIT_USAGE

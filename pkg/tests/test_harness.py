"""Registry, runner, reports, configuration and the command line."""

import csv
import io
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from identlab.harness import (
    DomainError,
    ReportDocument,
    RunConfig,
    get_identity,
    list_identities,
    load_config,
    render,
    sweep,
    verify,
    verify_all,
)
from identlab.harness.cli import main
from identlab.harness.config import ConfigError
from identlab.harness.domain import ComplexDisc, Int, Real, parse_value
from identlab.harness.registry import REGISTRY, STATUSES
from identlab.harness.report import outcome, result_from_dict, result_to_dict
from identlab.harness.runner import GridError, parse_grid, point_rng
from identlab.numkernel import ApproxComplex, CheckResult


class TestDomain:
    @pytest.mark.parametrize(
        "text,value",
        [("6", 6), ("0.25", 0.25), ("pi/4", math.pi / 4), ("1/3", 1 / 3), ("0.2+0.1j", 0.2 + 0.1j), ("sqrt(2)", math.sqrt(2)), ("chi4", "chi4")],
    )
    def test_parse_value(self, text, value):
        if isinstance(value, str):
            assert parse_value(text) == value
        else:
            assert parse_value(text) == pytest.approx(value)

    def test_parse_value_is_not_eval(self):
        # anything outside the arithmetic whitelist stays a plain string
        text = "__import__('os').getcwd()"
        assert parse_value(text) == text

    def test_real(self):
        Real(0.0, 1.0).coerce("x", 0.5)
        with pytest.raises(DomainError):
            Real(0.0, 1.0).coerce("x", 1.0)
        with pytest.raises(DomainError):
            Real(0.0, 1.0).coerce("x", float("nan"))

    def test_int_even(self):
        Int(2, 10, even=True).coerce("a", 4)
        with pytest.raises(DomainError):
            Int(2, 10, even=True).coerce("a", 3)

    def test_complex_disc(self):
        ComplexDisc(1.0).coerce("a", 0.3 + 0.4j)
        with pytest.raises(DomainError):
            ComplexDisc(1.0).coerce("a", 2j)


class TestRegistry:
    def test_size_and_order(self):
        ids = list(REGISTRY)
        assert len(ids) >= 40
        assert ids == sorted(ids)

    def test_every_module_is_represented(self):
        modules = {d.module for d in REGISTRY.values()}
        assert modules == {"quadseries", "gaussfusion", "charsum", "hyperfourier", "prodilog"}

    def test_statuses(self):
        assert {d.status for d in REGISTRY.values()} <= set(STATUSES)
        assert get_identity("QS-OWEN-DISCRETE").status == "audit"
        assert get_identity("CH-GOSPER").status == "audit"
        assert {d.id for d in list_identities(status="control")} == {"QS-DECOUPLING-BROKEN", "CH-COTANGENT-GAUSSIAN"}

    def test_anchors(self):
        assert "the value of the Gauss sum" in get_identity("QS-GAUSS").anchor
        assert "the generalized Gudermannian function" in get_identity("PD-GTF").anchor
        assert all(d.anchor for d in REGISTRY.values())

    def test_defaults_lie_in_domain(self):
        for d in REGISTRY.values():
            assert d.resolve({}) == d.defaults

    def test_unknown_id(self):
        with pytest.raises(KeyError, match="unknown identity id"):
            get_identity("XX-NOPE")

    def test_prefix_filter(self):
        assert all(d.id.startswith("HF-") for d in list_identities("HF-"))

    def test_resolve_rejects(self):
        d = get_identity("QS-GAUSS")
        with pytest.raises(DomainError):
            d.resolve({"a": 7})
        with pytest.raises(DomainError):
            d.resolve({"b": 2})
        with pytest.raises(DomainError):
            get_identity("HF-GEGENBAUER").resolve({"a": 0.6, "b": 0.6})


class TestRunner:
    def test_verify_closed_form(self):
        r = verify("CH-EX1-CLOSED")
        assert r.passed and abs(r.lhs.value - 0.25) < 1e-8

    def test_verify_params(self):
        r = verify("QS-GAUSS", {"a": 6})
        assert r.passed and r.id == "QS-GAUSS" and r.params == {"a": 6}
        assert r.evals >= 0 and r.ms is None

    def test_audit_reported(self):
        r = verify("QS-OWEN-DISCRETE")
        assert r.status == "audit" and outcome(r) in ("pass", "audit")

    def test_tolerance_override(self):
        # a tolerance far below the closed form's own error must fail
        assert not verify("CH-EX1-CLOSED", config=RunConfig(tol_rel=1e-300, tol_abs=0.0)).passed
        assert verify("CH-GOSPER", config=RunConfig(tol_rel=0.6)).passed

    def test_point_rng_is_keyed(self):
        a = point_rng(42, "FG-FUSION", 0).random()
        assert a == point_rng(42, "FG-FUSION", 0).random()
        assert a != point_rng(42, "FG-FUSION", 1).random()
        assert a != point_rng(43, "FG-FUSION", 0).random()

    def test_verify_all_filter(self):
        doc = verify_all("PD-INF", RunConfig(seed=1))
        assert {r.id for r in doc.results} == {d.id for d in list_identities("PD-INF")}
        assert doc.exit_code == 0

    def test_verify_all_controls_opt_in(self):
        doc = verify_all("QS-DECOUPLING", RunConfig())
        assert "QS-DECOUPLING-BROKEN" not in {r.id for r in doc.results}
        doc = verify_all("QS-DECOUPLING", RunConfig(), include_controls=True)
        assert doc.summary["control"] == 1 and doc.exit_code == 0

    def test_sweep_random(self):
        doc = sweep("FG-FUSION", "random=5", RunConfig(seed=42))
        assert len(doc.results) == 5 and doc.summary["pass"] == 5

    def test_sweep_grid(self):
        doc = sweep("HF-NF1", "a=0.2:0.8:4;x=0.5,1.0", RunConfig())
        assert len(doc.results) == 8 and doc.exit_code == 0

    @pytest.mark.parametrize("grid", ["a=1:2", "z=0.1,0.2", "random=0", "a=0.2:0.8:x", ""])
    def test_bad_grid(self, grid):
        with pytest.raises((GridError, DomainError)):
            parse_grid(get_identity("HF-NF1"), grid, 0)

    def test_out_of_domain_grid(self):
        with pytest.raises(DomainError):
            sweep("QS-GAUSS", "a=3,5", RunConfig())


def _result(passed, status="normal", lhs=1.0, rhs=1.0):
    r = CheckResult(ApproxComplex(lhs, 1e-16), ApproxComplex(rhs, 1e-16), 0.0, 0.0, passed, {"a": 0.5 + 0.5j, "n": 3})
    r.id, r.status = "X-TEST", status
    return r


class TestReport:
    @pytest.mark.parametrize(
        "passed,status,bucket",
        [(True, "normal", "pass"), (False, "normal", "fail"), (False, "audit", "audit"), (True, "audit", "pass"), (False, "control", "control"), (True, "control", "fail")],
    )
    def test_outcome(self, passed, status, bucket):
        assert outcome(_result(passed, status)) == bucket

    def test_exit_code(self):
        assert ReportDocument({}, [_result(True), _result(False, "audit"), _result(False, "control")]).exit_code == 0
        assert ReportDocument({}, [_result(True), _result(False)]).exit_code == 1

    def test_empty(self):
        doc = ReportDocument({}, [])
        assert doc.summary == {"pass": 0, "fail": 0, "audit": 0, "control": 0}
        assert doc.exit_code == 0
        assert ReportDocument.from_json(doc.to_json()) == doc
        assert render(doc, "text")

    def test_result_roundtrip(self):
        r = _result(False, lhs=1 + 2j, rhs=3.0)
        back = result_from_dict(result_to_dict(r))
        assert result_to_dict(back) == result_to_dict(r)

    def test_json_roundtrip_real_run(self):
        doc = verify_all("CH-EX", RunConfig(seed=3))
        text = doc.to_json()
        assert ReportDocument.from_json(text) == doc
        assert ReportDocument.from_json(text).to_json() == text
        assert json.loads(text)["summary"] == doc.summary

    def test_failed_result_with_missing_sides_serializes(self):
        r = CheckResult(None, None, math.inf, math.inf, False, {})
        r.id, r.status, r.note = "X", "normal", "boom"
        doc = ReportDocument({}, [r])
        assert json.loads(doc.to_json())["results"][0]["lhs"] is None

    def test_csv(self):
        doc = verify_all("CH-EX", RunConfig())
        rows = list(csv.DictReader(io.StringIO(render(doc, "csv"))))
        assert len(rows) == len(doc.results) and rows[0]["id"].startswith("CH-EX")

    def test_text(self):
        text = render(verify_all("CH-EX", RunConfig()), "text")
        assert "CH-EX1" in text and "pass" in text

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render(ReportDocument(), "xml")


class TestConfig:
    def test_precedence(self, tmp_path):
        path = tmp_path / "cfg"
        path.write_text("# defaults\nseed = 5\ntol.QS-GAUSS.rel = 1e-3\nbudget = 50000\n")
        cfg = load_config(path)
        assert cfg.seed == 5 and cfg.budget == 50000
        from identlab.numkernel import Tolerance

        assert cfg.tolerance_for("QS-GAUSS", Tolerance(1e-12, 1e-12)).rel == 1e-3
        assert cfg.tolerance_for("QS-MORDELL", Tolerance(1e-9, 1e-12)).rel == 1e-9
        from dataclasses import replace

        assert replace(cfg, tol_rel=1e-2).tolerance_for("QS-GAUSS", Tolerance(1e-12, 1e-12)).rel == 1e-2

    def test_env_override(self, tmp_path, monkeypatch):
        path = tmp_path / "cfg"
        path.write_text("samples=3\n")
        monkeypatch.setenv("IDENTLAB_CONFIG", str(path))
        assert load_config().samples == 3

    @pytest.mark.parametrize("text", ["seed\n", "colour=blue\n", "seed=x\n", "tol.QS-GAUSS.mid=1\n", "tol_rel=-1\n"])
    def test_bad_config(self, tmp_path, text):
        path = tmp_path / "cfg"
        path.write_text(text)
        with pytest.raises(ConfigError):
            load_config(path)

    @pytest.mark.parametrize("kw", [{"tol_rel": 0.0}, {"tol_abs": -1.0}, {"jobs": 0}])
    def test_run_config_validation(self, kw):
        with pytest.raises(ConfigError):
            RunConfig(**kw)

    def test_manifest(self, tmp_path):
        (tmp_path / "manifest").write_text("tol.HF-NF1.rel = 1e-4\n")
        (tmp_path / "cfg").write_text("manifest = manifest\ntol.HF-NF1.abs = 1e-9\n")
        cfg = load_config(tmp_path / "cfg")
        assert cfg.overrides["HF-NF1"] == {"rel": 1e-4, "abs": 1e-9}
        (tmp_path / "manifest").write_text("seed = 3\n")
        with pytest.raises(ConfigError):
            load_config(tmp_path / "cfg")

    def test_digest_ignores_jobs(self):
        assert RunConfig(jobs=1).digest() == RunConfig(jobs=4).digest()
        assert RunConfig(seed=1).digest() != RunConfig(seed=2).digest()


class TestCLI:
    @pytest.fixture(autouse=True)
    def _no_env(self, monkeypatch):
        monkeypatch.delenv("IDENTLAB_CONFIG", raising=False)
        monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")

    def test_list(self, capsys):
        assert main(["list", "--filter", "QS-GAUSS"]) == 0
        assert "QS-GAUSS" in capsys.readouterr().out

    def test_verify_pass(self, capsys):
        assert main(["verify", "QS-GAUSS", "-p", "a=6"]) == 0
        assert "QS-GAUSS" in capsys.readouterr().out

    def test_verify_json(self, capsys):
        assert main(["verify", "CH-EX1-CLOSED", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["summary"]["pass"] == 1

    def test_control_exit_code(self):
        # a control's expected failure is not a suite failure
        assert main(["verify", "QS-DECOUPLING-BROKEN"]) == 0

    def test_failure_exit_code(self, capsys):
        assert main(["--tol-rel", "1e-300", "--tol-abs", "0", "verify", "CH-EX1-CLOSED", "--format", "json"]) == 1
        assert json.loads(capsys.readouterr().out)["summary"]["fail"] == 1
        assert main(["verify", "CH-GOSPER"]) == 0  # audit

    @pytest.mark.parametrize(
        "argv",
        [["verify", "XX-NOPE"], ["verify", "QS-GAUSS", "-p", "a=7"], ["verify", "QS-GAUSS", "-p", "a"], ["sweep", "HF-NF1", "--grid", "q=1,2"], ["--budget", "0", "verify", "QS-GAUSS"], ["verify-all", "--jobs", "0"]],
    )
    def test_usage_errors(self, argv, capsys):
        assert main(argv) == 2
        assert "identlab: error" in capsys.readouterr().err

    def test_global_flag_after_subcommand(self, capsys):
        assert main(["verify", "QS-GAUSS", "--tol-rel", "0.5", "--format", "json"]) == 0
        assert main(["--tol-rel", "0.5", "verify", "QS-GAUSS", "--format", "json"]) == 0

    def test_report_roundtrip(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        assert main(["verify-all", "--filter", "CH-EX", "--seed", "7", "--out", str(out)]) == 0
        assert main(["report", "--in", str(out), "--format", "csv"]) == 0
        assert capsys.readouterr().out.startswith("id,")

    def test_report_bad_input(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{}")
        assert main(["report", "--in", str(bad)]) == 2

    def test_parallel_determinism(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        main(["verify-all", "--filter", "PD-", "--seed", "42", "--out", str(a)])
        main(["verify-all", "--filter", "PD-", "--seed", "42", "--jobs", "3", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()


class TestSeedProperties:
    @settings(max_examples=10, deadline=None)
    @given(st.integers(0, 2**31))
    def test_random_points_stay_in_domain(self, seed):
        for d in list_identities():
            if d.sampler is not None:
                d.resolve(d.sampler(np.random.default_rng(seed)))

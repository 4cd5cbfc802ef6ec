import csv
import io
import json
import math

import pytest

from qident.kernel import TruncationPolicy
from qident.verify import (CSV_COLUMNS, Category, CheckResult, ConfigError, GridSpec, NomeSpec, REGISTRY,
                           SuiteConfig, emit_report, extrapolate, parse_config, run_identity, run_suite)
from qident.verify.runner import configured_case

FORBIDDEN = ("paper", "spec", "eq.", "equation", "theorem", "section", "remark", "§")


def test_registry_covers_r1_to_r29():
    assert list(REGISTRY) == [f"R{i}" for i in range(1, 30)]


@pytest.mark.parametrize("case_id", list(REGISTRY))
def test_registry_self_audit(case_id):
    case = REGISTRY[case_id]
    assert callable(case.evaluate) and callable(case.points)
    assert case.description and case.formula
    assert isinstance(case.category, Category)
    case.check_tolerance(TruncationPolicy())
    points = case.points(case.domain)
    assert points, "default grid must not be empty"
    lhs, rhs = case.evaluate(points[0], TruncationPolicy(1e-15, 10 ** 7))
    assert complex(lhs) == complex(lhs) and complex(rhs) == complex(rhs)
    text = (case.description + " " + case.formula).lower()
    assert not any(word in text for word in FORBIDDEN)


def test_categories():
    limits = {i for i, c in REGISTRY.items() if c.category is Category.LIMIT_CLAIM}
    consts = {i for i, c in REGISTRY.items() if c.category is Category.EXPLICIT_CONSTANT}
    assert limits == {"R19", "R25", "R26", "R27", "R28"}
    assert consts == {"R21", "R22"}
    assert all(REGISTRY[i].tol_rel == 1e-10 for i in consts)


def test_check_result_pass_rule():
    case = REGISTRY["R14"]
    assert CheckResult.judge(case, 0, {}, 1.0, 1.0 + 1e-12).passed
    assert not CheckResult.judge(case, 0, {}, 1.0, 1.1).passed
    assert not CheckResult.judge(case, 0, {}, 1.0, 1.0, degraded=True).passed
    # zero right side is judged on the absolute error
    assert CheckResult.judge(case, 0, {}, 1e-13, 0).passed


def test_expected_fail_semantics():
    case = REGISTRY["R17"]
    assert case.expect_fail
    assert CheckResult.judge(case, 0, {}, 1.0, 1.5).passed
    # the suite must fail if the wrong formula were numerically right
    assert not CheckResult.judge(case, 0, {}, 1.0, 1.0).passed


def test_r17_passes_by_failing():
    rows, _ = run_identity(REGISTRY["R17"])
    assert rows and all(r.passed for r in rows)
    assert min(r.abs_err for r in rows if r.params["nome"].q == 0.5) > 1e-3


def test_r1_all_pass_on_default_grid():
    rows, _ = run_identity(REGISTRY["R1"])
    assert len(rows) == 72 and all(r.passed for r in rows)


def test_empty_grid_gives_no_rows():
    import dataclasses
    case = dataclasses.replace(REGISTRY["R1"], domain=GridSpec())
    assert run_identity(case) == ([], [])


def test_domain_errors_recorded_per_point():
    import dataclasses
    case = dataclasses.replace(REGISTRY["R13"], domain=GridSpec([0.5], [0.2, -1.0], {"m": [1]}))
    rows, _ = run_identity(case)
    assert len(rows) == 2
    assert rows[0].passed
    assert not rows[1].passed and "PoleError" in rows[1].error and math.isnan(rows[1].abs_err)


def test_truncation_cap_marks_degraded():
    rows, _ = run_identity(REGISTRY["R19"], TruncationPolicy(1e-15, 1000))
    assert rows and all(r.degraded and not r.passed for r in rows)


def test_convention_notes_on_negative_q():
    report = run_suite(["R20"])
    notes = report.summary("R20").notes
    assert any("convention identified" in n for n in notes)
    assert report.summary("R20").ok


def test_extrapolate_is_exact_for_quadratics():
    f = lambda h: 2 + 3 * h - 5 * h * h
    hs = (1e-2, 1e-3, 1e-4)
    assert extrapolate(hs, [f(h) for h in hs]) == pytest.approx(2, abs=1e-12)


def test_run_suite_checks():
    with pytest.raises(ValueError):
        run_suite([])
    with pytest.raises(ConfigError):
        run_suite(["R99"])
    with pytest.raises(ConfigError):
        run_suite(["R1"], SuiteConfig(tolerances={"R1": 1e-15}))
    report = run_suite(["R9"])
    assert len(report.summaries) == 1 and report.ok


def test_emit_csv():
    report = run_suite(["R21"])
    text = emit_report(report, "csv").decode("utf-8")
    assert "\r" not in text
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_COLUMNS
    assert len(rows) == 1 + 6
    assert {r[-1] for r in rows[1:]} <= {"true", "false"}


def test_emit_csv_header_only_and_one_point():
    report = run_suite(["R21"])
    report.results = []
    assert emit_report(report, "csv").decode().splitlines() == [",".join(CSV_COLUMNS)]
    report = run_suite(["R21"])
    report.results = report.results[:1]
    assert len(emit_report(report, "csv").decode().splitlines()) == 2


def test_emit_markdown_mentions_convention():
    text = emit_report(run_suite(["R21", "R22"]), "markdown").decode()
    assert "| R22 |" in text and "convention" in text


def test_determinism_same_seed():
    ids = ["R23", "R22"]
    a = emit_report(run_suite(ids, SuiteConfig(seed=3)), "csv")
    b = emit_report(run_suite(ids, SuiteConfig(seed=3)), "csv")
    c = emit_report(run_suite(ids, SuiteConfig(seed=4)), "csv")
    assert a == b and a != c


def test_parse_config():
    cfg = parse_config({
        "grid": {"q_values": [0.3, [0.2, 0.1], {"tau": [0, 1.5]}], "z_values": [[0.1, 0.2]],
                 "integer_params": {"m": [2, 3]}},
        "tolerances": {"finite_identity": 1e-8, "R21": 1e-9},
        "seed": 7,
        "policy": {"epsilon": 1e-14, "max_terms": 5000},
    })
    assert cfg.grid["q_values"][1] == NomeSpec(q=0.2 + 0.1j)
    assert cfg.grid["q_values"][2] == NomeSpec(tau=1.5j)
    assert cfg.policy == TruncationPolicy(1e-14, 5000)
    case = configured_case(REGISTRY["R14"], cfg)
    assert case.tol_abs == 1e-8 and case.domain.integer_params["m"] == [2, 3]
    assert len(case.domain.q_values) == 3
    assert configured_case(REGISTRY["R21"], cfg).tol_rel == 1e-9
    assert configured_case(REGISTRY["R17"], cfg).tol_abs == REGISTRY["R17"].tol_abs
    json.dumps(cfg.echo())


@pytest.mark.parametrize("bad", [
    [],
    {"nonsense": 1},
    {"grid": {"q_values": [1.5]}},
    {"grid": {"q_values": []}},
    {"grid": {"q_values": [{"tau": [0, -1]}]}},
    {"grid": {"z_values": ["x"]}},
    {"seed": "abc"},
    {"policy": {"epsilon": -1}},
])
def test_parse_config_errors(bad):
    with pytest.raises(ConfigError):
        parse_config(bad)

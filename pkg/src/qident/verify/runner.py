"""Run registry cases over their grids and collect a report."""
from __future__ import annotations

import dataclasses
import json
import math
import warnings
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from ..kernel import Branch, DomainError, TruncationPolicy, TruncationWarning
from .model import CaseSummary, CheckResult, ConfigError, GridSpec, IdentityCase, NomeSpec, Report
from .registry import REGISTRY

# limit claims near q = 1 take q^(1/d) with d up to 8, so a few million factors
SUITE_POLICY = TruncationPolicy(epsilon=1e-15, max_terms=10_000_000)


@dataclass
class SuiteConfig:
    grid: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)
    seed: Optional[int] = None
    policy: TruncationPolicy = SUITE_POLICY

    def echo(self) -> dict:
        return {"grid": _jsonable(self.grid), "tolerances": dict(self.tolerances), "seed": self.seed,
                "policy": {"epsilon": self.policy.epsilon, "max_terms": self.policy.max_terms}}


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, NomeSpec):
        return {"tau": _jsonable(x.tau)} if x.tau is not None else _jsonable(x.q)
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def _number(v) -> complex:
    if isinstance(v, bool):
        raise ConfigError(f"expected a number, got {v!r}")
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(t, (int, float)) for t in v):
        return complex(v[0], v[1])
    raise ConfigError(f"expected a number or [re, im] pair, got {v!r}")


def _nome_spec(v) -> NomeSpec:
    if isinstance(v, dict):
        branch = Branch(v.get("branch", "principal").replace("-", "_"))
        if "tau" in v:
            return NomeSpec(tau=_number(v["tau"]), branch=branch)
        if "q" in v:
            return NomeSpec(q=_number(v["q"]), branch=branch)
        raise ConfigError(f"nome spec needs 'q' or 'tau': {v!r}")
    return NomeSpec(q=_number(v))


def parse_config(data: dict) -> SuiteConfig:
    """Build a :class:`SuiteConfig` from the decoded JSON object."""
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(data) - {"grid", "tolerances", "seed", "policy"}
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    try:
        grid = {}
        raw_grid = data.get("grid", {})
        if not isinstance(raw_grid, dict):
            raise ConfigError("grid must be an object")
        if "q_values" in raw_grid:
            grid["q_values"] = [_nome_spec(v) for v in raw_grid["q_values"]]
        if "z_values" in raw_grid:
            grid["z_values"] = [_number(v) for v in raw_grid["z_values"]]
        if "integer_params" in raw_grid:
            grid["integer_params"] = {k: [int(i) for i in v] for k, v in raw_grid["integer_params"].items()}
        for key in grid:
            if not grid[key]:
                raise ConfigError(f"grid.{key} must be nonempty")
        tolerances = {str(k): float(v) for k, v in data.get("tolerances", {}).items()}
        seed = data.get("seed")
        if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
            raise ConfigError("seed must be an integer")
        pol = data.get("policy", {})
        policy = TruncationPolicy(float(pol.get("epsilon", SUITE_POLICY.epsilon)),
                                  int(pol.get("max_terms", SUITE_POLICY.max_terms)))
    except ConfigError:
        raise
    except (TypeError, ValueError, AttributeError) as exc:
        raise ConfigError(str(exc)) from exc
    return SuiteConfig(grid, tolerances, seed, policy)


def load_config(path) -> SuiteConfig:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(data)


def configured_case(case: IdentityCase, config: SuiteConfig) -> IdentityCase:
    """Apply grid overrides and tolerances from ``config`` to a registry case.

    Grid overrides replace q or z values only for cases whose default grid
    uses them, and integer ranges only for names the case already has.
    Tolerance keys are a case id, a category name or ``"default"``; the
    most specific one wins. Expected-fail thresholds only follow their id.
    """
    dom = case.domain
    grid = config.grid
    new = GridSpec(
        grid["q_values"] if "q_values" in grid and dom.q_values else dom.q_values,
        grid["z_values"] if "z_values" in grid and dom.z_values else dom.z_values,
        {k: grid.get("integer_params", {}).get(k, v) for k, v in dom.integer_params.items()},
        dom.seed if config.seed is None else config.seed,
    )
    tol = config.tolerances
    if case.id in tol:
        t = tol[case.id]
        tols = {"tol_abs": t, "tol_rel": t}
    elif not case.expect_fail and (case.category.value in tol or "default" in tol):
        t = tol.get(case.category.value, tol.get("default"))
        tols = {"tol_abs": t, "tol_rel": t}
    else:
        tols = {}
    return dataclasses.replace(case, domain=new, **tols)


def run_identity(case: IdentityCase, policy: TruncationPolicy = SUITE_POLICY) -> tuple:
    """Evaluate ``case`` on every grid point.

    Returns ``(results, notes)``. Domain errors are recorded on the row;
    a truncation cap hit marks the row degraded.
    """
    rows = []
    for index, point in enumerate(case.points(case.domain)):
        try:
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", TruncationWarning)
                lhs, rhs = case.evaluate(point, policy)
            degraded = any(issubclass(w.category, TruncationWarning) for w in caught)
            rows.append(CheckResult.judge(case, index, point, lhs, rhs, degraded))
        except (DomainError, ValueError, ArithmeticError) as exc:
            rows.append(CheckResult.failed(case, index, point, exc))
    notes = []
    if case.select is not None:
        rows, notes = case.select(rows)
        for i, row in enumerate(rows):
            row.point_index = i
    return rows, notes


def summarize(case: IdentityCase, rows: list, notes: list) -> CaseSummary:
    def worst(values):
        finite = [v for v in values if not math.isnan(v)]
        if len(finite) < len(values):
            return math.nan
        return max(finite, default=0.0)

    return CaseSummary(case.id, case.description, case.category.value, len(rows),
                       sum(r.passed for r in rows), sum(r.degraded for r in rows),
                       worst([r.abs_err for r in rows]), worst([r.rel_err for r in rows]), list(notes))


def run_suite(ids, config: Optional[SuiteConfig] = None, suite: str = "qident") -> Report:
    """Run the listed registry ids in order and aggregate a :class:`Report`."""
    ids = list(ids)
    if not ids:
        raise ValueError("ids must be nonempty")
    config = config or SuiteConfig()
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise ConfigError(f"unknown identity ids: {', '.join(unknown)}")
    summaries, results = [], []
    for case_id in ids:
        case = configured_case(REGISTRY[case_id], config)
        case.check_tolerance(config.policy)
        rows, notes = run_identity(case, config.policy)
        summaries.append(summarize(case, rows, notes))
        results.extend(rows)
    stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return Report(suite, stamp, config.echo(), summaries, results)

"""Plain data types shared by the registry, the runner and the report writer."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Optional

from ..kernel import DomainError, LogNome, TruncationPolicy, nome_from_q, nome_from_tau, Branch


class Category(str, Enum):
    FINITE_IDENTITY = "finite_identity"
    LIMIT_CLAIM = "limit_claim"
    EXPLICIT_CONSTANT = "explicit_constant"


class ConfigError(ValueError):
    """Bad suite configuration (maps to CLI exit code 2)."""


@dataclass(frozen=True)
class NomeSpec:
    """A grid nome given either as ``q`` or as ``tau``."""

    q: Optional[complex] = None
    tau: Optional[complex] = None
    branch: Branch = Branch.PRINCIPAL

    def __post_init__(self):
        if (self.q is None) == (self.tau is None):
            raise ConfigError("nome spec needs exactly one of q, tau")
        if self.q is not None and not abs(self.q) < 1:
            raise ConfigError(f"|q| must be < 1, got {self.q}")
        if self.tau is not None and not complex(self.tau).imag > 0:
            raise ConfigError(f"Im(tau) must be > 0, got {self.tau}")

    def nome(self) -> LogNome:
        if self.tau is not None:
            return nome_from_tau(self.tau)
        return nome_from_q(self.q, self.branch)

    def with_branch(self, branch: Branch) -> "NomeSpec":
        return NomeSpec(self.q, self.tau, Branch(branch))

    def label(self) -> str:
        if self.tau is not None:
            return f"tau={fmt_number(self.tau)}"
        return f"q={fmt_number(self.q)}"


def fmt_number(x: Any) -> str:
    """Stable text for a scalar: ``repr`` of floats, ``re+imj`` for complex."""
    if isinstance(x, bool) or isinstance(x, int) or isinstance(x, str):
        return str(x)
    if isinstance(x, Enum):
        return str(x.value)
    if isinstance(x, NomeSpec):
        return x.label()
    x = complex(x)
    if x.imag == 0:
        return repr(x.real)
    return f"{x.real!r}{x.imag:+}j"


@dataclass
class GridSpec:
    q_values: list = field(default_factory=list)
    z_values: list = field(default_factory=list)
    integer_params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        self.q_values = [v if isinstance(v, NomeSpec) else NomeSpec(q=complex(v)) for v in self.q_values]
        self.z_values = [complex(z) for z in self.z_values]
        self.integer_params = {k: [int(i) for i in v] for k, v in self.integer_params.items()}


Point = dict
Evaluator = Callable[[Point, TruncationPolicy], tuple]


@dataclass
class IdentityCase:
    id: str
    description: str
    formula: str
    category: Category
    domain: GridSpec
    points: Callable[[GridSpec], list]
    evaluate: Evaluator
    tol_abs: float = 1e-9
    tol_rel: float = 1e-9
    expect_fail: bool = False
    # optional post-pass that may drop rows and add notes (convention search)
    select: Optional[Callable[[list], tuple]] = None

    def check_tolerance(self, policy: TruncationPolicy):
        floor = 10 * policy.epsilon
        if not (self.tol_abs > floor and self.tol_rel > floor):
            raise ConfigError(f"{self.id}: tolerance must exceed 10*epsilon = {floor:g}")


@dataclass
class CheckResult:
    case_id: str
    point_index: int
    params: dict
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    passed: bool
    degraded: bool = False
    error: str = ""

    @classmethod
    def judge(cls, case: IdentityCase, index: int, params: dict, lhs: complex, rhs: complex,
              degraded: bool = False) -> "CheckResult":
        lhs, rhs = complex(lhs), complex(rhs)
        abs_err = abs(lhs - rhs)
        scale = max(abs(lhs), abs(rhs))
        rel_err = abs_err / scale if scale > 0 else (0.0 if abs_err == 0 else math.inf)
        if math.isnan(abs_err):
            rel_err = math.nan
        close = abs_err < case.tol_abs or rel_err < case.tol_rel
        # expected-fail cases pass when the two sides clearly disagree
        ok = (not close and not math.isnan(abs_err)) if case.expect_fail else close
        return cls(case.id, index, params, lhs, rhs, abs_err, rel_err, ok and not degraded, degraded)

    @classmethod
    def failed(cls, case: IdentityCase, index: int, params: dict, error: Exception) -> "CheckResult":
        nan = complex(math.nan, math.nan)
        return cls(case.id, index, params, nan, nan, math.nan, math.nan, False, False,
                   f"{type(error).__name__}: {error}")


@dataclass
class CaseSummary:
    case_id: str
    description: str
    category: str
    total: int
    passed: int
    degraded: int
    worst_abs: float
    worst_rel: float
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total


@dataclass
class Report:
    suite: str
    timestamp: str
    config: dict
    summaries: list
    results: list

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.summaries)

    def summary(self, case_id: str) -> CaseSummary:
        for s in self.summaries:
            if s.case_id == case_id:
                return s
        raise KeyError(case_id)

    def rows(self, case_id: str) -> list:
        return [r for r in self.results if r.case_id == case_id]


__all__ = ["Category", "ConfigError", "NomeSpec", "GridSpec", "IdentityCase", "CheckResult",
           "CaseSummary", "Report", "fmt_number", "DomainError"]

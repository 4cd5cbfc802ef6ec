"""Identity registry, grid runner and report writer."""
from .model import Category, CaseSummary, CheckResult, ConfigError, GridSpec, IdentityCase, NomeSpec, Report
from .registry import REGISTRY, extrapolate
from .report import CSV_COLUMNS, emit_report
from .runner import SUITE_POLICY, SuiteConfig, load_config, parse_config, run_identity, run_suite

__all__ = ["Category", "CaseSummary", "CheckResult", "ConfigError", "GridSpec", "IdentityCase",
           "NomeSpec", "Report", "REGISTRY", "extrapolate", "CSV_COLUMNS", "emit_report",
           "SUITE_POLICY", "SuiteConfig", "load_config", "parse_config", "run_identity", "run_suite"]

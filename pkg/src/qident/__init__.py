"""q-series special functions and a numerical identity checker."""
from .kernel import (DEFAULT_POLICY, Branch, DomainError, LogNome, TruncationPolicy,
                     TruncationWarning, classical_gamma, nome_from_q, nome_from_tau,
                     nome_power, truncation_terms)

__all__ = [
    "DEFAULT_POLICY", "Branch", "DomainError", "LogNome", "TruncationPolicy",
    "TruncationWarning", "classical_gamma", "nome_from_q", "nome_from_tau",
    "nome_power", "truncation_terms",
]

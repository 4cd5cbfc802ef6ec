"""Numeric foundation: the nome stored through its logarithm, fractional
powers under two branch conventions, truncation bounds, and a classical gamma.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, replace
from enum import Enum

PI = math.pi


class DomainError(ValueError):
    """Argument outside the domain where the function is defined."""


class TruncationWarning(RuntimeWarning):
    """An infinite product or series hit ``max_terms`` before its tail bound."""


class Branch(str, Enum):
    PRINCIPAL = "principal"
    REAL_ROOT = "real_root"


@dataclass(frozen=True)
class TruncationPolicy:
    epsilon: float = 1e-15
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_POLICY = TruncationPolicy()


def _is_negative_real(log_q: complex) -> bool:
    # arg(q) == pi (mod 2 pi)
    return abs(math.remainder(log_q.imag - PI, 2 * PI)) < 1e-12


@dataclass(frozen=True)
class LogNome:
    """The nome ``q`` represented by ``log q``.

    Every power ``q**alpha`` is ``exp(alpha * log q)`` so fractional powers
    never depend on an implicit branch choice. ``branch`` only changes how
    non-integer powers of a negative real nome are taken (see
    :func:`nome_power`).
    """

    log_q: complex
    branch: Branch = Branch.PRINCIPAL

    def __post_init__(self):
        object.__setattr__(self, "log_q", complex(self.log_q))
        object.__setattr__(self, "branch", Branch(self.branch))
        if not self.log_q.real < 0:
            raise DomainError(f"|q| must be < 1 (Re log q < 0), got log q = {self.log_q}")

    @property
    def q(self) -> complex:
        return cmath.exp(self.log_q)

    @property
    def modulus(self) -> float:
        return math.exp(self.log_q.real)

    @property
    def is_negative_real(self) -> bool:
        return _is_negative_real(self.log_q)

    def tau(self) -> complex:
        return self.log_q / (1j * PI)

    def tau_prime(self) -> "LogNome":
        """Nome of ``-1/tau``; its log is ``pi**2 / log q``."""
        return LogNome(PI * PI / self.log_q)

    def scale(self, m: float) -> "LogNome":
        """Nome of ``m * tau``, i.e. ``q**m`` taken coherently through the log."""
        return replace(self, log_q=m * self.log_q)

    def power(self, alpha: float) -> "LogNome":
        """``q**alpha`` as a nome, honouring the branch convention."""
        if self.branch is Branch.REAL_ROOT and self.is_negative_real and not _is_integer(alpha):
            return LogNome(alpha * self.log_q.real + 1j * PI, Branch.REAL_ROOT)
        return self.scale(alpha)


def _is_integer(alpha) -> bool:
    alpha = complex(alpha)
    return alpha.imag == 0 and float(alpha.real).is_integer()


def nome_from_tau(tau: complex) -> LogNome:
    tau = complex(tau)
    if not tau.imag > 0:
        raise DomainError(f"tau must lie in the upper half plane, got {tau}")
    return LogNome(1j * PI * tau)


def nome_from_q(q: complex, branch: Branch | str = Branch.PRINCIPAL) -> LogNome:
    q = complex(q)
    if q == 0 or not abs(q) < 1:
        raise DomainError(f"need 0 < |q| < 1, got q = {q}")
    log_q = cmath.log(q)
    if log_q.imag == -PI:  # q on the negative axis with a signed zero
        log_q = complex(log_q.real, PI)
    return LogNome(log_q, Branch(branch))


def nome_power(n: LogNome, alpha: complex) -> complex:
    """Return ``q**alpha``.

    Principal: ``exp(alpha * log q)``. Real-root: for a negative real ``q``
    and non-integer ``alpha`` the value is ``-|q|**alpha``; integer powers are
    always exact. Overflow yields ``inf`` rather than raising.
    """
    if n.branch is Branch.REAL_ROOT and n.is_negative_real and not _is_integer(alpha):
        return -_safe_exp(complex(alpha) * n.log_q.real)
    return _safe_exp(complex(alpha) * n.log_q)


def _safe_exp(w: complex) -> complex:
    try:
        return cmath.exp(w)
    except OverflowError:
        return complex(math.inf, 0.0)


def truncation_terms(n: LogNome | float, policy: TruncationPolicy = DEFAULT_POLICY,
                     coeff_mag: float = 1.0) -> int:
    """Smallest ``N`` with ``2 c |q|**N / (1 - |q|) < eps`` and ``c |q|**N <= 1/2``.

    Past such an ``N`` the tail ``sum_{k>=N} |log(1 - a q**k)|`` is below
    ``eps`` for ``|a| = c``. The result is clamped to ``policy.max_terms``;
    a :class:`TruncationWarning` is emitted when the clamp bites.
    """
    if coeff_mag < 0:
        raise ValueError("coeff_mag must be non-negative")
    r = n.modulus if isinstance(n, LogNome) else float(n)
    if coeff_mag == 0:
        return 0
    if r == 0:
        return 1
    log_r = math.log(r)
    eps = policy.epsilon
    need = min(math.log(eps * (1 - r) / (2 * coeff_mag)), math.log(0.5 / coeff_mag))
    big_n = max(0, math.floor(need / log_r)) if need < 0 else 0
    # floor/log rounding can be off by one either way; settle exactly
    while big_n > 0 and _tail_ok(big_n - 1, r, coeff_mag, eps):
        big_n -= 1
    while not _tail_ok(big_n, r, coeff_mag, eps):
        big_n += 1
    if big_n > policy.max_terms:
        warnings.warn(f"truncation needs {big_n} terms at |q|={r}, capped at {policy.max_terms}",
                      TruncationWarning, stacklevel=2)
        return policy.max_terms
    return big_n


def _tail_ok(big_n: int, r: float, c: float, eps: float) -> bool:
    head = c * r ** big_n
    return 2 * head / (1 - r) < eps and head <= 0.5


def classical_gamma(x: float) -> float:
    if not x > 0:
        raise DomainError(f"classical_gamma defined here for x > 0, got {x}")
    return math.gamma(x)


def lemniscate_a() -> float:
    """``pi**(1/4) / Gamma(3/4)``, the constant in the explicit psi values."""
    return PI ** 0.25 / classical_gamma(0.75)

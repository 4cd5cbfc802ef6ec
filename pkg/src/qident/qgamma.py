"""The q-gamma function and product formulas built from it.

All products are accumulated in log space: ``Gamma_q`` near ``q -> 1`` is a
ratio of two products that individually underflow.
"""
from __future__ import annotations

import cmath
import math

from .kernel import DEFAULT_POLICY, DomainError, LogNome, TruncationPolicy, nome_power
from .qseries import _exp, log_f_neg, log_psi, log_qpoch_inf


class PoleError(DomainError):
    """Gamma_q evaluated at a pole, where ``(q^z; q)_inf`` vanishes."""


def _log1m(q: complex) -> complex:
    # principal log(1 - q)
    return cmath.log(1 - q)


def log_q_gamma(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and float(z.real).is_integer():
        raise PoleError(f"Gamma_q has a pole at z = {z.real:g}")
    q = n.q
    log_den = log_qpoch_inf(nome_power(n, z), n, policy)
    if math.isinf(log_den.real):
        raise PoleError(f"(q^z; q)_inf vanishes at z = {z}")
    return log_qpoch_inf(q, n, policy) - log_den + (1 - z) * _log1m(q)


def q_gamma(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``Gamma_q(z) = (q;q)_inf / (q^z;q)_inf * (1-q)^(1-z)``."""
    return _exp(log_q_gamma(z, n, policy))


def log_q_gamma_half(n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    return log_psi(n.power(0.5), policy) + 0.5 * _log1m(n.q)


def q_gamma_half(n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``Gamma_q(1/2)`` through ``psi(q^(1/2)) sqrt(1-q)``."""
    return _exp(log_q_gamma_half(n, policy))


def log_gauss_product_direct(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum((log_q_gamma(k / m, n, policy) for k in range(1, m)), 0j)


def gauss_product_direct(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``prod_{k=1}^{m-1} Gamma_q(k/m)``."""
    return _exp(log_gauss_product_direct(m, n, policy))


def log_gauss_product_closed(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    if m < 1:
        raise ValueError("m must be >= 1")
    return ((m - 1) * (log_q_gamma_half(n, policy) + log_f_neg(n.power(0.5), policy))
            - (m - 2) * log_f_neg(n, policy)
            - log_f_neg(n.power(1 / m), policy))


def gauss_product_closed(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``Gamma_q(1/2)^(m-1) f^(m-1)(-q^(1/2)) / (f^(m-2)(-q) f(-q^(1/m)))``."""
    return _exp(log_gauss_product_closed(m, n, policy))


def jackson_sides(z: complex, m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY,
                  rhs_base_qm: bool = False) -> tuple[complex, complex]:
    """Both sides of Jackson's multiplication formula with base ``r = q^m``::

        ((1-r)/(1-q))^(mz-1) prod_k Gamma_r(z + k/m) = Gamma_q(mz) prod_{k=1}^{m-1} Gamma_r(k/m)

    ``rhs_base_qm=True`` puts ``Gamma_r(mz)`` on the right instead, a variant
    that fails for ``m >= 2``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    z = complex(z)
    r = n.scale(m)
    log_ratio = _log1m(r.q) - _log1m(n.q)
    lhs = (m * z - 1) * log_ratio + sum(log_q_gamma(z + k / m, r, policy) for k in range(m))
    rhs = (log_q_gamma(m * z, r if rhs_base_qm else n, policy)
           + sum((log_q_gamma(k / m, r, policy) for k in range(1, m)), 0j))
    return _exp(lhs), _exp(rhs)


def jackson_residual(z: complex, m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY,
                     rhs_base_qm: bool = False) -> complex:
    lhs, rhs = jackson_sides(z, m, n, policy, rhs_base_qm)
    return lhs - rhs


def shifted_product_direct(z: complex, m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``prod_{k=0}^{m-1} Gamma_q(z + k/m)``."""
    return _exp(sum(log_q_gamma(complex(z) + k / m, n, policy) for k in range(m)))


def shifted_product_closed(z: complex, m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Closed form of ``prod_{k=0}^{m-1} Gamma_q(z + k/m)``::

        (q;q)^m (1-q)^((m-1)/2) / (p;p) * ((1-q)/(1-p))^(1-mz) * Gamma_p(mz),  p = q^(1/m)
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    z = complex(z)
    p = n.power(1 / m)
    q = n.q
    log_val = (m * log_f_neg(n, policy) + (m - 1) / 2 * _log1m(q) - log_f_neg(p, policy)
               + (1 - m * z) * (_log1m(q) - _log1m(p.q)) + log_q_gamma(m * z, p, policy))
    return _exp(log_val)


def base_power_product_sides(x: float, m: int, n: LogNome,
                             policy: TruncationPolicy = DEFAULT_POLICY) -> tuple[complex, complex, complex]:
    """``prod_{k=0}^{m-1} Gamma_{q^m}((x+k)/m)`` and two candidate closed forms.

    Returns ``(product, good, bad)``. Both forms share
    ``(q^m;q^m)^m / (q;q) ((1-q^m)/(1-q))^(1-x) Gamma_q(x)``; ``good``
    multiplies by ``(1-q^m)^((m-1)/2)`` and equals the product, ``bad``
    multiplies by ``(1-q)^((m-1)/2)`` and does not for ``m >= 2``.
    """
    if not x > 0:
        raise DomainError("x must be positive")
    if n.log_q.imag != 0 or m < 1:
        raise DomainError("needs real 0 < q < 1 and m >= 1")
    r = n.scale(m)
    q = n.q
    lhs = _exp(sum(log_q_gamma((x + k) / m, r, policy) for k in range(m)))
    common = (m * log_f_neg(r, policy) - log_f_neg(n, policy)
              + (1 - x) * (_log1m(r.q) - _log1m(q)) + log_q_gamma(x, n, policy))
    good = _exp(common + (m - 1) / 2 * _log1m(r.q))
    bad = _exp(common + (m - 1) / 2 * _log1m(q))
    return lhs, good, bad


def base_power_product_residuals(x: float, m: int, n: LogNome,
                                 policy: TruncationPolicy = DEFAULT_POLICY) -> tuple[complex, complex]:
    """``(good, bad)`` residuals; only the first vanishes for ``m >= 2``."""
    lhs, good, bad = base_power_product_sides(x, m, n, policy)
    return lhs - good, lhs - bad

"""Jacobi's first theta function theta_1(z | tau) with nome q = exp(i pi tau)."""
from __future__ import annotations

import cmath
import math
import warnings

from .kernel import (DEFAULT_POLICY, PI, LogNome, TruncationPolicy, TruncationWarning,
                     nome_power)
from .qseries import _exp, log_qpoch_inf, log_qpoch_multi

SERIES_MAX_MODULUS = 0.5


def theta1_reduced_series(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``theta_1(z) / (2 q^(1/4)) = sum_{k>=0} (-1)^k q^(k(k+1)) sin((2k+1) z)``.

    Terms are summed until past the peak of the bound
    ``|q|^(k(k+1)) e^((2k+1)|Im z|)`` and that bound is below epsilon. The
    leading ``q^(1/4)`` is left out so the value survives nomes too small
    to represent (theta at ``-1/tau`` as ``q -> 1``).
    """
    z = complex(z)
    log_r = n.log_q.real
    y = abs(z.imag)
    total = 0j
    for k in range(policy.max_terms):
        odd = 2 * k + 1
        log_bound = k * (k + 1) * log_r + odd * y
        past_peak = odd >= 2 * y / -log_r
        if past_peak and log_bound < math.log(policy.epsilon):
            return total
        total += (-1) ** k * nome_power(n, k * (k + 1)) * cmath.sin(odd * z)
    warnings.warn(f"theta1 series did not converge in {policy.max_terms} terms",
                  TruncationWarning, stacklevel=2)
    return total


def theta1_series(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``2 sum_{k>=0} (-1)^k q^((2k+1)^2/4) sin((2k+1) z)``."""
    return 2 * nome_power(n, 0.25) * theta1_reduced_series(z, n, policy)


def _reduced_product(z: complex, n: LogNome, policy: TruncationPolicy) -> complex:
    # theta_1 / (2 q^(1/4)) from the triple product
    z = complex(z)
    n2 = n.scale(2)
    q2 = n2.q
    e2 = cmath.exp(2j * z)
    log_prod = log_qpoch_multi([q2 / e2, e2, q2], n2, policy)
    return 0.5j * cmath.exp(-1j * z) * _exp(log_prod)


def theta1_product(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``i q^(1/4) e^(-iz) (q^2 e^(-2iz), e^(2iz), q^2; q^2)_inf``."""
    return 2 * nome_power(n, 0.25) * _reduced_product(z, n, policy)


def theta1_reduced(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``theta_1(z | tau) / (2 q^(1/4))``, same routing as :func:`theta1`."""
    if n.modulus <= SERIES_MAX_MODULUS:
        return theta1_reduced_series(z, n, policy)
    return _reduced_product(z, n, policy)


def theta1(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """theta_1 via the series for ``|q| <= 0.5`` and the product beyond."""
    if n.modulus <= SERIES_MAX_MODULUS:
        return theta1_series(z, n, policy)
    return theta1_product(z, n, policy)


def theta1_prime0(n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``theta_1'(0 | tau) = 2 q^(1/4) (q^2; q^2)_inf^3``."""
    n2 = n.scale(2)
    return 2 * nome_power(n, 0.25) * _exp(3 * log_qpoch_inf(n2.q, n2, policy))


def theta1_prime0_at_tau_prime(n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``theta_1'(0 | -1/tau) = 2 (-i tau)^(3/2) q^(1/4) (q^2; q^2)_inf^3`` (principal root)."""
    return (-1j * n.tau()) ** 1.5 * theta1_prime0(n, policy)


def theta1_at_tau_prime(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """theta_1(z | -1/tau) by direct evaluation at the transformed nome."""
    return theta1(z, n.tau_prime(), policy)


def imaginary_transform_rhs(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``-i (-i tau)^(1/2) exp(i tau z^2 / pi) theta_1(z tau | tau)``."""
    tau = n.tau()
    z = complex(z)
    return -1j * cmath.sqrt(-1j * tau) * cmath.exp(1j * tau * z * z / PI) * theta1(z * tau, n, policy)

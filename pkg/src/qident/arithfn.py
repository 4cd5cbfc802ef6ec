"""Arithmetic functions and the short products P_q(n) over reduced residues."""
from __future__ import annotations

import math
from functools import lru_cache

from .kernel import DEFAULT_POLICY, DomainError, LogNome, TruncationPolicy
from .qgamma import _log1m, log_q_gamma, log_q_gamma_half
from .qseries import _exp, log_f_neg, log_psi, log_qpoch_inf


@lru_cache(maxsize=None)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division as ``((p, e), ...)``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def divisors(m: int) -> list[int]:
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(m: int) -> int:
    out = m
    for p, _ in factorize(m):
        out -= out // p
    return out


def moebius_mu(m: int) -> int:
    fac = factorize(m)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def von_mangoldt(m: int) -> float:
    fac = factorize(m)
    return math.log(fac[0][0]) if len(fac) == 1 else 0.0


def _require_real(n: LogNome):
    if n.log_q.imag != 0:
        raise DomainError("needs real 0 < q < 1 (principal log)")


def q_von_mangoldt(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``log(2^phi(m) prod_{d|m} f(-q^(1/d))^(2 mu(m/d)) / (q^(1/2); q)_inf^(2 phi(m)))``."""
    _require_real(n)
    phi = euler_phi(m)
    acc = phi * math.log(2) - 2 * phi * log_qpoch_inf(n.power(0.5).q, n, policy)
    for d in divisors(m):
        mu = moebius_mu(m // d)
        if mu:
            acc += 2 * mu * log_f_neg(n.power(1 / d), policy)
    return acc


def log_pq_direct(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum((log_q_gamma(k / m, n, policy) for k in range(1, m + 1) if math.gcd(k, m) == 1), 0j)


def pq_direct(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``P_q(m) = prod_{1<=k<=m, gcd(k,m)=1} Gamma_q(k/m)``."""
    return _exp(log_pq_direct(m, n, policy))


def pq_closed(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> tuple[complex, complex]:
    """Two closed forms of ``P_q(m)``::

        Gamma_q(1/2)^phi (q^(1/2); q)^phi / prod_{d|m} f(-q^(1/d))^mu(m/d)
        (2 Gamma_q(1/2)^2)^(phi/2) / exp(Lambda_q(m) / 2)

    Both rely on ``sum_{d|m} mu(m/d) = 0``, so ``m = 1`` returns ``(1, 1)``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return 1 + 0j, 1 + 0j
    phi = euler_phi(m)
    log_g = log_q_gamma_half(n, policy)
    first = phi * (log_g + log_qpoch_inf(n.power(0.5).q, n, policy))
    for d in divisors(m):
        mu = moebius_mu(m // d)
        if mu:
            first -= mu * log_f_neg(n.power(1 / d), policy)
    second = phi / 2 * (math.log(2) + 2 * log_g) - q_von_mangoldt(m, n, policy) / 2
    return _exp(first), _exp(second)


def pq_second_form_unsquared(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``(2 Gamma_q(1/2))^(phi/2) / exp(Lambda_q/2)``: the unsquared variant,
    off from ``P_q(m)`` by ``Gamma_q(1/2)^(-phi/2)``.
    """
    phi = euler_phi(m)
    return _exp(phi / 2 * (math.log(2) + log_q_gamma_half(n, policy)) - q_von_mangoldt(m, n, policy) / 2)


def pq_two_power(k: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``P_q(2^k) = (1-q)^(2^(k-2)) psi(q^(1/2^k)) prod_{j=1}^{k-1} psi(q^(1/2^j))^(2^(k-1-j))``.

    Fractional powers of ``q`` follow the nome's branch convention.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    q = n.q
    acc = 2 ** (k - 2) * _log1m(q) + log_psi(n.power(1 / 2 ** k), policy)
    for j in range(1, k):
        acc += 2 ** (k - 1 - j) * log_psi(n.power(1 / 2 ** j), policy)
    return _exp(acc)


def two_power_induction_sides(k: int, n: LogNome,
                              policy: TruncationPolicy = DEFAULT_POLICY) -> tuple[complex, complex]:
    """``(q;q)^(2^(k-1)) / (q^(1/2^k); q^(1/2^(k-1)))`` against the psi product."""
    if k < 2:
        raise ValueError("k must be >= 2")
    base = n.power(1 / 2 ** (k - 1))
    lhs = 2 ** (k - 1) * log_f_neg(n, policy) - log_qpoch_inf(n.power(1 / 2 ** k).q, base, policy)
    rhs = log_psi(n.power(1 / 2 ** k), policy)
    for j in range(1, k):
        rhs += 2 ** (k - 1 - j) * log_psi(n.power(1 / 2 ** j), policy)
    return _exp(lhs), _exp(rhs)


def classical_pq(m: int) -> float:
    """``(2 pi)^(phi/2) / exp(Lambda(m)/2)``."""
    return (2 * math.pi) ** (euler_phi(m) / 2) / math.exp(von_mangoldt(m) / 2)

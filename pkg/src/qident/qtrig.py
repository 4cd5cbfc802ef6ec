"""Gosper's q-sine and q-cosine and the product identities they satisfy.

``sin_q(z)`` is the theta ratio ``theta_1(z|tau') / theta_1(pi/2|tau')`` with
``tau' = -1/tau``; the gamma route ``sin_q(pi z)`` uses ``Gamma_{q^2}``.
Replacing ``q`` by ``q^m`` always scales ``log q`` by ``m``.
"""
from __future__ import annotations

from typing import Literal, Sequence

from .kernel import DEFAULT_POLICY, PI, DomainError, LogNome, TruncationPolicy, nome_power
from .qgamma import PoleError, log_q_gamma, log_q_gamma_half
from .qseries import _exp, log_qpoch_inf, log_psi
from .theta import theta1, theta1_reduced

Parity = Literal["odd_f", "even_f"]


def _is_int(z: complex) -> bool:
    return z.imag == 0 and float(z.real).is_integer()


def sin_q_gamma(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``sin_q(pi z) = q^(1/4) Gamma_{q^2}(1/2)^2 q^(z(z-1)) / (Gamma_{q^2}(z) Gamma_{q^2}(1-z))``.

    Integer ``z`` sits on a pole of the denominator and returns 0.
    """
    z = complex(z)
    if _is_int(z):
        return 0j
    n2 = n.scale(2)
    try:
        log_den = log_q_gamma(z, n2, policy) + log_q_gamma(1 - z, n2, policy)
    except PoleError:
        return 0j
    return (nome_power(n, 0.25) * nome_power(n, z * (z - 1))
            * _exp(2 * log_q_gamma_half(n2, policy) - log_den))


def cos_q_gamma(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``cos_q(pi z) = Gamma_{q^2}(1/2)^2 q^(z^2) / (Gamma_{q^2}(1/2-z) Gamma_{q^2}(1/2+z))``."""
    z = complex(z)
    if _is_int(z - 0.5):
        return 0j
    n2 = n.scale(2)
    try:
        log_den = log_q_gamma(0.5 - z, n2, policy) + log_q_gamma(0.5 + z, n2, policy)
    except PoleError:
        return 0j
    return nome_power(n, z * z) * _exp(2 * log_q_gamma_half(n2, policy) - log_den)


def sin_q_theta(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``theta_1(z | tau') / theta_1(pi/2 | tau')``; the ``q'^(1/4)`` factors cancel first."""
    tp = n.tau_prime()
    return theta1_reduced(z, tp, policy) / theta1_reduced(PI / 2, tp, policy)


def cos_q_theta(z: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    return sin_q_theta(complex(z) + PI / 2, n, policy)


def sin_q_prime0(n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``sin_q'(0) = -(2 ln q / pi) q^(1/4) psi(q)^2``; real ``0 < q < 1`` only."""
    if n.log_q.imag != 0:
        raise DomainError("sin_q'(0) closed form needs real 0 < q < 1")
    ln_q = n.log_q.real
    return -2 * ln_q / PI * nome_power(n, 0.25) * _exp(2 * log_psi(n, policy))


def _log_sine_prefactor(m: int, n: LogNome, policy: TruncationPolicy) -> complex:
    # log of q^((m^2-1)/12) (q;q^2)^2 / (q^m;q^{2m})^{2m}
    return ((m * m - 1) / 12 * n.log_q
            + 2 * log_qpoch_inf(n.q, n.scale(2), policy)
            - 2 * m * log_qpoch_inf(n.scale(m).q, n.scale(2 * m), policy))


def sine_product_lhs(z: complex, m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``prod_{k=0}^{m-1} sin_{q^m}(pi (z + k/m))``."""
    nm = n.scale(m)
    out = 1 + 0j
    for k in range(m):
        out *= sin_q_theta(PI * (complex(z) + k / m), nm, policy)
    return out


def sine_product_rhs(z: complex, m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``q^((m^2-1)/12) (q;q^2)^2 / (q^m;q^{2m})^{2m} sin_q(m pi z)``."""
    return _exp(_log_sine_prefactor(m, n, policy)) * sin_q_theta(m * PI * complex(z), n, policy)


def sine_product_residual(z: complex, m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    if m < 1:
        raise ValueError("m must be >= 1")
    return sine_product_lhs(z, m, n, policy) - sine_product_rhs(z, m, n, policy)


def jacobi_product_sides(z: complex, m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY,
                         offsets: Literal["zero", "symmetric"] = "zero") -> tuple[complex, complex]:
    """Both sides of Jacobi's multiplication formula::

        (q^{2m};q^{2m}) / (q^2;q^2)^m prod_k theta_1(z + k pi/m | tau) = theta_1(mz | m tau)

    ``offsets="zero"`` takes ``k = 0..m-1`` (the form that holds).
    ``offsets="symmetric"`` takes ``k = -(m-1)/2 .. (m-1)/2``; that product
    equals the right side times ``(-1)^((m-1)/2)`` for odd ``m`` and is a
    different function for even ``m``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    z = complex(z)
    shift = -(m - 1) / 2 if offsets == "symmetric" else 0.0
    prod = 1 + 0j
    for j in range(m):
        prod *= theta1(z + (shift + j) * PI / m, n, policy)
    n2, n2m = n.scale(2), n.scale(2 * m)
    ratio = _exp(log_qpoch_inf(n2m.q, n2m, policy) - m * log_qpoch_inf(n2.q, n2, policy))
    return ratio * prod, theta1(m * z, n.scale(m), policy)


def jacobi_product_residual(z: complex, m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY,
                            offsets: Literal["zero", "symmetric"] = "zero") -> complex:
    lhs, rhs = jacobi_product_sides(z, m, n, policy, offsets)
    return lhs - rhs


def theta_sine_product_sides(z: complex, m: int, n: LogNome,
                             policy: TruncationPolicy = DEFAULT_POLICY) -> tuple[complex, complex]:
    """The sine product restated with theta_1 at ``tau'/m`` and ``tau'``::

        prod_{k=0}^{m-1} theta_1(z + k pi/m | tau'/m)
          = q^((m^2-1)/12) (q;q^2)^2/(q^m;q^{2m})^{2m}
            theta_1(pi/2 | tau'/m)^m / theta_1(pi/2 | tau') theta_1(mz | tau')
    """
    z = complex(z)
    tp = n.tau_prime()
    tpm = n.scale(m).tau_prime()  # -1/(m tau) = tau'/m
    lhs = 1 + 0j
    for k in range(m):
        lhs *= theta1(z + k * PI / m, tpm, policy)
    half_m = theta1(PI / 2, tpm, policy)
    rhs = (_exp(_log_sine_prefactor(m, n, policy)) * half_m ** m / theta1(PI / 2, tp, policy)
           * theta1(m * z, tp, policy))
    return lhs, rhs


def sin_product_at_nodes(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``prod_{k=1}^{m-1} sin_{q^m}(k pi/m)`` minus its closed form
    ``q^((m-1)(m-2)/12) (q^2;q^2)^2 / ((q^m;q^{2m})^{2m-2} (q^{2m};q^{2m})^2)``.
    """
    lhs, rhs = sin_product_at_nodes_sides(m, n, policy)
    return lhs - rhs


def sin_product_at_nodes_sides(m: int, n: LogNome,
                               policy: TruncationPolicy = DEFAULT_POLICY) -> tuple[complex, complex]:
    if m < 1:
        raise ValueError("m must be >= 1")
    nm = n.scale(m)
    lhs = 1 + 0j
    for k in range(1, m):
        lhs *= sin_q_theta(k * PI / m, nm, policy)
    n2, n2m = n.scale(2), n.scale(2 * m)
    log_rhs = ((m - 1) * (m - 2) / 12 * n.log_q
               + 2 * log_qpoch_inf(n2.q, n2, policy)
               - (2 * m - 2) * log_qpoch_inf(nm.q, n2m, policy)
               - 2 * log_qpoch_inf(n2m.q, n2m, policy))
    return lhs, _exp(log_rhs)


def sin_q_nodes_product(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``prod_{k=1}^{m-1} sin_q(k pi/m)``; tends to ``m / 2^(m-1)`` as ``q -> 1``."""
    out = 1 + 0j
    for k in range(1, m):
        out *= sin_q_theta(k * PI / m, n, policy)
    return out


def log_key_limit_ratio(m: int, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Log of ``(q;q^2)^(m-1) (q^2;q^2) / (q^(2/m);q^(2/m))``, which tends to
    ``log(2^((m-1)/2) / sqrt(m))`` as ``q -> 1``.
    """
    n2 = n.scale(2)
    p = n.scale(2 / m)
    return ((m - 1) * log_qpoch_inf(n.q, n2, policy) + log_qpoch_inf(n2.q, n2, policy)
            - log_qpoch_inf(p.q, p, policy))


class NearSingularError(DomainError):
    """A denominator theta value is too close to zero to trust the sum."""


def master_identity_terms(m: int, xs: Sequence[complex], parity: Parity, n: LogNome,
                          policy: TruncationPolicy = DEFAULT_POLICY,
                          singular_tol: float = 1e-10) -> list[complex]:
    """Summands of the ``(m+1)``-point theta identity at parameter ``T = tau'``::

        sum_j theta_1((m-1) x_j - sum_{k!=j} x_k | T) f(x_j) / prod_{k!=j} theta_1(x_j - x_k | T/m)

    with ``f(u) = theta_1(u | T/m)`` (``odd_f``) or ``theta_1(u + pi/2 | T/m)``
    (``even_f``); the denominator runs over all ``k = 1..m+1``. The sum
    vanishes when ``f``'s quasi-period sign ``(-1)^m`` matches, i.e. ``odd_f``
    for odd ``m`` and ``even_f`` for even ``m``.
    """
    if len(xs) != m + 1:
        raise ValueError(f"need {m + 1} points, got {len(xs)}")
    xs = [complex(x) for x in xs]
    big_t = n.tau_prime()
    small_t = n.tau_prime().scale(1 / m)
    shift = 0.0 if parity == "odd_f" else PI / 2
    total = sum(xs)
    out = []
    for j, xj in enumerate(xs):
        den = 1 + 0j
        for k, xk in enumerate(xs):
            if k == j:
                continue
            t = theta1(xj - xk, small_t, policy)
            if abs(t) < singular_tol:
                raise NearSingularError(f"|theta_1(x_{j} - x_{k})| = {abs(t):.3g}")
            den *= t
        arg = (m - 1) * xj - (total - xj)
        out.append(theta1(arg, big_t, policy) * theta1(xj + shift, small_t, policy) / den)
    return out


def master_identity_residual(m: int, xs: Sequence[complex], parity: Parity, n: LogNome,
                             policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    return sum(master_identity_terms(m, xs, parity, n, policy), 0j)


def case_parity(m: int) -> Parity:
    """The f choice whose quasi-periodicity satisfies the identity's hypothesis."""
    return "odd_f" if m % 2 else "even_f"

"""q-shifted factorials and Ramanujan's f(-q) and psi(q).

Infinite products are accumulated as sums of ``log1p(-a q**k)`` so that
products near ``|q| -> 1`` (where ``(q;q)_inf`` underflows) stay usable
through the ``log_*`` variants.
"""
from __future__ import annotations

import cmath
import math
from typing import Sequence

import numpy as np

from .kernel import DEFAULT_POLICY, LogNome, TruncationPolicy, truncation_terms

_CHUNK = 1 << 20


def qpoch_finite(a: complex, q: complex, terms: int) -> complex:
    """``(a; q)_n`` as an explicit finite product."""
    if terms < 0:
        raise ValueError("terms must be >= 0")
    out = 1.0 + 0j
    qk = 1.0 + 0j
    for _ in range(terms):
        out *= 1 - a * qk
        qk *= q
    return out


def _log_factor_sum(coeffs: np.ndarray, log_base: complex, n_terms: int) -> complex:
    """``sum_{k<n_terms} sum_a log(1 - a * base**k)``, chunked for long tails."""
    total = 0j
    real_ok = log_base.imag == 0 and not np.iscomplexobj(coeffs)
    with np.errstate(divide="ignore", invalid="ignore"):
        for start in range(0, n_terms, _CHUNK):
            k = np.arange(start, min(n_terms, start + _CHUNK), dtype=float)
            if real_ok:
                powers = np.exp(k * log_base.real)
                terms = coeffs[:, None] * powers[None, :]
                if np.all(terms < 1):
                    total += float(np.sum(np.log1p(-terms)))
                    continue
            else:
                powers = np.exp(k * log_base)
            terms = coeffs.astype(complex)[:, None] * powers[None, :]
            total += complex(np.sum(np.log1p(-terms)))
    return total


def log_qpoch_multi(coeffs: Sequence[complex], n: LogNome,
                    policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Log of ``(a_1, ..., a_k; q)_inf``; ``-inf`` real part signals an exact zero.

    The imaginary part is a sum of principal logs, i.e. *a* logarithm of the
    product, not necessarily the principal one.
    """
    arr = np.asarray([complex(c) for c in coeffs])
    if arr.size == 0:
        raise ValueError("need at least one coefficient")
    if np.all(arr.imag == 0):
        arr = arr.real
    mag = float(np.max(np.abs(arr)))
    n_terms = truncation_terms(n, policy, mag)
    if n_terms == 0:
        return 0j
    return _log_factor_sum(arr, n.log_q, n_terms)


def log_qpoch_inf(a: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    return log_qpoch_multi([a], n, policy)


def _exp(w: complex) -> complex:
    if math.isinf(w.real) and w.real < 0:
        return 0j
    return cmath.exp(w)


def qpoch_inf(a: complex, n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``(a; q)_inf`` truncated by the policy's tail bound."""
    return _exp(log_qpoch_inf(a, n, policy))


def qpoch_multi(coeffs: Sequence[complex], n: LogNome,
                policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``(a_1, ..., a_k; q)_inf`` in one fused pass sharing the truncation."""
    return _exp(log_qpoch_multi(coeffs, n, policy))


def log_f_neg(n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    return log_qpoch_inf(n.q, n, policy)


def ramanujan_f_neg(n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """Ramanujan's ``f(-q) = (q; q)_inf``.

    To get ``f(-q**(1/2))`` pass the nome ``q**(1/2)``.
    """
    return _exp(log_f_neg(n, policy))


def log_psi(n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    n2 = n.scale(2)
    q = n.q
    return log_qpoch_inf(n2.q, n2, policy) - log_qpoch_inf(q, n2, policy)


def ramanujan_psi(n: LogNome, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """``psi(q) = (q^2; q^2)_inf / (q; q^2)_inf``."""
    return _exp(log_psi(n, policy))

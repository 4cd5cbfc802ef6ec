import cmath
import math
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from qident.kernel import (PI, Branch, DomainError, LogNome, TruncationPolicy, TruncationWarning,
                           classical_gamma, lemniscate_a, nome_from_q, nome_from_tau, nome_power,
                           truncation_terms)


@pytest.mark.parametrize("tau, log_q", [
    (1j, -PI),
    (2j, -2 * PI),
    (1 + 2j, -2 * PI + 1j * PI),
])
def test_nome_from_tau(tau, log_q):
    assert cmath.isclose(nome_from_tau(tau).log_q, log_q, abs_tol=1e-15)


def test_nome_from_q_principal_and_real_root():
    assert nome_from_q(0.25).log_q == pytest.approx(math.log(0.25))
    q = -math.exp(-2 * PI)
    p = nome_from_q(q)
    r = nome_from_q(q, "real_root")
    assert p.log_q == pytest.approx(complex(-2 * PI, PI))
    assert r.log_q == p.log_q
    assert r.branch is Branch.REAL_ROOT and r.is_negative_real


def test_signed_zero_negative_q_lands_on_plus_pi():
    n = nome_from_q(complex(-0.3, -0.0))
    assert n.log_q.imag == pytest.approx(PI)


@pytest.mark.parametrize("bad", [0, 1, -1, 1.5, 2j])
def test_nome_from_q_rejects_outside_disc(bad):
    with pytest.raises(DomainError):
        nome_from_q(bad)


@pytest.mark.parametrize("tau", [0, 1, 1 - 0.5j])
def test_nome_from_tau_rejects_lower_half_plane(tau):
    with pytest.raises(DomainError):
        nome_from_tau(tau)


def test_lognome_rejects_nonnegative_real_part():
    with pytest.raises(DomainError):
        LogNome(0.1)


def test_nome_power_examples():
    assert nome_power(nome_from_q(math.exp(-PI)), 0.25) == pytest.approx(math.exp(-PI / 4))
    q = -math.exp(-2 * PI)
    assert nome_power(nome_from_q(q), 0.5) == pytest.approx(1j * math.exp(-PI))
    assert nome_power(nome_from_q(q, "real_root"), 0.5) == pytest.approx(-math.exp(-PI))


def test_real_root_keeps_integer_powers_exact():
    q = -0.3
    n = nome_from_q(q, "real_root")
    assert nome_power(n, 2) == pytest.approx(0.09)
    assert nome_power(n, 3) == pytest.approx(-0.027)
    assert n.power(2).q == pytest.approx(0.09)


def test_power_under_real_root_stays_negative():
    n = nome_from_q(-math.exp(-2 * PI), "real_root")
    half = n.power(0.5)
    assert half.q == pytest.approx(-math.exp(-PI))
    assert half.power(0.5).q == pytest.approx(-math.exp(-PI / 2))


def test_nome_power_overflow_gives_inf():
    assert math.isinf(nome_power(nome_from_q(0.5), -5000).real)


def test_tau_prime_of_i_is_i():
    n = nome_from_tau(1j)
    assert n.tau_prime().log_q == pytest.approx(n.log_q)
    assert n.tau_prime().tau() == pytest.approx(-1 / n.tau())


@given(st.floats(0.05, 0.95), st.floats(-3, 3), st.floats(-3, 3))
def test_nome_power_additive(r, a, b):
    n = nome_from_q(r)
    assert cmath.isclose(nome_power(n, a + b), nome_power(n, a) * nome_power(n, b), rel_tol=1e-12)


@given(st.floats(-2, 2), st.floats(0.05, 5))
def test_tau_round_trip(re, im):
    tau = complex(re, im)
    assert cmath.isclose(nome_from_tau(tau).tau(), tau, rel_tol=1e-13, abs_tol=1e-13)


def test_truncation_terms_examples():
    # 2 * 0.5^N / 0.5 < 1e-15 first holds at N = 52
    assert truncation_terms(0.5) == 52
    assert 4 * 0.5 ** 52 < 1e-15 < 4 * 0.5 ** 51
    assert truncation_terms(1e-300) == 1
    n = truncation_terms(0.99, TruncationPolicy(1e-12))
    assert 3000 < n < 3500
    assert truncation_terms(0.5, coeff_mag=0) == 0


@pytest.mark.parametrize("r", [0.1, 0.5, 0.9, 0.999])
@pytest.mark.parametrize("c", [0.5, 1.0, 3.0])
def test_truncation_terms_is_minimal(r, c):
    eps = 1e-15
    n = truncation_terms(r, TruncationPolicy(eps, 10 ** 8), c)
    ok = lambda k: 2 * c * r ** k / (1 - r) < eps and c * r ** k <= 0.5
    assert ok(n)
    assert n == 0 or not ok(n - 1)


@given(st.floats(0.01, 0.98), st.floats(0.01, 0.98))
def test_truncation_terms_monotone_in_modulus(a, b):
    lo, hi = sorted((a, b))
    pol = TruncationPolicy(1e-15, 10 ** 9)
    assert truncation_terms(lo, pol) <= truncation_terms(hi, pol)


def test_truncation_cap_warns():
    with pytest.warns(TruncationWarning):
        assert truncation_terms(0.9999, TruncationPolicy(1e-15, 100)) == 100


@pytest.mark.parametrize("eps, terms", [(0, 10), (-1, 10), (1e-15, 0)])
def test_policy_validation(eps, terms):
    with pytest.raises(ValueError):
        TruncationPolicy(eps, terms)


def test_classical_gamma():
    assert classical_gamma(1) == 1
    assert classical_gamma(0.5) == pytest.approx(math.sqrt(PI), rel=1e-15)
    # reflection: Gamma(1/4) Gamma(3/4) = pi sqrt 2
    assert classical_gamma(0.25) * classical_gamma(0.75) == pytest.approx(PI * math.sqrt(2), rel=1e-14)
    assert lemniscate_a() == pytest.approx(PI ** 0.25 / classical_gamma(0.75))
    with pytest.raises(DomainError):
        classical_gamma(0)

"""The identity registry: R1..R29, each a grid plus a two-sided evaluator.

Evaluators take one grid point (a dict of plain parameters) and a truncation
policy and return ``(lhs, rhs)``. Limit claims return the extrapolated value
of the q-side against the classical value.
"""
from __future__ import annotations

import cmath
import itertools
import math
from typing import Callable

import numpy as np

from .. import arithfn, qgamma, qseries, qtrig, theta
from ..kernel import PI, Branch, LogNome, TruncationPolicy, classical_gamma, lemniscate_a, nome_from_q
from .model import Category, CheckResult, GridSpec, IdentityCase, NomeSpec

LIMIT_STEPS = (1e-2, 1e-3, 1e-4)
LIMIT_TOL = 1e-3

THETA_TAUS = [1j, 2j, 0.5 + 1j, 1.2j, -0.3 + 0.8j, 0.25 + 1.5j]
THETA_Z = [0.3, 0.7 + 0.2j, -1.1 + 0.1j, 2.0, 0.5 - 0.3j, 1.3 + 0.4j,
           -0.4, 0.9 + 0.5j, 2.6 - 0.2j, -2.2 + 0.3j, 0.15 + 0.05j, 1.7]
REAL_Q = [0.1, 0.3, 0.5, 0.7, 0.9]
FINE_Q = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]


def taus(values) -> list:
    return [NomeSpec(tau=complex(t)) for t in values]


def product_points(grid: GridSpec, *axes: str) -> list:
    """Cartesian product over the named axes, in the given order.

    ``"nome"`` walks ``grid.q_values``, ``"z"`` walks ``grid.z_values``, any
    other name walks ``grid.integer_params[name]``.
    """
    columns = []
    for axis in axes:
        if axis == "nome":
            columns.append(grid.q_values)
        elif axis == "z":
            columns.append(grid.z_values)
        else:
            columns.append(grid.integer_params.get(axis, []))
    return [dict(zip(axes, combo)) for combo in itertools.product(*columns)]


def extrapolate(hs, values) -> complex:
    """Polynomial (Neville) extrapolation of ``values(h)`` to ``h = 0``."""
    hs = list(hs)
    p = [complex(v) for v in values]
    for level in range(1, len(hs)):
        for i in range(len(hs) - level):
            p[i] = (hs[i + level] * p[i] - hs[i] * p[i + 1]) / (hs[i + level] - hs[i])
    return p[0]


def limit_value(fn: Callable[[LogNome], complex], steps=LIMIT_STEPS) -> complex:
    return extrapolate(steps, [fn(nome_from_q(1 - h)) for h in steps])


# --- theta family -----------------------------------------------------------

def _r1(p, pol):
    n = p["nome"].nome()
    return theta.theta1_series(p["z"], n, pol), theta.theta1_product(p["z"], n, pol)


def _r2_points(grid):
    pts = [dict(law=law, **pt) for law in ("pi_shift", "odd", "tau_shift")
           for pt in product_points(grid, "nome", "z")]
    pts += [dict(law="zero", **pt) for pt in product_points(grid, "nome", "k")]
    return pts


def _r2(p, pol):
    n = p["nome"].nome()
    law = p["law"]
    if law == "zero":
        return theta.theta1(p["k"] * PI, n, pol), 0j
    z = p["z"]
    base = theta.theta1(z, n, pol)
    if law == "pi_shift":
        return theta.theta1(z + PI, n, pol), -base
    if law == "odd":
        return theta.theta1(-z, n, pol), -base
    shifted = theta.theta1(z + PI * n.tau(), n, pol)
    return shifted, -cmath.exp(-n.log_q - 2j * z) * base


def _r3(p, pol):
    n = p["nome"].nome()
    k, z = p["k"], p["z"]
    nk = n.scale(1 / k)
    lhs = theta.theta1(z + PI * n.tau(), nk, pol)
    return lhs, (-1) ** k * cmath.exp(-k * n.log_q - 2j * k * z) * theta.theta1(z, nk, pol)


def _r4(p, pol):
    n = p["nome"].nome()
    return theta.theta1_at_tau_prime(p["z"], n, pol), theta.imaginary_transform_rhs(p["z"], n, pol)


FD_STEP = 1e-5


def _central_difference(f, h=FD_STEP):
    return (f(h) - f(-h)) / (2 * h)


def _r5_points(grid):
    return [dict(route=route, **pt) for route in ("fd", "fd_tau_prime", "tau_prime")
            for pt in product_points(grid, "nome")]


def _r5(p, pol):
    n = p["nome"].nome()
    route = p["route"]
    if route == "fd":
        return _central_difference(lambda h: theta.theta1(h, n, pol)), theta.theta1_prime0(n, pol)
    if route == "fd_tau_prime":
        tp = n.tau_prime()
        fd = _central_difference(lambda h: theta.theta1(h, tp, pol))
        return fd, theta.theta1_prime0_at_tau_prime(n, pol)
    return theta.theta1_prime0(n.tau_prime(), pol), theta.theta1_prime0_at_tau_prime(n, pol)


def _r6(p, pol):
    return qtrig.jacobi_product_sides(p["z"], p["m"], p["nome"].nome(), pol)


def _r7(p, pol):
    n = p["nome"].nome()
    return qtrig.sine_product_lhs(p["z"], p["m"], n, pol), qtrig.sine_product_rhs(p["z"], p["m"], n, pol)


def _r8(p, pol):
    return qtrig.theta_sine_product_sides(p["z"], p["m"], p["nome"].nome(), pol)


# --- q-series and q-gamma ---------------------------------------------------

def _r9_points(grid):
    return [dict(identity=i, **pt) for i in ("q2_split", "q_split", "neg_inverse", "neg_split")
            for pt in product_points(grid, "nome")]


def _r9(p, pol):
    n = p["nome"].nome()
    q = n.q
    n2 = n.scale(2)
    lp = lambda a, base: qseries.log_qpoch_inf(a, base, pol)
    ident = p["identity"]
    if ident == "q2_split":
        lhs, rhs = lp(n2.q, n2), lp(q, n) + lp(-q, n)
    elif ident == "q_split":
        lhs, rhs = lp(q, n), lp(n2.q, n2) + lp(q, n2)
    elif ident == "neg_inverse":
        lhs, rhs = lp(-q, n), -lp(q, n2)
    else:
        lhs, rhs = lp(-q, n), lp(-n2.q, n2) + lp(-q, n2)
    return qseries._exp(lhs), qseries._exp(rhs)


def _r10_points(grid):
    return [dict(form=f, **pt) for f in ("f_ratio", "psi") for pt in product_points(grid, "nome")]


def _r10(p, pol):
    n = p["nome"].nome()
    direct = qgamma.q_gamma(0.5, n, pol)
    if p["form"] == "psi":
        return direct, qgamma.q_gamma_half(n, pol)
    log_f = 2 * qseries.log_f_neg(n, pol) - qseries.log_f_neg(n.power(0.5), pol)
    return direct, qseries._exp(log_f) * cmath.sqrt(1 - n.q)


def _r11_points(grid):
    return [dict(route=r, **pt) for r in ("sin", "cos", "cos_shift") for pt in product_points(grid, "nome", "z")]


def _r11(p, pol):
    n = p["nome"].nome()
    x = p["z"]
    route = p["route"]
    if route == "sin":
        return qtrig.sin_q_gamma(x, n, pol), qtrig.sin_q_theta(PI * x, n, pol)
    if route == "cos":
        return qtrig.cos_q_gamma(x, n, pol), qtrig.cos_q_theta(PI * x, n, pol)
    return qtrig.cos_q_theta(PI * x, n, pol), qtrig.sin_q_theta(PI * x + PI / 2, n, pol)


def _r12(p, pol):
    n = p["nome"].nome()
    fd = _central_difference(lambda h: qtrig.sin_q_theta(h, n, pol))
    return fd, qtrig.sin_q_prime0(n, pol)


def _r13(p, pol):
    return qgamma.jackson_sides(p["z"], p["m"], p["nome"].nome(), pol)


def _r14(p, pol):
    n = p["nome"].nome()
    return qgamma.gauss_product_direct(p["m"], n, pol), qgamma.gauss_product_closed(p["m"], n, pol)


def _r15(p, pol):
    lhs, good, _ = qgamma.base_power_product_sides(p["z"].real, p["m"], p["nome"].nome(), pol)
    return lhs, good


def _r16(p, pol):
    n = p["nome"].nome()
    return (qgamma.shifted_product_direct(p["z"], p["m"], n, pol),
            qgamma.shifted_product_closed(p["z"], p["m"], n, pol))


def _r17(p, pol):
    lhs, _, bad = qgamma.base_power_product_sides(p["z"].real, p["m"], p["nome"].nome(), pol)
    return lhs, bad


def _r18_points(grid):
    return [dict(form=f, **pt) for f in ("moebius", "mangoldt") for pt in product_points(grid, "nome", "m")]


def _r18(p, pol):
    n = p["nome"].nome()
    first, second = arithfn.pq_closed(p["m"], n, pol)
    return arithfn.pq_direct(p["m"], n, pol), first if p["form"] == "moebius" else second


def _r19(p, pol):
    m = p["m"]
    return limit_value(lambda n: arithfn.q_von_mangoldt(m, n, pol)), arithfn.von_mangoldt(m)


# --- explicit values and branch conventions --------------------------------

def _convention_points(grid, *axes):
    """Negative real nomes are tried under both branch rules; others once."""
    pts = []
    for pt in product_points(grid, "nome", *axes):
        spec = pt["nome"]
        if spec.q is not None and complex(spec.q).imag == 0 and complex(spec.q).real < 0:
            for b in Branch:
                pts.append({**pt, "nome": spec.with_branch(b)})
        else:
            pts.append(pt)
    return pts


def _is_trial(row: CheckResult) -> bool:
    spec = row.params["nome"]
    return spec.q is not None and complex(spec.q).imag == 0 and complex(spec.q).real < 0


def select_convention(rows: list) -> tuple:
    """Keep the negative-q rows of the branch rule that matches best.

    Ties (including no matches at all) go to ``real_root``.
    """
    trials = [r for r in rows if _is_trial(r)]
    if not trials:
        return rows, []
    score = {b: sum(r.passed for r in trials if r.params["nome"].branch == b) for b in Branch}
    total = {b: sum(1 for r in trials if r.params["nome"].branch == b) for b in Branch}
    best = Branch.REAL_ROOT if score[Branch.REAL_ROOT] >= score[Branch.PRINCIPAL] else Branch.PRINCIPAL
    kept = [r for r in rows if not _is_trial(r) or r.params["nome"].branch == best]
    notes = [f"negative-q convention {b.value}: {score[b]}/{total[b]} points match" for b in Branch]
    if score[best] == total[best]:
        notes.append(f"convention identified: {best.value}")
    else:
        notes.append(f"no convention reproduces every negative-q value; reporting {best.value}")
    return kept, notes


def _r20(p, pol):
    n = p["nome"].nome()
    k = p["k"]
    return arithfn.pq_direct(2 ** k, n, pol), arithfn.pq_two_power(k, n, pol)


def _psi_constants():
    a = lemniscate_a()
    e = math.exp
    s2 = math.sqrt(2)
    return {
        "psi(e^-pi)": (-PI, a * 2 ** (-5 / 8) * e(PI / 8)),
        "psi(e^-2pi)": (-2 * PI, a * 2 ** (-5 / 4) * e(PI / 4)),
        "psi(e^-pi/2)": (-PI / 2, a * 2 ** (-7 / 16) * (s2 + 1) ** 0.25 * e(PI / 16)),
        "psi(-e^-pi)": (-PI + 1j * PI, a * 2 ** (-3 / 4) * e(PI / 8)),
        "psi(-e^-2pi)": (-2 * PI + 1j * PI, a * 2 ** (-15 / 16) * e(PI / 4)),
        "psi(-e^-pi/2)": (-PI / 2 + 1j * PI, a * 2 ** (-7 / 16) * e(PI / 16) * (s2 - 1) ** 0.25),
    }


PSI_CONSTANTS = _psi_constants()


def _r21_points(grid):
    return [dict(constant=name) for name in PSI_CONSTANTS]


def _r21(p, pol):
    log_q, closed = PSI_CONSTANTS[p["constant"]]
    return qseries.ramanujan_psi(LogNome(complex(log_q)), pol), closed


def _gamma_examples():
    a = lemniscate_a()
    e = math.exp
    s2 = math.sqrt(2)
    quarter = (0.25, 0.75)
    eighth = (0.125, 0.375, 0.625, 0.875)
    return {
        "ex1_q=e^-2pi": (e(-2 * PI), quarter, (1 - e(-2 * PI)) * a ** 2 * 2 ** (-17 / 16) * e(3 * PI / 16) * (s2 + 1) ** 0.25),
        "ex1_q=e^-4pi": (e(-4 * PI), quarter, (1 - e(-4 * PI)) * a ** 2 * 2 ** (-15 / 8) * e(3 * PI / 8)),
        "ex1_q=-e^-2pi": (-e(-2 * PI), quarter, (1 + e(-2 * PI)) * a ** 2 * 2 ** (-19 / 16) * e(3 * PI / 16)),
        "ex1_q=-e^-4pi": (-e(-4 * PI), quarter, (1 + e(-4 * PI)) * a ** 2 * 2 ** (-27 / 16) * e(3 * PI / 8)),
        "ex2_q=e^-4pi": (e(-4 * PI), eighth, (1 - e(-4 * PI)) ** 2 * a ** 4 * 2 ** (-57 / 16) * e(11 * PI / 16) * (s2 + 1) ** 0.25),
        "ex2_q=-e^-4pi": (-e(-4 * PI), eighth, (1 + e(-4 * PI)) ** 2 * a ** 4 * 2 ** (-49 / 16) * e(11 * PI / 16)),
    }


GAMMA_EXAMPLES = _gamma_examples()


def _r22_points(grid):
    pts = []
    for name, (q, _, _) in GAMMA_EXAMPLES.items():
        if q < 0:
            pts += [dict(example=name, nome=NomeSpec(q=q, branch=b)) for b in Branch]
        else:
            pts.append(dict(example=name, nome=NomeSpec(q=q)))
    return pts


def _r22(p, pol):
    _, args, closed = GAMMA_EXAMPLES[p["example"]]
    n = p["nome"].nome()
    lhs = qseries._exp(sum(qgamma.log_q_gamma(x, n, pol) for x in args))
    return lhs, closed


# --- master identity and limits --------------------------------------------

MASTER_DRAWS = 20
MASTER_MIN_GAP = 1e-3


def _r23_points(grid):
    rng = np.random.default_rng(grid.seed)
    pts = []
    for spec in grid.q_values:
        small_t = spec.nome().tau_prime()
        for m in grid.integer_params.get("m", []):
            parity = qtrig.case_parity(m)
            small = small_t.scale(1 / m)
            drawn = 0
            while drawn < MASTER_DRAWS:
                xs = rng.uniform(-1.5, 1.5, m + 1) + 1j * rng.uniform(-0.3, 0.3, m + 1)
                gaps = [abs(theta.theta1(xs[j] - xs[k], small)) for j in range(m + 1) for k in range(m + 1) if j != k]
                if gaps and min(gaps) < MASTER_MIN_GAP:
                    continue
                pts.append(dict(nome=spec, m=m, parity=parity, draw=drawn,
                                xs=tuple(complex(round(x.real, 12), round(x.imag, 12)) for x in xs)))
                drawn += 1
    return pts


def _r23(p, pol):
    return qtrig.master_identity_residual(p["m"], p["xs"], p["parity"], p["nome"].nome(), pol), 0j


def _r24(p, pol):
    return qtrig.sin_product_at_nodes_sides(p["m"], p["nome"].nome(), pol)


def _r25(p, pol):
    m = p["m"]
    lim = limit_value(lambda n: qseries._exp(qtrig.log_key_limit_ratio(m, n, pol)))
    return lim, 2 ** ((m - 1) / 2) / math.sqrt(m)


def _r26_points(grid):
    return [dict(route=r, **pt) for r in ("classical", "q_limit", "node_formula")
            for pt in product_points(grid, "m")]


def _r26(p, pol):
    m = p["m"]
    target = m / 2 ** (m - 1)
    if p["route"] == "classical":
        return math.prod(math.sin(k * PI / m) for k in range(1, m)), target
    if p["route"] == "q_limit":
        return limit_value(lambda n: qtrig.sin_q_nodes_product(m, n, pol)), target
    # closed side of the node product, base q^(1/m) so that sin_{q^m} -> sin_q
    return limit_value(lambda n: qtrig.sin_product_at_nodes_sides(m, n.scale(1 / m), pol)[1]), target


def _r27_points(grid):
    return [dict(m=m) for m in grid.integer_params.get("m", [])] + [dict(m=0)]


def _r27(p, pol):
    m = p["m"]
    if m == 0:  # Gamma_q(1/2) -> sqrt(pi)
        return limit_value(lambda n: qgamma.q_gamma_half(n, pol)), math.sqrt(PI)
    lim = limit_value(lambda n: qgamma.gauss_product_direct(m, n, pol))
    return lim, (2 * PI) ** ((m - 1) / 2) / math.sqrt(m)


def _r28_points(grid):
    return [dict(route=r, **pt) for r in ("classical", "q_limit") for pt in product_points(grid, "m")]


def _r28(p, pol):
    m = p["m"]
    target = arithfn.classical_pq(m)
    if p["route"] == "classical":
        return math.prod(classical_gamma(k / m) for k in range(1, m + 1) if math.gcd(k, m) == 1), target
    return limit_value(lambda n: arithfn.pq_direct(m, n, pol)), target


def _r29(p, pol):
    return arithfn.two_power_induction_sides(p["k"], p["nome"].nome(), pol)


# --- registry ---------------------------------------------------------------

def _case(id, description, formula, category, domain, points, evaluate, tol=1e-9, **kw):
    return IdentityCase(id=id, description=description, formula=formula, category=category,
                        domain=domain, points=points, evaluate=evaluate,
                        tol_abs=kw.pop("tol_abs", tol), tol_rel=kw.pop("tol_rel", tol), **kw)


def _axes(*axes):
    return lambda grid: product_points(grid, *axes)


FI, LC, EC = Category.FINITE_IDENTITY, Category.LIMIT_CLAIM, Category.EXPLICIT_CONSTANT
MULT_GRID = GridSpec(taus([1j, 0.5 + 1j]), [0.4, 0.2 + 0.1j, -0.7 + 0.05j, 1.1 - 0.2j], {"m": range(1, 7)})
GAMMA_GRID = GridSpec([0.3, 0.5, 0.7], [0.2, 0.37, 0.5 + 0.1j], {"m": range(1, 6)})


def build_registry() -> dict:
    cases = [
        _case("R1", "theta_1 series equals triple product",
              "2 sum (-1)^k q^((2k+1)^2/4) sin((2k+1)z) = i q^(1/4) e^(-iz) (q^2 e^(-2iz), e^(2iz), q^2; q^2)",
              FI, GridSpec(taus(THETA_TAUS), THETA_Z), _axes("nome", "z"), _r1, tol=1e-12),
        _case("R2", "theta_1 zeros, oddness, pi and pi*tau quasi-periods",
              "theta_1(k pi) = 0; theta_1(z+pi) = theta_1(-z) = -theta_1(z); theta_1(z+pi tau) = -q^-1 e^(-2iz) theta_1(z)",
              FI, GridSpec(taus(THETA_TAUS), THETA_Z[:6], {"k": range(-2, 3)}), _r2_points, _r2, tol=1e-10),
        _case("R3", "pi*tau shift at parameter tau/k",
              "theta_1(z + pi tau | tau/k) = (-1)^k q^-k e^(-2kiz) theta_1(z | tau/k)",
              FI, GridSpec(taus(THETA_TAUS), THETA_Z[:4], {"k": range(1, 5)}), _axes("nome", "k", "z"), _r3, tol=1e-10),
        _case("R4", "imaginary transformation",
              "theta_1(z | -1/tau) = -i (-i tau)^(1/2) e^(i tau z^2/pi) theta_1(z tau | tau)",
              FI, GridSpec(taus(THETA_TAUS), THETA_Z), _axes("nome", "z"), _r4, tol=1e-10),
        _case("R5", "theta_1'(0) at tau and -1/tau against finite differences",
              "theta_1'(0|tau) = 2 q^(1/4) (q^2;q^2)^3; theta_1'(0|-1/tau) = (-i tau)^(3/2) theta_1'(0|tau)",
              FI, GridSpec(taus(THETA_TAUS)), _r5_points, _r5, tol=1e-7),
        _case("R6", "Jacobi multiplication formula",
              "(q^2m;q^2m)/(q^2;q^2)^m prod_{k=0}^{m-1} theta_1(z + k pi/m | tau) = theta_1(mz | m tau)",
              FI, MULT_GRID, _axes("nome", "m", "z"), _r6),
        _case("R7", "Gosper q-sine product",
              "prod_k sin_{q^m}(pi(z + k/m)) = q^((m^2-1)/12) (q;q^2)^2/(q^m;q^2m)^2m sin_q(m pi z)",
              FI, MULT_GRID, _axes("nome", "m", "z"), _r7),
        _case("R8", "q-sine product in theta form at tau'/m",
              "prod_k theta_1(z + k pi/m | tau'/m) = C theta_1(pi/2|tau'/m)^m / theta_1(pi/2|tau') theta_1(mz|tau')",
              FI, MULT_GRID, _axes("nome", "m", "z"), _r8),
        _case("R9", "four elementary q-Pochhammer identities",
              "(q^2;q^2) = (q;q)(-q;q); (q;q) = (q^2;q^2)(q;q^2); (-q;q) = 1/(q;q^2); (-q;q) = (-q^2;q^2)(-q;q^2)",
              FI, GridSpec(FINE_Q + [0.5j, -0.6, 0.4 + 0.3j, cmath.rect(0.8, 2.0)]), _r9_points, _r9, tol=1e-12),
        _case("R10", "Gamma_q(1/2) closed forms",
              "Gamma_q(1/2) = f(-q)^2/f(-q^(1/2)) sqrt(1-q) = psi(q^(1/2)) sqrt(1-q)",
              FI, GridSpec(FINE_Q + [0.95]), _r10_points, _r10, tol=1e-12),
        _case("R11", "q-sine and q-cosine by gamma and theta routes",
              "sin_q(pi x) = q^(1/4) Gamma_{q^2}(1/2)^2 q^(x(x-1)) / (Gamma_{q^2}(x) Gamma_{q^2}(1-x)); cos_q(z) = sin_q(z + pi/2)",
              FI, GridSpec(REAL_Q, [0.3, 0.2, 0.45 + 0.1j, 0.7 - 0.05j]), _r11_points, _r11, tol=1e-10),
        _case("R12", "derivative of sin_q at zero",
              "sin_q'(0) = -(2 ln q/pi) q^(1/4) psi(q)^2",
              FI, GridSpec(FINE_Q), _axes("nome"), _r12, tol=1e-7),
        _case("R13", "Jackson q-multiplication formula",
              "((1-q^m)/(1-q))^(mz-1) prod_k Gamma_{q^m}(z + k/m) = Gamma_q(mz) prod_{k=1}^{m-1} Gamma_{q^m}(k/m)",
              FI, GAMMA_GRID, _axes("nome", "m", "z"), _r13, tol=1e-10),
        _case("R14", "q-analogue of the Gauss product",
              "prod_{k=1}^{m-1} Gamma_q(k/m) = Gamma_q(1/2)^(m-1) f(-q^(1/2))^(m-1) / (f(-q)^(m-2) f(-q^(1/m)))",
              FI, GridSpec(FINE_Q, [], {"m": range(1, 9)}), _axes("nome", "m"), _r14, tol=1e-10),
        _case("R15", "shifted product with base q^m",
              "prod_k Gamma_{q^m}((x+k)/m) = (q^m;q^m)^m (1-q^m)^((m-1)/2)/(q;q) ((1-q^m)/(1-q))^(1-x) Gamma_q(x)",
              FI, GridSpec([0.3, 0.5, 0.7], [0.5, 1.0, 1.7], {"m": range(1, 6)}), _axes("nome", "m", "z"), _r15, tol=1e-10),
        _case("R16", "shifted product with base q",
              "prod_k Gamma_q(z + k/m) = (q;q)^m (1-q)^((m-1)/2)/(p;p) ((1-q)/(1-p))^(1-mz) Gamma_p(mz), p = q^(1/m)",
              FI, GridSpec([0.3, 0.5, 0.7], [0.2, 0.37, 0.7, 0.5 + 0.1j], {"m": range(1, 6)}), _axes("nome", "m", "z"), _r16, tol=1e-10),
        _case("R17", "shifted product with a (1-q)^((m-1)/2) factor is wrong",
              "prod_k Gamma_{q^m}((x+k)/m) != (q^m;q^m)^m (1-q)^((m-1)/2)/(q;q) ((1-q^m)/(1-q))^(1-x) Gamma_q(x)",
              FI, GridSpec([0.3, 0.5, 0.7], [0.5, 1.0, 1.7], {"m": range(2, 6)}), _axes("nome", "m", "z"), _r17,
              tol=1e-3, expect_fail=True),
        _case("R18", "P_q(m) by Moebius and q-von Mangoldt forms",
              "P_q(m) = Gamma_q(1/2)^phi (q^(1/2);q)^phi / prod_{d|m} f(-q^(1/d))^mu(m/d) = (2 Gamma_q(1/2)^2)^(phi/2) e^(-Lambda_q(m)/2)",
              FI, GridSpec(REAL_Q, [], {"m": range(1, 31)}), _r18_points, _r18, tol=1e-10),
        _case("R19", "Lambda_q(m) tends to Lambda(m)",
              "lim_{q->1} Lambda_q(m) = Lambda(m)",
              LC, GridSpec([], [], {"m": [2, 3, 4, 5, 6, 8]}), _axes("m"), _r19, tol=LIMIT_TOL),
        _case("R20", "P_q(2^k) as a product of psi values",
              "P_q(2^k) = (1-q)^(2^(k-2)) psi(q^(1/2^k)) prod_{j=1}^{k-1} psi(q^(1/2^j))^(2^(k-1-j))",
              FI, GridSpec(REAL_Q + [-math.exp(-2 * PI), -math.exp(-4 * PI), -0.3], [], {"k": [2, 3, 4]}),
              lambda g: _convention_points(g, "k"), _r20, tol=1e-10, select=select_convention),
        _case("R21", "explicit psi values",
              "psi(e^-pi) = a 2^(-5/8) e^(pi/8), ..., a = pi^(1/4)/Gamma(3/4)",
              EC, GridSpec(), _r21_points, _r21, tol=1e-10),
        _case("R22", "explicit Gamma_q products at q = +-e^(-2pi), +-e^(-4pi)",
              "Gamma_q(1/4) Gamma_q(3/4) and prod_{k odd} Gamma_q(k/8) in closed form",
              EC, GridSpec(), _r22_points, _r22, tol=1e-10, select=select_convention),
        _case("R23", "(m+1)-point theta_1 identity",
              "sum_j theta_1((m-1)x_j - sum_{k!=j} x_k | T) f(x_j) / prod_{k!=j} theta_1(x_j - x_k | T/m) = 0",
              FI, GridSpec(taus([1j, 1.2j]), [], {"m": range(1, 5)}, seed=20240607), _r23_points, _r23,
              tol_abs=1e-8, tol_rel=1e-8),
        _case("R24", "q-sine product at the nodes k pi/m",
              "prod_{k=1}^{m-1} sin_{q^m}(k pi/m) = q^((m-1)(m-2)/12) (q^2;q^2)^2 / ((q^m;q^2m)^(2m-2) (q^2m;q^2m)^2)",
              FI, GridSpec(FINE_Q, [], {"m": range(1, 7)}), _axes("nome", "m"), _r24, tol=1e-10),
        _case("R25", "key limit of a Pochhammer ratio",
              "lim (q;q^2)^(m-1) (q^2;q^2) / (q^(2/m);q^(2/m)) = 2^((m-1)/2)/sqrt(m)",
              LC, GridSpec([], [], {"m": [2, 3, 4, 5]}), _axes("m"), _r25, tol=LIMIT_TOL),
        _case("R26", "classical sine product and its q-analogue",
              "prod_{k=1}^{m-1} sin(k pi/m) = m/2^(m-1) = lim prod sin_q(k pi/m)",
              LC, GridSpec([], [], {"m": [2, 3, 4, 5, 6]}), _r26_points, _r26, tol=LIMIT_TOL),
        _case("R27", "Gauss product limit",
              "lim prod_{k=1}^{m-1} Gamma_q(k/m) = (2 pi)^((m-1)/2)/sqrt(m); lim Gamma_q(1/2) = sqrt(pi)",
              LC, GridSpec([], [], {"m": [2, 3, 4, 5, 6]}), _r27_points, _r27, tol=LIMIT_TOL),
        _case("R28", "P(m) classical value and q-limit",
              "prod_{gcd(k,m)=1} Gamma(k/m) = (2 pi)^(phi/2) e^(-Lambda(m)/2) = lim P_q(m)",
              LC, GridSpec([], [], {"m": [3, 4, 6, 8]}), _r28_points, _r28, tol=LIMIT_TOL),
        _case("R29", "induction step for P_q(2^k)",
              "(q;q)^(2^(k-1)) / (q^(1/2^k); q^(1/2^(k-1))) = psi(q^(1/2^k)) prod_j psi(q^(1/2^j))^(2^(k-1-j))",
              FI, GridSpec(FINE_Q, [], {"k": [2, 3, 4]}), _axes("nome", "k"), _r29, tol=1e-11),
    ]
    return {c.id: c for c in cases}


REGISTRY = build_registry()

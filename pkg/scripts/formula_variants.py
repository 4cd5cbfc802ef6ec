"""Show that each formula holds and a nearby variant of it does not."""
import numpy as np

from qident.arithfn import pq_direct, pq_second_form_unsquared
from qident.kernel import nome_from_q, nome_from_tau
from qident.qgamma import base_power_product_residuals, jackson_residual
from qident.qtrig import jacobi_product_sides, master_identity_residual, case_parity


def row(label, good, bad):
    print(f"{label:<48} holds {abs(good):9.2e}   variant {abs(bad):9.2e}")


def main():
    n = nome_from_q(0.5)
    for m in (2, 3, 4):
        row(f"Jackson, Gamma_q(mz) vs Gamma_(q^m)(mz), m={m}",
            jackson_residual(0.37, m, n), jackson_residual(0.37, m, n, rhs_base_qm=True))
    for m in (2, 3):
        good, bad = base_power_product_residuals(0.5, m, n)
        row(f"shifted product (1-q^m) vs (1-q) factor, m={m}", good, bad)
    for m in (2, 3, 6):
        direct = pq_direct(m, n)
        row(f"P_q second form squared vs unsquared, m={m}", 0, pq_second_form_unsquared(m, n) - direct)
    tau = nome_from_tau(0.5 + 1j)
    for m in (2, 3, 4):
        lhs, rhs = jacobi_product_sides(0.2 + 0.1j, m, tau)
        slhs, srhs = jacobi_product_sides(0.2 + 0.1j, m, tau, offsets="symmetric")
        row(f"Jacobi product k=0..m-1 vs symmetric, m={m}", lhs - rhs, slhs - srhs)
    rng = np.random.default_rng(0)
    for m in (1, 2, 3, 4):
        xs = rng.uniform(-1.5, 1.5, m + 1) + 1j * rng.uniform(-0.3, 0.3, m + 1)
        right = case_parity(m)
        wrong = "even_f" if right == "odd_f" else "odd_f"
        row(f"(m+1)-point identity {right} vs {wrong}, m={m}",
            master_identity_residual(m, xs, right, nome_from_tau(1j)),
            master_identity_residual(m, xs, wrong, nome_from_tau(1j)))


if __name__ == "__main__":
    main()

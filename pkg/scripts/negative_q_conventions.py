"""Compare the two fractional-power rules for negative real nomes.

For each negative nome, print Gamma_q(1/4) Gamma_q(3/4) under both rules
next to the psi product it should equal and the quoted closed form.
"""
import math

from qident.arithfn import pq_direct, pq_two_power
from qident.kernel import Branch, LogNome, nome_from_q
from qident.qseries import ramanujan_psi
from qident.verify.registry import GAMMA_EXAMPLES, PSI_CONSTANTS


def main():
    print("psi at negative nomes (principal log of -e^-x):")
    for name, (log_q, closed) in PSI_CONSTANTS.items():
        if name.startswith("psi(-"):
            value = ramanujan_psi(LogNome(complex(log_q))).real
            print(f"  {name:<14} computed {value:.15f}  quoted {closed:.15f}  ratio {value / closed:.12f}")

    print("\nGamma_q products:")
    for name, (q, args, closed) in GAMMA_EXAMPLES.items():
        k = 2 if len(args) == 2 else 3
        for branch in (Branch.PRINCIPAL, Branch.REAL_ROOT) if q < 0 else (Branch.PRINCIPAL,):
            n = nome_from_q(q, branch)
            direct = pq_direct(2 ** k, n)
            psi_form = pq_two_power(k, n)
            print(f"  {name:<15} {branch.value:<10} product {direct:.12g}")
            print(f"  {'':<15} {'':<10} psi form {psi_form:.12g}  quoted {closed:.12g}")
    ratio = (math.sqrt(2) - 1) ** 0.25
    print(f"\n(sqrt2 - 1)^(1/4) = {ratio:.12f}")


if __name__ == "__main__":
    main()

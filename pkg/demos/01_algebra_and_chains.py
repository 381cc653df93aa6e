"""Arithmetic in L = R[e]/(e^3), points of P(L), and chains through three points.

Run: python3 demos/01_algebra_and_chains.py
"""

from laguerre3 import EPS, ProjPoint, Ternion, chain_through, is_parallel
from laguerre3.ternion import ideal_class


def show_nf(chain):
    coeffs = ", ".join(f"{k}={v}" for k, v in chain.normal_form.coefficients().items() if v)
    print(f"  kind {chain.kind.value}, normal form [{coeffs or 'all zero'}]")
    print(f"  improper point {chain.improper_point}")


x = Ternion.parse("2 + 3 e + e2")
y = Ternion(1, 1)
print("x =", x, "  y =", y)
print("x * y =", x * y)
print("1 / y =", y.inverse(), "  check:", y * y.inverse())
print("e^3 =", EPS**3)
for z in (x, 3 * EPS, EPS * EPS, Ternion(0)):
    print(f"  {z} lies in class {ideal_class(z).value}")

# Two points are parallel when their difference is not invertible.
p, q = ProjPoint.proper(Ternion(1, 2)), ProjPoint.proper(Ternion(1, 5, 7))
print("\nparallel(L(1+2e), L(1+5e+7e2)):", is_parallel(p, q))

triples = [
    ("0", "1 + e", "2 + 2e"),
    ("0", "1 + e", "-1 - e + e2"),
    ("0", "1 + e", "-1 + e"),
]
for triple in triples:
    print(f"\nchain through {' | '.join(triple)}:")
    show_nf(chain_through(*(ProjPoint.proper(Ternion.parse(z)) for z in triple)))

"""Contact of twisted cubics at f = (0, 0, 0, 1) and the three collineation types.

A flag-preserving collineation A moves the canonical cubic C to C^A. Both
curves pass through f; the series G1, G2 measure how closely they agree.

Run: python3 demos/02_contact_and_types.py
"""

from laguerre3 import (
    Collineation4,
    classify_type,
    contact_order_at_f,
    contact_series,
    factor_I12,
    gamma1,
    gamma2,
    sigma,
    sym_cube,
    unique_collineation,
)

examples = {
    "sigma(1)": sigma(1),
    "gamma1(1)": gamma1(1),
    "gamma2(1)": gamma2(1),
    "diag(1, 2, 4, 8)": Collineation4.elementary({(1, 1): 2, (2, 2): 4, (3, 3): 8}),
    "diag(1, 2, 2, 2)": Collineation4.elementary({(1, 1): 2, (2, 2): 2, (3, 3): 2}),
}
for name, a in examples.items():
    print(f"{name:18} order {contact_order_at_f(a)!s:4} type {classify_type(a)}")
    for line in str(contact_series(a)).splitlines():
        print(f"{'':18} {line}")

print("\nthe one-parameter groups are additive:")
print("  gamma1(2) gamma1(3) == gamma1(5):", gamma1(2) @ gamma1(3) == gamma1(5))

print("\nfactorizing gamma1(3) as a type I.1.2 collineation:")
for name, m in factor_I12(gamma1(3))._asdict().items():
    off = {f"a{i}{j}": str(m[i, j]) for i in range(4) for j in range(4) if i != j and m[i, j]}
    print(f"  {name:14} {off}")

# Reparametrizing C gives the same curve; exactly one representative has the chosen type.
b = sym_cube([[2, 1], [0, 1]]) @ gamma2(1)
print("\nB = sym_cube(m) gamma2(1) has type", classify_type(b))
print("unique type I representative is gamma2(1):", unique_collineation(b, "I") == gamma2(1))

"""Improper points of chains, admissible curves, and touching chains.

Run: python3 demos/03_improper_points_and_touching.py
"""

from laguerre3 import (
    NormalForm,
    PolyCurve,
    chain_from_normal_form,
    chains_touch,
    gamma1,
    gamma2,
    is_admissible_cubic,
    is_admissible_parabola,
    projective_extension,
)
from laguerre3.bridge import improper_point_paths

print("improper points of the normal forms:")
for nf in (NormalForm.line(1, 2), NormalForm.parabola(3), NormalForm.cubic(2, a12=1, a23=5)):
    print(f"  {nf.kind.value:15} -> {nf.improper_point()}")

print("\nwhich polynomial curves in L are proper parts of chains?")
for coeffs in ([0, 1, "e2"], [0, 1, "e"], [0, 1, "e", "e2"], [0, 1, "e", "2 e2"], [0, 1, "2e", "4e2"]):
    curve = PolyCurve.of(*coeffs)
    test = is_admissible_parabola if curve.degree == 2 else is_admissible_cubic
    print(f"  z(t) = {' + '.join(f'({c}) t^{k}' for k, c in enumerate(coeffs))}: {test(curve)}")

# Two parabolas share their improper point exactly when their e2 coefficients of t^2 agree.
p1 = chain_from_normal_form(NormalForm.parabola(1))
p2 = chain_from_normal_form(NormalForm.parabola(1, a12=4, a03=-2))
p3 = chain_from_normal_form(NormalForm.parabola(2))
print("\nsame improper point, parabolas a33 = 1 and a33 = 1 (shifted):", improper_point_paths(p1, p2))
print("same improper point, parabolas a33 = 1 and a33 = 2:", improper_point_paths(p1, p3))

base = projective_extension(NormalForm.cubic(1)).collineation
c = chain_from_normal_form(NormalForm.cubic(1))


def moved(g):
    return chain_from_normal_form(PolyCurve.from_matrix(g @ base).normal_form())


print("\ncubic parabolas touch when the related twisted cubics have contact order >= 4:")
print("  C vs gamma2(1) C:", chains_touch(c, moved(gamma2(1))))
print("  C vs gamma1(1) C:", chains_touch(c, moved(gamma1(1))))

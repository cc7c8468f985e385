"""
A single wall for M(0,1,-1)
===========================

For curves in the primitive class there is one wall between the Hilbert
scheme and the Beauville-Mukai system, so only two birational models.
"""

from fractions import Fraction

from bmwalls import all_walls, n1_report, oracle_walls

# The catalogue gives one wall at Gamma = 2d/(2d+1).
for d in range(1, 7):
    (w,) = all_walls(1, d)
    print(f"d={d}: Gamma = {w.gamma}")

# A brute-force scan over every (r, c, s) with entries up to 40 agrees.
for d in range(1, 7):
    found = [str(w.gamma) for w in oracle_walls(1, d, Fraction(0), Fraction(1), 40)]
    print(f"d={d}: scan finds {found}")

# The wall meets the line x = -1 at y^2 = 1/d.
report = n1_report(3)
step = report.steps[0]
print(f"\nd=3 models: {[m.name for m in report.models]}")
print(f"crossing at x = {step.path_x}, t = y^2 = {step.crossing_t}")
print("Brill-Noether strata v' = m(1,0,1) + remainder:")
for m, rest in step.strata:
    print(f"  m={m}: {rest}")

"""
The flop chain for M(0,2,-1) on a K3 of degree 10
==================================================

Walk down the line x = -2 from the Hilbert scheme, then down x = 0 from the
Beauville-Mukai system, and record every flop on the way.
"""

from bmwalls import build_chain
from bmwalls.render import chain_table

# d = 5 is the first degree with a rank-two wall on both sides.
report = build_chain(5)
print(chain_table(report))

# Each flop replaces a projective bundle; its codimension is at least two.
for s in report.steps:
    if s.exc is None:
        print(f"{s.label}: stratified flop at the Brill-Noether wall, "
              f"{len(s.strata)} strata")
        continue
    bases = ", ".join(f"M{b.vector} (dim {b.dim}{', ' + b.note if b.note else ''})"
                      for b in s.exc.base_components)
    print(f"{s.label}: P^{s.exc.fiber_dim} over {bases}; codim {s.exc.codim}")

# The model counts for the first six degrees.
print("\nN_d:", [build_chain(d).N for d in range(1, 7)])

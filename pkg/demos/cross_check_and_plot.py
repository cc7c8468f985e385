"""
Cross-checking the catalogue and drawing the walls
==================================================

The closed-form catalogue is compared against an exhaustive numpy scan, and
the walls are written out as nested semicircles.
"""

import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from bmwalls import all_walls, oracle_walls
from bmwalls.render import walls_svg

# Catalogue versus brute force, box of size 10d.
for d in range(1, 13):
    start = time.perf_counter()
    scan = [w.gamma for w in oracle_walls(2, d, Fraction(0), Fraction(1, 2), 10 * d)]
    cat = [w.gamma for w in all_walls(2, d)]
    print(f"d={d:2d}: {len(cat):2d} walls, agree={cat == scan}, "
          f"scan {time.perf_counter() - start:.2f}s")

# Gamma values as floats, to see how the walls crowd towards 1/2.
gammas = np.array([float(w.gamma) for w in all_walls(2, 8)])
print("\nd=8 gaps between consecutive walls:", np.round(np.diff(gammas), 4))

# Semicircles in both frames.
out = Path("walls_d5")
out.mkdir(exist_ok=True)
for frame in ("hilbert", "bm"):
    path = out / f"{frame}.svg"
    path.write_text(walls_svg(all_walls(2, 5), 2, 5, frame))
    print(f"wrote {path}")

"""
Where rank-two walls appear
===========================

Rank-one walls come from twisted ideal sheaves.  From degree 6 upward a
rank-two wall shows up on the Hilbert side; from degree 10 on the other side.
"""

from bmwalls import (
    apply,
    flopping_check,
    flopping_check_bm,
    gamma_from_vector,
    gamma_from_vector_bm,
    make_wall,
    phi_inverse,
)
from bmwalls.chain import crossing_parameter

print(f" d   {'(2,-3,4d+2)':<30}(2,1,2) in the bm frame")
for d in range(1, 10):
    a = (2, -3, 4 * d + 2)
    left = "-"
    if flopping_check(a, 2, d):
        w = make_wall([a], 2, d)
        _, t = crossing_parameter(w, 2, d)
        left = f"Gamma {gamma_from_vector(a, 2, d)}, rank {w.rank}, t {t}"
    right = "-"
    if flopping_check_bm((2, 1, 2), 2, d):
        w = make_wall([apply(phi_inverse(2, d), (2, 1, 2))], 2, d)
        _, t = crossing_parameter(w, 2, d)
        right = f"Gamma {gamma_from_vector_bm((2, 1, 2), 2, d)}, rank {w.rank}, t {t}"
    print(f"{d:2d}   {left:<30}{right}")

# At d = 7 more rank-two walls slot in between rank-one ones.
d = 7
g = gamma_from_vector((2, -3, 32), 2, d)
print(f"\nd=7: {gamma_from_vector((1, -1, 2), 2, d)} < {g} < {gamma_from_vector((1, -1, 1), 2, d)}")
g = gamma_from_vector_bm((2, 1, 3), 2, d)
print(f"d=7: {gamma_from_vector_bm((1, 1, 1), 2, d)} < {g} < {gamma_from_vector_bm((1, 1, 2), 2, d)}")

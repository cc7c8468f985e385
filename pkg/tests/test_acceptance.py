"""The ten acceptance criteria, at their stated tolerances (all exact)."""

import time
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bmwalls import (
    MukaiVector as V,
    all_walls,
    apply,
    build_chain,
    crossing_parameter,
    dual,
    flopping_check,
    flopping_check_bm,
    gamma_from_vector,
    gamma_from_vector_bm,
    hilbert_vector,
    make_wall,
    merge_walls,
    oracle_walls,
    pairing,
    phi,
    phi_inverse,
    rank_one_catalog_bm,
    semicircle,
    twist,
)
from bmwalls.verify import check_tss

pytestmark = pytest.mark.filterwarnings("ignore::bmwalls.IncompleteCatalogWarning")

DEGREES = range(1, 13)
PROPERTY = settings(max_examples=1000, deadline=None)


def c(num, text):
    return pytest.mark.criterion(num, text)


def bm_wall(u, n, d):
    return make_wall([apply(phi_inverse(n, d), u)], n, d)


# 1 ---------------------------------------------------------------------------


@c(1, "model counts N_d = 5, 7, 10, 12, 15, 17 for d = 1..6")
def test_model_count_table():
    assert [build_chain(d).N for d in range(1, 7)] == [5, 7, 10, 12, 15, 17]


# 2 ---------------------------------------------------------------------------


@c(2, "n=1: the brute-force scan finds only Gamma = 2d/(2d+1), d = 1..6, under 5 s")
def test_n1_single_wall():
    start = time.perf_counter()
    found = {d: [w.gamma for w in oracle_walls(1, d, F(0), F(1), 40)] for d in range(1, 7)}
    elapsed = time.perf_counter() - start
    assert found == {d: [F(2 * d, 2 * d + 1)] for d in range(1, 7)}
    assert elapsed < 5


# 3 ---------------------------------------------------------------------------


@c(3, "d=7 rank-two walls 21/44 and 49/99 sit between their rank-one neighbours")
def test_d7_landmarks():
    d = 7
    g = gamma_from_vector(V(2, -3, 32), 2, d)
    assert g == F(21, 44)
    assert gamma_from_vector(V(1, -1, 2), 2, d) < g < gamma_from_vector(V(1, -1, 1), 2, d)
    gb = gamma_from_vector_bm(V(2, 1, 3), 2, d)
    assert gb == F(49, 99)
    assert gamma_from_vector_bm(V(1, 1, 1), 2, d) < gb < gamma_from_vector_bm(V(1, 1, 2), 2, d)
    gammas = {w.gamma for w in all_walls(2, d)}
    assert {g, gb} <= gammas


# 4 ---------------------------------------------------------------------------


@c(4, "rank-two thresholds: (2,-3,4d+2) from d = 3, (2,1,2) from d = 5, both of rank 2")
@pytest.mark.parametrize("d", DEGREES)
def test_rank_two_thresholds(d):
    a = V(2, -3, 4 * d + 2)
    assert flopping_check(a, 2, d) == (d >= 3)
    if d >= 3:
        assert make_wall([a], 2, d).rank == 2
    b = V(2, 1, 2)
    assert flopping_check_bm(b, 2, d) == (d >= 5)
    if d >= 5:
        assert bm_wall(b, 2, d).rank == 2


# 5 ---------------------------------------------------------------------------


@c(5, "extremal walls are the rank-one walls (1,-1,d+1) and, on the bm side, (1,1,d)")
@pytest.mark.parametrize("d", range(1, 7))
def test_extremal_walls(d):
    walls = all_walls(2, d)
    assert walls[0].gamma == gamma_from_vector(V(1, -1, d + 1), 2, d)
    assert walls[-1].gamma == gamma_from_vector_bm(V(1, 1, d), 2, d)


def largest_bm_vector(n, d):
    if n % 2 == 0:
        h = n // 2
        return V(1, h, d * h * h)
    h = (n - 1) // 2
    return V(1, h, d * h * h + 1)


@c(5, "extremal walls are the rank-one walls (1,-1,d+1) and, on the bm side, (1,1,d)")
@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("d", range(1, 5))
def test_largest_bm_rank_one_wall(n, d):
    top = max(w.gamma for w in rank_one_catalog_bm(n, d))
    assert top == gamma_from_vector_bm(largest_bm_vector(n, d), n, d)


# 6 ---------------------------------------------------------------------------


@c(6, "catalogue and brute-force scan (box 10d) agree for d = 1..12")
@pytest.mark.parametrize("d", DEGREES)
def test_oracle_equivalence(d):
    cat = [w.gamma for w in all_walls(2, d)]
    ora = [w.gamma for w in oracle_walls(2, d, F(0), F(1, 2), 10 * d)]
    assert cat == ora


# 7 ---------------------------------------------------------------------------


@c(7, "crossing values 2k/d, (2k+1)/(2d), 4/(3d), 5/(4d)")
@pytest.mark.parametrize("d", DEGREES)
def test_crossing_formulas(d):
    for k in range(1, d + 2):
        assert crossing_parameter(make_wall([V(1, -1, k)], 2, d), 2, d) == (-2, F(2 * k, d))
    for k in range(1, d + 1):
        assert crossing_parameter(bm_wall(V(1, 1, k), 2, d), 2, d) == (0, F(2 * k + 1, 2 * d))
    if d >= 3:
        w = make_wall([V(2, -3, 4 * d + 2)], 2, d)
        assert crossing_parameter(w, 2, d) == (-2, F(4, 3 * d))
    if d >= 5:
        assert crossing_parameter(bm_wall(V(2, 1, 2), 2, d), 2, d) == (0, F(5, 4 * d))


# 8 ---------------------------------------------------------------------------


def steps_by_summand(report):
    return {s.decomposition[0]: s for s in report.steps if s.exc is not None}


@c(8, "exceptional loci: fibres 3d, 2d+k-1, 2d+5, 2d+9 with the expected bases; codim >= 2")
@pytest.mark.parametrize("d", DEGREES)
def test_exceptional_loci(d):
    report = build_chain(d)
    by = steps_by_summand(report)
    dims = lambda s: [b.dim for b in s.exc.base_components]

    top = by[V(1, -1, d + 1)]
    assert top.decomposition[1] == V(0, 1, -5 * d - 1)
    assert top.exc.fiber_dim == 3 * d and dims(top) == [0, 2 * d + 2]
    assert top.exc.codim == 3 * d
    for k in range(1, d + 1):
        s = by[V(1, -1, k)]
        assert s.decomposition[1] == V(0, 1, -4 * d - k)
        assert s.exc.fiber_dim == 2 * d + k - 1
        assert dims(s) == [2 * (d + 1 - k), 2 * d + 2]
    for k in range(1, d + 1):
        s = by[V(1, 1, k)]
        assert s.decomposition[1] == V(-1, 1, -k - 1)
        assert s.exc.fiber_dim == 2 * d + 2 * k
    if d >= 3:
        s = by[V(2, -3, 4 * d + 2)]
        assert s.decomposition[1] == V(-1, 3, -8 * d - 2)
        assert s.exc.fiber_dim == 2 * d + 5
        assert dims(s) == [2 * d - 6, 2 * d - 2]
    if d >= 5:
        s = by[V(2, 1, 2)]
        assert s.decomposition[1] == V(-2, 1, -3)
        assert s.exc.fiber_dim == 2 * d + 9
        assert dims(s) == [2 * d - 6, 2 * d - 10]
    assert all(s.exc.codim >= 2 for s in report.steps if s.exc is not None)


# 9 ---------------------------------------------------------------------------


@c(9, "no totally-semistable witness within coefficient bound 50 on either path, d = 1..6 (bounded)")
@pytest.mark.parametrize("d", range(1, 7))
def test_no_tss_witness(d):
    result = check_tss(2, d, bound=50)
    assert result.passed, result.payload


# 10 --------------------------------------------------------------------------

ints = st.integers(-60, 60)
vectors = st.builds(V, ints, ints, ints)
degrees = st.integers(1, 12)
ranks = st.integers(1, 6)


@c(10, "property suite, 1000 cases each")
@PROPERTY
@given(vectors, vectors, vectors, st.integers(-9, 9), degrees)
def test_pairing_bilinear_symmetric(u, w, x, k, d):
    assert pairing(u, w, d) == pairing(w, u, d)
    assert pairing(u + k * w, x, d) == pairing(u, x, d) + k * pairing(w, x, d)


@c(10, "property suite, 1000 cases each")
@PROPERTY
@given(vectors, vectors, ranks, degrees, st.integers(-9, 9))
def test_isometries_preserve_pairing(u, w, n, d, k):
    for f in (lambda x: apply(phi(n, d), x), lambda x: apply(phi_inverse(n, d), x),
              dual, lambda x: twist(x, k, d)):
        assert pairing(f(u), f(w), d) == pairing(u, w, d)
    assert apply(phi(n, d), apply(phi_inverse(n, d), u)) == u


@c(10, "property suite, 1000 cases each")
@PROPERTY
@given(vectors, ranks, degrees, st.integers(-20, 20))
def test_gamma_shift_and_sign_invariance(a, n, d, k):
    v = hilbert_vector(n, d)
    try:
        g = gamma_from_vector(a, n, d)
    except ValueError:
        return
    assert gamma_from_vector(-a, n, d) == g
    assert gamma_from_vector(a + k * v, n, d) == g


def strictly_inside(inner, outer):
    """Disk of ``inner`` lies strictly within the disk of ``outer`` (exact test)."""
    r1, r2 = outer.radius_sq, inner.radius_sq
    gap = r1 + r2 - (outer.center_x - inner.center_x) ** 2
    return r1 > r2 and gap > 0 and gap * gap > 4 * r1 * r2


fractions = st.fractions(min_value=F(1, 1000), max_value=F(999, 1000), max_denominator=1000)


@c(10, "property suite, 1000 cases each")
@PROPERTY
@given(fractions, fractions, ranks, degrees)
def test_semicircle_nesting(p, q, n, d):
    g1, g2 = sorted((p / n, q / n))
    if g1 == g2:
        return
    assert strictly_inside(semicircle(g2, n, d, "hilbert"), semicircle(g1, n, d, "hilbert"))
    assert strictly_inside(semicircle(g1, n, d, "bm"), semicircle(g2, n, d, "bm"))


@c(10, "property suite, 1000 cases each")
@PROPERTY
@given(st.permutations(
    [make_wall([u], 3, 1) for u in [(1, -1, 2), (1, -1, 1), (1, -2, 5), (1, -1, -2), (1, -2, 4)]]
))
def test_duplicate_gamma_merges(walls):
    merged = merge_walls(walls)
    dup = [w for w in merged if w.gamma == F(2, 7)]
    assert len(merged) == 4 and len(dup) == 1
    assert dup[0].vectors == (V(1, -2, 5), V(1, -1, -2))
    assert dup[0] in all_walls(3, 1)

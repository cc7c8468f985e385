import pytest
from hypothesis import given
from hypothesis import strategies as st

from bmwalls.lattice import (
    IDENTITY,
    MukaiVector as V,
    apply,
    bm_vector,
    content,
    dual,
    hilbert_vector,
    is_isotropic,
    is_multiple,
    is_primitive,
    is_spherical,
    moduli_dim,
    pairing,
    phi,
    phi_inverse,
    primitive_part,
    square,
    twist,
)

ints = st.integers(-10**6, 10**6)
vectors = st.builds(V, ints, ints, ints)
degrees = st.integers(1, 50)
ranks = st.integers(1, 10)


def test_pairing_examples():
    assert pairing((-1, 2, -5), (1, 0, -4), 1) == 1
    assert pairing((1, 0, -4), (1, 0, -4), 1) == 8
    assert pairing((0, 0, 1), (7, -3, 11), 5) == -7


def test_square_examples():
    assert square((1, 0, 1), 1) == -2
    assert square((0, 0, 1), 4) == 0
    assert square((2, -3, 14), 3) == -2


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("d", range(1, 8))
def test_special_classes(n, d):
    assert is_spherical((-1, n, -d * n * n - 1), d)
    assert not is_spherical((1, 0, -4 * d), d)
    assert is_isotropic((0, 0, -1), d)
    assert apply(phi(n, d), hilbert_vector(n, d)) == bm_vector(n)
    assert apply(phi_inverse(n, d), (1, 0, 1)) == (-1, n, -d * n * n - 1)
    assert phi(n, d) @ phi_inverse(n, d) == IDENTITY
    assert phi_inverse(n, d) @ phi(n, d) == IDENTITY


@pytest.mark.parametrize("d", range(1, 8))
def test_phi_one_sends_class_to_point(d):
    assert apply(phi(1, d), (-1, 1, -d)) == (0, 0, 1)


def test_dual_and_twist_examples():
    assert dual((2, 1, 3)) == (-2, 1, -3)
    for d in range(1, 6):
        for k in range(1, d + 2):
            assert twist((1, -1, k), 2, d) == (1, 1, k)


def test_primitive_part():
    assert primitive_part((2, -6, 10)) == (1, -3, 5)
    assert primitive_part((-2, 6, -10)) == (1, -3, 5)
    assert primitive_part((0, -4, 6)) == (0, 2, -3)
    assert is_primitive((1, 0, -4 * 3))
    with pytest.raises(ValueError):
        primitive_part((0, 0, 0))


@pytest.mark.parametrize("d", range(1, 8))
def test_moduli_dim(d):
    assert moduli_dim((0, 1, -5 * d - 1), d) == 2 * d + 2
    assert moduli_dim((-1, 2, -4 * d - 1), d) == 0
    assert moduli_dim((1, 0, -4 * d), d) == 8 * d + 2
    with pytest.raises(ValueError):
        moduli_dim((2, 0, -8 * d), d)


def test_moduli_dim_rejects_negative_square():
    with pytest.raises(ValueError):
        moduli_dim((1, 0, 3), 1)


def test_scalar_multiplication_is_not_repetition():
    assert 3 * V(1, -1, 2) == V(3, -3, 6)
    assert V(1, -1, 2) * -1 == V(-1, 1, -2)
    assert str(V(1, -1, 2)) == "(1,-1,2)"


def test_is_multiple():
    assert is_multiple((2, 0, -8), (1, 0, -4))
    assert is_multiple((0, 0, 0), (1, 0, -4))
    assert not is_multiple((2, 1, -8), (1, 0, -4))


@given(vectors, vectors, vectors, st.integers(-100, 100), degrees)
def test_pairing_bilinear(u, w, x, k, d):
    assert pairing(u, w, d) == pairing(w, u, d)
    assert pairing(u + w, x, d) == pairing(u, x, d) + pairing(w, x, d)
    assert pairing(k * u, x, d) == k * pairing(u, x, d)


@given(vectors, degrees)
def test_squares_even(u, d):
    assert square(u, d) % 2 == 0


@given(vectors, vectors, ranks, degrees, st.integers(-30, 30))
def test_isometries(u, w, n, d, k):
    for m in (phi(n, d), phi_inverse(n, d)):
        assert pairing(apply(m, u), apply(m, w), d) == pairing(u, w, d)
        assert abs(m.det()) == 1
    assert pairing(dual(u), dual(w), d) == pairing(u, w, d)
    assert pairing(twist(u, k, d), twist(w, k, d), d) == pairing(u, w, d)
    assert dual(dual(u)) == u
    assert twist(twist(u, k, d), -k, d) == u
    assert twist(u, 0, d) == u


@given(vectors.filter(any))
def test_primitive_part_divides_content(u):
    p = primitive_part(u)
    assert is_primitive(p)
    assert content(u) * p in (u, -u)

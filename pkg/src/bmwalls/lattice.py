"""Integer arithmetic on the algebraic Mukai lattice of a Picard-rank-one K3.

Vectors are triples ``(r, c, s)`` against the basis ``(1, H, pt)`` with
``H^2 = 2d``.  The degree never lives in the vector, only in the pairing,
so every class can be written literally, e.g. ``(2, -3, 4*d + 2)``.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, NamedTuple


class MukaiVector(NamedTuple):
    """A Mukai vector ``(r, c, s)``.

    Arithmetic is componentwise; ``k * u`` is scalar multiplication (not
    tuple repetition).
    """

    r: int
    c: int
    s: int

    def __add__(self, other):  # type: ignore[override]
        return MukaiVector(self.r + other[0], self.c + other[1], self.s + other[2])

    def __sub__(self, other):
        return MukaiVector(self.r - other[0], self.c - other[1], self.s - other[2])

    def __neg__(self):
        return MukaiVector(-self.r, -self.c, -self.s)

    def __mul__(self, k):  # type: ignore[override]
        return MukaiVector(k * self.r, k * self.c, k * self.s)

    __rmul__ = __mul__

    def __str__(self):
        return f"({self.r},{self.c},{self.s})"


def vec(u: Iterable[int]) -> MukaiVector:
    r, c, s = u
    return MukaiVector(int(r), int(c), int(s))


def _check_degree(d: int) -> None:
    if d < 1:
        raise ValueError(f"degree parameter d must be >= 1, got {d}")


def pairing(u, w, d: int) -> int:
    """Mukai pairing ``2d c c' - r s' - r' s``."""
    return 2 * d * u[1] * w[1] - u[0] * w[2] - w[0] * u[2]


def square(u, d: int) -> int:
    return pairing(u, u, d)


def is_spherical(u, d: int) -> bool:
    return square(u, d) == -2


def is_isotropic(u, d: int) -> bool:
    return square(u, d) == 0


def hilbert_vector(n: int, d: int) -> MukaiVector:
    """``v = (1, 0, -d n^2)``, the class of an ideal sheaf of ``d n^2 + 1`` points."""
    return MukaiVector(1, 0, -d * n * n)


def bm_vector(n: int) -> MukaiVector:
    """``v' = (0, n, -1)``, the Beauville-Mukai class."""
    return MukaiVector(0, n, -1)


class IsometryMatrix(NamedTuple):
    """3x3 integer matrix acting on column vectors ``(r, c, s)``."""

    rows: tuple

    def __matmul__(self, other):
        if isinstance(other, IsometryMatrix):
            cols = list(zip(*other.rows))
            return IsometryMatrix(tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            ))
        return apply(self, other)

    def det(self) -> int:
        (a, b, c), (d_, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d_ * i - f * g) + c * (d_ * h - e * g)


IDENTITY = IsometryMatrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def phi(n: int, d: int) -> IsometryMatrix:
    """Action on cohomology of ``T_{O(-n)}`` followed by ``- (x) O(n)``.

    Sends ``v = (1, 0, -dn^2)`` to ``v' = (0, n, -1)``.
    """
    return IsometryMatrix((
        (-d * n * n, -2 * d * n, -1),
        (n, 1, 0),
        (-1, 0, 0),
    ))


def phi_inverse(n: int, d: int) -> IsometryMatrix:
    return IsometryMatrix((
        (0, 0, -1),
        (0, 1, n),
        (-1, -2 * d * n, -d * n * n),
    ))


def apply(m: IsometryMatrix, u) -> MukaiVector:
    return MukaiVector(*(row[0] * u[0] + row[1] * u[1] + row[2] * u[2] for row in m.rows))


def dual(u) -> MukaiVector:
    """Numerical shadow of ``E -> RHom(E, O)[1]``: ``(r, c, s) -> (-r, c, -s)``."""
    return MukaiVector(-u[0], u[1], -u[2])


def twist(u, k: int, d: int) -> MukaiVector:
    """Tensor by ``O(k)``: ``(r, c, s) -> (r, c + rk, s + 2dkc + dk^2 r)``."""
    r, c, s = u
    return MukaiVector(r, c + r * k, s + 2 * d * k * c + d * k * k * r)


def content(u) -> int:
    return gcd(gcd(abs(u[0]), abs(u[1])), abs(u[2]))


def is_primitive(u) -> bool:
    return content(u) == 1


def primitive_part(u) -> MukaiVector:
    """Divide out the content; the first nonzero entry is made positive."""
    g = content(u)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    p = MukaiVector(u[0] // g, u[1] // g, u[2] // g)
    lead = next(x for x in p if x != 0)
    return -p if lead < 0 else p


def moduli_dim(u, d: int) -> int:
    """Dimension ``u^2 + 2`` of the moduli space of a primitive class."""
    if not is_primitive(u):
        raise ValueError(f"{tuple(u)} is not primitive")
    sq = square(u, d)
    if sq < -2:
        raise ValueError(f"{tuple(u)} has square {sq} < -2; moduli space is empty")
    return sq + 2


def is_multiple(u, w) -> bool:
    """True iff ``u`` is an integer multiple of the nonzero vector ``w``."""
    g = content(w)
    prim = MukaiVector(w[0] // g, w[1] // g, w[2] // g)
    i = next(j for j in range(3) if prim[j] != 0)
    if u[i] % prim[i]:
        return False
    k = u[i] // prim[i]
    return tuple(u) == tuple(prim * k)


def cross(u, w) -> MukaiVector:
    """Euclidean cross product of the coordinate triples (not a lattice operation)."""
    return MukaiVector(
        u[1] * w[2] - u[2] * w[1],
        u[2] * w[0] - u[0] * w[2],
        u[0] * w[1] - u[1] * w[0],
    )


def det3(u, w, x) -> int:
    return IsometryMatrix((tuple(u), tuple(w), tuple(x))).det()

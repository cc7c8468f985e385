"""Exact geometry of the ``(x, t = y^2)`` slice of geometric stability conditions.

Everything is rational: ``y`` only ever enters through ``y^2``, so it is
never materialised.  Imaginary parts are reported as the coefficient of
``y`` (``Im Z = y * im_coeff``), whose sign is all that phase arguments use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, NamedTuple

from .lattice import apply, hilbert_vector, is_multiple, phi_inverse

Frame = Literal["hilbert", "bm"]
FRAMES = ("hilbert", "bm")


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PlanePoint:
    x: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _q(self.x))
        object.__setattr__(self, "t", _q(self.t))
        if self.t <= 0:
            raise ValueError(f"t = y^2 must be positive, got {self.t}")


class CentralCharge(NamedTuple):
    re: Fraction
    im_coeff: Fraction


@dataclass(frozen=True)
class Semicircle:
    center_x: Fraction
    radius_sq: Fraction

    def __post_init__(self):
        if self.radius_sq <= 0:
            raise ValueError("semicircle needs a positive squared radius")

    def contains(self, p: PlanePoint) -> bool:
        return (p.x - self.center_x) ** 2 + p.t == self.radius_sq


def central_charge(u, p: PlanePoint, d: int) -> CentralCharge:
    """``Z_{xH, yH}(u) = (e^{(x + iy)H}, u)`` split as ``re + i y im_coeff``."""
    r, c, s = u
    x, t = p.x, p.t
    re = 2 * d * c * x - s - r * d * (x * x - t)
    return CentralCharge(re, 2 * d * (c - r * x))


def im_coeff_at(u, x, d: int) -> Fraction:
    """``im_coeff`` of ``Z(u)`` on the vertical line through ``x`` (independent of t)."""
    return 2 * d * (u[1] - u[0] * _q(x))


def is_geometric_guaranteed(p: PlanePoint, d: int) -> bool:
    """Sufficient condition ``y > 1/sqrt(d)`` for ``sigma_{x,y}`` to exist.

    Not necessary: the true boundary depends on all spherical sheaves, and
    for irrational ``x`` every ``y > 0`` works.  Walls are treated as loci in
    the plane regardless of this test.
    """
    return d * p.t > 1


def gamma_from_vector(a, n: int, d: int) -> Fraction:
    """Position of the wall spanned by ``v`` and ``a`` on the ray ``H~ - Gamma B``.

    Determined by ``H~ - Gamma B`` being orthogonal to both ``v`` and ``a``.
    """
    v = hilbert_vector(n, d)
    if not any(a) or is_multiple(a, v):
        raise ValueError(f"degenerate defining vector {tuple(a)}: multiple of v")
    den = d * n * n * a[0] + a[2]
    if den == 0:
        raise ValueError(f"Gamma undefined (wall at infinity) for {tuple(a)}")
    return Fraction(-2 * d * a[1], den)


def gamma_from_vector_bm(a, n: int, d: int) -> Fraction:
    """Gamma of the wall for ``v'`` spanned by ``v'`` and the bm-frame vector ``a``."""
    return gamma_from_vector(apply(phi_inverse(n, d), a), n, d)


def gamma_zero(n: int, d: int) -> Fraction:
    """Gamma of the Brill-Noether wall."""
    return Fraction(2 * d * n, 2 * d * n * n + 1)


def semicircle(gamma, n: int, d: int, frame: Frame = "hilbert") -> Semicircle:
    gamma = _q(gamma)
    if not 0 < gamma < Fraction(1, n):
        raise ValueError(f"Gamma = {gamma} lies outside the movable cone (0, 1/{n})")
    inv = 1 / gamma
    if frame == "hilbert":
        return Semicircle(-inv, inv * inv - n * n)
    if frame == "bm":
        c = Fraction(1, 2 * d * n)
        return Semicircle(-c, c * c + 1 / (2 * d * d * n * (inv - n)))
    raise ValueError(f"unknown frame {frame!r}")


def crossing_t(sc: Semicircle, x) -> Fraction:
    """Value of ``t = y^2`` where the vertical line through ``x`` meets ``sc``."""
    t = sc.radius_sq - (_q(x) - sc.center_x) ** 2
    if t <= 0:
        raise ValueError(f"line misses wall: x = {x} is outside the semicircle")
    return t


def path_x(n: int, frame: Frame) -> Fraction:
    """Vertical line used for wall-crossing in the given frame."""
    return Fraction(-n) if frame == "hilbert" else Fraction(0)

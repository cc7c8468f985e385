"""Construction, enumeration and classification of flopping walls.

A wall is identified by its reduced ``Gamma`` in ``(0, 1/n)``; all the
defining vectors that produce the same ``Gamma`` are merged onto one
:class:`Wall`.  Defining vectors are stored in the Hilbert frame (the frame
of ``v = (1, 0, -dn^2)``); Beauville-Mukai frame images are derived through
``phi(n, d)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Iterator, Literal

import numpy as np

from .lattice import (
    MukaiVector,
    apply,
    content,
    cross,
    hilbert_vector,
    is_multiple,
    is_primitive,
    pairing,
    phi,
    phi_inverse,
    square,
    vec,
)
from .plane import (
    Frame,
    Semicircle,
    gamma_from_vector,
    gamma_zero,
    semicircle,
)

Side = Literal["hilbert", "middle", "bm"]


class RankUndeterminedError(RuntimeError):
    pass


class IncompleteCatalogWarning(UserWarning):
    """Raised (as a warning) for ``n >= 3``, where only rank-one walls are known."""


def catalog_complete(n: int) -> bool:
    """Whether :func:`all_walls` is known to return every wall for this rank."""
    return n in (1, 2)


def side_of(gamma: Fraction, n: int, d: int) -> Side:
    g0 = gamma_zero(n, d)
    if gamma < g0:
        return "hilbert"
    if gamma > g0:
        return "bm"
    return "middle"


@dataclass(frozen=True)
class Wall:
    gamma: Fraction
    n: int
    d: int
    vectors: tuple  # primitive Hilbert-frame MukaiVectors, sorted
    side: Side

    @property
    def bm_vectors(self) -> tuple:
        m = phi(self.n, self.d)
        return tuple(apply(m, u) for u in self.vectors)

    def vectors_in(self, frame: Frame) -> tuple:
        return self.vectors if frame == "hilbert" else self.bm_vectors

    @cached_property
    def semicircle_h(self) -> Semicircle:
        return semicircle(self.gamma, self.n, self.d, "hilbert")

    @cached_property
    def semicircle_bm(self) -> Semicircle:
        return semicircle(self.gamma, self.n, self.d, "bm")

    def semicircle(self, frame: Frame) -> Semicircle:
        return self.semicircle_h if frame == "hilbert" else self.semicircle_bm

    @cached_property
    def lattice(self) -> "LatticeBasis":
        return lattice_basis(self.vectors[0], self.n, self.d)

    @cached_property
    def rank(self) -> int:
        return wall_rank(self, self.n, self.d)


def make_wall(vectors, n: int, d: int) -> Wall:
    """Build a wall from Hilbert-frame vectors that must all share one Gamma."""
    vs = sorted({vec(u) for u in vectors})
    if not vs:
        raise ValueError("a wall needs at least one defining vector")
    gammas = {gamma_from_vector(u, n, d) for u in vs}
    if len(gammas) != 1:
        raise ValueError(f"vectors {vs} define different walls: {sorted(gammas)}")
    (gamma,) = gammas
    if not 0 < gamma < Fraction(1, n):
        raise ValueError(f"Gamma = {gamma} is not inside the movable cone")
    return Wall(gamma, n, d, tuple(vs), side_of(gamma, n, d))


def merge_walls(walls) -> list[Wall]:
    """Union walls with equal Gamma; result sorted by ascending Gamma."""
    by_gamma: dict = {}
    for w in walls:
        by_gamma.setdefault((w.gamma, w.n, w.d), set()).update(w.vectors)
    return [make_wall(vs, n, d) for (g, n, d), vs in sorted(by_gamma.items())]


# -- flopping criteria -------------------------------------------------------


def flopping_check(a, n: int, d: int) -> bool:
    """Numerical flopping criterion for the lattice spanned by ``v`` and ``a``.

    With ``b = v - a``: hyperbolic lattice, both squares ``>= -2``,
    ``0 < (a, v) < v^2``, and a spherical summand pairs with ``v`` to at
    most ``v^2 / 2``.
    """
    v = hilbert_vector(n, d)
    if not any(a) or is_multiple(a, v):
        raise ValueError(f"degenerate defining vector {tuple(a)}: multiple of v")
    return _flopping(square(a, d), pairing(a, v, d), square(v, d))


def _flopping(a2: int, av: int, v2: int) -> bool:
    b2 = v2 - 2 * av + a2
    if a2 * v2 - av * av >= 0:
        return False
    if a2 < -2 or b2 < -2:
        return False
    if not 0 < av < v2:
        return False
    if a2 == -2 and 2 * av > v2:
        return False
    if b2 == -2 and 2 * (v2 - av) > v2:
        return False
    return True


def flopping_check_bm(a, n: int, d: int) -> bool:
    """:func:`flopping_check` for a bm-frame vector against ``v' = (0, n, -1)``."""
    return flopping_check(apply(phi_inverse(n, d), a), n, d)


# -- catalogs ----------------------------------------------------------------


def rank_one_catalog_hilbert(n: int, d: int) -> list[Wall]:
    """Walls of ``(1, -c1, s)``, ``1 <= c1 <= n-1``, ``2dnc1 - dn^2 + 1 <= s <= dc1^2 + 1``."""
    walls = []
    for c1 in range(1, n):
        for s in range(2 * d * n * c1 - d * n * n + 1, d * c1 * c1 + 2):
            walls.append(make_wall([(1, -c1, s)], n, d))
    return merge_walls(walls)


def rank_one_catalog_bm(n: int, d: int) -> list[Wall]:
    """Walls of bm-frame ``(1, c1, s)``, ``1 <= s <= min(dc1^2 + 1, d(n - c1)^2)``."""
    back = phi_inverse(n, d)
    walls = []
    for c1 in range(1, n):
        for s in range(1, min(d * c1 * c1 + 1, d * (n - c1) ** 2) + 1):
            walls.append(make_wall([apply(back, (1, c1, s))], n, d))
    return merge_walls(walls)


def brill_noether_wall(n: int, d: int) -> Wall:
    """The middle wall, defined by ``O_S``: ``(1, 0, 1)`` in the bm frame."""
    return make_wall([apply(phi_inverse(n, d), (1, 0, 1))], n, d)


def alg_s(d: int) -> list[MukaiVector]:
    """Every ``n = 2`` wall below the Brill-Noether wall, one vector per rank-realiser.

    Vectors ``(a, 1 - 2a, M + 4d(a - 1))`` with ``(4a - 1)^2 < 16d + 17`` and
    ``(2a - 1)/2 < M <= (d + 1)/a``.
    """
    out = []
    a = 1
    while (4 * a - 1) ** 2 < 16 * d + 17:
        # 2M > 2a - 1  <=>  M >= a
        for m in range(a, (d + 1) // a + 1):
            u = MukaiVector(a, 1 - 2 * a, m + 4 * d * (a - 1))
            if is_primitive(u):
                out.append(u)
        a += 1
    return out


def alg_m(d: int) -> list[MukaiVector]:
    """Every ``n = 2`` wall above the Brill-Noether wall, as bm-frame vectors ``(a, 1, c)``.

    ``(4a + 1)^2 < 16d + 17`` and ``a - 1/2 < c <= (d + 1)/a - 1``.
    """
    out = []
    a = 1
    while (4 * a + 1) ** 2 < 16 * d + 17:
        for c in range(a, (d + 1) // a):
            out.append(MukaiVector(a, 1, c))
        a += 1
    return out


def all_walls(n: int, d: int) -> list[Wall]:
    """All walls in the movable cone, sorted by Gamma.

    Complete for ``n in (1, 2)``.  For ``n >= 3`` only the rank-one catalogs
    and the Brill-Noether wall are returned and an
    :class:`IncompleteCatalogWarning` is issued.
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    bn = brill_noether_wall(n, d)
    if n == 1:
        return [bn]
    if n == 2:
        back = phi_inverse(2, d)
        walls = [make_wall([u], 2, d) for u in alg_s(d)]
        walls += [make_wall([apply(back, u)], 2, d) for u in alg_m(d)]
        return merge_walls(walls + [bn])
    warnings.warn(
        f"n = {n}: rank-one walls only, catalog possibly incomplete",
        IncompleteCatalogWarning,
        stacklevel=2,
    )
    return merge_walls(rank_one_catalog_hilbert(n, d) + [bn] + rank_one_catalog_bm(n, d))


# -- rank-two lattices ----------------------------------------------------------


@dataclass(frozen=True)
class LatticeBasis:
    g1: MukaiVector
    g2: MukaiVector

    def gram(self, d: int) -> tuple[int, int, int]:
        return square(self.g1, d), pairing(self.g1, self.g2, d), square(self.g2, d)

    def gram_det(self, d: int) -> int:
        a, b, c = self.gram(d)
        return a * c - b * b

    def coords(self, u) -> tuple[int, int] | None:
        """Integer coordinates of ``u`` in the basis, or None if outside the lattice."""
        g1, g2 = self.g1, self.g2
        for i, j in ((0, 1), (0, 2), (1, 2)):
            den = g1[i] * g2[j] - g1[j] * g2[i]
            if den:
                na = u[i] * g2[j] - u[j] * g2[i]
                nb = g1[i] * u[j] - g1[j] * u[i]
                if na % den or nb % den:
                    return None
                al, be = na // den, nb // den
                return (al, be) if tuple(al * g1 + be * g2) == tuple(u) else None
        raise ValueError("degenerate basis")

    def contains(self, u) -> bool:
        return self.coords(u) is not None

    def element(self, al: int, be: int) -> MukaiVector:
        return al * self.g1 + be * self.g2

    def transform(self, m) -> "LatticeBasis":
        return LatticeBasis(apply(m, self.g1), apply(m, self.g2))


def _kernel_basis(normal) -> tuple[MukaiVector, MukaiVector]:
    """Integer basis of ``{u in Z^3 : normal . u = 0}`` for a primitive ``normal``."""
    vals = list(normal)
    cols = [MukaiVector(1, 0, 0), MukaiVector(0, 1, 0), MukaiVector(0, 0, 1)]
    while sum(1 for x in vals if x) > 1:
        i = min((j for j in range(3) if vals[j]), key=lambda j: abs(vals[j]))
        for j in range(3):
            if j != i and vals[j]:
                q = vals[j] // vals[i]
                vals[j] -= q * vals[i]
                cols[j] = cols[j] - q * cols[i]
    ker = [cols[j] for j in range(3) if vals[j] == 0]
    return ker[0], ker[1]


def _euclid(u) -> int:
    return u[0] * u[0] + u[1] * u[1] + u[2] * u[2]


def _lagrange_reduce(g1, g2):
    """Gauss-Lagrange reduction of a rank-2 basis for the Euclidean norm."""
    if _euclid(g1) > _euclid(g2):
        g1, g2 = g2, g1
    while True:
        dot = g1[0] * g2[0] + g1[1] * g2[1] + g1[2] * g2[2]
        n1 = _euclid(g1)
        q = (2 * dot + n1) // (2 * n1)  # round(dot / n1)
        g2 = g2 - q * g1
        if _euclid(g2) >= n1:
            return g1, g2
        g1, g2 = g2, g1


def lattice_basis(a, n: int, d: int) -> LatticeBasis:
    """Basis of the saturation of ``span(v, a)`` in ``Z^3`` (Hilbert frame)."""
    v = hilbert_vector(n, d)
    normal = cross(v, a)
    g = content(normal)
    if g == 0:
        raise ValueError(f"{tuple(a)} and v span a rank-deficient lattice")
    normal = MukaiVector(*(x // g for x in normal))
    basis = LatticeBasis(*_lagrange_reduce(*_kernel_basis(normal)))
    if basis.gram_det(d) >= 0:
        raise ValueError(f"lattice spanned by v and {tuple(a)} is not hyperbolic")
    return basis


def side_lattice(w: Wall, frame: Frame) -> LatticeBasis:
    basis = w.lattice
    return basis if frame == "hilbert" else basis.transform(phi(w.n, w.d))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def strip_elements(basis: LatticeBasis, x: int, lo: int, hi: int, d: int,
                   min_square: int = -2) -> Iterator[MukaiVector]:
    """Lattice elements ``u`` with ``lo < c - r x < hi`` and ``u^2 >= min_square``.

    ``x`` must be an integer.  On each level ``c - r x = i`` the elements form
    a line ``u0 + k w`` where ``w`` spans the kernel of the level functional;
    ``w^2 < 0`` for a hyperbolic wall lattice, so the square condition cuts
    out a finite interval of ``k`` that is solved exactly.
    """
    g1, g2 = basis.g1, basis.g2
    l1, l2 = g1[1] - g1[0] * x, g2[1] - g2[0] * x
    g, s0, t0 = _egcd(l1, l2)
    if g == 0:
        raise RankUndeterminedError("level functional vanishes on the lattice")
    w = (l2 // g) * g1 - (l1 // g) * g2
    aa = -square(w, d)
    if aa <= 0:
        raise RankUndeterminedError("kernel direction is not negative; strip is unbounded")
    for i in range(lo + 1, hi):
        if i % g:
            continue
        u0 = (s0 * i // g) * g1 + (t0 * i // g) * g2
        b = pairing(u0, w, d)
        c0 = square(u0, d) - min_square
        # need aa k^2 - 2 b k - c0 <= 0
        disc = b * b + aa * c0
        if disc < 0:
            continue
        root = isqrt(disc)
        k_lo = (b - root - 1) // aa
        k_hi = -((-(b + root + 1)) // aa)
        for k in range(k_lo, k_hi + 1):
            u = u0 + k * w
            if square(u, d) >= min_square:
                yield u


def wall_rank(w: Wall, n: int, d: int) -> int:
    """Smallest positive rank among classes that can occur in the
    decomposition of ``v`` (Hilbert side, line ``x = -n``) or ``v'`` (bm
    side, line ``x = 0``) at the wall.  The Brill-Noether wall has rank 1.
    """
    if w.side == "middle":
        return 1
    frame: Frame = "hilbert" if w.side == "hilbert" else "bm"
    basis = side_lattice(w, frame)
    x = -n if frame == "hilbert" else 0
    ranks = [u[0] for u in strip_elements(basis, x, 0, n, d) if u[0] > 0]
    if not ranks:
        raise RankUndeterminedError(f"no admissible class found for wall Gamma={w.gamma}")
    return min(ranks)


def _sqrt_upper(q: Fraction, digits: int = 12) -> Fraction:
    """Smallest multiple of ``10^-digits`` that is ``>= sqrt(q)``."""
    scale = 10 ** digits
    big = q * scale * scale
    m = isqrt(big.numerator // big.denominator)
    while m * m < big:
        m += 1
    return Fraction(m, scale)


def rank_bound(gamma, n: int, d: int, side: Literal["hilbert", "bm"]) -> Fraction:
    """Upper bound on the rank of walls beyond ``gamma`` (towards the cone boundary).

    Hilbert side (any n): walls with ``Gamma < gamma`` have rank below
    ``(n - 1 + sqrt((n-1)^2 + 2n((n-1)^2 d + 1) / (d (1/gamma - n)))) / 2n``.
    bm side (n = 2): walls with ``Gamma > gamma`` have rank below
    ``-dX + sqrt(d^2 X^2 + 4d(d+1)X)`` with ``X = 1/gamma - 2``.
    The square root is rounded up, so the result is a valid upper estimate.
    """
    gamma = Fraction(gamma)
    g0 = gamma_zero(n, d)
    if side == "hilbert":
        if not 0 < gamma <= g0:
            raise ValueError(f"gamma = {gamma} outside (0, {g0}]")
        x = 1 / gamma - n
        rad = (n - 1) ** 2 + Fraction(2 * n * ((n - 1) ** 2 * d + 1)) / (d * x)
        return (n - 1 + _sqrt_upper(rad)) / (2 * n)
    if side == "bm":
        if n != 2:
            raise ValueError("bm-side rank bound is only available for n = 2")
        if not g0 <= gamma < Fraction(1, 2):
            raise ValueError(f"gamma = {gamma} outside [{g0}, 1/2)")
        x = 1 / gamma - 2
        return -d * x + _sqrt_upper(d * d * x * x + 4 * d * (d + 1) * x)
    raise ValueError(f"unknown side {side!r}")


# -- totally semistable walls ------------------------------------------------


@dataclass(frozen=True)
class TssWitness:
    kind: Literal["isotropic_pairing_one", "negative_spherical"]
    vector: MukaiVector


def is_totally_semistable(w: Wall, target, bound: int, n: int, d: int,
                          frame: Frame | None = None) -> TssWitness | None:
    """Bounded search for a witness that ``w`` is totally semistable for ``target``.

    Looks at ``u = al g1 + be g2`` with ``|al|, |be| <= bound`` for an
    isotropic ``u`` with ``(u, target) = 1`` or a spherical ``u`` with
    ``(u, target) < 0`` and positive imaginary part on the crossing line
    (``x = -n`` in the Hilbert frame, ``x = 0`` in the bm frame).

    Returns the first witness, or None.  None only means that nothing was
    found inside the box; it is not a proof of absence.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if frame is None:
        if w.lattice.contains(target):
            frame = "hilbert"
        elif side_lattice(w, "bm").contains(target):
            frame = "bm"
        else:
            raise ValueError(f"target {tuple(target)} is not in the wall lattice")
    basis = side_lattice(w, frame)
    x = -n if frame == "hilbert" else 0
    g11, g12, g22 = basis.gram(d)
    p1, p2 = pairing(basis.g1, target, d), pairing(basis.g2, target, d)
    l1 = basis.g1[1] - basis.g1[0] * x
    l2 = basis.g2[1] - basis.g2[0] * x
    for al in range(-bound, bound + 1):
        for be in range(-bound, bound + 1):
            sq = al * al * g11 + 2 * al * be * g12 + be * be * g22
            if sq == 0:
                if al * p1 + be * p2 == 1:
                    return TssWitness("isotropic_pairing_one", basis.element(al, be))
            elif sq == -2:
                if al * p1 + be * p2 < 0 and al * l1 + be * l2 > 0:
                    return TssWitness("negative_spherical", basis.element(al, be))
    return None


# -- brute-force oracle ------------------------------------------------------


def _flopping_mask(a2, av, v2):
    b2 = v2 - 2 * av + a2
    ok = (a2 * v2 - av * av < 0) & (a2 >= -2) & (b2 >= -2) & (av > 0) & (av < v2)
    ok &= ~((a2 == -2) & (2 * av > v2))
    ok &= ~((b2 == -2) & (2 * (v2 - av) > v2))
    return ok


def _gamma_mask(num, den, lo: Fraction, hi: Fraction):
    sgn = np.sign(den)
    num, den = num * sgn, den * sgn
    return ((den != 0)
            & (num * lo.denominator > lo.numerator * den)
            & (num * hi.denominator < hi.numerator * den))


def oracle_walls(n: int, d: int, gamma_lo, gamma_hi, bound: int) -> list[Wall]:
    """Brute-force wall enumeration, independent of the catalogs.

    Scans every primitive ``(r, c, s)`` with all ``|entries| <= bound`` twice:
    as a Hilbert-frame vector tested against ``v`` and as a bm-frame vector
    tested against ``v'``.  Vectors passing the flopping criterion with
    ``gamma_lo < Gamma < gamma_hi`` are merged by Gamma.  The second scan is
    needed because walls near ``1/n`` only have Hilbert-frame vectors of
    size about ``d n^2`` times their bm-frame ones.
    """
    lo, hi = Fraction(gamma_lo), Fraction(gamma_hi)
    if not 0 <= lo < hi <= Fraction(1, n):
        raise ValueError("need 0 <= gamma_lo < gamma_hi <= 1/n")
    dn2 = d * n * n
    v2 = 2 * dn2
    # crude bound on the largest intermediate product; stay inside int64
    big = 2 * d * ((2 * n + 1) * bound) ** 2 + 2 * dn2 * bound * bound
    if big * v2 + (2 * dn2 * bound + bound) ** 2 > 2 ** 62:
        raise ValueError("bound too large for the vectorised scan")

    back = phi_inverse(n, d)
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    cc, ss = np.meshgrid(rng, rng, indexing="ij")
    found: dict = {}
    for r in range(-bound, bound + 1):
        prim = np.gcd(np.gcd(abs(r), cc), ss) == 1
        a2 = 2 * d * cc * cc - 2 * r * ss
        # Hilbert frame: (a, v) with v = (1, 0, -dn^2)
        num, den = -2 * d * cc, dn2 * r + ss
        ok = prim & _flopping_mask(a2, dn2 * r - ss, v2) & _gamma_mask(num, den, lo, hi)
        for c, s in zip(cc[ok].tolist(), ss[ok].tolist()):
            found.setdefault(Fraction(-2 * d * c, dn2 * r + s), set()).add(MukaiVector(r, c, s))
        # bm frame: (a', v') with v' = (0, n, -1)
        num, den = 2 * d * (cc + n * ss), r + 2 * d * n * cc + 2 * dn2 * ss
        ok = prim & _flopping_mask(a2, 2 * d * n * cc + r, v2) & _gamma_mask(num, den, lo, hi)
        for c, s in zip(cc[ok].tolist(), ss[ok].tolist()):
            h = apply(back, (r, c, s))
            found.setdefault(Fraction(num[c + bound, s + bound].item(),
                                      den[c + bound, s + bound].item()), set()).add(h)
    return [make_wall(vs, n, d) for g, vs in sorted(found.items())]


def lattice_collisions(walls) -> list[Fraction]:
    """Gammas of walls whose defining vectors do not all lie in one lattice.

    Should always be empty; reported rather than resolved.
    """
    bad = []
    for w in walls:
        basis = w.lattice
        if not all(basis.contains(u) for u in w.vectors):
            bad.append(w.gamma)
    return bad

"""Flop chains of birational models along the two wall-crossing paths.

Hilbert-scheme side: the line ``x = -n``, crossed from large ``t`` downwards
starting at ``S^[dn^2+1]``.  Beauville-Mukai side: the line ``x = -eps``,
crossed from large ``t`` starting at ``M(0,n,-1)``; values are reported in
the ``eps -> 0+`` limit, i.e. on ``x = 0``.  The two halves meet at the
Brill-Noether wall, where ``Phi_n`` identifies the last Hilbert-side model
with the model just below the Brill-Noether wall on the bm side.

Dimensions only: everything here is integer bookkeeping on Mukai vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .lattice import (
    MukaiVector,
    bm_vector,
    hilbert_vector,
    is_primitive,
    moduli_dim,
    pairing,
    square,
)
from .plane import Frame, crossing_t, gamma_zero, im_coeff_at
from .walls import Wall, all_walls, catalog_complete

HILBERT_CHOW = "Hilbert-Chow"
LAGRANGIAN = "Lagrangian fibration"


@dataclass(frozen=True)
class Model:
    name: str
    side: Literal["hilbert", "bm"]
    index: int


@dataclass(frozen=True)
class BaseComponent:
    vector: MukaiVector
    dim: int
    # "point (spherical)", or "open subset" when the bundle is only known over part of the factor
    note: str = ""

    @property
    def spherical(self) -> bool:
        return self.dim == 0


@dataclass(frozen=True)
class ExcLocus:
    """Exceptional locus of a flop: a projective bundle over a product of moduli spaces."""

    fiber_dim: int
    base_components: tuple[BaseComponent, ...]
    total_dim: int
    codim: int


@dataclass(frozen=True)
class FlopStep:
    wall: Wall
    label: str
    source: str
    target: str
    path_x: Fraction
    crossing_t: Fraction
    decomposition: tuple[MukaiVector, MukaiVector]
    exc: ExcLocus | None
    kind: Literal["flop", "stratified"] = "flop"
    # stratified (Brill-Noether) steps: v' = m s' + remainder, m = 1, 2, ...
    strata: tuple[tuple[int, MukaiVector], ...] = ()


@dataclass
class ChainReport:
    d: int
    n: int
    models: list[Model]
    steps: list[FlopStep]
    splice: str
    complete: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def N(self) -> int:
        return len(self.models)


@dataclass(frozen=True)
class MovableConeRay:
    gamma: Fraction
    label: str


@dataclass(frozen=True)
class Chamber:
    lo: Fraction
    hi: Fraction
    label: str


def _frame_of(w: Wall, side: Frame | None) -> Frame:
    if w.side == "middle":
        if side is None:
            raise ValueError("the Brill-Noether wall is crossed on both lines; pass side=")
        return side
    return w.side  # type: ignore[return-value]


def crossing_parameter(w: Wall, n: int, d: int, side: Frame | None = None):
    """``(path_x, t)`` where the wall meets its side's crossing line.

    Hilbert side: ``x = -n``, ``t = 2n(1/Gamma - n)``.
    bm side: ``x = 0``, ``t = 1 / (2 d^2 n (1/Gamma - n))``.
    The middle wall meets both lines; choose one with ``side``.
    """
    frame = _frame_of(w, side)
    x = Fraction(-n) if frame == "hilbert" else Fraction(0)
    return x, crossing_t(w.semicircle(frame), x)


def decomposition_at_crossing(w: Wall, n: int, d: int) -> tuple[MukaiVector, MukaiVector]:
    """Two-term decomposition of ``v`` (or ``v'``) induced at the crossing point.

    Picks, among the stored defining vectors (sign-normalised so that both
    summands have positive imaginary part on the crossing line), one of
    smallest positive rank.
    """
    if w.side == "middle":
        raise ValueError("the Brill-Noether wall has multi-term decompositions; see strata()")
    frame: Frame = w.side  # type: ignore[assignment]
    total = hilbert_vector(n, d) if frame == "hilbert" else bm_vector(n)
    x = -n if frame == "hilbert" else 0
    best = None
    for a in w.vectors_in(frame):
        for cand in (a, -a):
            b = total - cand
            if im_coeff_at(cand, x, d) <= 0 or im_coeff_at(b, x, d) <= 0:
                continue
            if square(cand, d) < -2 or square(b, d) < -2:
                continue
            key = (cand.r <= 0, abs(cand.r), cand)
            if best is None or key < best[0]:
                best = (key, cand, b)
    if best is None:
        raise ValueError(f"no genuine two-term decomposition on the path for Gamma={w.gamma}")
    return best[1], best[2]


def exceptional_locus(a, b, n: int, d: int, open_subset: bool = False) -> ExcLocus:
    """Projective bundle ``P^{(a,b)-1}`` over ``M(a) x M(b)``.

    ``open_subset`` marks positive-dimensional base factors whose bundle
    structure is only known over an open part of the product.
    """
    for u in (a, b):
        if not is_primitive(u) or square(u, d) < -2:
            raise ValueError(f"{tuple(u)} must be primitive with square >= -2")
    fiber = pairing(a, b, d) - 1
    if fiber < 1:
        raise ValueError("not a projective-bundle wall")
    dims = [moduli_dim(u, d) for u in (a, b)]
    partial = open_subset and min(dims) > 0
    bases = tuple(
        BaseComponent(
            MukaiVector(*u), k,
            "point (spherical)" if k == 0 else ("open subset" if partial else ""),
        )
        for u, k in zip((a, b), dims)
    )
    total = fiber + sum(c.dim for c in bases)
    ambient = square(hilbert_vector(n, d), d) + 2
    return ExcLocus(fiber, bases, total, ambient - total)


def strata(n: int, d: int) -> tuple[tuple[int, MukaiVector], ...]:
    """``v' = m (1,0,1) + (-m, n, -1-m)`` for every ``m`` whose remainder has square >= -2."""
    out = []
    m = 1
    while m * (m + 1) <= d * n * n + 1:
        out.append((m, MukaiVector(-m, n, -1 - m)))
        m += 1
    return tuple(out)


def _bn_step(w: Wall, n: int, d: int, source: str, target: str, label: str) -> FlopStep:
    s_prime = MukaiVector(1, 0, 1)
    x, t = crossing_parameter(w, n, d, "bm")
    return FlopStep(
        wall=w, label=label, source=source, target=target, path_x=x, crossing_t=t,
        decomposition=(s_prime, bm_vector(n) - s_prime), exc=None,
        kind="stratified", strata=strata(n, d),
    )


def _flop_step(w: Wall, n: int, d: int, source: str, target: str, label: str) -> FlopStep:
    x, t = crossing_parameter(w, n, d)
    a, b = decomposition_at_crossing(w, n, d)
    # rank-one flops from the Hilbert scheme past the first are bundles over part of the base
    partial = w.side == "hilbert" and a.r == 1
    try:
        exc = exceptional_locus(a, b, n, d, open_subset=partial)
    except ValueError:
        # n >= 3: non-primitive summands occur; no bundle description is claimed
        if catalog_complete(n):
            raise
        exc = None
    return FlopStep(w, label, source, target, x, t, (a, b), exc)


def _rank_one_index(w: Wall, frame: Frame) -> int | None:
    """``k`` for the n = 2 rank-one walls ``(1,-1,k)`` / ``(1,1,k)``."""
    c = -1 if frame == "hilbert" else 1
    for u in w.vectors_in(frame):
        if u.r == 1 and u.c == c:
            return u.s
    return None


def _names(walls: list[Wall], frame: Frame, n: int) -> list[tuple[str, str]]:
    """(model name, flop label) after crossing each wall, in crossing order."""
    prefix, flop = ("X", "f") if frame == "hilbert" else ("cX", "g")
    if n != 2:
        count = len(walls)
        return [(f"{prefix}_{count - i}", f"{flop}_{count - i}") for i in range(count)]
    odd = [w for w in walls if _rank_one_index(w, frame) is None or w.rank != 1]
    odd_label = "h" if frame == "hilbert" else "j"
    out = []
    for w in walls:
        k = _rank_one_index(w, frame)
        if k is not None and w.rank == 1:
            out.append((f"{prefix}_{k}", f"{flop}_{k}"))
        else:
            i = odd.index(w) + 1
            suffix = "" if len(odd) == 1 else str(i)
            out.append((f"{prefix}_flat{suffix}", f"{odd_label}{suffix}"))
    return out


def build_chain(d: int, n: int = 2) -> ChainReport:
    """Models and flops for ``M(0,n,-1)``, in ascending-Gamma (chamber) order.

    ``models`` lists each birational model once: the Hilbert-side models
    from ``S^[dn^2+1]`` down to the last one before the Brill-Noether wall,
    then the bm-side models from the Brill-Noether wall up to ``M(0,n,-1)``.
    The bm model directly below the Brill-Noether wall, ``cX_0``, is the
    last Hilbert-side model under ``Phi_n`` and is not listed twice.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if n == 1:
        return n1_report(d)
    walls = all_walls(n, d)
    hil = [w for w in walls if w.side == "hilbert"]            # ascending Gamma = descending t
    bm = [w for w in walls if w.side == "bm"][::-1]            # descending Gamma = descending t
    (bn,) = [w for w in walls if w.side == "middle"]

    start = f"S^[{d * n * n + 1}]"
    top = f"M(0,{n},-1)"
    models = [Model(start, "hilbert", 0)]
    steps = []
    prev = start
    for i, (w, (name, label)) in enumerate(zip(hil, _names(hil, "hilbert", n)), 1):
        models.append(Model(name, "hilbert", i))
        steps.append(_flop_step(w, n, d, prev, name, label))
        prev = name
    last_hilbert = prev

    bm_models = [Model(top, "bm", 0)]
    prev = top
    for i, (w, (name, label)) in enumerate(zip(bm, _names(bm, "bm", n)), 1):
        bm_models.append(Model(name, "bm", i))
        steps.append(_flop_step(w, n, d, prev, name, label))
        prev = name
    steps.append(_bn_step(bn, n, d, prev, "cX_0", "g_0"))
    models.extend(bm_models[::-1])

    report = ChainReport(
        d=d, n=n, models=models, steps=steps,
        splice=f"Phi_{n}: {last_hilbert} = cX_0",
        complete=catalog_complete(n),
    )
    report.notes.append("bm path is x = -eps, evaluated at eps -> 0+")
    return report


def n1_report(d: int) -> ChainReport:
    """``M(0,1,-1)``: one wall at ``Gamma = 2d/(2d+1)``, two models."""
    (w,) = all_walls(1, d)
    x, t = crossing_parameter(w, 1, d, "hilbert")
    start = f"S^[{d + 1}]"
    step = FlopStep(
        wall=w, label="g_0", source=start, target="M(0,1,-1)", path_x=x, crossing_t=t,
        decomposition=(MukaiVector(1, 0, 1), bm_vector(1) - MukaiVector(1, 0, 1)),
        exc=None, kind="stratified", strata=strata(1, d),
    )
    return ChainReport(
        d=d, n=1,
        models=[Model(start, "hilbert", 0), Model("M(0,1,-1)", "bm", 0)],
        steps=[step],
        splice="Phi_1: the Brill-Noether wall is the only wall",
    )


def movable_cone_rays(walls, n: int) -> list[MovableConeRay]:
    """Boundary rays ``Gamma = 0, 1/n`` plus one ray per wall, sorted."""
    rays = [MovableConeRay(Fraction(0), HILBERT_CHOW)]
    for w in sorted(walls, key=lambda w: w.gamma):
        if not 0 < w.gamma < Fraction(1, n):
            raise ValueError(f"wall Gamma = {w.gamma} outside the movable cone")
        label = "Brill-Noether" if w.gamma == gamma_zero(n, w.d) else f"wall {w.gamma}"
        rays.append(MovableConeRay(w.gamma, label))
    rays.append(MovableConeRay(Fraction(1, n), LAGRANGIAN))
    return rays


def chambers(walls, n: int, d: int, report: ChainReport | None = None) -> list[Chamber]:
    """Chambers between consecutive rays, labelled by model when a chain is given."""
    rays = movable_cone_rays(walls, n)
    out = []
    for i, (lo, hi) in enumerate(zip(rays, rays[1:])):
        if report is not None:
            label = report.models[i].name
        elif i == 0:
            label = f"S^[{d * n * n + 1}]"
        elif i == len(rays) - 2:
            label = f"M(0,{n},-1)"
        else:
            label = f"chamber {i}"
        out.append(Chamber(lo.gamma, hi.gamma, label))
    return out

"""Serialisers: plain-text tables, JSON documents, Graphviz DOT, SVG.

Rationals are written as ``"p/q"`` strings everywhere except SVG, which
rounds to 12 significant digits.
"""

from __future__ import annotations

import json
from decimal import Decimal, localcontext
from fractions import Fraction

from .chain import ChainReport, FlopStep, crossing_parameter
from .plane import Frame, path_x
from .walls import Wall

SIG_DIGITS = 12
RANK_COLOURS = {1: "#1f77b4", 2: "#2ca02c", 3: "#ff7f0e", 4: "#9467bd"}
BN_COLOUR = "#d62728"


def frac(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vector_str(u) -> str:
    return f"({u[0]},{u[1]},{u[2]})"


def wall_record(w: Wall, frame: Frame) -> dict:
    sc = w.semicircle(frame)
    side = frame if w.side == "middle" else w.side
    _, t = crossing_parameter(w, w.n, w.d, side)
    return {
        "gamma": frac(w.gamma),
        "vectors": [list(u) for u in w.vectors_in(frame)],
        "side": w.side,
        "rank": w.rank,
        "semicircle": {"center": frac(sc.center_x), "radius_sq": frac(sc.radius_sq)},
        "crossing_t": frac(t),
    }


def step_record(s: FlopStep) -> dict:
    rec = {
        "label": s.label,
        "source": s.source,
        "target": s.target,
        "gamma": frac(s.wall.gamma),
        "kind": s.kind,
        "path_x": frac(s.path_x),
        "crossing_t": frac(s.crossing_t),
        "decomposition": [list(u) for u in s.decomposition],
    }
    if s.exc is not None:
        rec["exc"] = {
            "fiber_dim": s.exc.fiber_dim,
            "base": [
                {"vector": list(b.vector), "dim": b.dim, "note": b.note}
                for b in s.exc.base_components
            ],
            "total_dim": s.exc.total_dim,
            "codim": s.exc.codim,
        }
    if s.strata:
        rec["strata"] = [{"m": m, "remainder": list(u)} for m, u in s.strata]
    return rec


def chain_record(report: ChainReport) -> dict:
    return {
        "models": [m.name for m in report.models],
        "steps": [step_record(s) for s in report.steps],
        "N": report.N,
        "splice": report.splice,
        "complete": report.complete,
    }


def document(n: int, d: int, walls=None, report: ChainReport | None = None,
             frame: Frame = "hilbert") -> dict:
    doc: dict = {"meta": {"n": n, "d": d, "frame": frame}}
    if walls is not None:
        doc["walls"] = [wall_record(w, frame) for w in walls]
    if report is not None:
        doc["chain"] = chain_record(report)
    return doc


def to_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


# -- tables ------------------------------------------------------------------


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    fmt = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    lines = [fmt(header), fmt(["-" * w for w in widths])]
    lines += [fmt(r) for r in rows]
    return "\n".join(lines) + "\n"


def walls_table(walls, frame: Frame) -> str:
    rows = []
    for w in walls:
        rec = wall_record(w, frame)
        rows.append([
            rec["gamma"], rec["side"], str(rec["rank"]),
            rec["semicircle"]["center"], rec["semicircle"]["radius_sq"], rec["crossing_t"],
            " ".join(vector_str(u) for u in rec["vectors"]),
        ])
    header = ["gamma", "side", "rank", "center", "radius_sq", "crossing_t", f"vectors ({frame})"]
    return _table(header, rows)


def chain_table(report: ChainReport) -> str:
    rows = []
    for s in report.steps:
        exc = s.kind if s.exc is None else (
            f"P^{s.exc.fiber_dim} over dims "
            + "+".join(str(b.dim) for b in s.exc.base_components)
            + f", codim {s.exc.codim}"
        )
        if s.exc is None and s.kind == "flop":
            exc = "not determined"
        rows.append([
            s.label, s.source, s.target, frac(s.wall.gamma), frac(s.path_x), frac(s.crossing_t),
            " + ".join(vector_str(u) for u in s.decomposition), exc,
        ])
    header = ["step", "from", "to", "gamma", "x", "t", "decomposition", "exceptional locus"]
    head = (f"n={report.n} d={report.d} N={report.N}\n"
            f"models: {', '.join(m.name for m in report.models)}\n"
            f"splice: {report.splice}\n")
    if not report.complete:
        head += "warning: wall catalog not certified complete\n"
    return head + "\n" + _table(header, rows)


# -- dot ---------------------------------------------------------------------


def _q(name: str) -> str:
    return '"' + name.replace('"', r'\"') + '"'


def chain_dot(report: ChainReport) -> str:
    """Models as nodes, flops as dashed edges, the Phi splice as a solid edge.

    The bm model ``cX_0`` is the last Hilbert-side model under the splice,
    so it shares that node; the splice is drawn as a solid self-loop there.
    """
    hil = [m for m in report.models if m.side == "hilbert"]
    alias = {"cX_0": hil[-1].name} if report.n != 1 else {}
    lines = [f"digraph chain_n{report.n}_d{report.d} {{", "  rankdir=LR;"]
    for side in ("hilbert", "bm"):
        lines.append(f"  subgraph cluster_{side} {{")
        lines.append(f'    label="{side}";')
        for m in report.models:
            if m.side == side:
                lines.append(f"    {_q(m.name)};")
        lines.append("  }")
    for s in report.steps:
        src, dst = alias.get(s.source, s.source), alias.get(s.target, s.target)
        lines.append(f"  {_q(src)} -> {_q(dst)} [style=dashed, label={_q(s.label)}];")
    if alias:
        node = _q(alias["cX_0"])
        lines.append(f"  {node} -> {node} [style=solid, label={_q(report.splice)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- svg ---------------------------------------------------------------------


def _decimal(q, sqrt: bool = False) -> Decimal:
    q = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = SIG_DIGITS + 10
        val = Decimal(q.numerator) / Decimal(q.denominator)
        return val.sqrt() if sqrt else val


def _round(x: Decimal) -> str:
    with localcontext() as ctx:
        ctx.prec = SIG_DIGITS
        s = format((+x).normalize(), "f")
    return "0" if s == "-0" else s


def dec(q) -> str:
    """Rational to 12 significant digits."""
    return _round(_decimal(q))


def dec_sqrt(q) -> str:
    """Square root of a non-negative rational, 12 significant digits."""
    return _round(_decimal(q, sqrt=True))


def walls_svg(walls, n: int, d: int, frame: Frame) -> str:
    """Upper half-plane with the walls as nested arcs; ``y`` runs upwards."""
    radii = {w.gamma: _decimal(w.semicircle(frame).radius_sq, sqrt=True) for w in walls}
    x_lo, x_hi = -2 * n - 1, 1
    h = _round(max(radii.values(), default=Decimal(1)) + Decimal("0.5"))
    px = path_x(n, frame)
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x_lo} -{h} {x_hi - x_lo} {h}" preserveAspectRatio="xMidYMax meet">',
        f"  <title>walls n={n} d={d} frame={frame}</title>",
        '  <g transform="scale(1,-1)" fill="none" stroke-width="0.01">',
        f'    <line class="axis" x1="{x_lo}" y1="0" x2="{x_hi}" y2="0" stroke="#888"/>',
        f'    <line class="path" x1="{dec(px)}" y1="0" x2="{dec(px)}" y2="{h}" '
        'stroke="#000" stroke-dasharray="0.05"/>',
    ]
    for w in walls:
        sc = w.semicircle(frame)
        r = radii[w.gamma]
        c = _decimal(sc.center_x)
        left, right, rs = _round(c - r), _round(c + r), _round(r)
        bn = w.side == "middle"
        colour = BN_COLOUR if bn else RANK_COLOURS.get(w.rank, "#7f7f7f")
        cls = "wall bn" if bn else "wall"
        width = ' stroke-width="0.03"' if bn else ""
        out.append(
            f'    <path class="{cls}" data-gamma="{frac(w.gamma)}" data-rank="{w.rank}" '
            f'd="M {left} 0 A {rs} {rs} 0 0 0 {right} 0" stroke="{colour}"{width}/>'
        )
    out += ["  </g>", "</svg>"]
    return "\n".join(out) + "\n"

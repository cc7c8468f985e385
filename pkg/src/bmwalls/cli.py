"""``bmwalls`` command-line interface.

Exit codes: 0 success, 1 a requested check failed (or a computation was
refused), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .chain import build_chain, crossing_parameter, decomposition_at_crossing, exceptional_locus
from .lattice import apply, is_primitive, phi_inverse, primitive_part, square
from .plane import gamma_from_vector
from .render import (
    chain_dot,
    chain_table,
    document,
    frac,
    to_json,
    vector_str,
    walls_svg,
    walls_table,
)
from .verify import run_checks
from .walls import (
    IncompleteCatalogWarning,
    all_walls,
    catalog_complete,
    flopping_check,
    make_wall,
    oracle_walls,
    side_of,
)

FORMATS = ("table", "json", "svg", "dot")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    n: int
    degrees: tuple[int, ...]
    frame: str
    format: str
    bound: int | None
    gamma_lo: Fraction | None
    gamma_hi: Fraction | None
    oracle: bool
    allow_incomplete: bool


def parse_degrees(text: str) -> tuple[int, ...]:
    """``"5"`` or an inclusive range ``"1..6"``."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad --d value {text!r}; expected an integer or a..b") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad --d range {text!r}; need 1 <= a <= b")
    return tuple(range(lo, hi + 1))


def parse_vector(text: str):
    try:
        parts = [int(p) for p in text.replace("(", "").replace(")", "").split(",")]
    except ValueError:
        raise UsageError(f"cannot parse Mukai vector {text!r}; expected r,c,s") from None
    if len(parts) != 3:
        raise UsageError(f"Mukai vector {text!r} must have three entries")
    return tuple(parts)


def _fraction(text):
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational {text!r}") from None


def make_config(args, default_format: str) -> RunConfig:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.bound is not None and args.bound < 1:
        raise UsageError("--bound must be positive")
    fmt = args.format or default_format
    allowed = {
        "walls": ("table", "json"),
        "chain": ("table", "json", "dot"),
        "verify": ("table", "json"),
        "plot": ("svg",),
        "classify": ("table", "json"),
    }[args.command]
    if fmt not in allowed:
        raise UsageError(f"--format {fmt} is not available for {args.command}")
    degrees = parse_degrees(args.d)
    if args.command not in ("verify",) and len(degrees) != 1:
        raise UsageError(f"{args.command} takes a single degree")
    return RunConfig(
        n=args.n, degrees=degrees, frame=args.frame, format=fmt, bound=args.bound,
        gamma_lo=_fraction(args.gamma_lo), gamma_hi=_fraction(args.gamma_hi),
        oracle=args.oracle, allow_incomplete=args.allow_incomplete,
    )


def _require_complete(cfg: RunConfig, what: str) -> None:
    if not catalog_complete(cfg.n) and not cfg.allow_incomplete:
        raise RuntimeError(f"{what} not certified complete for n={cfg.n}; pass --allow-incomplete")


def _walls(cfg: RunConfig, d: int):
    if cfg.oracle:
        lo = cfg.gamma_lo if cfg.gamma_lo is not None else Fraction(0)
        hi = cfg.gamma_hi if cfg.gamma_hi is not None else Fraction(1, cfg.n)
        return oracle_walls(cfg.n, d, lo, hi, cfg.bound or 10 * d)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IncompleteCatalogWarning)
        walls = all_walls(cfg.n, d)
    if cfg.gamma_lo is not None:
        walls = [w for w in walls if w.gamma >= cfg.gamma_lo]
    if cfg.gamma_hi is not None:
        walls = [w for w in walls if w.gamma <= cfg.gamma_hi]
    return walls


def cmd_walls(cfg: RunConfig, out) -> int:
    d = cfg.degrees[0]
    if not catalog_complete(cfg.n) and not cfg.oracle:
        print(f"warning: n={cfg.n} lists rank-one walls only", file=sys.stderr)
    walls = _walls(cfg, d)
    if cfg.format == "json":
        out.write(to_json(document(cfg.n, d, walls=walls, frame=cfg.frame)))
    else:
        out.write(walls_table(walls, cfg.frame))
    return 0


def cmd_chain(cfg: RunConfig, out) -> int:
    _require_complete(cfg, "chain")
    d = cfg.degrees[0]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IncompleteCatalogWarning)
        report = build_chain(d, cfg.n)
    if cfg.format == "dot":
        out.write(chain_dot(report))
    elif cfg.format == "json":
        out.write(to_json(document(cfg.n, d, report=report, frame=cfg.frame)))
    else:
        out.write(chain_table(report))
    return 0


def cmd_verify(cfg: RunConfig, out) -> int:
    _require_complete(cfg, "verification")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IncompleteCatalogWarning)
        results = run_checks(cfg.n, cfg.degrees, oracle=cfg.oracle, bound=cfg.bound)
    ok = all(r.passed for r in results)
    if cfg.format == "json":
        doc = {
            "meta": {"n": cfg.n, "d": [cfg.degrees[0], cfg.degrees[-1]]},
            "passed": ok,
            "checks": [{"name": r.name, "passed": r.passed, "payload": r.payload} for r in results],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in results:
            detail = ", ".join(f"{k}={v}" for k, v in r.payload.items())
            out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  {detail}\n")
        counts = [(r.name.split("d=")[1], r.payload["N"]) for r in results
                  if r.name.startswith("model-count")]
        out.write("N: " + " ".join(f"d={d}:{N}" for d, N in counts) + "\n")
        out.write(("all checks passed" if ok else "some checks FAILED") + "\n")
    return 0 if ok else 1


def cmd_plot(cfg: RunConfig, out) -> int:
    _require_complete(cfg, "plot")
    d = cfg.degrees[0]
    out.write(walls_svg(_walls(cfg, d), cfg.n, d, cfg.frame))
    return 0


def classify(u, n: int, d: int, frame: str) -> dict:
    """Everything the library can say about a single candidate defining vector."""
    a = apply(phi_inverse(n, d), u) if frame == "bm" else tuple(u)
    gamma = gamma_from_vector(a, n, d)  # raises for multiples of v
    rec: dict = {
        "vector": list(u),
        "frame": frame,
        "hilbert_vector": list(a),
        "primitive": is_primitive(u),
        "square": square(u, d),
        "gamma": frac(gamma),
    }
    inside = 0 < gamma < Fraction(1, n)
    flop = inside and flopping_check(a, n, d)
    rec["flopping"] = flop
    if not inside:
        rec["note"] = "Gamma outside the movable cone"
        return rec
    rec["side"] = side_of(gamma, n, d)
    if not flop and rec["side"] != "middle":
        return rec
    w = make_wall([primitive_part(a)], n, d)
    rec["rank"] = w.rank
    if w.side == "middle":
        for f in ("hilbert", "bm"):
            rec[f"crossing_t_{f}"] = frac(crossing_parameter(w, n, d, f)[1])
        return rec
    x, t = crossing_parameter(w, n, d)
    rec["path_x"], rec["crossing_t"] = frac(x), frac(t)
    try:
        pa, pb = decomposition_at_crossing(w, n, d)
        exc = exceptional_locus(pa, pb, n, d)
    except ValueError as e:
        rec["note"] = str(e)
        return rec
    rec["decomposition"] = [list(pa), list(pb)]
    rec["exc"] = {"fiber_dim": exc.fiber_dim,
                  "base_dims": [b.dim for b in exc.base_components],
                  "total_dim": exc.total_dim, "codim": exc.codim}
    return rec


def cmd_classify(cfg: RunConfig, vector_text: str, out) -> int:
    u = parse_vector(vector_text)
    d = cfg.degrees[0]
    if not any(u):
        raise ValueError("the zero vector defines no wall")
    rec = classify(u, cfg.n, d, cfg.frame)
    if cfg.format == "json":
        out.write(json.dumps(rec, indent=2) + "\n")
    else:
        for k, v in rec.items():
            if k in ("vector", "hilbert_vector"):
                v = vector_str(v)
            elif k == "decomposition":
                v = " + ".join(vector_str(u) for u in v)
            elif k == "exc":
                v = ", ".join(f"{a}={b}" for a, b in v.items())
            out.write(f"{k}: {v}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bmwalls", description=(
        "Walls, flop chains and birational models of Beauville-Mukai systems "
        "on Picard-rank-one K3 surfaces."))
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="curve class multiple (default 2)")
    common.add_argument("--d", default="1", help="degree parameter H^2 = 2d; verify accepts a..b")
    common.add_argument("--frame", choices=("hilbert", "bm"), default="hilbert")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--bound", type=int, help="coefficient box for the brute-force oracle")
    common.add_argument("--gamma-lo", help="lower Gamma filter (rational)")
    common.add_argument("--gamma-hi", help="upper Gamma filter (rational)")
    common.add_argument("--oracle", action="store_true", help="use or compare with the brute-force scan")
    common.add_argument("--allow-incomplete", action="store_true",
                        help="permit n >= 3, where only rank-one walls are catalogued")
    sub.add_parser("walls", parents=[common], help="list walls")
    sub.add_parser("chain", parents=[common], help="birational models and flops")
    sub.add_parser("verify", parents=[common], help="run consistency checks")
    sub.add_parser("plot", parents=[common], help="SVG of the wall semicircles")
    c = sub.add_parser("classify", parents=[common], help="classify one Mukai vector")
    c.add_argument("vector", help='"r,c,s"')
    return p


DEFAULT_FORMAT = {"walls": "table", "chain": "table", "verify": "table",
                  "plot": "svg", "classify": "table"}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = make_config(args, DEFAULT_FORMAT[args.command])
        if args.command == "classify":
            return cmd_classify(cfg, args.vector, out)
        return {"walls": cmd_walls, "chain": cmd_chain, "verify": cmd_verify,
                "plot": cmd_plot}[args.command](cfg, out)
    except UsageError as e:
        print(f"bmwalls: usage error: {e}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as e:
        print(f"bmwalls: error: {e}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

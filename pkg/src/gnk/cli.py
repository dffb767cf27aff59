"""Command-line entry point: ``gnk <command> ...``.

Exit status: 0 on success (or when the identity being checked holds), 1 when
a counterexample or failed exact division turns up, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import pickle
import sys
import time
from pathlib import Path

from . import closed, depth, limits, partitions, qbinom, shape
from .koh import (
    KohConfig, Rho, contribution_breakdown, g_s, koh, koh_restricted, random_theorem,
)
from .koh import cache_info as koh_cache_info
from .errors import GnkError, NonIntegerValue, NonzeroRemainder
from .qpoly import QPoly, format_poly, from_json_list, to_json_list

CACHE_SCHEMA = 1
CACHE_FILE = f"gnk-cache-v{CACHE_SCHEMA}.pickle"


class UsageError(Exception):
    pass


# -- persistence ---------------------------------------------------------------


def _cache_path() -> Path | None:
    d = os.environ.get("GNK_CACHE_DIR")
    return Path(d) / CACHE_FILE if d else None


def load_cache() -> int:
    """Seed the product memo from ``$GNK_CACHE_DIR``; returns the number of entries read."""
    path = _cache_path()
    if path is None or not path.exists():
        return 0
    try:
        with path.open("rb") as fh:
            blob = pickle.load(fh)
    except (OSError, pickle.UnpicklingError, EOFError):
        return 0
    if not isinstance(blob, dict) or blob.get("schema") != CACHE_SCHEMA:
        return 0
    memo = qbinom.product_memo()
    for key, coeffs in blob.get("gnk_product", {}).items():
        memo.setdefault(tuple(key), QPoly(coeffs))
    return len(blob.get("gnk_product", {}))


def save_cache() -> None:
    path = _cache_path()
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    blob = {"schema": CACHE_SCHEMA,
            "gnk_product": {key: p.coeffs for key, p in qbinom.product_memo().items()}}
    tmp = path.with_suffix(".tmp")
    with tmp.open("wb") as fh:
        pickle.dump(blob, fh, protocol=pickle.HIGHEST_PROTOCOL)
    tmp.replace(path)


# -- argument helpers ------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parse_table(body: str) -> dict[int, int]:
    table = {}
    for item in body.split(","):
        if not item.strip():
            continue
        key, _, val = item.partition("=")
        table[int(key)] = int(val)
    return table


def parse_rho(text: str | None, default: int = 1) -> Rho:
    """``const:W``, ``size:s=w,...`` or ``largest:m=w,...``."""
    if not text:
        return Rho()
    kind, _, body = text.partition(":")
    try:
        if kind in ("const", "constant"):
            return Rho.constant(int(body))
        if kind == "size":
            return Rho.by_size(_parse_table(body), default=default)
        if kind == "largest":
            return Rho.by_largest(_parse_table(body), default=default)
    except ValueError as exc:
        raise UsageError(f"bad --rho {text!r}: {exc}")
    raise UsageError(f"bad --rho {text!r}: expected const:W, size:... or largest:...")


def _add_constraint_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("partition constraints")
    g.add_argument("--min-part", type=int)
    g.add_argument("--max-part", type=int)
    g.add_argument("--min-size", type=int)
    g.add_argument("--max-size", type=int)
    g.add_argument("--min-gap", type=int)
    g.add_argument("--mod", type=int, help="congruence modulus for every part")
    g.add_argument("--residues", type=_int_list, help="allowed residues with --mod")
    g.add_argument("--allowed", type=_int_list, help="allowed part sizes")
    g.add_argument("--distinct", action="store_true")


def _constraints(args) -> partitions.PartitionConstraints:
    congruence = None
    if args.mod is not None:
        if not args.residues:
            raise UsageError("--mod needs --residues")
        congruence = (args.mod, frozenset(args.residues))
    elif args.residues:
        raise UsageError("--residues needs --mod")
    try:
        return partitions.PartitionConstraints(
            min_part=args.min_part, max_part=args.max_part,
            min_size=args.min_size, max_size=args.max_size,
            min_gap=args.min_gap, congruence=congruence,
            allowed_parts=frozenset(args.allowed) if args.allowed else None,
            distinct=args.distinct,
        )
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc))


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    _add_constraint_flags(p)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--nu", type=int, default=1)
    p.add_argument("--rho", help="weights: const:W | size:s=w,... | largest:m=w,...")
    p.add_argument("--rho-default", type=int, default=1, help="weight for keys missing from a table")
    p.add_argument("--normalize", action="store_true")


def _config(args) -> KohConfig:
    try:
        return KohConfig(constraints=_constraints(args), a=args.a, b=args.b, nu=args.nu,
                         rho=parse_rho(args.rho, args.rho_default), normalize=args.normalize)
    except ValueError as exc:
        raise UsageError(str(exc))


def read_poly(source: str) -> QPoly:
    """A JSON array of coefficient strings, or plain comma-separated integers."""
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    text = text.strip()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [t for t in text.replace("\n", ",").split(",") if t.strip()]
    if isinstance(data, dict):
        data = data.get("poly", data.get("coeffs"))
    if not isinstance(data, list):
        raise UsageError(f"{source}: expected a coefficient list")
    try:
        return from_json_list(data)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{source}: {exc}")


# -- output ----------------------------------------------------------------------


class Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def poly(self, p: QPoly, **meta) -> None:
        if self.as_json:
            self.data(dict(meta, poly=to_json_list(p)))
        else:
            print(format_poly(p))

    def data(self, obj) -> None:
        print(json.dumps(obj, sort_keys=True))

    def text(self, line: str) -> None:
        print(line)


# -- commands --------------------------------------------------------------------


def cmd_gnk(args, out):
    f = qbinom.gnk_pascal if args.method == "pascal" else qbinom.gnk_product
    out.poly(f(args.n, args.k), n=args.n, k=args.k)
    return 0


def cmd_koh(args, out):
    out.poly(koh(args.n, args.k), n=args.n, k=args.k)
    return 0


def cmd_gs(args, out):
    if args.s < 1:
        raise UsageError("s must be positive")
    out.poly(g_s(args.n, args.k, args.s), s=args.s, n=args.n, k=args.k)
    return 0


def cmd_kohgen(args, out):
    cfg = _config(args)
    out.poly(koh_restricted(args.n, args.k, cfg), n=args.n, k=args.k)
    return 0


def _explicit(fn):
    def run(args, out):
        if args.n < 0 or args.k < 0:
            raise UsageError("n and k must be nonnegative")
        out.poly(fn(args.n, args.k), n=args.n, k=args.k)
        return 0
    return run


def cmd_partitions(args, out):
    c = _constraints(args)
    parts = partitions.enumerate_partitions(args.k, c)
    if out.as_json:
        out.data({"k": args.k, "count": len(parts), "partitions": [p.parts() for p in parts]})
    elif args.count:
        out.text(str(len(parts)))
    else:
        for p in parts:
            out.text(str(p))
    return 0


def cmd_breakdown(args, out):
    cfg = _config(args)
    bd = contribution_breakdown(args.n, args.k, cfg)
    if out.as_json:
        out.data({"n": args.n, "k": args.k,
                  "entries": [{"partition": lam.parts(), "poly": to_json_list(p)} for lam, p in bd.entries],
                  "total": to_json_list(bd.total)})
        return 0
    width = max([len(str(lam)) for lam, _ in bd.entries] + [5])
    for lam, p in bd.entries:
        out.text(f"{str(lam):<{width}}  {format_poly(p)}")
    out.text(f"{'total':<{width}}  {format_poly(bd.total)}")
    return 0


def cmd_depth(args, out):
    if args.fast:
        d = depth.koh_depth_fast(args.n, args.k)
        res = {"n": args.n, "k": args.k, "depth": d}
    else:
        rep = depth.koh_depth(args.n, args.k)
        res = {"n": args.n, "k": args.k, "depth": rep.depth, "calls": rep.calls}
    if out.as_json:
        out.data(res)
    else:
        out.text(" ".join(f"{key}={res[key]}" for key in ("depth", "calls") if key in res))
    return 0


def cmd_check(args, out):
    p = read_poly(args.file)
    rep = shape.report(p)
    if out.as_json:
        out.data(rep)
        return 0

    def fmt(v):
        if v is None:
            return "n/a"
        if isinstance(v, bool):
            return str(v).lower()
        if isinstance(v, list):
            return ",".join(v)
        return str(v)

    for key in ("symmetric", "unimodal", "log_concave", "nonnegative", "darga", "gamma", "gamma_nonnegative"):
        out.text(f"{key}={fmt(rep[key])}")
    return 0


def cmd_conjecture(args, out):
    if args.smin < 1 or args.smax < args.smin or args.nmax < 0 or args.kmax < 0:
        raise UsageError("need 1 <= smin <= smax and nonnegative nmax, kmax")
    bad = []
    for rep in closed.conjecture_sweep(args.smax, args.nmax, args.kmax, s_min=args.smin):
        bad.append(rep)
        if not out.as_json:
            out.text(f"counterexample s={rep.s} n={rep.n} k={rep.k}: {format_poly(rep.residual)}")
    checked = (args.smax - args.smin + 1) * (args.nmax + 1) * (args.kmax + 1)
    if out.as_json:
        out.data({"checked": checked, "holds": not bad,
                  "counterexamples": [{"s": r.s, "n": r.n, "k": r.k, "residual": to_json_list(r.residual)}
                                      for r in bad]})
    else:
        out.text(f"checked {checked} cases, {len(bad)} counterexamples")
    return 1 if bad else 0


def _verdict(out, ok: bool, **meta) -> int:
    if out.as_json:
        out.data(dict(meta, holds=ok))
    else:
        out.text("true" if ok else "false")
    return 0 if ok else 1


def cmd_gem(args, out):
    try:
        ok = closed.useful_gem_check(args.n, args.k, args.D)
    except ValueError as exc:
        if isinstance(exc, GnkError):
            raise
        raise UsageError(str(exc))
    return _verdict(out, ok, n=args.n, k=args.k, D=args.D)


def cmd_singular(args, out):
    if args.s < 1 or args.k < 0:
        raise UsageError("need s >= 1 and k >= 0")
    return _verdict(out, closed.singular_line_check(args.s, args.k), s=args.s, k=args.k)


def cmd_oeis(args, out):
    if args.s < 1 or args.terms < 1:
        raise UsageError("need s >= 1 and terms >= 1")
    seq = limits.gs_diagonal_sequence(args.s, args.terms - 1)
    if out.as_json:
        out.data({"s": args.s, "oeis": limits.OEIS_IDS.get(args.s),
                  "ids": {str(k): v for k, v in limits.OEIS_IDS.items()},
                  "terms": [str(t) for t in seq]})
    else:
        out.text(",".join(str(t) for t in seq))
    return 0


def cmd_random_theorem(args, out):
    if args.k < 1 or args.bound < 0 or args.nmax < 0:
        raise UsageError("need k >= 1, bound >= 0, nmax >= 0")
    rt = random_theorem(args.k, args.bound, args.seed, range(args.nmax + 1))
    weights = [(lam, w) for lam, w in rt.cfg.rho.table if lam.k == args.k]
    checks = [(n, p, shape.is_sym_uni(p, n * args.k)) for n, p in rt.instances]
    if out.as_json:
        out.data({"k": args.k, "seed": args.seed,
                  "weights": [{"partition": lam.parts(), "weight": w} for lam, w in rt.cfg.rho.table],
                  "instances": [{"n": n, "poly": to_json_list(p), "sym_uni": ok} for n, p, ok in checks]})
    else:
        out.text("weights: " + " ".join(f"{lam}={w}" for lam, w in weights))
        for n, p, ok in checks:
            out.text(f"n={n} sym_uni={str(ok).lower()}: {format_poly(p)}")
    return 0 if all(ok for _, _, ok in checks) else 1


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--profile", action="store_true", help="print memo statistics to stderr")

    parser = argparse.ArgumentParser(prog="gnk", parents=[common],
                                     description="Exact q-binomials and the KOH recurrence.")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name, func, help_, *positional):
        p = sub.add_parser(name, parents=[common], help=help_)
        for arg in positional:
            p.add_argument(arg, type=int)
        p.set_defaults(func=func)
        return p

    p = add("gnk", cmd_gnk, "q-binomial [n+k choose k]", "n", "k")
    p.add_argument("--method", choices=("product", "pascal"), default="product")
    add("koh", cmd_koh, "q-binomial through the KOH recurrence", "n", "k")
    add("gs", cmd_gs, "recurrence restricted to partitions of size <= s", "s", "n", "k")
    _add_config_flags(add("kohgen", cmd_kohgen, "generalized recurrence", "n", "k"))
    add("g1", _explicit(closed.g1_explicit), "explicit G_1", "n", "k")
    add("g2", _explicit(closed.g2_explicit), "explicit G_2", "n", "k")
    add("g3", _explicit(closed.g3_explicit), "explicit G_3", "n", "k")
    p = add("partitions", cmd_partitions, "list partitions of k", "k")
    _add_constraint_flags(p)
    p.add_argument("--count", action="store_true")
    _add_config_flags(add("breakdown", cmd_breakdown, "per-partition contributions", "n", "k"))
    p = add("depth", cmd_depth, "recursion depth", "n", "k")
    p.add_argument("--fast", action="store_true", help="closed form instead of walking the tree")
    p = add("check", cmd_check, "shape report for a coefficient file ('-' for stdin)")
    p.add_argument("file")
    p = add("conjecture", cmd_conjecture, "sweep the size-s recurrence conjecture")
    p.add_argument("--smin", type=int, default=1)
    p.add_argument("--smax", type=int, default=3)
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--kmax", type=int, default=10)
    add("gem", cmd_gem, "check the bracket-sum identity", "n", "k", "D")
    add("singular", cmd_singular, "check the singular-line relation", "s", "k")
    p = add("oeis", cmd_oeis, "diagonal sequence G_s(n,n) at q=1", "s")
    p.add_argument("--terms", type=int, default=15)
    p = add("random-theorem", cmd_random_theorem, "random weighted recurrence with certificates", "k")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=9, help="largest weight")
    p.add_argument("--nmax", type=int, default=8)
    return parser


def _profile() -> None:
    stats = {"qbinom": qbinom.cache_info(), "koh": koh_cache_info()}
    for area, tables in stats.items():
        for name, info in tables.items():
            fields = " ".join(f"{k}={v}" for k, v in info.items())
            print(f"[profile] {area}.{name} {fields}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "func", None):
        parser.print_help(sys.stderr)
        return 2
    out = Out(args.json)
    load_cache()
    start = time.perf_counter()
    try:
        status = args.func(args, out)
    except UsageError as exc:
        print(f"gnk {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (NonzeroRemainder, NonIntegerValue) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except GnkError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"gnk {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.profile:
        _profile()
        print(f"[profile] elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    save_cache()
    return status


if __name__ == "__main__":
    sys.exit(main())

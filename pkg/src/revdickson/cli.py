"""Command-line front end: evaluation, PP testing, scans, verification.

Conventions shared by every subcommand:

  * field elements appear as integer codes (base-p digit encoding);
  * output is deterministic for a given configuration, including under
    --threads > 1;
  * exit status 0 = success / all checks passed, 1 = a verified claim or
    agreement check failed, 2 = usage or parameter error.

A flat key=value config file (--config) can supply any long flag;
explicit flags win over the file.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .dickson import (
    DEFAULT_DEGREE_BOUND,
    DicksonParams,
    PrimePowerSum,
    closed_form_sum,
    rdk_eval_functional,
    rdk_eval_matrix,
    rdk_eval_rec,
    rdk_eval_rec_seq,
    rdk_poly,
    rdk_poly_direct,
    rdk_poly_seq,
    reduced_pp_poly,
)
from .errors import ToolkitError
from .ff import make_field
from .permcheck import Q_CAP, is_pp_exhaustive
from .theorems import (
    DEFAULT_GRID,
    GridConfig,
    claim_ids,
    verify_claim,
    write_csv,
    write_lines,
)

_SCAN_CHUNK = 512  # rows between progress-marker updates


# --- argument parsing helpers ----------------------------------------------


def _parse_int_list(text: str) -> list:
    out = [int(part) for part in text.split(",") if part != ""]
    if not out:
        raise ValueError(f"empty integer list: {text!r}")
    return out


def _parse_range(text: str) -> list:
    """Accept "a..b" (inclusive), a single integer, or "a,b,c"."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range: {text!r}")
        return list(range(lo, hi + 1))
    return _parse_int_list(text)


def _read_config(path: str) -> dict:
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"config line without '=': {line!r}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def _apply_config(args: argparse.Namespace):
    """Fill argparse fields left at None from the --config file."""
    if not getattr(args, "config", None):
        return
    table = _read_config(args.config)
    for key, value in table.items():
        dest = key.replace("-", "_")
        if not hasattr(args, dest):
            raise ValueError(f"unknown config key {key!r}")
        if getattr(args, dest) is None:
            setattr(args, dest, value)


def _need(args, name: str):
    value = getattr(args, name.replace("-", "_"))
    if value is None:
        raise ValueError(f"--{name} is required")
    return value


@dataclass(frozen=True)
class RunConfig:
    """Resolved settings for grid-walking subcommands."""

    p_list: tuple = ()
    e_list: tuple = ()
    k_policy: tuple | None = None  # None means all 0..p-1 per prime
    n_list: tuple = ()
    l_max: int = 4
    n_cap: int = 20000
    q_cap: int = 243
    fmt: str = "lines"
    out: str | None = None
    threads: int = 1
    seed: int = 0
    sample: int | None = None

    def validate(self):
        if self.q_cap > Q_CAP:
            raise ValueError(f"q-cap {self.q_cap} exceeds limit {Q_CAP}")
        if self.threads < 1:
            raise ValueError("threads must be positive")


# --- eval plumbing ----------------------------------------------------------


def _resolve_index(args) -> tuple:
    """Return (n, PrimePowerSum or None) from --n / --ls."""
    p = _need(args, "p")
    if args.ls is not None:
        pps = PrimePowerSum(int(p), tuple(_parse_int_list(args.ls)))
        return pps.n, pps
    if args.n is None:
        raise ValueError("one of --n or --ls is required")
    return int(args.n), None


def _int_code(ctx, raw) -> int:
    code = int(raw)
    ctx.check_element(code)
    return code


def _eval_one(ctx, params: DicksonParams, x: int, method: str, pps):
    if method == "rec":
        return rdk_eval_rec(ctx, params, x)
    if method == "matrix":
        return rdk_eval_matrix(ctx, params, x)
    if method == "functional":
        return rdk_eval_functional(ctx, params, x)
    if method == "poly":
        poly = rdk_poly(ctx.p, params)
        return poly.eval_in(ctx, x)
    if method == "closed":
        if pps is None:
            raise ValueError("--method closed requires --ls")
        form = closed_form_sum(pps, params.k)
        u = ctx.sub(1 % ctx.p, ctx.mul(4 % ctx.p, x))
        return form.eval_in(ctx, u)
    raise ValueError(f"unknown method {method!r}")


def cmd_eval(args) -> int:
    p = int(_need(args, "p"))
    e = int(args.e or 1)
    k = int(_need(args, "k"))
    n, pps = _resolve_index(args)
    ctx = make_field(p, e)
    params = DicksonParams(n, k, p)
    x = _int_code(ctx, _need(args, "x"))
    if pps is not None:
        print(f"n = {pps.n} = {pps.render()}")
    if args.all_methods:
        methods = ["rec", "matrix", "functional"]
        if n // 2 <= DEFAULT_DEGREE_BOUND:
            methods.append("poly")
        if pps is not None:
            methods.append("closed")
        values = [(m, _eval_one(ctx, params, x, m, pps)) for m in methods]
        for name, value in values:
            print(f"{name} {value}")
        agree = len({v for _, v in values}) == 1
        print(f"agree {'yes' if agree else 'no'}")
        return 0 if agree else 1
    print(_eval_one(ctx, params, x, args.method or "rec", pps))
    return 0


def cmd_poly(args) -> int:
    p = int(_need(args, "p"))
    k = int(_need(args, "k"))
    n, pps = _resolve_index(args)
    if pps is not None:
        print(f"n = {pps.n} = {pps.render()}")
    if args.reduced:
        if pps is None:
            raise ValueError("--reduced requires --ls")
        print(reduced_pp_poly(pps, k).render())
        return 0
    bound = int(args.max_degree or DEFAULT_DEGREE_BOUND)
    params = DicksonParams(n, k, p)
    print(rdk_poly(p, params, max_n=bound).render())
    return 0


def cmd_field_info(args) -> int:
    p = int(_need(args, "p"))
    e = int(args.e or 1)
    ctx = make_field(p, e)
    print(f"p = {ctx.p}")
    print(f"e = {ctx.e}")
    print(f"q = {ctx.q}")
    print(f"modulus = {ctx.modulus.render()}")
    return 0


def cmd_is_pp(args) -> int:
    p = int(_need(args, "p"))
    e = int(args.e or 1)
    k = int(_need(args, "k"))
    n, pps = _resolve_index(args)
    ctx = make_field(p, e)
    params = DicksonParams(n, k, p)
    if pps is not None:
        print(f"n = {pps.n} = {pps.render()}")
    report = is_pp_exhaustive(ctx, lambda a: rdk_eval_matrix(ctx, params, a))
    if report.is_pp:
        print("PP")
    else:
        x1, x2 = report.witness
        print(f"not PP; witness x1={x1} x2={x2}")
    return 0


# --- scan -------------------------------------------------------------------


def _scan_rows(task) -> list:
    """All rows for one (p, e, k) group, n increasing; one recurrence
    sweep evaluates every n at once."""
    p, e, k, n_list, q_cap = task
    ctx = make_field(p, e)
    if ctx.q > q_cap:
        raise ValueError(f"q={ctx.q} exceeds configured q-cap {q_cap}")
    n_max = max(n_list)
    wanted = set(n_list)
    rows = []
    q = ctx.q
    sub = ctx.sub
    mul = ctx.mul
    d_prev = [(2 - k) % p] * q
    d_cur = [1] * q
    values = {0: d_prev, 1: d_cur}

    def is_perm(vals) -> bool:
        seen = bytearray(q)
        for v in vals:
            if seen[v]:
                return False
            seen[v] = 1
        return True

    for n in range(2, n_max + 1):
        d_prev, d_cur = d_cur, [
            sub(d_cur[x], mul(x, d_prev[x])) for x in range(q)
        ]
        if n in wanted:
            values[n] = d_cur
    for n in sorted(wanted):
        if n > n_max:
            continue
        vals = values.get(n)
        rows.append((p, e, k, n, is_perm(vals) if vals is not None else False))
    return rows


def _scan_tasks(cfg: RunConfig) -> list:
    tasks = []
    for p in sorted(set(cfg.p_list)):
        for e in sorted(set(cfg.e_list)):
            if p**e > cfg.q_cap:
                continue
            ks = cfg.k_policy if cfg.k_policy is not None else range(p)
            for k in sorted(set(ks)):
                if 0 <= k < p:
                    tasks.append((p, e, k, tuple(sorted(set(cfg.n_list))),
                                  cfg.q_cap))
    return tasks


def _config_digest(cfg: RunConfig) -> str:
    text = (f"p={sorted(set(cfg.p_list))} e={sorted(set(cfg.e_list))} "
            f"k={sorted(set(cfg.k_policy)) if cfg.k_policy is not None else 'all'} "
            f"n={sorted(set(cfg.n_list))} q_cap={cfg.q_cap}")
    return hashlib.sha256(text.encode()).hexdigest()


def _read_marker(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            table = dict(line.strip().split("=", 1) for line in fh if line.strip())
        return table.get("config"), int(table.get("rows", "0"))
    except (OSError, ValueError):
        return None, 0


def _write_marker(path: str, digest: str, rows: int):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"config={digest}\nrows={rows}\n")


def _scan_row_text(row) -> str:
    p, e, k, n, flag = row
    return f"{p},{e},{k},{n},{'true' if flag else 'false'}"


def cmd_scan(args) -> int:
    cfg = RunConfig(
        p_list=tuple(_parse_int_list(_need(args, "p"))),
        e_list=tuple(_parse_range(args.e or "1")),
        k_policy=(None if (args.k is None or args.k == "all")
                  else tuple(_parse_range(args.k))),
        n_list=tuple(_parse_range(_need(args, "n"))),
        q_cap=int(args.q_cap or Q_CAP),
        out=args.out,
        threads=int(args.threads or 1),
    )
    cfg.validate()
    tasks = _scan_tasks(cfg)
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            groups = list(pool.map(_scan_rows, tasks))
    else:
        groups = [_scan_rows(t) for t in tasks]
    rows = [row for group in groups for row in group]

    if cfg.out is None:
        print("p,e,k,n,is_pp")
        for row in rows:
            print(_scan_row_text(row))
        return 0

    digest = _config_digest(cfg)
    marker = cfg.out + ".progress"
    done = 0
    mode = "w"
    if os.path.exists(marker) and os.path.exists(cfg.out):
        seen_digest, seen_rows = _read_marker(marker)
        if seen_digest == digest and 0 <= seen_rows <= len(rows):
            done = seen_rows
            mode = "a"
    with open(cfg.out, mode, encoding="utf-8", newline="") as fh:
        if mode == "w":
            fh.write("p,e,k,n,is_pp\n")
        for start in range(done, len(rows), _SCAN_CHUNK):
            for row in rows[start:start + _SCAN_CHUNK]:
                fh.write(_scan_row_text(row) + "\n")
            fh.flush()
            _write_marker(marker, digest, min(start + _SCAN_CHUNK, len(rows)))
    if os.path.exists(marker):
        os.remove(marker)
    return 0


# --- verify -----------------------------------------------------------------


def cmd_verify(args) -> int:
    grid = GridConfig(
        primes=tuple(_parse_int_list(args.p)) if args.p else DEFAULT_GRID.primes,
        e_max=int(args.e_max or DEFAULT_GRID.e_max),
        l_max=int(args.l_max or DEFAULT_GRID.l_max),
        n_cap=int(args.n_cap or DEFAULT_GRID.n_cap),
        q_cap=int(args.q_cap or DEFAULT_GRID.q_cap),
    )
    grid.validate()
    wanted = args.ids or "all"
    ids = claim_ids() if wanted == "all" else [
        part.strip() for part in wanted.split(",") if part.strip()
    ]
    threads = int(args.threads or 1)
    if threads > 1:
        from .theorems import verify_all

        results = verify_all(grid, ids=ids, workers=threads)
    else:
        results = [verify_claim(cid, grid) for cid in ids]

    fmt = args.format or "lines"
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            (write_csv if fmt == "csv" else write_lines)(results, fh)
    else:
        (write_csv if fmt == "csv" else write_lines)(results, sys.stdout)
    return 0 if all(r.passed for r in results) else 1


# --- cross-check ------------------------------------------------------------


def _cross_check_field(task):
    """Compare every evaluator on one (p, e, k) group; returns
    (checked_count, first mismatch or None)."""
    p, e, k, n_list, sample, seed = task
    ctx = make_field(p, e)
    n_max = max(n_list)
    polys = rdk_poly_seq(p, k, n_max) if n_max // 2 <= DEFAULT_DEGREE_BOUND \
        else None
    if polys is not None:
        for n in n_list:
            direct = rdk_poly_direct(p, DicksonParams(n, k, p), max_n=n_max)
            if direct != polys[n]:
                return 0, (p, e, k, n, None, "poly", polys[n].render(),
                           "direct", direct.render())
    if sample is None:
        points = list(range(ctx.q))
    else:
        rng = random.Random(f"{seed}:{p}:{e}:{k}")
        points = [rng.randrange(ctx.q) for _ in range(sample)]
    checked = 0
    for x in points:
        seq = rdk_eval_rec_seq(ctx, k, x, n_max)
        for n in n_list:
            params = DicksonParams(n, k, p)
            base = seq[n]
            pairs = [("matrix", rdk_eval_matrix(ctx, params, x)),
                     ("functional", rdk_eval_functional(ctx, params, x))]
            if polys is not None:
                pairs.append(("poly", polys[n].eval_in(ctx, x)))
            checked += 1
            for name, value in pairs:
                if value != base:
                    return checked, (p, e, k, n, x, "rec", base, name, value)
    return checked, None


def cmd_cross_check(args) -> int:
    cfg = RunConfig(
        p_list=tuple(_parse_int_list(_need(args, "p"))),
        e_list=tuple(_parse_range(args.e or "1")),
        k_policy=(None if (args.k is None or args.k == "all")
                  else tuple(_parse_range(args.k))),
        n_list=tuple(_parse_range(args.n or "0..50")),
        q_cap=int(args.q_cap or Q_CAP),
        threads=int(args.threads or 1),
        seed=int(args.seed or 0),
        sample=int(args.sample) if args.sample is not None else None,
    )
    cfg.validate()
    tasks = [(p, e, k, tuple(sorted(set(cfg.n_list))), cfg.sample, cfg.seed)
             for (p, e, k, _ns, _qc) in _scan_tasks(cfg)]
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            outcomes = list(pool.map(_cross_check_field, tasks))
    else:
        outcomes = [_cross_check_field(t) for t in tasks]
    total = sum(c for c, _ in outcomes)
    for _, bad in outcomes:
        if bad is not None:
            p, e, k, n, x, name_a, val_a, name_b, val_b = bad
            where = f"p={p} e={e} k={k} n={n}" + \
                ("" if x is None else f" x={x}")
            print(f"disagree {where} {name_a}={val_a} {name_b}={val_b}")
            return 1
    print(f"groups={len(tasks)} tuples={total} agree=yes")
    return 0


# --- entry point ------------------------------------------------------------


def _add_common(sub, *names):
    if "p" in names:
        sub.add_argument("--p", help="prime, or comma list for grids")
    if "e" in names:
        sub.add_argument("--e", help="extension degree, or range a..b")
    if "k" in names:
        sub.add_argument("--k", help="kind parameter (0..p-1); range or 'all'")
    if "n" in names:
        sub.add_argument("--n", help="index n, or range a..b")
    if "ls" in names:
        sub.add_argument("--ls", help="comma list of exponents: n = sum p^l")
    if "out" in names:
        sub.add_argument("--out", help="output file (default stdout)")
    if "threads" in names:
        sub.add_argument("--threads", help="worker process count")
    if "q-cap" in names:
        sub.add_argument("--q-cap", dest="q_cap",
                         help="largest field order to touch")
    sub.add_argument("--config", help="key=value file supplying defaults")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revdickson",
        description="Reversed Dickson polynomial toolkit over F_{p^e}")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("field-info", help="describe one finite field")
    _add_common(sub, "p", "e")
    sub.set_defaults(func=cmd_field_info)

    sub = subs.add_parser("eval", help="evaluate D_{n,k}(1, x)")
    _add_common(sub, "p", "e", "k", "n", "ls")
    sub.add_argument("--x", help="evaluation point (element code)")
    sub.add_argument("--method", choices=["rec", "matrix", "functional",
                                          "poly", "closed"])
    sub.add_argument("--all-methods", dest="all_methods",
                     action="store_true",
                     help="run every applicable method and compare")
    sub.set_defaults(func=cmd_eval)

    sub = subs.add_parser("poly", help="print D_{n,k} mod p, or a reduction")
    _add_common(sub, "p", "k", "n", "ls")
    sub.add_argument("--max-degree", dest="max_degree",
                     help="dense degree bound")
    sub.add_argument("--reduced", action="store_true",
                     help="print the few-term reduction for --ls instead")
    sub.set_defaults(func=cmd_poly)

    sub = subs.add_parser("is-pp", help="exhaustive permutation test")
    _add_common(sub, "p", "e", "k", "n", "ls")
    sub.set_defaults(func=cmd_is_pp)

    sub = subs.add_parser("scan", help="CSV of PP verdicts over a grid")
    _add_common(sub, "p", "e", "k", "n", "out", "threads", "q-cap")
    sub.set_defaults(func=cmd_scan)

    sub = subs.add_parser("verify", help="check registered claims")
    sub.add_argument("ids", nargs="?", default=None,
                     help="comma list of claim ids, or 'all'")
    _add_common(sub, "p", "out", "threads", "q-cap")
    sub.add_argument("--e-max", dest="e_max")
    sub.add_argument("--l-max", dest="l_max")
    sub.add_argument("--n-cap", dest="n_cap")
    sub.add_argument("--format", choices=["lines", "csv"])
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("cross-check",
                          help="compare all evaluators over a grid")
    _add_common(sub, "p", "e", "k", "n", "threads", "q-cap")
    sub.add_argument("--sample", help="random points per field instead of all")
    sub.add_argument("--seed", help="seed for --sample point choice")
    sub.set_defaults(func=cmd_cross_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return args.func(args)
    except ToolkitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

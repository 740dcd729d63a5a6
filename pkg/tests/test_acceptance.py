"""Acceptance suite: eight exact-arithmetic criteria, one verdict line each.

Every comparison is equality; there are no tolerances.  Each test prints
ACCEPTANCE <n> <name>: PASS or FAIL before asserting, so a plain pytest
run yields one verdict line per criterion.
"""

import time
from fractions import Fraction
from itertools import combinations_with_replacement

from revdickson import (
    DEFAULT_GRID,
    DicksonParams,
    PrimePowerSum,
    check_char3_square_substitution,
    closed_form_sum,
    dickson_first_poly,
    is_pp_exhaustive,
    is_pp_monomial,
    make_field,
    rdk_eval_functional,
    rdk_eval_matrix,
    rdk_eval_rec_seq,
    rdk_poly_direct,
    rdk_poly_seq,
    rdk_value_quarter,
    reduced_pp_poly,
    verify_all,
)
from revdickson.cli import main as cli_main

EVAL_FIELDS = tuple((p, e) for p in (3, 5, 7, 11) for e in (1, 2))
SMALL_FIELDS = ((3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2))


def _verdict(num: int, name: str, ok: bool, detail=""):
    print(f"ACCEPTANCE {num} {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) {detail}"


def test_01_five_way_evaluator_agreement():
    start = time.monotonic()
    n_max = 100
    bad = []
    for p, e in EVAL_FIELDS:
        ctx = make_field(p, e)
        for k in range(p):
            polys = rdk_poly_seq(p, k, n_max)
            for n in range(n_max + 1):
                if rdk_poly_direct(p, DicksonParams(n, k, p)) != polys[n]:
                    bad.append(("direct", p, e, k, n))
            for x in ctx.elements():
                seq = rdk_eval_rec_seq(ctx, k, x, n_max)
                for n in range(n_max + 1):
                    params = DicksonParams(n, k, p)
                    values = (
                        seq[n],
                        rdk_eval_matrix(ctx, params, x),
                        rdk_eval_functional(ctx, params, x),
                        polys[n].eval_in(ctx, x),
                    )
                    if len(set(values)) != 1:
                        bad.append((p, e, k, n, x, values))
    elapsed = time.monotonic() - start
    _verdict(1, "five-way evaluator agreement",
             not bad and elapsed < 60, f"mismatches={bad[:5]} t={elapsed:.1f}s")


def test_02_quarter_point_closed_value():
    bad = []
    for p, e in EVAL_FIELDS:
        ctx = make_field(p, e)
        quarter = ctx.inv(4 % p)
        for k in range(p):
            seq = rdk_eval_rec_seq(ctx, k, quarter, 200)
            for n in range(201):
                if seq[n] != rdk_value_quarter(p, DicksonParams(n, k, p)):
                    bad.append((p, e, k, n))
    _verdict(2, "quarter-point closed value", not bad, str(bad[:5]))


def _u_expansion(i: int, p: int, l: int, k: int) -> dict:
    """Rational u-coefficients of the four structured families, i extra
    units added to p**l; exact fractions reduced into Z_p."""
    P = p**l
    half = (P - 1) // 2
    shapes = {
        0: ((half, Fraction(k, 2)), (0, 1 - Fraction(k, 2))),
        1: ((half + 1, Fraction(2 - k, 4)), (half, Fraction(k, 4)),
            (0, Fraction(1, 2))),
        2: ((half + 1, Fraction(4 - k, 8)), (half, Fraction(k, 8)),
            (1, Fraction(2 - k, 8)), (0, Fraction(k + 2, 8))),
        3: ((half + 2, Fraction(2 - k, 16)), (half + 1, Fraction(3, 8)),
            (half, Fraction(k, 16)), (1, Fraction(3 - k, 8)),
            (0, Fraction(k + 1, 8))),
    }
    acc = {}
    for e_, c in shapes[i]:
        acc[e_] = acc.get(e_, Fraction(0)) + c
    return {e_: int(c.numerator * pow(c.denominator, -1, p) % p)
            for e_, c in acc.items()
            if c.numerator * pow(c.denominator, -1, p) % p}


def test_03_closed_form_fidelity():
    bad = []
    for p, e in SMALL_FIELDS:
        ctx = make_field(p, e)
        for l in range(4):
            for k in range(p):
                for extra in range(4):
                    pps = PrimePowerSum(p, (l,) + (0,) * extra)
                    form = closed_form_sum(pps, k)
                    if form.terms != _u_expansion(extra, p, l, k):
                        bad.append(("symbolic", p, l, k, extra))
                        continue
                    params = DicksonParams(pps.n, k, p)
                    for x in ctx.elements():
                        u = ctx.sub(1, ctx.mul(4 % p, x))
                        if form.eval_in(ctx, u) != rdk_eval_matrix(
                                ctx, params, x):
                            bad.append(("value", p, e, l, k, extra, x))
                            break
    _verdict(3, "closed-form fidelity", not bad, str(bad[:5]))


def test_04_reduced_polynomial_equivalence():
    bad = []
    for p, e in SMALL_FIELDS:
        ctx = make_field(p, e)
        for i in range(1, 5):
            for ls in combinations_with_replacement(range(3, -1, -1), i):
                pps = PrimePowerSum(p, ls)
                for k in range(p):
                    params = DicksonParams(pps.n, k, p)
                    direct = is_pp_exhaustive(
                        ctx, lambda a: rdk_eval_matrix(ctx, params, a)).is_pp
                    red = reduced_pp_poly(pps, k)
                    reduced = is_pp_exhaustive(
                        ctx, lambda a: red.eval_in(ctx, a)).is_pp
                    if direct != reduced:
                        bad.append((p, e, ls, k, direct, reduced))
    # four-term family: (2-k) x^((P+3)/2) + 6 x^((P+1)/2) + k x^((P-1)/2)
    # + 2(3-k) x, exponents merged, coefficients reduced mod p, and the
    # constant that appears at l = 0 dropped (the reduction is constant-free)
    for p in (3, 5, 7, 11):
        for l in range(4):
            P = p**l
            for k in range(p):
                want = {}
                for e_, c in (((P + 3) // 2, 2 - k), ((P + 1) // 2, 6),
                              ((P - 1) // 2, k), (1, 2 * (3 - k))):
                    want[e_] = (want.get(e_, 0) + c) % p
                want = {e_: c for e_, c in want.items() if c and e_}
                got = reduced_pp_poly(PrimePowerSum(p, (l, 0, 0, 0)), k).terms
                if got != want:
                    bad.append(("four-term", p, l, k, got, want))
    _verdict(4, "reduced-polynomial equivalence", not bad, str(bad[:5]))


def test_05_claim_registry_on_default_grid():
    start = time.monotonic()
    results = {r.id: r for r in verify_all(DEFAULT_GRID)}
    elapsed = time.monotonic() - start
    failed = sorted(cid for cid, r in results.items() if not r.passed)
    ok = not failed
    t31 = results.get("T3.1")
    ok = ok and t31 is not None and t31.tuples_checked >= 20
    t33 = results.get("T3.3")
    ok = ok and t33 is not None and \
        t33.coverage.get("expect-PP", 0) > 0 and \
        t33.coverage.get("expect-not-PP", 0) > 0
    for cid in ("T6.3", "C6.1", "R4.HMS"):
        ok = ok and cid in results and results[cid].tuples_checked > 0
    ok = ok and elapsed < 300
    _verdict(5, "claim registry on default grid", ok,
             f"failed={failed} t={elapsed:.1f}s")


def test_06_identity_suite():
    bad = []
    n_max = 50
    for p, e in EVAL_FIELDS:
        ctx = make_field(p, e)
        for k in range(p):
            kc = k % p
            for x in ctx.elements():
                seq_k = rdk_eval_rec_seq(ctx, k, x, n_max)
                seq_0 = rdk_eval_rec_seq(ctx, 0, x, n_max)
                seq_1 = rdk_eval_rec_seq(ctx, 1, x, n_max)
                seq_2 = rdk_eval_rec_seq(ctx, 2, x, n_max)
                kx = ctx.mul(kc, x)
                for n in range(1, n_max + 1):
                    if n >= 2 and seq_k[n] != ctx.add(
                            ctx.mul(kx, seq_1[n - 2]), seq_0[n]):
                        bad.append(("kind1", p, e, k, n, x))
                    if seq_k[n] != ctx.add(
                            ctx.mul(kx, seq_2[n - 1]), seq_0[n]):
                        bad.append(("kind2", p, e, k, n, x))
    for l in (1, 3):
        n = (3**l + 1) // 2
        if dickson_first_poly(3, n - 1).coeffs[0] != 0:
            bad.append(("divisibility", l))
        for k in range(3):
            if not check_char3_square_substitution(l, k):
                bad.append(("substitution", l, k))
    _verdict(6, "identity suite", not bad, str(bad[:5]))


def test_07_monomial_oracle_cross_check():
    bad = []
    for p, e in ((3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3), (7, 2)):
        ctx = make_field(p, e)
        for n in range(1, 101):
            fast = is_pp_monomial(n, ctx.q)
            slow = is_pp_exhaustive(ctx, lambda a: ctx.pow(a, n)).is_pp
            if fast != slow:
                bad.append((ctx.q, n, fast, slow))
    _verdict(7, "monomial oracle cross-check", not bad, str(bad[:5]))


def test_08_deterministic_outputs(tmp_path):
    scan_args = ["scan", "--p", "3,5", "--e", "1..2", "--k", "all",
                 "--n", "1..30"]
    verify_args = ["verify", "all", "--format", "csv"]
    outs = []
    for tag, threads in (("a", "1"), ("b", "4")):
        f = tmp_path / f"scan_{tag}.csv"
        rc = cli_main(scan_args + ["--out", str(f), "--threads", threads])
        outs.append((rc, f.read_bytes()))
    scan_ok = outs[0] == outs[1] and outs[0][0] == 0
    vouts = []
    for tag, threads in (("a", "1"), ("b", "4")):
        f = tmp_path / f"verify_{tag}.csv"
        rc = cli_main(verify_args + ["--out", str(f), "--threads", threads])
        vouts.append((rc, f.read_bytes()))
    verify_ok = vouts[0] == vouts[1] and vouts[0][0] == 0
    _verdict(8, "deterministic outputs", scan_ok and verify_ok,
             f"scan_ok={scan_ok} verify_ok={verify_ok}")

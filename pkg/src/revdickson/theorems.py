"""Registry of permutation claims checked against the exhaustive oracle.

Each claim is data, not a code branch: a parameter domain (every tuple of
it satisfies the claim's hypotheses) plus an expected verdict.  Verifying
a claim walks its domain over a finite grid and compares the expectation
against a full scan of the field.  Three claim shapes exist:

  * predicate    -- D_{n,k} permutes F_{p^e} iff a side condition holds;
  * equivalence  -- D_{n,k} and a named few-term polynomial permute (or
                    fail to permute) together;
  * g-never      -- a named few-term polynomial itself never permutes.

The oracle never consults the claim being tested: it evaluates D_{n,k}
point by point with the O(log n) evaluator and checks injectivity, so a
wrong expectation cannot pass.  Residuosity side conditions use legendre
on representatives reduced mod p; exponent multisets are canonicalized
to descending order before hypothesis matching.
"""

from __future__ import annotations

import csv
import functools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, NamedTuple

from .dickson import DicksonParams, SparsePoly, rdk_eval_matrix
from .errors import FieldTooLarge, NotPrime, UnknownClaim
from .ff import is_prime, legendre, make_field
from .permcheck import Q_CAP, is_pp_exhaustive


@dataclass(frozen=True)
class GridConfig:
    """Finite search grid: fields F_{p^e} with p in `primes`, e up to
    e_max and p**e <= q_cap; exponents l up to l_max; indices n capped."""

    primes: tuple = (3, 5, 7, 11)
    e_max: int = 5
    l_max: int = 4
    n_cap: int = 20000
    q_cap: int = 243

    def validate(self):
        if self.q_cap > Q_CAP:
            raise FieldTooLarge(
                f"grid q_cap {self.q_cap} exceeds exhaustive cap {Q_CAP}"
            )
        for p in self.primes:
            if p == 2 or not is_prime(p):
                raise NotPrime(f"grid prime {p} is not an odd prime")
        if self.e_max < 1 or self.l_max < 0 or self.n_cap < 1:
            raise ValueError("grid ranges must be non-empty")


DEFAULT_GRID = GridConfig()


class Case(NamedTuple):
    p: int
    e: int
    k: int
    ls: tuple


@dataclass(frozen=True)
class TupleOutcome:
    case: Case
    expected: str
    observed: str
    passed: bool
    side: str  # which direction of the claim this tuple exercises


@dataclass(frozen=True)
class ClaimResult:
    id: str
    tuples_checked: int
    failures: tuple
    passed: bool
    coverage: dict = field(default_factory=dict)
    outcomes: tuple = ()


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    cases: Callable  # grid -> list[Case]
    judge: Callable  # case -> TupleOutcome


# --- oracle ----------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _dickson_is_pp(p: int, e: int, n: int, k: int) -> bool:
    ctx = make_field(p, e)
    params = DicksonParams(n, k, p)
    return is_pp_exhaustive(ctx, lambda a: rdk_eval_matrix(ctx, params, a)).is_pp


@functools.lru_cache(maxsize=None)
def _sparse_is_pp(p: int, e: int, items: tuple) -> bool:
    ctx = make_field(p, e)
    g = SparsePoly(p, dict((ex, c) for ex, c in items))
    return is_pp_exhaustive(ctx, lambda a: g.eval_in(ctx, a)).is_pp


def _xterms(p: int, pairs) -> tuple:
    """Merge (coeff, exponent) pairs into canonical sorted items mod p."""
    acc: dict = {}
    for c, ex in pairs:
        acc[ex] = (acc.get(ex, 0) + c) % p
    return tuple(sorted((ex, c) for ex, c in acc.items() if c))


# --- domains ---------------------------------------------------------------


def _fields(grid: GridConfig):
    out = []
    for p in sorted(set(grid.primes)):
        for e in range(1, grid.e_max + 1):
            if p**e > grid.q_cap:
                break
            out.append((p, e))
    return out


def _multisets(grid: GridConfig, size: int):
    # descending tuples; CWR over a descending alphabet keeps each sorted
    return list(
        combinations_with_replacement(range(grid.l_max, -1, -1), size)
    )


def _domain(grid, size, p_ok, ks, hyp=None):
    cases = []
    for p, e in _fields(grid):
        if not p_ok(p):
            continue
        for k in ks(p):
            for ls in _multisets(grid, size):
                n = sum(p**l for l in ls)
                if n < 2 or n > grid.n_cap:
                    continue
                if hyp is not None and not hyp(p, e, k, ls):
                    continue
                cases.append(Case(p, e, k, ls))
    return cases


def _powers(case: Case):
    return [case.p**l for l in case.ls]


def _nz(values):
    return [v for v in values if v > 1]


def _odd_count(ls) -> int:
    return sum(l % 2 for l in ls)


# --- judges ----------------------------------------------------------------


def _label(b: bool) -> str:
    return "PP" if b else "not-PP"


def _judge_predicate(expected: Callable):
    def judge(case: Case) -> TupleOutcome:
        n = sum(case.p**l for l in case.ls)
        want = expected(case)
        got = _dickson_is_pp(case.p, case.e, n, case.k)
        return TupleOutcome(case, _label(want), _label(got), want == got,
                            "expect-" + _label(want))

    return judge


def _judge_equivalence(builder: Callable):
    def judge(case: Case) -> TupleOutcome:
        n = sum(case.p**l for l in case.ls)
        d_pp = _dickson_is_pp(case.p, case.e, n, case.k)
        items = _xterms(case.p, builder(case))
        g_pp = _sparse_is_pp(case.p, case.e, items)
        side = "both-PP" if d_pp and g_pp else (
            "both-not-PP" if not d_pp and not g_pp else "split")
        observed = f"D={_label(d_pp)},g={_label(g_pp)}"
        return TupleOutcome(case, "same-verdict", observed, d_pp == g_pp,
                            side)

    return judge


def _judge_g_never(builder: Callable):
    def judge(case: Case) -> TupleOutcome:
        items = _xterms(case.p, builder(case))
        g_pp = _sparse_is_pp(case.p, case.e, items)
        return TupleOutcome(case, "not-PP", _label(g_pp), not g_pp,
                            "expect-not-PP")

    return judge


# --- side-condition helpers ------------------------------------------------


def _inv(a: int, p: int) -> int:
    return pow(a % p, -1, p)


def _neg_quarter_square(p: int) -> int:
    # legendre of -1/4; equals legendre(-1) since 4 is a square
    return legendre(-_inv(4, p) % p, p)


def _ratio3(k: int, p: int) -> int:
    # 3k / (2(k-3)) mod p, defined for k != 3
    return 3 * k * _inv(2 * (k - 3), p) % p


def _ratio4(k: int, p: int) -> int:
    # 2(k-6) / (2-k) mod p, defined for k != 2
    return 2 * (k - 6) * _inv(2 - k, p) % p


def _ratio2(k: int, p: int) -> int:
    # 2k / (k-2) mod p, defined for k != 2
    return 2 * k * _inv(k - 2, p) % p


# --- reduced-polynomial builders (only claims that name one) ---------------


def _g_n1(case: Case):
    # four-term reduction for n = p^l + 3
    big = case.p ** case.ls[0]
    k = case.k
    return [(2 - k, (big + 3) // 2), (6, (big + 1) // 2),
            (k, (big - 1) // 2), (2 * (3 - k), 1)]


def _g_t35(case: Case):
    big = case.p ** case.ls[0]
    return [(3, (big + 1) // 2), (1, (big - 1) // 2), (1, 1)]


def _g_r6n(case: Case):
    big = case.p ** case.ls[0]
    return [(1, (big + 3) // 2), (3, (big + 1) // 2), (3, 1)]


def _g_f3(case: Case):
    # seven-term reduction for n = p^a + p^b + p^c
    a, b, c = _powers(case)
    n = a + b + c
    k = case.k
    return ([(k, (n - 1) // 2)]
            + [(2 - k, (x + y) // 2) for x, y in ((a, b), (a, c), (b, c))]
            + [(k, (x - 1) // 2) for x in (a, b, c)])


def _g_f3_k2(case: Case):
    a, b, c = _powers(case)
    n = a + b + c
    return [(1, (n - 1) // 2)] + [(1, (x - 1) // 2) for x in (a, b, c)]


def _g_h4(case: Case):
    # fifteen-term reduction for n = p^a + p^b + p^c + p^d
    pw = _powers(case)
    n = sum(pw)
    k = case.k
    return ([(2 - k, n // 2)]
            + [(k, (n - x - 1) // 2) for x in pw]
            + [(2 - k, (x + y) // 2) for x, y in combinations(pw, 2)]
            + [(k, (x - 1) // 2) for x in pw])


def _g_h4_k2(case: Case):
    pw = _powers(case)
    n = sum(pw)
    return ([(1, (n - x - 1) // 2) for x in pw]
            + [(1, (x - 1) // 2) for x in pw])


def _g_two_zero_k0(case: Case):
    a, b = _nz(_powers(case))
    mid = (a + b) // 2
    return [(1, mid + 1), (1, mid), (2, (a + 1) // 2), (2, (b + 1) // 2),
            (1, 1)]


def _g_two_zero_k1(case: Case):
    a, b = _nz(_powers(case))
    return [(1, (a + b) // 2 + 1), (1, (a - 1) // 2), (1, (b - 1) // 2),
            (1, 1)]


def _g_one_zero_k0(case: Case):
    a, b, c = _nz(_powers(case))
    return ([(1, (a + b + c + 1) // 2)]
            + [(1, (x + y) // 2) for x, y in ((a, b), (a, c), (b, c))]
            + [(1, (x + 1) // 2) for x in (a, b, c)])


def _g_no_zero_k0(case: Case):
    pw = _powers(case)
    return ([(1, sum(pw) // 2)]
            + [(1, (x + y) // 2) for x, y in combinations(pw, 2)])


def _g_binomial(case: Case):
    a, b = _powers(case)
    return [(1, (a - 1) // 2), (1, (b - 1) // 2)]


def _g_trinomial(case: Case):
    a, b = _powers(case)
    k = case.k
    return [(2 - k, (a + b) // 2), (k, (a - 1) // 2), (k, (b - 1) // 2)]


# --- the registry ----------------------------------------------------------


def _every(p):
    return range(p)


def _only(*vals):
    return lambda p: [v for v in vals if v < p]


def _shape3(ls) -> bool:
    # n = p^l + 3 written as a four-term multiset (l, 0, 0, 0)
    return ls[1:] == (0, 0, 0)


def _build_registry() -> dict:
    claims = []

    def add(cid, desc, size, p_ok, ks, hyp, judge):
        claims.append(Claim(
            cid, desc,
            lambda grid, s=size, po=p_ok, kk=ks, hy=hyp: _domain(
                grid, s, po, kk, hy),
            judge,
        ))

    # ---- n = p^l + 3 ------------------------------------------------------
    add("T3.1",
        "p=3, k=0, n=3^l+3: permutes F_{3^e} iff gcd((3^l+3)/2, 3^e-1) = 1",
        4, lambda p: p == 3, _only(0),
        lambda p, e, k, ls: _shape3(ls),
        _judge_predicate(lambda c: math.gcd(
            (3 ** c.ls[0] + 3) // 2, 3 ** c.e - 1) == 1))

    add("T3.2",
        "p=3, k=1, n=3^l+3: never a permutation",
        4, lambda p: p == 3, _only(1),
        lambda p, e, k, ls: _shape3(ls),
        _judge_predicate(lambda c: False))

    def _t33(c: Case) -> bool:
        l = c.ls[0]
        if l == 0:
            return True
        return (l - 1) % c.e == 0 and ((l - 1) // c.e) % 2 == 0

    add("T3.3",
        "p=3, k=2, n=3^l+3: permutes F_{3^e} iff l=0 or l=me+1, m even",
        4, lambda p: p == 3, _only(2),
        lambda p, e, k, ls: _shape3(ls),
        _judge_predicate(_t33))

    add("T3.4",
        "p>5, k=2, n=p^l+3, -1/4 a square mod p: permutes iff l=0",
        4, lambda p: p > 5, _only(2),
        lambda p, e, k, ls: _shape3(ls) and _neg_quarter_square(p) == 1,
        _judge_predicate(lambda c: c.ls[0] == 0))

    add("T3.5",
        "p>5, k=2, n=p^l+3, l>=1, -1/4 a non-square mod p: same verdict "
        "as 3x^((P+1)/2) + x^((P-1)/2) + x",
        4, lambda p: p > 5, _only(2),
        lambda p, e, k, ls: _shape3(ls) and ls[0] >= 1
        and _neg_quarter_square(p) == -1,
        _judge_equivalence(_g_t35))

    add("T3.R5",
        "p=5, k=2, n=5^l+3, l>=1: never a permutation",
        4, lambda p: p == 5, _only(2),
        lambda p, e, k, ls: _shape3(ls) and ls[0] >= 1,
        _judge_predicate(lambda c: False))

    add("T3.R7",
        "p>7, k=7, n=p^l+3: never a permutation",
        4, lambda p: p > 7, _only(7),
        lambda p, e, k, ls: _shape3(ls),
        _judge_predicate(lambda c: False))

    add("T3.R6",
        "p>5, k=0, n=p^l+3, -6 a square mod p: never a permutation",
        4, lambda p: p > 5, _only(0),
        lambda p, e, k, ls: _shape3(ls) and legendre(-6 % p, p) == 1,
        _judge_predicate(lambda c: False))

    add("T3.R6N",
        "p>5, k=0, n=p^l+3, -6 a non-square mod p: same verdict as "
        "x^((P+3)/2) + 3x^((P+1)/2) + 3x",
        4, lambda p: p > 5, _only(0),
        lambda p, e, k, ls: _shape3(ls) and legendre(-6 % p, p) == -1,
        _judge_equivalence(_g_r6n))

    def _gen_ks(p):
        return [k for k in range(p)
                if (p == 5 and k != 2)
                or (p > 5 and k not in (0, 2))
                or (p > 7 and k != 7)]

    add("T3.GEN",
        "n=p^l+3, (p=5, k!=2) or (p>5, k not in {0,2}) or (p>7, k!=7): "
        "same verdict as the four-term reduction",
        4, lambda p: p >= 5, _gen_ks,
        lambda p, e, k, ls: _shape3(ls),
        _judge_equivalence(_g_n1))

    # ---- n = p^a + p^b + p^c ----------------------------------------------
    add("T4.1",
        "p=3, k=0, n=3^a+3^b+3^c: never a permutation",
        3, lambda p: p == 3, _only(0), None,
        _judge_predicate(lambda c: False))

    add("T4.K1Z1",
        "p=3, k=1, exactly one of a,b,c zero: never a permutation",
        3, lambda p: p == 3, _only(1),
        lambda p, e, k, ls: ls.count(0) == 1,
        _judge_predicate(lambda c: False))

    add("T4.K1NZ",
        "p=3, k=1, a,b,c all nonzero: same verdict as the seven-term "
        "reduction",
        3, lambda p: p == 3, _only(1),
        lambda p, e, k, ls: ls.count(0) == 0,
        _judge_equivalence(_g_f3))

    add("T4.K2Z1",
        "p=3, k=2, exactly one of a,b,c zero: never a permutation",
        3, lambda p: p == 3, _only(2),
        lambda p, e, k, ls: ls.count(0) == 1,
        _judge_predicate(lambda c: False))

    add("T4.K2NZ",
        "p=3, k=2, a,b,c all nonzero: same verdict as "
        "x^((n-1)/2) + x^((A-1)/2) + x^((B-1)/2) + x^((C-1)/2)",
        3, lambda p: p == 3, _only(2),
        lambda p, e, k, ls: ls.count(0) == 0,
        _judge_equivalence(_g_f3_k2))

    add("T4.QR",
        "p>3, k!=3, 3k/(2(k-3)) a square mod p: permutes iff a=b=c=0",
        3, lambda p: p > 3,
        lambda p: [k for k in range(p) if k != 3],
        lambda p, e, k, ls: legendre(_ratio3(k, p), p) == 1,
        _judge_predicate(lambda c: c.ls == (0, 0, 0)))

    add("T4.K3",
        "p>3, k=3, n=p^a+p^b+p^c: never a permutation",
        3, lambda p: p > 3, _only(3), None,
        _judge_predicate(lambda c: False))

    add("T4.QNR",
        "p>3, k!=3, 3k/(2(k-3)) a non-square mod p: same verdict as the "
        "seven-term reduction",
        3, lambda p: p > 3,
        lambda p: [k for k in range(p) if k != 3],
        lambda p, e, k, ls: legendre(_ratio3(k, p), p) == -1,
        _judge_equivalence(_g_f3))

    def _hms_cases(grid: GridConfig):
        cases = []
        for p, e in _fields(grid):
            ls = (e, 0, 0)
            if sum(p**l for l in ls) <= grid.n_cap:
                cases.append(Case(p, e, 0, ls))
        return cases

    claims.append(Claim(
        "R4.HMS",
        "k=0, n=p^e+2: permutes F_{p^e} iff p^e = 1 mod 3",
        _hms_cases,
        _judge_predicate(lambda c: c.p ** c.e % 3 == 1)))

    # ---- n = p^a + p^b + p^c + p^d ----------------------------------------
    add("T5.parity",
        "p=3, k=0, exactly two exponents zero, nonzero pair of equal "
        "parity: never a permutation",
        4, lambda p: p == 3, _only(0),
        lambda p, e, k, ls: ls.count(0) == 2
        and _odd_count(_nz_ls(ls)) in (0, 2),
        _judge_predicate(lambda c: False))

    add("T5.parity2",
        "p=3, k=0, exactly two exponents zero, nonzero pair of mixed "
        "parity: same verdict as the five-term reduction",
        4, lambda p: p == 3, _only(0),
        lambda p, e, k, ls: ls.count(0) == 2
        and _odd_count(_nz_ls(ls)) == 1,
        _judge_equivalence(_g_two_zero_k0))

    add("T5.K1P",
        "p=3, k=1, exactly two exponents zero, nonzero pair both odd or "
        "of mixed parity: never a permutation",
        4, lambda p: p == 3, _only(1),
        lambda p, e, k, ls: ls.count(0) == 2
        and _odd_count(_nz_ls(ls)) in (1, 2),
        _judge_predicate(lambda c: False))

    add("T5.K1E",
        "p=3, k=1, exactly two exponents zero, nonzero pair both even: "
        "same verdict as the four-term reduction",
        4, lambda p: p == 3, _only(1),
        lambda p, e, k, ls: ls.count(0) == 2
        and _odd_count(_nz_ls(ls)) == 0,
        _judge_equivalence(_g_two_zero_k1))

    add("T5.Z1K0",
        "p=3, k=0, exactly one exponent zero, nonzero triple all even or "
        "with exactly two odd: never a permutation",
        4, lambda p: p == 3, _only(0),
        lambda p, e, k, ls: ls.count(0) == 1
        and _odd_count(_nz_ls(ls)) in (0, 2),
        _judge_predicate(lambda c: False))

    add("T5.Z1K0E",
        "p=3, k=0, exactly one exponent zero, nonzero triple all odd or "
        "with exactly one odd: same verdict as the seven-term reduction",
        4, lambda p: p == 3, _only(0),
        lambda p, e, k, ls: ls.count(0) == 1
        and _odd_count(_nz_ls(ls)) in (1, 3),
        _judge_equivalence(_g_one_zero_k0))

    add("T5.Z1K1",
        "p=3, k=1, exactly one exponent zero: never a permutation",
        4, lambda p: p == 3, _only(1),
        lambda p, e, k, ls: ls.count(0) == 1,
        _judge_predicate(lambda c: False))

    add("T5.NZK0",
        "p=3, k=0, all exponents nonzero, all odd, all even, or exactly "
        "two odd: never a permutation",
        4, lambda p: p == 3, _only(0),
        lambda p, e, k, ls: ls.count(0) == 0
        and _odd_count(ls) in (0, 2, 4),
        _judge_predicate(lambda c: False))

    add("T5.NZK0E",
        "p=3, k=0, all exponents nonzero, exactly one or three odd: same "
        "verdict as the seven-term reduction",
        4, lambda p: p == 3, _only(0),
        lambda p, e, k, ls: ls.count(0) == 0 and _odd_count(ls) in (1, 3),
        _judge_equivalence(_g_no_zero_k0))

    add("T5.NZK1",
        "p=3, k=1, all exponents nonzero: never a permutation",
        4, lambda p: p == 3, _only(1),
        lambda p, e, k, ls: ls.count(0) == 0,
        _judge_predicate(lambda c: False))

    add("T5.QR",
        "p>=5, k!=2, 2(k-6)/(2-k) a square mod p, at least two exponents "
        "nonzero: never a permutation",
        4, lambda p: p >= 5,
        lambda p: [k for k in range(p) if k != 2],
        lambda p, e, k, ls: ls.count(0) <= 2
        and legendre(_ratio4(k, p), p) == 1,
        _judge_predicate(lambda c: False))

    add("T5.QNR",
        "p>=5, k!=2, 2(k-6)/(2-k) a non-square mod p, at least two "
        "exponents nonzero: same verdict as the fifteen-term reduction",
        4, lambda p: p >= 5,
        lambda p: [k for k in range(p) if k != 2],
        lambda p, e, k, ls: ls.count(0) <= 2
        and legendre(_ratio4(k, p), p) == -1,
        _judge_equivalence(_g_h4))

    add("T5.k2",
        "p=1 mod 4, k=2, exponents all zero or all nonzero: permutes iff "
        "all zero",
        4, lambda p: p % 4 == 1, _only(2),
        lambda p, e, k, ls: ls.count(0) in (0, 4),
        _judge_predicate(lambda c: c.ls == (0, 0, 0, 0)))

    add("T5.k2N",
        "p=3 mod 4, k=2: same verdict as the eight-term reduction",
        4, lambda p: p % 4 == 3, _only(2), None,
        _judge_equivalence(_g_h4_k2))

    add("T5.k2R",
        "p=3 mod 4, k=2, all exponents zero (n=4): permutes",
        4, lambda p: p % 4 == 3, _only(2),
        lambda p, e, k, ls: ls == (0, 0, 0, 0),
        _judge_predicate(lambda c: True))

    # ---- n = p^a + p^b ----------------------------------------------------
    add("C6.1",
        "k=0, n=p^a+p^b: permutes F_{p^e} iff gcd(n/2, p^e-1) = 1",
        2, lambda p: True, _only(0), None,
        _judge_predicate(lambda c: math.gcd(
            sum(c.p**l for l in c.ls) // 2, c.p**c.e - 1) == 1))

    add("C6.2",
        "p=3, k=2, a and b both odd: same verdict as "
        "x^((3^a-1)/2) + x^((3^b-1)/2)",
        2, lambda p: p == 3, _only(2),
        lambda p, e, k, ls: _odd_count(ls) == 2,
        _judge_equivalence(_g_binomial))

    add("R6.2",
        "p=3, k=2, a and b both even, or of mixed parity with both "
        "positive: never a permutation",
        2, lambda p: p == 3, _only(2),
        lambda p, e, k, ls: _odd_count(ls) == 0
        or (_odd_count(ls) == 1 and ls.count(0) == 0),
        _judge_predicate(lambda c: False))

    add("T6.3",
        "p>3, k=2, n=p^a+p^b: never a permutation",
        2, lambda p: p > 3, _only(2), None,
        _judge_predicate(lambda c: False))

    add("C6.4",
        "p>3, k not in {0,2}, 2k/(k-2) a square mod p: permutes iff "
        "a=b=0",
        2, lambda p: p > 3,
        lambda p: [k for k in range(p) if k not in (0, 2)],
        lambda p, e, k, ls: legendre(_ratio2(k, p), p) == 1,
        _judge_predicate(lambda c: c.ls == (0, 0)))

    add("C6.5",
        "p>3, k not in {0,2}, 2k/(k-2) a non-square mod p: same verdict "
        "as the three-term reduction",
        2, lambda p: p > 3,
        lambda p: [k for k in range(p) if k not in (0, 2)],
        lambda p, e, k, ls: legendre(_ratio2(k, p), p) == -1,
        _judge_equivalence(_g_trinomial))

    add("R6.C3",
        "p=3, k=1, exponents not both zero: the three-term reduction "
        "itself never permutes",
        2, lambda p: p == 3, _only(1),
        lambda p, e, k, ls: ls != (0, 0),
        _judge_g_never(_g_trinomial))

    registry = {}
    for claim in claims:
        if claim.id in registry:
            raise ValueError(f"duplicate claim id {claim.id}")
        registry[claim.id] = claim
    return registry


def _nz_ls(ls):
    return [l for l in ls if l != 0]


REGISTRY = _build_registry()


def claim_ids() -> list:
    return list(REGISTRY)


def get_claim(claim_id: str) -> Claim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise UnknownClaim(f"no registered claim {claim_id!r}") from None


# --- verification ----------------------------------------------------------


def verify_claim(claim_id: str, grid: GridConfig = DEFAULT_GRID) -> ClaimResult:
    grid.validate()
    claim = get_claim(claim_id)
    outcomes = tuple(claim.judge(case) for case in claim.cases(grid))
    failures = tuple(o for o in outcomes if not o.passed)
    coverage = dict(Counter(o.side for o in outcomes))
    return ClaimResult(claim.id, len(outcomes), failures, not failures,
                       coverage, outcomes)


def verify_all(grid: GridConfig = DEFAULT_GRID, ids=None,
               workers: int = 1) -> list:
    grid.validate()
    todo = list(ids) if ids is not None else claim_ids()
    for cid in todo:
        get_claim(cid)  # fail fast on unknown ids
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(
                functools.partial(verify_claim, grid=grid), todo))
    return [verify_claim(cid, grid) for cid in todo]


# --- serialization ---------------------------------------------------------

CSV_COLUMNS = ("claim_id", "p", "e", "k", "ls", "expected", "observed",
               "passed")


def _bool_str(b: bool) -> str:
    return "true" if b else "false"


def write_csv(results, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for res in results:
        for o in res.outcomes:
            c = o.case
            w.writerow([res.id, c.p, c.e, c.k,
                        ",".join(str(l) for l in c.ls),
                        o.expected, o.observed, _bool_str(o.passed)])


def write_lines(results, fh):
    for res in results:
        for o in res.outcomes:
            c = o.case
            fh.write(
                f"claim={res.id} p={c.p} e={c.e} k={c.k} "
                f"ls={','.join(str(l) for l in c.ls)} "
                f"expected={o.expected} observed={o.observed} "
                f"passed={_bool_str(o.passed)}\n")
    for res in results:
        cov = ",".join(f"{side}:{res.coverage[side]}"
                       for side in sorted(res.coverage)) or "none"
        fh.write(
            f"summary claim={res.id} tuples={res.tuples_checked} "
            f"failures={len(res.failures)} passed={_bool_str(res.passed)} "
            f"coverage={cov}\n")

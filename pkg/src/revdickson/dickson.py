"""Reversed Dickson polynomials of the (k+1)-th kind at first argument 1.

The family D(n) = D_{n,k}(1, x) over a field of odd characteristic p
satisfies

    D(0) = 2 - k,   D(1) = 1,   D(n) = D(n-1) - x*D(n-2)   (n >= 2),

for a kind parameter 0 <= k <= p-1.  This module provides five
independent evaluation routes (recurrence, 2x2 matrix power, dense
polynomial built by the recurrence, dense polynomial built from
binomial coefficients, and the y-parametrisation through F_{q^2}),
plus:

* the value at x = 1/4, which is (k*(n-1) + 2) / 2**n;
* a few-term closed form in u = 1 - 4x for structured indices
  n = p**l1 + ... + p**li, and the constant-free rescaled polynomial
  whose permutation behaviour matches D's;
* the classical two-variable family D_n(x, 1) of the first kind, and
  checks of the identities linking the kinds to each other and, in
  characteristic 3, to the first-kind family under x -> 1 - x^2.

Everything is exact arithmetic over Z_p or F_{p^e}.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from . import ff
from .errors import (
    BadParity,
    CharacteristicMismatch,
    DegreeBoundExceeded,
    EvenCharacteristic,
    IndexTooSmall,
    InternalError,
    KindOutOfRange,
    NotPrime,
    StructureOverflow,
    WrongCharacteristic,
)
from .polyring import Poly, render_terms

INDEX_CAP = (1 << 63) - 1
DEFAULT_DEGREE_BOUND = 4096
_TERM_CAP = 24  # closed forms expand 2**i subsets; keep i sane


def _check_p(p: int):
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if p < 3 or not ff.is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")


def _check_k(k: int, p: int):
    if not 0 <= k <= p - 1:
        raise KindOutOfRange(f"k={k} outside [0, {p - 1}]")


@dataclass(frozen=True)
class DicksonParams:
    """Index n and kind parameter k for characteristic p."""

    n: int
    k: int
    p: int

    def __post_init__(self):
        _check_p(self.p)
        _check_k(self.k, self.p)
        if not 0 <= self.n <= INDEX_CAP:
            raise StructureOverflow(f"index {self.n} outside [0, 2**63)")


@dataclass(frozen=True)
class PrimePowerSum:
    """Structured index n = p**l1 + ... + p**li, kept as the exponent
    multiset ls in descending order."""

    p: int
    ls: tuple
    n: int = field(init=False)

    def __post_init__(self):
        _check_p(self.p)
        ls = tuple(sorted((int(l) for l in self.ls), reverse=True))
        if not ls:
            raise ValueError("at least one exponent is required")
        if ls[-1] < 0:
            raise ValueError("exponents must be non-negative")
        if len(ls) > _TERM_CAP:
            raise StructureOverflow(f"more than {_TERM_CAP} prime-power terms")
        object.__setattr__(self, "ls", ls)
        n = sum(self.p**l for l in ls)
        if n > INDEX_CAP:
            raise StructureOverflow(f"index {n} exceeds 2**63 - 1")
        object.__setattr__(self, "n", n)

    @property
    def i(self) -> int:
        return len(self.ls)

    def render(self) -> str:
        return " + ".join(f"{self.p}^{l}" if l else "1" for l in self.ls)


class SparsePoly:
    """Polynomial over Z_p with arbitrary-size exponents, for few-term
    closed forms whose exponents grow like p**l.  `var` records which
    variable the terms are in ("x", or "u" for u = 1 - 4x)."""

    __slots__ = ("p", "var", "terms", "items")

    def __init__(self, p: int, terms=None, var: str = "x"):
        self.p = p
        self.var = var
        t = {}
        for e_, c in (terms or {}).items():
            if e_ < 0:
                raise ValueError("exponents must be non-negative")
            c = int(c) % p
            if c:
                t[int(e_)] = c
        self.terms = t
        self.items = tuple(sorted(t.items()))

    def __eq__(self, other):
        return (
            isinstance(other, SparsePoly)
            and self.p == other.p
            and self.var == other.var
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.p, self.var, self.items))

    def __repr__(self):
        return f"SparsePoly(p={self.p}, {self.render()})"

    @property
    def degree(self) -> int:
        return self.items[-1][0] if self.items else -1

    def eval_in(self, ctx, point: int) -> int:
        """Value at a field element (interpreted as a value of `var`).
        0**0 = 1; on nonzero points exponents reduce mod q-1."""
        if self.p != ctx.p:
            raise CharacteristicMismatch(
                f"terms over Z_{self.p}, field of characteristic {ctx.p}"
            )
        acc = 0
        add = ctx.add
        mul = ctx.mul
        cpow = ctx.pow
        for e_, c in self.items:
            if point == 0:
                if e_ == 0:
                    acc = add(acc, c)
                continue
            acc = add(acc, mul(c, cpow(point, e_)))
        return acc

    def to_dense(self, max_degree: int = DEFAULT_DEGREE_BOUND) -> Poly:
        if self.degree > max_degree:
            raise DegreeBoundExceeded(
                f"degree {self.degree} exceeds bound {max_degree}"
            )
        out = [0] * (self.degree + 1)
        for e_, c in self.items:
            out[e_] = c
        return Poly(self.p, out)

    @classmethod
    def from_dense(cls, poly: Poly, var: str = "x") -> "SparsePoly":
        return cls(poly.p, {i: c for i, c in enumerate(poly.coeffs) if c}, var)

    def render(self) -> str:
        return render_terms(self.items, self.var)


# --- evaluators -----------------------------------------------------------


def _check_ctx(ctx, params: DicksonParams):
    if ctx.p != params.p:
        raise CharacteristicMismatch(
            f"params for p={params.p}, field of characteristic {ctx.p}"
        )


def rdk_eval_rec(ctx, params: DicksonParams, x: int) -> int:
    """Evaluate by the linear recurrence; O(n) field operations."""
    _check_ctx(ctx, params)
    d0 = (2 - params.k) % ctx.p
    if params.n == 0:
        return d0
    d1 = 1
    sub = ctx.sub
    mul = ctx.mul
    for _ in range(params.n - 1):
        d0, d1 = d1, sub(d1, mul(x, d0))
    return d1


def rdk_eval_rec_seq(ctx, k: int, x: int, n_max: int) -> list:
    """[D(0), ..., D(n_max)] at one point, sharing a single recurrence pass."""
    _check_k(k, ctx.p)
    out = [(2 - k) % ctx.p]
    if n_max == 0:
        return out
    out.append(1)
    sub = ctx.sub
    mul = ctx.mul
    d0, d1 = out[0], 1
    for _ in range(n_max - 1):
        d0, d1 = d1, sub(d1, mul(x, d0))
        out.append(d1)
    return out


def rdk_eval_matrix(ctx, params: DicksonParams, x: int) -> int:
    """Evaluate as (2-k, 1) * M**n * (1, 0)^T with M = [[0, -x], [1, 1]];
    O(log n) 2x2 products, so huge structured n stays cheap."""
    _check_ctx(ctx, params)
    p2k = (2 - params.k) % ctx.p
    n = params.n
    if n == 0:
        return p2k
    add = ctx.add
    mul = ctx.mul
    ra, rb, rc, rd = 1, 0, 0, 1
    ba, bb, bc, bd = 0, ctx.neg(x), 1, 1
    while n:
        if n & 1:
            ra, rb, rc, rd = (
                add(mul(ra, ba), mul(rb, bc)),
                add(mul(ra, bb), mul(rb, bd)),
                add(mul(rc, ba), mul(rd, bc)),
                add(mul(rc, bb), mul(rd, bd)),
            )
        n >>= 1
        if n:
            ba, bb, bc, bd = (
                add(mul(ba, ba), mul(bb, bc)),
                add(mul(ba, bb), mul(bb, bd)),
                add(mul(bc, ba), mul(bd, bc)),
                add(mul(bc, bb), mul(bd, bd)),
            )
    return add(mul(p2k, ra), rc)


def rdk_value_quarter(p: int, params: DicksonParams) -> int:
    """D(n) at x = 1/4, which is (k*(n-1) + 2) / 2**n in Z_p; the
    exponent reduces mod p-1 since 2 is invertible."""
    if p != params.p:
        raise CharacteristicMismatch(f"p={p} vs params.p={params.p}")
    num = (params.k * ((params.n - 1) % p) + 2) % p
    den = pow(2, params.n % (p - 1), p)
    return num * pow(den, -1, p) % p


_QUAD_EXT = {}


def _quadratic_extension(ctx):
    """(ctx2, forward image list, pullback dict) for F_q inside F_{q^2}."""
    key = (ctx.p, ctx.e)
    got = _QUAD_EXT.get(key)
    if got is None:
        ctx2 = ff.make_field(ctx.p, 2 * ctx.e)
        emb = ff.embed_subfield(ctx, ctx2)
        fwd = [emb.apply(a) for a in ctx.elements()]
        back = {v: a for a, v in enumerate(fwd)}
        got = (ctx2, fwd, back)
        _QUAD_EXT[key] = got
    return got


def rdk_eval_functional(ctx, params: DicksonParams, x: int) -> int:
    """Evaluate through the parametrisation x = y*(1 - y): with
    s = sqrt(1 - 4x) in F_{q^2} and y = (1 + s)/2,

        D(n) = k * (y**n*(1-y) - y*(1-y)**n) / (2y - 1) + y**n + (1-y)**n,

    and at x = 1/4 (where y = 1/2) the closed value (k*(n-1) + 2)/2**n.
    The result always lands back in F_q."""
    _check_ctx(ctx, params)
    p = ctx.p
    n, k = params.n, params.k
    if n == 0:
        return (2 - k) % p
    if ctx.mul(4 % p, x) == 1:
        return rdk_value_quarter(p, params)
    ctx2, fwd, back = _quadratic_extension(ctx)
    x2 = fwd[x]
    s = ctx2.sqrt(ctx2.sub(1, ctx2.mul(4 % p, x2)))
    if s is None:
        raise InternalError("1 - 4x must be a square in the quadratic extension")
    inv2 = pow(2, -1, p)
    y = ctx2.mul(ctx2.add(1, s), inv2)
    z = ctx2.sub(1, y)
    yn = ctx2.pow(y, n)
    zn = ctx2.pow(z, n)
    num = ctx2.sub(ctx2.mul(yn, z), ctx2.mul(y, zn))
    val = ctx2.mul(k % p, ctx2.mul(num, ctx2.inv(s)))
    val = ctx2.add(val, ctx2.add(yn, zn))
    res = back.get(val)
    if res is None:
        raise InternalError("value escaped the base field")
    return res


# --- dense polynomial constructors ------------------------------------------


def rdk_poly(p: int, params: DicksonParams,
             max_n: int = DEFAULT_DEGREE_BOUND) -> Poly:
    """D_{n,k}(1, x) as a dense polynomial over Z_p, by the recurrence in
    Z_p[x]."""
    if p != params.p:
        raise CharacteristicMismatch(f"p={p} vs params.p={params.p}")
    if params.n > max_n:
        raise DegreeBoundExceeded(f"n={params.n} exceeds bound {max_n}")
    return rdk_poly_seq(p, params.k, params.n)[params.n]


def rdk_poly_seq(p: int, k: int, n_max: int) -> list:
    """[D(0), ..., D(n_max)] as dense polynomials, one recurrence pass."""
    _check_p(p)
    _check_k(k, p)
    d0 = Poly.const(p, 2 - k)
    out = [d0]
    if n_max == 0:
        return out
    d1 = Poly.one(p)
    out.append(d1)
    x = Poly.x(p)
    for _ in range(n_max - 1):
        d0, d1 = d1, d1 - x * d0
        out.append(d1)
    return out


@functools.lru_cache(maxsize=None)
def _pascal_mod(p: int):
    rows = [[1]]
    for i in range(1, p):
        prev = rows[-1]
        row = [1] * (i + 1)
        for j in range(1, i):
            row[j] = (prev[j - 1] + prev[j]) % p
        rows.append(row)
    return rows


def binom_mod(m: int, r: int, p: int) -> int:
    """C(m, r) mod p via base-p digits and a Pascal table (no factorials)."""
    if r < 0 or m < 0 or r > m:
        return 0
    rows = _pascal_mod(p)
    res = 1
    while r or m:
        mi = m % p
        ri = r % p
        if ri > mi:
            return 0
        res = res * rows[mi][ri] % p
        m //= p
        r //= p
    return res


def rdk_poly_direct(p: int, params: DicksonParams,
                    max_n: int = DEFAULT_DEGREE_BOUND) -> Poly:
    """D_{n,k}(1, x) straight from binomial coefficients: the x**i
    coefficient is (-1)**i * (C(n-i, i) - (k-1)*C(n-i-1, i-1)) mod p for
    i <= n/2 (with C(m, -1) = 0), which avoids the n-i division in the
    textbook (n - k*i)/(n - i) * C(n-i, i) form."""
    if p != params.p:
        raise CharacteristicMismatch(f"p={p} vs params.p={params.p}")
    n, k = params.n, params.k
    if n > max_n:
        raise DegreeBoundExceeded(f"n={n} exceeds bound {max_n}")
    if n == 0:
        return Poly.const(p, 2 - k)
    coeffs = [0] * (n // 2 + 1)
    for i in range(n // 2 + 1):
        c = (binom_mod(n - i, i, p) - (k - 1) * binom_mod(n - i - 1, i - 1, p)) % p
        coeffs[i] = -c % p if i & 1 else c
    return Poly(p, coeffs)


# --- closed forms for structured indices -------------------------------------


def closed_form_sum(pps: PrimePowerSum, k: int) -> SparsePoly:
    """Few-term expansion of D(n) in u = 1 - 4x for n = p**l1 + ... + p**li.

    Every sub-multiset S of the exponents contributes one term, writing
    sigma for the sum of p**l over S:

        |S| even:  (2-k)/2**i * u**(sigma/2)
        |S| odd:   k/2**i     * u**((sigma-1)/2)

    Like terms combine mod p and zero coefficients drop out."""
    p = pps.p
    _check_k(k, p)
    i = pps.i
    inv2i = pow(pow(2, i, p), -1, p)
    c_even = (2 - k) * inv2i % p
    c_odd = k * inv2i % p
    powers = [p**l for l in pps.ls]
    total = 1 << i
    sums = [0] * total
    terms = {}
    for mask in range(total):
        if mask:
            low = mask & -mask
            sums[mask] = sums[mask ^ low] + powers[low.bit_length() - 1]
        s = sums[mask]
        if mask.bit_count() & 1:
            e_, c = (s - 1) >> 1, c_odd
        else:
            e_, c = s >> 1, c_even
        terms[e_] = (terms.get(e_, 0) + c) % p
    return SparsePoly(p, terms, var="u")


def reduced_pp_poly(pps: PrimePowerSum, k: int) -> SparsePoly:
    """The closed form with its constant term dropped and every
    coefficient scaled by 2**i, written in x.  Dropping a constant and
    scaling by a unit preserve permutation behaviour, and substituting
    the bijection u = 1 - 4x does too, so this polynomial permutes
    F_{p^e} exactly when D(n) does."""
    cf = closed_form_sum(pps, k)
    scale = pow(2, pps.i, pps.p)
    terms = {e_: c * scale % pps.p for e_, c in cf.terms.items() if e_ != 0}
    return SparsePoly(pps.p, terms, var="x")


def closed_form_as_x_poly(pps: PrimePowerSum, k: int,
                          max_degree: int = DEFAULT_DEGREE_BOUND) -> Poly:
    """The closed form composed with u = 1 - 4x, as a dense polynomial.
    Only sensible while the degree stays desk-scale."""
    cf = closed_form_sum(pps, k)
    dense = cf.to_dense(max_degree)
    return dense.compose(Poly(pps.p, (1, -4)))


# --- classical first-kind family D_n(x, 1) -----------------------------------


def dickson_first_poly(p: int, n: int,
                       max_n: int = DEFAULT_DEGREE_BOUND) -> Poly:
    """Two-variable Dickson polynomial of the first kind at second
    argument 1:  E(0) = 2, E(1) = x, E(n) = x*E(n-1) - E(n-2)."""
    _check_p(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > max_n:
        raise DegreeBoundExceeded(f"n={n} exceeds bound {max_n}")
    d0 = Poly.const(p, 2)
    if n == 0:
        return d0
    x = Poly.x(p)
    d1 = x
    for _ in range(n - 1):
        d0, d1 = d1, x * d1 - d0
    return d1


def dickson_first_eval(ctx, n: int, x: int) -> int:
    """Value of the first-kind family at a field element."""
    if n < 0:
        raise ValueError("n must be non-negative")
    d0 = 2 % ctx.p
    if n == 0:
        return d0
    d1 = x
    sub = ctx.sub
    mul = ctx.mul
    for _ in range(n - 1):
        d0, d1 = d1, sub(mul(x, d1), d0)
    return d1


# --- identity checks ----------------------------------------------------------


def check_kind_mixing_identities(ctx, n: int, k: int) -> tuple:
    """Verify, for every x in the field, the two decompositions of kind
    k through kinds 1 and 2:

        D_{n,k} = k*x*D_{n-2, kind 1} + D_{n, kind 0}    (n >= 2)
        D_{n,k} = k*x*D_{n-1, kind 2} + D_{n, kind 0}    (n >= 1)

    Returns (first holds, second holds); requires n >= 2 so both apply."""
    if n < 2:
        raise IndexTooSmall("both decompositions need n >= 2")
    _check_k(k, ctx.p)
    ok_a = ok_b = True
    kc = k % ctx.p
    for x in ctx.elements():
        seq_k = rdk_eval_rec_seq(ctx, k, x, n)
        seq_0 = rdk_eval_rec_seq(ctx, 0, x, n)
        seq_1 = rdk_eval_rec_seq(ctx, 1, x, n)
        seq_2 = rdk_eval_rec_seq(ctx, 2, x, n)
        kx = ctx.mul(kc, x)
        if seq_k[n] != ctx.add(ctx.mul(kx, seq_1[n - 2]), seq_0[n]):
            ok_a = False
        if seq_k[n] != ctx.add(ctx.mul(kx, seq_2[n - 1]), seq_0[n]):
            ok_b = False
        if not (ok_a or ok_b):
            break
    return ok_a, ok_b


def check_char3_square_substitution(l: int, k: int, p: int = 3) -> bool:
    """Characteristic-3 bridge to the first-kind family: for odd l >= 1
    and n = (3**l + 1)/2, as polynomials over Z_3,

        x * D_{n,k}(1, 1 - x^2)
            = (k/2 - 1) * x * E(n) + (k/2) * E(n-1),

    where E(m) = D_m(x, 1) is the first-kind family and k/2 = 2k mod 3.
    The check also requires x to divide E(n-1), which makes the
    right-hand side a polynomial identity after clearing x."""
    if p != 3:
        raise WrongCharacteristic("this identity lives in characteristic 3")
    if l < 1 or l % 2 == 0:
        raise BadParity("l must be odd and positive")
    _check_k(k, 3)
    n = (3**l + 1) // 2
    dnk = rdk_poly(3, DicksonParams(n, k, 3), max_n=max(DEFAULT_DEGREE_BOUND, n))
    x = Poly.x(3)
    lhs = x * dnk.compose(Poly(3, (1, 0, -1)))
    en = dickson_first_poly(3, n, max_n=max(DEFAULT_DEGREE_BOUND, n))
    en1 = dickson_first_poly(3, n - 1, max_n=max(DEFAULT_DEGREE_BOUND, n))
    if en1.coeffs and en1.coeffs[0] != 0:
        return False
    half_k = 2 * k % 3
    rhs = (x * en).scale(half_k - 1) + en1.scale(half_k)
    return lhs == rhs

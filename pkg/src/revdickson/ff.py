"""Exact arithmetic in prime fields Z_p and extension fields F_{p^e}, p odd.

An element of F_{p^e} is a plain int in [0, q), q = p**e.  The int
a0 + a1*p + ... + a_{e-1}*p**(e-1) stands for the coefficient vector
(a0, ..., a_{e-1}) with respect to the powers of a root g of the field
modulus.  Enumeration order is plain int order 0, 1, ..., q-1, so zero
comes first, then the prime-field constants; every "first root" and
"first witness" rule in this package refers to that order.

The modulus of F_{p^e} is the first monic irreducible polynomial of
degree e in the ordering that compares coefficient vectors starting
from the constant coefficient.  For e = 1 the modulus is x itself.

Extension-field multiplication, inversion and powers run on discrete
exp/log tables built lazily per field (q <= 2**20); larger fields fall
back to direct polynomial arithmetic.  Contexts are immutable apart
from those idempotent caches.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import polyring
from .errors import (
    CharacteristicMismatch,
    DivisionByZero,
    EvenCharacteristic,
    InternalError,
    NoRoot,
    NotPrime,
    OrderOverflow,
)

_ORDER_CAP = 1 << 32      # largest supported field order
_TABLE_LIMIT = 1 << 20    # exp/log tables only for q up to this
_ADD_TABLE_LIMIT = 1 << 10

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact far beyond the field-order cap."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, +1} by Euler's criterion."""
    if p % 2 == 0:
        raise EvenCharacteristic("Legendre symbol needs an odd prime")
    if p < 3:
        raise NotPrime(f"{p} is not an odd prime")
    s = pow(a % p, (p - 1) // 2, p)
    return -1 if s == p - 1 else s


class FieldCtx:
    """The finite field F_{p^e}; elements are ints in [0, q)."""

    __slots__ = ("p", "e", "q", "modulus", "_mod_low",
                 "_exp", "_log", "_addtab", "_negtab", "_sqrttab")

    def __init__(self, p, e, q, modulus):
        self.p = p
        self.e = e
        self.q = q
        self.modulus = modulus
        self._mod_low = modulus.coeffs[:e]
        self._exp = None
        self._log = None
        self._addtab = None
        self._negtab = None
        self._sqrttab = None

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, q={self.q})"

    # --- element plumbing ---------------------------------------------

    def elements(self) -> range:
        """All q elements in enumeration order."""
        return range(self.q)

    def coeffs(self, a: int) -> tuple:
        """Coefficient vector (length e, constant term first)."""
        p = self.p
        out = []
        for _ in range(self.e):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        cs = list(cs)
        if len(cs) > self.e:
            raise ValueError(f"at most {self.e} coefficients expected")
        p = self.p
        a = 0
        for c in reversed(cs):
            if not 0 <= c < p:
                raise ValueError(f"coefficient {c} outside [0, {p})")
            a = a * p + c
        return a

    def check_element(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element code of F_{self.q}")
        return a

    def render(self, a: int) -> str:
        if self.e == 1:
            return str(a)
        return polyring.render_terms(enumerate(self.coeffs(a)), "g")

    # --- additive operations ---------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        tab = self._addtab
        if tab is None:
            if self.q > _ADD_TABLE_LIMIT:
                return self._add_direct(a, b)
            tab = self._build_add_table()
        return tab[a * self.q + b]

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        tab = self._negtab
        if tab is None:
            if self.q > _TABLE_LIMIT:
                return self._neg_direct(a)
            tab = self._negtab = [self._neg_direct(c) for c in range(self.q)]
        return tab[a]

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def _add_direct(self, a, b):
        p = self.p
        r = 0
        m = 1
        while a or b:
            r += (a % p + b % p) % p * m
            a //= p
            b //= p
            m *= p
        return r

    def _neg_direct(self, a):
        p = self.p
        r = 0
        m = 1
        while a:
            r += -a % p * m
            a //= p
            m *= p
        return r

    def _build_add_table(self):
        q = self.q
        tab = [0] * (q * q)
        for a in range(q):
            base = a * q
            for b in range(a, q):
                v = self._add_direct(a, b)
                tab[base + b] = v
                tab[b * q + a] = v
        self._addtab = tab
        return tab

    # --- multiplicative operations -----------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            if self.q > _TABLE_LIMIT:
                return self._mul_direct(a, b)
            self._build_tables()
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        if self.e == 1:
            return pow(a, -1, self.p)
        if self._exp is None:
            if self.q > _TABLE_LIMIT:
                return self._pow_direct(a, self.q - 2)
            self._build_tables()
        return self._exp[self.q - 1 - self._log[a]]

    def pow(self, a: int, m: int) -> int:
        """a**m for m >= 0 (0**0 = 1); exponents reduce mod q-1 on nonzero bases."""
        if m < 0:
            raise ValueError("exponent must be non-negative")
        if a == 0:
            return 1 if m == 0 else 0
        if self.e == 1:
            return pow(a, m % (self.p - 1), self.p) if m else 1
        if self._exp is None:
            if self.q > _TABLE_LIMIT:
                return self._pow_direct(a, m % (self.q - 1)) if m else 1
            self._build_tables()
        return self._exp[self._log[a] * (m % (self.q - 1)) % (self.q - 1)]

    def sqrt(self, a: int):
        """First s in enumeration order with s*s = a, or None."""
        if self._sqrttab is None:
            tab = {}
            for s in self.elements():
                tab.setdefault(self.mul(s, s), s)
            self._sqrttab = tab
        return self._sqrttab.get(a)

    # direct (table-free) arithmetic; also used to build the tables

    def _mul_direct(self, a, b):
        p = self.p
        e = self.e
        da = self.coeffs(a)
        db = self.coeffs(b)
        t = [0] * (2 * e - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    t[i + j] += ca * cb
        low = self._mod_low
        for i in range(2 * e - 2, e - 1, -1):
            c = t[i] % p
            if c:
                off = i - e
                for j, mj in enumerate(low):
                    t[off + j] -= c * mj
        r = 0
        m = 1
        for i in range(e):
            r += t[i] % p * m
            m *= p
        return r

    def _pow_direct(self, a, m):
        r = 1
        cur = a
        while m:
            if m & 1:
                r = self._mul_direct(r, cur) if self.e > 1 else r * cur % self.p
            cur = self._mul_direct(cur, cur) if self.e > 1 else cur * cur % self.p
            m >>= 1
        return r

    def _build_tables(self):
        q = self.q
        fac = _prime_factors(q - 1)
        gen = None
        for cand in range(2, q):
            if all(self._pow_direct(cand, (q - 1) // r) != 1 for r in fac):
                gen = cand
                break
        if gen is None:
            raise InternalError("no multiplicative generator found")
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            exp[q - 1 + i] = cur
            log[cur] = i
            cur = self._mul_direct(cur, gen)
        if cur != 1:
            raise InternalError("generator order mismatch")
        self._exp = exp
        self._log = log


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldCtx:
    """F_{p^e} with the deterministic smallest modulus (see module docstring)."""
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if p < 2 or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be at least 1")
    q = p**e
    if q > _ORDER_CAP:
        raise OrderOverflow(f"field order {q} exceeds cap {_ORDER_CAP}")
    if e == 1:
        modulus = polyring.Poly.x(p)
    else:
        modulus = _smallest_irreducible(p, e)
    return FieldCtx(p, e, q, modulus)


def _smallest_irreducible(p: int, e: int) -> polyring.Poly:
    # product() varies the last coordinate fastest, which is exactly the
    # constant-coefficient-first comparison order.  Candidates divisible
    # by x or with a root in Z_p are rejected without the full test; this
    # never changes which polynomial is selected.
    for low in itertools.product(range(p), repeat=e):
        if low[0] == 0:
            continue
        f = polyring.Poly(p, low + (1,))
        if any(f.eval_int(a) == 0 for a in range(p)):
            continue
        if f.degree == e and polyring.is_irreducible(f):
            return f
    raise NoRoot(f"no irreducible of degree {e} over Z_{p}")  # unreachable


@dataclass(frozen=True)
class Embedding:
    """Field homomorphism F_{p^d} -> F_{p^e} (d | e) fixing the prime field."""

    source: FieldCtx
    target: FieldCtx
    image_of_generator: int

    def apply(self, a: int) -> int:
        acc = 0
        img = self.image_of_generator
        tgt = self.target
        for c in reversed(self.source.coeffs(a)):
            acc = tgt.add(tgt.mul(acc, img), c)
        return acc


def embed_subfield(sub: FieldCtx, sup: FieldCtx) -> Embedding:
    """Embedding determined by the first root (in enumeration order) of
    sub's modulus inside sup."""
    if sub.p != sup.p:
        raise CharacteristicMismatch(f"p={sub.p} vs p={sup.p}")
    if sup.e % sub.e:
        raise ValueError(f"degree {sub.e} does not divide {sup.e}")
    mod = sub.modulus
    for r in sup.elements():
        if mod.eval_in(sup, r) == 0:
            return Embedding(sub, sup, r)
    raise NoRoot("modulus has no root in the larger field")

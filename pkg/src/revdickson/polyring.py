"""Dense univariate polynomials over a prime field Z_p.

Coefficients are ints in [0, p) indexed by degree and stored without
trailing zeros, so the zero polynomial has an empty coefficient tuple.
degree is -1 for the zero polynomial (a marker, not a real degree).
"""

from __future__ import annotations

from .errors import CharacteristicMismatch, DivisionByZero


class Poly:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    # --- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "Poly":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "Poly":
        return cls(p, (1,))

    @classmethod
    def x(cls, p: int) -> "Poly":
        return cls(p, (0, 1))

    @classmethod
    def const(cls, p: int, c: int) -> "Poly":
        return cls(p, (c,))

    # --- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"Poly(p={self.p}, {self.render()})"

    def _check(self, other: "Poly"):
        if self.p != other.p:
            raise CharacteristicMismatch(
                f"polynomials over Z_{self.p} and Z_{other.p}"
            )

    # --- ring operations ------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(self.p, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return Poly(self.p, out)

    def __neg__(self) -> "Poly":
        return Poly(self.p, [-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.p, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(self.p, out)

    def scale(self, c: int) -> "Poly":
        return Poly(self.p, [c * a for a in self.coeffs])

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        p = self.p
        b = other.coeffs
        r = list(self.coeffs)
        if len(r) < len(b):
            return Poly(p, ()), Poly(p, r)
        quo = [0] * (len(r) - len(b) + 1)
        lead_inv = pow(b[-1], -1, p)
        while len(r) >= len(b):
            c = r[-1] * lead_inv % p
            pos = len(r) - len(b)
            quo[pos] = c
            if c:
                for j, bc in enumerate(b):
                    r[pos + j] = (r[pos + j] - c * bc) % p
            r.pop()
        return Poly(p, quo), Poly(p, r)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        return self.scale(pow(self.coeffs[-1], -1, self.p))

    # --- composition and evaluation ---------------------------------------

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)), by Horner in Z_p[x]."""
        self._check(inner)
        acc = Poly(self.p, ())
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly(self.p, (c,))
        return acc

    def eval_int(self, x: int) -> int:
        """Value at x in Z_p."""
        acc = 0
        p = self.p
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def eval_in(self, ctx, a: int) -> int:
        """Value at a field element; coefficients lift to constants of ctx."""
        if self.p != ctx.p:
            raise CharacteristicMismatch(
                f"polynomial over Z_{self.p}, field of characteristic {ctx.p}"
            )
        acc = 0
        add = ctx.add
        mul = ctx.mul
        for c in reversed(self.coeffs):
            acc = add(mul(acc, a), c)
        return acc

    def render(self, var: str = "x") -> str:
        return render_terms(enumerate(self.coeffs), var)


def render_terms(pairs, var: str) -> str:
    """Join (exponent, coefficient) pairs as 'c0 + c1*x + c2*x^2', zero terms omitted."""
    parts = []
    for i, c in pairs:
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}" if c != 1 else var)
        else:
            parts.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(parts) if parts else "0"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (zero when both inputs are zero)."""
    a._check(b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def pow_mod(base: Poly, exponent: int, mod: Poly) -> Poly:
    """base**exponent reduced mod `mod`."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    result = Poly.one(base.p) % mod
    cur = base % mod
    e = exponent
    while e:
        if e & 1:
            result = result * cur % mod
        cur = cur * cur % mod
        e >>= 1
    return result


def is_irreducible(f: Poly) -> bool:
    """Irreducibility over Z_p: x**(p**n) = x mod f and, for every prime
    divisor r of n = deg f, gcd(x**(p**(n/r)) - x, f) = 1."""
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    p = f.p
    x = Poly.x(p)
    if pow_mod(x, p**n, f) != x % f:
        return False
    for r in _prime_divisors(n):
        h = pow_mod(x, p ** (n // r), f) - (x % f)
        if poly_gcd(h, f).degree != 0:
            return False
    return True


def _prime_divisors(n: int):
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


def polys_equal_as_functions(f: Poly, g: Poly, ctx) -> bool:
    """Pointwise equality of the induced maps on ctx.  When q exceeds both
    degrees this certifies equality as polynomials."""
    if f.p != g.p or f.p != ctx.p:
        raise CharacteristicMismatch("mixed characteristics")
    return all(f.eval_in(ctx, a) == g.eval_in(ctx, a) for a in ctx.elements())

"""Permutation-polynomial oracles over F_q.

A map permutes F_q exactly when its q values are pairwise distinct; the
exhaustive check below scans elements in enumeration order and reports
the first collision it meets.  For monomials x**n there is the exact
shortcut gcd(n, q-1) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import FieldTooLarge

Q_CAP = 1 << 20  # exhaustive scans refuse anything larger


@dataclass(frozen=True)
class PPReport:
    """Outcome of an exhaustive scan.  When is_pp is False the witness is
    (x1, x2): x2 is the first point (in enumeration order) whose value
    had already appeared, x1 that value's earliest preimage."""

    is_pp: bool
    witness: tuple | None
    field: tuple
    evaluations: int


def is_pp_exhaustive(ctx, f) -> PPReport:
    """Scan f over all of F_q.  f must map element codes to element codes."""
    q = ctx.q
    if q > Q_CAP:
        raise FieldTooLarge(f"q={q} exceeds exhaustive-check cap {Q_CAP}")
    first = [-1] * q
    count = 0
    for x in range(q):
        v = f(x)
        count += 1
        w = first[v]
        if w >= 0:
            return PPReport(False, (w, x), (ctx.p, ctx.e), count)
        first[v] = x
    return PPReport(True, None, (ctx.p, ctx.e), count)


def is_pp_monomial(n: int, q: int) -> bool:
    """Whether x**n permutes F_q, decided by gcd(n, q-1) = 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    return math.gcd(n, q - 1) == 1


@dataclass(frozen=True)
class EquivalenceReport:
    f_pp: bool
    g_pp: bool
    equivalent: bool
    field: tuple


def pp_equivalent(ctx, f, g) -> EquivalenceReport:
    """Whether two maps agree on being a permutation of ctx (not on values)."""
    rf = is_pp_exhaustive(ctx, f)
    rg = is_pp_exhaustive(ctx, g)
    return EquivalenceReport(rf.is_pp, rg.is_pp, rf.is_pp == rg.is_pp,
                             (ctx.p, ctx.e))

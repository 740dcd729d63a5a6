"""Dense polynomial ring over Z_p."""

import pytest

from revdickson import make_field
from revdickson.polyring import (
    Poly,
    is_irreducible,
    poly_gcd,
    polys_equal_as_functions,
    pow_mod,
    render_terms,
)


def test_canonical_coeffs():
    assert Poly(3, (1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly(3, (4, -1)).coeffs == (1, 2)
    assert Poly(3, ()).coeffs == ()
    assert Poly(3, (0,)).is_zero
    assert Poly(5, (0, 0, 1)).degree == 2
    assert Poly(5, ()).degree == -1


def test_arithmetic_known_products():
    x_plus_1 = Poly(3, (1, 1))
    x_plus_2 = Poly(3, (2, 1))
    assert (x_plus_1 * x_plus_2).coeffs == (2, 0, 1)
    assert (x_plus_1 + x_plus_2).coeffs == (0, 2)
    assert (x_plus_1 - x_plus_2).coeffs == (2,)
    assert (-x_plus_1).coeffs == (2, 2)
    assert x_plus_1.scale(2).coeffs == (2, 2)
    assert Poly.x(3).coeffs == (0, 1)
    assert Poly.one(3).coeffs == (1,)
    assert Poly.const(3, -1).coeffs == (2,)


def test_mixed_characteristic_rejected():
    with pytest.raises(Exception):
        Poly(3, (1,)) + Poly(5, (1,))


def test_divmod_roundtrip():
    import random

    rng = random.Random(3)
    for p in (3, 5, 7):
        for _ in range(60):
            a = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 7))])
            b = Poly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 5))])
            if b.is_zero:
                continue
            quo, rem = divmod(a, b)
            assert quo * b + rem == a
            assert rem.degree < b.degree or rem.is_zero


def test_gcd_monic():
    g = poly_gcd(Poly(5, (4, 0, 1)), Poly(5, (4, 1)))
    assert g.coeffs == (4, 1)  # x - 1, made monic
    g = poly_gcd(Poly(3, (0, 1)), Poly(3, (0, 0, 1)))
    assert g.coeffs == (0, 1)
    assert poly_gcd(Poly(3, ()), Poly(3, (0, 2))).coeffs == (0, 1)


def test_compose():
    f = Poly(3, (1, 0, 1))  # 1 + x^2
    inner = Poly(3, (1, 1))  # 1 + x
    assert f.compose(inner).coeffs == (2, 2, 1)
    # substitution u -> 1 - 4x as used by the closed forms
    u = Poly(5, (1, -4))
    assert Poly(5, (0, 1)).compose(u).coeffs == (1, 1)


def test_eval_matches_int_eval():
    f7 = make_field(7, 1)
    f = Poly(7, (2, 0, 3, 1))
    for x in range(7):
        assert f.eval_in(f7, x) == f.eval_int(x)
    f9 = make_field(3, 2)
    g = Poly(3, (1, 2, 1))
    # at the generator g: 1 + 2g + g^2 = 1 + 2g + 2 = 2g (code 6)
    assert g.eval_in(f9, 3) == 6


def test_pow_mod_is_frobenius_stable():
    for p, e in ((3, 2), (5, 2)):
        ctx = make_field(p, e)
        mod = ctx.modulus
        xq = pow_mod(Poly(p, (0, 1)), p**e, mod)
        assert xq.coeffs == (0, 1)  # x^q = x mod an irreducible of degree e


def test_functional_equality_vs_structural():
    f9 = make_field(3, 2)
    f = Poly(3, (0, 1))
    g = Poly(3, [0] * 9 + [1])  # x^9 = x as a function on F_9
    assert f != g
    assert polys_equal_as_functions(f, g, f9)
    h = Poly(3, (1, 1))
    assert not polys_equal_as_functions(f, h, f9)


def test_irreducibility_against_root_scan():
    # degree <= 3 irreducibility equals having no roots (plus nonconstant)
    for p in (3, 5):
        for c0 in range(p):
            for c1 in range(p):
                for c2 in range(p):
                    f = Poly(p, (c0, c1, c2, 1))
                    has_root = any(f.eval_int(x) == 0 for x in range(p))
                    assert is_irreducible(f) == (not has_root)


def test_render():
    assert Poly(3, (1, 0, 2)).render() == "1 + 2*x^2"
    assert Poly(3, ()).render() == "0"
    assert Poly(3, (0, 1)).render() == "x"
    assert render_terms(((0, 1), (2, 1)), "u") == "1 + u^2"
    assert render_terms((), "x") == "0"

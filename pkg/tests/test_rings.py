"""Coefficient rings: exact arithmetic, twists, and context plumbing."""

from fractions import Fraction

import pytest

from helpers import backend_contexts, rng_for
from wpoly.errors import CapabilityMissingError, ContextMismatchError
from wpoly.rings import (FiniteFieldContext, Quaternion, RatFunc,
                         make_context)

BACKENDS = backend_contexts()


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_field_axioms_sampled(name):
    ctx = BACKENDS[name]
    rng = rng_for(name, 1)
    for _ in range(60):
        a = ctx.random_element(rng)
        b = ctx.random_element(rng)
        c = ctx.random_element(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a + ctx.zero == a
        assert a * ctx.one == a and ctx.one * a == a
        assert a + (-a) == ctx.zero
        if ctx.commutative:
            assert a * b == b * a
        if not ctx.is_zero(a):
            assert a * ctx.inv(a) == ctx.one
            assert ctx.inv(a) * a == ctx.one


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_endomorphism_and_derivation_laws(name):
    ctx = BACKENDS[name]
    rng = rng_for(name, 2)
    assert ctx.S(ctx.one) == ctx.one
    assert ctx.D(ctx.one) == ctx.zero
    for _ in range(60):
        a = ctx.random_element(rng)
        b = ctx.random_element(rng)
        assert ctx.S(a + b) == ctx.S(a) + ctx.S(b)
        assert ctx.S(a * b) == ctx.S(a) * ctx.S(b)
        assert ctx.D(a + b) == ctx.D(a) + ctx.D(b)
        assert ctx.D(a * b) == ctx.S(a) * ctx.D(b) + ctx.D(a) * b


def test_finite_field_tables():
    f4 = BACKENDS["F4"]
    w = f4.w
    assert w * w == w + f4.one
    assert len(f4.elements()) == 4
    f8 = BACKENDS["F8"]
    v = f8.w
    assert v * v * v == v + f8.one
    assert len(f8.elements()) == 8
    # multiplicative orders: 3 and 7
    assert w * w * w == f4.one
    acc = f8.one
    for _ in range(7):
        acc = acc * v
    assert acc == f8.one


def test_frobenius_and_preimage():
    f8 = BACKENDS["F8"]
    rng = rng_for("frob", 3)
    for _ in range(40):
        a = f8.random_element(rng)
        assert f8.S(a) == a * a
        assert f8.s_preimage(f8.S(a)) == a
        assert f8.S(f8.s_preimage(a)) == a
    assert f8.s_pow(f8.w, 3) == f8.w


def test_identity_descriptor_normalizes_to_frob_zero():
    ctx = make_context("F4", s_desc=("id",))
    assert ctx.s_desc == ("frob", 0)
    for a in ctx.elements():
        assert ctx.S(a) == a


def test_ratfunc_canonical_form():
    x = RatFunc.gen("x")
    one = RatFunc.const(1, "x")
    # common factors cancel and denominators are monic
    r = RatFunc((-1, 0, 1), (-1, 1), "x")
    assert r == x + one
    s = RatFunc((1,), (0, 2), "x")
    assert s.den == (Fraction(0), Fraction(1)) and s.num == (Fraction(1, 2),)
    assert (x / x) == one
    assert str(RatFunc((1, 0, 1), (-1, 1), "u")) == "(u^2+1)/(u-1)"
    with pytest.raises(ZeroDivisionError):
        RatFunc((1,), (0,), "x")
    with pytest.raises(ZeroDivisionError):
        RatFunc.const(0, "x").inverse()


def test_ratfunc_variables_do_not_mix():
    x = RatFunc.gen("x")
    u = RatFunc.gen("u")
    with pytest.raises(ContextMismatchError):
        _ = x + u


def test_ratfunc_derivative_quotient_rule():
    rng = rng_for("ratfunc", 4)
    qu = BACKENDS["Qu"]
    for _ in range(40):
        a = qu.random_element(rng)
        b = qu.random_element(rng, nonzero=True)
        q = a * qu.inv(b)
        lhs = q.derivative() * b * b
        rhs = a.derivative() * b - a * b.derivative()
        assert lhs == rhs


def test_subs_square_is_the_twist():
    qx = BACKENDS["Qx"]
    x = qx.x
    r = (x * x + qx.one) * qx.inv(x - qx.one)
    assert qx.S(r) == r.subs_square()
    assert str(qx.S(x)) == "x^2"


def test_quaternion_identities():
    rng = rng_for("hq", 5)
    hq = BACKENDS["HQ"]
    i, j, k = hq.i, hq.j, hq.k
    assert i * j == k and j * k == i and k * i == j
    assert j * i == -k
    assert i * i == -hq.one
    for _ in range(40):
        p = hq.random_element(rng)
        q = hq.random_element(rng)
        assert (p * q).conjugate() == q.conjugate() * p.conjugate()
        assert p.norm() == (p * p.conjugate()).a
        assert p.trace() == (p + p.conjugate()).a
        if not hq.is_zero(p):
            assert p * p.inverse() == hq.one
    assert hq.one.is_central() and not i.is_central()


def test_vector_coordinates_roundtrip():
    for name in ("F4", "F8", "HQ", "F8-inner"):
        ctx = BACKENDS[name]
        rng = rng_for(name, 6)
        for _ in range(30):
            a = ctx.random_element(rng)
            assert ctx.from_vec(ctx.to_vec(a)) == a
        zero_vec = ctx.to_vec(ctx.zero)
        assert all(ctx.base.is_zero(c) for c in zero_vec)
        assert len(zero_vec) == ctx.base_dim


def test_context_validation():
    with pytest.raises(ValueError):
        make_context("Z7")
    with pytest.raises(CapabilityMissingError):
        make_context("F4", s_desc=("xsq",))
    with pytest.raises(CapabilityMissingError):
        make_context("HQ", s_desc=("frob", 1))
    with pytest.raises(CapabilityMissingError):
        make_context("HQ", d_desc=("ddx",))
    with pytest.raises(CapabilityMissingError):
        make_context("Qx", s_desc=("xsq",), d_desc=("ddx",))
    with pytest.raises(CapabilityMissingError):
        BACKENDS["Q"].elements()


def test_describe_and_keys():
    assert BACKENDS["F4"].describe() == "F4 [S=frob^1, D=0]"
    assert BACKENDS["Qu"].describe() == "Q(u) [S=id, D=d/du]"
    assert BACKENDS["HQ"].describe() == "HQ [S=id, D=0]"
    assert BACKENDS["F8"] != BACKENDS["F8-inner"]
    assert BACKENDS["F8"] == make_context("F8")


def test_sort_key_orders_elements_totally():
    for name in ("F4", "F8"):
        ctx = BACKENDS[name]
        elems = sorted(ctx.elements(), key=ctx.sort_key)
        keys = [ctx.sort_key(a) for a in elems]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(elems)


def test_prime_field_classmethod():
    f3 = FiniteFieldContext.prime_field(3)
    vals = f3.elements()
    assert len(vals) == 3
    assert f3.S(vals[2]) == vals[2]

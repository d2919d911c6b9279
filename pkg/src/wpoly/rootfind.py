"""Exact right-root search engines for the infinite coefficient rings.

Three independent machines live here: the rational-root theorem over Q,
bivariate factorization for untwisted rational-function rings, a Riccati
solver for quadratics twisted by d/dx, and the quaternion class machinery
(norm polynomial, candidate central factors located numerically and then
verified by exact division, class representatives from sum-of-squares
decompositions).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import mpmath
import sympy
from sympy.solvers.diophantine.diophantine import sum_of_squares
from sympy.solvers.ode.riccati import solve_riccati

from .rings import (
    Quaternion,
    RatFunc,
    _qp_to_int,
    qp_deriv,
    qp_divmod,
    qp_eval,
    qp_gcd,
    qp_trim,
)
from .skew import SkewPolynomial

_F0 = Fraction(0)


# ---------------------------------------------------------------------------
# rationals: complete via the rational root theorem

def rational_poly_roots(coeffs):
    """All rational roots of a nonzero polynomial with Fraction coefficients."""
    c = qp_trim(coeffs)
    if not c:
        raise ValueError("zero polynomial")
    roots = []
    shift = 0
    while not c[0]:
        shift += 1
        c = c[1:]
    if shift:
        roots.append(_F0)
    if len(c) > 1:
        ints = _qp_to_int(c)
        for p in sympy.divisors(abs(ints[0])):
            for q in sympy.divisors(abs(ints[-1])):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if qp_eval(c, cand) == 0 and cand not in roots:
                        roots.append(cand)
    roots.sort()
    return roots


# ---------------------------------------------------------------------------
# sympy bridges for rational functions

def _frac_to_sympy(fr):
    return sympy.Rational(fr.numerator, fr.denominator)


def _qp_to_sympy(coeffs, x):
    return sum((_frac_to_sympy(c) * x**i for i, c in enumerate(coeffs)),
               sympy.Integer(0))


def _rf_to_sympy(a, x):
    return _qp_to_sympy(a.num, x) / _qp_to_sympy(a.den, x)


def _sympy_to_rf(expr, x, var):
    """Convert a sympy expression to RatFunc; None if not rational over Q."""
    expr = sympy.cancel(sympy.together(expr))
    num, den = expr.as_numer_denom()
    try:
        pn = sympy.Poly(num, x)
        pd = sympy.Poly(den, x)
    except sympy.PolynomialError:
        return None
    def grab(poly):
        out = []
        for c in reversed(poly.all_coeffs()):
            c = sympy.nsimplify(c)
            if not c.is_rational:
                return None
            c = sympy.Rational(c)
            out.append(Fraction(int(c.p), int(c.q)))
        return out
    cn, cd = grab(pn), grab(pd)
    if cn is None or cd is None:
        return None
    return RatFunc(cn, cd, var)


def ratfunc_classical_roots(ctx, f):
    """Right roots over an untwisted rational-function ring (S = id, D = 0).

    Classical commutative case: clear denominators and read the roots off
    the linear-in-t factors of the resulting bivariate polynomial.
    """
    x, tv = sympy.symbols("x_ t_")
    expr = sympy.Integer(0)
    for i, c in enumerate(f.coeffs):
        expr += _rf_to_sympy(c, x) * tv**i
    expr = sympy.together(expr)
    num, _ = expr.as_numer_denom()
    roots = []
    for fac, _mult in sympy.factor_list(sympy.expand(num), tv, x)[1]:
        poly = sympy.Poly(fac, tv)
        if poly.degree() != 1:
            continue
        a1, a0 = poly.all_coeffs()
        cand = _sympy_to_rf(-a0 / a1, x, ctx.variable)
        if cand is not None and not any(cand == r for r in roots):
            roots.append(cand)
    roots.sort(key=ctx.sort_key)
    return roots


def derivation_quadratic_roots(ctx, f):
    """Right roots of a monic quadratic over Q(x) with S = id, D = d/dx.

    A right root a satisfies the Riccati equation a' = -(q + p*a + a^2).
    Parametric solution families are sampled at small parameter values and
    at the parameter's limit at infinity; every candidate is verified by
    exact evaluation.  The underlying solver is complete for rational
    solutions, so an empty result means there are none.

    Returns (roots, parametric): parametric is True when a verified family
    makes the root set infinite, in which case roots holds samples.
    """
    from .evaluate import evaluate

    p, q = f.coeff(1), f.coeff(0)
    x = sympy.Symbol("x_")
    fx = sympy.Function("f_")(x)
    b0 = -_rf_to_sympy(q, x)
    b1 = -_rf_to_sympy(p, x)
    sols = solve_riccati(fx, x, b0, b1, sympy.Integer(-1))
    roots = []
    def consider(expr):
        cand = _sympy_to_rf(expr, x, ctx.variable)
        if cand is None:
            return False
        if not ctx.is_zero(evaluate(f, cand)):
            return False
        if not any(cand == r for r in roots):
            roots.append(cand)
        return True
    parametric = False
    for sol in sols:
        expr = sol.rhs
        params = sorted(expr.free_symbols - {x}, key=str)
        if not params:
            consider(expr)
            continue
        cpar = params[0]
        hits = [consider(expr.subs(cpar, val)) for val in (0, 1, 2, 3, 4)]
        hits.append(consider(sympy.limit(expr, cpar, sympy.oo)))
        if sum(hits) >= 2:
            parametric = True
    roots.sort(key=ctx.sort_key)
    return roots, parametric


# ---------------------------------------------------------------------------
# quaternions: norm polynomial and conjugacy-class candidates

def norm_polynomial(f):
    """f * fbar as a rational polynomial (ascending Fraction tuple).

    fbar conjugates each coefficient; the product is central, which is
    asserted rather than assumed.
    """
    ctx = f.ctx
    fbar = SkewPolynomial(ctx, tuple(c.conjugate() for c in f.coeffs))
    prod = f * fbar
    out = []
    for c in prod.coeffs:
        a, b, cc, d = c.components()
        if b or cc or d:
            raise AssertionError("norm polynomial has a non-central coefficient")
        out.append(a)
    return tuple(out)


def _monic_integer_model(coeffs):
    """Scale the primitive integer form of a Fraction polynomial to a monic
    integer polynomial via s = L*t; returns (ascending ints, L)."""
    ints = _qp_to_int(coeffs)
    if ints[-1] < 0:
        ints = [-v for v in ints]
    lead = ints[-1]
    n = len(ints) - 1
    return [v * lead**(n - 1 - i) for i, v in enumerate(ints)], lead


def central_factor_candidates(ncoeffs):
    """Monic rational factors of degree <= 2 of a rational polynomial.

    Numeric roots of the monic integer model propose integer data (real
    roots; paired complex trace/norm); every proposal is verified by exact
    division of the squarefree part, so the numerics can only cause a miss,
    which escalating precision rules out for the sizes handled here.
    Returns ('lin', r) and ('quad', p, q) tags, sorted.
    """
    nc = qp_trim(ncoeffs)
    if len(nc) <= 1:
        return []
    sf = qp_divmod(nc, qp_gcd(nc, qp_deriv(nc)))[0]
    mon, lead = _monic_integer_model(sf)
    deg = len(mon) - 1
    if deg == 0:
        return []
    found = []
    def verify(cand):
        if cand in found:
            return
        tag = cand[0]
        if tag == "lin":
            div = (-cand[1], Fraction(1))
        else:
            div = (cand[2], -cand[1], Fraction(1))
        if not qp_divmod(sf, div)[1]:
            found.append(cand)
    for dps in (40, 100, 200):
        with mpmath.workdps(dps):
            try:
                zeros = mpmath.polyroots([mpmath.mpf(c) for c in reversed(mon)],
                                         maxsteps=200, extraprec=200)
            except mpmath.libmp.libhyper.NoConvergence:
                continue
            for z in zeros:
                re, im = mpmath.mpf(z.real), mpmath.mpf(abs(z.imag))
                if im < mpmath.mpf("1e-10") * (1 + abs(re)):
                    r = int(mpmath.nint(re))
                    verify(("lin", Fraction(r, lead)))
                else:
                    ptr = int(mpmath.nint(2 * re))
                    nrm = int(mpmath.nint(re * re + im * im))
                    verify(("quad", Fraction(ptr, lead), Fraction(nrm, lead**2)))
        if found:
            break
    found.sort(key=lambda c: (len(c),) + tuple(c[1:]))
    return found


def quaternion_class_rep(p, q):
    """Deterministic representative of the conjugacy class with central
    minimal polynomial t^2 - p*t + q, or None when the class is empty.

    The pure part squares to -(q - p^2/4); it is placed on as few of the
    i, j, k axes as a rational sum-of-squares decomposition allows, filled
    in ascending order.
    """
    m = q - p * p / 4
    if m <= 0:
        return None
    num, den = m.numerator, m.denominator
    n = num * den
    half = p / 2
    s = isqrt(n)
    if s * s == n:
        return Quaternion(half, Fraction(s, den), 0, 0)
    two = sorted(sum_of_squares(n, 2))
    if two:
        a, b = two[0]
        return Quaternion(half, Fraction(a, den), Fraction(b, den), 0)
    three = sorted(sum_of_squares(n, 3))
    if three:
        a, b, c = three[0]
        return Quaternion(half, Fraction(a, den), Fraction(b, den), Fraction(c, den))
    return None


def quaternion_candidate_classes(f):
    """Candidate conjugacy classes possibly containing right roots of f.

    Every right root's central minimal polynomial divides the norm
    polynomial, so its degree <= 2 rational factors enumerate all classes.
    Returns (tag, representative) pairs in a deterministic order; empty
    classes (central quadratics that no rational quaternion realizes) are
    dropped.
    """
    out = []
    for cand in central_factor_candidates(norm_polynomial(f)):
        if cand[0] == "lin":
            out.append((cand, Quaternion(cand[1])))
        else:
            rep = quaternion_class_rep(cand[1], cand[2])
            if rep is not None:
                out.append((cand, rep))
    return out

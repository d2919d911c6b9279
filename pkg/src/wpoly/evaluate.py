"""Right evaluation, (S,D)-conjugation, the phi transform, and root search.

Evaluation follows the power functions N_0(a) = 1,
N_{i+1}(a) = S(N_i(a))*a + D(N_i(a)), with f(a) = sum b_i N_i(a); this is
the unique value with f - f(a) in R*(t - a).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainRequiredError
from .skew import SkewPolynomial


def power_functions(ctx, a, n):
    """The list [N_0(a), ..., N_n(a)]."""
    out = [ctx.one]
    cur = ctx.one
    for _ in range(n):
        cur = ctx.S(cur) * a + ctx.D(cur)
        out.append(cur)
    return out


def evaluate(f, a):
    """Right evaluation f(a)."""
    ctx = f.ctx
    if f.is_zero():
        return ctx.zero
    powers = power_functions(ctx, a, f.degree)
    acc = ctx.zero
    for b, n in zip(f.coeffs, powers):
        if not ctx.is_zero(b):
            acc = acc + b * n
    return acc


def conjugate(ctx, a, c):
    """a^c = S(c)*a*c^-1 + D(c)*c^-1; the conjugator c must be nonzero."""
    if ctx.is_zero(c):
        raise ZeroDivisionError("conjugation by zero")
    ci = ctx.inv(c)
    return ctx.S(c) * a * ci + ctx.D(c) * ci


def conjugacy_class(ctx, a):
    """The full (S,D)-conjugacy class of a on an enumerable context."""
    return sorted({conjugate(ctx, a, c) for c in ctx.elements() if not ctx.is_zero(c)},
                  key=ctx.sort_key)


def conjugacy_class_reps(ctx):
    """One representative per (S,D)-conjugacy class, for finite contexts.

    Each class is represented by its least element under the context sort
    order, and the representatives come back in that same order.
    """
    seen = set()
    reps = []
    for a in sorted(ctx.elements(), key=ctx.sort_key):
        if a in seen:
            continue
        reps.append(a)
        seen.update(conjugacy_class(ctx, a))
    return reps


def phi_transform(h, x):
    """Phi_h(x) = x^{h(x)}, or None when h(x) = 0 (undefined at a root)."""
    v = evaluate(h, x)
    if h.ctx.is_zero(v):
        return None
    return conjugate(h.ctx, x, v)


def is_right_root(f, a):
    return f.ctx.is_zero(evaluate(f, a))


def is_left_root(f, b):
    res = f.left_divmod(SkewPolynomial.linear(f.ctx, b))
    return res is not None and res[1].is_zero()


def _resolve_domain(ctx, domain, what):
    if domain is not None:
        seen = []
        for a in domain:
            if a not in seen:
                seen.append(a)
        return seen
    if ctx.finite:
        return ctx.elements()
    raise DomainRequiredError(f"{what} over {ctx.name} needs an explicit search domain")


def right_roots(f, domain=None):
    """Right roots of f within the domain (the whole ring when finite)."""
    if f.is_zero():
        raise ValueError("every element is a root of the zero polynomial")
    dom = _resolve_domain(f.ctx, domain, "right root search")
    return [a for a in dom if is_right_root(f, a)]


def left_roots(f, domain=None):
    """Left roots (b with f in (t-b)R) within the domain."""
    if f.is_zero():
        raise ValueError("every element is a left root of the zero polynomial")
    dom = _resolve_domain(f.ctx, domain, "left root search")
    return [b for b in dom if is_left_root(f, b)]


@dataclass(frozen=True)
class CosetReport:
    """Which S(K)-coset alternative a set of left roots satisfies."""

    monic: bool
    n_roots: int
    alternative: str  # 'single' | 'disjoint' | 'mixed'
    holds: bool


def coset_check(f, roots):
    """Classify pairwise differences of left roots relative to S(K).

    For monic f the single-coset alternative is asserted; a violation would
    be a library defect and raises.
    """
    ctx = f.ctx
    distinct = []
    for r in roots:
        if r not in distinct:
            distinct.append(r)
    n = len(distinct)
    flags = [ctx.s_image_contains(distinct[i] - distinct[j])
             for i in range(n) for j in range(i + 1, n)]
    if all(flags):
        alternative = "single"
    elif not any(flags):
        alternative = "disjoint"
    else:
        alternative = "mixed"
    monic = f.is_monic()
    if monic and n >= 2 and alternative != "single":
        raise RuntimeError("left roots of a monic polynomial left a single S(K)-coset")
    return CosetReport(monic=monic, n_roots=n, alternative=alternative,
                       holds=alternative != "mixed")


# ---------------------------------------------------------------------------
# base-linear matrices attached to evaluation maps

def lambda_matrix(ctx, f, a):
    """Base-field matrix of x -> sum_i b_i Lambda_i(x) where Lambda_0 = id
    and Lambda_{i+1}(x) = S(Lambda_i(x))*a + D(Lambda_i(x)).

    For x != 0, Lambda_i(x) = N_i(a^x)*x, so the kernel is the exponential
    space E(f, a) = {0} u {x : f(a^x) = 0}.
    """
    dim = ctx.base_dim
    cols = []
    base = ctx.base
    for m in range(dim):
        unit = [base.zero] * dim
        unit[m] = base.one
        x = ctx.from_vec(unit)
        lam = x
        acc = ctx.zero
        for i, b in enumerate(f.coeffs):
            if i:
                lam = ctx.S(lam) * a + ctx.D(lam)
            if not ctx.is_zero(b):
                acc = acc + b * lam
        cols.append(ctx.to_vec(acc))
    return [[cols[m][r] for m in range(dim)] for r in range(dim)]


def stabilizer_matrix(ctx, a):
    """Base-field matrix of c -> S(c)*a + D(c) - a*c, whose kernel together
    with zero is the (S,D)-centralizer of a."""
    dim = ctx.base_dim
    cols = []
    base = ctx.base
    for m in range(dim):
        unit = [base.zero] * dim
        unit[m] = base.one
        c = ctx.from_vec(unit)
        img = ctx.S(c) * a + ctx.D(c) - a * c
        cols.append(ctx.to_vec(img))
    return [[cols[m][r] for m in range(dim)] for r in range(dim)]

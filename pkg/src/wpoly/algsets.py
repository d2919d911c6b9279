"""Algebraic sets: minimal polynomials, rank, P-dependence, closure.

A finite set of elements determines a left ideal of skew polynomials
vanishing on it; the monic generator is the minimal polynomial, built
here by the iterative product of conjugated linear factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainRequiredError
from .evaluate import conjugate, evaluate
from .skew import SkewPolynomial


def _check_distinct(ctx, elements):
    elems = tuple(elements)
    seen = []
    for a in elems:
        if any(a == b for b in seen):
            raise ValueError(f"duplicate generator {a}")
        seen.append(a)
    return elems


@dataclass(frozen=True)
class MinimalPolynomialResult:
    poly: SkewPolynomial
    basis: tuple

    @property
    def rank(self) -> int:
        return self.poly.degree if not self.poly.is_zero() else 0


def minimal_polynomial(ctx, elements) -> MinimalPolynomialResult:
    """Monic minimal polynomial of a finite set, with a P-basis.

    Generators are folded in order: whenever the current polynomial g has
    g(a) != 0, it is replaced by (t - a^{g(a)}) * g and a joins the basis.
    The polynomial is order-independent; the chosen basis is not.
    """
    elems = _check_distinct(ctx, elements)
    g = SkewPolynomial.one(ctx)
    basis = []
    for a in elems:
        val = evaluate(g, a)
        if not ctx.is_zero(val):
            g = SkewPolynomial.linear(ctx, conjugate(ctx, a, val)) * g
            basis.append(a)
    return MinimalPolynomialResult(g, tuple(basis))


def rank(ctx, elements) -> int:
    return minimal_polynomial(ctx, elements).rank


def is_p_dependent(ctx, d, elements) -> bool:
    """True when every polynomial vanishing on the set also kills d."""
    f = minimal_polynomial(ctx, elements).poly
    return ctx.is_zero(evaluate(f, d))


def is_p_independent(ctx, elements) -> bool:
    """No generator is P-dependent on the remaining ones."""
    elems = _check_distinct(ctx, elements)
    for i, d in enumerate(elems):
        rest = elems[:i] + elems[i + 1:]
        if is_p_dependent(ctx, d, rest):
            return False
    return True


def _resolve_domain(ctx, domain):
    if domain is not None:
        out = []
        for a in domain:
            if not any(a == b for b in out):
                out.append(a)
        return out
    if ctx.finite:
        return list(ctx.elements())
    raise DomainRequiredError(
        f"closure over {ctx.name} needs an explicit domain")


def closure(ctx, elements, domain=None):
    """All domain elements P-dependent on the set, sorted canonically.

    On finite backends the domain defaults to the whole ring; infinite
    backends require an explicit candidate domain.
    """
    elems = _check_distinct(ctx, elements)
    f = minimal_polynomial(ctx, elems).poly
    found = [a for a in _resolve_domain(ctx, domain)
             if ctx.is_zero(evaluate(f, a))]
    for a in elems:
        if not any(a == b for b in found):
            found.append(a)
    found.sort(key=ctx.sort_key)
    return tuple(found)


def is_full(ctx, elements, domain=None) -> bool:
    """True when the set already contains every root of its minimal polynomial."""
    elems = _check_distinct(ctx, elements)
    return len(closure(ctx, elems, domain)) == len(elems)

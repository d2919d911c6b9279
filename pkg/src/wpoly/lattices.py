"""Finite lattices of full algebraic sets and their polynomial duals.

Everything here is restricted to finitely enumerable coefficient rings.
There the whole ring is algebraic, both lattices are finite, and every
structural claim (order reversal, modularity, dimension laws, interval
isomorphism) can be verified node by node instead of taken on faith.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .algsets import closure, is_full, is_p_dependent, minimal_polynomial, rank
from .errors import CapabilityMissingError, NotFullError
from .evaluate import right_roots
from .skew import SkewPolynomial, monic_polynomials, rgcd_llcm


class Marker:
    """Sentinel node standing in for an adjoined lattice bound."""

    __slots__ = ("label",)

    def __init__(self, label):
        self.label = label

    def __repr__(self):
        return f"<{self.label}>"


ADJOINED_TOP = Marker("adjoined top")
ADJOINED_BOTTOM = Marker("adjoined bottom")


class FiniteLattice:
    """An explicit finite lattice: nodes, order matrix, meet and join tables.

    leq[i, j] holds when node i is below node j.  Construction verifies the
    partial-order axioms and that the supplied meet and join tables are the
    true greatest lower and least upper bounds; a violation is a library
    defect, not an input error, so it raises AssertionError.
    """

    def __init__(self, kind, ctx, nodes, leq, meet, join,
                 adjoined_top=False, adjoined_bottom=False):
        self.kind = kind
        self.ctx = ctx
        self.nodes = tuple(nodes)
        self.leq = leq
        self.meet = meet
        self.join = join
        self.adjoined_top = adjoined_top
        self.adjoined_bottom = adjoined_bottom
        self._index = {node: i for i, node in enumerate(self.nodes)}
        self._verify()

    @property
    def n(self):
        return len(self.nodes)

    def index(self, node):
        return self._index[node]

    @classmethod
    def from_functions(cls, kind, ctx, nodes, leq_fn, meet_fn, join_fn,
                       **flags):
        nodes = tuple(nodes)
        n = len(nodes)
        index = {node: i for i, node in enumerate(nodes)}
        leq = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(n):
                leq[i, j] = bool(leq_fn(nodes[i], nodes[j]))
        meet = np.zeros((n, n), dtype=np.int16)
        join = np.zeros((n, n), dtype=np.int16)
        for i in range(n):
            for j in range(i, n):
                m = meet_fn(nodes[i], nodes[j])
                v = join_fn(nodes[i], nodes[j])
                if m not in index or v not in index:
                    raise AssertionError(
                        "meet or join left the node set, the lattice is not closed")
                meet[i, j] = meet[j, i] = index[m]
                join[i, j] = join[j, i] = index[v]
        return cls(kind, ctx, nodes, leq, meet, join, **flags)

    def _verify(self):
        leq = self.leq
        n = self.n
        if n == 0:
            raise ValueError("empty lattice")
        if not leq.diagonal().all():
            raise AssertionError("order is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise AssertionError("order is not antisymmetric")
        reach = leq.astype(np.uint8)
        if (((reach @ reach) > 0) & ~leq).any():
            raise AssertionError("order is not transitive")
        rows = np.arange(n)
        for table, rel, what in ((self.meet, leq, "meet"),
                                 (self.join, leq.T, "join")):
            # bounds both arguments, and is the tightest such bound
            if not rel[table, rows[:, None]].all():
                raise AssertionError(f"{what} does not bound its first argument")
            if not rel[table, rows[None, :]].all():
                raise AssertionError(f"{what} does not bound its second argument")
            common = rel[:, :, None] & rel[:, None, :]
            dominated = rel[:, table]
            if (common & ~dominated).any():
                raise AssertionError(f"{what} is not the tightest bound")

    # -- structure ------------------------------------------------------------
    @property
    def bottom(self) -> int:
        rows = np.nonzero(self.leq.all(axis=1))[0]
        if len(rows) != 1:
            raise AssertionError("no unique bottom element")
        return int(rows[0])

    @property
    def top(self) -> int:
        cols = np.nonzero(self.leq.all(axis=0))[0]
        if len(cols) != 1:
            raise AssertionError("no unique top element")
        return int(cols[0])

    def covers(self):
        """Boolean matrix of covering pairs: c[i, j] when j covers i."""
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        via = (strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0
        return strict & ~via

    def atoms(self):
        return [int(j) for j in np.nonzero(self.covers()[self.bottom])[0]]

    def coatoms(self):
        return [int(i) for i in np.nonzero(self.covers()[:, self.top])[0]]

    def is_modular(self) -> bool:
        """a <= b forces a v (x ^ b) = (a v x) ^ b, checked on all triples."""
        for a in range(self.n):
            for b in np.nonzero(self.leq[a])[0]:
                lhs = self.join[a, self.meet[:, b]]
                rhs = self.meet[self.join[a], b]
                if not np.array_equal(lhs, rhs):
                    return False
        return True

    def interval(self, lo: int, hi: int):
        """Node indices g with lo <= g <= hi."""
        sel = self.leq[lo, :] & self.leq[:, hi]
        return [int(i) for i in np.nonzero(sel)[0]]


def hasse_edges(lattice: FiniteLattice):
    """Covering pairs (lower index, upper index) for diagram emission."""
    return [(int(i), int(j)) for i, j in np.argwhere(lattice.covers())]


def augment(lattice: FiniteLattice, add_top=False, add_bottom=False):
    """Adjoin explicit bound markers.

    Over a finite ring the natural lattices are already bounded, so this is
    exercised only as a data-structure operation; the markers compare as
    plain extra nodes above or below everything.
    """
    nodes = list(lattice.nodes)
    n0 = lattice.n
    extra = []
    if add_bottom:
        extra.append(ADJOINED_BOTTOM)
    if add_top:
        extra.append(ADJOINED_TOP)
    if not extra:
        return lattice
    n = n0 + len(extra)
    leq = np.zeros((n, n), dtype=bool)
    leq[:n0, :n0] = lattice.leq
    np.fill_diagonal(leq, True)
    idx = n0
    bot = top = None
    if add_bottom:
        bot = idx
        idx += 1
    if add_top:
        top = idx
    if bot is not None:
        leq[bot, :] = True
    if top is not None:
        leq[:, top] = True
    meet = np.zeros((n, n), dtype=np.int16)
    join = np.zeros((n, n), dtype=np.int16)
    meet[:n0, :n0] = lattice.meet
    join[:n0, :n0] = lattice.join
    for x in range(n):
        if bot is not None:
            meet[bot, x] = meet[x, bot] = bot
            join[bot, x] = join[x, bot] = x
        if top is not None:
            meet[top, x] = meet[x, top] = x
            join[top, x] = join[x, top] = top
    if bot is not None and top is not None:
        join[bot, top] = join[top, bot] = top
        meet[bot, top] = meet[top, bot] = bot
    return FiniteLattice(lattice.kind, lattice.ctx,
                         nodes + extra, leq, meet, join,
                         adjoined_top=add_top, adjoined_bottom=add_bottom)


# ---------------------------------------------------------------------------
# construction over a finite ring

def _sorted_elems(ctx):
    return sorted(ctx.elements(), key=ctx.sort_key)


def _all_subsets(elems):
    for r in range(len(elems) + 1):
        yield from itertools.combinations(elems, r)


def full_set_nodes(ctx):
    """All full algebraic subsets, as sorted tuples, with their minimal
    polynomials.  Every full set is its own closure, so the closures of all
    subsets enumerate them exactly."""
    if not ctx.finite:
        raise CapabilityMissingError("full-set enumeration needs a finite ring")
    elems = _sorted_elems(ctx)
    out = {}
    for subset in _all_subsets(elems):
        cl = closure(ctx, list(subset))
        if cl not in out:
            out[cl] = minimal_polynomial(ctx, list(cl)).poly
    return out


def build_full_lattice(ctx) -> FiniteLattice:
    """Lattice of full algebraic subsets: order by inclusion, meet by
    intersection, join by closure of the union."""
    polys = full_set_nodes(ctx)
    nodes = sorted(polys,
                   key=lambda s: (polys[s].degree,
                                  [ctx.sort_key(a) for a in s]))

    def leq_fn(a, b):
        bset = set(b)
        return all(x in bset for x in a)

    def meet_fn(a, b):
        bset = set(b)
        return tuple(x for x in a if x in bset)

    def join_fn(a, b):
        aset = set(a)
        return closure(ctx, list(a) + [x for x in b if x not in aset])

    return FiniteLattice.from_functions("full-sets", ctx, nodes,
                                        leq_fn, meet_fn, join_fn)


def build_w_lattice(ctx) -> FiniteLattice:
    """Lattice of the minimal polynomials of subsets of K, ordered by
    left-ideal inclusion: f <= h exactly when h right-divides f.  Meet is
    the least common left multiple, join the greatest common right divisor."""
    polys = full_set_nodes(ctx)
    nodes = sorted(set(polys.values()),
                   key=lambda p: (p.degree,
                                  [ctx.sort_key(c) for c in p.coeffs]))

    def leq_fn(f, h):
        return f.right_divmod(h)[1].is_zero()

    def meet_fn(f, h):
        return rgcd_llcm(f, h).llcm

    def join_fn(f, h):
        return rgcd_llcm(f, h).rgcd

    return FiniteLattice.from_functions("w-polys", ctx, nodes,
                                        leq_fn, meet_fn, join_fn)


# ---------------------------------------------------------------------------
# duality verification

def _monic_right_divisors_by_degree(f):
    """All monic right divisors of f, grouped by degree.

    Degrees past the halfway point are enumerated through the monic left
    cofactor instead (a degree-d divisor pairs with a degree (n-d) cofactor),
    which keeps the candidate count at q^min(d, n-d).
    """
    ctx = f.ctx
    n = f.degree
    out = {d: [] for d in range(n + 1)}
    for d in range(n + 1):
        if d <= n - d:
            for p in monic_polynomials(ctx, d):
                if f.right_divmod(p)[1].is_zero():
                    out[d].append(p)
        else:
            for p in monic_polynomials(ctx, n - d):
                res = f.left_divmod(p)
                if res is not None and res[1].is_zero():
                    out[d].append(res[0])
    return out


@dataclass(frozen=True)
class DualityReport:
    n_nodes: int
    bijection: bool
    inverses: bool
    order_reversing: bool
    rank_dimension_law: bool
    degree_dimension_law: bool
    rank_equals_degree: bool
    cover_steps: bool
    atoms_are_singletons: bool
    maximal_are_linear: bool
    bounds_as_stated: bool
    modular_full: bool
    modular_w: bool
    intervals_checked: int
    intervals_match: bool

    @property
    def ok(self) -> bool:
        return all(v for k, v in self.__dict__.items()
                   if k not in ("n_nodes", "intervals_checked"))


def duality_check(fl: FiniteLattice, wl: FiniteLattice) -> DualityReport:
    """Exhaustive verification that the two lattices are dual.

    Covers: the two maps set -> minimal polynomial and polynomial -> root
    set as mutually inverse order-reversing bijections; rank and degree as
    dimension functions; atoms and maximal elements; modularity; and, for
    every comparable pair in the polynomial lattice, agreement between the
    lattice interval and the full divisor enumeration.
    """
    if fl.ctx != wl.ctx:
        raise ValueError("lattices come from different contexts")
    ctx = fl.ctx
    n = fl.n
    key = ctx.sort_key

    bijection = n == wl.n
    sigma = []
    if bijection:
        for node in fl.nodes:
            p = minimal_polynomial(ctx, list(node)).poly
            sigma.append(wl.index(p))
        bijection = len(set(sigma)) == n

    inverses = bijection
    if bijection:
        for i, node in enumerate(fl.nodes):
            back = tuple(sorted(right_roots(wl.nodes[sigma[i]]), key=key))
            if back != node:
                inverses = False
                break

    order_reversing = False
    if bijection:
        perm = np.array(sigma)
        order_reversing = bool(
            np.array_equal(fl.leq, wl.leq[np.ix_(perm, perm)].T))

    degs_w = np.array([p.degree for p in wl.nodes])
    ranks_f = np.array([minimal_polynomial(ctx, list(s)).poly.degree
                        for s in fl.nodes])

    rank_dimension_law = bool(np.array_equal(
        ranks_f[fl.meet] + ranks_f[fl.join],
        ranks_f[:, None] + ranks_f[None, :]))
    degree_dimension_law = bool(np.array_equal(
        degs_w[wl.meet] + degs_w[wl.join],
        degs_w[:, None] + degs_w[None, :]))

    rank_equals_degree = all(
        rank(ctx, list(s)) == ranks_f[i] for i, s in enumerate(fl.nodes))

    cover_steps = True
    for i, j in np.argwhere(fl.covers()):
        if ranks_f[j] - ranks_f[i] != 1:
            cover_steps = False
    for i, j in np.argwhere(wl.covers()):
        if degs_w[i] - degs_w[j] != 1:
            cover_steps = False

    atoms_are_singletons = (
        {fl.nodes[i] for i in fl.atoms()}
        == {s for s in fl.nodes if len(s) == 1})
    linear_nodes = {p for p in wl.nodes if p.degree == 1}
    maximal_are_linear = ({wl.nodes[i] for i in wl.coatoms()} == linear_nodes
                          and all(p.is_monic() for p in linear_nodes))

    bounds_as_stated = bool(
        fl.nodes[fl.bottom] == ()
        and wl.nodes[wl.top] == SkewPolynomial.one(ctx)
        and len(fl.nodes[fl.top]) == len(list(ctx.elements()))
        and wl.nodes[wl.bottom].degree == degs_w.max())

    modular_full = fl.is_modular()
    modular_w = wl.is_modular()

    intervals_checked = 0
    intervals_match = True
    divisors = {}
    for i in range(wl.n):
        f = wl.nodes[i]
        for j in np.nonzero(wl.leq[i])[0]:
            h = wl.nodes[j]
            if i not in divisors:
                divisors[i] = _monic_right_divisors_by_degree(f)
            enumerated = {
                g
                for d in range(h.degree, f.degree + 1)
                for g in divisors[i][d]
                if g.right_divmod(h)[1].is_zero()}
            via_lattice = {wl.nodes[g] for g in wl.interval(int(i), int(j))}
            intervals_checked += 1
            if enumerated != via_lattice:
                intervals_match = False
    return DualityReport(
        n_nodes=n,
        bijection=bijection,
        inverses=inverses,
        order_reversing=order_reversing,
        rank_dimension_law=rank_dimension_law,
        degree_dimension_law=degree_dimension_law,
        rank_equals_degree=rank_equals_degree,
        cover_steps=cover_steps,
        atoms_are_singletons=atoms_are_singletons,
        maximal_are_linear=maximal_are_linear,
        bounds_as_stated=bounds_as_stated,
        modular_full=modular_full,
        modular_w=modular_w,
        intervals_checked=intervals_checked,
        intervals_match=intervals_match,
    )


# ---------------------------------------------------------------------------
# intersections of full sets, and the modular law for P-dependence

def intersection_minpoly(ctx, sets, domain=None):
    """Minimal polynomial of an intersection of full sets, via the right gcd
    of their minimal polynomials.

    Every input set must be full; otherwise the gcd identity genuinely
    fails (the gcd of the polynomials can strictly divide the minimal
    polynomial of the intersection), and NotFullError is raised so the
    caller can fall back to gcd_vs_intersection and inspect both sides.
    """
    sets = [list(s) for s in sets]
    if not sets:
        raise ValueError("need at least one set")
    for s in sets:
        if not is_full(ctx, s, domain):
            raise NotFullError(
                "a set is not full; the gcd identity is not guaranteed")
    g, expected = gcd_vs_intersection(ctx, sets)
    if g != expected:
        raise AssertionError("gcd identity failed on full sets")
    return g


def gcd_vs_intersection(ctx, sets):
    """Both sides of the intersection identity, with no fullness check:
    (rgcd of the minimal polynomials, minimal polynomial of the
    intersection).  On non-full sets the two can differ."""
    sets = [list(s) for s in sets]
    polys = [minimal_polynomial(ctx, s).poly for s in sets]
    g = polys[0]
    for p in polys[1:]:
        g = rgcd_llcm(g, p).rgcd
    inter = [x for x in sets[0]
             if all(any(x == y for y in s) for s in sets[1:])]
    return g, minimal_polynomial(ctx, inter).poly


@dataclass(frozen=True)
class ModularLawReport:
    checked: int
    dependent: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def modular_law_check(ctx, gamma, pi, delta, domain=None) -> ModularLawReport:
    """P-dependence version of the modular law.

    For full gamma and pi, and delta inside gamma: every x in gamma that is
    P-dependent on pi + delta must already be P-dependent on the smaller
    set (gamma intersect pi) + delta.
    """
    gamma, pi, delta = list(gamma), list(pi), list(delta)
    if not is_full(ctx, gamma, domain):
        raise NotFullError("gamma is not full")
    if not is_full(ctx, pi, domain):
        raise NotFullError("pi is not full")
    if not all(any(d == g for g in gamma) for d in delta):
        raise ValueError("delta must be contained in gamma")
    big = pi + [d for d in delta if not any(d == p for p in pi)]
    inter = [g for g in gamma if any(g == p for p in pi)]
    small = inter + [d for d in delta if not any(d == x for x in inter)]
    checked = dependent = 0
    violations = []
    for x in gamma:
        checked += 1
        if not is_p_dependent(ctx, x, big):
            continue
        dependent += 1
        if not is_p_dependent(ctx, x, small):
            violations.append(x)
    return ModularLawReport(checked, dependent, tuple(violations))


def modular_law_sweep(ctx):
    """Exhaustive modular-law verification over a finite ring.

    Runs over every full gamma, every full pi, and every delta inside gamma;
    P-dependence of x on a set is membership of x in the set's closure, so
    all closures are cached by subset.  Returns (triples, violations).
    """
    if not ctx.finite:
        raise CapabilityMissingError("the exhaustive sweep needs a finite ring")
    elems = _sorted_elems(ctx)
    closures = {}

    def closure_of(fs):
        got = closures.get(fs)
        if got is None:
            got = frozenset(closure(ctx, list(fs)))
            closures[fs] = got
        return got

    subsets = [frozenset(s) for s in _all_subsets(elems)]
    fulls = [fs for fs in subsets if closure_of(fs) == fs]
    triples = violations = 0
    for gamma in fulls:
        gamma_subsets = [frozenset(s)
                         for s in _all_subsets(sorted(gamma, key=ctx.sort_key))]
        for pi in fulls:
            inter = gamma & pi
            for delta in gamma_subsets:
                triples += 1
                big = closure_of(pi | delta)
                small = closure_of(inter | delta)
                for x in gamma:
                    if x in big and x not in small:
                        violations += 1
    return triples, violations

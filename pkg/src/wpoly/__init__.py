"""Exact arithmetic for twisted polynomial rings over division rings.

Polynomials live in R = K[t; S, D] with the commutation rule
t*b = S(b)*t + D(b).  The package evaluates them by right division,
computes conjugacy-aware root sets, minimal polynomials of algebraic
sets, the dual lattices of full sets and their minimal polynomials, and
the semilinear equation a*x - S(x)*b - D(x) = c.
"""

from .algsets import (MinimalPolynomialResult, closure, is_full,
                      is_p_dependent, is_p_independent, minimal_polynomial,
                      rank)
from .errors import (CapabilityMissingError, ClassMembershipError,
                     ContextMismatchError, DisjointnessError,
                     DomainRequiredError, NotFullError, NotPIndependentError,
                     NotSplitError, ParseError, WpolyError, WrongRingError)
from .evaluate import (conjugacy_class, conjugacy_class_reps, conjugate,
                       coset_check, evaluate, left_roots, phi_transform,
                       power_functions, right_roots)
from .lattices import (DualityReport, FiniteLattice, build_full_lattice,
                       build_w_lattice, duality_check, gcd_vs_intersection,
                       hasse_edges, intersection_minpoly, modular_law_check,
                       modular_law_sweep)
from .metro import (MetroProblem, MetroSolutionReport, class_algebraic_uniqueness,
                    metro_polynomial, metro_wedderburn_equivalence, solve_metro)
from .parsing import parse_element, parse_elements, parse_polynomial
from .rings import (FiniteFieldContext, Quaternion, QuaternionContext, RatFunc,
                    RatFuncContext, RationalContext, make_context)
from .skew import (GcdLcmResult, SkewPolynomial, monic_polynomials,
                   product_of_linears, rgcd_llcm)
from .wedderburn import (WCertificate, diagonalization_check,
                         dual_representation, exponential_space,
                         factor_theorem_check, is_wedderburn,
                         left_root_report, monic_factors, phi_rank_check,
                         product_rank_bound, product_theorem_check,
                         rank_union_check, right_root_report, split)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

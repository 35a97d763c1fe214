"""Exact surreal numbers: Conway normal forms, sign expansions, and
decision procedures for initial subgroups and subdomains."""

from .coeffs import (DYADICS, INTEGERS, TRIVIAL, CoeffGroupDesc, classify_real_subdomain,
                     classify_real_subgroup, dyadics_plus, generated_by, scaled)
from .conway import (OMEGA, ONE, ZERO, HahnSeries, Surreal, format_surreal, from_hahn,
                     from_ordinal, is_omnific, monomial, omega_power, oz_truncation, srl_add,
                     srl_cmp, srl_mul, srl_neg, srl_sub, to_hahn, to_ordinal, truncations)
from .errors import (CutViolation, FuelExhausted, InvariantBreach, OrdinalRangeError, ParseError,
                     PreconditionError, SurrealError, UnsupportedFragment)
from .expansion import (birthday, from_sign_expansion, leader_cut, sign_expansion,
                        srl_simplest_between, srl_simpler, term_cut)
from .genetic import genetic_add_oracle, genetic_mul_oracle
from .lang import evaluate, parse_expr, parse_line
from .ordinal import (Ordinal, is_add_indecomposable, is_mul_indecomposable, omega_to, ord_add,
                      ord_cmp, ord_mul, ord_sub, parse_ordinal)
from .signexp import (SignExpansion, parse_signs, se_cmp, se_predecessors, se_rank,
                      se_simplest_between, se_simpler)
from .specfile import format_spec, parse_spec
from .structures import (ExponentClassDesc, StructureSpec, archimedean_height, convex_restrict,
                         convex_verdicts, finite_set, gamma_is_initial, generated_group,
                         generated_monoid, is_archimedean, is_discrete, is_initial_domain,
                         is_initial_group, is_subdomain_of_oz, member,
                         section9_isomorphism_check)

__version__ = "0.1.0"

"""Exact-arithmetic toolkit for the variety of type-(2,2) Jordan
superalgebras: identity checking, automorphism-group dimensions, second
cohomology, degeneration certificates, and component bookkeeping."""

from .exact import Scalar, Poly, RatFun, ratfun_normalize, eval_at_zero
from .superalgebra import (SuperAlgebra, ParamFamily, GradedElement, multiply,
                           check_supercommutativity, check_jordan_superidentity,
                           check_associativity, power_dims, is_nilpotent,
                           even_part, ab, forget, scalar_odd_action,
                           grassmann_envelope_check)
from .derivation import even_derivation_dim, orbit_dim
from .cohomology import cocycle_space, coboundary_space, h2_report
from .catalog import parse_catalog, validate_catalog, load_default, catalog_map
from .degeneration import (DegenerationCertificate, apply_curve, limit_at_zero,
                           verify_certificate, family_certificate_check,
                           profile, separate, build_relation, to_dot,
                           component_report, Dim2Poset)

__version__ = "0.1.0"

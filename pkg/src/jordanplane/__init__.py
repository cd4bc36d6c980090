"""Exact-arithmetic toolkit for finite-dimensional modules over the Jordan plane.

The algebra is k<x, y> modulo xy - yx - y^2.  The package builds the
partition-indexed strata of relation-satisfying matrix pairs, solves the
stratum fibers exactly over the rationals, samples stratum points, and
analyzes endomorphism rings, Ext groups, automorphisms and image algebras,
with a CLI plus a claim-by-claim verification suite on top.
"""

__version__ = "0.1.0"

from .linalg import (InvariantViolation, Mat, Poly, char_poly,
                     distinct_eigenvalue_count, is_nilpotent, solve_affine)
from .freealg import (AutParams, NcPolynomial, check_endomorphism,
                      compose_aut, evaluate, invert_aut, normal_form,
                      parse_expr, quotient_dim)
from .strata import (Partition, SamplePoint, Stratum, jordan_nilpotent,
                     partitions, sample_point, solve_fiber, strata_table)
from .repmod import (Representation, algebra_radical, check_relation,
                     direct_sum, endomorphism_algebra, ext1,
                     indecomposability_class, kernel_ideal_check,
                     simple_module)
from .imgalg import (dimension_bound, extract_presentation,
                     generated_subalgebra, image_report, word_span_dim)
from .verify import RunConfig, verify_suite

__all__ = [
    "InvariantViolation", "Mat", "Poly", "char_poly",
    "distinct_eigenvalue_count", "is_nilpotent", "solve_affine",
    "AutParams", "NcPolynomial", "check_endomorphism", "compose_aut",
    "evaluate", "invert_aut", "normal_form", "parse_expr", "quotient_dim",
    "Partition", "SamplePoint", "Stratum", "jordan_nilpotent", "partitions",
    "sample_point", "solve_fiber", "strata_table",
    "Representation", "algebra_radical", "check_relation", "direct_sum",
    "endomorphism_algebra", "ext1", "indecomposability_class",
    "kernel_ideal_check", "simple_module",
    "dimension_bound", "extract_presentation", "generated_subalgebra",
    "image_report", "word_span_dim",
    "RunConfig", "verify_suite",
]

"""Exact statistics of real conjugate algebraic numbers of bounded degree and
naive height, and Monte Carlo evaluation of their limiting correlation
density, cross-validated against a random-polynomial oracle and a primitive
lattice-point counter."""

from .boxes import Box, root_proxy_box
from .counting import (CountResult, EnumerationTask, count_conjugate_tuples,
                       count_reducible, enumerate_prime_polynomials,
                       reducible_breakdown)
from .density import (CofactorBox, DensityEstimate, band_density,
                      cofactor_bounding_box, cofactor_in_unit_cube,
                      density_mc, integrate_density, predicted_count,
                      top_order_density)
from .intpoly import (IntPolynomial, SymmetricProfile, content_and_primitive,
                      elementary_symmetric, height, is_irreducible_over_q,
                      normalize_to_prime, poly_from_roots)
from .lattice import (DilatableRegion, asymptotic_table, primitive_point_count,
                      primitive_point_count_mobius)
from .randpoly import (RandomPolynomialSample, coefficient_cell_volumes,
                       expected_tuple_count, sample_random_polynomial,
                       tuple_count_distribution)
from .realroots import (AlgebraicNumber, IsolatingInterval, count_k_tuples,
                        isolate_real_roots, real_roots_of, refine, sturm_count)
from .report import VerificationReport, build_verification_report
from .zeta import zeta

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber", "Box", "CofactorBox", "CountResult", "DensityEstimate",
    "DilatableRegion", "EnumerationTask", "IntPolynomial", "IsolatingInterval",
    "RandomPolynomialSample", "SymmetricProfile", "VerificationReport",
    "asymptotic_table", "band_density", "build_verification_report",
    "coefficient_cell_volumes", "cofactor_bounding_box", "cofactor_in_unit_cube",
    "content_and_primitive", "count_conjugate_tuples", "count_k_tuples",
    "count_reducible", "density_mc", "elementary_symmetric",
    "enumerate_prime_polynomials", "expected_tuple_count", "height",
    "integrate_density", "is_irreducible_over_q", "isolate_real_roots",
    "normalize_to_prime", "poly_from_roots", "predicted_count",
    "primitive_point_count", "primitive_point_count_mobius", "real_roots_of",
    "reducible_breakdown", "refine", "root_proxy_box",
    "sample_random_polynomial", "sturm_count", "top_order_density",
    "tuple_count_distribution", "zeta",
]

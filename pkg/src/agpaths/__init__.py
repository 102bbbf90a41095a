"""Exact q-series toolkit: Gaussian binomials, q-multinomials, q-supernomials,
weighted lattice-path polynomials and a machine-verification engine for the
associated multisum/product identities."""

from .series import LaurentPoly, TruncatedSeries, ZERO, ONE, q_power, format_poly
from .coefficients import (
    gaussian_binomial,
    signed_gaussian_binomial,
    q_multinomial,
    q_supernomial,
)
from .bressoud import (
    BressoudPath,
    EnumerationTooLarge,
    enumerate_bressoud,
    weighted_count,
    c_poly,
    b_poly,
    c_from_b,
    refined_bressoud_gf,
    fqk_lhs,
    fqk_rhs,
)
from .gordon import (
    GordonSequence,
    enumerate_gordon,
    weighted_gordon_count,
    g_poly,
    w_poly,
    g_from_w,
    f_poly,
    f_from_w,
    content_poly,
    minimal_path,
    orbit_generate,
    orbits_by_content,
)
from .identities import (
    VerificationReport,
    restricted_product_series,
    ag_multisum,
    multisum_truncation_bound,
    supernomial_I,
    supernomial_I_inverse,
    ag_identity,
    fqk_identity,
    warnaar_identity,
    variant1_finite,
    variant1_series,
    variant2_finite,
    variant2_series,
    b2_410,
    conjecture_5_7,
)

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "ZERO",
    "ONE",
    "q_power",
    "format_poly",
    "gaussian_binomial",
    "signed_gaussian_binomial",
    "q_multinomial",
    "q_supernomial",
    "BressoudPath",
    "EnumerationTooLarge",
    "enumerate_bressoud",
    "weighted_count",
    "c_poly",
    "b_poly",
    "c_from_b",
    "refined_bressoud_gf",
    "fqk_lhs",
    "fqk_rhs",
    "GordonSequence",
    "enumerate_gordon",
    "weighted_gordon_count",
    "g_poly",
    "w_poly",
    "g_from_w",
    "f_poly",
    "f_from_w",
    "content_poly",
    "minimal_path",
    "orbit_generate",
    "orbits_by_content",
    "VerificationReport",
    "restricted_product_series",
    "ag_multisum",
    "multisum_truncation_bound",
    "supernomial_I",
    "supernomial_I_inverse",
    "ag_identity",
    "fqk_identity",
    "warnaar_identity",
    "variant1_finite",
    "variant1_series",
    "variant2_finite",
    "variant2_series",
    "b2_410",
    "conjecture_5_7",
    "__version__",
]

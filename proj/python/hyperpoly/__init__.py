"""Exact hyperbolic polynomials, derivative cones and spectrahedral pencils.

All scalars are exact rationals; pass them as python ints or "num/den"
strings and read them back as canonical strings.
"""

from ._core import (
    HyperbolicContext,
    NotHyperbolicError,
    Polynomial,
    RankFunction,
    RealizationMatrix,
    SymmetricMatrix,
    SymmetricPencil,
    UnivariatePolynomial,
    all_roots_nonneg,
    char_poly,
    check_hyperbolic,
    constant,
    e2_arrowhead,
    elementary_symmetric,
    equals_uniform,
    gurvits_rank,
    is_pd,
    is_polymatroid,
    is_psd,
    is_real_rooted,
    is_unimodular_realization,
    mult_at_zero,
    product_of_forms,
    realization_pencil,
    renegar_pencil,
    search_unimodular,
    sturm_count,
    variable,
    verify_theorem1,
)

__all__ = [
    "HyperbolicContext",
    "NotHyperbolicError",
    "Polynomial",
    "RankFunction",
    "RealizationMatrix",
    "SymmetricMatrix",
    "SymmetricPencil",
    "UnivariatePolynomial",
    "all_roots_nonneg",
    "char_poly",
    "check_hyperbolic",
    "constant",
    "e2_arrowhead",
    "elementary_symmetric",
    "equals_uniform",
    "gurvits_rank",
    "is_pd",
    "is_polymatroid",
    "is_psd",
    "is_real_rooted",
    "is_unimodular_realization",
    "mult_at_zero",
    "product_of_forms",
    "realization_pencil",
    "renegar_pencil",
    "search_unimodular",
    "sturm_count",
    "variable",
    "verify_theorem1",
]

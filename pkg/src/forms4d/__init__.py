"""Exact arithmetic for integral bilinear forms, cyclotomic trace forms,
group rings, and the classical smoothness obstructions (Rokhlin, Donaldson)
for intersection forms of simply connected 4-manifolds.

Everything computes over arbitrary-precision integers and exact rationals;
floating point appears only in the optional numeric trace oracle used by the
test suite.
"""

__version__ = "0.1.0"

from .errors import CapExceededError, NonUnimodularFormError
from .exactla import (
    IntMatrix,
    RatDiagonalization,
    RatMatrix,
    SNFResult,
    congruent_diagonalize,
    determinant,
    signature,
    snf,
)
from .cyclotomic import (
    CyclotomicElement,
    IntPolynomial,
    cyc_mul,
    cyc_trace,
    cyclotomic_polynomial,
    embedding_trace_oracle,
    euler_phi,
    trace_form_gram,
)
from .quadform import (
    BilinearForm,
    Diag,
    FormInvariants,
    Hyperbolic,
    Pfister,
    WittExpression,
    direct_sum,
    e8_form,
    from_witt,
    invariants,
    is_diagonalizable_over_Z,
    odd_prime_trace_form,
    parse_witt,
    polarize,
    short_vectors,
    two_power_signature_values,
    two_power_trace_form,
)
from .groupring import (
    FiniteGroup,
    GroupRingElement,
    WedderburnDecomposition,
    abelian_group,
    conjugate,
    frobenius_form,
    gr_mul,
    is_symmetric_form,
    regular_representation,
    symmetric_group_s3,
    wedderburn_decompose,
)
from .fpgroup import (
    AbelianizationResult,
    AutReport,
    GroupPresentation,
    abelianize,
    aut_bruteforce,
    aut_coprime_formula,
    galois_surrogate,
)
from .smooth4 import (
    GroupRingFormResult,
    ObstructionReport,
    analyze_intersection_form,
    analyze_trace_form,
    h2_from_group_ring,
)

__all__ = [
    "CapExceededError",
    "NonUnimodularFormError",
    "IntMatrix",
    "RatMatrix",
    "SNFResult",
    "RatDiagonalization",
    "snf",
    "determinant",
    "congruent_diagonalize",
    "signature",
    "IntPolynomial",
    "CyclotomicElement",
    "euler_phi",
    "cyclotomic_polynomial",
    "cyc_mul",
    "cyc_trace",
    "trace_form_gram",
    "embedding_trace_oracle",
    "BilinearForm",
    "WittExpression",
    "Diag",
    "Hyperbolic",
    "Pfister",
    "parse_witt",
    "from_witt",
    "odd_prime_trace_form",
    "two_power_trace_form",
    "two_power_signature_values",
    "polarize",
    "direct_sum",
    "invariants",
    "FormInvariants",
    "e8_form",
    "short_vectors",
    "is_diagonalizable_over_Z",
    "FiniteGroup",
    "GroupRingElement",
    "WedderburnDecomposition",
    "abelian_group",
    "symmetric_group_s3",
    "gr_mul",
    "conjugate",
    "regular_representation",
    "frobenius_form",
    "is_symmetric_form",
    "wedderburn_decompose",
    "GroupPresentation",
    "AbelianizationResult",
    "AutReport",
    "abelianize",
    "aut_bruteforce",
    "aut_coprime_formula",
    "galois_surrogate",
    "ObstructionReport",
    "GroupRingFormResult",
    "analyze_intersection_form",
    "h2_from_group_ring",
    "analyze_trace_form",
]

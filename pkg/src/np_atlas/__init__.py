"""Exact-arithmetic cohomology of homogeneous bundles on flag varieties and
syzygy certification for isotropic and G2 homogeneous varieties."""

from .bott import (
    BlockedWeight,
    CohomologyResult,
    InversionBoundReport,
    bbw_cohomology,
    flag_dimension,
    inversion_bound,
    inversion_count,
    rho_shift,
    twisted_vanishing_threshold,
)
from .geometry import (
    Family,
    FlagShape,
    PicardRestriction,
    VarietySpec,
    canonical_weight,
    decompose_ample,
    grassmannian_pushforward,
    koszul_terms,
    parse_shape,
    parse_variety,
    picard_restriction,
    positivity,
    quotient_ranks,
    restriction_surjectivity_check,
)
from .partitions import (
    FrobeniusForm,
    conjugate,
    frobenius,
    from_frobenius,
    rank,
    weyl_dimension,
)
from .plethysm import (
    graded_entry_bound,
    leading_sum_bound,
    wedge_of_sym2,
    wedge_of_wedge2,
)
from .schur import (
    SchurSummand,
    filtration_quotients,
    lr_coefficient,
    schur_character,
    tensor_decompose,
)
from .syzygy import (
    NpCertificate,
    ThresholdResult,
    g2_np_certify,
    kernel_filtration,
    np_certify,
    np_threshold,
    schur_complex_term,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""Workbench for the moment problem on symmetric algebras of finite-dimensional spaces."""

from .algebra import Polynomial, evaluate, graded_parts, poly_add, poly_mul, poly_power
from .extension import (
    CertifiedInterval,
    Decomposition,
    ext_interval,
    ext_lower_bound,
    ext_upper_bound,
    ext_weighted_l1,
    functoriality_bound,
)
from .hilbert_scale import HilbertScalePoint, hs_norm, quasi_nuclear_embedding, scale_dominance
from .modules2d import (
    Certificate,
    NotFound,
    PowerModule,
    archimedean_witness,
    certificate_search,
    jacobi_epsilon_check,
    pos_on_spectrum,
)
from .moments import (
    AtomicMeasure,
    MkSequence,
    MomentTable,
    continuity_norm,
    distinguish_measures,
    hurwitz_reznick_check,
    integrate,
    m_positivity_check,
    mk_sequence,
    positivity_check,
    quasi_analytic_classify,
    reconstruct_univariate,
    support_radius,
    support_radius_estimate,
    table_from_measure,
)
from .seminorm import FamilySpec, SeminormSpec, dominates, dual_norm, lp, seminorm_eval, weighted_l1
from .spectrum import Character, SpectrumBall, sample_ball, spectrum_contains, spectrum_union_contains

__version__ = "0.1.0"

"""randcones: exact formulas, simulation, and statistical verification for
random polyhedral cones spanned by uniform points on spheres."""

from .angles import (
    fs_density,
    fs_integral,
    moment_m,
    moment_m_exact,
    sylvester_simplex_probability,
    third_moment_closed_form,
)
from .cones import (
    AngleEstimate,
    FVector,
    VertexClass,
    dual_face_count,
    f_vector,
    is_face,
    is_positive_spanning,
    neighborliness_events,
    schlafli_face_sample,
    solid_angle,
    spherical_vertex_class,
)
from .errors import (
    BudgetExceededError,
    DegenerateInputError,
    InvalidInputError,
    RandConesError,
    UnboundedProblemError,
    UnsupportedCaseError,
)
from .exact import (
    chamber_count,
    d2_vertex_distribution,
    expected_face_count,
    expected_intrinsic_volumes,
    face_event_probability,
    hoeffding_bound,
    wendel_p,
)
from .experiments import REGISTRY, ExperimentResult, run_experiment
from .gale import GaleDualPair, coupled_sample, verify_duality, verify_face_correspondence
from .limits import (
    QkSampler,
    concentration_check,
    independence_check,
    limit_law_comparison,
    make_qk_sampler,
    qk_laplace_k2,
    qk_theoretical_moments,
    sample_qk,
    simulate_fluctuation,
)
from .lp import LpVerdict, face_witness, positive_dependence_margin, solve_lp
from .quadrature import adaptive_simpson
from .sampling import (
    Rng,
    SphereConfig,
    general_position_check,
    orthonormal_nullspace_basis,
    sample_gaussian_matrix,
    sample_sphere_config,
    sample_sphere_points,
    sample_unit_sphere,
)
from .spectral import SpectralSequence, funk_hecke, tau_by_quadrature, trace_identities
from .special import gegenbauer, trigamma
from .stats import TestReport, binomial_ci, chi_square_gof, ks_two_sample
from .ustat import (
    angle_moments,
    g2_centered,
    g2_kernel,
    limit_constant,
    ustat_variance_exact,
    variance_asymptotic,
    zeta2,
)

__version__ = "0.1.0"

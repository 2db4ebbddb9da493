"""Reproducing kernels of the five symmetry-type Hilbert spaces.

Evaluates the kernels K(w, z) in closed form and through an independent
integral-equation oracle, and solves the attached extremal problems:
non-vanishing proportion bounds, the first-low-lying-zero bound xi0, and
the sharp embedding constants against the flat band-limited norm.
"""

from .debranges import (
    DeBrangesData,
    FirstZeroResult,
    build_debranges,
    canonical_extremizer,
    extremal_ratio,
    xi0,
)
from .densities import (
    Density,
    FourierDensity,
    KernelSpace,
    SymmetryGroup,
    atom_mass,
    density,
    density_ac,
    fourier_density,
    fourier_pairing,
    sharp_group,
    weighted_inner,
)
from .embeddings import (
    EmbeddingConstants,
    EtaEquation,
    eigenvalue_multiplicity,
    oracle_eta_extremes,
    sampling_norm_check,
    sampling_norm_from_samples,
    sharp_constants,
    solve_eta_extremes,
)
from .errors import (
    ClosedFormUnavailableError,
    DomainError,
    NoRootFoundError,
    NonFiniteIntegrandError,
    NumericalError,
    SingularMatrixError,
    UnsupportedRangeError,
)
from .extremal import (
    DeltaProblemSolution,
    ProportionCurve,
    curve_max,
    dirichlet_nonvanishing_proportion,
    nonvanishing_proportion,
    one_delta_extremizer,
    one_delta_value,
    proportion_curve,
    solve_one_delta,
    solve_two_delta,
    two_delta_extremizer,
    two_delta_value,
    vanishing_bound,
)
from .fredholm import (
    NystromSolution,
    OperatorDiscretization,
    discretize_T,
    kernel_via_oracle,
    solve_u,
)
from .kernels import aux_so_even, aux_sp, kernel, kernel_origin, kernel_real
from .numerics import (
    Bracket,
    Panel,
    find_roots_scan_bisect,
    gauss_legendre_panels,
    golden_section_max,
    integrate_panels,
    sinc_pi,
    solve_dense,
    symmetric_extreme_eigen,
)

__version__ = "0.1.0"

"""Sampling and reconstruction of spin signals on the Riemann sphere.

Spin-s signals are sampled at roots of unity and reconstructed exactly
(over/critical sampling) or in the minimal-norm least-squares sense
(undersampling); band-limited multi-spin signals live on parallels grids;
the Euler-angle picture is reached through a discrete Bargmann matrix.
"""

from .circulant import (
    DEFAULT_SINGULARITY_TOL,
    CirculantKernel,
    SingularKernelError,
    circ_eigenvalues,
    circ_pinv_apply,
    circ_solve,
)
from .coherent import (
    SpinState,
    bargmann_kernel,
    cs_overlap,
    majorana_eval,
    multi_overlap,
    norm_factor,
    upsilon,
)
from .euler import (
    DeadModesError,
    EulerSamples,
    bargmann_matrix,
    equator_alias,
    euler_sample_state,
    euler_to_holo,
    holo_to_euler,
    omega_eigens,
    sph_harm,
    wigner_d_m0,
)
from .multispin import (
    BandLimitedState,
    ParallelsGrid,
    ReconstructionError,
    default_radii,
    kernel_spectrum,
    make_grid,
    multi_dual_data,
    multi_eval,
    multi_frame_matrix,
    multi_overlap_kernel,
    multi_reconstruct,
    multi_sample,
    roots_rank_eigens,
)
from .numerics import binom, check_finite, roots_of_unity, unitary_dft
from .rfm import fold, pad, rfm_apply, rfm_matrix, truncate
from .singlespin import (
    CRITICAL,
    OVERSAMPLED,
    UNDERSAMPLED,
    FrameSpec,
    RegimeError,
    SampleVector,
    coefficients_from_samples,
    covariant_interpolate,
    dual_data,
    dual_filter,
    frame_matrix,
    overlap_eigenvalues,
    overlap_kernel,
    projection_residual,
    range_projector_apply,
    reconstruct,
    resolution_eigenvalues,
    sample_state,
    xi_hat_kernel,
    xi_kernel,
)

__version__ = "0.1.0"

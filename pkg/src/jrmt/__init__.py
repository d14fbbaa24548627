"""Jacobi unitary ensembles at finite size and in the large-size limit.

The package covers the full chain from sampling to universality checks:

- ``randgen``: seeded complex Gaussians, Haar unitaries, random projectors
- ``matalg``: Hermitian eigendecomposition, inverse square roots, principal angles
- ``ensembles``: the projector-compression and Wishart-ratio constructions
- ``orthopoly``: Jacobi polynomials in overflow-safe scaled arithmetic
- ``cdkernel``: the Christoffel-Darboux kernel and its bulk/edge rescalings
- ``limits``: limiting densities and the sine, Airy, and Bessel kernels
- ``fredholm``: gap probabilities det(I - K) by Nystrom quadrature
- ``empirics``: Monte Carlo harness and convergence reports
- ``cli``: the ``jrmt`` command-line tool
"""

__version__ = "0.1.0"

from .cdkernel import (
    KernelSpec,
    hard_edge_scale,
    kernel,
    one_point_density,
    rescaled_bulk,
    rescaled_hard,
    rescaled_soft,
    soft_edge,
)
from .empirics import (
    ConvergenceReport,
    EmpiricalSample,
    ExperimentSpec,
    interval_count,
    ks_against_cdf,
    ks_distance,
    run_experiment,
)
from .ensembles import (
    ProjectorPair,
    ReductionPlan,
    jacobi_wishart,
    projector_product,
    reduce_ranks,
    sample_largest,
    sample_spectrum,
    wishart,
)
from .errors import (
    DomainError,
    JrmtError,
    NumericError,
    ParameterError,
    RegimeError,
    SingularMatrixError,
    ValidationError,
)
from .fredholm import GapQuery, gap_probability, largest_eval_cdf, tracy_widom_cdf
from .limits import (
    FreeDensity,
    LimitProfile,
    airy,
    airy_kernel,
    airy_prime,
    banach_angle,
    bessel_j,
    bessel_kernel,
    bi,
    edge_profile,
    free_product_density,
    limit_density,
    sine_kernel,
    wishart_ratio_density,
)
from .matalg import eig_hermitian, inv_sqrt_psd, principal_cosines
from .orthopoly import (
    ScaledValue,
    chi,
    chi_prime,
    gamma_n,
    interior_asymptotic,
    jacobi_deriv,
    jacobi_eval,
    weight,
)
from .randgen import (
    SeededStream,
    complex_ginibre,
    haar_unitary,
    random_isometry,
    random_projector,
)

"""The Euler-angle picture: spherical harmonics, the discrete Bargmann
matrix K = Lambda * Q, and data conversion to/from the holomorphic picture.

Everything here is integer-spin and critical sampling (N = 2j+1): the
Euler-angle data are samples on a single parallel theta0, at azimuths
phi_k = -2 pi k / N (counted clockwise).  The parallel theta0 = pi/2 is the
known degenerate case: half of the circulant eigenvalues omega_k vanish and
only the even angular-momentum coefficients survive; `equator_alias`
recovers exactly those.

Spherical harmonics are defined through the SU(2) rotation coefficients
d^j_{m,0}(theta) (exact factorial sum), which ties their convention to the
same generating kernel used by the holomorphic picture and avoids any
external phase convention.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .circulant import CirculantKernel, circ_solve
from .coherent import SpinState
from .numerics import check_finite
from .singlespin import FrameSpec, SampleVector, overlap_kernel

OMEGA_TOL = 1e-10


class DeadModesError(ArithmeticError):
    """Picture conversion blocked by vanishing circulant eigenvalues."""

    def __init__(self, message, modes):
        super().__init__(message)
        self.modes = list(modes)


@dataclass(frozen=True)
class EulerSamples:
    """Samples Phi_k of a spin-j signal on the parallel theta0."""

    j: int
    theta0: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.j < 0:
            raise ValueError("j must be >= 0")
        if not 0.0 < self.theta0 < math.pi:
            raise ValueError("theta0 must lie strictly between the poles")
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (2 * self.j + 1,):
            raise ValueError("expected %d samples" % (2 * self.j + 1))
        check_finite(values, "samples")
        object.__setattr__(self, "values", values)

    @property
    def n_samples(self):
        return 2 * self.j + 1

    def azimuths(self):
        return -2 * np.pi * np.arange(self.n_samples) / self.n_samples


def wigner_d_m0(j, m, theta):
    """Rotation coefficient d^j_{m,0}(theta) of exp(-i theta J_y)."""
    if abs(m) > j:
        raise ValueError("|m| must not exceed j")
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    pref = math.sqrt(
        math.factorial(j + m) * math.factorial(j - m)
    ) * math.factorial(j)
    total = 0.0
    for k in range(max(0, -m), min(j, j - m) + 1):
        denom = (
            math.factorial(j - k)
            * math.factorial(k)
            * math.factorial(m + k)
            * math.factorial(j - m - k)
        )
        total += (-1) ** (m + k) / denom * c ** (2 * j - m - 2 * k) * s ** (m + 2 * k)
    return pref * total


def angular_component(j, m, theta, phi):
    """Component <theta, phi; 0 | j, m> = e^{i m phi} d^j_{m,0}(theta)."""
    return np.exp(1j * m * phi) * wigner_d_m0(j, m, theta)


def sph_harm(j, m, theta, phi):
    """Spherical harmonic Y^m_j in the convention where the spin-0 rotation
    component is exactly 1, i.e. Y^m_j = sqrt((2j+1)/4pi) e^{i m phi}
    d^j_{m,0}(theta)."""
    return math.sqrt((2 * j + 1) / (4 * math.pi)) * angular_component(j, m, theta, phi)


def _bargmann_prefactor(j):
    return math.exp(
        0.5 * math.lgamma(2 * j + 1) - 2 * j * math.log(2.0) - math.lgamma(j + 1)
    )


def _check_parallel(theta0):
    if not 0.0 < theta0 < math.pi:
        raise ValueError("theta0 must lie strictly between the poles")


def lambda_diagonal(j, theta0, n):
    """Diagonal factor of K: Lambda_k = sqrt((2j)!)/(2^{2j} j!)
    e^{2 pi i j k/N} sin^j(theta0)."""
    k = np.arange(n)
    return (
        _bargmann_prefactor(j)
        * math.sin(theta0) ** j
        * np.exp(2j * np.pi * j * k / n)
    )


def q_sequence(j, theta0, n):
    """First row of the circulant factor Q:
    q_m = (1 + 2 cot(theta0) e^{2 pi i m/N} - e^{4 pi i m/N})^j."""
    w = np.exp(2j * np.pi * np.arange(n) / n)
    return (1 + 2 * (math.cos(theta0) / math.sin(theta0)) * w - w**2) ** j


def bargmann_matrix(j, theta0, n=None):
    """Discrete N x N Bargmann matrix K = Lambda Q at critical sampling."""
    if n is None:
        n = 2 * j + 1
    if n != 2 * j + 1:
        raise ValueError("discrete Bargmann matrix requires critical N = 2j+1")
    _check_parallel(theta0)
    lam = lambda_diagonal(j, theta0, n)
    q_circ = CirculantKernel(q_sequence(j, theta0, n)).dense()
    return lam[:, None] * q_circ


def omega_eigens(j, theta0, n=None):
    """Circulant eigenvalues omega_k = sum_m q_m e^{-2 pi i k m/N} of Q."""
    if n is None:
        n = 2 * j + 1
    _check_parallel(theta0)
    return np.fft.fft(q_sequence(j, theta0, n))


def euler_sample_state(state, theta0):
    """Sample a spin state directly in the Euler-angle picture."""
    _check_parallel(theta0)
    j = _integer_spin(state.two_s)
    n = 2 * j + 1
    phi = -2 * np.pi * np.arange(n) / n
    values = np.zeros(n, dtype=complex)
    for idx, a in enumerate(state.coeffs):
        m = idx - j
        values += a * angular_component(j, m, theta0, phi)
    return EulerSamples(j, theta0, values)


def holo_to_euler(samples, theta0):
    """Convert holomorphic samples to Euler-angle samples on the parallel
    theta0: Phi = K B^{-1} Psi, through circulant solves."""
    _check_parallel(theta0)
    spec = samples.spec
    j = _integer_spin(spec.two_s)
    if spec.regime != "critical":
        raise ValueError("picture conversion requires critical sampling N = 2j+1")
    if spec.root_of != 1:
        raise ValueError("picture conversion requires roots-of-unity sampling")
    n = spec.n_samples
    gamma = circ_solve(overlap_kernel(spec), samples.values)
    q_kernel = CirculantKernel(q_sequence(j, theta0, n))
    phi_values = lambda_diagonal(j, theta0, n) * q_kernel.matvec(gamma)
    return EulerSamples(j, theta0, phi_values)


def euler_to_holo(phi_samples, tol=OMEGA_TOL):
    """Convert Euler-angle samples back to holomorphic samples:
    Psi = B Q^{-1} Lambda^{-1} Phi.

    Raises DeadModesError, listing the dead modes, when any omega_k
    vanishes at the relative tolerance (e.g. on the equator)."""
    j = phi_samples.j
    n = phi_samples.n_samples
    theta0 = phi_samples.theta0
    omega = omega_eigens(j, theta0, n)
    mags = np.abs(omega)
    dead = np.flatnonzero(mags <= tol * mags.max())
    if dead.size:
        raise DeadModesError(
            "parallel theta0=%g does not determine the signal: dead modes %s"
            % (theta0, dead.tolist()),
            dead,
        )
    rescaled = phi_samples.values / lambda_diagonal(j, theta0, n)
    q_kernel = CirculantKernel(q_sequence(j, theta0, n))
    gamma = circ_solve(q_kernel, rescaled, tol)
    spec = FrameSpec(2 * j, n)
    psi_values = overlap_kernel(spec).matvec(gamma)
    return SampleVector(spec, psi_values)


def equator_alias(phi_samples, atol=1e-9):
    """Recover the even angular-momentum coefficients from equator samples.

    On theta0 = pi/2 the columns of the sampling matrix with n = s+m odd
    vanish identically, so the odd coefficients are returned as zero;
    the second element of the result flags whether any were dropped.
    """
    theta0 = phi_samples.theta0
    if abs(theta0 - math.pi / 2) > atol:
        raise ValueError("equator alias requires theta0 = pi/2")
    j = phi_samples.j
    n = 2 * j + 1
    phi = phi_samples.azimuths()
    even = np.arange(0, n, 2)
    columns = np.column_stack(
        [angular_component(j, idx - j, theta0, phi) for idx in even]
    )
    solution, *_ = np.linalg.lstsq(columns, phi_samples.values, rcond=None)
    coeffs = np.zeros(n, dtype=complex)
    coeffs[even] = solution
    odd_dropped = n > 1
    return SpinState(2 * j, coeffs), odd_dropped


def _integer_spin(two_s):
    if two_s % 2 != 0:
        raise ValueError("the Euler-angle picture supports integer spin only")
    return two_s // 2

"""Sampling and reconstruction of a single spin-s signal at N roots of unity.

The frame operator T maps coefficients to samples, T[k, n] =
(1+r^2)^{-s} sqrt(C(2s, n)) conj(z_k)^n.  At the N-th roots of unity (more
generally, the N-th roots of any non-zero c, radius r = |c|^{1/N}):

  * the resolution operator A = T^dag T is diagonal with binomial
    eigenvalues lam_n;
  * the overlap kernel B = T T^dag is circulant with eigenvalues lam_hat_k
    given by the mod-N fold of the lam_n.

Three regimes are dispatched from (two_s, N): oversampled (N > 2s+1, exact
reconstruction with implicit projection of inconsistent data), critical
(N = 2s+1) and undersampled (N < 2s+1, minimal-norm alias reconstruction
through the inverse overlap kernel).  Regime-specific operations fail
loudly instead of silently switching formulas.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .circulant import (
    DEFAULT_SINGULARITY_TOL,
    CirculantKernel,
    circ_pinv_apply,
    circ_solve,
)
from .coherent import SpinState, cs_overlap, majorana_eval, norm_factor
from .numerics import binom, check_finite

OVERSAMPLED = "oversampled"
CRITICAL = "critical"
UNDERSAMPLED = "undersampled"


class RegimeError(ValueError):
    """Operation invoked in a sampling regime where it is undefined."""


@dataclass(frozen=True)
class FrameSpec:
    """Spin, sample count and (optionally) which complex number's roots are
    used as sampling points (default: roots of unity)."""

    two_s: int
    n_samples: int
    root_of: complex = 1.0 + 0.0j

    def __post_init__(self):
        if self.two_s < 0:
            raise ValueError("two_s must be >= 0")
        if self.n_samples < 1:
            raise ValueError("need at least one sample")
        if self.root_of == 0:
            raise ValueError("sampling points must be roots of a non-zero number")

    @property
    def dim(self):
        return self.two_s + 1

    @property
    def regime(self):
        if self.n_samples > self.dim:
            return OVERSAMPLED
        if self.n_samples == self.dim:
            return CRITICAL
        return UNDERSAMPLED

    @property
    def q_bar(self):
        """Ceiling of (2s+1)/N: number of N-blocks covering the spectrum."""
        return -(-self.dim // self.n_samples)

    @property
    def radius(self):
        return abs(self.root_of) ** (1.0 / self.n_samples)

    @property
    def base_phase(self):
        return cmath.phase(complex(self.root_of)) / self.n_samples

    def sample_points(self):
        k = np.arange(self.n_samples)
        return self.radius * np.exp(
            1j * (self.base_phase + 2 * np.pi * k / self.n_samples)
        )

    def column_weights(self):
        """Weights v_n with T = conj(F_{N,2s+1}) diag(v); lam_n = |v_n|^2."""
        n = np.arange(self.dim)
        mags = np.array([math.sqrt(binom(self.two_s, int(m))) for m in n])
        return (
            math.sqrt(self.n_samples)
            * norm_factor(self.two_s, self.radius)
            * mags
            * self.radius**n
            * np.exp(-1j * n * self.base_phase)
        )


@dataclass(frozen=True)
class SampleVector:
    """N complex samples of a spin-s signal at the spec's sampling points."""

    spec: FrameSpec
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != (self.spec.n_samples,):
            raise ValueError("sample count does not match spec")
        check_finite(values, "samples")
        object.__setattr__(self, "values", values)


def frame_matrix(spec):
    """Dense N x (2s+1) frame matrix T[k, n] = <z_k | s, n-s>."""
    n = spec.n_samples
    k = np.arange(n)[:, None]
    m = np.arange(spec.dim)[None, :]
    phases = np.exp(-2j * np.pi * k * m / n)
    return phases * (spec.column_weights() / math.sqrt(n))


def resolution_eigenvalues(spec):
    """Diagonal of A = T^dag T; defined only when the frame resolves H_s."""
    if spec.regime == UNDERSAMPLED:
        raise RegimeError(
            "resolution operator is singular for N=%d < %d" % (spec.n_samples, spec.dim)
        )
    return np.abs(spec.column_weights()) ** 2


def overlap_kernel(spec):
    """Circulant overlap kernel B = T T^dag, as its first row."""
    points = spec.sample_points()
    first_row = cs_overlap(spec.two_s, points[0], points)
    return CirculantKernel(first_row)


def overlap_eigenvalues(spec):
    """Eigenvalues of B in spectral (DFT mode) order: the mod-N fold of the
    extended resolution eigenvalues.  Real and non-negative."""
    lam = np.abs(spec.column_weights()) ** 2
    n = spec.n_samples
    folded = np.zeros(n)
    for i, value in enumerate(lam):
        folded[i % n] += value
    return folded


def sample_state(state, n_samples, root_of=1.0 + 0.0j):
    """Sample a spin state at the n-th roots of `root_of` (the data)."""
    spec = FrameSpec(state.two_s, n_samples, root_of)
    return SampleVector(spec, majorana_eval(state, spec.sample_points()))


def xi_kernel(spec, w):
    """Sinc-type reconstruction kernel for over/critical sampling,

        Xi(w) = (2^s / N) (1+|w|^2)^{-s} sum_{n=0}^{2s} conj(w)^n,

    evaluated by direct summation so the removable point conj(w) = 1 needs
    no special casing.  Defined for unit-circle sampling only.
    """
    _require_unit_roots(spec)
    if spec.regime == UNDERSAMPLED:
        raise RegimeError("exact-reconstruction kernel undefined when undersampled")
    check_finite(w, "w")
    wc = np.conj(np.asarray(w, dtype=complex))
    acc = np.zeros_like(wc)
    for _ in range(spec.dim):
        acc = acc * wc + 1.0
    scale = 2.0 ** (0.5 * spec.two_s) / spec.n_samples
    return scale * norm_factor(spec.two_s, w) * acc


def xi_hat_kernel(spec, w):
    """Interpolating kernel for under/critical sampling; satisfies
    Xi_hat(z_l / z_k) = delta_{lk} exactly and coincides with xi_kernel at
    critical sampling."""
    _require_unit_roots(spec)
    if spec.regime == OVERSAMPLED:
        raise RegimeError("alias kernel undefined when strictly oversampled")
    check_finite(w, "w")
    wc = np.conj(np.asarray(w, dtype=complex))
    lam = resolution_lambda_extended(spec)
    lam_hat = overlap_eigenvalues(spec)
    n = spec.n_samples
    acc = np.zeros_like(wc)
    for p in range(n):
        inner = np.zeros_like(wc)
        for l in range(spec.q_bar):
            idx = p + l * n
            if idx < spec.dim:
                inner = inner + lam[idx] * wc**idx
        acc = acc + inner / lam_hat[p]
    scale = 2.0 ** (0.5 * spec.two_s) / n
    return scale * norm_factor(spec.two_s, w) * acc


def resolution_lambda_extended(spec):
    """lam_n for n = 0..2s regardless of regime (the fold's raw input)."""
    return np.abs(spec.column_weights()) ** 2


def coefficients_from_samples(samples, tol=DEFAULT_SINGULARITY_TOL):
    """Recover angular-momentum coefficients from the data.

    Over/critical sampling applies the left pseudo-inverse A^{-1} T^dag
    (inconsistent data are implicitly projected onto the frame's range);
    undersampling applies the right pseudo-inverse T^dag B^{-1}, giving the
    minimal-norm alias coefficients.
    """
    spec = samples.spec
    v = spec.column_weights()
    n = spec.n_samples
    if spec.regime == UNDERSAMPLED:
        gamma = circ_solve(overlap_kernel(spec), samples.values, tol)
        spectrum = math.sqrt(n) * np.fft.ifft(gamma)
        idx = np.arange(spec.dim) % n
        coeffs = np.conj(v) * spectrum[idx]
    else:
        spectrum = math.sqrt(n) * np.fft.ifft(samples.values)
        lam = np.abs(v) ** 2
        coeffs = np.conj(v) * spectrum[: spec.dim] / lam
    return SpinState(spec.two_s, coeffs)


def reconstruct(samples, z, tol=DEFAULT_SINGULARITY_TOL):
    """Evaluate the reconstructed signal at z (scalar or array).

    Exact for consistent data at over/critical sampling; the orthogonal
    alias projection when undersampled.
    """
    check_finite(z, "z")
    return majorana_eval(coefficients_from_samples(samples, tol), z)


def dual_filter(spec):
    """Convolution filter turning data into dual data.

    The negative-kernel DFT (scaled by 1/sqrt(N)) of the Moore-Penrose
    reciprocal of the overlap eigenvalues; at over/critical sampling this is
    the rectangular transform of the reciprocal resolution eigenvalues.

    The excluded modes are the structural zeros of the folded binomial
    spectrum (exactly 0.0 by construction); every strictly positive mode is
    inverted, however small — at high spin the spectrum legitimately spans
    many orders of magnitude.
    """
    lam_hat = overlap_eigenvalues(spec)
    gain = np.zeros(spec.n_samples, dtype=complex)
    keep = lam_hat > 0.0
    gain[keep] = 1.0 / lam_hat[keep]
    return np.fft.fft(gain) / math.sqrt(spec.n_samples)


def dual_data(samples, tol=DEFAULT_SINGULARITY_TOL):
    """Dual data Gamma = B^+ Psi, equivalently the circular convolution of
    the dual filter with the data up to the 1/sqrt(N) DFT normalization.

    Satisfies B Gamma = P Psi (oversampled) and B Gamma = Psi
    (under/critical)."""
    return circ_pinv_apply(overlap_kernel(samples.spec), samples.values, tol)


def range_projector_apply(spec, data):
    """Apply the orthogonal projector onto the range of the frame operator:
    DFT, keep the first 2s+1 modes, transform back."""
    if spec.regime == UNDERSAMPLED:
        raise RegimeError("range projector defined only for N >= 2s+1")
    data = np.asarray(data, dtype=complex)
    if data.shape[0] != spec.n_samples:
        raise ValueError("length mismatch")
    spectrum = np.fft.ifft(data)
    spectrum[spec.dim :] = 0.0
    return np.fft.fft(spectrum)


def projection_residual(samples):
    """Norm of the component of the data outside the frame's range; a
    diagnostic for inconsistent oversampled data (zero at critical)."""
    projected = range_projector_apply(samples.spec, samples.values)
    return float(np.linalg.norm(samples.values - projected))


def covariant_interpolate(
    spec, zeta, z, tol=DEFAULT_SINGULARITY_TOL, consistency_tol=1e-9
):
    """Minimal-norm interpolation through the sample points: the unique
    signal of least norm with prescribed values zeta at the z_k.

    Needs an invertible overlap kernel (under/critical sampling).
    Oversampled data are accepted only when they already lie in the frame's
    range; otherwise no interpolant exists in H_s and a RegimeError is
    raised."""
    zeta = np.asarray(zeta, dtype=complex)
    if zeta.shape[0] != spec.n_samples:
        raise ValueError("need one target value per sampling point")
    check_finite(z, "z")
    kernel = overlap_kernel(spec)
    if spec.regime == OVERSAMPLED:
        projected = range_projector_apply(spec, zeta)
        scale = np.linalg.norm(zeta)
        if np.linalg.norm(zeta - projected) > consistency_tol * max(scale, 1.0):
            raise RegimeError(
                "oversampled interpolation targets are inconsistent "
                "(residual %g)" % np.linalg.norm(zeta - projected)
            )
        gamma = circ_pinv_apply(kernel, zeta, tol)
    else:
        gamma = circ_solve(kernel, zeta, tol)
    points = spec.sample_points()
    z = np.asarray(z, dtype=complex)
    out = np.zeros_like(z)
    for g, p in zip(gamma, points):
        out = out + g * cs_overlap(spec.two_s, z, p)
    return out


def _require_unit_roots(spec):
    if spec.root_of != 1:
        raise ValueError(
            "closed-form kernels are available for unit-circle sampling only"
        )

"""Band-limited signals up to integer spin J sampled on parallels grids.

The (J+1)^2 coefficients are indexed lexicographically by (s, n) with
s = 0..J, n = 0..2s (flat index s^2 + n).  The sampling grid places 2s+1
equally spaced points on a circle of radius r_s for each spin, with all
radii distinct; the resulting overlap kernel is hermitian but NOT
circulant, so its inverse is computed numerically and the condition number
is always reported.

Putting all (J+1)^2 points on the equator instead makes the kernel rank
deficient (rank 2J+1); `roots_rank_eigens` exposes that spectrum.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .coherent import multi_overlap, norm_factor
from .numerics import binom, check_finite, roots_of_unity

MIN_RADII_SEPARATION = 1e-9


class ReconstructionError(ArithmeticError):
    """Overlap kernel too ill-conditioned to invert reliably."""


@dataclass(frozen=True)
class BandLimitedState:
    """Coefficients a_{s,m} for all integer spins s = 0..J."""

    J: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.J < 0:
            raise ValueError("J must be >= 0")
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if coeffs.shape != ((self.J + 1) ** 2,):
            raise ValueError(
                "expected %d coefficients, got shape %s"
                % ((self.J + 1) ** 2, coeffs.shape)
            )
        check_finite(coeffs, "coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def dim(self):
        return (self.J + 1) ** 2


@dataclass(frozen=True)
class ParallelsGrid:
    """J+1 circles of pairwise distinct radii carrying 2s+1 points each."""

    J: int
    radii: np.ndarray = field(repr=False)

    def __post_init__(self):
        radii = np.asarray(self.radii, dtype=float)
        if radii.shape != (self.J + 1,):
            raise ValueError("need one radius per spin 0..J")
        if np.any(radii <= 0):
            raise ValueError("radii must be positive")
        diffs = np.abs(radii[:, None] - radii[None, :])
        np.fill_diagonal(diffs, np.inf)
        if diffs.min() <= MIN_RADII_SEPARATION:
            raise ValueError("radii must be pairwise distinct")
        object.__setattr__(self, "radii", radii)

    @property
    def n_points(self):
        return (self.J + 1) ** 2

    def points(self):
        """All z_m^{(s)} = r_s exp(2 pi i m/(2s+1)) in (s, m) order."""
        chunks = [
            self.radii[s] * roots_of_unity(2 * s + 1) for s in range(self.J + 1)
        ]
        return np.concatenate(chunks)


def default_radii(J):
    """Radii of equiangular parallels theta_s = pi (s+1)/(J+2): strictly
    increasing, clear of both poles."""
    if J < 0:
        raise ValueError("J must be >= 0")
    s = np.arange(J + 1)
    return np.tan(np.pi * (s + 1) / (2 * (J + 2)))


def make_grid(J, radii=None):
    if radii is None:
        radii = default_radii(J)
    return ParallelsGrid(J, radii)


def coherent_row(J, z):
    """Components conj(<z | s, n-s>)^(J) of the band-limited coherent state
    at z, in flat (s, n) order, including the 1/sqrt(J+1) fiducial factor."""
    parts = []
    for s in range(J + 1):
        n = np.arange(2 * s + 1)
        mags = np.array([math.sqrt(binom(2 * s, int(m))) for m in n])
        parts.append(norm_factor(2 * s, z) * mags * np.conj(z) ** n)
    return np.concatenate(parts) / math.sqrt(J + 1)


def multi_eval(state, z):
    """Evaluate the band-limited signal <z|psi> at a single point z."""
    check_finite(z, "z")
    return complex(coherent_row(state.J, complex(z)) @ state.coeffs)


def multi_frame_matrix(grid):
    """(J+1)^2 x (J+1)^2 frame matrix: one coherent row per grid point."""
    return np.array([coherent_row(grid.J, z) for z in grid.points()])


def multi_sample(state, grid):
    """Samples of the state at every grid point."""
    if state.J != grid.J:
        raise ValueError("state and grid band limits differ")
    return multi_frame_matrix(grid) @ state.coeffs


def multi_overlap_kernel(grid):
    """Hermitian overlap kernel B[k, l] = <z_k | z_l> over the grid points."""
    points = grid.points()
    n = points.shape[0]
    kernel = np.empty((n, n), dtype=complex)
    for k in range(n):
        kernel[k, k] = 1.0
        for l in range(k + 1, n):
            value = multi_overlap(grid.J, points[k], points[l])
            kernel[k, l] = value
            kernel[l, k] = np.conj(value)
    return kernel


def kernel_spectrum(grid):
    """Real spectrum of the overlap kernel, ascending."""
    return np.linalg.eigvalsh(multi_overlap_kernel(grid))


def multi_dual_data(samples, grid, tol=1e-12):
    """Solve B gamma = samples; returns (gamma, condition number).

    Raises ReconstructionError when the smallest kernel eigenvalue falls at
    or below tol times the largest."""
    samples = np.asarray(samples, dtype=complex)
    if samples.shape != (grid.n_points,):
        raise ValueError("need one sample per grid point")
    kernel = multi_overlap_kernel(grid)
    spectrum = np.linalg.eigvalsh(kernel)
    smallest, largest = spectrum[0], spectrum[-1]
    if largest <= 0 or smallest <= tol * largest:
        raise ReconstructionError(
            "overlap kernel numerically singular: smallest eigenvalue %g "
            "(largest %g, tolerance %g)" % (smallest, largest, tol)
        )
    gamma = np.linalg.solve(kernel, samples)
    return gamma, float(largest / smallest)


def multi_reconstruct(samples, grid, z, tol=1e-12):
    """Reconstruct the band-limited signal at z from its grid samples.

    Returns (value, condition number of the overlap kernel)."""
    check_finite(z, "z")
    gamma, condition = multi_dual_data(samples, grid, tol)
    points = grid.points()
    value = sum(
        g * multi_overlap(grid.J, complex(z), complex(p))
        for g, p in zip(gamma, points)
    )
    return complex(value), condition


def roots_rank_eigens(J, N):
    """Spectrum (in DFT mode order) of the equatorial multi-spin kernel over
    N >= 2J+1 roots of unity: only 2J+1 modes are non-zero.

        lam_tilde_n = (1/(J+1)) sum_s (N / 2^{2s}) C(2s, n), n = 0..2J.
    """
    if N < 2 * J + 1:
        raise ValueError("need N >= 2J+1")
    out = np.zeros(N)
    for n in range(2 * J + 1):
        out[n] = sum(
            N / 4.0**s * binom(2 * s, n) for s in range(J + 1)
        ) / (J + 1)
    return out

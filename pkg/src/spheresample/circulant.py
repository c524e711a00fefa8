"""Circulant matrix algebra: DFT eigen-decomposition, solves, pseudo-inverse.

A circulant matrix here is specified by its first row C, so entry (k, l) is
C_{(l-k) mod N}.  Its eigenvalues, in the order that matches the analytic
binomial spectra of the overlap kernels, are the representative polynomial
evaluated at conjugated roots of unity,

    lam_k = sum_l C_l exp(-2i pi k l / N),

i.e. the plain (negative-kernel) DFT of the first row.  With the package's
positive-kernel unitary F this gives circ(C) = F^dag diag(lam) F; solves and
pseudo-inverse applications run through that factorization in O(N log N).
"""

import numpy as np

DEFAULT_SINGULARITY_TOL = 1e-10


class SingularKernelError(ArithmeticError):
    """Raised when a solve hits a numerically vanishing eigenvalue."""


class CirculantKernel:
    """First row of a circulant matrix plus its DFT eigenvalues.

    Eigenvalues are computed eagerly so instances are immutable and freely
    shareable between threads.
    """

    def __init__(self, first_row):
        self.first_row = np.asarray(first_row, dtype=complex)
        if self.first_row.ndim != 1 or self.first_row.shape[0] < 1:
            raise ValueError("first row must be a non-empty vector")
        self.eigenvalues = np.fft.fft(self.first_row)

    @property
    def n(self):
        return self.first_row.shape[0]

    def matvec(self, x):
        x = np.asarray(x, dtype=complex)
        if x.shape[0] != self.n:
            raise ValueError("length mismatch")
        return np.fft.fft(self.eigenvalues * np.fft.ifft(x))

    def dense(self):
        """Materialize the full matrix; intended for oracles and diagnostics."""
        idx = (np.arange(self.n)[None, :] - np.arange(self.n)[:, None]) % self.n
        return self.first_row[idx]


def circ_eigenvalues(kernel):
    return kernel.eigenvalues.copy()


def circ_solve(kernel, rhs, tol=DEFAULT_SINGULARITY_TOL):
    """Solve circ(C) x = rhs through the eigen-decomposition.

    Raises SingularKernelError if any eigenvalue magnitude falls at or below
    tol times the largest one.
    """
    rhs = np.asarray(rhs, dtype=complex)
    if rhs.shape[0] != kernel.n:
        raise ValueError("length mismatch")
    lam = kernel.eigenvalues
    mags = np.abs(lam)
    peak = mags.max()
    if peak == 0.0 or np.any(mags <= tol * peak):
        bad = int(np.argmin(mags))
        raise SingularKernelError(
            "circulant kernel singular at tolerance %g (mode %d, |eigenvalue| %g)"
            % (tol, bad, mags[bad])
        )
    return np.fft.fft(np.fft.ifft(rhs) / lam)


def circ_pinv_apply(kernel, rhs, tol=DEFAULT_SINGULARITY_TOL):
    """Apply the Moore-Penrose pseudo-inverse: reciprocal eigenvalues above
    the relative cutoff, zero elsewhere."""
    rhs = np.asarray(rhs, dtype=complex)
    if rhs.shape[0] != kernel.n:
        raise ValueError("length mismatch")
    lam = kernel.eigenvalues
    mags = np.abs(lam)
    peak = mags.max()
    gain = np.zeros_like(lam)
    if peak > 0.0:
        keep = mags > tol * peak
        gain[keep] = 1.0 / lam[keep]
    return np.fft.fft(gain * np.fft.ifft(rhs))

"""Foundation arithmetic: binomial weights, the unitary DFT and roots of unity.

The transform convention used everywhere in this package is the symmetric
(unitary) one with a *positive* exponent in the forward kernel,

    (F_N)_{nm} = exp(+2i pi n m / N) / sqrt(N),

so the inverse transform is the adjoint.  Every factorization of frame and
overlap operators elsewhere in the package depends on this choice.
"""

import math

import numpy as np

# Largest n for which binomials are taken from exact integer arithmetic.
_EXACT_BINOM_LIMIT = 64


def binom(n, k):
    """Binomial coefficient C(n, k) as a float, 0 outside 0 <= k <= n.

    Exact (correctly rounded) for n <= 64; log-gamma based beyond that,
    with relative error below 1e-13.
    """
    if n < 0:
        raise ValueError("binom requires n >= 0, got %d" % n)
    if k < 0 or k > n:
        return 0.0
    if n <= _EXACT_BINOM_LIMIT:
        return float(math.comb(n, k))
    return math.exp(math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1))


def check_finite(z, name="value"):
    """Reject NaN/Inf inputs to the public evaluation operations."""
    arr = np.asarray(z)
    finite = np.isfinite(arr.real) & np.isfinite(arr.imag) if np.iscomplexobj(arr) else np.isfinite(arr)
    if not np.all(finite):
        raise ValueError("%s must be finite" % name)
    return z


def unitary_dft(v, inverse=False):
    """Unitary DFT with positive-exponent forward kernel.

    forward:  (1/sqrt(N)) sum_m exp(+2i pi n m/N) v_m
    inverse:  the adjoint, so inverse(forward(v)) == v.
    """
    v = np.asarray(v, dtype=complex)
    n = v.shape[-1]
    if n < 1:
        raise ValueError("empty vector")
    if inverse:
        return np.fft.fft(v) / math.sqrt(n)
    return np.fft.ifft(v) * math.sqrt(n)


def roots_of_unity(n):
    """The n-th roots of unity z_k = exp(2 pi i k / n), k = 0..n-1."""
    if n < 1:
        raise ValueError("need n >= 1")
    return np.exp(2j * np.pi * np.arange(n) / n)

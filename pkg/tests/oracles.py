"""Independent reference implementations used as test oracles.

Everything here is deliberately naive (dense matrices, O(N^2) transforms,
exact integer arithmetic) and shares no code with the production paths.
"""

import math
from fractions import Fraction

import numpy as np


def naive_dft(v, inverse=False):
    """Direct O(N^2) unitary transform with positive forward kernel."""
    v = np.asarray(v, dtype=complex)
    n = v.shape[0]
    sign = -1 if inverse else +1
    k = np.arange(n)
    kernel = np.exp(sign * 2j * np.pi * np.outer(k, k) / n) / math.sqrt(n)
    return kernel @ v


def exact_binom(n, k):
    """Arbitrary-precision binomial coefficient as a Fraction."""
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def dense_frame(spec):
    """Frame matrix assembled entry by entry from the coherent-state
    components, with no Fourier shortcuts."""
    points = spec.sample_points()
    dim = spec.two_s + 1
    out = np.empty((spec.n_samples, dim), dtype=complex)
    for k, z in enumerate(points):
        nf = (1.0 + abs(z) ** 2) ** (-0.5 * spec.two_s)
        for n in range(dim):
            out[k, n] = nf * math.sqrt(math.comb(spec.two_s, n)) * np.conj(z) ** n
    return out


def dense_projector(spec):
    """Orthogonal projector onto the frame's range, built from the dense
    frame matrix with generic linear algebra."""
    t = dense_frame(spec)
    return t @ np.linalg.pinv(t)


def minimal_norm_coeffs(spec, data):
    """Minimum-norm least-squares coefficient fit via dense lstsq."""
    t = dense_frame(spec)
    solution, *_ = np.linalg.lstsq(t, np.asarray(data, dtype=complex), rcond=None)
    return solution


def rotation_coefficient_series(j, theta):
    """d^j_{m,0}(theta) for all m via the characters of a product of 2j
    spin-1/2 rotations: expand (cos(t/2) x - sin(t/2) y)(...) symbolically.

    Implemented as repeated polynomial multiplication in the two spinor
    components; independent of any factorial formula.
    """
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    # Coefficients of (c*u - s*v)^a (s*u + c*v)^b summed so that the
    # state |j, m> ~ u^{j+m} v^{j-m} / sqrt((j+m)!(j-m)!) rotates; the
    # d-coefficient is the amplitude staying on m' = m after rotating
    # the m = 0 state.  Equivalent low-tech route: numerically rotate the
    # monomial basis of degree 2j.
    dim = 2 * j + 1
    # Build the SU(2) rotation exp(-i theta J_y) in the spin-j matrix
    # representation from the tridiagonal J_y and scipy-free expm via
    # eigen-decomposition of the Hermitian J_y.
    m = np.arange(dim) - j
    ladder = np.sqrt((j - m[:-1]) * (j + m[:-1] + 1))
    jy = np.zeros((dim, dim), dtype=complex)
    for i, l in enumerate(ladder):
        jy[i + 1, i] = l / 2j
        jy[i, i + 1] = -l / 2j
    w, u = np.linalg.eigh(jy)
    rot = u @ np.diag(np.exp(-1j * theta * w)) @ u.conj().T
    return rot[:, j].real


def block_ones(m, n):
    """M x M matrix with 1 where row index = column index mod n."""
    idx = np.arange(m)
    return (idx[:, None] % n == idx[None, :] % n).astype(float)

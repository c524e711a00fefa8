"""Rectangular Fourier transforms: pad/truncate/fold maps around the unitary DFT.

The rectangular transform of shape (N, M) is never materialized as a dense
matrix on the main path: for N >= M it is pad-then-DFT, for N < M it is
fold-then-DFT (wrap-around sums of blocks of length N).  A dense constructor
is provided for use as a test oracle.
"""

import math

import numpy as np


def pad(v, n):
    """Zero-pad a vector to length n (n >= len(v))."""
    v = np.asarray(v, dtype=complex)
    m = v.shape[0]
    if n < m:
        raise ValueError("pad target %d shorter than input %d" % (n, m))
    out = np.zeros(n, dtype=complex)
    out[:m] = v
    return out


def truncate(v, m):
    """Keep the first m entries of a vector (m <= len(v))."""
    v = np.asarray(v, dtype=complex)
    if m > v.shape[0]:
        raise ValueError("truncate target %d longer than input %d" % (m, v.shape[0]))
    return v[:m].copy()


def fold(v, n):
    """Wrap-around sum w_k = sum_j v_{k + j n}, reducing any length to n."""
    v = np.asarray(v, dtype=complex)
    m = v.shape[0]
    q_bar = -(-m // n)
    padded = pad(v, q_bar * n)
    return padded.reshape(q_bar, n).sum(axis=0)


def rfm_apply(n_rows, v):
    """Apply the rectangular Fourier transform of shape (n_rows, len(v)).

    For n_rows >= len(v) this is the unitary DFT of the zero-padded vector;
    for n_rows < len(v) it is the unitary DFT of the folded vector, which is
    what the block decomposition into square DFT matrices amounts to.
    """
    from .numerics import unitary_dft

    v = np.asarray(v, dtype=complex)
    m = v.shape[0]
    if n_rows >= m:
        return unitary_dft(pad(v, n_rows))
    return unitary_dft(fold(v, n_rows))


def rfm_matrix(n_rows, n_cols):
    """Dense rectangular Fourier matrix; test oracle only.

    Entries exp(+2i pi n m / N) / sqrt(N), n = 0..N-1, m = 0..M-1.
    """
    n = np.arange(n_rows)[:, None]
    m = np.arange(n_cols)[None, :]
    return np.exp(2j * np.pi * n * m / n_rows) / math.sqrt(n_rows)

"""Spin coherent-state kernels on the Riemann sphere.

A spin-s state is a coefficient vector a_{n-s}, n = 0..2s, in the angular
momentum basis; its holomorphic (Majorana) representation is

    Psi(z) = (1 + |z|^2)^{-s} sum_n a_{n-s} sqrt(C(2s, n)) conj(z)^n.

Half-integer spins are carried as the integer two_s = 2s.  The point at
infinity (the lowest-weight pole of the stereographic chart) is excluded
from the evaluation domain; every sampling grid in this package avoids it.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .numerics import binom, check_finite


@dataclass(frozen=True)
class SpinState:
    """Coefficients a_{n-s} (index n = 0..2s) of a spin-s signal."""

    two_s: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.two_s < 0:
            raise ValueError("two_s must be >= 0")
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if coeffs.shape != (self.two_s + 1,):
            raise ValueError(
                "expected %d coefficients, got shape %s"
                % (self.two_s + 1, coeffs.shape)
            )
        check_finite(coeffs, "coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def dim(self):
        return self.two_s + 1

    def norm(self):
        return float(np.linalg.norm(self.coeffs))


def norm_factor(two_s, z):
    """(1 + |z|^2)^{-s}, computed through log1p for stability at large |z|."""
    z = np.asarray(z, dtype=complex)
    return np.exp(-0.5 * two_s * np.log1p(np.abs(z) ** 2))


def upsilon(two_s, n, z):
    """Monomial component sqrt(C(2s, n)) conj(z)^n of the coherent state."""
    if not 0 <= n <= two_s:
        raise IndexError("component index %d outside 0..%d" % (n, two_s))
    check_finite(z, "z")
    return math.sqrt(binom(two_s, n)) * np.conj(z) ** n


def majorana_eval(state, z):
    """Evaluate the spin state's Majorana function at z (scalar or array)."""
    check_finite(z, "z")
    zc = np.conj(np.asarray(z, dtype=complex))
    weights = np.array(
        [math.sqrt(binom(state.two_s, n)) for n in range(state.two_s + 1)]
    )
    # Horner in conj(z); cheap at desk scale and accurate.
    acc = np.zeros_like(zc)
    for w, a in zip(weights[::-1], state.coeffs[::-1]):
        acc = acc * zc + w * a
    return norm_factor(state.two_s, z) * acc


def cs_overlap(two_s, z, w):
    """Overlap <z|w> of two normalized spin-s coherent states.

    Equals (1 + w conj(z))^{2s} / ((1+|z|^2)^s (1+|w|^2)^s); unimodular on
    the diagonal and bounded by 1 in magnitude.
    """
    check_finite(z, "z")
    check_finite(w, "w")
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return (1 + w * np.conj(z)) ** two_s * norm_factor(two_s, z) * norm_factor(two_s, w)


def bargmann_kernel(j, theta, phi, z):
    """Closed-form kernel <theta, phi | z> linking the Euler-angle and
    holomorphic pictures for integer spin j.

    Generating-function form: up to the normalizer and the constant
    sqrt((2j)!)/(2^j j!), it is (sin(theta) e^{-i phi} + 2 z cos(theta)
    - z^2 sin(theta) e^{i phi})^j.
    """
    if j < 0:
        raise ValueError("j must be a non-negative integer")
    check_finite(z, "z")
    z = np.asarray(z, dtype=complex)
    pref = math.exp(
        0.5 * math.lgamma(2 * j + 1) - j * math.log(2.0) - math.lgamma(j + 1)
    )
    base = (
        math.sin(theta) * np.exp(-1j * phi)
        + 2 * z * math.cos(theta)
        - z**2 * math.sin(theta) * np.exp(1j * phi)
    )
    return norm_factor(2 * j, z) * pref * base**j


def multi_overlap(J, z, w):
    """Band-limited overlap: the average of the single-spin overlaps for
    integer s = 0..J, summed in closed geometric form away from kappa = 1."""
    if J < 0:
        raise ValueError("J must be >= 0")
    check_finite(z, "z")
    check_finite(w, "w")
    z = complex(z)
    w = complex(w)
    kappa = (1 + w * np.conj(z)) ** 2 / ((1 + abs(z) ** 2) * (1 + abs(w) ** 2))
    if abs(1 - kappa) < 1e-8:
        return sum(kappa**s for s in range(J + 1)) / (J + 1)
    return (1 - kappa ** (J + 1)) / ((J + 1) * (1 - kappa))

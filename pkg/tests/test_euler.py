import math

import numpy as np
import pytest

from spheresample.coherent import SpinState, bargmann_kernel, norm_factor
from spheresample.euler import (
    DeadModesError,
    EulerSamples,
    angular_component,
    bargmann_matrix,
    equator_alias,
    euler_sample_state,
    euler_to_holo,
    holo_to_euler,
    omega_eigens,
    sph_harm,
    wigner_d_m0,
)
from spheresample.numerics import binom, roots_of_unity
from spheresample.singlespin import sample_state

from oracles import rotation_coefficient_series


def random_state(rng, j):
    return SpinState(
        2 * j, rng.standard_normal(2 * j + 1) + 1j * rng.standard_normal(2 * j + 1)
    )


def test_wigner_d_spin_one_table():
    theta = 0.7
    assert wigner_d_m0(1, 1, theta) == pytest.approx(-math.sin(theta) / math.sqrt(2))
    assert wigner_d_m0(1, 0, theta) == pytest.approx(math.cos(theta))
    assert wigner_d_m0(1, -1, theta) == pytest.approx(math.sin(theta) / math.sqrt(2))


def test_wigner_d_spin_two_values():
    theta = 1.1
    assert wigner_d_m0(2, 0, theta) == pytest.approx(
        0.5 * (3 * math.cos(theta) ** 2 - 1)
    )
    assert wigner_d_m0(2, 2, theta) == pytest.approx(
        math.sqrt(3.0 / 8.0) * math.sin(theta) ** 2
    )


def test_wigner_d_against_rotation_matrix_oracle():
    for j in (1, 2, 3, 5):
        for theta in (0.3, 1.0, 2.2):
            column = rotation_coefficient_series(j, theta)
            for m in range(-j, j + 1):
                assert wigner_d_m0(j, m, theta) == pytest.approx(
                    column[m + j], abs=1e-12
                )


def test_wigner_d_normalization():
    for j in (1, 4):
        total = sum(wigner_d_m0(j, m, 0.9) ** 2 for m in range(-j, j + 1))
        assert total == pytest.approx(1.0)
    with pytest.raises(ValueError):
        wigner_d_m0(2, 3, 0.5)


def test_sph_harm_low_order_closed_forms():
    theta, phi = 0.8, 2.1
    assert sph_harm(0, 0, theta, phi) == pytest.approx(0.5 / math.sqrt(math.pi))
    assert sph_harm(1, 0, theta, phi) == pytest.approx(
        math.sqrt(3 / (4 * math.pi)) * math.cos(theta)
    )
    expected = -math.sqrt(3 / (8 * math.pi)) * math.sin(theta) * np.exp(1j * phi)
    assert sph_harm(1, 1, theta, phi) == pytest.approx(expected)


def test_bargmann_kernel_equals_angular_series():
    # closed generating form vs the explicit sum over magnetic numbers
    for j in (1, 2, 3):
        for theta in np.linspace(0.3, 2.8, 5):
            for phi in np.linspace(0.0, 5.0, 5):
                for z in (0.4 - 0.9j, 1.2 + 0.1j, -0.3 + 0.2j, 0.05j, 2.0):
                    series = norm_factor(2 * j, z) * sum(
                        angular_component(j, n - j, theta, phi)
                        * math.sqrt(binom(2 * j, n))
                        * z**n
                        for n in range(2 * j + 1)
                    )
                    closed = bargmann_kernel(j, theta, phi, z)
                    assert closed == pytest.approx(series, abs=1e-12)


def test_bargmann_matrix_entries():
    # K[k, l] is the kernel at azimuth phi_k = -2 pi k/N and node z_l.
    j, theta0 = 2, 0.9
    n = 2 * j + 1
    k_mat = bargmann_matrix(j, theta0)
    points = roots_of_unity(n)
    for k in range(n):
        phi_k = -2 * math.pi * k / n
        for l in range(n):
            assert k_mat[k, l] == pytest.approx(
                complex(bargmann_kernel(j, theta0, phi_k, points[l])), abs=1e-12
            )


def test_bargmann_matrix_requires_critical_size():
    with pytest.raises(ValueError):
        bargmann_matrix(2, 0.9, n=7)


def test_omega_eigens_diagonalize_the_circulant_factor():
    from spheresample.euler import lambda_diagonal, q_sequence
    from spheresample.circulant import CirculantKernel

    j, theta0 = 3, 1.0
    n = 2 * j + 1
    q = CirculantKernel(q_sequence(j, theta0, n))
    np.testing.assert_allclose(omega_eigens(j, theta0), q.eigenvalues, atol=1e-12)
    # K = Lambda Q entrywise
    rebuilt = lambda_diagonal(j, theta0, n)[:, None] * q.dense()
    np.testing.assert_allclose(bargmann_matrix(j, theta0), rebuilt, atol=1e-13)


def test_omega_equator_pattern():
    # theta0 = pi/2: omega_k = N (-1)^{k/2} C(j, k/2) for even k, 0 for odd.
    for j in (1, 2, 4):
        n = 2 * j + 1
        omega = omega_eigens(j, math.pi / 2)
        for k in range(n):
            if k % 2 == 0:
                expected = n * (-1) ** (k // 2) * binom(j, k // 2)
                assert omega[k] == pytest.approx(expected, abs=1e-9 * n)
            else:
                assert abs(omega[k]) <= 1e-12 * n


def test_holo_to_euler_matches_direct_sampling():
    rng = np.random.default_rng(81)
    for j in (1, 2, 4):
        for theta0 in (math.pi / 6, math.pi / 3):
            state = random_state(rng, j)
            holo = sample_state(state, 2 * j + 1)
            via_matrix = holo_to_euler(holo, theta0)
            direct = euler_sample_state(state, theta0)
            np.testing.assert_allclose(
                via_matrix.values, direct.values, atol=1e-11
            )


def test_picture_round_trip():
    rng = np.random.default_rng(82)
    for j in (1, 3, 4):
        for theta0 in (math.pi / 6, math.pi / 4, math.pi / 3):
            state = random_state(rng, j)
            holo = sample_state(state, 2 * j + 1)
            back = euler_to_holo(holo_to_euler(holo, theta0))
            np.testing.assert_allclose(back.values, holo.values, atol=1e-9)


def test_conversion_requires_critical_sampling():
    rng = np.random.default_rng(83)
    state = random_state(rng, 2)
    with pytest.raises(ValueError):
        holo_to_euler(sample_state(state, 7), 0.9)
    with pytest.raises(ValueError):
        holo_to_euler(sample_state(SpinState(3, np.ones(4)), 4), 0.9)


def test_equator_conversion_raises_with_mode_listing():
    rng = np.random.default_rng(84)
    j = 2
    state = random_state(rng, j)
    phi_samples = euler_sample_state(state, math.pi / 2)
    with pytest.raises(DeadModesError) as info:
        euler_to_holo(phi_samples)
    assert info.value.modes == [1, 3]


def test_equator_alias_recovers_even_coefficients():
    rng = np.random.default_rng(85)
    for j in (1, 2, 4):
        state = random_state(rng, j)
        phi_samples = euler_sample_state(state, math.pi / 2)
        recovered, dropped = equator_alias(phi_samples)
        assert dropped
        even = np.arange(0, 2 * j + 1, 2)
        np.testing.assert_allclose(
            recovered.coeffs[even], state.coeffs[even], atol=1e-10
        )
        np.testing.assert_array_equal(recovered.coeffs[1::2], 0)


def test_equator_alias_requires_the_equator():
    samples = EulerSamples(1, 0.7, np.zeros(3))
    with pytest.raises(ValueError):
        equator_alias(samples)


def test_euler_samples_validation():
    with pytest.raises(ValueError):
        EulerSamples(1, 0.0, np.zeros(3))
    with pytest.raises(ValueError):
        EulerSamples(1, 0.5, np.zeros(4))

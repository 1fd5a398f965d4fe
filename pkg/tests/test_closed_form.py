import math
import numpy as np
import pytest
from src.closed_form.bounds import (
    energy_bounds,
    energy_cauchy_schwarz_bound,
    general_energy_bounds,
    spectral_radius_bounds,
    trace_square_bound,
    unicyclic_extremes,
    unicyclic_min_spectral_radius,
    unicyclic_stated_min,
)
from src.closed_form.unicyclic import (
    cycle_spectrum,
    rho2_positive,
    rho12_square_sum,
    sign_polynomial,
    stated_rho2_positive,
    unicyclic_block_matrix,
    unicyclic_energy_closed,
    unicyclic_energy_profile,
    unicyclic_rho12,
    unicyclic_spectral_radius,
    unicyclic_spectrum_closed,
    unicyclic_spectrum_parts,
    unicyclic_trace_square,
)
from src.core.exceptions import ParameterError


def test_u53_spectrum():
    values = unicyclic_spectrum_closed(5, 3).eigenvalues
    root = math.sqrt(33)
    assert values == pytest.approx([(5 + root) / 2, (5 - root) / 2, -1, -2, -2])


def test_cycle_spectrum():
    assert unicyclic_spectrum_closed(4, 4).eigenvalues == [6.0, -2.0, -2.0, -2.0]
    assert cycle_spectrum(7).eigenvalues == [12.0] + [-2.0] * 6
    with pytest.raises(ParameterError):
        cycle_spectrum(2)


def test_spectrum_parts():
    parts = unicyclic_spectrum_parts(9, 4)
    assert parts.minus_two_multiplicity == 3
    assert parts.minus_one_multiplicity == 4
    assert parts.to_spectrum().order == 9


@pytest.mark.parametrize("n, k", [(5, 2), (5, 5), (3, 3), (6, 7)])
def test_rho12_requires_tree_part(n, k):
    with pytest.raises(ParameterError):
        unicyclic_rho12(n, k)


@pytest.mark.parametrize("n, k", [(5, 2), (5, 6)])
def test_closed_forms_reject_out_of_range(n, k):
    with pytest.raises(ParameterError):
        unicyclic_spectrum_closed(n, k)
    with pytest.raises(ParameterError):
        unicyclic_energy_closed(n, k)


def test_energy_spot_values():
    assert unicyclic_energy_closed(10, 3) == pytest.approx(20.0)
    assert unicyclic_energy_closed(4, 4) == pytest.approx(12.0)
    assert unicyclic_energy_closed(5, 3) == pytest.approx(5 + math.sqrt(33))


def test_rho2_boundary_at_seven():
    for k in (3, 4):
        rho2 = unicyclic_rho12(7, k)[1]
        assert abs(rho2) < 1e-9
        assert sign_polynomial(7, k) == 0
        assert not rho2_positive(7, k)
        assert stated_rho2_positive(7, k)


def test_rho2_sign_matches_polynomial():
    for n in range(4, 40):
        for k in range(3, n):
            rho2 = unicyclic_rho12(n, k)[1]
            if sign_polynomial(n, k) != 0:
                assert (rho2 > 0) == rho2_positive(n, k)
            if n != 7:
                assert rho2_positive(n, k) == stated_rho2_positive(n, k)


def test_energy_branches_agree_at_zero_rho2():
    for k in (3, 4):
        rho1, _ = unicyclic_rho12(7, k)
        assert 2 * rho1 == pytest.approx(2 * (7 + k - 3))


def test_energy_strictly_increasing_in_k():
    for n in range(4, 61):
        energies = [energy for _, energy in unicyclic_energy_profile(n)]
        assert all(b - a > 1e-9 for a, b in zip(energies, energies[1:]))


def test_maximum_only_at_cycle():
    for n in range(3, 61):
        profile = unicyclic_energy_profile(n)
        assert profile[-1][0] == n
        assert profile[-1][1] == pytest.approx(4 * (n - 1))
        assert all(energy < 4 * (n - 1) - 1e-7 for k, energy in profile[:-1])


def test_stated_minimum_gap_from_eight():
    for n in range(3, 8):
        assert min(e for _, e in unicyclic_energy_profile(n)) == pytest.approx(unicyclic_stated_min(n))
    for n in range(8, 61):
        actual = min(e for _, e in unicyclic_energy_profile(n))
        assert actual == pytest.approx(2 * n)
        assert actual - unicyclic_stated_min(n) > 1e-6


def test_extremes_model():
    extremes = unicyclic_extremes(10)
    assert extremes.max == 36.0
    assert extremes.argmin_k == 3
    assert extremes.argmax_is_cycle
    assert extremes.stated_min == pytest.approx(10 + math.sqrt(88))
    with pytest.raises(ParameterError):
        unicyclic_extremes(2)


def test_general_bounds():
    assert general_energy_bounds(5) == (8.0, 32.0)
    assert spectral_radius_bounds(5) == (4.0, 16.0)
    assert general_energy_bounds(1) == (0.0, 0.0)
    bounds = energy_bounds(6)
    assert bounds.unicyclic_upper == 20.0
    assert bounds.unicyclic_stated_lower == pytest.approx(unicyclic_stated_min(6))
    with pytest.raises(ParameterError):
        general_energy_bounds(0)


@pytest.mark.parametrize("n, k", [(5, 3), (8, 5), (12, 12), (20, 3)])
def test_block_matrix_consistency(n, k):
    block = unicyclic_block_matrix(n, k)
    assert int(np.sum(block * block)) == unicyclic_trace_square(n, k)
    values = np.linalg.eigvalsh(block.astype(float))
    assert sorted(values, reverse=True) == pytest.approx(unicyclic_spectrum_closed(n, k).eigenvalues, abs=1e-9)
    assert values.max() == pytest.approx(unicyclic_spectral_radius(n, k))


def test_rho_square_sum():
    for n in range(4, 201):
        for k in range(3, n):
            rho1, rho2 = unicyclic_rho12(n, k)
            trace = 4 * (k * k - k) + (n * n - k * k - (n - k))
            assert unicyclic_trace_square(n, k) == trace
            assert rho12_square_sum(n, k) == trace - 4 * (k - 1) - (n - k - 1)
            assert rho1 ** 2 + rho2 ** 2 == pytest.approx(rho12_square_sum(n, k), rel=1e-12)


def test_rho12_sum_and_product():
    for n in range(4, 201):
        for k in range(3, n):
            rho1, rho2 = unicyclic_rho12(n, k)
            assert rho1 + rho2 == pytest.approx(n + k - 3, rel=1e-12)
            assert rho1 * rho2 == pytest.approx(-sign_polynomial(n, k), abs=1e-9 * n * n)


def test_spectral_radius_minimum_at_triangle():
    for n in range(4, 201):
        radii = [unicyclic_spectral_radius(n, k) for k in range(3, n + 1)]
        assert radii[0] == pytest.approx(unicyclic_min_spectral_radius(n))
        assert all(b > a for a, b in zip(radii, radii[1:]))
        assert radii[-1] == 2 * (n - 1)


def test_cauchy_schwarz_bound_dominates_closed_energy():
    for n in range(4, 25):
        for k in range(3, n + 1):
            rho = unicyclic_spectral_radius(n, k)
            bound = energy_cauchy_schwarz_bound(n, rho, unicyclic_trace_square(n, k))
            assert unicyclic_energy_closed(n, k) <= bound + 1e-9
        assert unicyclic_trace_square(n, n) == trace_square_bound(n, 2)

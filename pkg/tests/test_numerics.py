import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from symkern.errors import SingularMatrixError
from symkern.numerics import (
    Bracket,
    bisect,
    find_roots_scan_bisect,
    gauss_legendre_panels,
    golden_section_max,
    integrate_panels,
    sinc_pi,
    solve_dense,
    symmetric_extreme_eigen,
)


class TestSincPi:
    def test_removable_singularity(self):
        assert sinc_pi(0.0) == 1.0

    def test_half(self):
        assert_allclose(sinc_pi(0.5), 2.0 / np.pi, rtol=1e-15)

    def test_series_matches_direct_at_threshold(self):
        # series branch at 1e-4 vs the direct formula evaluated explicitly
        x = 1e-4
        direct = np.sin(np.pi * x) / (np.pi * x)
        assert_allclose(sinc_pi(x), direct, rtol=1e-14)

    def test_complex_and_array(self):
        z = np.array([1e-5 + 1e-5j, 0.3 - 0.2j, 2.0])
        vals = sinc_pi(z)
        assert vals.shape == z.shape
        assert_allclose(vals[1], np.sin(np.pi * z[1]) / (np.pi * z[1]), rtol=1e-14)

    @given(st.floats(min_value=2e-4, max_value=5e-3))
    @settings(max_examples=50, deadline=None)
    def test_series_direct_crossover(self, x):
        series = 1 - (np.pi * x) ** 2 / 6 + (np.pi * x) ** 4 / 120 - (np.pi * x) ** 6 / 5040
        direct = np.sin(np.pi * x) / (np.pi * x)
        assert abs(series - direct) <= 1e-14
        assert abs(sinc_pi(x) - direct) <= 1e-14


class TestPanels:
    def test_polynomial_exactness(self):
        panels = gauss_legendre_panels(0.0, 1.0, order=4, panels_per_segment=1)
        assert_allclose(integrate_panels(lambda x: x**2, panels), 1.0 / 3.0, atol=1e-15)

    def test_breakpoint_splits_kink(self):
        panels = gauss_legendre_panels(-1.0, 1.0, breakpoints=(0.0,), order=6)
        assert_allclose(integrate_panels(np.abs, panels), 1.0, atol=1e-15)

    def test_oscillatory_self_convergence(self):
        f = lambda x: sinc_pi(2.0 * x)
        coarse = integrate_panels(f, gauss_legendre_panels(-5, 5, order=16, panels_per_segment=8))
        fine = integrate_panels(f, gauss_legendre_panels(-5, 5, order=16, panels_per_segment=32))
        assert abs(coarse - fine) <= 1e-12

    def test_doubling_changes_little(self):
        f = lambda x: np.exp(-(x**2)) * np.cos(3 * x)
        a = integrate_panels(f, gauss_legendre_panels(-4, 4, order=16, panels_per_segment=8))
        b = integrate_panels(f, gauss_legendre_panels(-4, 4, order=16, panels_per_segment=16))
        assert abs(a - b) <= 1e-10 * abs(b)

    def test_panel_invariants(self):
        for panel in gauss_legendre_panels(0.0, 2.0, breakpoints=(0.7,), order=8):
            assert panel.lo < panel.hi
            assert np.all(np.diff(panel.nodes) > 0)
            assert np.all(panel.weights > 0)
            assert abs(panel.weights.sum() - (panel.hi - panel.lo)) <= 1e-12

    def test_rejects_nonfinite_bounds(self):
        with pytest.raises(ValueError):
            gauss_legendre_panels(0.0, np.inf)


class TestRootFinding:
    def test_cosine_zeros(self):
        roots = find_roots_scan_bisect(lambda x: np.cos(2 * np.pi * x), 0.0, 1.0, 0.01, 1e-12)
        assert_allclose(roots, [0.25, 0.75], atol=1e-10)

    def test_sqrt_two(self):
        roots = find_roots_scan_bisect(lambda x: x * x - 2.0, 0.0, 2.0, 1e-3, 1e-12)
        assert_allclose(roots, [np.sqrt(2.0)], atol=1e-10)

    def test_no_sign_change_gives_empty(self):
        assert find_roots_scan_bisect(lambda x: 1.0 + x * x, -1.0, 1.0, 0.1) == []

    def test_idempotent_on_refined_bracket(self):
        f = lambda x: np.cos(2 * np.pi * x)
        (root,) = find_roots_scan_bisect(f, 0.2, 0.3, 0.01, 1e-12)
        (again,) = find_roots_scan_bisect(f, root - 1e-4, root + 1e-4, 1e-5, 1e-12)
        assert abs(root - again) <= 1e-12

    def test_vectorized_scan(self):
        f = lambda x: np.cos(2 * np.pi * np.asarray(x))
        roots = find_roots_scan_bisect(f, 0.0, 1.0, 0.01, 1e-12, vectorized=True)
        assert_allclose(roots, [0.25, 0.75], atol=1e-10)

    def test_bracket_validation(self):
        with pytest.raises(ValueError):
            Bracket(0.0, 1.0, 1.0, 2.0)

    def test_bisect_on_bracket(self):
        f = lambda x: x - 0.3
        assert abs(bisect(f, Bracket(0.0, 1.0, -0.3, 0.7), 1e-12) - 0.3) <= 1e-12


def test_golden_section_max():
    t = golden_section_max(lambda x: -((x - 0.37) ** 2), 0.0, 1.0, tol=1e-9)
    assert abs(t - 0.37) <= 1e-6


class TestSolveDense:
    def test_identity(self):
        b = np.array([1.0, 2.0, 3.0])
        assert_allclose(solve_dense(np.eye(3), b), b)

    def test_diagonal(self):
        assert_allclose(solve_dense(np.diag([2.0, 4.0]), np.array([2.0, 4.0])), [1.0, 1.0])

    def test_random_system_residual(self, rng):
        n = 200
        A = rng.normal(size=(n, n)) + n * np.eye(n)
        b = rng.normal(size=n)
        x = solve_dense(A, b)
        assert np.linalg.norm(A @ x - b) <= 1e-10 * np.linalg.norm(b)

    def test_complex_system(self, rng):
        A = rng.normal(size=(40, 40)) + 1j * rng.normal(size=(40, 40)) + 40 * np.eye(40)
        b = rng.normal(size=40) + 1j * rng.normal(size=40)
        x = solve_dense(A, b)
        assert np.linalg.norm(A @ x - b) <= 1e-10 * np.linalg.norm(b)

    def test_singular_signals(self):
        A = np.array([[1.0, 2.0], [2.0, 4.0]])
        with pytest.raises(SingularMatrixError):
            solve_dense(A, np.array([1.0, 1.0]))

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            solve_dense(np.ones((2, 3)), np.ones(2))


class TestSymmetricEigen:
    def test_diagonal(self):
        lo, hi = symmetric_extreme_eigen(np.diag([1.0, -2.0, 3.0]))
        assert (lo, hi) == (-2.0, 3.0)

    def test_offdiagonal(self):
        lo, hi = symmetric_extreme_eigen(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert_allclose([lo, hi], [-1.0, 1.0], atol=1e-14)

    def test_permutation_invariance(self, rng):
        n = 60
        M = rng.normal(size=(n, n))
        M = 0.5 * (M + M.T)
        perm = rng.permutation(n)
        P = np.eye(n)[perm]
        a = symmetric_extreme_eigen(M)
        b = symmetric_extreme_eigen(P @ M @ P.T)
        assert_allclose(a, b, atol=1e-12)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            symmetric_extreme_eigen(np.array([[0.0, 1.0], [0.5, 0.0]]))

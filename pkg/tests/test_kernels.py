import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from symkern.densities import KernelSpace, SymmetryGroup, weighted_inner
from symkern.errors import ClosedFormUnavailableError
from symkern.kernels import (
    EPS_SING,
    SINGULAR_W,
    _kernel_high,
    _kernel_high_direct,
    _kernel_rank_one,
    _kernel_so_odd_via_sp,
    _origin_high,
    _origin_low,
    aux_so_even,
    aux_sp,
    kernel,
    kernel_aux,
    kernel_origin,
    kernel_real,
)
from symkern.numerics import sinc_pi

GROUPS = list(SymmetryGroup)
SP_ORIGIN_DELTA2 = 4 * np.cos(0.5) / (4 - 4 * np.sin(0.5) - 2 * np.cos(0.5)) - 2.0


def space(group, delta):
    return KernelSpace(group, delta)


class TestSpecialValues:
    def test_unitary_origin(self):
        assert_allclose(kernel(space(SymmetryGroup.U, 2.0), 0, 0), 2.0, atol=1e-15)

    def test_unitary_quarter_shift(self):
        # sin(-pi/2) is exact, so K = 4/pi exactly
        val = kernel(space(SymmetryGroup.U, 2.0), 0.125, -0.125)
        assert_allclose(val, 4.0 / np.pi, rtol=1e-15)

    def test_orthogonal_origin(self):
        assert_allclose(kernel(space(SymmetryGroup.O, 2.0), 0, 0), 1.0, atol=1e-14)

    def test_symplectic_origin_delta2(self):
        val = kernel_real(space(SymmetryGroup.SP, 2.0), 0.0, 0.0)
        assert_allclose(val, SP_ORIGIN_DELTA2, rtol=1e-12)
        # cross-check against the non-vanishing limit quoted for this curve
        assert abs(1.0 - 1.0 / (2.0 * val) - 0.9427) <= 1e-4

    def test_so_odd_origin_delta1(self):
        assert_allclose(kernel_real(space(SymmetryGroup.SO_ODD, 1.0), 0.0, 0.0), 2.0 / 3.0, rtol=1e-14)

    def test_closed_form_unavailable(self):
        for g in (SymmetryGroup.SP, SymmetryGroup.SO_EVEN, SymmetryGroup.SO_ODD):
            with pytest.raises(ClosedFormUnavailableError):
                kernel(space(g, 2.5), 0, 0)

    def test_u_o_any_delta(self):
        assert kernel(space(SymmetryGroup.U, 5.0), 0, 0) == pytest.approx(5.0)
        assert kernel_origin(space(SymmetryGroup.O, 5.0)) == pytest.approx(10.0 / 7.0)


class TestKernelOrigin:
    def test_sp_delta1(self):
        assert kernel_origin(space(SymmetryGroup.SP, 1.0)) == pytest.approx(2.0, abs=1e-15)

    def test_so_even_delta2(self):
        expected = 2.0 - 4 * np.cos(0.5) / (4 + 4 * np.sin(0.5) - 2 * np.cos(0.5))
        assert kernel_origin(space(SymmetryGroup.SO_EVEN, 2.0)) == pytest.approx(expected, rel=1e-15)
        assert expected == pytest.approx(1.156685, abs=1e-6)

    @pytest.mark.parametrize("group", [SymmetryGroup.SO_EVEN, SymmetryGroup.SP, SymmetryGroup.SO_ODD])
    def test_branches_agree_at_delta1(self, group):
        assert abs(_origin_low(group, 1.0) - _origin_high(group, 1.0)) <= 1e-12

    @pytest.mark.parametrize("group", GROUPS)
    @pytest.mark.parametrize("delta", [0.5, 1.0, 1.5, 2.0])
    def test_matches_kernel_evaluation(self, group, delta):
        sp = space(group, delta)
        assert abs(kernel_origin(sp) - kernel_real(sp, 0.0, 0.0)) <= 1e-10


class TestAuxiliary:
    def test_tau_at_delta2(self):
        aux = kernel_aux(2.0, even=True)
        assert_allclose(aux.tau, 1.0 + 1j * np.exp(0.5j), rtol=1e-15)

    def test_c_vanishes_at_origin(self):
        aux = kernel_aux(2.0, even=True)
        assert abs(aux.C(0.0)) <= 1e-15

    @pytest.mark.parametrize("even", [True, False])
    @pytest.mark.parametrize("delta", [1.25, 1.5, 2.0])
    @pytest.mark.parametrize("w", [0.3, 0.2 + 0.1j, 1j])
    def test_system_residual(self, even, delta, w):
        aux = kernel_aux(delta, even)
        A, B, D = aux.coefficients(w)
        sign = 1.0 if even else -1.0
        half = sign * (2 - delta) / 2.0
        r1 = aux.a1 * A + np.conj(aux.a1) * B + half * D - aux.E(w)
        r2 = aux.b1 * A + np.conj(aux.b1) * B + half * D - np.conj(aux.E(np.conj(w)))
        r3 = aux.tau * A + np.conj(aux.tau) * B - 2 * D - aux.F(w)
        assert max(abs(r1), abs(r2), abs(r3)) <= 1e-12

    @pytest.mark.parametrize("even", [True, False])
    @pytest.mark.parametrize("delta", [1.25, 1.5, 1.75, 2.0])
    def test_printed_forms_match_solved_system(self, even, delta, rng):
        # defense in depth: the theorem's solved coefficients against the
        # re-solved linear system, at random complex w
        aux = kernel_aux(delta, even)
        for _ in range(10):
            w = complex(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5))
            got = np.array(aux.coefficients(w))
            expected = np.array(aux.coefficients_closed(w))
            assert np.max(np.abs(got - expected)) <= 1e-12

    def test_aux_value_dicts(self):
        vals = aux_so_even(1.5, 0.3)
        assert set(vals) == {"tau", "a", "b", "C", "E", "F", "G", "A", "B", "D"}
        vals_sp = aux_sp(1.5, 0.3)
        assert vals_sp["tau"] != vals["tau"]

    def test_degenerate_denominator_guard(self):
        aux = kernel_aux(1.3, even=True)
        assert abs(np.conj(aux.a) * aux.b - aux.a * np.conj(aux.b)) > 0


class TestKernelProperties:
    @pytest.mark.parametrize("group", GROUPS)
    @pytest.mark.parametrize("delta", [0.5, 1.0, 1.3, 1.7, 2.0])
    def test_positive_on_diagonal(self, group, delta):
        sp = space(group, delta)
        for t in np.linspace(-3, 3, 13):
            assert kernel_real(sp, float(t), float(t)) > 0.0

    @given(
        st.floats(min_value=-2, max_value=2),
        st.floats(min_value=-2, max_value=2),
    )
    @settings(max_examples=40, deadline=None)
    def test_parity_real_pairs(self, w, z):
        sp = space(SymmetryGroup.SP, 1.6)
        a = kernel(sp, w, z)
        b = kernel(sp, -w, -z)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))

    @pytest.mark.parametrize("group", GROUPS)
    def test_hermitian_and_real_entire(self, group, rng):
        sp = space(group, 1.7)
        for _ in range(15):
            w = complex(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5))
            z = complex(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5))
            kwz = kernel(sp, w, z)
            scale = max(1.0, abs(kwz))
            assert abs(kernel(sp, z, w) - np.conj(kwz)) <= 1e-12 * scale
            assert abs(np.conj(kernel(sp, np.conj(w), np.conj(z))) - kwz) <= 1e-12 * scale

    @pytest.mark.parametrize("group", [SymmetryGroup.SP, SymmetryGroup.SO_EVEN, SymmetryGroup.SO_ODD])
    def test_branch_continuity_at_delta1(self, group):
        lo = space(group, 1.0)
        hi = space(group, 1.0 + 1e-8)
        for w in (0.0, 0.4, -1.0):
            for z in (0.0, 0.7, 1.0):
                assert abs(kernel(hi, w, z) - kernel(lo, w, z)) <= 1e-5

    @pytest.mark.parametrize("delta", [0.4, 0.7, 1.0])
    def test_so_odd_composition_matches_low_branch(self, delta):
        # Theorem statement: the Sp composition is valid for every delta,
        # so below 1 it must reproduce the rank-one closed form
        for w in (0.0, 0.3, -0.8):
            z = np.linspace(-1, 1, 7)
            via_sp = _kernel_so_odd_via_sp(delta, complex(w), z.astype(complex))
            direct = _kernel_rank_one(delta, complex(w), z.astype(complex), -1.0 / (2.0 + delta))
            assert np.max(np.abs(via_sp - direct)) <= 1e-10

    def test_vectorized_matches_scalar(self):
        sp = space(SymmetryGroup.SO_EVEN, 1.5)
        zs = np.array([0.1 + 0.2j, -0.4, 1.3 - 0.1j])
        batch = kernel(sp, 0.3 + 0.1j, zs)
        singles = np.array([kernel(sp, 0.3 + 0.1j, z) for z in zs])
        assert_allclose(batch, singles, rtol=1e-15)

    def test_reproducing_identity_truncated(self):
        # <F, K(w,.)>_W = F(w) for a band-limited sinc shift, tail-limited
        for group in (SymmetryGroup.U, SymmetryGroup.SO_ODD):
            sp = space(group, 2.0)
            F = lambda x: sinc_pi(2.0 * (np.asarray(x) - 0.3))
            Kw = lambda x: kernel(sp, 0.45, x)
            got = weighted_inner(F, Kw, group, X=400.0)
            assert abs(got - sinc_pi(2.0 * (0.45 - 0.3))) <= 2e-3


class TestRemovableSingularities:
    def test_z_axis_special_points(self):
        # denominators 2 pi i z +- i/2 and pi z vanish at these z
        sp = space(SymmetryGroup.SO_EVEN, 1.6)
        for z in (SINGULAR_W, -SINGULAR_W, 0.0):
            val = kernel(sp, 0.3, z)
            near = kernel(sp, 0.3, z + 1e-7)
            assert np.isfinite(val.real) and abs(val - near) <= 1e-5

    @pytest.mark.parametrize("even", [True, False])
    def test_extrapolation_matches_direct_outside_threshold(self, even):
        # at |w - pole| just beyond the switch the direct formula is still
        # accurate; the interpolating polynomial must agree closely
        delta = 1.7
        z = np.array([0.3 + 0.0j])
        w = SINGULAR_W + 0.9 * EPS_SING
        direct = _kernel_high_direct(delta, complex(w), z, even)[0]
        offsets = np.array([-2.0, -1.0, 1.0, 2.0]) * EPS_SING
        xi = w - SINGULAR_W
        interp = 0.0
        for j, off in enumerate(offsets):
            term = _kernel_high_direct(delta, complex(SINGULAR_W + off), z, even)[0]
            lagr = 1.0
            for m, other in enumerate(offsets):
                if m != j:
                    lagr *= (xi - other) / (off - other)
            interp += lagr * term
        assert abs(interp - direct) <= 1e-9

    def test_kernel_smooth_through_pole(self):
        # extrapolated center vs direct values at +-1e-6 around the pole;
        # dK/dw is O(1) here so agreement is at the 1e-5 level
        sp = space(SymmetryGroup.SO_EVEN, 1.7)
        center = kernel(sp, SINGULAR_W, 0.3)
        for off in (1e-6, -1e-6):
            assert abs(kernel(sp, SINGULAR_W + off, 0.3) - center) <= 1e-5

    def test_exact_pole_evaluates_finite(self):
        for even, group in ((True, SymmetryGroup.SO_EVEN), (False, SymmetryGroup.SP)):
            sp = space(group, 1.5)
            val = kernel(sp, SINGULAR_W, 0.25)
            assert np.isfinite(val.real) and np.isfinite(val.imag)
            # independent check: value continues the nearby direct samples
            nearby = _kernel_high(1.5, SINGULAR_W + 5 * EPS_SING, np.array([0.25 + 0j]), even)[0]
            assert abs(val - nearby) <= 0.05

"""Closed-form reproducing kernels K(w, z) for the five symmetry spaces.

The unitary and orthogonal kernels are sinc expressions valid for every
delta > 0.  For Sp / SO(even) / SO(odd) with delta <= 1 the kernel is a
rank-one correction of the unitary one; for 1 < delta <= 2 it is the
four-line expression built from the auxiliary coefficients A(w), B(w),
C(w), D(w).  Every removable singularity in z is eliminated algebraically
(sine-difference factorizations through sinc_pi); the removable points
w = +-1/(4*pi), where the auxiliary coefficients have genuine poles that
cancel in the total, are handled by 4-point polynomial extrapolation
across the pole.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .densities import KernelSpace, SymmetryGroup
from .errors import ClosedFormUnavailableError
from .numerics import sinc_pi, solve_dense

PI = np.pi

#: the two removable singular points of the auxiliary coefficients
SINGULAR_W = 1.0 / (4.0 * PI)

#: extrapolate the kernel when w is within this distance of +-1/(4*pi)
EPS_SING = 1e-4


@dataclass(frozen=True)
class KernelAux:
    """Constants and coefficient functions for the 1 < delta <= 2 kernels.

    ``even=True`` carries the even-orthogonal sign pattern, ``even=False``
    the symplectic one.  The intermediate constants a1, b1 of the linear
    system are kept alongside the reduced a, b of the printed closed forms.
    """

    delta: float
    even: bool
    tau: complex
    a1: complex
    b1: complex
    a: complex
    b: complex

    def C(self, w):
        s = -1.0 if self.even else 1.0
        return (-16 * PI**2 * w**2 + s * 4j * PI * w * np.exp(2j * PI * w)) / (
            1 - 16 * PI**2 * w**2
        )

    def F(self, w):
        s = -1.0 if self.even else 1.0
        d = self.delta
        return (2 * np.cos(PI * (2 - d) * w) + s * 8 * PI * w * np.sin(PI * d * w)) / (
            1 - 16 * PI**2 * w**2
        )

    def E(self, w):
        s = 1.0 if self.even else -1.0
        d = self.delta
        den = 1 - 16 * PI**2 * w**2
        head = (
            2 * np.cos(PI * d * w)
            + s * 4j * PI * w * np.exp(-PI * d * 1j * w)
            - np.exp(PI * (2 - d) * 1j * w)
        ) / den
        # sin(pi(2-d)w)/(2 pi w) evaluated as ((2-d)/2) sinc_pi((2-d)w)
        tail = ((2 - d) / 2.0) * sinc_pi((2 - d) * w) / den
        return head - s * tail

    def G(self, w):
        s = 1.0 if self.even else -1.0
        return self.E(w) + s * ((2 - self.delta) / 4.0) * self.F(w)

    def coefficients(self, w: complex) -> tuple[complex, complex, complex]:
        """A(w), B(w), D(w) from the 3x3 linear system (production path)."""
        s = 1.0 if self.even else -1.0
        half = s * (2 - self.delta) / 2.0
        M = np.array(
            [
                [self.a1, np.conj(self.a1), half],
                [self.b1, np.conj(self.b1), half],
                [self.tau, np.conj(self.tau), -2.0],
            ],
            dtype=complex,
        )
        rhs = np.array(
            [self.E(w), np.conj(self.E(np.conj(w))), self.F(w)], dtype=complex
        )
        A, B, D = solve_dense(M, rhs)
        return complex(A), complex(B), complex(D)

    def coefficients_closed(self, w: complex) -> tuple[complex, complex, complex]:
        """A(w), B(w), D(w) from the printed closed forms (cross-check path)."""
        G = self.G(w)
        Gc = np.conj(self.G(np.conj(w)))
        den = np.conj(self.a) * self.b - self.a * np.conj(self.b)
        A = (np.conj(self.a) * Gc - np.conj(self.b) * G) / den
        B = (self.b * G - self.a * Gc) / den
        D = 0.5 * (self.tau * A + np.conj(self.tau) * B - self.F(w))
        return complex(A), complex(B), complex(D)


@functools.lru_cache(maxsize=64)
def kernel_aux(delta: float, even: bool) -> KernelAux:
    """Build the auxiliary constants for 1 < delta <= 2."""
    if not 1.0 < delta <= 2.0:
        raise ValueError("auxiliary kernel data requires 1 < delta <= 2")
    e1 = np.exp((2 - delta) * 1j / 4)  # e^{(2-delta)i/4}
    e2 = np.exp(delta * 1j / 4)  # e^{delta i/4}
    if even:
        tau = e1 + 1j * e2
        a1 = e2 + 1j * e1 - 1j * e2
        b1 = e2 + 1j * e1 - e1
        a = a1 + ((2 - delta) / 4.0) * tau
        b = b1 + ((2 - delta) / 4.0) * tau
    else:
        tau = e1 - 1j * e2
        a1 = e2 - 1j * e1 + 1j * e2
        b1 = e2 - 1j * e1 - e1
        a = a1 - ((2 - delta) / 4.0) * tau
        b = b1 - ((2 - delta) / 4.0) * tau
    if abs(np.conj(a) * b - a * np.conj(b)) == 0.0:
        raise ValueError("degenerate auxiliary system: conj(a) b - a conj(b) = 0")
    return KernelAux(delta, even, complex(tau), complex(a1), complex(b1), complex(a), complex(b))


def aux_so_even(delta: float, w: complex) -> dict:
    """Auxiliary values of the even-orthogonal kernel at ``w``."""
    return _aux_values(delta, complex(w), even=True)


def aux_sp(delta: float, w: complex) -> dict:
    """Auxiliary values of the symplectic kernel at ``w``."""
    return _aux_values(delta, complex(w), even=False)


def _aux_values(delta, w, even):
    aux = kernel_aux(delta, even)
    A, B, D = aux.coefficients(w)
    return {
        "tau": aux.tau,
        "a": aux.a,
        "b": aux.b,
        "C": complex(aux.C(w)),
        "E": complex(aux.E(w)),
        "F": complex(aux.F(w)),
        "G": complex(aux.G(w)),
        "A": A,
        "B": B,
        "D": D,
    }


def _kernel_u(delta, w, z):
    u = z - np.conj(w)
    return delta * sinc_pi(delta * u)


def _kernel_rank_one(delta, w, z, coeff):
    # K_U plus coeff * (sin(pi d z)/(pi z)) (sin(pi d wbar)/(pi wbar))
    return _kernel_u(delta, w, z) + coeff * delta**2 * sinc_pi(delta * z) * sinc_pi(
        delta * np.conj(w)
    )


def _sin_over(c, s):
    # sin(c*s)/s with the removable zero at s = 0 handled by sinc_pi
    return c * PI * sinc_pi(c * s / PI)


def _kernel_high_direct(delta, w, z, even):
    """Four-line kernel of the 1 < delta <= 2 regime, singularities in z
    removed by factoring each exponential difference into a sine."""
    aux = kernel_aux(delta, even)
    A, B, D = aux.coefficients(w)
    wbar = np.conj(w)
    u = z - wbar
    dm1 = delta - 1.0
    s_plus = PI * z + 0.25  # from denominator 2 pi i z + i/2
    s_minus = PI * z - 0.25  # from denominator 2 pi i z - i/2
    fac_plus = 1j * np.exp(2j * PI * z) - 1.0
    fac_minus = -1j * np.exp(2j * PI * z) - 1.0
    if not even:
        fac_plus, fac_minus = fac_minus, fac_plus
    line_a = -np.conj(A) * fac_plus * np.exp(-1j * s_plus) * _sin_over(dm1, s_plus) / PI
    line_b = -np.conj(B) * fac_minus * np.exp(-1j * s_minus) * _sin_over(dm1, s_minus) / PI
    line_c = dm1 * sinc_pi(dm1 * u) * (
        aux.C(wbar) * np.exp(1j * PI * u) + np.conj(aux.C(w)) * np.exp(-1j * PI * u)
    )
    line_d = np.conj(D) * (2 - delta) * sinc_pi((2 - delta) * z)
    line_tail = (2 - delta) * sinc_pi((2 - delta) * u)
    return line_a + line_b + line_c + line_d + line_tail


def _kernel_high(delta, w, z, even):
    """High-branch kernel with 4-point extrapolation across w = +-1/(4*pi).

    The map v -> K(conj(v), z) is entire, so when conj(w) falls within
    EPS_SING of a pole of the coefficient functions the kernel is
    interpolated from four samples at real offsets +-eps, +-2eps around
    the pole (error O(eps^4)).
    """
    for pole in (SINGULAR_W, -SINGULAR_W):
        if abs(w - pole) < EPS_SING:
            offsets = np.array([-2.0, -1.0, 1.0, 2.0]) * EPS_SING
            xi = w.real - pole
            samples = [
                _kernel_high_direct(delta, complex(pole + o, w.imag), z, even)
                for o in offsets
            ]
            out = 0.0
            for j, sample in enumerate(samples):
                lagr = 1.0
                for m in range(4):
                    if m != j:
                        lagr *= (xi - offsets[m]) / (offsets[j] - offsets[m])
                out = out + lagr * sample
            return out
    return _kernel_high_direct(delta, w, z, even)


def _kernel_so_odd_via_sp(delta, w, z):
    # K_Sp(w,z) - K_Sp(w,0) K_Sp(0,z) / (1 + K_Sp(0,0)), valid for any delta
    k00 = np.real(_kernel_sp(delta, 0.0, 0j))
    kw0 = _kernel_sp(delta, w, 0j)
    k0z = _kernel_sp(delta, 0.0, z)
    return _kernel_sp(delta, w, z) - kw0 * k0z / (1.0 + k00)


def _kernel_sp(delta, w, z):
    if delta <= 1.0:
        return _kernel_rank_one(delta, w, z, 1.0 / (2.0 - delta))
    return _kernel_high(delta, w, z, even=False)


def kernel(space: KernelSpace, w: complex, z):
    """Reproducing kernel K(w, z) of ``space``; ``z`` may be an array.

    Raises ClosedFormUnavailableError for Sp/SO(even)/SO(odd) with
    delta > 2 (the Fredholm oracle still covers those numerically).
    """
    if not space.closed_form_available:
        raise ClosedFormUnavailableError(
            f"no closed-form kernel for {space.group.value} with delta = "
            f"{space.delta} (closed forms require delta <= 2)"
        )
    w = complex(w)
    z = np.asarray(z, dtype=complex)
    d = space.delta
    g = space.group
    if g is SymmetryGroup.U:
        out = _kernel_u(d, w, z)
    elif g is SymmetryGroup.O:
        out = _kernel_rank_one(d, w, z, -1.0 / (2.0 + d))
    elif g is SymmetryGroup.SO_EVEN:
        out = (
            _kernel_rank_one(d, w, z, -1.0 / (2.0 + d))
            if d <= 1.0
            else _kernel_high(d, w, z, even=True)
        )
    elif g is SymmetryGroup.SP:
        out = _kernel_sp(d, w, z)
    else:  # SO(odd)
        out = (
            _kernel_rank_one(d, w, z, -1.0 / (2.0 + d))
            if d <= 1.0
            else _kernel_so_odd_via_sp(d, w, z)
        )
    out = np.asarray(out)
    return complex(out[()]) if out.ndim == 0 else out


def kernel_real(space: KernelSpace, t: float, x):
    """K(t, x) for real t, x, returned as real (sections are real entire)."""
    return np.real(kernel(space, t, x))


def _origin_low(group: SymmetryGroup, delta: float) -> float:
    if group is SymmetryGroup.U:
        return delta
    if group is SymmetryGroup.SP:
        return 2 * delta / (2 - delta)
    return 2 * delta / (2 + delta)  # O, SO(even), SO(odd)


def _origin_high(group: SymmetryGroup, delta: float) -> float:
    c = np.cos((delta - 1) / 2.0)
    s = np.sin((delta - 1) / 2.0)
    if group is SymmetryGroup.SO_EVEN:
        return 2.0 - 4 * c / (4 + 4 * s - delta * c)
    if group is SymmetryGroup.SP:
        return 4 * c / (4 - 4 * s - (4 - delta) * c) - 2.0
    if group is SymmetryGroup.SO_ODD:
        return 2.0 + 4 * c / (4 - 4 * s - (8 - delta) * c)
    return _origin_low(group, delta)  # U and O have a single branch


def kernel_origin(space: KernelSpace) -> float:
    """K(0, 0) from the closed branch formulas (independent of kernel())."""
    if not space.closed_form_available:
        raise ClosedFormUnavailableError(
            f"no origin value for {space.group.value} with delta = {space.delta}"
        )
    if space.group in (SymmetryGroup.U, SymmetryGroup.O) or space.delta <= 1.0:
        return float(_origin_low(space.group, space.delta))
    return float(_origin_high(space.group, space.delta))

"""De Branges structure function and the first-low-lying-zero bound.

From the kernel of the sharp-mapped space, L(w,z) = 2 pi i (conj(w) - z)
K(w,z) and E(z) = L(i,z)/sqrt(L(i,i)) is Hermite-Biehler with companion
functions A = (E + E*)/2 (even) and B = (i/2)(E - E*) (odd).  On the real
axis A is a positive multiple of Re((1 - i x) K(i, x)), whose smallest
positive zero xi_0 bounds the height of the first low-lying zero.  The
associated extremal problem min ||x F|| / ||F|| has value xi_0, attained
by F(z) = K(xi_0, z) + K(xi_0, -z).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .densities import KernelSpace, SymmetryGroup, sharp_group, weighted_inner
from .errors import NoRootFoundError, NumericalError
from .kernels import kernel
from .numerics import find_roots_scan_bisect

PI = np.pi


@dataclass(frozen=True)
class DeBrangesData:
    """E, A, B and L(i,i) for one (sharp-mapped) kernel space."""

    space: KernelSpace  # group already sharp-mapped
    L_ii: float
    E: Callable
    A: Callable
    B: Callable


def build_debranges(group: SymmetryGroup, delta: float) -> DeBrangesData:
    """Construct E(z) = L(i,z)/sqrt(L(i,i)) and its companions A, B."""
    space = KernelSpace(sharp_group(group), delta)
    k_ii = np.real(kernel(space, 1j, 1j))
    if not k_ii > 0:
        raise NumericalError("K(i,i) must be positive")
    L_ii = 4.0 * PI * k_ii  # L(i,i) = 2 pi i (conj(i) - i) K(i,i)

    def E(z):
        z = np.asarray(z, dtype=complex)
        # L(i,z) = 2 pi i (-i - z) K(i,z) = 2 pi (1 - i z) K(i,z)
        return 2.0 * PI * (1.0 - 1j * z) * kernel(space, 1j, z) / np.sqrt(L_ii)

    def Estar(z):
        z = np.asarray(z, dtype=complex)
        return np.conj(E(np.conj(z)))

    A = lambda z: 0.5 * (E(z) + Estar(z))
    B = lambda z: 0.5j * (E(z) - Estar(z))
    return DeBrangesData(space, float(L_ii), E, A, B)


@dataclass(frozen=True)
class FirstZeroResult:
    group: SymmetryGroup
    delta: float
    xi0: float

    def __post_init__(self):
        if not self.xi0 > 0:
            raise ValueError("xi0 must be positive")


def xi0(group: SymmetryGroup, delta: float) -> FirstZeroResult:
    """Smallest positive sign-change zero of x -> Re((1-ix) K(i,x)).

    Scans (0, 2] at step 1e-3 and refines by bisection to 1e-10.  The
    scan bound 2 leaves ample margin over every tabulated value; a missing
    sign change raises NoRootFoundError.
    """
    space = KernelSpace(sharp_group(group), delta)

    def profile(x):
        x = np.asarray(x, dtype=float)
        return np.real((1.0 - 1j * x) * kernel(space, 1j, x))

    roots = find_roots_scan_bisect(profile, 1e-9, 2.0, scan_step=1e-3, tol=1e-10, vectorized=True)
    if not roots:
        raise NoRootFoundError(
            f"no sign change of Re((1-ix)K(i,x)) on (0, 2] for "
            f"{group.value}, delta={delta}"
        )
    return FirstZeroResult(group, delta, float(roots[0]))


def extremal_ratio(
    group: SymmetryGroup, delta: float, F: Callable, X: float = 400.0
) -> float:
    """||x F|| / ||F|| in the sharp-mapped weighted norm, truncated at X.

    The canonical extremizer decays like 1/x^2 so both integrands are
    square-integrable and the truncation tail is O(1/X).
    """
    gs = sharp_group(group)
    xF = lambda x: np.asarray(x) * np.asarray(F(x))
    den = np.real(weighted_inner(F, F, gs, X=X))
    if den <= 0.0:
        raise NumericalError("extremal ratio denominator vanished")
    num = np.real(weighted_inner(xF, xF, gs, X=X))
    return float(np.sqrt(num / den))


def canonical_extremizer(group: SymmetryGroup, delta: float) -> Callable:
    """The ratio extremizer F(z) = K(xi0, z) + K(xi0, -z) (sharp-mapped)."""
    space = KernelSpace(sharp_group(group), delta)
    x0 = xi0(group, delta).xi0

    def F(x):
        x = np.asarray(x, dtype=float)
        return np.real(kernel(space, x0, x)) + np.real(kernel(space, x0, -x))

    return F

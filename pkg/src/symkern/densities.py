"""The five symmetry groups, their densities, and weighted inner products.

Each group G carries a density W_G = ac_part + atom_mass * delta_0 on the
real line and a distributional Fourier transform with a unit Dirac mass
plus a piecewise-constant part supported by [-1, 1].  Dirac atoms are kept
symbolic (a mass coefficient), never approximated by bumps.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NonFiniteIntegrandError
from .numerics import gauss_legendre_panels, integrate_panels, sinc_pi


class SymmetryGroup(enum.Enum):
    U = "u"
    SP = "sp"
    O = "o"
    SO_EVEN = "so-even"
    SO_ODD = "so-odd"

    @classmethod
    def from_name(cls, name: str) -> "SymmetryGroup":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(g.value for g in cls)
            raise ValueError(f"unknown symmetry group {name!r} (expected one of {valid})")


_SHARP = {
    SymmetryGroup.U: SymmetryGroup.U,
    SymmetryGroup.SP: SymmetryGroup.SP,
    SymmetryGroup.SO_EVEN: SymmetryGroup.SO_EVEN,
    SymmetryGroup.O: SymmetryGroup.U,
    SymmetryGroup.SO_ODD: SymmetryGroup.SP,
}

_ATOM = {
    SymmetryGroup.U: 0.0,
    SymmetryGroup.SP: 0.0,
    SymmetryGroup.O: 0.5,
    SymmetryGroup.SO_EVEN: 0.0,
    SymmetryGroup.SO_ODD: 1.0,
}


def sharp_group(group: SymmetryGroup) -> SymmetryGroup:
    """Map O -> U and SO(odd) -> Sp; identity on the other three."""
    return _SHARP[group]


def atom_mass(group: SymmetryGroup) -> float:
    """Coefficient of the Dirac mass at 0 in the density of ``group``."""
    return _ATOM[group]


def density_ac(group: SymmetryGroup, x):
    """Absolutely continuous part of the density at ``x`` (scalar or array)."""
    x = np.asarray(x, dtype=float)
    if group in (SymmetryGroup.U, SymmetryGroup.O):
        out = np.ones_like(x)
    elif group is SymmetryGroup.SO_EVEN:
        out = 1.0 + sinc_pi(2.0 * x)
    else:  # Sp and SO(odd)
        out = 1.0 - sinc_pi(2.0 * x)
    out = np.asarray(out)
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class Density:
    """Density of a symmetry group: even ac part plus a Dirac mass at 0."""

    ac_part: Callable[[np.ndarray], np.ndarray]
    atom_mass: float


@dataclass(frozen=True)
class FourierDensity:
    """Fourier transform of a density: unit Dirac at 0, a constant, and a
    box term supported by [-1, 1]."""

    const_part: float
    box_coeff: float
    atom_mass: float = 1.0

    def ac(self, y):
        y = np.asarray(y, dtype=float)
        out = self.const_part + self.box_coeff * (np.abs(y) <= 1.0)
        return out[()] if out.ndim == 0 else out


_FOURIER = {
    SymmetryGroup.U: FourierDensity(0.0, 0.0),
    SymmetryGroup.SP: FourierDensity(0.0, -0.5),
    SymmetryGroup.O: FourierDensity(0.5, 0.0),
    SymmetryGroup.SO_EVEN: FourierDensity(0.0, 0.5),
    SymmetryGroup.SO_ODD: FourierDensity(1.0, -0.5),
}


def density(group: SymmetryGroup) -> Density:
    return Density(lambda x, g=group: density_ac(g, x), _ATOM[group])


def fourier_density(group: SymmetryGroup) -> FourierDensity:
    return _FOURIER[group]


@dataclass(frozen=True)
class KernelSpace:
    """A (group, delta) pair selecting one weighted Paley-Wiener-type space."""

    group: SymmetryGroup
    delta: float

    def __post_init__(self):
        if not (math.isfinite(self.delta) and self.delta > 0):
            raise ValueError("delta must be positive and finite")

    @property
    def closed_form_available(self) -> bool:
        return self.group in (SymmetryGroup.U, SymmetryGroup.O) or self.delta <= 2.0


def weighted_inner(
    F: Callable,
    H: Callable,
    group: SymmetryGroup,
    X: float = 200.0,
    order: int = 16,
    breakpoints: tuple[float, ...] = (),
) -> complex:
    """Weighted inner product <F, H> against the density of ``group``.

    Integrates F(x) * conj(H(x)) * ac(x) over [-X, X] (the caller is
    responsible for integrands decaying at least like 1/x^2, which leaves
    an O(1/X) truncation tail) and adds atom_mass * F(0) * conj(H(0)).
    Panels are kept at width <= 1 so oscillatory kernel products are
    resolved; a breakpoint at 0 is always inserted.
    """
    bps = {0.0} | {float(b) for b in breakpoints}
    segs = sorted({-X, X} | {b for b in bps if -X < b < X})
    panels = []
    for a, b in zip(segs[:-1], segs[1:]):
        per = max(8, int(math.ceil(b - a)))
        panels.extend(gauss_legendre_panels(a, b, order=order, panels_per_segment=per))

    def integrand(x):
        vals = np.asarray(F(x)) * np.conj(np.asarray(H(x))) * density_ac(group, x)
        if not np.all(np.isfinite(vals)):
            raise NonFiniteIntegrandError("non-finite integrand sample in weighted_inner")
        return vals

    total = integrate_panels(integrand, panels)
    mass = _ATOM[group]
    if mass:
        f0 = complex(np.asarray(F(np.array([0.0])))[0])
        h0 = complex(np.asarray(H(np.array([0.0])))[0])
        total = total + mass * f0 * np.conj(h0)
    return complex(total)


def fourier_pairing(
    group: SymmetryGroup,
    phi_hat: Callable,
    phi_total: float,
    order: int = 16,
    breakpoints: tuple[float, ...] = (),
) -> float:
    """Pair phi_hat against the Fourier density of ``group``.

    ``phi_total`` must be the full integral of phi_hat over the line
    (equivalently phi(0) by Fourier inversion); it pairs with the constant
    component, while the box component is integrated over [-1, 1] by
    quadrature.  Used to verify the Plancherel identity against the
    time-side weighted integral.
    """
    fd = _FOURIER[group]
    out = fd.atom_mass * float(np.asarray(phi_hat(np.array([0.0])))[0])
    out += fd.const_part * phi_total
    if fd.box_coeff:
        panels = gauss_legendre_panels(-1.0, 1.0, breakpoints=breakpoints, order=order)
        out += fd.box_coeff * float(np.real(integrate_panels(phi_hat, panels)))
    return out

"""One-delta and two-delta extremal problems and non-vanishing bounds.

The optimal value of the one-point problem is 1/K(t,t) with extremizer
|K(t,x)|^2 / K(t,t)^2; the two-point problem at +-t has optimal value
2 / (K(t,t) + |K(t,-t)|).  The non-vanishing proportion curve is
P(t) = 1 - 1/(K(t,t) + |K(t,-t)|).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .densities import KernelSpace, SymmetryGroup
from .kernels import kernel, kernel_real
from .numerics import golden_section_max, sinc_pi


def one_delta_value(space: KernelSpace, t: float) -> float:
    """Optimal value 1/K(t,t) of the one-point problem."""
    return 1.0 / kernel_real(space, t, t)


def one_delta_extremizer(space: KernelSpace, t: float, x):
    """Unique extremizer |K(t,x)|^2 / K(t,t)^2 of the one-point problem."""
    ktt = kernel_real(space, t, t)
    ktx = np.abs(kernel(space, t, np.asarray(x, dtype=float)))
    return ktx**2 / ktt**2


def _pair_values(space, t):
    ktt = kernel_real(space, t, t)
    ktm = kernel_real(space, t, -t)
    return ktt, ktm


def two_delta_value(space: KernelSpace, t: float) -> float:
    """Optimal value 2/(K(t,t) + |K(t,-t)|) of the two-point problem.

    At t = 0 this degenerates to the one-point value 1/K(0,0).
    """
    ktt, ktm = _pair_values(space, t)
    return 2.0 / (ktt + abs(ktm))


def two_delta_extremizer(space: KernelSpace, t: float, x):
    """Even extremizer of the two-point problem, normalized to 1 at +-t.

    When K(t,-t) = 0 the extremizer is not unique; the cross-term-free
    representative is returned (the optimal value is unaffected).  At
    t = 0 the one-point extremizer is returned.
    """
    if t == 0.0:
        return one_delta_extremizer(space, 0.0, x)
    x = np.asarray(x, dtype=float)
    ktt, ktm = _pair_values(space, t)
    kp = np.real(kernel(space, t, x))
    km = np.real(kernel(space, -t, x))
    num = kp**2 + km**2 + 2.0 * np.sign(ktm) * kp * km
    return num / (ktt + abs(ktm)) ** 2


@dataclass(frozen=True)
class DeltaProblemSolution:
    """Optimal value and extremizer of a one- or two-point problem."""

    space: KernelSpace
    t: float
    value: float
    extremizer: Callable

    def __post_init__(self):
        if not self.value > 0:
            raise ValueError("optimal value must be positive")


def solve_one_delta(space: KernelSpace, t: float) -> DeltaProblemSolution:
    return DeltaProblemSolution(
        space, t, one_delta_value(space, t), lambda x: one_delta_extremizer(space, t, x)
    )


def solve_two_delta(space: KernelSpace, t: float) -> DeltaProblemSolution:
    return DeltaProblemSolution(
        space, t, two_delta_value(space, t), lambda x: two_delta_extremizer(space, t, x)
    )


def vanishing_bound(space: KernelSpace, t: float) -> float:
    """Upper bound for the average vanishing order at height t.

    1/K(0,0) at t = 0, and 1/(K(t,t) + |K(t,-t)|) for t > 0.
    """
    if t == 0.0:
        return one_delta_value(space, 0.0)
    ktt, ktm = _pair_values(space, t)
    return 1.0 / (ktt + abs(ktm))


def nonvanishing_proportion(space: KernelSpace, t: float) -> float:
    """Lower bound P(t) = 1 - vanishing_bound, clamped into [0, 1]."""
    return min(1.0, max(0.0, 1.0 - vanishing_bound(space, t)))


def dirichlet_nonvanishing_proportion(t: float) -> float:
    """Non-vanishing proportion for the prime-modulus Dirichlet family.

    Closed form 1 - (1/2) (1 + |sin(4 pi t)/(4 pi t)|)^{-1}; identical to
    nonvanishing_proportion(U, delta=2, t).  Tends to 3/4 as t -> 0+ and
    to 1/2 as t -> infinity.
    """
    if not t > 0:
        raise ValueError("the Dirichlet bound requires t > 0")
    return 1.0 - 0.5 / (1.0 + abs(float(sinc_pi(4.0 * t))))


@dataclass(frozen=True)
class ProportionCurve:
    """Sampled non-vanishing proportion curve for one space."""

    space: KernelSpace
    ts: np.ndarray
    ps: np.ndarray

    def __post_init__(self):
        if np.any(self.ps < 0.0) or np.any(self.ps > 1.0):
            raise ValueError("proportion samples must lie in [0, 1]")


def proportion_curve(
    space: KernelSpace, t_min: float, t_max: float, step: float = 1e-3
) -> ProportionCurve:
    """Sample P(t) uniformly on [t_min, t_max]."""
    if not 0 < t_min < t_max:
        raise ValueError("need 0 < t_min < t_max")
    ts = np.arange(t_min, t_max + step / 2.0, step)
    ps = np.array([nonvanishing_proportion(space, float(t)) for t in ts])
    return ProportionCurve(space, ts, ps)


def curve_max(curve: ProportionCurve, tol: float = 1e-6) -> tuple[float, float]:
    """Refine the grid argmax of a proportion curve by golden section."""
    i = int(np.argmax(curve.ps))
    lo = curve.ts[max(i - 1, 0)]
    hi = curve.ts[min(i + 1, len(curve.ts) - 1)]
    f = lambda t: nonvanishing_proportion(curve.space, t)
    t_star = golden_section_max(f, float(lo), float(hi), tol=tol)
    return t_star, f(t_star)

"""Sharp embedding constants between the weighted and flat norms.

C- and C+ are the best constants in C- ||F|| <= ||F||_W <= C+ ||F|| over
the band-limited space.  They equal sqrt(1 + eta) for the extreme
eigenvalues eta of the convolution operator discretized in fredholm:
closed forms for delta <= 1 (and all delta for U, O), transcendental
equations for 1 < delta <= 2, cross-checked by the eigenvalue oracle.

The even-orthogonal/symplectic pair shares one equation through the
duality eta_pm(SO(even)) = -eta_mp(Sp).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .densities import SymmetryGroup
from .errors import NoRootFoundError, UnsupportedRangeError
from .fredholm import discretize_T
from .numerics import find_roots_scan_bisect, symmetric_extreme_eigen


class EtaEquation(enum.Enum):
    """Which transcendental eigenvalue equation to solve."""

    SO_EVEN_SP = "so-even-sp"
    SO_ODD = "so-odd"


def _equation_residual(family: EtaEquation, delta: float, x):
    # substitute x = (delta-1)/(2 eta); (2-delta)/(4 eta) = x (2-delta)/(2 (delta-1))
    ratio = (2.0 - delta) / (2.0 * (delta - 1.0))
    if family is EtaEquation.SO_EVEN_SP:
        return (0.5 + ratio * x) * np.cos(x) + np.sin(x) - 1.0
    return (1.5 - ratio * x) * np.cos(x) - np.sin(x) - 1.0


def _residual_in_eta(family: EtaEquation, delta: float, eta: float) -> float:
    x = (delta - 1.0) / (2.0 * eta)
    if family is EtaEquation.SO_EVEN_SP:
        return (0.5 + (2.0 - delta) / (4.0 * eta)) * math.cos(x) + math.sin(x) - 1.0
    return (1.5 - (2.0 - delta) / (4.0 * eta)) * math.cos(x) - math.sin(x) - 1.0


def _refine_eta(family: EtaEquation, delta: float, x_a: float, x_b: float) -> float:
    # convert an x-space bracket to eta-space, where the extremal roots are
    # O(1) and bisection reaches full relative precision
    a, b = sorted(((delta - 1.0) / (2.0 * x_a), (delta - 1.0) / (2.0 * x_b)))
    fa = _residual_in_eta(family, delta, a)
    while b - a > 1e-15 * max(abs(a), abs(b)):
        mid = 0.5 * (a + b)
        fm = _residual_in_eta(family, delta, mid)
        if fm == 0.0:
            return mid
        if fa * fm < 0:
            b = mid
        else:
            a, fa = mid, fm
    return 0.5 * (a + b)


def solve_eta_extremes(family: EtaEquation, delta: float) -> tuple[float, float]:
    """Largest and smallest real solutions eta of the eigenvalue equation.

    Scans in the variable x = (delta-1)/(2 eta), where sign changes stay
    resolvable: positive-side roots live at x >= (delta-1)/4 (eta <= 2),
    negative-side roots accumulate near fixed x values (x = -pi/2 and
    x = -3pi/2 are exact solutions of the two families for every delta),
    so the window extends to max(50 (delta-1), 4 pi) regardless of delta.
    Each bracket is then refined in eta-space to full relative precision.
    Returns (eta-, eta+) after verifying -1 < eta- < 0 < eta+.
    """
    if not 1.0 < delta <= 2.0:
        raise UnsupportedRangeError("eta equations apply for 1 < delta <= 2")
    x_lo = (delta - 1.0) / 4.0
    x_hi = max(50.0 * (delta - 1.0), 4.0 * math.pi)
    f = lambda x: _equation_residual(family, delta, x)
    etas = []
    for lo, hi in ((x_lo, x_hi), (-x_hi, -x_lo)):
        step = (hi - lo) / max(int((hi - lo) / 5e-4), 10)
        grid = np.arange(lo, hi, step)
        vals = np.asarray(f(grid))
        signs = np.sign(vals)
        for i in np.flatnonzero(signs[:-1] * signs[1:] < 0):
            etas.append(_refine_eta(family, delta, float(grid[i]), float(grid[i + 1])))
    negatives = [e for e in etas if e < 0]
    positives = [e for e in etas if e > 0]
    if not negatives or not positives:
        raise NoRootFoundError(f"eta scan found no root on one side for delta={delta}")
    eta_minus, eta_plus = min(negatives), max(positives)
    if not (-1.0 < eta_minus < 0.0 < eta_plus):
        raise NoRootFoundError(f"eta extremes out of range: {eta_minus}, {eta_plus}")
    return eta_minus, eta_plus


@dataclass(frozen=True)
class EmbeddingConstants:
    """Extreme operator eigenvalues and the mapped sharp constants."""

    group: SymmetryGroup
    delta: float
    eta_minus: float
    eta_plus: float
    c_minus: float
    c_plus: float

    def __post_init__(self):
        if not (self.c_minus > 0 and self.c_plus > 0 and self.c_minus <= self.c_plus):
            raise ValueError("need 0 < c_minus <= c_plus")


def sharp_constants(group: SymmetryGroup, delta: float) -> EmbeddingConstants:
    """Sharp embedding constants (eta-, eta+, C-, C+) for one space.

    eta are the extreme eigenvalues of the group's own operator, so
    C+- = sqrt(1 + eta+-) uniformly; for Sp this encodes the duality
    C-_Sp = sqrt(1 - eta+_eq), C+_Sp = sqrt(1 - eta-_eq).
    """
    if not delta > 0:
        raise ValueError("delta must be positive")
    g = SymmetryGroup
    if group is g.U:
        em, ep = 0.0, 0.0
    elif group is g.O:
        em, ep = 0.0, delta / 2.0
    elif delta > 2.0:
        raise UnsupportedRangeError(
            f"sharp constants for {group.value} require delta <= 2"
        )
    elif delta <= 1.0:
        em, ep = (-delta / 2.0, 0.0) if group is g.SP else (0.0, delta / 2.0)
    elif group is g.SO_ODD:
        em, ep = solve_eta_extremes(EtaEquation.SO_ODD, delta)
    else:
        em, ep = solve_eta_extremes(EtaEquation.SO_EVEN_SP, delta)
        if group is g.SP:
            em, ep = -ep, -em
    return EmbeddingConstants(
        group, delta, em, ep, math.sqrt(1.0 + em), math.sqrt(1.0 + ep)
    )


def oracle_eta_extremes(
    group: SymmetryGroup, delta: float, n: int = 1000
) -> tuple[float, float]:
    """Extreme eigenvalues of the discretized operator (numerical oracle)."""
    disc = discretize_T(group, delta, n)
    return symmetric_extreme_eigen(disc.matrix)


def eigenvalue_multiplicity(
    group: SymmetryGroup, delta: float, eta: float, n: int = 1200, tol: float = 1e-4
) -> int:
    """Count oracle eigenvalues within ``tol`` of ``eta``.

    The extremal eigenspace is one-dimensional except at the single
    degenerate value delta = (1 + 3 pi)/(1 + 3 pi/2) of the
    SO(even)/Sp family, where it has dimension 2.  ``tol`` must cover the
    O(h^2) discretization error of the oracle (about 1e-6 at n = 1200).
    """
    disc = discretize_T(group, delta, n)
    vals = np.linalg.eigvalsh(disc.matrix)
    return int(np.sum(np.abs(vals - eta) <= tol))


def sampling_norm_from_samples(samples: np.ndarray, delta: float) -> float:
    """Squared flat norm (1/delta) * sum |F(k/delta)|^2 from given samples."""
    samples = np.asarray(samples)
    return float(np.sum(np.abs(samples) ** 2) / delta)


def sampling_norm_check(F, delta: float, k_max: int = 1000) -> float:
    """Truncated sampling-series norm of a band-limited F.

    Evaluates F on the sample grid k/delta for |k| <= k_max and returns
    (1/delta) sum |F(k/delta)|^2.  The omitted tail is O(1/k_max) for
    generic sinc combinations and exactly zero when F interpolates only
    finitely many nonzero samples.
    """
    ks = np.arange(-k_max, k_max + 1, dtype=float)
    return sampling_norm_from_samples(np.asarray(F(ks / delta)), delta)

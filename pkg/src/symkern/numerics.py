"""Shared numerical kernels: quadrature, root finding, linear algebra.

Everything here is pure and reentrant.  Dense linear algebra is backed by
LAPACK (through numpy/scipy) behind the small interfaces used by the rest
of the package.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
import scipy.linalg

from .errors import SingularMatrixError

#: below this modulus sin(pi x)/(pi x) switches to its Taylor series
TAU_SINC = 1e-3

#: pivot threshold (relative to the largest matrix entry) for solve_dense
PIVOT_RTOL = 1e-13


def sinc_pi(x):
    """Evaluate sin(pi*x)/(pi*x) for real or complex, scalar or array ``x``.

    For |x| < TAU_SINC the Taylor series 1 - (pi x)^2/6 + (pi x)^4/120
    - (pi x)^6/5040 is used; the first omitted term is below 1e-20 at the
    threshold, so the relative error is <= 1e-14 everywhere.
    """
    x = np.asarray(x)
    y = np.pi * x
    small = np.abs(x) < TAU_SINC
    ys = np.where(small, y, 0.0)
    series = 1.0 - ys**2 / 6.0 + ys**4 / 120.0 - ys**6 / 5040.0
    ysafe = np.where(small, 1.0, y)
    out = np.where(small, series, np.sin(ysafe) / ysafe)
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class Panel:
    """One quadrature panel: Gauss-Legendre nodes/weights on [lo, hi]."""

    lo: float
    hi: float
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise ValueError(f"panel requires lo < hi, got [{self.lo}, {self.hi}]")
        if np.any(np.diff(self.nodes) <= 0):
            raise ValueError("panel nodes must be strictly increasing")
        if self.nodes[0] < self.lo or self.nodes[-1] > self.hi:
            raise ValueError("panel nodes must lie inside [lo, hi]")
        if np.any(self.weights <= 0):
            raise ValueError("panel weights must be positive")
        length = self.hi - self.lo
        if abs(self.weights.sum() - length) > 1e-12 * length:
            raise ValueError("panel weights must sum to the panel length")


def gauss_legendre_panels(
    lo: float,
    hi: float,
    breakpoints: Iterable[float] = (),
    order: int = 16,
    panels_per_segment: int = 8,
) -> list[Panel]:
    """Composite Gauss-Legendre rule on [lo, hi], split at ``breakpoints``.

    Each segment between consecutive breakpoints is divided into
    ``panels_per_segment`` equal panels carrying an ``order``-point rule,
    exact for polynomials of degree <= 2*order - 1 per panel.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("integration bounds must be finite")
    if not lo < hi:
        raise ValueError("gauss_legendre_panels requires lo < hi")
    xs, ws = np.polynomial.legendre.leggauss(order)
    cuts = sorted({lo, hi} | {float(b) for b in breakpoints if lo < b < hi})
    panels = []
    for a, b in zip(cuts[:-1], cuts[1:]):
        edges = np.linspace(a, b, panels_per_segment + 1)
        for pa, pb in zip(edges[:-1], edges[1:]):
            half = (pb - pa) / 2.0
            panels.append(Panel(pa, pb, half * xs + (pa + pb) / 2.0, half * ws))
    return panels


def integrate_panels(f: Callable[[np.ndarray], np.ndarray], panels: Sequence[Panel]):
    """Apply a panel rule to a vectorized integrand."""
    nodes = np.concatenate([p.nodes for p in panels])
    weights = np.concatenate([p.weights for p in panels])
    return np.sum(weights * f(nodes))


@dataclass(frozen=True)
class Bracket:
    """A sign-changing interval for bisection."""

    a: float
    b: float
    fa: float
    fb: float

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError("bracket requires a < b")
        if not self.fa * self.fb < 0:
            raise ValueError("bracket requires a sign change")


def bisect(f: Callable[[float], float], bracket: Bracket, tol: float = 1e-10) -> float:
    """Bisection on a validated bracket until |b - a| <= tol."""
    a, b, fa = bracket.a, bracket.b, bracket.fa
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return m
        if fa * fm < 0:
            b = m
        else:
            a, fa = m, fm
    return 0.5 * (a + b)


def find_roots_scan_bisect(
    f: Callable,
    lo: float,
    hi: float,
    scan_step: float = 1e-3,
    tol: float = 1e-10,
    vectorized: bool = False,
) -> list[float]:
    """Scan [lo, hi] for sign changes and refine each by bisection.

    Roots where f touches zero without changing sign are not detected.
    Returns the (possibly empty) ascending list of refined roots.  With
    ``vectorized=True`` the scan evaluates f on the whole grid at once.
    """
    if not lo < hi:
        raise ValueError("find_roots_scan_bisect requires lo < hi")
    if not scan_step > 0:
        raise ValueError("scan_step must be positive")
    grid = np.arange(lo, hi, scan_step)
    if grid[-1] < hi:
        grid = np.append(grid, hi)
    if vectorized:
        vals = np.asarray(f(grid), dtype=float)
        feval = lambda t: float(f(np.asarray([t]))[0])
    else:
        vals = np.array([float(f(t)) for t in grid])
        feval = f
    if not np.all(np.isfinite(vals)):
        raise ValueError("scan encountered a non-finite function value")
    roots = [float(g) for g, v in zip(grid, vals) if v == 0.0]
    signs = np.sign(vals)
    for i in np.flatnonzero(signs[:-1] * signs[1:] < 0):
        br = Bracket(float(grid[i]), float(grid[i + 1]), float(vals[i]), float(vals[i + 1]))
        roots.append(bisect(feval, br, tol))
    return sorted(roots)


def golden_section_max(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-6
) -> float:
    """Golden-section search for the argmax of a unimodal f on [a, b]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def solve_dense(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve A x = b by pivoted LU elimination (LAPACK).

    Raises SingularMatrixError when a pivot falls below
    PIVOT_RTOL * max|A|.  Relative residual is <= 1e-10 for any system
    that passes the pivot check.
    """
    A = np.asarray(A)
    b = np.asarray(b)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("solve_dense expects a square matrix")
    if b.shape[0] != A.shape[0]:
        raise ValueError("right-hand side does not conform to the matrix")
    with warnings.catch_warnings():
        # exact singularity is reported through SingularMatrixError below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(A)
    scale = np.max(np.abs(A))
    if scale == 0.0 or np.min(np.abs(np.diag(lu))) < PIVOT_RTOL * scale:
        raise SingularMatrixError("pivot below singularity threshold")
    return scipy.linalg.lu_solve((lu, piv), b)


def symmetric_extreme_eigen(M: np.ndarray) -> tuple[float, float]:
    """Smallest and largest eigenvalue of a symmetric matrix.

    Uses the full symmetric eigensolver (LAPACK), accurate to
    ~1e-10 * ||M|| for the dimensions used here (n <= ~2000).
    """
    M = np.asarray(M, dtype=float)
    scale = max(np.max(np.abs(M)), 1.0)
    if np.max(np.abs(M - M.T)) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    vals = np.linalg.eigvalsh(0.5 * (M + M.T))
    return float(vals[0]), float(vals[-1])

"""Independent kernel construction via the second-kind integral equation.

For any delta > 0 the kernel can be recovered by solving

    u(y) +- (1/2) * integral_{y-1}^{y+1} u(s) ds = exp(-2 pi i w y)

on I = [-delta/2, delta/2] (Nystrom collocation, trapezoid weights with
exact fractional cells at the moving window ends, dense solve) and
transforming u back.  The same window machinery discretizes the
convolution operator whose extreme eigenvalues drive the sharp embedding
constants.

This module never touches the closed forms, so agreement between the two
is a genuine cross-check of the hardest formulas.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .densities import SymmetryGroup
from .errors import SingularMatrixError
from .numerics import sinc_pi

PI = np.pi


def nystrom_grid(delta: float, n: int) -> np.ndarray:
    """Piecewise-uniform grid on [-delta/2, delta/2] with ~n cells.

    The breakpoints +-(delta/2 - 1), where the moving integration window
    starts clipping, are forced to be nodes whenever they fall strictly
    inside the interval (delta > 1 and delta != 2 give two of them; they
    merge at 0 for delta = 2).
    """
    half = delta / 2.0
    cuts = {-half, half}
    for bp in (half - 1.0, 1.0 - half):
        if -half < bp < half:
            cuts.add(bp)
    cuts = sorted(cuts)
    parts = [np.array([cuts[0]])]
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        cells = max(2, int(round(n * (hi - lo) / delta)))
        parts.append(np.linspace(lo, hi, cells + 1)[1:])
    return np.concatenate(parts)


def trapezoid_weights(nodes: np.ndarray) -> np.ndarray:
    w = np.zeros(len(nodes))
    d = np.diff(nodes)
    w[:-1] += d / 2.0
    w[1:] += d / 2.0
    return w


def window_weights(nodes: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """Weights approximating integral_{lo}^{hi} u(s) ds on the node values.

    Interior cells carry plain trapezoid weights; the two cells containing
    lo and hi contribute the exact integral of the linear interpolant over
    the fractional part.
    """
    w = np.zeros(len(nodes))
    if hi <= lo:
        return w
    i0 = max(int(np.searchsorted(nodes, lo, "right")) - 1, 0)
    i1 = min(int(np.searchsorted(nodes, hi, "left")), len(nodes) - 1)
    if i1 == i0 + 1 and lo > nodes[i0] and hi < nodes[i1]:
        # window inside a single cell
        h = nodes[i0 + 1] - nodes[i0]
        a, b = lo - nodes[i0], hi - nodes[i0]
        w[i0] = (b - a) - (b * b - a * a) / (2 * h)
        w[i0 + 1] = (b * b - a * a) / (2 * h)
        return w
    first = i0
    if lo > nodes[i0]:
        h = nodes[i0 + 1] - nodes[i0]
        alpha = nodes[i0 + 1] - lo
        w[i0] += alpha**2 / (2 * h)
        w[i0 + 1] += alpha - alpha**2 / (2 * h)
        first = i0 + 1
    last = i1
    if hi < nodes[i1]:
        h = nodes[i1] - nodes[i1 - 1]
        beta = hi - nodes[i1 - 1]
        w[i1 - 1] += beta - beta**2 / (2 * h)
        w[i1] += beta**2 / (2 * h)
        last = i1 - 1
    d = np.diff(nodes[first : last + 1])
    w[first:last] += d / 2.0
    w[first + 1 : last + 1] += d / 2.0
    return w


def window_matrix(nodes: np.ndarray, delta: float) -> np.ndarray:
    """Row i holds the weights of integral over [y_i - 1, y_i + 1] ^ I."""
    half = delta / 2.0
    Q = np.empty((len(nodes), len(nodes)))
    for i, y in enumerate(nodes):
        Q[i] = window_weights(nodes, max(-half, y - 1.0), min(half, y + 1.0))
    return Q


@dataclass(frozen=True)
class NystromSolution:
    """Discrete solution of the window integral equation at one w."""

    delta: float
    w: complex
    sign: int
    nodes: np.ndarray
    weights: np.ndarray
    values: np.ndarray
    residual: float

    def transform(self, z) -> complex:
        """k(z) = integral_I u(y) exp(2 pi i y z) dy by trapezoid."""
        z = np.asarray(z, dtype=complex)
        phase = np.exp(2j * PI * np.multiply.outer(z, self.nodes))
        out = phase @ (self.weights * self.values)
        return complex(out[()]) if out.ndim == 0 else out


@functools.lru_cache(maxsize=6)
def _factorized(delta: float, sign: int, n: int):
    nodes = nystrom_grid(delta, n)
    Q = window_matrix(nodes, delta)
    M = np.eye(len(nodes)) + sign * 0.5 * Q
    lu = scipy.linalg.lu_factor(M)
    if np.min(np.abs(np.diag(lu[0]))) < 1e-13 * np.max(np.abs(M)):
        # the homogeneous equation admits only the trivial solution, so
        # this must not happen for any delta > 0
        raise SingularMatrixError("Nystrom system is numerically singular")
    weights = trapezoid_weights(nodes)
    return nodes, M, lu, weights


def solve_u(delta: float, w: complex, sign: int, n: int = 512) -> NystromSolution:
    """Solve u +- (1/2) * window-integral(u) = exp(-2 pi i w y) on I.

    ``sign`` +1 matches the even-orthogonal kernel, -1 the symplectic one.
    The discrete residual of the collocation system is recorded and is at
    the level of solver roundoff (<= 1e-10 by contract).
    """
    if n < 64:
        raise ValueError("solve_u requires n >= 64")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not delta > 0:
        raise ValueError("delta must be positive")
    nodes, M, lu, weights = _factorized(float(delta), sign, int(n))
    rhs = np.exp(-2j * PI * complex(w) * nodes)
    u = scipy.linalg.lu_solve(lu, rhs)
    residual = float(np.max(np.abs(M @ u - rhs)))
    return NystromSolution(delta, complex(w), sign, nodes, weights, u, residual)


def _oracle_raw(group: SymmetryGroup, delta: float, w: complex, z, n: int):
    if group is SymmetryGroup.SO_EVEN:
        return np.conj(solve_u(delta, w, +1, n).transform(np.conj(z)))
    if group is SymmetryGroup.SP:
        return np.conj(solve_u(delta, w, -1, n).transform(np.conj(z)))
    if group is SymmetryGroup.SO_ODD:
        ksp = lambda a, b: _oracle_raw(SymmetryGroup.SP, delta, a, b, n)
        k00 = np.real(ksp(0.0, 0j))
        return ksp(w, z) - ksp(w, 0j) * ksp(0.0, z) / (1.0 + k00)
    raise ValueError(f"no Nystrom route for group {group.value!r}")


def kernel_via_oracle(
    group: SymmetryGroup,
    delta: float,
    w: complex,
    z,
    n: int = 512,
    richardson: bool = True,
):
    """Kernel value through the integral-equation route (any delta > 0).

    U is the direct sinc formula and O its rank-one correction; the other
    three groups go through the Nystrom solve.  The plain discretization
    converges at O(h^2); with ``richardson=True`` (default) the values at
    n and n/2 cells are combined to cancel the h^2 term, which brings the
    n = 2048 evaluation below 1e-7 absolute error.
    """
    w = complex(w)
    z = np.asarray(z, dtype=complex)
    if group is SymmetryGroup.U:
        out = delta * sinc_pi(delta * (z - np.conj(w)))
    elif group is SymmetryGroup.O:
        out = delta * sinc_pi(delta * (z - np.conj(w))) - (
            delta**2 / (2.0 + delta)
        ) * sinc_pi(delta * z) * sinc_pi(delta * np.conj(w))
    elif richardson:
        if n < 128:
            raise ValueError("richardson refinement requires n >= 128")
        fine = _oracle_raw(group, delta, w, z, n)
        coarse = _oracle_raw(group, delta, w, z, n // 2)
        out = (4.0 * fine - coarse) / 3.0
    else:
        out = _oracle_raw(group, delta, w, z, n)
    out = np.asarray(out)
    return complex(out[()]) if out.ndim == 0 else out


_PHI_HAT_BOX = {
    SymmetryGroup.SO_EVEN: 0.5,
    SymmetryGroup.SP: -0.5,
    SymmetryGroup.SO_ODD: -0.5,
}


@dataclass(frozen=True)
class OperatorDiscretization:
    """Symmetrized discretization of the convolution operator T_G."""

    group: SymmetryGroup
    delta: float
    n: int
    nodes: np.ndarray
    weights: np.ndarray
    matrix: np.ndarray
    asymmetry: float  # pre-symmetrization defect, for diagnostics


def discretize_T(group: SymmetryGroup, delta: float, n: int = 1000) -> OperatorDiscretization:
    """Discretize (T_G u)(y) = integral_I Phi_hat_G(y - s) u(s) ds.

    Phi_hat_G is +-(1/2) 1_[-1,1] (SO(even) / Sp) with an extra constant 1
    for SO(odd).  A uniform grid is used; the Nystrom matrix A with
    quadrature weights is similarity-symmetrized to D^(1/2) A D^(-1/2) =
    D^(1/2) K D^(1/2) and the residual asymmetry (an O(h) effect confined
    to the cells straddling the kernel jump |y-s| = 1) is averaged away.
    The stored matrix is exactly symmetric and shares the operator
    spectrum to discretization accuracy.
    """
    if group not in _PHI_HAT_BOX:
        raise ValueError("discretize_T supports Sp, SO(even), SO(odd) only")
    nodes = np.linspace(-delta / 2.0, delta / 2.0, n + 1)
    W = trapezoid_weights(nodes)
    Q = window_matrix(nodes, delta)
    eff = _PHI_HAT_BOX[group] * (Q / W[None, :])
    if group is SymmetryGroup.SO_ODD:
        eff = eff + 1.0
    root = np.sqrt(W)
    S = root[:, None] * eff * root[None, :]
    asym = float(np.max(np.abs(S - S.T)))
    S = 0.5 * (S + S.T)
    return OperatorDiscretization(group, delta, n, nodes, W, S, asym)

"""Wall-normal eigenmodes of the linearized problem about Poiseuille flow,
and their conversion to admissible initial velocity fields.

The temporal eigenproblem for the wall-normal velocity amplitude vhat is

    i al U (D2 - k2) vhat - i al U'' vhat - (1/Re)(D2 - k2)^2 vhat
        = omega * i (D2 - k2) vhat,

with U = 1 - y^2, k2 = al^2 + be^2, and clamped walls vhat = vhat' = 0.
Modes evolve like exp(-i omega t), so Im(omega) is the growth rate and the
returned list is sorted by growth rate, most unstable first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import ConfigurationError, NumericalError
from .fieldops import FlowParams, HarmonicScalar, WaveField
from .spectral import ChebGrid, YProfile, cheb_grid

SPURIOUS_EIGENFUNCTION_TOL = 1e-4


@dataclass
class ModeResult:
    """One eigenmode: complex eigenvalue and its vhat profile, normalized
    so that the largest-magnitude sample equals 1."""

    eigenvalue: complex
    vhat: YProfile
    params: FlowParams
    grid: ChebGrid


def poiseuille_base(params: FlowParams, grid: ChebGrid) -> WaveField:
    """Parabolic base flow as a j = 0 field: u1 = 1 - y^2."""
    u1 = HarmonicScalar(
        params,
        grid,
        {0: (YProfile.from_poly(grid, [1.0, 0.0, -1.0]), YProfile.zero(grid))},
    )
    z = HarmonicScalar.zero(params, grid)
    return WaveField(u1, z, z.copy(), params, grid)


def _os_matrices(params: FlowParams, grid: ChebGrid):
    n = grid.n
    y, D, D2 = grid.y, grid.D, grid.D2
    k2 = params.k2
    U = 1.0 - y**2
    Upp = -2.0 * np.ones(n)
    S = D2 - k2 * np.eye(n)
    A = (
        1j * params.alpha * (np.diag(U) @ S)
        - 1j * params.alpha * np.diag(Upp)
        - (1.0 / params.reynolds) * (S @ S)
    ).astype(complex)
    B = (1j * S).astype(complex)
    # boundary rows: vhat(+-1) = 0 and vhat'(+-1) = 0
    for r in (0, n - 1):
        A[r] = 0.0
        A[r, r] = 1.0
        B[r] = 0.0
    A[1] = D[0]
    B[1] = 0.0
    A[n - 2] = D[n - 1]
    B[n - 2] = 0.0
    return A, B


def _os_spectrum(params: FlowParams, grid: ChebGrid):
    A, B = _os_matrices(params, grid)
    try:
        w, V = sla.eig(A, B)
    except (sla.LinAlgError, ValueError) as exc:
        raise NumericalError(
            f"generalized eigensolve failed at n={grid.n}: {exc}; "
            f"cond(A) ~ {np.linalg.cond(A):.2e}"
        ) from exc
    keep = np.isfinite(w) & (np.abs(w) < 1e6)
    w, V = w[keep], V[:, keep]
    order = np.argsort(-w.imag)
    return w[order], V[:, order]


def _normalize(v: np.ndarray) -> np.ndarray:
    peak = v[np.argmax(np.abs(v))]
    return v / peak


def _refine_bcs(A, B, w: complex, v: np.ndarray) -> np.ndarray:
    """One inverse-iteration pass; the replaced boundary rows are then
    satisfied to solver precision rather than eigensolver precision."""
    M = A - w * B
    try:
        v2 = np.linalg.solve(M, B @ v)
    except np.linalg.LinAlgError:
        return v
    if not np.all(np.isfinite(v2)):
        return v
    return _normalize(v2)


def _clamp_walls(grid, v: np.ndarray) -> np.ndarray:
    """Project v onto the subspace with v = v' = 0 at both walls.

    Inverse iteration leaves wall residuals around 1e-11 with some jitter
    from the near-singular solve. The constraints are four linear rows, so
    the least-squares correction removes them outright while moving v by no
    more than the residual it removes.
    """
    c = np.zeros((4, grid.n))
    c[0, 0] = 1.0
    c[1, -1] = 1.0
    c[2] = grid.D[0]
    c[3] = grid.D[-1]
    fix, *_ = np.linalg.lstsq(c, c @ v, rcond=None)
    return v - fix


def solve_orr_sommerfeld(params: FlowParams, n: int = 64) -> list[ModeResult]:
    """All resolved eigenmodes at node count n, sorted by growth rate.

    Eigenvalues whose eigenfunctions move by more than 1e-4 (max-abs, after
    peak normalization) when recomputed with n + 8 nodes are discretization
    artifacts and are dropped.
    """
    if n < 24:
        raise ConfigurationError(f"eigenproblem needs n >= 24 nodes, got {n}")
    grid = cheb_grid(n)
    fine = cheb_grid(n + 8)
    w, V = _os_spectrum(params, grid)
    wf, Vf = _os_spectrum(params, fine)
    A, B = _os_matrices(params, grid)

    out = []
    for i in range(w.size):
        m = int(np.argmin(np.abs(wf - w[i])))
        v_here = V[:, i]
        v_fine = fine.interpolate(Vf[:, m], grid.y)
        # Normalize both vectors at the same node. Anchoring each at its own
        # peak is ambiguous for modes with two near-equal peaks (the coarse
        # and fine solves can pick different ones), which used to discard
        # perfectly converged eigenfunctions.
        idx = int(np.argmax(np.abs(v_here)))
        if abs(v_fine[idx]) < 0.1 * np.max(np.abs(v_fine)):
            continue
        v_here = v_here / v_here[idx]
        v_fine = v_fine / v_fine[idx]
        if np.max(np.abs(v_here - v_fine)) > SPURIOUS_EIGENFUNCTION_TOL:
            continue
        v_here = _normalize(_clamp_walls(grid, _refine_bcs(A, B, w[i], v_here)))
        out.append(
            ModeResult(
                eigenvalue=complex(w[i]),
                vhat=YProfile(grid, v_here),
                params=params,
                grid=grid,
            )
        )
    return out


def mode_to_field(
    mode: ModeResult, amplitude: float, include_base: bool = True
) -> WaveField:
    """Real velocity field of a mode at the given amplitude.

    The wave part lives in harmonic 1: u2 comes from vhat, u1 and u3 from
    continuity together with zero wall-normal vorticity, which keeps the
    field inside the single-phase representation. With include_base the
    j = 0 Poiseuille profile is added to u1.
    """
    params, grid = mode.params, mode.grid
    k2 = params.k2
    vh = amplitude * mode.vhat.values
    Dv = grid.D @ vh
    u1h = 1j * params.alpha * Dv / k2
    u3h = 1j * params.beta * Dv / k2

    def pair(c):
        return (
            YProfile.from_values(grid, c.real.copy()),
            YProfile.from_values(grid, -c.imag),
        )

    u1 = HarmonicScalar(params, grid, {1: pair(u1h)})
    u2 = HarmonicScalar(params, grid, {1: pair(vh)})
    u3 = HarmonicScalar(params, grid, {1: pair(u3h)})
    field = WaveField(u1, u2, u3, params, grid)
    if include_base:
        field = field + poiseuille_base(params, grid)
    return field

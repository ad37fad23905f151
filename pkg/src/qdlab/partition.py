"""Boltzmann weights and the state-integral partition function Z(X).

Each tetrahedron contributes the weight-kernel value at the two alternating
edge-variable combinations

    E1 = x01 + x23 - x03 - x12,      E2 = x03 + x12 - x02 - x13,

complex-conjugated for negative tets.  States live on the circle A/B, one per
edge class; Z(X) integrates the product of weights over [0, sqrt(N))^edges
with the mass-1 measure (dt/sqrt(N)) per edge, by periodic trapezoid on M
points per edge.  Kernel values are memoized on the index grid: for lifted
states all kernel arguments are integer multiples of h = sqrt(N)/M, so each
tet needs a single (E2-index, E1-index) table, assembled from a B-sum matrix
product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .charged import (
    ChargeTriple,
    WeightKernelParams,
    log_forward_transform,
    pentagon_normalization,
    weight_kernel,
)
from .errors import NonConvergent
from .lca import LcaPoint, QuadratureSpec, b_generator, lift
from .qdilog import QdParams
from .triangulation import EDGE_PAIRS, ShapedTriangulation

__all__ = [
    "EdgeState",
    "boltzmann_weight",
    "total_weight",
    "descent_residual",
    "partition_function",
    "PartitionResult",
    "convergence_report",
]

# slot coefficients of (E1, E2) per tet edge
_E1_COEF = {(0, 1): 1, (2, 3): 1, (0, 3): -1, (1, 2): -1, (0, 2): 0, (1, 3): 0}
_E2_COEF = {(0, 3): 1, (1, 2): 1, (0, 2): -1, (1, 3): -1, (0, 1): 0, (2, 3): 0}

EdgeState = tuple  # one CircleVar per edge class


def _qd_params(X: ShapedTriangulation) -> QdParams:
    return QdParams(X.theta, X.N)


def _tet_kernel_params(X: ShapedTriangulation, t: int) -> WeightKernelParams:
    ang = X.tets[t].angles
    return WeightKernelParams(ChargeTriple(ang.a, ang.b, ang.c), _qd_params(X))


def _tet_args(X: ShapedTriangulation, t: int, lifts) -> tuple[LcaPoint, LcaPoint]:
    """Kernel arguments (E1, E2) of tet t from per-edge-class lifted states."""
    e1r = e2r = 0.0
    e1n = e2n = 0
    for e in EDGE_PAIRS:
        p = lifts[X.edge_of[(t, e)]]
        c1, c2 = _E1_COEF[e], _E2_COEF[e]
        e1r += c1 * p.x
        e1n += c1 * p.n
        e2r += c2 * p.x
        e2n += c2 * p.n
    return LcaPoint(e1r, e1n), LcaPoint(e2r, e2n)


def boltzmann_weight(
    X: ShapedTriangulation,
    t: int,
    state: EdgeState,
    spec: QuadratureSpec | None = None,
) -> complex:
    """Weight of tet t at a state, one CircleVar per edge class (lifted canonically)."""
    lifts = [lift(s, X.N) for s in state]
    return _weight_at_lifts(X, t, lifts, spec)


def _weight_at_lifts(X, t, lifts, spec=None) -> complex:
    e1, e2 = _tet_args(X, t, lifts)
    val = weight_kernel(_tet_kernel_params(X, t), e1, e2, spec)
    return np.conj(val) if X.tets[t].sign < 0 else val


def total_weight(X: ShapedTriangulation, lifts, spec: QuadratureSpec | None = None) -> complex:
    """B_X at explicit lifts (one LcaPoint per edge class)."""
    out = 1.0 + 0j
    for t in range(len(X.tets)):
        out *= _weight_at_lifts(X, t, lifts, spec)
    return out


def descent_residual(
    X: ShapedTriangulation,
    state: EdgeState,
    edge: int,
    k: int = 1,
    spec: QuadratureSpec | None = None,
) -> float:
    """Relative change of B_X when one edge lift is moved by k B-generators.

    Vanishing residuals certify that the total weight descends to A/B^edges.
    """
    lifts = [lift(s, X.N) for s in state]
    w0 = total_weight(X, lifts, spec)
    shifted = list(lifts)
    shifted[edge] = shifted[edge] + b_generator(X.N).scale(k)
    w1 = total_weight(X, shifted, spec)
    return abs(w1 - w0) / max(abs(w0), 1e-300)


def _tet_table(X: ShapedTriangulation, t: int, M: int, spec: QuadratureSpec) -> dict:
    """Kernel table of tet t on the index grid, plus its index offsets.

    Index ranges cover all integer combinations of grid indices 0..M-1 with
    the slot coefficients; entry [w - wmin, u - umin] = W((u h, 0), (w h, 0)).
    """
    p = _qd_params(X)
    N = p.N.N
    rN = p.N.sqrt
    h = rN / M
    wkp = _tet_kernel_params(X, t)

    m1 = {}
    m2 = {}
    for e in EDGE_PAIRS:
        c = X.edge_of[(t, e)]
        m1[c] = m1.get(c, 0) + _E1_COEF[e]
        m2[c] = m2.get(c, 0) + _E2_COEF[e]
    umin = sum(min(v * (M - 1), 0) for v in m1.values())
    umax = sum(max(v * (M - 1), 0) for v in m1.values())
    wmin = sum(min(v * (M - 1), 0) for v in m2.values())
    wmax = sum(max(v * (M - 1), 0) for v in m2.values())

    us = np.arange(umin, umax + 1)
    ws = np.arange(wmin, wmax + 1)
    xr = us * h
    yr = ws * h

    cth_im = p.theta.c.imag
    ch = wkp.charges
    rate = 2 * np.pi * cth_im * min(ch.a, ch.b, ch.c) / N
    K = min(int(np.ceil(-np.log(spec.tol * 1e-3) / rate)) + 4 * N, spec.b_terms)
    ks = np.arange(-K, K + 1)

    kap = pentagon_normalization(ch, p)
    S = np.empty((len(ws), len(ks)), dtype=complex)
    for i, k in enumerate(ks):
        vals = np.exp(log_forward_transform(ch, yr + k / rN, k % N, p, spec))
        S[:, i] = np.conj(kap * vals)
    phase = (-1.0) ** ks
    P = phase[:, None] * np.exp(-2j * np.pi * np.outer(ks, xr) / rN)
    core = S @ P
    pref = np.exp(-1j * np.pi * np.outer(yr, xr))
    table = pref * core
    if X.tets[t].sign < 0:
        table = np.conj(table)
    return {"table": table, "umin": umin, "wmin": wmin, "m1": m1, "m2": m2}


def _grid_value(X: ShapedTriangulation, M: int, spec: QuadratureSpec) -> complex:
    """Z at grid size M by tensor-product periodic trapezoid."""
    E = len(X.edge_classes)
    if E == 0:
        return 1.0 + 0j
    tables = [_tet_table(X, t, M, spec) for t in range(len(X.tets))]
    j = [np.arange(M).reshape((1,) * i + (M,) + (1,) * (E - i - 1)) for i in range(E)]

    def slab_product(sl):
        out = None
        for tab in tables:
            u = sum(v * (j[c][sl] if c == 0 else j[c]) for c, v in tab["m1"].items())
            w = sum(v * (j[c][sl] if c == 0 else j[c]) for c, v in tab["m2"].items())
            vals = tab["table"][w - tab["wmin"], u - tab["umin"]]
            out = vals if out is None else out * vals
        return out

    total = 0j
    if E >= 3 and M ** E > 4_000_000:
        step = max(1, 4_000_000 // M ** (E - 1))
        for start in range(0, M, step):
            sl = slice(start, min(start + step, M))
            total += np.sum(slab_product(sl))
    else:
        total = np.sum(slab_product(slice(None)))
    return complex(total / M**E)


@dataclass
class PartitionResult:
    Z: complex
    abs: float
    grid: int
    error_estimate: float

    def to_document(self) -> dict:
        return {
            "Z": [self.Z.real, self.Z.imag],
            "abs": self.abs,
            "grid": self.grid,
            "error_estimate": self.error_estimate,
        }


def partition_function(
    X: ShapedTriangulation, spec: QuadratureSpec | None = None, target: float | None = None
) -> PartitionResult:
    """Z(X) with an M-versus-M/2 error estimate.

    Raises NonConvergent when the two-grid discrepancy exceeds the target
    relative error (spec.tol scaled by 1e3 unless target given).
    """
    spec = spec or QuadratureSpec()
    M = spec.M
    z_fine = _grid_value(X, M, spec)
    z_coarse = _grid_value(X, M // 2, spec)
    err = abs(z_fine - z_coarse)
    target = target if target is not None else 1e3 * spec.tol
    if err > target * max(abs(z_fine), 1e-300):
        raise NonConvergent(
            f"partition grid M={M} vs {M//2} differs by {err:.3e} (target {target:.1e})"
        )
    return PartitionResult(z_fine, abs(z_fine), M, err)


def convergence_report(X: ShapedTriangulation, Ms, spec: QuadratureSpec | None = None):
    """Successive grid values and differences over a ladder of at least 3 sizes."""
    spec = spec or QuadratureSpec()
    Ms = list(Ms)
    if len(Ms) < 3:
        raise ValueError("ladder needs at least 3 grid sizes")
    rows = []
    prev = None
    for M in Ms:
        z = _grid_value(X, int(M), spec)
        delta = abs(z - prev) if prev is not None else None
        rows.append({"M": int(M), "Z": [z.real, z.imag], "delta": delta})
        prev = z
    return rows

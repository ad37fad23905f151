"""Five-term identities at the integral level.

check_faddeev_type verifies the Fourier-side identity for the pentagon family
H_j = conj(kappa_j F^{-1} psi_j) with charges solving the transfer equations:

    H_1(x) H_3(y) = <x;-y> integral_A H_4(y-z) H_2(z) H_0(x-z) <z> dz.

check_charged_beta_pentagon verifies its automorphic descent, the five-term
identity of the weight kernels over A/B:

    W_1(x,y) W_3(u,v) = integral_{A/B} W_4(u+y, v-z) W_2(x+y+u+v-z, z)
                                        W_0(x+v, y-z) dz,

with the kernel offsets mu_0 = mu_1 = alpha, mu_2 = alpha + beta,
mu_3 = mu_4 = beta.  Both hold with constant exactly 1 in this normalization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .charged import (
    ChargeTriple,
    WeightKernelParams,
    pentagon_family,
    weight_kernel_many,
)
from .errors import Infeasible
from .lca import LcaPoint, QuadratureSpec, b_generator, gaussian_exp
from .qdilog import QdParams

__all__ = [
    "PentagonCharges",
    "solve_pentagon_charges",
    "pentagon_residuals",
    "check_charged_beta_pentagon",
    "check_faddeev_type",
]


def solve_pentagon_charges(
    t1: ChargeTriple, t3: ChargeTriple, free: float | None = None
) -> list[ChargeTriple]:
    """Invert the charge-transfer equations of the five-term identity.

    Returns [q0, q1, q2, q3, q4] with q1 = t1, q3 = t3 and

        a1 = a0 + a2,  a3 = a2 + a4,  c1 = c0 + a4,  c3 = a0 + c4,  c2 = c1 + c3,

    all components positive.  The free parameter is a0 (feasibility-interval
    midpoint by default); raises Infeasible when the interval is empty.
    """
    lo = max(0.0, t1.a - t3.a, t3.c - t1.b)
    hi = min(t1.a, t3.c, t1.c + t1.a - t3.a)
    if not lo < hi:
        raise Infeasible(f"empty feasibility interval [{lo}, {hi}] for a0")
    a0 = 0.5 * (lo + hi) if free is None else float(free)
    if not lo < a0 < hi:
        raise Infeasible(f"free parameter {a0} outside ({lo}, {hi})")
    a2 = t1.a - a0
    a4 = t3.a - a2
    c0 = t1.c - a4
    c4 = t3.c - a0
    c2 = t1.c + t3.c
    mk = lambda a, c: ChargeTriple(a, 1.0 - a - c, c)
    try:
        return [mk(a0, c0), t1, mk(a2, c2), t3, mk(a4, c4)]
    except ValueError as e:
        raise Infeasible(str(e)) from e


def pentagon_residuals(charges5) -> float:
    """Max absolute defect of the five transfer equations."""
    q = charges5
    return max(
        abs(q[1].a - q[0].a - q[2].a),
        abs(q[3].a - q[2].a - q[4].a),
        abs(q[1].c - q[0].c - q[4].a),
        abs(q[3].c - q[0].a - q[4].c),
        abs(q[2].c - q[1].c - q[3].c),
    )


@dataclass(frozen=True)
class PentagonCharges:
    """Five charge triples satisfying the transfer equations, plus offsets."""

    charges: tuple
    alpha: LcaPoint = LcaPoint(0.0, 0)
    beta: LcaPoint = LcaPoint(0.0, 0)

    def __post_init__(self):
        if len(self.charges) != 5:
            raise ValueError("need five charge triples")
        defect = pentagon_residuals(self.charges)
        if defect > 1e-12:
            raise Infeasible(f"charge transfer equations violated by {defect:.2e}")

    @classmethod
    def solve(cls, t1, t3, free=None, alpha=LcaPoint(0.0, 0), beta=LcaPoint(0.0, 0)):
        return cls(tuple(solve_pentagon_charges(t1, t3, free)), alpha, beta)

    def mus(self) -> list[LcaPoint]:
        a, b = self.alpha, self.beta
        return [a, a, a + b, b, b]


def check_charged_beta_pentagon(
    pc: PentagonCharges,
    samples,
    params: QdParams,
    spec: QuadratureSpec | None = None,
) -> dict:
    """Relative residual of the weight-kernel five-term identity over samples.

    samples: iterable of 4-tuples (x, y, u, v) of LcaPoint.  The A/B integral
    is the periodic trapezoid on spec.M points of the canonical section
    z = (t, 0).  Also reports the pointwise B-shift invariance defect of the
    integrand at the first sample (exact for odd N; genuinely nonzero for
    even N, where not every element is divisible by 2).
    """
    spec = spec or QuadratureSpec()
    N = params.N
    rN = N.sqrt
    M = spec.M
    wks = [
        WeightKernelParams(ch, params, mu) for ch, mu in zip(pc.charges, pc.mus())
    ]
    ts = np.arange(M) * rN / M
    zr, zn = ts, np.zeros(M, dtype=int)
    residuals = []
    shift_defect = None
    for (x, y, u, v) in samples:
        w1 = weight_kernel_many(wks[1], [x.x], [x.n], [y.x], [y.n], spec)[0]
        w3 = weight_kernel_many(wks[3], [u.x], [u.n], [v.x], [v.n], spec)[0]
        lhs = w1 * w3

        def integrand(zr, zn):
            w4 = weight_kernel_many(
                wks[4], np.full(M, u.x + y.x), np.full(M, u.n + y.n), v.x - zr, v.n - zn, spec
            )
            w2 = weight_kernel_many(
                wks[2],
                x.x + y.x + u.x + v.x - zr,
                np.full(M, x.n + y.n + u.n + v.n) - zn,
                zr,
                zn,
                spec,
            )
            w0 = weight_kernel_many(
                wks[0], np.full(M, x.x + v.x), np.full(M, x.n + v.n), y.x - zr, y.n - zn, spec
            )
            return w4 * w2 * w0

        vals = integrand(zr, zn)
        rhs = complex(np.sum(vals) / M)
        residuals.append(abs(lhs - rhs) / (abs(lhs) + abs(rhs)))
        if shift_defect is None:
            b0 = b_generator(N)
            shifted = integrand(zr + b0.x, zn + b0.n)
            shift_defect = float(
                np.max(np.abs(shifted - vals)) / max(np.max(np.abs(vals)), 1e-300)
            )
    return {"max_residual": max(residuals), "integrand_b_shift_defect": shift_defect}


def check_faddeev_type(
    pc: PentagonCharges,
    samples,
    params: QdParams,
    spec: QuadratureSpec | None = None,
    family=None,
) -> dict:
    """Residual of the Fourier-side five-term identity over samples of A^2.

    samples: iterable of pairs (p, q) of LcaPoint.  family optionally replaces
    the pentagon family with an arbitrary 5-tuple of callables (xr, n) ->
    values, for negative controls.
    """
    spec = spec or QuadratureSpec()
    N = params.N.N
    h = spec.step
    zs = np.arange(-spec.window, spec.window + h / 2, h)

    if family is None:
        family = [
            (lambda ch: (lambda xr, n: pentagon_family(ch, xr, n, params, spec)))(ch)
            for ch in pc.charges
        ]
    residuals = []
    for (p, q) in samples:
        lhs = complex(family[1](np.array([p.x]), p.n)[0]) * complex(
            family[3](np.array([q.x]), q.n)[0]
        )
        tot = 0j
        for m in range(N):
            gz = np.exp(1j * np.pi * zs**2) * gaussian_exp(LcaPoint(0.0, m), params.N)
            vals = (
                family[4](q.x - zs, q.n - m)
                * family[2](zs, m)
                * family[0](p.x - zs, p.n - m)
                * gz
            )
            tot += simpson(vals, dx=h)
        kernel = np.exp(-2j * np.pi * p.x * q.x) * np.exp(2j * np.pi * (p.n * q.n) / N)
        rhs = kernel * tot / params.N.sqrt
        residuals.append(abs(lhs - rhs) / (abs(lhs) + abs(rhs)))
    return {"max_residual": max(residuals)}

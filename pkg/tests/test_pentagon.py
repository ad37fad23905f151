"""Five-term identities: charge transfer, beta pentagon over A/B, eq of Faddeev type."""

import numpy as np
import pytest
from conftest import params

from qdlab.charged import ChargeTriple
from qdlab.errors import Infeasible
from qdlab.lca import LcaPoint, QuadratureSpec
from qdlab.pentagon import (
    PentagonCharges,
    check_charged_beta_pentagon,
    check_faddeev_type,
    pentagon_residuals,
    solve_pentagon_charges,
)

EQUAL = ChargeTriple.equal()
T3 = ChargeTriple(0.4, 0.25, 0.35)


def test_solve_equal_charges_exact():
    q = solve_pentagon_charges(EQUAL, EQUAL)
    assert pentagon_residuals(q) < 1e-15
    # midpoint of the feasibility interval (0, 1/3)
    assert q[0].a == pytest.approx(1 / 6)


def test_solve_degenerate_rejected():
    # free = a1 forces a2 = 0, violating positivity
    with pytest.raises(Infeasible):
        solve_pentagon_charges(EQUAL, EQUAL, free=1 / 3)


def test_solve_float_round_trip():
    q = solve_pentagon_charges(ChargeTriple(0.41, 0.27, 0.32), T3, free=0.2)
    rebuilt = [ChargeTriple(float(c.a), float(c.b), float(c.c)) for c in q]
    assert pentagon_residuals(rebuilt) < 1e-15


def test_pentagon_charges_validation():
    with pytest.raises(Infeasible):
        PentagonCharges((EQUAL,) * 5)


def _samples(rng, N, count, even=True):
    step = 2 if (even and N % 2 == 0) else 1
    return [
        tuple(
            LcaPoint(rng.uniform(-0.8, 0.8), (step * int(rng.integers(0, N))) % N)
            for _ in range(4)
        )
        for _ in range(count)
    ]


@pytest.mark.parametrize("N", [1, 2])
def test_beta_pentagon(N, rng):
    p = params(N)
    pc = PentagonCharges.solve(EQUAL, T3)
    rep = check_charged_beta_pentagon(pc, _samples(rng, N, 5), p, QuadratureSpec(M=256))
    assert rep["max_residual"] < 1e-4
    if N % 2 == 1:
        assert rep["integrand_b_shift_defect"] < 1e-9


def test_beta_pentagon_odd_N_shift_invariance(rng):
    p = params(3)
    pc = PentagonCharges.solve(EQUAL, T3)
    rep = check_charged_beta_pentagon(pc, _samples(rng, 3, 2), p, QuadratureSpec(M=128))
    assert rep["max_residual"] < 1e-6
    assert rep["integrand_b_shift_defect"] < 1e-9


def test_beta_pentagon_offsets(rng):
    # mu offsets only move automorphy; the identity holds for any alpha, beta
    p = params(1)
    pc = PentagonCharges.solve(
        EQUAL, T3, alpha=LcaPoint(0.31, 0), beta=LcaPoint(-0.17, 0)
    )
    rep = check_charged_beta_pentagon(pc, _samples(rng, 1, 3), p, QuadratureSpec(M=256))
    assert rep["max_residual"] < 1e-4


def test_beta_pentagon_grid_refinement(rng):
    p = params(1)
    pc = PentagonCharges.solve(EQUAL, T3)
    sams = _samples(rng, 1, 2)
    res = [
        check_charged_beta_pentagon(pc, sams, p, QuadratureSpec(M=M))["max_residual"]
        for M in (8, 16, 256)
    ]
    assert res[2] <= res[1] <= res[0]
    assert res[2] < 1e-4


def _pair_samples(rng, N, count):
    return [
        (
            LcaPoint(rng.uniform(-0.6, 0.6), int(rng.integers(0, N))),
            LcaPoint(rng.uniform(-0.6, 0.6), int(rng.integers(0, N))),
        )
        for _ in range(count)
    ]


@pytest.mark.parametrize("N", [1, 2])
def test_faddeev_type(N, rng):
    p = params(N)
    pc = PentagonCharges.solve(EQUAL, T3)
    spec = QuadratureSpec(window=10.0, step=1 / 64)
    rep = check_faddeev_type(pc, _pair_samples(rng, N, 3), p, spec)
    assert rep["max_residual"] < 1e-4


def test_faddeev_type_negative_control(rng):
    # plain Gaussians are not of the Faddeev type
    p = params(1)
    pc = PentagonCharges.solve(EQUAL, T3)
    gauss = [lambda xr, n: np.exp(-np.pi * np.asarray(xr) ** 2) + 0j] * 5
    rep = check_faddeev_type(pc, _pair_samples(rng, 1, 2), p, family=gauss)
    assert rep["max_residual"] > 1e-2

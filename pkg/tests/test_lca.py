"""Group structure of A_N: characters, Haar measure, B-sums."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdlab.errors import NonConvergent
from qdlab.lca import (
    CircleVar,
    LcaPoint,
    Modulus,
    QuadratureSpec,
    b_generator,
    b_sum,
    fourier_kernel,
    gauss_gamma,
    gaussian_exp,
    haar_integrate,
    halve,
    lift,
    project_to_quotient,
)

moduli = st.integers(min_value=1, max_value=7).map(Modulus)
reals = st.floats(min_value=-8, max_value=8, allow_nan=False)
residues = st.integers(min_value=-15, max_value=15)
points = st.builds(LcaPoint, reals, residues)


def test_gaussian_exp_examples():
    assert gaussian_exp(LcaPoint(0, 0), Modulus(5)) == 1
    assert abs(gaussian_exp(LcaPoint(1, 0), Modulus(1)) - (-1)) < 1e-15
    # (0,1), N=2: e^{-pi i 1*3/2} = i
    assert abs(gaussian_exp(LcaPoint(0, 1), Modulus(2)) - 1j) < 1e-15


def test_fourier_kernel_examples():
    p = LcaPoint(0.7, 2)
    assert fourier_kernel(p, LcaPoint(0, 0), Modulus(3)) == 1
    assert abs(fourier_kernel(LcaPoint(0, 1), LcaPoint(0, 1), Modulus(2)) - (-1)) < 1e-15
    assert abs(fourier_kernel(LcaPoint(1, 0), LcaPoint(1, 0), Modulus(4)) - 1) < 1e-12


@settings(max_examples=200, deadline=None)
@given(points, points, moduli)
def test_gaussian_compatibility(p, q, N):
    lhs = gaussian_exp((p + q).reduce(N), N)
    rhs = gaussian_exp(p, N) * gaussian_exp(q, N) * fourier_kernel(p, q, N)
    assert abs(lhs - rhs) < 1e-12


@settings(max_examples=150, deadline=None)
@given(points, points, points, moduli)
def test_bicharacter_additivity_and_symmetry(p, q, r, N):
    assert (
        abs(
            fourier_kernel(p + q, r, N)
            - fourier_kernel(p, r, N) * fourier_kernel(q, r, N)
        )
        < 1e-11
    )
    assert abs(fourier_kernel(p, q, N) - fourier_kernel(q, p, N)) < 1e-13


@settings(max_examples=100, deadline=None)
@given(points, moduli)
def test_gaussian_even_and_mod_N(p, N):
    assert abs(gaussian_exp(-p, N) - gaussian_exp(p, N)) < 1e-13
    shifted = LcaPoint(p.x, p.n + N.N)
    assert gaussian_exp(shifted, N) == gaussian_exp(p, N)


def test_unit_modulus():
    N = Modulus(3)
    p = LcaPoint(0.37, 2)
    assert abs(abs(gaussian_exp(p, N)) - 1) < 1e-15
    assert abs(abs(fourier_kernel(p, LcaPoint(1.2, 1), N)) - 1) < 1e-15


def test_haar_gaussian_examples():
    v, err = haar_integrate(
        lambda xs, n: np.exp(-np.pi * xs**2) * (n == 0), Modulus(1)
    )
    assert abs(v - 1) < 1e-10
    v4, _ = haar_integrate(lambda xs, n: np.exp(-np.pi * xs**2) + 0j, Modulus(4))
    assert abs(v4 - 2) < 1e-10  # N identical summands over sqrt(N)


def test_haar_fresnel_regularized():
    eps = 1e-3
    v, _ = haar_integrate(
        lambda xs, n: np.exp(1j * np.pi * xs**2 - eps * xs**2),
        Modulus(1),
        QuadratureSpec(window=80.0, step=1 / 128, tol=1e-6),
    )
    assert abs(v - np.exp(1j * np.pi / 4)) < 5e-4


def test_haar_nonconvergent():
    with pytest.raises(NonConvergent):
        haar_integrate(lambda xs, n: 1.0 / (1.0 + xs**2), Modulus(1))


def test_gauss_gamma():
    assert abs(gauss_gamma(Modulus(1)) - np.exp(1j * np.pi / 4)) < 1e-15
    # N=2 by hand: e^{i pi/4} (1 + i)/sqrt 2 = i
    assert abs(gauss_gamma(Modulus(2)) - 1j) < 1e-14
    for N in range(1, 9):
        assert abs(abs(gauss_gamma(Modulus(N))) - 1) < 1e-12


def test_quotient_projection():
    N = Modulus(4)
    assert project_to_quotient(b_generator(N), N).t == pytest.approx(0.0)
    assert project_to_quotient(LcaPoint(0.3, 0), Modulus(1)).t == pytest.approx(0.3)
    assert project_to_quotient(LcaPoint(1.0, 1), N).t == pytest.approx(0.5)
    c = CircleVar(0.77)
    assert project_to_quotient(lift(c, N), N).t == pytest.approx(0.77)


def test_b_sum_theta_series(rng):
    # independent oracle: brute-force sum of e^{-pi k^2} over |k| <= 30
    brute = sum(np.exp(-np.pi * k**2) for k in range(-30, 31))
    N = Modulus(1)
    val = b_sum(lambda p: np.exp(-np.pi * p.x**2), LcaPoint(0, 0), N)
    assert abs(val - brute) < 1e-12


def test_b_sum_point_mass():
    N = Modulus(3)

    def f(p):
        return 1.0 if abs(p.x) < 1e-9 and p.n % 3 == 0 else 0.0

    assert b_sum(f, LcaPoint(0, 0), N, QuadratureSpec(tol=1e-14)) == 1.0


def test_b_sum_linearity(rng):
    N = Modulus(2)
    f = lambda p: np.exp(-0.8 * np.pi * p.x**2)
    g = lambda p: np.exp(-1.1 * np.pi * (p.x - 0.3) ** 2)
    a, b = 1.7, -0.4
    base = LcaPoint(0.2, 1)
    combo = b_sum(lambda p: a * f(p) + b * g(p), base, N)
    assert abs(combo - (a * b_sum(f, base, N) + b * b_sum(g, base, N))) < 1e-12


def test_b_sum_nonconvergent():
    with pytest.raises(NonConvergent):
        b_sum(lambda p: 1.0, LcaPoint(0, 0), Modulus(1))


def test_weil_decomposition():
    # integral_A f = (1/sqrt N) int_0^{sqrt N} (sum_B f(lift(t)+b)) dt
    N = Modulus(2)
    f = lambda p: np.exp(-np.pi * (p.x - 0.4) ** 2) * np.exp(2j * np.pi * p.n / 2) / (1 + p.n % 2)
    direct, _ = haar_integrate(
        lambda xs, n: np.exp(-np.pi * (xs - 0.4) ** 2) * np.exp(2j * np.pi * n / 2) / (1 + n % 2),
        N,
    )
    Mg = 256
    ts = (np.arange(Mg) + 0.5) * N.sqrt / Mg
    fiber = [b_sum(f, lift(CircleVar(t), N), N) for t in ts]
    weil = np.mean(fiber)  # dt/sqrt(N) over [0, sqrt N): mass-one average
    assert abs(direct - weil) < 1e-9


def test_halve_odd_exact():
    N = Modulus(5)
    for n in range(5):
        p = LcaPoint(0.3, n)
        h = halve(p, N)
        assert (2 * h.n) % 5 == n
        assert h.x == pytest.approx(0.15)

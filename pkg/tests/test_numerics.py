import math

import numpy as np
import pytest
from scipy import special

from src.bodies import GraphBody, LpBall, simplex
from src.numerics import (
    QuadratureRule,
    gamma_multiplication_rhs,
    gauss_legendre,
    integrate_1d,
    integrate_1d_with_residual,
    integrate_body,
    integrate_piecewise,
    log_beta,
    log_factorial,
    log_gamma,
    raabe_antiderivative,
)
from src.utils import DomainError, NumericError


@pytest.mark.parametrize("x, expected", [
    (1.0, 0.0),
    (0.5, 0.5 * math.log(math.pi)),
    (6.0, math.log(120.0)),
])
def test_log_gamma_known_values(x, expected):
    assert log_gamma(x) == pytest.approx(expected, abs=1e-13)


def test_log_gamma_rejects_nonpositive():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(np.array([1.0, -2.0]))


def test_log_gamma_array_matches_scalar():
    xs = np.array([1e-6, 0.3, 2.5, 1e6])
    values = log_gamma(xs)
    assert values.shape == xs.shape
    assert values[2] == pytest.approx(log_gamma(2.5), rel=1e-15)


@pytest.mark.parametrize("n, expected", [(0, 0.0), (1, 0.0), (5, math.log(120.0))])
def test_log_factorial(n, expected):
    assert log_factorial(n) == pytest.approx(expected, abs=1e-13)


def test_log_factorial_table_and_fallback_agree():
    big = 10**6 + 5
    assert log_factorial(big) == pytest.approx(float(special.gammaln(big + 1.0)), rel=1e-14)
    assert np.allclose(log_factorial(np.arange(6)), np.log([1, 1, 2, 6, 24, 120]), atol=1e-13)
    with pytest.raises(DomainError):
        log_factorial(-1)


@pytest.mark.parametrize("x, y, expected", [
    (1.0, 1.0, 0.0),
    (1.0, 2.0, math.log(0.5)),
    (0.5, 0.5, math.log(math.pi)),
])
def test_log_beta(x, y, expected):
    assert log_beta(x, y) == pytest.approx(expected, abs=1e-13)


def test_log_beta_rejects_nonpositive():
    with pytest.raises(DomainError):
        log_beta(0.0, 1.0)


@pytest.mark.parametrize("z", [0.3, 0.7, 1.9])
@pytest.mark.parametrize("n", [2, 3, 5])
def test_gamma_multiplication_identity(z, n):
    assert gamma_multiplication_rhs(z, n) == pytest.approx(log_gamma(n * z), abs=1e-10)


def test_gauss_nodes_are_exact_up_to_degree():
    order = 32
    nodes, weights = gauss_legendre(order)
    for k in range(2 * order):
        exact = 0.0 if k % 2 else 2.0 / (k + 1)
        assert weights @ nodes**k == pytest.approx(exact, abs=1e-13)


def test_gauss_nodes_are_read_only():
    nodes, _ = gauss_legendre(8)
    with pytest.raises(ValueError):
        nodes[0] = 0.0


@pytest.mark.parametrize("phi, expected", [
    (lambda x: x, 0.5),
    (lambda x: special.xlogy(x, x), -0.25),
    (lambda x: x * special.xlogy(x, x), -1.0 / 9.0),
])
def test_integrate_1d(phi, expected):
    assert integrate_1d(phi, 0.0, 1.0) == pytest.approx(expected, abs=1e-12)


def test_integrate_1d_empty_interval():
    assert integrate_1d(np.exp, 2.0, 2.0) == 0.0


def test_raabe_integral():
    value = integrate_1d(log_gamma, 0.0, 1.0, QuadratureRule(max_depth=48))
    assert value == pytest.approx(0.5 * math.log(2.0 * math.pi), abs=1e-9)


@pytest.mark.parametrize("x", [0.25, 1.0, 3.0])
def test_log_gamma_mean_has_closed_antiderivative(x):
    value = integrate_1d(lambda z: log_gamma(x + z), 0.0, 1.0)
    assert value == pytest.approx(raabe_antiderivative(x), abs=1e-9)


def test_raabe_antiderivative_at_zero():
    assert raabe_antiderivative(0.0) == pytest.approx(0.5 * math.log(2.0 * math.pi), abs=1e-15)


def test_depth_exhaustion_raises_with_residual():
    with pytest.raises(NumericError) as info:
        integrate_1d(lambda x: np.sin(1e6 * x), 0.0, 1.0, QuadratureRule(max_depth=2))
    assert info.value.residual > 0


def test_residual_is_reported():
    found = integrate_1d_with_residual(np.cos, 0.0, 1.0)
    assert found.value == pytest.approx(math.sin(1.0), abs=1e-14)
    assert 0.0 <= found.residual < 1e-10


@pytest.mark.parametrize("phi, expected", [
    (lambda x, y: np.ones_like(y), 0.5),
    (lambda x, y: x + y, 1.0 / 3.0),
])
def test_integrate_body_over_simplex(phi, expected):
    assert integrate_body(simplex(), phi) == pytest.approx(expected, abs=1e-12)


def test_integrate_body_quarter_disk_area():
    assert integrate_body(LpBall(p=2.0), lambda x, y: np.ones_like(y)) == pytest.approx(math.pi / 4.0, abs=1e-10)


def test_integrate_body_additive_under_split():
    whole = integrate_body(simplex(), lambda x, y: x * y)
    # the same simplex with an extra knot at x = 1/2
    split = GraphBody(xs=(0.0, 0.5, 1.0), fs=(1.0, 0.5, 0.0))
    assert integrate_body(split, lambda x, y: x * y) == pytest.approx(whole, abs=1e-10)
    assert whole == pytest.approx(1.0 / 24.0, abs=1e-12)


def test_integrate_body_is_deterministic():
    phi = lambda x, y: special.xlogy(x, x + y)
    first = integrate_body(LpBall(p=3.0), phi)
    second = integrate_body(LpBall(p=3.0), phi)
    assert first == second


def test_integrate_piecewise_resolves_kinks():
    found = integrate_piecewise(lambda x: np.abs(x - 0.3), [0.0, 0.3, 1.0])
    assert found == pytest.approx(0.29, abs=1e-14)

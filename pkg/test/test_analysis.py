# -*- coding: utf-8 -*-
import math
from fractions import Fraction

import numpy as np
from numpy.testing import assert_allclose
import pytest

from olsen.analysis import (
    UNDEFINED, OlsenPair, SpectrumDomainError, ThetaFunction,
    admissible_window, entropy, legendre, legendre_point, log_ratio_chain,
    olsen_B, olsen_B_prime, olsen_b, olsen_b_prime, olsen_tau, phi_nu,
    phi_nu_prime, spectrum, spectrum_grid, tau_n, theta, tilde_params)
from olsen.measures import MeasureSpec
from utils import SKEWED, UNIFORM, mixed_spec, solved_pair


def crossing_pair():
    """Two binary curves which cross at 0 and 1."""
    return OlsenPair.from_probs((0.3, 0.7), (0.2, 0.8))


def test_theta():
    f = ThetaFunction(SKEWED)
    assert_allclose(f(0.), 1, rtol=1e-15)
    assert_allclose(f(1.), 0, atol=1e-15)
    assert_allclose(theta(SKEWED, math.log(2), 0.), 2, rtol=1e-15)
    h = 1e-6
    for q in [-3., -0.5, 0., 1.5, 4.]:
        assert_allclose(f.prime(q), (f(q + h) - f(q - h)) / (2 * h),
                        rtol=1e-7)
        assert_allclose(f.second(q),
                        (f.prime(q + h) - f.prime(q - h)) / (2 * h),
                        rtol=1e-6)
        assert f.prime(q) < 0
        assert f.second(q) > 0
    assert f.prime_bounds() == (math.log(0.1) / math.log(4),
                                math.log(0.4) / math.log(4))
    assert not f.affine


def test_uniform_theta_is_affine():
    f = ThetaFunction(UNIFORM)
    assert f.affine
    for q in [-2., 0., 3.]:
        assert_allclose(f(q), 1 - q, atol=1e-14)
        assert_allclose(f.prime(q), -1, rtol=1e-14)
        assert_allclose(f.second(q), 0, atol=1e-14)


def test_entropy():
    assert_allclose(entropy(SKEWED), 0.923219, atol=1e-5)
    assert_allclose(entropy((0.2, 0.2, 0.3, 0.3)), 0.985475, atol=1e-5)
    assert_allclose(entropy(UNIFORM), 1, rtol=1e-15)
    assert_allclose(entropy((0.5, 0.5), math.log(2)), 1, rtol=1e-15)


def test_tilde_params():
    assert_allclose(tilde_params(SKEWED, 0).array, 0.25, rtol=1e-14)
    assert_allclose(tilde_params(SKEWED, 1).array, SKEWED, rtol=1e-14)
    for q in [-1.5, 0.5, 2.5]:
        chain = log_ratio_chain(SKEWED, tilde_params(SKEWED, q))
        assert len(chain) == 3
        assert_allclose(chain, q, rtol=1e-12)
    # equal entries carry no ratio.
    assert log_ratio_chain((0.25, 0.25, 0.5), (0.2, 0.2, 0.6)) == \
        [pytest.approx(math.log(3) / math.log(2))]


def test_legendre_interior():
    f = ThetaFunction(SKEWED)
    for q in [-2., 0.7, 3.]:
        alpha = -f.prime(q)
        value, minimizer = legendre_point(f, alpha)
        assert_allclose(minimizer, q, rtol=1e-8, atol=1e-10)
        assert_allclose(value, alpha * q + f(q), rtol=1e-12)
        assert_allclose(value, entropy(tilde_params(SKEWED, q)), atol=1e-10)
        assert legendre(f, alpha) == value


def test_legendre_bounds():
    f = ThetaFunction(SKEWED)
    lo, hi = f.prime_bounds()
    assert legendre_point(f, -lo) == (0., -np.inf)
    assert legendre_point(f, -hi) == (0., np.inf)
    assert legendre_point(f, -lo + 0.1) == (UNDEFINED, None)
    assert legendre_point(f, -hi - 0.1) == (UNDEFINED, None)
    # two smallest entries leave a positive limit.
    g = ThetaFunction((0.1, 0.1, 0.4, 0.4))
    value, q = legendre_point(g, -g.prime_bounds()[0])
    assert_allclose(value, 0.5, rtol=1e-15)
    assert q == -np.inf


def test_legendre_affine():
    f = ThetaFunction(UNIFORM)
    value, q = legendre_point(f, 1.)
    assert_allclose(value, 1, rtol=1e-15)
    assert q == 0
    assert legendre(f, 0.5) is UNDEFINED
    assert not legendre(f, 0.5)


def test_crossing_derivatives():
    pair = crossing_pair()
    upper = olsen_B_prime(pair, 0.)
    lower = olsen_b_prime(pair, 0.)
    assert not upper.defined
    assert upper.value is UNDEFINED
    assert_allclose([upper.left, upper.right], [-1.322, -1.126], atol=1e-3)
    assert_allclose([lower.left, lower.right], [-1.126, -1.322], atol=1e-3)
    assert upper.to_dict()['defined'] is False
    inside = olsen_B_prime(pair, 0.5)
    assert inside.defined
    assert inside.value == pair.theta_a.prime(0.5) or \
        inside.value == pair.theta_b.prime(0.5)


def test_envelopes():
    pair = crossing_pair()
    for q in np.linspace(-3, 3, 13):
        assert olsen_B(pair, q) == max(pair.theta_a(q), pair.theta_b(q))
        assert olsen_b(pair, q) == min(pair.theta_a(q), pair.theta_b(q))
        assert olsen_b(pair, q) <= olsen_B(pair, q)
        assert pair.upper(q) == olsen_tau(pair, q)


def test_tau_n():
    spec = MeasureSpec.single(SKEWED)
    for n in [1, 5, 30]:
        assert_allclose(tau_n(spec, 2., n), ThetaFunction(SKEWED)(2.),
                        rtol=1e-12)
    with pytest.raises(ValueError):
        tau_n(spec, 2., 0)


def test_tau_n_between_envelopes():
    spec = MeasureSpec.single(SKEWED, UNIFORM)
    pair = OlsenPair.from_spec(spec)
    for q in [-2., -0.5, 0.5, 2.]:
        for n in range(1, 50):
            value = tau_n(spec, q, n)
            assert olsen_b(pair, q) - 1e-12 <= value
            assert value <= olsen_B(pair, q) + 1e-12


def test_admissible_window():
    with pytest.raises(SpectrumDomainError):
        admissible_window(OlsenPair.from_spec(mixed_spec()))
    pair = OlsenPair.from_probs(SKEWED, UNIFORM)
    # the uniform curve is a line: no level set is nonempty.
    lo, hi = admissible_window(pair)
    assert_allclose([lo, hi], [1, 1], rtol=1e-14)
    with pytest.raises(SpectrumDomainError):
        spectrum(pair, 1.)


def test_tau_n_follows_the_epoch():
    spec = MeasureSpec.single(SKEWED, UNIFORM)
    schedule = spec.space.schedule
    theta_a, theta_b = ThetaFunction(SKEWED), ThetaFunction(UNIFORM)
    # the share of positions 1..T_{k+1} - 1 outside epoch k's alphabet.
    shares = [Fraction(19, 119), Fraction(100, 719), Fraction(619, 5039),
              Fraction(4420, 40319), Fraction(35899, 362879)]
    for q in [2., -1.]:
        gap = abs(theta_a(q) - theta_b(q))
        distances = []
        for k, share in zip(range(4, 9), shares):
            n = schedule[k + 1] - 1
            dominant = theta_a if k % 2 else theta_b
            distance = abs(tau_n(spec, q, n) - dominant(q))
            assert_allclose(distance, float(share) * gap, rtol=1e-9)
            assert share < Fraction(11, 10 * (k + 1))
            distances.append(distance)
        assert all(x > y for x, y in zip(distances, distances[1:]))


def test_spectrum_of_crossing_pair():
    pair = crossing_pair()
    lo, hi = admissible_window(pair)
    assert_allclose([lo, hi], [-math.log(0.7, 2), -math.log(0.3, 2)],
                    rtol=1e-14)
    # both minimizers lie in (0, 1) where the curves have swapped roles.
    with pytest.raises(SpectrumDomainError):
        spectrum(pair, 1.)
    with pytest.raises(SpectrumDomainError):
        spectrum_grid(pair, [0.9, 1.], threads=2)


def test_spectrum_outside_window():
    pair = OlsenPair.from_probs(*solved_pair())
    lo, hi = admissible_window(pair)
    assert lo < hi
    for alpha in [lo, hi, lo - 0.1, hi + 0.1]:
        with pytest.raises(SpectrumDomainError):
            spectrum(pair, alpha)


def test_solved_pair_envelopes():
    pair = OlsenPair.from_probs(*solved_pair())
    qs = np.linspace(-10, 10, 400)
    B = np.array([olsen_B(pair, q) for q in qs])
    b = np.array([olsen_b(pair, q) for q in qs])
    assert (np.diff(B) <= 0).all()
    assert (np.diff(b) <= 0).all()
    assert (B[:-2] + B[2:] - 2 * B[1:-1] >= -1e-12).all()
    assert (b <= B).all()
    for f in [olsen_B, olsen_b]:
        assert_allclose(f(pair, 0.), 1, rtol=1e-12)
        assert_allclose(f(pair, 1.), 0, atol=1e-12)


def test_solved_pair_spectrum():
    probs_a, probs_b = solved_pair()
    pair = OlsenPair.from_probs(probs_a, probs_b)
    if probs_a.smallest < probs_b.smallest:
        upper, lower = probs_a, probs_b
    else:
        upper, lower = probs_b, probs_a
    lo, hi = admissible_window(pair)
    alphas = np.linspace(lo, hi, 102)[1:-1]
    points = spectrum_grid(pair, alphas, threads=2)
    assert len(points) == 100
    for alpha, point in zip(alphas, points):
        assert point.alpha == alpha
        assert point.dim <= point.Dim + 1e-12
        assert_allclose(point.Dim, entropy(tilde_params(upper, point.q_a)),
                        atol=1e-10)
        assert_allclose(point.dim, entropy(tilde_params(lower, point.q_b)),
                        atol=1e-10)
        assert 0 <= point.dim <= 1
        assert 0 <= point.Dim <= 1


def test_phi_nu():
    f = ThetaFunction(SKEWED)
    q = 0.8
    tilde = tilde_params(SKEWED, q)
    for x in [-1., 0., 0.5, 2.]:
        assert_allclose(phi_nu(SKEWED, SKEWED, tilde, tilde, x),
                        f(q + x) - f(q), atol=1e-13)
        slope = phi_nu_prime(SKEWED, SKEWED, tilde, tilde, x)
        assert slope.defined
        assert_allclose(slope.value, f.prime(q + x), rtol=1e-12)
    assert_allclose(phi_nu(SKEWED, SKEWED, tilde, tilde, 0.), 0, atol=1e-14)


def test_phi_nu_branches():
    probs_a, probs_b = (0.3, 0.7), (0.2, 0.8)
    tilde_a, tilde_b = tilde_params(probs_a, 1), tilde_params(probs_b, 1)
    # with untilted weights the branches tie at x = 0 and x = -1.
    assert not phi_nu_prime(probs_a, probs_b, tilde_a, tilde_b, 0.).defined
    assert phi_nu_prime(probs_a, probs_b, tilde_a, tilde_b, 1.).defined
    slope = phi_nu_prime(probs_a, probs_b, tilde_a, tilde_b, -1.)
    assert not slope.defined
    assert slope.left < slope.right

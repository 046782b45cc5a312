# -*- coding: utf-8 -*-
from fractions import Fraction
import math

import numpy as np
from numpy.testing import assert_allclose
import pytest
from scipy.special import logsumexp

from olsen.analysis import tau_n
from olsen.graycode import (
    CODES, CadicInterval, PushforwardMeasure, ball_mass, coded_digits, decode,
    doubling_ceiling, doubling_estimate, encode, gamma_interval, gray,
    gray_alt, gray_alt_inverse, gray_inverse, iter_level_log_masses,
    level_log_masses, log_pushforward_mass, partition_exponent,
    pushforward_mass)
from olsen.measures import MeasureSpec, log_cylinder_mass
from olsen.symbolic import (
    MixedSpaceSpec, Word, enumerate_index, mixed_distance, word_from_index,
    words)
from utils import SKEWED, UNIFORM, mixed_spec, solved_spec


def test_gray_examples():
    assert gray(Word.parse('10', 2)) == Word.parse('11', 2)
    assert gray(Word.parse('12', 3)) == Word.parse('11', 3)
    assert gray_alt(Word.parse('10', 3)) == Word.parse('12', 3)
    assert gray_alt(Word.parse('12', 3)) == Word.parse('10', 3)
    assert gray(Word((), 3)) == Word((), 3)
    assert gray_inverse(Word.parse('11', 3)) == Word.parse('12', 3)
    assert gray_alt_inverse(Word.parse('10', 3)) == Word.parse('12', 3)


def test_binary_codes_agree():
    for n in range(1, 7):
        for w in words(2, n):
            assert gray(w) == gray_alt(w)


def test_dispatch():
    w = Word.parse('0312', 4)
    assert encode('standard', w) == gray(w)
    assert encode('alternative', w) == gray_alt(w)
    assert encode('identity', w) is w
    for code in CODES:
        assert decode(code, encode(code, w)) == w
        assert gray_inverse(encode(code, w), code=code) == w
    with pytest.raises(ValueError):
        encode('reflected', w)
    with pytest.raises(ValueError):
        decode('reflected', w)
    with pytest.raises(ValueError):
        coded_digits('reflected', np.arange(4), 0, 4)


def test_coded_digits_match_codes():
    c = 3
    parents = np.arange(c ** 3)
    for code in CODES:
        for e in range(c):
            digits = coded_digits(code, parents, e, c)
            expected = [encode(code, word_from_index(p * c + e, 4, c))[-1]
                        for p in parents]
            assert digits.tolist() == expected


@pytest.mark.parametrize('code', ['standard', 'alternative'])
@pytest.mark.parametrize('c', [2, 3, 4])
def test_gray_code_properties(code, c):
    for n in range(1, 9):
        level = list(words(c, n))
        coded = [encode(code, w) for w in level]
        # bijective on the level.
        assert len(set(coded)) == c ** n
        for w, v in zip(level, coded):
            assert decode(code, v) == w
            # prefixes are coded first.
            if n > 1:
                assert v[:n - 1] == encode(code, w[:n - 1])
        # index-adjacent words differ in exactly one digit.
        for v, u in zip(coded, coded[1:]):
            assert sum(x != y for x, y in zip(v, u)) == 1


@pytest.mark.parametrize('code', ['standard', 'alternative'])
@pytest.mark.parametrize('c', [2, 3, 4])
def test_gray_code_isometry(code, c):
    rng = np.random.default_rng(5)
    spec = MixedSpaceSpec(c)
    for __ in range(10 ** 4):
        x, y = rng.integers(0, c, (2, 10))
        shared = rng.integers(0, 11)
        y[:shared] = x[:shared]
        w, v = Word(x.tolist(), c), Word(y.tolist(), c)
        assert mixed_distance(encode(code, w), encode(code, v), spec) == \
            mixed_distance(w, v, spec)


def test_cadic_interval():
    interval = CadicInterval(2, 5, 3)
    assert (interval.lower, interval.upper) == (Fraction(5, 9), Fraction(2, 3))
    assert interval.parent == CadicInterval(1, 1, 3)
    assert interval in interval.parent.children
    assert CadicInterval(0, 0, 3).parent is None
    assert interval.word() == Word.parse('12', 3)
    assert gamma_interval(Word.parse('12', 3)) == interval
    assert enumerate_index(interval.word()) == 5
    assert interval.to_dict() == {'level': 2, 'index': 5, 'base': 3,
                                  'lower': '5/9', 'upper': '2/3'}
    with pytest.raises(ValueError):
        CadicInterval(1, 3, 3)
    with pytest.raises(ValueError):
        CadicInterval(-1, 0, 3)


def test_cadic_membership():
    assert CadicInterval.containing(0.5, 1, 2) == CadicInterval(1, 1, 2)
    assert CadicInterval.containing(1, 2, 2) == CadicInterval(2, 3, 2)
    assert CadicInterval.containing('1/3', 1, 3) == CadicInterval(1, 1, 3)
    assert not CadicInterval(1, 0, 2).contains(0.5)
    assert CadicInterval(1, 1, 2).contains(0.5)
    # the last interval is closed.
    assert CadicInterval(1, 1, 2).contains(1)
    with pytest.raises(ValueError):
        CadicInterval.containing(1.5, 1, 2)


def test_pushforward_measure():
    with pytest.raises(ValueError):
        PushforwardMeasure(mixed_spec())
    with pytest.raises(ValueError):
        PushforwardMeasure(MeasureSpec.single(SKEWED), code='reflected')
    pf = PushforwardMeasure(MeasureSpec.single(SKEWED, UNIFORM))
    assert pf.c == 4
    assert_allclose(pushforward_mass(pf, CadicInterval(1, 3, 4)), 0.4,
                    rtol=1e-14)
    # index 5 is the word 11, coded as 10.
    assert_allclose(pushforward_mass(pf, CadicInterval(2, 5, 4)), 0.05,
                    rtol=1e-14)
    with pytest.raises(ValueError):
        log_pushforward_mass(pf, CadicInterval(1, 1, 2))


@pytest.mark.parametrize('code', CODES)
def test_level_masses(code):
    spec = solved_spec()
    pf = PushforwardMeasure(spec, code)
    assert level_log_masses(pf, 0).tolist() == [0.]
    for level, masses in iter_level_log_masses(pf, 6):
        assert len(masses) == 4 ** level
        assert_allclose(logsumexp(masses), 0, atol=1e-12)
    masses = level_log_masses(pf, 3)
    expected = [log_pushforward_mass(pf, CadicInterval(3, i, 4))
                for i in range(4 ** 3)]
    assert_allclose(masses, expected, rtol=1e-12)
    # the coding only permutes the cylinders of a level.
    cylinders = [log_cylinder_mass(spec, w) for w in words(4, 3)]
    assert_allclose(sorted(masses), sorted(cylinders), rtol=1e-12)
    with pytest.raises(ValueError):
        list(iter_level_log_masses(pf, 13))


def test_partition_exponent():
    spec = solved_spec()
    pf = PushforwardMeasure(spec)
    for q in [-2., 0.5, 3.]:
        for n in range(1, 7):
            assert_allclose(partition_exponent(pf, q, n), tau_n(spec, q, n),
                            rtol=1e-12)
    with pytest.raises(ValueError):
        partition_exponent(pf, 1., 0)


def test_ball_mass():
    pf = PushforwardMeasure(MeasureSpec.single(UNIFORM))
    # a radius of 1/16 is read on level 1, where the ball meets two
    # intervals.
    assert_allclose(ball_mass(pf, 0.25, 1 / 16), 0.5, rtol=1e-14)
    assert_allclose(ball_mass(pf, 0.125, 1 / 16), 0.25, rtol=1e-14)
    assert ball_mass(pf, 0.5, 0.5) == 1
    skewed = PushforwardMeasure(MeasureSpec.single(SKEWED))
    assert_allclose(ball_mass(skewed, 0.25, 1 / 16), 0.3, rtol=1e-14)
    with pytest.raises(ValueError):
        ball_mass(pf, 0.5, 0)


def test_doubling_ceiling():
    assert doubling_ceiling(2) == 14
    assert doubling_ceiling(4) == 12
    assert doubling_ceiling(3) == 14
    pf = PushforwardMeasure(MeasureSpec.single(SKEWED))
    for level in [0, 13]:
        with pytest.raises(ValueError):
            doubling_estimate(pf, level)


def test_doubling_saturation():
    pf = PushforwardMeasure(solved_spec())
    messages = []
    report = doubling_estimate(pf, 12, log=messages.append)
    assert len(report.ratios) == 12
    assert len(messages) == 12
    assert report.code == 'standard'
    for ratio in report.ratios:
        assert ratio <= report.bound * (1 + 1e-12)
    # position 6 opens an epoch where a 3 to 0 step reaches the bound.
    assert_allclose(report.ratios[5:], report.bound, rtol=1e-9)
    assert report.running == sorted(report.running)
    assert report.supremum == max(report.ratios)
    assert float(report) == report.supremum


def test_alternative_code_is_doubling():
    pf = PushforwardMeasure(solved_spec(), 'alternative')
    report = doubling_estimate(pf, 8)
    assert report.supremum <= report.bound * (1 + 1e-12)


def test_identity_code_is_not_doubling():
    spec = solved_spec()
    identity = doubling_estimate(PushforwardMeasure(spec, 'identity'), 6)
    assert identity.supremum > identity.bound
    assert identity.ratios == sorted(identity.ratios)
    assert identity.ratios[-1] > 10 * identity.bound
    data = identity.to_dict()
    assert data['code'] == 'identity'
    assert len(data['ratios']) == 6
    assert math.isfinite(data['supremum'])

# -*- coding: utf-8 -*-
"""
    olsen.graycode
    ~~~~~~~~~~~~~~

    Generalized Gray codes and the image of a measure on ``[0, 1]``.

    A word of length ``n`` over ``c`` letters is sent to the ``c``-adic
    interval of its index.  Pushing a measure through a Gray code first makes
    index-adjacent intervals carry cylinders differing in one digit, so
    their masses stay comparable at every level.

"""
from __future__ import absolute_import, division
from fractions import Fraction
import math

import numpy as np
from scipy.special import logsumexp
from valuedispatch import valuedispatch

from .measures import log_cylinder_mass
from .records import Record
from .symbolic import Word, enumerate_index, word_from_index
from .utils import LOG


__all__ = ['CODES', 'gray', 'gray_inverse', 'gray_alt', 'gray_alt_inverse',
           'encode', 'decode', 'coded_digits', 'CadicInterval',
           'gamma_interval', 'PushforwardMeasure', 'log_pushforward_mass',
           'pushforward_mass', 'iter_level_log_masses', 'level_log_masses',
           'doubling_ceiling', 'DoublingReport', 'doubling_estimate',
           'partition_exponent', 'ball_mass']


#: The code kinds.  ``identity`` skips coding, for comparison.
CODES = ('standard', 'alternative', 'identity')

#: Exhaustive level sweeps keep at most this many intervals.
MAX_INTERVALS = 2 ** 24


def gray(w):
    """Keeps the first digit and replaces every other by its difference
    with the previous one, modulo ``c``.
    """
    if not len(w):
        return w
    c = w.alphabet_size
    digits = w.digits
    coded = [(x - y) % c for x, y in zip(digits, (0,) + digits[:-1])]
    return Word(coded, c)


def gray_inverse(w, code='standard'):
    """Inverts :func:`gray`, or another code given by `code`."""
    if code != 'standard':
        return decode(code, w)
    if not len(w):
        return w
    c = w.alphabet_size
    digits, last = [], 0
    for k in w:
        last = (k + last) % c
        digits.append(last)
    return Word(digits, c)


def gray_alt(w):
    """The reflected code: a digit is kept after a prefix of even index and
    replaced by ``c - 1 - digit`` after one of odd index.
    """
    if not len(w):
        return w
    c = w.alphabet_size
    coded, parity = [], 0
    for digit in w:
        coded.append(c - 1 - digit if parity else digit)
        parity = (parity * c + digit) % 2
    return Word(coded, c)


def gray_alt_inverse(w):
    if not len(w):
        return w
    c = w.alphabet_size
    digits, parity = [], 0
    for k in w:
        digit = c - 1 - k if parity else k
        digits.append(digit)
        parity = (parity * c + digit) % 2
    return Word(digits, c)


@valuedispatch
def encode(code, w):
    raise ValueError('Unknown code: {0!r}'.format(code))


@encode.register('standard')
def encode_standard(_, w):
    return gray(w)


@encode.register('alternative')
def encode_alternative(_, w):
    return gray_alt(w)


@encode.register('identity')
def encode_identity(_, w):
    return w


@valuedispatch
def decode(code, w):
    raise ValueError('Unknown code: {0!r}'.format(code))


@decode.register('standard')
def decode_standard(_, w):
    return gray_inverse(w)


@decode.register('alternative')
def decode_alternative(_, w):
    return gray_alt_inverse(w)


@decode.register('identity')
def decode_identity(_, w):
    return w


@valuedispatch
def coded_digits(code, parents, e, c):
    """The coded last digit of the children ``parent * c + e`` of the
    prefixes with indices `parents`.
    """
    raise ValueError('Unknown code: {0!r}'.format(code))


@coded_digits.register('standard')
def coded_digits_standard(_, parents, e, c):
    return (e - parents % c) % c


@coded_digits.register('alternative')
def coded_digits_alternative(_, parents, e, c):
    return np.where(parents % 2, c - 1 - e, e)


@coded_digits.register('identity')
def coded_digits_identity(_, parents, e, c):
    return np.full(parents.shape, e, dtype=np.intp)


class CadicInterval(object):
    """``[i c^-n, (i+1) c^-n]`` with exact endpoints.  Membership is
    half-open except for the last interval of a level.
    """

    __slots__ = ('level', 'index', 'base')

    def __init__(self, level, index, base):
        if level < 0 or base < 2:
            raise ValueError('Invalid level or base')
        if not 0 <= index < base ** level:
            raise ValueError('Index {0} is out of level {1} over {2} '
                             'letters'.format(index, level, base))
        self.level = int(level)
        self.index = int(index)
        self.base = int(base)

    @classmethod
    def containing(cls, x, level, base):
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ValueError('{0} is outside [0, 1]'.format(x))
        count = base ** level
        return cls(level, min(int(x * count), count - 1), base)

    @property
    def lower(self):
        return Fraction(self.index, self.base ** self.level)

    @property
    def upper(self):
        return Fraction(self.index + 1, self.base ** self.level)

    @property
    def last(self):
        return self.index == self.base ** self.level - 1

    def contains(self, x):
        x = Fraction(x)
        if self.last:
            return self.lower <= x <= self.upper
        return self.lower <= x < self.upper

    @property
    def parent(self):
        if not self.level:
            return None
        return CadicInterval(self.level - 1, self.index // self.base,
                             self.base)

    @property
    def children(self):
        return [CadicInterval(self.level + 1, self.index * self.base + e,
                              self.base) for e in range(self.base)]

    def word(self):
        """The word sent onto this interval."""
        return word_from_index(self.index, self.level, self.base)

    def to_dict(self):
        return {'level': self.level, 'index': self.index, 'base': self.base,
                'lower': str(self.lower), 'upper': str(self.upper)}

    def __eq__(self, other):
        if not isinstance(other, CadicInterval):
            return NotImplemented
        return (self.level, self.index, self.base) == \
            (other.level, other.index, other.base)

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash((self.level, self.index, self.base))

    def __repr__(self):
        return '<CadicInterval [{0}, {1}]>'.format(self.lower, self.upper)


def gamma_interval(w):
    return CadicInterval(len(w), enumerate_index(w), w.alphabet_size)


class PushforwardMeasure(object):
    """The image on ``[0, 1]`` of a measure over one alphabet size."""

    __slots__ = ('source', 'code')

    def __init__(self, source, code='standard'):
        if not source.space.uniform:
            raise ValueError('The pushforward needs equal alphabets, not '
                             '{0} and {1}'.format(source.space.c1,
                                                  source.space.c2))
        if code not in CODES:
            raise ValueError('Unknown code: {0!r}'.format(code))
        self.source = source
        self.code = code

    @property
    def c(self):
        return self.source.space.c

    def __repr__(self):
        return '<PushforwardMeasure {0} {1!r}>'.format(self.code, self.source)


def log_pushforward_mass(pf, interval):
    if interval.base != pf.c:
        raise ValueError('The interval is {0}-adic but the measure lives on '
                         '{1} letters'.format(interval.base, pf.c))
    w = word_from_index(interval.index, interval.level, pf.c)
    return log_cylinder_mass(pf.source, encode(pf.code, w))


def pushforward_mass(pf, interval):
    return math.exp(log_pushforward_mass(pf, interval))


def iter_level_log_masses(pf, max_level):
    """Yields ``(level, masses)`` for levels ``1..max_level``, the log masses
    of all intervals of a level in index order.
    """
    c = pf.c
    if c ** max_level > MAX_INTERVALS:
        raise ValueError('Level {0} over {1} letters has too many '
                         'intervals'.format(max_level, c))
    masses = np.zeros(1)
    for level in range(1, max_level + 1):
        parents = np.arange(c ** (level - 1))
        log_p = pf.source.probs_at(level).logs
        out = np.empty(c ** level)
        for e in range(c):
            out[e::c] = masses + log_p[coded_digits(pf.code, parents, e, c)]
        masses = out
        yield level, masses


def level_log_masses(pf, level):
    if level == 0:
        return np.zeros(1)
    for __, masses in iter_level_log_masses(pf, level):
        pass
    return masses


def doubling_ceiling(c):
    """The deepest level swept exhaustively over `c` letters."""
    return min(14, int(math.floor(math.log(MAX_INTERVALS) / math.log(c) +
                                  1e-9)))


class DoublingReport(Record):

    __slots__ = ('ratios', 'running', 'supremum', 'bound', 'code')

    def __float__(self):
        return float(self.supremum)


def doubling_estimate(pf, max_level, log=LOG):
    """The largest mass ratio of adjacent intervals per level, with the
    odds-ratio bound ``max p / min p`` of the probability vectors.
    """
    ceiling = doubling_ceiling(pf.c)
    if not 1 <= max_level <= ceiling:
        raise ValueError('max_level must be in 1..{0}'.format(ceiling))
    ratios, running = [], []
    for level, masses in iter_level_log_masses(pf, max_level):
        ratio = math.exp(float(np.max(np.abs(np.diff(masses)))))
        ratios.append(ratio)
        running.append(max(ratio, running[-1]) if running else ratio)
        log('level {0}: ratio {1!r}'.format(level, ratio))
    source = pf.source
    bound = max(probs.largest / probs.smallest
                for probs in (source.probs_a, source.probs_b))
    return DoublingReport(ratios=ratios, running=running,
                          supremum=running[-1], bound=bound, code=pf.code)


def partition_exponent(pf, q, n):
    """``log Σ ν(I)^q / (n log c)`` over the level-`n` intervals."""
    if n < 1:
        raise ValueError('n must be positive')
    masses = level_log_masses(pf, n)
    return float(logsumexp(q * masses)) / (n * math.log(pf.c))


def ball_mass(pf, x, r):
    """``ν(B(x, r))`` through the intervals of the deepest level whose
    length is at least ``2r``; the ball meets at most two of them.
    """
    if r <= 0:
        raise ValueError('The radius must be positive')
    if 2 * r >= 1:
        return 1.
    c = pf.c
    level = int(math.floor(math.log(1 / (2 * r)) / math.log(c) + 1e-12))
    lo = CadicInterval.containing(max(0, x - r), level, c)
    hi = CadicInterval.containing(min(1, x + r), level, c)
    log_masses = [log_pushforward_mass(pf, CadicInterval(level, index, c))
                  for index in range(lo.index, hi.index + 1)]
    return math.exp(float(logsumexp(log_masses)))

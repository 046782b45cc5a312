# -*- coding: utf-8 -*-
"""
    olsen.measures
    ~~~~~~~~~~~~~~

    Inhomogeneous multinomial measures on mixed symbolic spaces, their
    finite-depth tilted companions and Monte-Carlo sampling of words.

    A digit at a position of an odd epoch is weighted by the first
    probability vector and one of an even epoch by the second.  Every mass
    is kept in log space; depths of a few thousand digits underflow any
    linear representation.

"""
from __future__ import absolute_import, division
import math

import numpy as np
from numpy.random import Generator, PCG64
from scipy.special import logsumexp

from .symbolic import MixedSpaceSpec, EpochSchedule, Word, WordError


__all__ = ['ProbabilityError', 'BoundaryProbabilityError',
           'ProbabilitySumError', 'ProbabilityVector', 'MeasureSpec',
           'TiltedMeasureParams', 'log_cylinder_mass', 'cylinder_mass',
           'log_power_sum', 'log_partition', 'log_tilted_mass',
           'tilted_mass', 'make_rng', 'sample_words', 'sample_word',
           'running_exponent', 'running_exponents']


#: How far the entries of a probability vector may sum away from 1.
SUM_TOLERANCE = 1e-12


class ProbabilityError(ValueError):
    pass


class BoundaryProbabilityError(ProbabilityError):
    """An entry is not strictly between 0 and 1."""


class ProbabilitySumError(ProbabilityError):
    """The entries do not sum to 1."""


class ProbabilityVector(object):
    """Entries ``p_1..p_c`` in the open interval (0, 1) summing to 1."""

    __slots__ = ('entries', '_array', '_logs')

    def __init__(self, entries):
        if isinstance(entries, ProbabilityVector):
            entries = entries.entries
        try:
            entries = tuple(float(p) for p in entries)
        except (TypeError, ValueError):
            raise ProbabilityError('Probabilities must be numbers')
        if len(entries) < 2:
            raise ProbabilityError('At least 2 probabilities are required')
        for i, p in enumerate(entries, 1):
            if not 0 < p < 1:
                raise BoundaryProbabilityError(
                    'p_{0}={1!r} is not inside (0, 1)'.format(i, p))
        total = math.fsum(entries)
        if abs(total - 1) > SUM_TOLERANCE:
            raise ProbabilitySumError(
                'Probabilities sum to {0!r}, not 1'.format(total))
        self.entries = entries
        self._array = np.array(entries)
        self._array.flags.writeable = False
        self._logs = np.log(self._array)
        self._logs.flags.writeable = False

    @classmethod
    def uniform(cls, c):
        return cls([1 / c] * c)

    @property
    def array(self):
        return self._array

    @property
    def logs(self):
        return self._logs

    @property
    def smallest(self):
        return min(self.entries)

    @property
    def largest(self):
        return max(self.entries)

    @property
    def is_uniform(self):
        return self.largest - self.smallest <= SUM_TOLERANCE

    def same_multiset(self, other, tolerance=SUM_TOLERANCE):
        """Whether `other` is a permutation of this vector."""
        if len(self) != len(other):
            return False
        pairs = zip(sorted(self.entries), sorted(other.entries))
        return all(abs(x - y) <= tolerance for x, y in pairs)

    def tolist(self):
        return list(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __eq__(self, other):
        if not isinstance(other, ProbabilityVector):
            return NotImplemented
        return self.entries == other.entries

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return '<ProbabilityVector {0}>'.format(
            ', '.join('{0:.6g}'.format(p) for p in self.entries))


class MeasureSpec(object):
    """A mixed space with the probability vector of each alphabet."""

    __slots__ = ('space', 'probs_a', 'probs_b')

    def __init__(self, space, probs_a, probs_b=None):
        probs_a = ProbabilityVector(probs_a)
        probs_b = probs_a if probs_b is None else ProbabilityVector(probs_b)
        if len(probs_a) != space.c1:
            raise ProbabilityError('probs_a has {0} entries but c1={1}'.format(
                len(probs_a), space.c1))
        if len(probs_b) != space.c2:
            raise ProbabilityError('probs_b has {0} entries but c2={1}'.format(
                len(probs_b), space.c2))
        self.space = space
        self.probs_a = probs_a
        self.probs_b = probs_b

    @classmethod
    def single(cls, probs_a, probs_b=None, schedule=None):
        """Builds the space from the lengths of the vectors."""
        probs_a = ProbabilityVector(probs_a)
        probs_b = probs_a if probs_b is None else ProbabilityVector(probs_b)
        space = MixedSpaceSpec(len(probs_a), len(probs_b), schedule)
        return cls(space, probs_a, probs_b)

    @classmethod
    def from_config(cls, config):
        """Reads ``{"c1", "c2", "probs_a", "probs_b", "schedule"}``.  Missing
        alphabet sizes are taken from the vectors.
        """
        try:
            probs_a = ProbabilityVector(config['probs_a'])
        except KeyError:
            raise ProbabilityError('The measure requires probs_a')
        probs_b = config.get('probs_b')
        probs_b = probs_a if probs_b is None else ProbabilityVector(probs_b)
        schedule = config.get('schedule')
        if schedule is not None:
            schedule = EpochSchedule.from_config(schedule)
        c1 = config.get('c1') or len(probs_a)
        c2 = config.get('c2') or len(probs_b)
        return cls(MixedSpaceSpec(c1, c2, schedule), probs_a, probs_b)

    def to_config(self):
        return {'c1': self.space.c1, 'c2': self.space.c2,
                'probs_a': self.probs_a.tolist(),
                'probs_b': self.probs_b.tolist(),
                'schedule': self.space.schedule.to_config()}

    def probs_at(self, position):
        if self.space.uses_first(position):
            return self.probs_a
        return self.probs_b

    def log_digit_masses(self, digits):
        """The log weight of every digit of `digits`, a sequence or an array
        whose last axis runs over positions ``1..n``.
        """
        digits = np.asarray(digits, dtype=np.intp)
        n = digits.shape[-1] if digits.ndim else 0
        if self.space.uniform and self.probs_a == self.probs_b:
            return self.probs_a.logs[digits]
        mask = self.space.position_mask(n)
        log_a = self.probs_a.logs[np.minimum(digits, self.space.c1 - 1)]
        log_b = self.probs_b.logs[np.minimum(digits, self.space.c2 - 1)]
        return np.where(mask, log_a, log_b)

    def __eq__(self, other):
        if not isinstance(other, MeasureSpec):
            return NotImplemented
        return (self.space == other.space and
                self.probs_a == other.probs_a and
                self.probs_b == other.probs_b)

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash((self.space, self.probs_a, self.probs_b))

    def __repr__(self):
        return '<MeasureSpec a={0!r} b={1!r} {2!r}>'.format(
            self.probs_a.entries, self.probs_b.entries, self.space.schedule)


def log_cylinder_mass(spec, w):
    """``log μ(w)``; 0 for the empty word."""
    if isinstance(w, Word):
        spec.space.check(w)
    else:
        w = spec.space.word(w)
    if not len(w):
        return 0.0
    return math.fsum(spec.log_digit_masses(w.digits))


def cylinder_mass(spec, w):
    return math.exp(log_cylinder_mass(spec, w))


def log_power_sum(probs, q):
    """``log Σ p_i^q``."""
    if isinstance(probs, ProbabilityVector):
        logs = probs.logs
    else:
        logs = np.log(np.asarray(probs, dtype=float))
    return float(logsumexp(q * logs))


def log_partition(spec, q, n):
    """``log Σ μ(w)^q`` over the words of length `n`."""
    first = spec.space.count_N(n)
    total = first * log_power_sum(spec.probs_a, q)
    if n > first:
        total += (n - first) * log_power_sum(spec.probs_b, q)
    return total


class TiltedMeasureParams(object):
    """The measure ``ν_n(w) = μ(w)^q / Σ_{|v|=n} μ(v)^q`` on level `depth`
    words, spread uniformly below that level.
    """

    __slots__ = ('base', 'q', 'depth', 'log_normalizer')

    def __init__(self, base, q, depth):
        if depth < 1:
            raise ValueError('The depth must be positive')
        self.base = base
        self.q = float(q)
        self.depth = int(depth)
        self.log_normalizer = log_partition(base, self.q, self.depth)

    @property
    def tau(self):
        """``τ_n(q)``; the normalizer is ``scale^τ`` for the level scale."""
        return self.log_normalizer / self.base.space.log_scale(self.depth)

    def __repr__(self):
        return '<TiltedMeasureParams q={0!r} n={1}>'.format(self.q,
                                                           self.depth)


def log_tilted_mass(params, x):
    spec = params.base
    if not isinstance(x, Word):
        x = spec.space.word(x)
    n, m = params.depth, len(x)
    if m <= n:
        # the level-n masses below x sum to μ(x)^q times the partition of
        # the positions m+1..n.
        head = params.q * log_cylinder_mass(spec, x)
        tail = log_partition(spec, params.q, n) - \
            log_partition(spec, params.q, m)
        return head + tail - params.log_normalizer
    head = log_tilted_mass(params, x[:n])
    spec.space.check(x)
    sizes = spec.space.alphabet_sizes(m)[n:]
    return head - math.fsum(math.log(c) for c in sizes)


def tilted_mass(params, x):
    return math.exp(log_tilted_mass(params, x))


def make_rng(seed):
    """The generator used for sampling: PCG64 seeded by `seed`."""
    return Generator(PCG64(seed))


def sample_words(spec, depth, count, rng):
    """Draws `count` independent words of length `depth` from μ as a
    ``(count, depth)`` array of digits.
    """
    if depth < 1:
        raise ValueError('The depth must be positive')
    u = rng.random((count, depth))
    cdf_a = np.cumsum(spec.probs_a.array)
    cdf_b = np.cumsum(spec.probs_b.array)
    digits_a = np.minimum(np.searchsorted(cdf_a, u, side='right'),
                          spec.space.c1 - 1)
    if spec.space.uniform and spec.probs_a == spec.probs_b:
        return digits_a
    digits_b = np.minimum(np.searchsorted(cdf_b, u, side='right'),
                          spec.space.c2 - 1)
    return np.where(spec.space.position_mask(depth), digits_a, digits_b)


def sample_word(spec, depth, seed):
    digits = sample_words(spec, depth, 1, make_rng(seed))[0]
    return spec.space.word(digits.tolist())


def running_exponent(spec, x, n):
    """``-log μ(x|n)`` over ``-log`` of the level-`n` scale."""
    if not 1 <= n <= len(x):
        raise WordError('n={0} is out of 1..{1}'.format(n, len(x)))
    return -log_cylinder_mass(spec, x[:n]) / spec.space.log_scale(n)


def running_exponents(spec, x):
    """The running exponents at every depth ``1..|x|``.  `x` may be a word,
    or an array of digit rows to get one trajectory per row.
    """
    digits = np.asarray(x.digits if isinstance(x, Word) else x,
                        dtype=np.intp)
    n = digits.shape[-1]
    log_masses = np.cumsum(spec.log_digit_masses(digits), axis=-1)
    space = spec.space
    mask = space.position_mask(n)
    scales = np.cumsum(np.where(mask, math.log(space.c1),
                                math.log(space.c2)))
    return -log_masses / scales

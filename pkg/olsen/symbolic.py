# -*- coding: utf-8 -*-
"""
    olsen.symbolic
    ~~~~~~~~~~~~~~

    Words, epoch schedules and the ultrametric of ordinary and mixed
    symbolic spaces.

    A mixed space alternates between two alphabets along the positions of
    a word.  The switching positions come from an epoch schedule
    ``T_1 = 1 < T_2 < ...``: position ``j`` lies in epoch ``k`` when
    ``T_k <= j < T_{k+1}``.  Odd epochs use the first alphabet and even
    epochs the second one.

"""
from __future__ import absolute_import, division
from bisect import bisect_right
from itertools import product
import math
import threading

import numpy as np
from valuedispatch import valuedispatch


__all__ = ['WordError', 'ScheduleError', 'Alphabet', 'Word', 'EpochSchedule',
           'MixedSpaceSpec', 'schedule_from_config', 'enumerate_index',
           'word_from_index', 'words', 'count_N', 'mixed_distance',
           'log_mixed_distance']


class WordError(ValueError):
    pass


class ScheduleError(ValueError):
    pass


class Alphabet(object):
    """The letters ``0..size-1``."""

    __slots__ = ('size',)

    def __init__(self, size):
        if isinstance(size, Alphabet):
            size = size.size
        if isinstance(size, bool) or int(size) != size or size < 2:
            raise WordError('Alphabet size must be an integer >= 2: '
                            '{0!r}'.format(size))
        self.size = int(size)

    def __contains__(self, letter):
        return 0 <= letter < self.size

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.size == self.size

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((Alphabet, self.size))

    def __repr__(self):
        return '<Alphabet c={0}>'.format(self.size)


class Word(object):
    """A finite word.

    `alphabet` is either one alphabet size shared by every position or the
    sequence of per-position sizes of a mixed space.  Digits are checked
    against the size of their own position.
    """

    __slots__ = ('digits', 'sizes', 'base')

    def __init__(self, digits, alphabet):
        digits = tuple(int(d) for d in digits)
        if isinstance(alphabet, (Alphabet, int, np.integer)):
            base = Alphabet(alphabet).size
            sizes = (base,) * len(digits)
        else:
            sizes = tuple(Alphabet(s).size for s in alphabet)
            if len(sizes) != len(digits):
                raise WordError('{0} digits but {1} alphabet sizes'.format(
                    len(digits), len(sizes)))
            base = sizes[0] if sizes and len(set(sizes)) == 1 else None
        for position, (digit, size) in enumerate(zip(digits, sizes), 1):
            if not 0 <= digit < size:
                raise WordError('Digit {0} at position {1} is out of the '
                                'alphabet of size {2}'.format(digit, position,
                                                              size))
        self.digits = digits
        self.sizes = sizes
        #: The common alphabet size, or ``None`` for a mixed word.
        self.base = base

    @classmethod
    def parse(cls, text, alphabet):
        """Parses ``"102"``, or ``"1.0.12"`` for alphabets larger than 10."""
        text = text.strip()
        if not text:
            return cls((), alphabet)
        parts = text.split('.') if '.' in text else list(text)
        try:
            digits = [int(part) for part in parts]
        except ValueError:
            raise WordError('Invalid word: {0!r}'.format(text))
        return cls(digits, alphabet)

    @property
    def alphabet_size(self):
        if self.base is None:
            if not self.sizes:
                raise WordError('The empty mixed word has no alphabet')
            raise WordError('The word mixes alphabets of sizes '
                            '{0}'.format(sorted(set(self.sizes))))
        return self.base

    def common_prefix_length(self, other):
        n = 0
        for x, y in zip(self.digits, other.digits):
            if x != y:
                break
            n += 1
        return n

    def is_prefix_of(self, other):
        return other.digits[:len(self)] == self.digits

    def child(self, letter, size=None):
        """The word extended by one letter."""
        if size is None:
            size = self.alphabet_size
        return Word(self.digits + (letter,), self.sizes + (size,))

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            digits, sizes = self.digits[index], self.sizes[index]
            if self.base is not None:
                return Word(digits, self.base)
            return Word(digits, sizes)
        return self.digits[index]

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.digits == other.digits and self.sizes == other.sizes

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash((self.digits, self.sizes))

    def __str__(self):
        if all(size <= 10 for size in self.sizes):
            return ''.join(str(d) for d in self.digits)
        return '.'.join(str(d) for d in self.digits)

    def __repr__(self):
        if self.base is None:
            return '<Word {0!r} mixed>'.format(str(self))
        return '<Word {0!r} c={1}>'.format(str(self), self.base)


class EpochSchedule(object):
    """The switching positions ``T_1 = 1 < T_2 < ...`` of a mixed space.

    Values are 1-indexed and extended lazily by ``T_{k+1} = (k+1) T_k`` past
    the given ones, so the schedule without given values is ``T_k = k!``.
    The space oscillates between its alphabets only when ``T_{k+1}/T_k``
    tends to infinity.  Given values are not checked for it.
    """

    def __init__(self, values=None):
        if values is None:
            self.kind = 'factorial'
            given = (1,)
        else:
            self.kind = 'explicit'
            given = self._check(values)
        self.given = given
        self._values = list(given)
        self._lock = threading.Lock()

    @staticmethod
    def _check(values):
        try:
            values = tuple(int(v) for v in values)
        except (TypeError, ValueError):
            raise ScheduleError('Schedule values must be integers')
        if not values:
            raise ScheduleError('Schedule values are empty')
        if values[0] != 1:
            raise ScheduleError('T_1 must be 1, not {0}'.format(values[0]))
        for k, (x, y) in enumerate(zip(values, values[1:]), 1):
            if not x < y:
                raise ScheduleError('T_{0}={1} is not less than T_{2}={3}'
                                    ''.format(k, x, k + 1, y))
        return values

    @classmethod
    def factorial(cls):
        return cls()

    @classmethod
    def explicit(cls, values):
        return cls(values)

    @classmethod
    def from_config(cls, config):
        if not isinstance(config, dict):
            raise ScheduleError('Schedule config must be an object')
        return schedule_from_config(str(config.get('kind')), config)

    def to_config(self):
        if self.kind == 'factorial':
            return {'kind': 'factorial'}
        return {'kind': 'explicit', 'values': list(self.given)}

    def _extend_past(self, position):
        values = self._values
        if values[-1] > position:
            return
        with self._lock:
            while values[-1] <= position:
                values.append(len(values) * values[-1] + values[-1])

    def __getitem__(self, k):
        if k < 1:
            raise IndexError('Schedule values are 1-indexed')
        values = self._values
        while len(values) < k:
            self._extend_past(values[-1])
        return values[k - 1]

    def values(self, count):
        """The first `count` values."""
        self[count]
        return self._values[:count]

    def epoch(self, position):
        """The epoch ``k`` with ``T_k <= position < T_{k+1}``."""
        if position < 1:
            raise WordError('Positions start at 1')
        self._extend_past(position)
        return bisect_right(self._values, position)

    def blocks(self, n):
        """Yields ``(k, start, stop)`` for the epochs meeting positions
        ``1..n``.  `stop` is exclusive and clipped to ``n + 1``.
        """
        self._extend_past(n)
        values = self._values
        k = 1
        while values[k - 1] <= n:
            yield k, values[k - 1], min(values[k], n + 1)
            k += 1

    def __eq__(self, other):
        if not isinstance(other, EpochSchedule):
            return NotImplemented
        return self.kind == other.kind and self.given == other.given

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash((self.kind, self.given))

    def __repr__(self):
        if self.kind == 'factorial':
            return '<EpochSchedule factorial>'
        return '<EpochSchedule explicit {0!r}>'.format(list(self.given))


@valuedispatch
def schedule_from_config(kind, config):
    raise ScheduleError('Unknown schedule kind: {0!r}'.format(kind))


@schedule_from_config.register('factorial')
def factorial_schedule(_, config):
    return EpochSchedule.factorial()


@schedule_from_config.register('explicit')
def explicit_schedule(_, config):
    try:
        values = config['values']
    except KeyError:
        raise ScheduleError('An explicit schedule requires values')
    return EpochSchedule.explicit(values)


class MixedSpaceSpec(object):
    """Two alphabets and the schedule alternating between them.  With equal
    alphabets this is the ordinary symbolic space over ``c`` letters.
    """

    __slots__ = ('alphabet_1', 'alphabet_2', 'schedule')

    def __init__(self, alphabet_1, alphabet_2=None, schedule=None):
        self.alphabet_1 = Alphabet(alphabet_1)
        self.alphabet_2 = Alphabet(alphabet_1 if alphabet_2 is None
                                   else alphabet_2)
        self.schedule = EpochSchedule() if schedule is None else schedule

    @property
    def c1(self):
        return self.alphabet_1.size

    @property
    def c2(self):
        return self.alphabet_2.size

    @property
    def uniform(self):
        return self.c1 == self.c2

    @property
    def c(self):
        if not self.uniform:
            raise WordError('Alphabets of sizes {0} and {1} differ'.format(
                self.c1, self.c2))
        return self.c1

    def uses_first(self, position):
        return self.schedule.epoch(position) % 2 == 1

    def alphabet_at(self, position):
        if self.uses_first(position):
            return self.alphabet_1
        return self.alphabet_2

    def position_mask(self, n):
        """Boolean array over positions ``1..n``; true where the first
        alphabet is used.
        """
        mask = np.zeros(n, dtype=bool)
        for k, start, stop in self.schedule.blocks(n):
            if k % 2:
                mask[start - 1:stop - 1] = True
        return mask

    def alphabet_sizes(self, n):
        if self.uniform:
            return (self.c1,) * n
        return tuple(np.where(self.position_mask(n), self.c1, self.c2))

    def count_N(self, n):
        return sum(stop - start for k, start, stop in self.schedule.blocks(n)
                   if k % 2)

    def log_scale(self, n):
        """``-log`` of the diameter of level-`n` cylinders."""
        first = self.count_N(n)
        return first * math.log(self.c1) + (n - first) * math.log(self.c2)

    def word(self, digits):
        digits = tuple(digits)
        if self.uniform:
            return Word(digits, self.c1)
        return Word(digits, self.alphabet_sizes(len(digits)))

    def parse(self, text):
        word = Word.parse(text, max(self.c1, self.c2))
        return self.word(word.digits)

    def check(self, w):
        """Raises :exc:`WordError` unless `w` is a word of this space."""
        sizes = self.alphabet_sizes(len(w))
        for position, (digit, size) in enumerate(zip(w.digits, sizes), 1):
            if digit >= size:
                raise WordError('Digit {0} at position {1} is out of the '
                                'alphabet of size {2}'.format(digit, position,
                                                              size))

    def words(self, n):
        """All words of length `n` in lexicographic order."""
        return words(self.alphabet_sizes(n), n)

    def __eq__(self, other):
        if not isinstance(other, MixedSpaceSpec):
            return NotImplemented
        return (self.alphabet_1 == other.alphabet_1 and
                self.alphabet_2 == other.alphabet_2 and
                self.schedule == other.schedule)

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash((self.alphabet_1, self.alphabet_2, self.schedule))

    def __repr__(self):
        return '<MixedSpaceSpec c1={0} c2={1} {2!r}>'.format(
            self.c1, self.c2, self.schedule)


def enumerate_index(w):
    """The base-``c`` value of `w`, a bijection from level-``n`` words onto
    ``0..c^n-1``.
    """
    if not len(w):
        return 0
    c = w.alphabet_size
    index = 0
    for digit in w:
        index = index * c + digit
    return index


def word_from_index(index, level, c):
    """The level-`level` word whose index is `index`."""
    c = Alphabet(c).size
    if not 0 <= index < c ** level:
        raise WordError('Index {0} is out of level {1} over {2} '
                        'letters'.format(index, level, c))
    digits = []
    for __ in range(level):
        index, digit = divmod(index, c)
        digits.append(digit)
    return Word(reversed(digits), c)


def words(alphabet, n):
    """Generates the words of length `n` in index order.  `alphabet` is a
    size or a sequence of per-position sizes.
    """
    if isinstance(alphabet, (Alphabet, int, np.integer)):
        alphabet = (Alphabet(alphabet).size,) * n
    sizes = tuple(alphabet)
    base = sizes[0] if sizes and len(set(sizes)) == 1 else sizes
    for digits in product(*[range(size) for size in sizes]):
        yield Word(digits, base)


def count_N(spec, n):
    """The number of positions ``j <= n`` using the first alphabet."""
    if n < 0:
        raise ValueError('n must be nonnegative')
    return spec.count_N(n)


def log_mixed_distance(w, v, spec, prefix_equal=False):
    """``-log d(w, v)``; infinite when the distance is 0.

    A word that is a proper prefix of the other is at the distance of the
    shorter level unless `prefix_equal` is set, in which case both are
    taken as truncations of the same infinite word.
    """
    spec.check(w)
    spec.check(v)
    if w.digits == v.digits:
        return float('inf')
    n = w.common_prefix_length(v)
    if prefix_equal and n == min(len(w), len(v)):
        return float('inf')
    return spec.log_scale(n)


def mixed_distance(w, v, spec, prefix_equal=False):
    """``c1^(-N_n) c2^(-(n - N_n))`` with ``n = |w ^ v|``."""
    return math.exp(-log_mixed_distance(w, v, spec, prefix_equal))

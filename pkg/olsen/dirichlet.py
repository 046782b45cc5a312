# -*- coding: utf-8 -*-
"""
    olsen.dirichlet
    ~~~~~~~~~~~~~~~

    Generalized Dirichlet polynomials ``F(x) = Σ a_j exp(p_j x)`` and the
    counting of their real zeros with orders.

    Zeros are isolated by Rolle's argument: ``exp(-s x) F(x)`` has the same
    zeros as ``F`` and its derivative has one term less when ``s`` is an
    exponent of ``F``.  The critical points of each polynomial in that chain
    split the window into pieces where the polynomial above is monotone.

"""
from __future__ import absolute_import, division
from itertools import groupby
import math

from scipy.optimize import brentq

from .records import default, Record


__all__ = ['DirichletPolynomial', 'Zero', 'ZeroReport', 'INAPPLICABLE',
           'eval_derivative', 'is_bipartite', 'jameson_bound',
           'descartes_bound', 'count_zeros']


#: Exponents closer than this (relative to ``max(1, |p|)``) are merged.
MERGE_TOLERANCE = 1e-12

#: Merged coefficients smaller than this fraction of the largest input
#: coefficient are dropped.
CANCEL_TOLERANCE = 1e-12

#: The highest derivative checked to find the order of a zero.
DERIVATIVE_CEILING = 8

#: ``|F^(m)(x)|`` above this fraction of ``Σ |a_j p_j^m exp(p_j x)|`` is
#: nonzero for ``m >= 1``.
ORDER_THRESHOLD = 1e-8

#: The same threshold for ``F`` itself.
ZERO_THRESHOLD = 1e-10

#: Numeric roots closer than this are one zero.
CLUSTER_RADIUS = 1e-6

#: Absolute tolerance of root bracketing.
ROOT_TOLERANCE = 1e-12

#: The default search window.
SEARCH_INTERVAL = (-20., 20.)


class Inapplicable(object):

    __slots__ = ()

    def __bool__(self):
        return False

    __nonzero__ = __bool__

    def __repr__(self):
        return 'INAPPLICABLE'


#: The Jameson bound of a polynomial which is not bipartite.
INAPPLICABLE = Inapplicable()


class DirichletPolynomial(object):
    """Terms ``(a_j, p_j)`` sorted by decreasing exponent.  Terms with equal
    exponents are merged and cancelled terms are dropped, so ``F == 0``
    exactly when the polynomial is empty.
    """

    __slots__ = ('coefficients', 'exponents')

    def __init__(self, terms=()):
        terms = sorted(((float(a), float(p)) for a, p in terms),
                       key=lambda term: -term[1])
        largest = max([abs(a) for a, p in terms] or [0.])
        coefficients, exponents = [], []
        group = []
        for a, p in terms:
            if group and abs(group[0][1] - p) > \
                    MERGE_TOLERANCE * max(1., abs(group[0][1])):
                self._flush(group, largest, coefficients, exponents)
                group = []
            group.append((a, p))
        if group:
            self._flush(group, largest, coefficients, exponents)
        self.coefficients = tuple(coefficients)
        self.exponents = tuple(exponents)

    @staticmethod
    def _flush(group, largest, coefficients, exponents):
        a = math.fsum(a for a, p in group)
        if abs(a) > CANCEL_TOLERANCE * largest:
            coefficients.append(a)
            exponents.append(group[0][1])

    @classmethod
    def raw(cls, coefficients, exponents):
        """Builds a polynomial from terms already sorted and merged."""
        poly = cls.__new__(cls)
        poly.coefficients = tuple(coefficients)
        poly.exponents = tuple(exponents)
        return poly

    @classmethod
    def power_sum(cls, probs, sign=1):
        """``Σ sign · p_i^x``."""
        return cls((sign, math.log(p)) for p in probs)

    @property
    def terms(self):
        return list(zip(self.coefficients, self.exponents))

    def shifted_derivative(self, s):
        """The derivative of ``exp(-s x) F(x)``."""
        terms = [(a * (p - s), p - s) for a, p in self if p != s]
        return DirichletPolynomial.raw([a for a, p in terms],
                                       [p for a, p in terms])

    def __call__(self, x):
        return eval_derivative(self, x, 0)

    def __iter__(self):
        return zip(self.coefficients, self.exponents)

    def __len__(self):
        return len(self.coefficients)

    def __neg__(self):
        return DirichletPolynomial.raw([-a for a in self.coefficients],
                                       self.exponents)

    def __add__(self, other):
        if not isinstance(other, DirichletPolynomial):
            return NotImplemented
        return DirichletPolynomial(self.terms + other.terms)

    def __sub__(self, other):
        if not isinstance(other, DirichletPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DirichletPolynomial):
            return DirichletPolynomial((a * b, p + r) for a, p in self
                                       for b, r in other)
        try:
            k = float(other)
        except (TypeError, ValueError):
            return NotImplemented
        return DirichletPolynomial((a * k, p) for a, p in self)

    __rmul__ = __mul__

    def __pow__(self, k):
        if int(k) != k or k < 0:
            raise ValueError('Only nonnegative integer powers are defined')
        result = DirichletPolynomial([(1., 0.)])
        for __ in range(int(k)):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, DirichletPolynomial):
            return NotImplemented
        return (self.coefficients == other.coefficients and
                self.exponents == other.exponents)

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash((self.coefficients, self.exponents))

    def __repr__(self):
        terms = ' '.join('{0:+.6g}e^({1:.6g}x)'.format(a, p) for a, p in self)
        return '<DirichletPolynomial {0}>'.format(terms or '0')


def _scaled_sum(coefficients, exponents, x, m):
    """Returns ``(Σ t_j, Σ |t_j|, top)`` for the terms
    ``t_j = a_j p_j^m exp(p_j x - top)`` with ``top = max p_j x``.
    """
    top = max(p * x for p in exponents)
    terms = [a * p ** m * math.exp(p * x - top)
             for a, p in zip(coefficients, exponents)]
    return math.fsum(terms), math.fsum(abs(t) for t in terms), top


def _relative(F, x, m=0):
    value, scale, __ = _scaled_sum(F.coefficients, F.exponents, x, m)
    return abs(value) / scale if scale else 0.


def _sign(F, x):
    value = _scaled_sum(F.coefficients, F.exponents, x, 0)[0]
    return (value > 0) - (value < 0)


def eval_derivative(F, x, m=0):
    """``F^(m)(x)``."""
    if m > DERIVATIVE_CEILING:
        raise ValueError('Derivatives above order {0} are not '
                         'supported'.format(DERIVATIVE_CEILING))
    if not F:
        return 0.
    value, __, top = _scaled_sum(F.coefficients, F.exponents, x, m)
    if not value:
        return 0.
    try:
        return value * math.exp(top)
    except OverflowError:
        return math.copysign(float('inf'), value)


def is_bipartite(F):
    """Whether every coefficient is ±1 with as many +1 as -1."""
    if not F:
        return False
    if any(abs(abs(a) - 1) > CANCEL_TOLERANCE for a in F.coefficients):
        return False
    positive = sum(1 for a in F.coefficients if a > 0)
    return 2 * positive == len(F)


def jameson_bound(F):
    """A bipartite polynomial of length ``2n`` has at most ``n`` real zeros
    counted with orders.
    """
    if not is_bipartite(F):
        return INAPPLICABLE
    return len(F) // 2


def descartes_bound(F):
    """The number of sign changes of the coefficients in exponent order."""
    signs = [k for k, __ in groupby(a > 0 for a in F.coefficients)]
    return max(0, len(signs) - 1)


class Zero(Record):

    __slots__ = ('location', 'order', 'undetermined')

    #: Set when every derivative up to the ceiling vanished numerically; the
    #: order is then at least the ceiling.
    undetermined = default(False)


class ZeroReport(Record):

    __slots__ = ('zeros', 'interval', 'tolerances', 'degenerate', 'tails')

    #: ``F`` is identically zero.
    degenerate = default(False)
    #: Whether the extreme terms dominate left of the window and right of it,
    #: which leaves no zero outside.
    tails = default((False, False))

    @property
    def total_order(self):
        return sum(zero.order for zero in self.zeros)

    @property
    def locations(self):
        return [zero.location for zero in self.zeros]

    def to_dict(self):
        data = super(ZeroReport, self).to_dict()
        data['total_order'] = self.total_order
        return data


TOLERANCES = {'merge': MERGE_TOLERANCE, 'cancel': CANCEL_TOLERANCE,
              'derivative_ceiling': DERIVATIVE_CEILING,
              'order_threshold': ORDER_THRESHOLD,
              'zero_threshold': ZERO_THRESHOLD,
              'cluster_radius': CLUSTER_RADIUS,
              'root_tolerance': ROOT_TOLERANCE}


def _sign_change_roots(F, lo, hi):
    """Returns the roots where ``F`` changes its sign or vanishes exactly on
    a breakpoint, with the critical points used as breakpoints.
    """
    if len(F) < 2:
        return [], []
    critical, __ = _sign_change_roots(F.shifted_derivative(F.exponents[-1]),
                                      lo, hi)
    coefficients, exponents = F.coefficients, F.exponents
    f = lambda x: _scaled_sum(coefficients, exponents, x, 0)[0]
    points = [lo] + [x for x in critical if lo < x < hi] + [hi]
    values = [f(x) for x in points]
    roots = [x for x, value in zip(points, values) if value == 0]
    pieces = zip(zip(points, values), zip(points[1:], values[1:]))
    for (a, fa), (b, fb) in pieces:
        if fa * fb < 0:
            roots.append(brentq(f, a, b, xtol=ROOT_TOLERANCE))
    return sorted(set(roots)), critical


def _derivative_order(F, x):
    """The first ``m`` with ``F^(m)(x)`` numerically nonzero, or ``None``."""
    for m in range(DERIVATIVE_CEILING + 1):
        threshold = ZERO_THRESHOLD if m == 0 else ORDER_THRESHOLD
        if _relative(F, x, m) > threshold:
            return m
    return None


def _representative(F, cluster):
    pool = [x for x, critical in cluster if critical]
    if not pool:
        pool = [x for x, critical in cluster]
    return min(pool, key=lambda x: _relative(F, x))


def _flat(F, x):
    return _relative(F, x, 1) <= ORDER_THRESHOLD


def _joins(F, last, x):
    """Whether the candidate `x` belongs to the cluster ending at `last`."""
    if x - last <= CLUSTER_RADIUS:
        return True
    # a simple root keeps its own cluster however small F is around it.
    return _flat(F, last) and _flat(F, x) and \
        _relative(F, (x + last) / 2) <= ZERO_THRESHOLD


def _extremum(F, clusters, i):
    """Whether the critical points of ``clusters[i]`` are only the extremum
    between the simple roots of its neighbours, where ``F`` is about
    ``F''·gap²/8`` away from zero.
    """
    if not 0 < i < len(clusters) - 1:
        return False
    if not all(critical for __, critical in clusters[i]):
        return False
    left = [x for x, critical in clusters[i - 1] if not critical]
    right = [x for x, critical in clusters[i + 1] if not critical]
    if not left or not right:
        return False
    x = _representative(F, clusters[i])
    gap = min(right) - max(left)
    curvature = abs(eval_derivative(F, x, 2))
    return abs(eval_derivative(F, x)) >= curvature * gap ** 2 / 32


def count_zeros(F, lo=SEARCH_INTERVAL[0], hi=SEARCH_INTERVAL[1]):
    """Locates the real zeros of `F` in ``[lo, hi]`` with their orders.

    Roots come from sign changes on the monotone pieces, and critical points
    where ``F`` vanishes numerically are added for even orders.  Candidates
    closer than :data:`CLUSTER_RADIUS` are one zero, and so are flat ones
    with ``F`` numerically zero between them.  A critical point that is only
    the extremum between two close simple roots is not a zero.  The order of
    a zero is read from derivatives and then lifted by one when it disagrees
    with whether ``F`` changes sign across it.
    """
    if not lo < hi:
        raise ValueError('Invalid window: [{0}, {1}]'.format(lo, hi))
    if not F:
        return ZeroReport(zeros=(), interval=(lo, hi), tolerances=TOLERANCES,
                          degenerate=True)
    roots, critical = _sign_change_roots(F, lo, hi)
    candidates = [(x, False) for x in roots]
    candidates.extend((x, True) for x in critical
                      if lo <= x <= hi and _relative(F, x) <= ZERO_THRESHOLD)
    candidates.sort()
    clusters = []
    for x, is_critical in candidates:
        if clusters:
            last = clusters[-1][-1][0]
            if _joins(F, last, x):
                clusters[-1].append((x, is_critical))
                continue
        clusters.append([(x, is_critical)])
    clusters = [cluster for i, cluster in enumerate(clusters)
                if not _extremum(F, clusters, i)]
    locations = [_representative(F, cluster) for cluster in clusters]
    zeros = []
    for i, x in enumerate(locations):
        order = _derivative_order(F, x)
        undetermined = order is None
        if undetermined:
            order = DERIVATIVE_CEILING
        elif lo < x < hi:
            left = locations[i - 1] if i else lo
            right = locations[i + 1] if i + 1 < len(locations) else hi
            crossing = _sign(F, (left + x) / 2) != _sign(F, (x + right) / 2)
            if crossing != (order % 2 == 1):
                order += 1
        elif order == 0:
            order = 1
        if order:
            zeros.append(Zero(location=x, order=order,
                              undetermined=undetermined))
    tails = (_dominates(F, lo, -1), _dominates(F, hi, 0))
    return ZeroReport(zeros=tuple(zeros), interval=(lo, hi),
                      tolerances=TOLERANCES, tails=tails)


def _dominates(F, x, index):
    """Whether the term at `index` outweighs all others at `x`."""
    top = max(p * x for p in F.exponents)
    sizes = [abs(a) * math.exp(p * x - top) for a, p in F]
    lead = sizes.pop(index)
    return lead > math.fsum(sizes)

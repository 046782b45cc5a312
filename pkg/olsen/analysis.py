# -*- coding: utf-8 -*-
"""
    olsen.analysis
    ~~~~~~~~~~~~~~

    Closed forms of the multifractal functions of inhomogeneous multinomial
    measures, their Legendre transforms and the dimension spectrum.

    Each probability vector ``p`` over ``c`` letters defines the free energy
    ``θ(q) = log_c Σ p_i^q``.  The upper function ``B`` is the pointwise
    maximum of the two curves and the lower function ``b`` their minimum.

"""
from __future__ import absolute_import, division
import math

import numpy as np
from scipy.special import entr, logsumexp

from .measures import ProbabilityVector, log_partition
from .records import Record
from .utils import NumericFailure, parallel_map


__all__ = ['UNDEFINED', 'LegendreFailure', 'SpectrumDomainError',
           'ThetaFunction', 'OneSided', 'OlsenPair', 'UpperEnvelope',
           'LowerEnvelope', 'SpectrumPoint', 'theta', 'theta_prime',
           'theta_second', 'tau_n', 'olsen_B', 'olsen_b', 'olsen_B_prime',
           'olsen_b_prime', 'olsen_tau', 'olsen_tau_lower', 'tilde_params',
           'log_ratio_chain', 'entropy', 'legendre_point', 'legendre',
           'admissible_window', 'spectrum', 'spectrum_grid', 'phi_nu',
           'phi_nu_prime']


#: The iteration cap of the Legendre slope solve.
LEGENDRE_MAX_ITERATIONS = 200

#: Tolerance on ``f'(q) + α``.
LEGENDRE_TOLERANCE = 1e-13

#: Curves crossing within this distance in ``q`` form a kink.
CROSSING_RADIUS = 1e-9

#: Slopes closer than this do not form a kink.
DERIVATIVE_GAP = 1e-9

#: Agreement required between the Legendre and the entropy routes.
SPECTRUM_TOLERANCE = 1e-10

#: Slopes this close to a bound of ``f'`` are on the bound.
BOUNDARY_TOLERANCE = 1e-12

#: Values this close count as tied in :func:`phi_nu_prime`.
TIE_TOLERANCE = 1e-12

#: Bracket expansion gives up past this ``|q|``.
BRACKET_LIMIT = 1e6


class Undefined(object):

    __slots__ = ()

    def __bool__(self):
        return False

    __nonzero__ = __bool__

    def __repr__(self):
        return 'UNDEFINED'


#: The Legendre transform outside the closure of ``f'(R)``.
UNDEFINED = Undefined()


class LegendreFailure(NumericFailure):
    pass


class SpectrumDomainError(ValueError):
    pass


class ThetaFunction(object):
    """``θ(q) = log(Σ p_i^q) / log_base`` with its derivatives."""

    __slots__ = ('probs', 'log_base')

    def __init__(self, probs, log_base=None):
        self.probs = ProbabilityVector(probs)
        if log_base is None:
            log_base = math.log(len(self.probs))
        self.log_base = float(log_base)

    def _weights(self, q):
        logs = self.probs.logs
        scaled = q * logs
        return np.exp(scaled - logsumexp(scaled)), logs

    def __call__(self, q):
        return float(logsumexp(q * self.probs.logs)) / self.log_base

    def prime(self, q):
        weights, logs = self._weights(q)
        return float(np.dot(weights, logs)) / self.log_base

    def second(self, q):
        weights, logs = self._weights(q)
        mean = np.dot(weights, logs)
        return float(np.dot(weights, (logs - mean) ** 2)) / self.log_base

    @property
    def affine(self):
        return self.probs.is_uniform

    def prime_bounds(self):
        """The limits of ``θ'`` at ``-inf`` and ``+inf``."""
        return (math.log(self.probs.smallest) / self.log_base,
                math.log(self.probs.largest) / self.log_base)

    def limit(self, side):
        """``lim θ(q) - q θ'(q)`` as ``q`` goes to ``-inf`` (``'left'``) or
        ``+inf`` (``'right'``).
        """
        extreme = self.probs.smallest if side == 'left' else \
            self.probs.largest
        count = sum(1 for p in self.probs if abs(p - extreme) <= 1e-15)
        return math.log(count) / self.log_base

    def __repr__(self):
        return '<ThetaFunction {0!r} base={1:.6g}>'.format(
            self.probs.entries, math.exp(self.log_base))


def theta(probs, log_base, q):
    return ThetaFunction(probs, log_base)(q)


def theta_prime(probs, log_base, q):
    return ThetaFunction(probs, log_base).prime(q)


def theta_second(probs, log_base, q):
    return ThetaFunction(probs, log_base).second(q)


def tau_n(spec, q, n):
    """The partition exponent of the level-`n` cylinders."""
    if n < 1:
        raise ValueError('n must be positive')
    return log_partition(spec, q, n) / spec.space.log_scale(n)


class OneSided(Record):
    """One-sided derivatives.  They differ at a kink of an envelope."""

    __slots__ = ('left', 'right')

    @property
    def defined(self):
        return self.left == self.right

    @property
    def value(self):
        return self.left if self.defined else UNDEFINED

    def to_dict(self):
        data = super(OneSided, self).to_dict()
        data['defined'] = self.defined
        return data


class OlsenPair(object):
    """The free energies of the two probability vectors of a measure."""

    __slots__ = ('theta_a', 'theta_b')

    def __init__(self, theta_a, theta_b):
        self.theta_a = theta_a
        self.theta_b = theta_b

    @classmethod
    def from_spec(cls, spec):
        return cls(ThetaFunction(spec.probs_a, math.log(spec.space.c1)),
                   ThetaFunction(spec.probs_b, math.log(spec.space.c2)))

    @classmethod
    def from_probs(cls, probs_a, probs_b):
        return cls(ThetaFunction(probs_a), ThetaFunction(probs_b))

    @property
    def equal_base(self):
        return abs(self.theta_a.log_base - self.theta_b.log_base) <= 1e-15

    @property
    def upper(self):
        return UpperEnvelope(self)

    @property
    def lower(self):
        return LowerEnvelope(self)

    def __repr__(self):
        return '<OlsenPair {0!r} {1!r}>'.format(self.theta_a, self.theta_b)


class Envelope(object):

    __slots__ = ('pair',)

    #: ``max`` or ``min``.
    pick = None

    def __init__(self, pair):
        self.pair = pair

    @property
    def curves(self):
        return (self.pair.theta_a, self.pair.theta_b)

    def active(self, q):
        return self.pick(self.curves, key=lambda curve: curve(q))

    def __call__(self, q):
        return self.pick(curve(q) for curve in self.curves)

    def prime(self, q):
        return self.active(q).prime(q)

    def second(self, q):
        return self.active(q).second(q)

    @property
    def affine(self):
        a, b = self.curves
        return a.affine and b.affine and a.log_base == b.log_base


class UpperEnvelope(Envelope):
    """``B = max(θ_a, θ_b)``, convex."""

    __slots__ = ()

    pick = max

    def prime_bounds(self):
        lefts, rights = zip(*(curve.prime_bounds() for curve in self.curves))
        return min(lefts), max(rights)

    def limit(self, side):
        index, pick = (0, min) if side == 'left' else (1, max)
        slopes = [curve.prime_bounds()[index] for curve in self.curves]
        extreme = pick(slopes)
        return max(curve.limit(side) for curve, slope
                   in zip(self.curves, slopes) if slope == extreme)


class LowerEnvelope(Envelope):
    """``b = min(θ_a, θ_b)``.  Its Legendre transform is the minimum of the
    transforms of both curves.
    """

    __slots__ = ()

    pick = min

    def legendre_point(self, alpha):
        points = [legendre_point(curve, alpha) for curve in self.curves]
        if any(value is UNDEFINED for value, q in points):
            return UNDEFINED, None
        return min(points, key=lambda point: point[0])


def olsen_B(pair, q):
    return max(pair.theta_a(q), pair.theta_b(q))


def olsen_b(pair, q):
    return min(pair.theta_a(q), pair.theta_b(q))


#: ``τ`` and the lower ``τ`` coincide with ``B`` and ``b`` for these
#: measures.
olsen_tau = olsen_B
olsen_tau_lower = olsen_b


def _one_sided(pair, q, upper):
    a, b = pair.theta_a, pair.theta_b
    gap = a(q) - b(q)
    da, db = a.prime(q), b.prime(q)
    slope_gap = da - db
    if abs(slope_gap) > DERIVATIVE_GAP and \
            abs(gap) <= CROSSING_RADIUS * abs(slope_gap):
        low, high = min(da, db), max(da, db)
        if upper:
            return OneSided(left=low, right=high)
        return OneSided(left=high, right=low)
    if (gap >= 0) == upper:
        return OneSided(left=da, right=da)
    return OneSided(left=db, right=db)


def olsen_B_prime(pair, q):
    return _one_sided(pair, q, upper=True)


def olsen_b_prime(pair, q):
    return _one_sided(pair, q, upper=False)


def tilde_params(probs, q):
    """The tilted vector ``p_i^q / Σ p_j^q``."""
    scaled = q * ProbabilityVector(probs).logs
    return ProbabilityVector(np.exp(scaled - logsumexp(scaled)))


def log_ratio_chain(probs, tilde):
    """``log(t_i/t_1) / log(p_i/p_1)`` for ``i >= 2``; all equal to ``q``
    when `tilde` is tilted from `probs` by ``q``.  Entries equal to ``p_1``
    are skipped.
    """
    probs, tilde = ProbabilityVector(probs), ProbabilityVector(tilde)
    chain = []
    for p, t in zip(probs.logs[1:] - probs.logs[0],
                    tilde.logs[1:] - tilde.logs[0]):
        if p:
            chain.append(float(t / p))
    return chain


def entropy(probs, log_base=None):
    """The Shannon entropy, in base ``c`` by default."""
    probs = ProbabilityVector(probs)
    if log_base is None:
        log_base = math.log(len(probs))
    return math.fsum(entr(probs.array)) / log_base


def _solve_slope(f, target):
    """Solves ``f'(q) = target`` by Newton steps kept in a shrinking
    bracket.
    """
    lo, hi = -1., 1.
    while f.prime(lo) > target:
        lo *= 2
        if lo < -BRACKET_LIMIT:
            raise LegendreFailure('No bracket for slope {0!r}'.format(target))
    while f.prime(hi) < target:
        hi *= 2
        if hi > BRACKET_LIMIT:
            raise LegendreFailure('No bracket for slope {0!r}'.format(target))
    q = (lo + hi) / 2
    for __ in range(LEGENDRE_MAX_ITERATIONS):
        g = f.prime(q) - target
        if abs(g) <= LEGENDRE_TOLERANCE:
            return q
        if g > 0:
            hi = q
        else:
            lo = q
        if hi - lo <= 4 * np.finfo(float).eps * max(1., abs(q)):
            return q
        curvature = f.second(q)
        step = q - g / curvature if curvature > 0 else None
        q = step if step is not None and lo < step < hi else (lo + hi) / 2
    raise LegendreFailure('Slope {0!r} not reached in {1} iterations'.format(
        target, LEGENDRE_MAX_ITERATIONS))


def legendre_point(f, alpha):
    """``inf_q (α q + f(q))`` and the minimizing ``q``.

    `f` is a convex curve with ``prime``, ``second`` and ``prime_bounds``.
    Returns ``(UNDEFINED, None)`` when ``-α`` is outside the closure of the
    range of ``f'``.  On the bounds the minimizer is infinite.
    """
    if hasattr(f, 'legendre_point'):
        return f.legendre_point(alpha)
    target = -alpha
    if getattr(f, 'affine', False):
        if abs(f.prime(0.) - target) <= BOUNDARY_TOLERANCE:
            return f(0.), 0.
        return UNDEFINED, None
    lo, hi = f.prime_bounds()
    if target < lo - BOUNDARY_TOLERANCE or target > hi + BOUNDARY_TOLERANCE:
        return UNDEFINED, None
    for side, bound, q in [('left', lo, -np.inf), ('right', hi, np.inf)]:
        if abs(target - bound) <= BOUNDARY_TOLERANCE:
            try:
                limit = f.limit
            except AttributeError:
                raise LegendreFailure('The curve has no limit at the '
                                      '{0} bound'.format(side))
            return limit(side), q
    q = _solve_slope(f, target)
    return alpha * q + f(q), q


def legendre(f, alpha):
    return legendre_point(f, alpha)[0]


class SpectrumPoint(Record):

    __slots__ = ('alpha', 'dim', 'Dim', 'q_a', 'q_b')


def _roles(pair):
    """Returns ``(upper, lower)``: the upper curve belongs to the vector
    with the smaller minimum entry.
    """
    a, b = pair.theta_a, pair.theta_b
    if b.probs.smallest < a.probs.smallest:
        return b, a
    return a, b


def admissible_window(pair):
    """The open interval of ``α`` with a nonempty level set."""
    if not pair.equal_base:
        raise SpectrumDomainError('The spectrum requires equal alphabets')
    upper, lower = _roles(pair)
    bound_lo, bound_hi = lower.prime_bounds()
    return -bound_hi, -bound_lo


def spectrum(pair, alpha):
    """The Hausdorff and packing dimensions of the level set of `alpha`.

    ``dim = b*(α)`` is reached at ``q_b`` on the lower curve and
    ``Dim = B*(α)`` at ``q_a`` on the upper one.  Both are checked against
    the entropies of the tilted vectors.

    The upper curve must stay on top at both minimizers.  Tangent pairs and
    identical vectors satisfy this; for a pair whose curves cross between
    the minimizers :exc:`SpectrumDomainError` is raised even inside
    :func:`admissible_window`.
    """
    lo, hi = admissible_window(pair)
    if not lo < alpha < hi:
        raise SpectrumDomainError('alpha={0!r} is outside ({1!r}, '
                                  '{2!r})'.format(alpha, lo, hi))
    upper, lower = _roles(pair)
    Dim, q_a = legendre_point(pair.upper, alpha)
    dim, q_b = legendre_point(pair.lower, alpha)
    if Dim is UNDEFINED or dim is UNDEFINED:
        raise SpectrumDomainError('The transforms are undefined at '
                                  'alpha={0!r}'.format(alpha))
    for q, one_sided in [(q_a, olsen_B_prime), (q_b, olsen_b_prime)]:
        if not one_sided(pair, q).defined:
            raise SpectrumDomainError('alpha={0!r} lands on a crossing at '
                                      'q={1!r}'.format(alpha, q))
    if upper(q_a) < lower(q_a) - SPECTRUM_TOLERANCE or \
            lower(q_b) > upper(q_b) + SPECTRUM_TOLERANCE:
        raise SpectrumDomainError('The curves swap roles at alpha='
                                  '{0!r}'.format(alpha))
    checks = [('Dim', Dim, entropy(tilde_params(upper.probs, q_a),
                                   upper.log_base)),
              ('dim', dim, entropy(tilde_params(lower.probs, q_b),
                                   lower.log_base))]
    for name, value, expected in checks:
        if abs(value - expected) > SPECTRUM_TOLERANCE:
            raise NumericFailure('{0}={1!r} disagrees with the entropy '
                                 '{2!r}'.format(name, value, expected))
    return SpectrumPoint(alpha=alpha, dim=dim, Dim=Dim, q_a=q_a, q_b=q_b)


def spectrum_grid(pair, alphas, threads=1):
    return parallel_map(lambda alpha: spectrum(pair, alpha), alphas, threads)


def _nu_terms(probs, tilde, log_base, x):
    probs, tilde = ProbabilityVector(probs), ProbabilityVector(tilde)
    scaled = x * probs.logs
    log_value = logsumexp(scaled, b=tilde.array)
    weights = tilde.array * np.exp(scaled - log_value)
    return (float(log_value) / log_base,
            float(np.dot(weights, probs.logs)) / log_base)


def phi_nu(probs_a, probs_b, tilde_a, tilde_b, x, log_base=None):
    """``max(log Σ ã_i a_i^x, log Σ b̃_i b_i^x) / log_base``."""
    if log_base is None:
        log_base = math.log(len(probs_a))
    return max(_nu_terms(probs_a, tilde_a, log_base, x)[0],
               _nu_terms(probs_b, tilde_b, log_base, x)[0])


def phi_nu_prime(probs_a, probs_b, tilde_a, tilde_b, x, log_base=None):
    if log_base is None:
        log_base = math.log(len(probs_a))
    value_a, slope_a = _nu_terms(probs_a, tilde_a, log_base, x)
    value_b, slope_b = _nu_terms(probs_b, tilde_b, log_base, x)
    if abs(value_a - value_b) <= TIE_TOLERANCE:
        return OneSided(left=min(slope_a, slope_b),
                        right=max(slope_a, slope_b))
    slope = slope_a if value_a > value_b else slope_b
    return OneSided(left=slope, right=slope)

# -*- coding: utf-8 -*-
"""
    olsen.tangency
    ~~~~~~~~~~~~~~

    Pairs of probability vectors whose free energies touch at ``q = 0`` and
    ``q = 1`` without crossing.

    A base ``(a, b, c, d)`` is perturbed into the two groups
    ``(a+t, b, c, d-t)`` and ``(a+u, b+v, c+w, d-u-v-w)``.  For small
    ``(t, w)`` Newton's method finds ``(u, v)`` with ``φ = ψ = 0``, which
    makes the free energies and their slopes agree at 1 and 0.

"""
from __future__ import absolute_import, division
from fractions import Fraction
from itertools import product
import math

import numpy as np

from .dirichlet import DirichletPolynomial, count_zeros, eval_derivative
from .measures import ProbabilityVector
from .records import default, Record
from .utils import LOG, NumericFailure, parallel_map


__all__ = ['PRESETS', 'DomainError', 'SolverFailure', 'DegeneratePairError',
           'CertificationFailure', 'DegenerateTangency', 'BaseQuadruple',
           'PerturbationState', 'SolverResult', 'TangencyCertificate', 'phi',
           'psi', 'jacobian_uv', 'full_jacobian', 'column_pair_determinant',
           'solve_uv', 'solve_grid', 'build_measure_pair',
           'tangency_polynomial', 'certify_tangency']


#: Named bases.
PRESETS = {
    'paper-110': (0.1, 0.2, 0.3, 0.4),
    'paper-9': (1 / 9, 2 / 9, 2 / 9, 4 / 9),
}

#: Newton is promised to converge for ``|t|, |w|`` up to this.
SMALLNESS = 0.02

#: Step halvings tried before a Newton step is given up.
MAX_HALVINGS = 30

#: The origin Jacobian of a base must have a larger determinant.
SINGULARITY_THRESHOLD = 1e-9

#: Residual, curvature and location tolerances of a certificate.
RESIDUAL_TOLERANCE = 1e-10
CURVATURE_THRESHOLD = 1e-6
LOCATION_TOLERANCE = 1e-6

#: Sign check grid and the neighborhoods of 0 and 1 left out of it.
SIGN_GRID_POINTS = 2000
SIGN_GRID_EXCLUSION = 1e-4

COLUMNS = ('t', 'u', 'v', 'w')


class DomainError(ValueError):
    pass


class SolverFailure(NumericFailure):

    def __init__(self, message, iterate=None, residual=None):
        super(SolverFailure, self).__init__(message)
        #: The last ``(u, v)``.
        self.iterate = iterate
        self.residual = residual


class DegeneratePairError(ValueError):
    pass


class CertificationFailure(NumericFailure):

    def __init__(self, message, measurement=None, certificate=None):
        super(CertificationFailure, self).__init__(message)
        self.measurement = measurement
        self.certificate = certificate


class DegenerateTangency(CertificationFailure):
    pass


class BaseQuadruple(object):

    __slots__ = ('a', 'b', 'c', 'd')

    def __init__(self, a, b, c, d):
        entries = [float(x) for x in (a, b, c, d)]
        if not all(0 < x < 1 for x in entries):
            raise DomainError('Base entries must be inside (0, 1)')
        if abs(math.fsum(entries) - 1) > 1e-14:
            raise DomainError('Base entries must sum to 1')
        self.a, self.b, self.c, self.d = entries
        det = np.linalg.det(jacobian_uv(PerturbationState(), self))
        if abs(det) <= SINGULARITY_THRESHOLD:
            raise DomainError('The (u, v) Jacobian of {0!r} is singular at '
                              'the origin'.format(self))

    @classmethod
    def preset(cls, name):
        try:
            return cls(*PRESETS[name])
        except KeyError:
            raise DomainError('Unknown base: {0!r}'.format(name))

    @classmethod
    def parse(cls, text):
        """A preset name or ``a,b,c,d`` where entries may be fractions."""
        text = text.strip()
        if text in PRESETS:
            return cls.preset(text)
        try:
            entries = [float(Fraction(x.strip())) for x in text.split(',')]
        except (ValueError, ZeroDivisionError):
            raise DomainError('Invalid base: {0!r}'.format(text))
        if len(entries) != 4:
            raise DomainError('A base has 4 entries')
        return cls(*entries)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        if not isinstance(other, BaseQuadruple):
            return NotImplemented
        return self.entries == other.entries

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return '<BaseQuadruple {0}>'.format(
            ', '.join('{0:.6g}'.format(x) for x in self.entries))


class PerturbationState(Record):

    __slots__ = ('t', 'u', 'v', 'w')

    t = default(0.)
    u = default(0.)
    v = default(0.)
    w = default(0.)

    def groups(self, base):
        a, b, c, d = base.entries
        rest = d - (self.u + self.v + self.w)
        return ((a + self.t, b, c, d - self.t),
                (a + self.u, b + self.v, c + self.w, rest))

    def inside(self, base):
        return all(0 < x < 1 for group in self.groups(base) for x in group)

    def check(self, base):
        if not self.inside(base):
            raise DomainError('{0!r} leaves the open simplex'.format(self))

    def with_uv(self, u, v):
        return PerturbationState(t=self.t, u=float(u), v=float(v), w=self.w)


def phi(state, base):
    """``Σ x log x`` of the first group minus that of the second."""
    state.check(base)
    first, second = state.groups(base)
    return math.fsum([x * math.log(x) for x in first] +
                     [-x * math.log(x) for x in second])


def psi(state, base):
    """``Σ log x`` of the first group minus that of the second."""
    state.check(base)
    first, second = state.groups(base)
    return math.fsum([math.log(x) for x in first] +
                     [-math.log(x) for x in second])


def _residual(state, base):
    return max(abs(phi(state, base)), abs(psi(state, base)))


def full_jacobian(state, base):
    """``∂(φ, ψ)/∂(t, u, v, w)`` as a 2×4 array."""
    state.check(base)
    (at, __, __, dt), (au, bv, cw, rest) = state.groups(base)
    return np.array([
        [math.log(at / dt), math.log(rest / au), math.log(rest / bv),
         math.log(rest / cw)],
        [1 / at - 1 / dt, 1 / rest - 1 / au, 1 / rest - 1 / bv,
         1 / rest - 1 / cw],
    ])


def jacobian_uv(state, base):
    """``∂(φ, ψ)/∂(u, v)``."""
    return full_jacobian(state, base)[:, 1:3]


def column_pair_determinant(state, base, columns):
    """The determinant of two columns of :func:`full_jacobian`, named by
    ``'t'``, ``'u'``, ``'v'`` and ``'w'``.
    """
    indices = [COLUMNS.index(column) for column in columns]
    return float(np.linalg.det(full_jacobian(state, base)[:, indices]))


class SolverResult(Record):

    __slots__ = ('t', 'w', 'u', 'v', 'residual', 'iterations', 'history')

    @property
    def state(self):
        return PerturbationState(t=self.t, u=self.u, v=self.v, w=self.w)


def solve_uv(t, w, base=None, tolerance=1e-13, max_iterations=50, log=LOG):
    """Solves ``φ = ψ = 0`` for ``(u, v)`` by damped Newton iteration from
    the origin.  A step is halved until it stays in the simplex and lowers
    the residual.
    """
    if base is None:
        base = BaseQuadruple.preset('paper-110')
    if max(abs(t), abs(w)) > SMALLNESS:
        log('(t, w) = ({0!r}, {1!r}) is outside the small region; '
            'convergence is not promised'.format(t, w))
    state = PerturbationState(t=float(t), w=float(w))
    state.check(base)
    residual = _residual(state, base)
    history = [residual]
    iterations = 0
    while residual >= tolerance:
        if iterations == max_iterations:
            raise SolverFailure('No convergence in {0} iterations'.format(
                max_iterations), iterate=(state.u, state.v),
                residual=residual)
        iterations += 1
        values = np.array([phi(state, base), psi(state, base)])
        try:
            du, dv = np.linalg.solve(jacobian_uv(state, base), -values)
        except np.linalg.LinAlgError:
            raise SolverFailure('Singular Jacobian', iterate=(state.u,
                                                              state.v),
                                residual=residual)
        scale = 1.
        for __ in range(MAX_HALVINGS + 1):
            candidate = state.with_uv(state.u + scale * du,
                                      state.v + scale * dv)
            if candidate.inside(base):
                candidate_residual = _residual(candidate, base)
                if candidate_residual < residual or \
                        candidate_residual < tolerance:
                    break
            scale /= 2
        else:
            raise SolverFailure('Newton step rejected after {0} halvings'
                                ''.format(MAX_HALVINGS),
                                iterate=(state.u, state.v), residual=residual)
        state, residual = candidate, candidate_residual
        history.append(residual)
        log('iteration {0}: u={1!r} v={2!r} residual={3:.3e}'.format(
            iterations, state.u, state.v, residual))
    return SolverResult(t=state.t, w=state.w, u=state.u, v=state.v,
                        residual=residual, iterations=iterations,
                        history=history)


def solve_grid(ts, ws, base=None, threads=1):
    """Solves every ``(t, w)`` of the grid ``ts × ws``."""
    return parallel_map(lambda tw: solve_uv(tw[0], tw[1], base),
                        list(product(ts, ws)), threads)


def build_measure_pair(t, w, base=None, result=None):
    """The two probability vectors of a solved state."""
    if base is None:
        base = BaseQuadruple.preset('paper-110')
    if result is None:
        result = solve_uv(t, w, base)
    first, second = result.state.groups(base)
    probs_a = ProbabilityVector(first)
    probs_b = ProbabilityVector(second)
    if probs_a.same_multiset(probs_b):
        raise DegeneratePairError('The solved groups are permutations of '
                                  'each other')
    return probs_a, probs_b


def tangency_polynomial(params_a, params_b):
    """``Σ a_i^q - Σ b_i^q``.  Vectors over ``c`` and ``c^k`` letters compare
    ``(Σ a_i^q)^k`` with ``Σ b_i^q`` instead.
    """
    params_a = ProbabilityVector(params_a)
    params_b = ProbabilityVector(params_b)
    poly_a = DirichletPolynomial.power_sum(params_a)
    poly_b = DirichletPolynomial.power_sum(params_b)
    ratio = math.log(len(params_b)) / math.log(len(params_a))
    if ratio >= 1:
        k = int(round(ratio))
        if abs(ratio - k) <= 1e-12:
            return poly_a ** k - poly_b
    else:
        k = int(round(1 / ratio))
        if abs(1 / ratio - k) <= 1e-12:
            return poly_a - poly_b ** k
    raise ValueError('Alphabets of sizes {0} and {1} are not powers of a '
                     'common size'.format(len(params_a), len(params_b)))


class TangencyCertificate(Record):

    __slots__ = ('params_a', 'params_b', 'residuals', 'curvatures', 'sign',
                 'upper', 'zero_report', 'passed')

    residuals = default(None)
    curvatures = default(None)
    #: The sign of ``F`` off ``{0, 1}``.
    sign = default(None)
    #: ``'a'`` or ``'b'``, the vector with the larger free energy.
    upper = default(None)
    zero_report = default(None)
    passed = default(False)


def certify_tangency(params_a, params_b, lo=-20., hi=20.):
    """Checks that the free energies of the vectors meet at 0 and 1 in zeros
    of order 2 and nowhere else.  Raises :exc:`CertificationFailure` with the
    offending measurement otherwise.
    """
    params_a = ProbabilityVector(params_a)
    params_b = ProbabilityVector(params_b)
    certificate = TangencyCertificate(params_a=params_a, params_b=params_b)
    F = tangency_polynomial(params_a, params_b)

    def fail(message, measurement, error_class=CertificationFailure):
        raise error_class(message, measurement=measurement,
                          certificate=certificate)

    if not F:
        fail('F vanishes identically', ('F', 0.), DegenerateTangency)
    certificate.residuals = {
        'F(0)': abs(eval_derivative(F, 0., 0)),
        "F'(0)": abs(eval_derivative(F, 0., 1)),
        'F(1)': abs(eval_derivative(F, 1., 0)),
        "F'(1)": abs(eval_derivative(F, 1., 1)),
    }
    for name in sorted(certificate.residuals):
        value = certificate.residuals[name]
        if not value < RESIDUAL_TOLERANCE:
            fail('|{0}| = {1:.3e} is not below {2:.0e}'.format(
                name, value, RESIDUAL_TOLERANCE), (name, value))
    certificate.curvatures = {
        "F''(0)": eval_derivative(F, 0., 2),
        "F''(1)": eval_derivative(F, 1., 2),
    }
    for name in sorted(certificate.curvatures):
        value = certificate.curvatures[name]
        if not abs(value) > CURVATURE_THRESHOLD:
            fail('|{0}| = {1:.3e} is not above {2:.0e}'.format(
                name, abs(value), CURVATURE_THRESHOLD), (name, value))
    report = count_zeros(F, lo, hi)
    certificate.zero_report = report
    expected = [0., 1.]
    if len(report.zeros) != 2:
        fail('{0} zeros found instead of 2'.format(len(report.zeros)),
             ('zeros', report.locations))
    for zero, location in zip(report.zeros, expected):
        if abs(zero.location - location) > LOCATION_TOLERANCE:
            fail('Zero at {0!r} instead of {1}'.format(zero.location,
                                                       location),
                 ('location', zero.location))
        if zero.order != 2 or zero.undetermined:
            fail('Zero at {0} has order {1} instead of 2'.format(
                location, zero.order), ('order', zero.order))
    xs = np.linspace(lo, hi, SIGN_GRID_POINTS)
    xs = xs[(np.abs(xs) > SIGN_GRID_EXCLUSION) &
            (np.abs(xs - 1) > SIGN_GRID_EXCLUSION)]
    coefficients = np.array(F.coefficients)
    exponents = np.array(F.exponents)
    values = np.dot(coefficients, np.exp(np.outer(exponents, xs)))
    signs = np.unique(np.sign(values))
    if len(signs) != 1 or signs[0] == 0:
        fail('F changes sign off {0, 1}', ('signs', signs.tolist()))
    certificate.sign = int(signs[0])
    certificate.upper = 'a' if signs[0] > 0 else 'b'
    certificate.passed = True
    return certificate

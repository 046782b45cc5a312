# -*- coding: utf-8 -*-
"""
    olsen.runner
    ~~~~~~~~~~~~

    Runs a configuration and writes its artifacts.  Every subcommand returns
    a mapping of file names to payloads: a :class:`Table` becomes CSV and
    anything else JSON.

"""
from __future__ import absolute_import
import json
import os

import click
import numpy as np
from valuedispatch import valuedispatch

from .__about__ import __version__
from .analysis import (OlsenPair, olsen_B, olsen_B_prime, olsen_b,
                       olsen_b_prime, spectrum_grid)
from .config import ConfigError
from .dirichlet import (DirichletPolynomial, INAPPLICABLE, count_zeros,
                        descartes_bound, jameson_bound)
from .graycode import (CadicInterval, PushforwardMeasure, doubling_estimate,
                       encode, gamma_interval, gray, gray_alt,
                       gray_alt_inverse, gray_inverse, level_log_masses,
                       log_pushforward_mass)
from .measures import make_rng, running_exponents, sample_words
from .records import Record
from .symbolic import Word, enumerate_index
from .tangency import build_measure_pair, certify_tangency, \
    tangency_polynomial, solve_uv
from .utils import LOG, NumericFailure, parallel_map, plain


__all__ = ['EXIT_OK', 'EXIT_INVALID', 'EXIT_NUMERIC', 'Table', 'execute',
           'write_artifact', 'manifest', 'report_error', 'run']


EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERIC = 2


class Table(Record):
    """Rows of numbers under a header, written as CSV."""

    __slots__ = ('header', 'rows')


def _derivative(one_sided):
    # kinks have no derivative.
    return one_sided.left if one_sided.defined else float('nan')


@valuedispatch
def execute(subcommand, config, log):
    raise ConfigError('Unknown subcommand: {0!r}'.format(subcommand))


@execute.register('solve')
def execute_solve(_, config, log):
    base = config.base()
    solver = config['solver']
    result = solve_uv(solver['t'], solver['w'], base, log=log)
    probs_a, probs_b = build_measure_pair(solver['t'], solver['w'], base,
                                          result)
    certificate = certify_tangency(probs_a, probs_b)
    return {'solve.json': {
        'base': list(base.entries),
        'params_a': probs_a,
        'params_b': probs_b,
        'residuals': certificate.residuals,
        'solver': result,
        'certificate': certificate,
    }}


@execute.register('zeros')
def execute_zeros(_, config, log):
    zeros = config['zeros']
    if zeros['terms'] is None:
        spec = config.measure_spec()
        F = tangency_polynomial(spec.probs_a, spec.probs_b)
    else:
        try:
            F = DirichletPolynomial(zeros['terms'])
        except (TypeError, ValueError):
            raise ConfigError('zeros.terms must be [[a, p], ...]')
    log('counting zeros of {0!r}'.format(F))
    report = count_zeros(F, float(zeros['lo']), float(zeros['hi']))
    bound = jameson_bound(F)
    payload = report.to_dict()
    payload.update(terms=F.terms, descartes_bound=descartes_bound(F),
                   jameson_bound=None if bound is INAPPLICABLE else bound)
    return {'zeros.json': payload}


@execute.register('tau')
def execute_tau(_, config, log):
    pair = OlsenPair.from_spec(config.measure_spec())
    qs = config.q_grid()
    log('evaluating B and b at {0} points'.format(len(qs)))

    def row(q):
        return [q, olsen_b(pair, q), olsen_B(pair, q),
                _derivative(olsen_b_prime(pair, q)),
                _derivative(olsen_B_prime(pair, q))]

    rows = parallel_map(row, qs, config['threads'])
    return {'tau.csv': Table(header=['q', 'b', 'B', 'b_prime', 'B_prime'],
                             rows=rows)}


@execute.register('spectrum')
def execute_spectrum(_, config, log):
    pair = OlsenPair.from_spec(config.measure_spec())
    alphas = config.alpha_grid(pair)
    log('solving the spectrum at {0} points'.format(len(alphas)))
    points = spectrum_grid(pair, alphas, config['threads'])
    rows = [[p.alpha, p.dim, p.Dim, p.q_a, p.q_b] for p in points]
    return {'spectrum.csv': Table(header=['alpha', 'dim', 'Dim', 'q_a',
                                          'q_b'], rows=rows)}


@execute.register('gray')
def execute_gray(_, config, log):
    w = Word.parse(config['gray']['word'], config['gray']['c'])
    return {'gray.json': {
        'word': str(w),
        'c': config['gray']['c'],
        'index': enumerate_index(w),
        'interval': gamma_interval(w),
        'standard': str(gray(w)),
        'standard_inverse': str(gray_inverse(w)),
        'alternative': str(gray_alt(w)),
        'alternative_inverse': str(gray_alt_inverse(w)),
    }}


@execute.register('pushforward')
def execute_pushforward(_, config, log):
    section = config['pushforward']
    pf = PushforwardMeasure(config.measure_spec(), section['code'])
    level, index = section['level'], section['index']
    if section['all'] or index is None:
        masses = np.exp(level_log_masses(pf, level))
        count = len(masses)
        rows = [[i, i / count, (i + 1) / count, mass]
                for i, mass in enumerate(masses)]
        return {'pushforward.csv': Table(header=['index', 'lower', 'upper',
                                                 'mass'], rows=rows)}
    interval = CadicInterval(level, index, pf.c)
    log_mass = log_pushforward_mass(pf, interval)
    return {'pushforward.json': {
        'code': pf.code,
        'interval': interval,
        'word': str(interval.word()),
        'coded_word': str(encode(pf.code, interval.word())),
        'log_mass': log_mass,
        'mass': float(np.exp(log_mass)),
    }}


@execute.register('doubling')
def execute_doubling(_, config, log):
    section = config['doubling']
    pf = PushforwardMeasure(config.measure_spec(), section['code'])
    report = doubling_estimate(pf, section['max_level'], log=log)
    rows = [[level, ratio, running, report.bound] for level, ratio, running
            in zip(range(1, len(report.ratios) + 1), report.ratios,
                   report.running)]
    return {'doubling.csv': Table(header=['level', 'ratio', 'running_max',
                                          'bound'], rows=rows)}


@execute.register('sample-exponent')
def execute_sample_exponent(_, config, log):
    spec = config.measure_spec()
    depth, count = config['sample']['depth'], config['sample']['count']
    log('sampling {0} words of depth {1}'.format(count, depth))
    digits = sample_words(spec, depth, count, make_rng(config['seed']))
    exponents = running_exponents(spec, digits).T
    columns = np.column_stack([np.arange(1, depth + 1),
                               exponents.mean(axis=1), exponents])
    header = ['n', 'mean'] + ['word_{0}'.format(i) for i in range(count)]
    return {'sample-exponent.csv': Table(header=header, rows=columns)}


def write_artifact(path, payload):
    if isinstance(payload, Table):
        np.savetxt(path, np.asarray(payload.rows, dtype=float), fmt='%.17g',
                   delimiter=',', header=','.join(payload.header),
                   comments='')
        return
    with open(path, 'w') as f:
        json.dump(plain(payload), f, sort_keys=True, indent=2)
        f.write('\n')


def manifest(config):
    return {'tool': 'olsen', 'version': __version__,
            'subcommand': config['subcommand'], 'config': config.to_dict()}


def report_error(exc):
    """Prints an error as one JSON line to standard error."""
    message = getattr(exc, 'format_message', lambda: str(exc))()
    click.echo(json.dumps({'error': type(exc).__name__, 'message': message},
                          sort_keys=True), err=True)


def run(config, log=LOG):
    """Runs `config` and returns the exit status with the written paths."""
    paths = []
    try:
        config.validate()
        artifacts = execute(config['subcommand'], config, log)
        artifacts['manifest.json'] = manifest(config)
        out = config['out']
        if not os.path.isdir(out):
            os.makedirs(out)
        for filename in sorted(artifacts):
            path = os.path.join(out, filename)
            write_artifact(path, artifacts[filename])
            log('wrote {0}'.format(path))
            paths.append(path)
    except NumericFailure as exc:
        report_error(exc)
        return EXIT_NUMERIC, paths
    except (ValueError, TypeError, OSError) as exc:
        report_error(exc)
        return EXIT_INVALID, paths
    return EXIT_OK, paths

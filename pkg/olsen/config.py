# -*- coding: utf-8 -*-
"""
    olsen.config
    ~~~~~~~~~~~~

    Run configurations.  A configuration is a nested dict of sections which
    is read from JSON, overridden by command-line options and echoed into
    the manifest of every run.

"""
from __future__ import absolute_import, division
import copy
import json
import math

import numpy as np

from .analysis import admissible_window
from .graycode import CODES
from .measures import MeasureSpec
from .tangency import BaseQuadruple, build_measure_pair


__all__ = ['ConfigError', 'DEFAULTS', 'SUBCOMMANDS', 'RunConfig']


class ConfigError(ValueError):
    pass


#: Subcommands a configuration may run.
SUBCOMMANDS = ('solve', 'zeros', 'tau', 'spectrum', 'gray', 'pushforward',
               'doubling', 'sample-exponent')

#: Subcommands which draw random words.
SAMPLING_SUBCOMMANDS = ('sample-exponent',)

DEFAULTS = {
    'subcommand': None,
    'measure': {
        'source': 'explicit',
        # taken from the lengths of the vectors when not given.
        'c1': None,
        'c2': None,
        'probs_a': [0.1, 0.2, 0.3, 0.4],
        'probs_b': [0.25, 0.25, 0.25, 0.25],
        'schedule': {'kind': 'factorial'},
    },
    'solver': {'base': 'paper-110', 't': 0.001, 'w': 0.001},
    'grids': {
        # [lo, hi, count]
        'q': [-10., 10., 201],
        # the interior of the admissible window when null.
        'alpha': None,
        'alpha_points': 100,
    },
    'zeros': {'terms': None, 'lo': -20., 'hi': 20.},
    'gray': {'word': '', 'c': 4},
    # every interval of the level when all is set or index is null.
    'pushforward': {'level': 1, 'index': 0, 'all': False,
                    'code': 'standard'},
    'doubling': {'max_level': 8, 'code': 'standard'},
    'sample': {'depth': 5039, 'count': 100},
    'out': 'olsen-out',
    'seed': None,
    'threads': 1,
}


def merge(base, overrides, path=()):
    """Merges `overrides` into `base` in place.  ``None`` means not given."""
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in base:
            raise ConfigError('Unknown config key: {0}'.format(
                '.'.join(path + (key,))))
        if isinstance(base[key], dict) and key != 'schedule':
            if not isinstance(value, dict):
                raise ConfigError('{0} must be an object'.format(
                    '.'.join(path + (key,))))
            merge(base[key], value, path + (key,))
        else:
            base[key] = copy.deepcopy(value)
    return base


def _check_grid(name, grid):
    try:
        lo, hi, count = grid
        lo, hi = float(lo), float(hi)
    except (TypeError, ValueError):
        raise ConfigError('{0} must be [lo, hi, count]'.format(name))
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ConfigError('{0} bounds must be finite'.format(name))
    if not lo < hi:
        raise ConfigError('{0} needs lo < hi'.format(name))
    _check_int(name + ' count', count, 2)


def _check_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ConfigError('{0} must be an integer'.format(name))
    if value < minimum:
        raise ConfigError('{0} must be at least {1}'.format(name, minimum))


class RunConfig(object):

    def __init__(self, data=None):
        self.data = copy.deepcopy(DEFAULTS)
        if data:
            self.merge(data)

    @classmethod
    def load(cls, path):
        """Reads a config file, or the config echoed in a manifest."""
        with open(path) as f:
            try:
                data = json.load(f)
            except ValueError as exc:
                raise ConfigError('{0}: {1}'.format(path, exc))
        if not isinstance(data, dict):
            raise ConfigError('{0} does not hold an object'.format(path))
        if 'tool' in data and 'config' in data:
            data = data['config']
        return cls(data)

    def merge(self, overrides):
        merge(self.data, overrides)
        return self

    def __getitem__(self, key):
        return self.data[key]

    def validate(self):
        data = self.data
        subcommand = data['subcommand']
        if subcommand is not None and subcommand not in SUBCOMMANDS:
            raise ConfigError('Unknown subcommand: {0!r}'.format(subcommand))
        grids = data['grids']
        _check_grid('grids.q', grids['q'])
        if grids['alpha'] is not None:
            _check_grid('grids.alpha', grids['alpha'])
        _check_int('grids.alpha_points', grids['alpha_points'], 2)
        _check_int('threads', data['threads'], 1)
        seed = data['seed']
        if seed is None:
            if subcommand in SAMPLING_SUBCOMMANDS:
                raise ConfigError('{0} requires a seed'.format(subcommand))
        else:
            _check_int('seed', seed, 0)
        measure = data['measure']
        if measure['source'] == 'explicit':
            try:
                MeasureSpec.from_config(measure)
            except ValueError as exc:
                raise ConfigError('measure: {0}'.format(exc))
        elif measure['source'] != 'solved':
            raise ConfigError('Unknown measure source: {0!r}'.format(
                measure['source']))
        zeros = data['zeros']
        if not float(zeros['lo']) < float(zeros['hi']):
            raise ConfigError('zeros needs lo < hi')
        _check_int('gray.c', data['gray']['c'], 2)
        _check_int('pushforward.level', data['pushforward']['level'], 0)
        if data['pushforward']['index'] is not None:
            _check_int('pushforward.index', data['pushforward']['index'], 0)
        _check_int('doubling.max_level', data['doubling']['max_level'], 1)
        for section in ('pushforward', 'doubling'):
            if data[section]['code'] not in CODES:
                raise ConfigError('Unknown code: {0!r}'.format(
                    data[section]['code']))
        _check_int('sample.depth', data['sample']['depth'], 1)
        _check_int('sample.count', data['sample']['count'], 1)
        return self

    def base(self):
        base = self.data['solver']['base']
        if isinstance(base, (list, tuple)):
            return BaseQuadruple(*base)
        return BaseQuadruple.parse(str(base))

    def measure_spec(self):
        """The measure, solved from the solver section when its source is
        ``"solved"``.
        """
        measure = self.data['measure']
        if measure['source'] == 'solved':
            solver = self.data['solver']
            probs_a, probs_b = build_measure_pair(solver['t'], solver['w'],
                                                  self.base())
            measure = dict(measure, c1=None, c2=None,
                           probs_a=probs_a.tolist(), probs_b=probs_b.tolist())
        return MeasureSpec.from_config(measure)

    def q_grid(self):
        lo, hi, count = self.data['grids']['q']
        return np.linspace(lo, hi, count)

    def alpha_grid(self, pair):
        grids = self.data['grids']
        if grids['alpha'] is not None:
            lo, hi, count = grids['alpha']
            return np.linspace(lo, hi, count)
        lo, hi = admissible_window(pair)
        count = grids['alpha_points']
        return lo + (hi - lo) * np.arange(1, count + 1) / (count + 1)

    def to_dict(self):
        return copy.deepcopy(self.data)

    def to_json(self):
        return json.dumps(self.data, sort_keys=True, indent=2)

    def __repr__(self):
        return '<RunConfig {0}>'.format(self.data['subcommand'])

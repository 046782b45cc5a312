# -*- coding: utf-8 -*-
import json
import math

import numpy as np

from olsen.measures import MeasureSpec, ProbabilityVector
from olsen.symbolic import MixedSpaceSpec
from olsen.tangency import BaseQuadruple, build_measure_pair


__all__ = ['SKEWED', 'UNIFORM', 'solved_pair', 'solved_spec', 'mixed_spec',
           'random_base', 'read_json', 'read_csv']


SKEWED = (0.1, 0.2, 0.3, 0.4)
UNIFORM = (0.25, 0.25, 0.25, 0.25)


_solved = {}


def solved_pair(t=1e-3, w=1e-3, base='paper-110'):
    """The tangent vectors solved from `base`.  Cached per arguments."""
    key = (t, w, base)
    if key not in _solved:
        _solved[key] = build_measure_pair(t, w, BaseQuadruple.parse(base))
    return _solved[key]


def solved_spec(**kwargs):
    probs_a, probs_b = solved_pair(**kwargs)
    return MeasureSpec.single(probs_a, probs_b)


def mixed_spec():
    """Two letters on odd epochs and three on even ones."""
    return MeasureSpec(MixedSpaceSpec(2, 3), ProbabilityVector((0.3, 0.7)),
                       ProbabilityVector((0.2, 0.3, 0.5)))


def random_base(rng):
    while True:
        entries = rng.uniform(0.05, 1., 4)
        entries = entries / entries.sum()
        if abs(math.fsum(entries) - 1) <= 1e-15:
            try:
                return BaseQuadruple(*entries)
            except ValueError:
                pass


def read_json(path):
    with open(str(path)) as f:
        return json.load(f)


def read_csv(path):
    """Returns the header and the rows of a CSV artifact."""
    with open(str(path)) as f:
        header = f.readline().strip().split(',')
    rows = np.loadtxt(str(path), delimiter=',', skiprows=1, ndmin=2)
    return header, rows

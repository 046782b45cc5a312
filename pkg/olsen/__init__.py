# -*- coding: utf-8 -*-
"""
    olsen
    ~~~~~
"""
from __future__ import absolute_import

from .__about__ import __version__  # noqa
from .analysis import OlsenPair, olsen_B, olsen_b, spectrum
from .dirichlet import DirichletPolynomial, count_zeros
from .graycode import PushforwardMeasure
from .measures import MeasureSpec, ProbabilityVector
from .symbolic import EpochSchedule, MixedSpaceSpec, Word
from .tangency import BaseQuadruple, certify_tangency, solve_uv


__all__ = ['OlsenPair', 'olsen_B', 'olsen_b', 'spectrum',
           'DirichletPolynomial', 'count_zeros', 'PushforwardMeasure',
           'MeasureSpec', 'ProbabilityVector', 'EpochSchedule',
           'MixedSpaceSpec', 'Word', 'BaseQuadruple', 'certify_tangency',
           'solve_uv']

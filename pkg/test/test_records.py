# -*- coding: utf-8 -*-
import pickle

import numpy as np
import pytest

from olsen.records import default, Record


class Point(Record):

    __slots__ = ('x', 'y', 'label')

    label = default('origin')


class LabeledPoint(Point):

    __slots__ = ('weight',)

    weight = default(1.)


def test_fields_and_defaults():
    p = Point(x=1, y=2)
    assert Point.__fields__ == ('x', 'y', 'label')
    assert p.label == 'origin'
    assert Point(x=1, y=2, label='a').label == 'a'
    # fields without a default stay unset.
    q = Point(x=1)
    with pytest.raises(AttributeError):
        q.y
    with pytest.raises(TypeError):
        Point(z=3)


def test_inherited_fields():
    p = LabeledPoint(x=1, y=2)
    assert LabeledPoint.__fields__ == ('x', 'y', 'label', 'weight')
    assert p.label == 'origin'
    assert p.weight == 1.


def test_to_dict():
    p = Point(x=np.float64(0.5), y=float('inf'), label=(1, 2))
    assert p.to_dict() == {'x': 0.5, 'y': None, 'label': [1, 2]}
    nested = LabeledPoint(x=Point(x=1, y=2), y=np.arange(3))
    assert nested.to_dict() == {
        'x': {'x': 1, 'y': 2, 'label': 'origin'}, 'y': [0, 1, 2],
        'label': 'origin', 'weight': 1.}


def test_equality():
    assert Point(x=1, y=2) == Point(x=1, y=2)
    assert Point(x=1, y=2) != Point(x=1, y=3)
    assert Point(x=1, y=2, label='origin') == Point(x=1, y=2)
    assert Point(x=1, y=2) != LabeledPoint(x=1, y=2)
    with pytest.raises(TypeError):
        hash(Point(x=1, y=2))


def test_pickle():
    p = LabeledPoint(x=1, y=[2, 3], weight=0.5)
    q = pickle.loads(pickle.dumps(p))
    assert isinstance(q, LabeledPoint)
    assert q == p


def test_repr():
    assert repr(Point(x=1, y=2)) == "<Point x=1 y=2 label='origin'>"
    assert repr(Point(x=1)) == "<Point x=1 y=None label='origin'>"

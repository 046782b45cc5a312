# -*- coding: utf-8 -*-
"""
    olsen.records
    ~~~~~~~~~~~~~

    Slotted result records.  A field declares its default with
    :class:`default`; fields left unset take it when the record is built.

"""
from __future__ import absolute_import

from six import with_metaclass

from .utils import plain


__all__ = ['default', 'Record']


def record_from_members(record_class, members):
    return record_class(**dict(zip(record_class.__fields__, members)))


class default(object):

    __slots__ = ('value',)

    def __init__(self, value):
        self.value = value


class RecordMeta(type):

    def __new__(meta, name, bases, attrs):
        slots = attrs.get('__slots__', ())
        defaults = {}
        for attr in slots:
            if attr not in attrs:
                continue
            elif isinstance(attrs[attr], default):
                defaults[attr] = attrs.pop(attr).value
        cls = super(RecordMeta, meta).__new__(meta, name, bases, attrs)
        fields = ()
        for base in bases:
            fields += getattr(base, '__fields__', ())
            # inherit defaults from the base classes.
            for attr, value in getattr(base, '__defaults__', {}).items():
                defaults.setdefault(attr, value)
        cls.__fields__ = fields + tuple(slots)
        cls.__defaults__ = defaults
        return cls

    def __call__(cls, *args, **kwargs):
        obj = super(RecordMeta, cls).__call__(*args, **kwargs)
        for attr, value in cls.__defaults__.items():
            if not hasattr(obj, attr):
                setattr(obj, attr, value)
        return obj


class Record(with_metaclass(RecordMeta)):
    """The base of result records."""

    __slots__ = ()

    def __init__(self, **members):
        for attr, value in members.items():
            if attr not in self.__fields__:
                raise TypeError('{0} has no field {1!r}'.format(
                    type(self).__name__, attr))
            setattr(self, attr, value)

    def to_dict(self):
        return dict((attr, plain(getattr(self, attr, None)))
                    for attr in self.__fields__)

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return all(getattr(self, attr, None) == getattr(other, attr, None)
                   for attr in self.__fields__)

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    __hash__ = None

    def __reduce__(self):
        """Safen for Pickle."""
        members = [getattr(self, attr, None) for attr in self.__fields__]
        return (record_from_members, (type(self), members))

    def __repr__(self):
        fields = ' '.join('{0}={1!r}'.format(attr, getattr(self, attr, None))
                          for attr in self.__fields__)
        return '<{0} {1}>'.format(type(self).__name__, fields)

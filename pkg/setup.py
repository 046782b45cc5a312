# -*- coding: utf-8 -*-
"""
olsen
~~~~~

Multifractal analysis of measures on mixed symbolic spaces.

"""
from __future__ import with_statement
import os
from setuptools import find_packages, setup
from setuptools.command.test import test


# include __about__.py.
__dir__ = os.path.dirname(__file__)
about = {}
with open(os.path.join(__dir__, 'olsen', '__about__.py')) as f:
    exec(f.read(), about)


def requirements(filename):
    """Reads requirements from a file."""
    with open(filename) as f:
        return [x.split('#')[0].strip() for x in f.readlines()
                if x.split('#')[0].strip()]


# use pytest instead.
def run_tests(self):
    raise SystemExit(__import__('pytest').main(['-v']))
test.run_tests = run_tests


setup(
    name='olsen',
    version=about['__version__'],
    license=about['__license__'],
    author=about['__author__'],
    maintainer=about['__maintainer__'],
    maintainer_email=about['__maintainer_email__'],
    platforms='any',
    packages=find_packages(exclude=['test']),
    entry_points={
        'console_scripts': ['olsen = olsen.__main__:cli']
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    install_requires=requirements('requirements.txt'),
    tests_require=requirements('test/requirements.txt'),
    test_suite='...',
)

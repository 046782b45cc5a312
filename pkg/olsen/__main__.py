# -*- coding: utf-8 -*-
"""
    olsen.__main__
    ~~~~~~~~~~~~~~

    The command-line interface to solve tangent measure pairs and to emit
    the data of their multifractal functions.

    .. sourcecode:: console

       $ olsen --help

"""
from __future__ import absolute_import
from functools import wraps
import json
import sys

import click

from .__about__ import __version__
from .config import RunConfig
from .measures import ProbabilityVector
from .runner import EXIT_INVALID, report_error, run
from .symbolic import EpochSchedule
from .tangency import BaseQuadruple
from .utils import noop


__all__ = ['cli', 'solve', 'zeros', 'tau', 'spectrum', 'gray', 'pushforward',
           'doubling', 'sample_exponent', 'replay']


class OlsenCLI(click.Group):
    """A group with command aliases.  Usage errors are reported like the
    other invalid inputs: a JSON line on standard error and status 1.
    """

    def __init__(self, *args, **kwargs):
        super(OlsenCLI, self).__init__(*args, **kwargs)
        self.command_name_aliases = {}

    def command(self, *args, **kwargs):
        """Usage::

           @cli.command(aliases=['pf'])
           def pushforward():
               ...

        """
        aliases = kwargs.pop('aliases', None)
        decorator = super(OlsenCLI, self).command(*args, **kwargs)
        if aliases is None:
            return decorator
        def _decorator(f):
            cmd = decorator(f)
            for alias in aliases:
                self.command_name_aliases[alias] = cmd.name
            return cmd
        return _decorator

    def get_command(self, ctx, cmd_name):
        # resolve alias.
        cmd_name = self.command_name_aliases.get(cmd_name, cmd_name)
        return super(OlsenCLI, self).get_command(ctx, cmd_name)

    def main(self, args=None, prog_name=None, **extra):
        extra.pop('standalone_mode', None)
        try:
            rv = super(OlsenCLI, self).main(args, prog_name,
                                             standalone_mode=False, **extra)
        except click.ClickException as exc:
            report_error(exc)
            rv = EXIT_INVALID
        except click.Abort:
            click.echo(json.dumps({'error': 'Abort', 'message': 'Aborted'}),
                       err=True)
            rv = EXIT_INVALID
        sys.exit(rv or 0)


@click.command('olsen', cls=OlsenCLI)
@click.version_option(__version__)
def cli():
    pass


# custom parameter types


class ProbabilityVectorParam(click.ParamType):
    """Comma-separated probabilities."""

    name = 'probabilities'

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            entries = value
        else:
            try:
                entries = [float(x) for x in value.split(',')]
            except ValueError:
                self.fail('Invalid probabilities: %s' % value)
        try:
            return ProbabilityVector(entries).tolist()
        except ValueError as exc:
            self.fail(str(exc))

    def get_metavar(self, param, ctx=None):
        return 'P1,P2,...'


class BaseParam(click.ParamType):
    """A preset name or ``a,b,c,d``."""

    name = 'base'

    def convert(self, value, param, ctx):
        try:
            BaseQuadruple.parse(value)
        except ValueError as exc:
            self.fail(str(exc))
        return value.strip()

    def get_metavar(self, param, ctx=None):
        return 'PRESET|A,B,C,D'


class GridParam(click.ParamType):
    """``lo:hi:count``."""

    name = 'grid'

    def convert(self, value, param, ctx):
        try:
            lo, hi, count = value.split(':')
            return [float(lo), float(hi), int(count)]
        except ValueError:
            self.fail('Grid must be LO:HI:COUNT, not %s' % value)

    def get_metavar(self, param, ctx=None):
        return 'LO:HI:COUNT'


class TermsParam(click.ParamType):
    """Dirichlet terms as JSON ``[[a, p], ...]``."""

    name = 'terms'

    def convert(self, value, param, ctx):
        try:
            terms = json.loads(value)
            return [[float(a), float(p)] for a, p in terms]
        except (TypeError, ValueError):
            self.fail('Terms must be JSON [[a, p], ...], not %s' % value)

    def get_metavar(self, param, ctx=None):
        return '[[A,P],...]'


class ScheduleParam(click.ParamType):
    """``factorial`` or comma-separated values ``1,2,6,...``."""

    name = 'schedule'

    def convert(self, value, param, ctx):
        if value.strip() == 'factorial':
            return {'kind': 'factorial'}
        try:
            values = [int(x) for x in value.split(',')]
            return EpochSchedule(values).to_config()
        except ValueError as exc:
            self.fail(str(exc))

    def get_metavar(self, param, ctx=None):
        return 'factorial|T1,T2,...'


# common parameters


class Params(object):

    def __init__(self, params):
        self.params = params

    def __call__(self, f):
        for param in self.params[::-1]:
            f = param(f)
        return f


def verbose_log(message):
    click.echo(click.style('> ', fg='cyan') + message, err=True)


def measure_options(f):
    @click.option('--c1', type=int, help='Size of the first alphabet.')
    @click.option('--c2', type=int, help='Size of the second alphabet.')
    @click.option('--probs-a', type=ProbabilityVectorParam(),
                  help='Probabilities of the odd epochs.')
    @click.option('--probs-b', type=ProbabilityVectorParam(),
                  help='Probabilities of the even epochs.')
    @click.option('--schedule', type=ScheduleParam(),
                  help='Epoch schedule. (default: factorial)')
    @click.option('--explicit', 'source', flag_value='explicit',
                  help='Use --probs-a and --probs-b. (default)')
    @click.option('--solved', 'source', flag_value='solved',
                  help='Use the pair solved from --base, --t and --w.')
    @wraps(f)
    def wrapped(c1, c2, probs_a, probs_b, schedule, source, **kwargs):
        measure = {'c1': c1, 'c2': c2, 'probs_a': probs_a,
                   'probs_b': probs_b, 'schedule': schedule,
                   'source': source}
        return f(measure=measure, **kwargs)
    return wrapped


solver_options = Params([
    click.option('--base', type=BaseParam(),
                 help='paper-110, paper-9 or a,b,c,d. (default: paper-110)'),
    click.option('--t', type=float, help='Perturbation of the first group.'),
    click.option('--w', type=float, help='Free perturbation of the second '
                 'group.'),
])


def run_options(f):
    @click.option('--config', 'config_filename',
                  type=click.Path(exists=True, dir_okay=False),
                  help='JSON config or manifest to start from.')
    @click.option('--out', type=click.Path(file_okay=False),
                  help='Output directory. (default: olsen-out)')
    @click.option('--seed', type=click.IntRange(0, 2 ** 64 - 1),
                  help='Seed of the random generator.')
    @click.option('--threads', type=click.IntRange(1),
                  help='Worker threads for sweeps.')
    @click.option('-v', '--verbose', is_flag=True, help='Print progress.')
    @wraps(f)
    def wrapped(config_filename, out, seed, threads, verbose, **kwargs):
        overrides = f(**kwargs)
        overrides.update(out=out, seed=seed, threads=threads)
        return __run__(config_filename, overrides, verbose)
    return wrapped


def __run__(config_filename, overrides, verbose=False):
    try:
        if config_filename is None:
            config = RunConfig()
        else:
            config = RunConfig.load(config_filename)
        config.merge(overrides)
    except (ValueError, OSError) as exc:
        report_error(exc)
        return EXIT_INVALID
    status, paths = run(config, log=verbose_log if verbose else noop)
    for path in paths:
        click.secho(path, underline=True)
    return status


# sub-commands


@cli.command()
@solver_options
@run_options
def solve(base, t, w):
    """Solve a tangent pair and certify it."""
    return {'subcommand': 'solve',
            'solver': {'base': base, 't': t, 'w': w}}


@cli.command()
@click.option('--terms', type=TermsParam(),
              help='Terms of F.  (default: the tangency polynomial of the '
                   'measure)')
@click.option('--lo', type=float, help='Left end of the window.')
@click.option('--hi', type=float, help='Right end of the window.')
@measure_options
@solver_options
@run_options
def zeros(terms, lo, hi, measure, base, t, w):
    """Count the real zeros of a Dirichlet polynomial."""
    return {'subcommand': 'zeros', 'measure': measure,
            'solver': {'base': base, 't': t, 'w': w},
            'zeros': {'terms': terms, 'lo': lo, 'hi': hi}}


@cli.command()
@click.option('--q', 'q_grid', type=GridParam(),
              help='q grid. (default: -10:10:201)')
@measure_options
@solver_options
@run_options
def tau(q_grid, measure, base, t, w):
    """Emit B, b and their derivatives over a q grid."""
    return {'subcommand': 'tau', 'measure': measure,
            'solver': {'base': base, 't': t, 'w': w},
            'grids': {'q': q_grid}}


@cli.command()
@click.option('--alpha', 'alpha_grid', type=GridParam(),
              help='alpha grid. (default: inside the admissible window)')
@click.option('--alpha-points', type=click.IntRange(2),
              help='Points inside the admissible window. (default: 100)')
@measure_options
@solver_options
@run_options
def spectrum(alpha_grid, alpha_points, measure, base, t, w):
    """Emit the dimension spectrum over an alpha grid."""
    return {'subcommand': 'spectrum', 'measure': measure,
            'solver': {'base': base, 't': t, 'w': w},
            'grids': {'alpha': alpha_grid, 'alpha_points': alpha_points}}


@cli.command()
@click.argument('word')
@click.option('-c', 'c', type=click.IntRange(2),
              help='Alphabet size. (default: 4)')
@run_options
def gray(word, c):
    """Apply both Gray codes to a word."""
    return {'subcommand': 'gray', 'gray': {'word': word, 'c': c}}


@cli.command(aliases=['pf'])
@click.option('--level', type=click.IntRange(0), help='Interval level.')
@click.option('--index', type=click.IntRange(0),
              help='Interval index.  Every interval when --all is given.')
@click.option('--all', 'every', is_flag=True,
              help='Emit every interval of the level.')
@click.option('--code', type=click.Choice(['standard', 'alternative',
                                           'identity']),
              help='Gray code. (default: standard)')
@measure_options
@solver_options
@run_options
def pushforward(level, index, every, code, measure, base, t, w):
    """Emit the pushforward mass of c-adic intervals."""
    return {'subcommand': 'pushforward', 'measure': measure,
            'solver': {'base': base, 't': t, 'w': w},
            'pushforward': {'level': level, 'index': index,
                            'all': every or None, 'code': code}}


@cli.command()
@click.option('--max-level', type=click.IntRange(1),
              help='Deepest level. (default: 8)')
@click.option('--code', type=click.Choice(['standard', 'alternative',
                                           'identity']),
              help='Gray code. (default: standard)')
@measure_options
@solver_options
@run_options
def doubling(max_level, code, measure, base, t, w):
    """Emit adjacent-interval mass ratios per level."""
    return {'subcommand': 'doubling', 'measure': measure,
            'solver': {'base': base, 't': t, 'w': w},
            'doubling': {'max_level': max_level, 'code': code}}


@cli.command('sample-exponent', aliases=['sample'])
@click.option('--depth', type=click.IntRange(1),
              help='Word length. (default: 5039)')
@click.option('--count', type=click.IntRange(1),
              help='Number of words. (default: 100)')
@measure_options
@solver_options
@run_options
def sample_exponent(depth, count, measure, base, t, w):
    """Emit running exponents along sampled words."""
    return {'subcommand': 'sample-exponent', 'measure': measure,
            'solver': {'base': base, 't': t, 'w': w},
            'sample': {'depth': depth, 'count': count}}


@cli.command()
@click.argument('manifest', type=click.Path(exists=True, dir_okay=False))
@click.option('--out', type=click.Path(file_okay=False),
              help='Output directory. (default: the recorded one)')
@click.option('-v', '--verbose', is_flag=True, help='Print progress.')
def replay(manifest, out, verbose):
    """Run the config recorded in a manifest again."""
    return __run__(manifest, {'out': out}, verbose)


if __name__ == '__main__':
    cli(prog_name='python -m olsen')

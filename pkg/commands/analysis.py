"""Analysis commands: compare, evaluate, update, rectangularize, bounds, validate."""
import click
from flask import Blueprint

from commands.common import execute, rectangularize_option, scenario_options
from commands.dispatch import COMPARE_RULES

bp = Blueprint('analysis', __name__, cli_group=None)

SCENARIO = click.argument('scenario')


@bp.cli.command('compare')
@SCENARIO
@click.argument('rule', type=click.Choice(COMPARE_RULES))
@click.argument('f')
@click.argument('g')
@rectangularize_option
@scenario_options
def compare(scenario, rule, f, g, after_rectangularize, mode, seed, fmt):
    """Compare act F against act G under RULE, with witnessing priors."""
    execute('compare', scenario, (rule, f, g), fmt, mode=mode, seed=seed,
            after_rectangularize=after_rectangularize)


@bp.cli.command('evaluate')
@SCENARIO
@click.argument('rule', type=click.Choice(['bewley', 'maxmin']))
@click.argument('act')
@click.option('--recursive', is_flag=True, help='Backward induction over the partition (maxmin only).')
@rectangularize_option
@scenario_options
def evaluate(scenario, rule, act, recursive, after_rectangularize, mode, seed, fmt):
    """Value ACT: maxmin value, or lower and upper expectation for bewley."""
    execute('evaluate', scenario, (rule, act), fmt, mode=mode, seed=seed, recursive=recursive,
            after_rectangularize=after_rectangularize)


@bp.cli.command('update')
@SCENARIO
@click.argument('cell')
@scenario_options
def update(scenario, cell, mode, seed, fmt):
    """Prior-by-prior update of the credal set on CELL (e.g. RB or R,B)."""
    execute('update', scenario, (cell,), fmt, mode=mode, seed=seed)


@bp.cli.command('rectangularize')
@SCENARIO
@scenario_options
def rectangularize(scenario, mode, seed, fmt):
    """Extreme points of the rectangular hull of the credal set."""
    execute('rectangularize', scenario, (), fmt, mode=mode, seed=seed)


@bp.cli.command('bounds')
@SCENARIO
@scenario_options
def bounds(scenario, mode, seed, fmt):
    """Lower and upper probability of every partition cell."""
    execute('bounds', scenario, (), fmt, mode=mode, seed=seed)


@bp.cli.command('validate')
@SCENARIO
@scenario_options
def validate(scenario, mode, seed, fmt):
    """Parse and validate a scenario, then print it normalized."""
    execute('validate', scenario, (), fmt, mode=mode, seed=seed)

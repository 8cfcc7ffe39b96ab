"""Audit commands: dynamic consistency, set-level axioms and rule self-tests."""
import click
from flask import Blueprint

from commands.common import execute, rectangularize_option, scenario_options, split_names

bp = Blueprint('audit', __name__, cli_group=None)

ACTS = click.option('--acts', default=None, help='Comma-separated subset of the named acts.')


@bp.cli.command('audit-dc')
@click.argument('scenario')
@click.argument('rule', type=click.Choice(['bewley', 'maxmin']))
@ACTS
@click.option('--sample-acts', type=click.IntRange(min=0), default=None,
              help='Add this many seeded random acts.')
@rectangularize_option
@scenario_options
def audit_dc(scenario, rule, acts, sample_acts, after_rectangularize, mode, seed, fmt):
    """Dynamic consistency audit of RULE over every ordered act pair and cell.

    In lenient mode a prior giving a cell zero mass is dropped from that
    cell's update but still counts ex ante, so even the rectangular hull
    can fail. On ellsberg.scn the hull vertex (1, 0, 0) makes (f', g) fail
    on G; audit --acts f,g to reproduce the repaired Ellsberg choice.
    """
    execute('audit-dc', scenario, (rule,), fmt, mode=mode, seed=seed, acts=split_names(acts),
            sample_acts=sample_acts, after_rectangularize=after_rectangularize)


@bp.cli.command('check-axioms')
@click.argument('scenario')
@click.option('--hull', is_flag=True, help='Check against the rectangular hull, ignoring credal_set_hat.')
@scenario_options
def check_axioms(scenario, hull, mode, seed, fmt):
    """Set-level Coherence and Prudence conditions between C and C_hat."""
    execute('check-axioms', scenario, (), fmt, mode=mode, seed=seed, hull=hull)


@bp.cli.command('self-test')
@click.argument('scenario')
@ACTS
@scenario_options
def self_test(scenario, acts, mode, seed, fmt):
    """Consequentialism and completion checks on the scenario's acts."""
    execute('self-test', scenario, (), fmt, mode=mode, seed=seed, acts=split_names(acts))

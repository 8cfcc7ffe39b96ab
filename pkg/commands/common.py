"""Shared click options and the load-run-print cycle used by every command."""
import click
from flask import current_app

from commands.dispatch import error_result, run_command
from errors import CredalError
from scenario import load_scenario


class ScenarioError(click.ClickException):
    """Input error in a scenario or its arguments."""
    exit_code = 2


def scenario_options(func):
    """--mode, --seed and --format, shared by all commands."""
    options = [
        click.option('--mode', type=click.Choice(['strict', 'lenient']), default=None,
                     help='Treatment of priors giving a cell zero mass.'),
        click.option('--seed', type=int, default=None, help='Seed for sampled acts and priors.'),
        click.option('--format', 'fmt', type=click.Choice(['text', 'structured']), default=None,
                     help='Human-readable text or sorted JSON.'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def rectangularize_option(func):
    return click.option('--after-rectangularize', is_flag=True,
                        help='Replace the credal set by its rectangular hull first.')(func)


def split_names(value):
    if not value:
        return None
    return [name.strip() for name in value.split(',') if name.strip()]


def execute(command, scenario, args=(), fmt=None, **flags):
    """Load the scenario, run the command, print the report and exit with its code."""
    settings = current_app.config
    fmt = fmt or settings['DEFAULT_FORMAT']
    try:
        doc = load_scenario(scenario, search_dirs=(settings['FIXTURES_DIR'],))
    except CredalError as exc:
        result = error_result(exc)
    else:
        if flags.get('mode') is None and doc.mode is None:
            flags['mode'] = settings['DEFAULT_MODE']
        if flags.get('seed') is None and doc.seed is None:
            flags['seed'] = settings['DEFAULT_SEED']
        if 'sample_acts' in flags and flags['sample_acts'] is None:
            flags['sample_acts'] = settings['SAMPLE_ACTS']
        result = run_command(doc, command, args, flags)

    if result.is_error and fmt == 'text':
        raise ScenarioError(result.report['message'])
    click.echo(result.render(fmt))
    click.get_current_context().exit(result.exit_code)

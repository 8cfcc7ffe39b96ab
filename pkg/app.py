"""Application entry point for credalkit.

Commands run through Flask's CLI host:

    python app.py compare fixtures/ellsberg.scn maxmin f g
    flask --app app audit-dc ellsberg.scn maxmin --acts f,g
"""
import logging
import os
import sys
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path

from flask import Flask
from flask.cli import FlaskGroup

from commands import register_blueprints
from config import config

HANDLER_NAMES = ('credalkit.stderr', 'credalkit.file')
RECORD_FIELDS = frozenset(vars(logging.LogRecord('', 0, '', 0, '', (), None))) | {'message', 'asctime'}


class ContextFormatter(logging.Formatter):
    """Appends a record's ``extra`` context as (key: value, ...)."""

    def formatMessage(self, record):
        text = super().formatMessage(record)
        context = sorted((key, value) for key, value in vars(record).items() if key not in RECORD_FIELDS)
        if context:
            text += ' (' + ', '.join(f'{key}: {value}' for key, value in context) + ')'
        return text


def configure_logging(app):
    """Attach stderr (and optionally rotating file) handlers to the credalkit logger."""
    logger = logging.getLogger('credalkit')
    logger.setLevel(app.config['LOG_LEVEL'])
    for handler in list(logger.handlers):
        if handler.get_name() in HANDLER_NAMES:
            logger.removeHandler(handler)

    formatter = ContextFormatter(app.config['LOG_FORMAT'], app.config['LOG_DATE_FORMAT'])
    stream = logging.StreamHandler(sys.stderr)
    stream.set_name('credalkit.stderr')
    stream.setFormatter(formatter)
    logger.addHandler(stream)

    if app.config['LOG_TO_FILE']:
        logs_dir = Path(app.config['LOGS_DIR'])
        logs_dir.mkdir(parents=True, exist_ok=True)
        rotating = TimedRotatingFileHandler(
            logs_dir / 'credalkit.log', when='midnight',
            backupCount=app.config['LOG_BACKUP_DAYS'], encoding='utf-8')
        rotating.set_name('credalkit.file')
        rotating.setFormatter(formatter)
        logger.addHandler(rotating)
    return logger


def create_app(config_name=None):
    """Create the Flask app that hosts the credalkit commands."""
    app = Flask(__name__)
    config_name = config_name or os.environ.get('CREDALKIT_ENV', 'default')
    app.config.from_object(config[config_name])
    configure_logging(app)
    register_blueprints(app)
    return app


cli = FlaskGroup(
    create_app=create_app,
    add_default_commands=False,
    help='Decision making with sets of priors: compare, update, rectangularize and audit.'
)


if __name__ == '__main__':
    cli()

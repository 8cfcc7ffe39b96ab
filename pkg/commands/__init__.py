"""Command blueprint registration."""
from . import analysis, audit


def register_blueprints(app):
    """Register all command blueprints with the Flask app."""
    app.register_blueprint(analysis.bp)
    app.register_blueprint(audit.bp)

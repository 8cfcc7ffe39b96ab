"""Shared fixtures: the test app, its CLI runner and the Ellsberg data."""
from types import SimpleNamespace

import pytest
from hypothesis import settings

from app import create_app
from models import CredalSet, Partition, StateSpace, UtilityProfile

settings.register_profile('credalkit', derandomize=True, deadline=None, max_examples=60)
settings.load_profile('credalkit')


@pytest.fixture
def app():
    """Flask app with the testing configuration"""
    return create_app('testing')


@pytest.fixture
def runner(app):
    """CLI runner bound to the test app"""
    return app.test_cli_runner()


@pytest.fixture
def ellsberg():
    """States R, B, G; learn whether the ball is green."""
    space = StateSpace(('R', 'B', 'G'))
    C = CredalSet.from_vectors(space, [('1/3', '0', '2/3'), ('1/3', '2/3', '0')])
    partition = Partition.from_labels(space, [['G'], ['R', 'B']])
    return SimpleNamespace(
        space=space,
        C=C,
        partition=partition,
        G=space.cell(['G']),
        RB=space.cell(['R', 'B']),
        f=UtilityProfile(space, (10, 0, 10)),
        g=UtilityProfile(space, (0, 10, 10)),
        f_prime=UtilityProfile(space, (10, 0, 0)),
    )

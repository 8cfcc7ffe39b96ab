"""
Unit tests for the domain types and their invariants
"""

from fractions import Fraction

import pytest

from errors import InvalidPartition, InvalidStateSpace, UnknownConsequence, ValidationError
from models import (
    ConsequenceTable,
    Partition,
    StateSpace,
    UtilityProfile,
    as_fraction,
    format_fraction,
    named_acts,
)


class TestRationals:
    """Exact conversion at the boundary"""

    def test_strings_and_integers(self):
        assert as_fraction('2/6') == Fraction(1, 3)
        assert as_fraction(4) == 4

    def test_inexact_values_rejected(self):
        with pytest.raises(TypeError):
            as_fraction(0.25)
        with pytest.raises(TypeError):
            as_fraction(True)

    def test_format(self):
        assert format_fraction(Fraction(2, 6)) == '1/3'
        assert format_fraction(Fraction(6, 3)) == '2'
        assert format_fraction(Fraction(-1, 9)) == '-1/9'


class TestStateSpaceAndPartition:
    """Labels, cells and cell names"""

    def test_duplicate_labels(self):
        with pytest.raises(InvalidStateSpace):
            StateSpace(('R', 'B', 'R'))

    def test_single_state_needs_quotient(self):
        with pytest.raises(InvalidStateSpace):
            StateSpace(('R',))
        assert len(StateSpace(('RBG',), quotient=True)) == 1

    def test_cell_names(self, ellsberg):
        assert ellsberg.partition.names() == ['G', 'RB']
        assert ellsberg.partition.quotient_space().states == ('G', 'RB')

    def test_ambiguous_joined_names_use_plus(self):
        """Cells {ab} and {a, b} would both print as 'ab'"""
        space = StateSpace(('a', 'b', 'ab'))
        partition = Partition.from_labels(space, [['a', 'b'], ['ab']])
        assert partition.names() == ['a+b', 'ab']

    def test_overlapping_cells(self, ellsberg):
        with pytest.raises(InvalidPartition):
            Partition.from_labels(ellsberg.space, [['R', 'B'], ['B', 'G']])

    def test_cells_must_cover(self, ellsberg):
        with pytest.raises(InvalidPartition):
            Partition.from_labels(ellsberg.space, [['R', 'B']])

    def test_position(self, ellsberg):
        assert ellsberg.partition.position(ellsberg.RB) == 1
        with pytest.raises(InvalidPartition):
            ellsberg.partition.position(frozenset({0}))


class TestActs:
    """Utility profiles, consequence tables and act naming"""

    def test_constant_act(self, ellsberg):
        five = UtilityProfile.constant(ellsberg.space, 5)
        assert five.is_constant
        assert five.utils == (5, 5, 5)

    def test_difference(self, ellsberg):
        assert (ellsberg.f - ellsberg.g).utils == (10, -10, 0)

    def test_consequence_table(self, ellsberg):
        table = ConsequenceTable({'nothing': 0, 'prize': '10'})
        assert table.null_outcome() == 'nothing'
        assert table.profile(ellsberg.space, ['prize', 'nothing', 'prize']) == ellsberg.f
        with pytest.raises(UnknownConsequence):
            table.utility('jackpot')

    def test_named_acts(self, ellsberg):
        assert named_acts([ellsberg.f, ellsberg.g])[1] == ('a1', ellsberg.g)
        assert named_acts({'f': ellsberg.f})[0][0] == 'f'


class TestErrors:
    """Codes and locations"""

    def test_validation_error_location(self):
        error = ValidationError('prior sums to 2/3, not 1', field='credal_set[0]', line=5)
        assert str(error) == 'field credal_set[0], line 5: prior sums to 2/3, not 1'
        assert error.to_dict()['code'] == 'VALIDATION_ERROR'

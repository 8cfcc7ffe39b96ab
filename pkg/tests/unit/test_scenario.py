"""
Unit tests for scenario parsing, validation and rendering
"""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from credal.sampling import random_instance, sample_acts
from errors import ParseError, ValidationError
from models import UpdateMode
from scenario import ScenarioDocument, load_scenario, parse_scenario, render_scenario

FIXTURES = Path(__file__).resolve().parents[2] / 'fixtures'

MINIMAL = {
    'states': ['R', 'B', 'G'],
    'partition': [['G'], ['R', 'B']],
    'credal_set': [['1/3', '0', '2/3'], ['1/3', '2/3', '0']],
    'acts': {'f': [10, 0, 10]},
}


def document(**changes):
    data = dict(MINIMAL, **changes)
    return json.dumps(data, indent=2)


class TestParse:
    """Valid documents"""

    def test_ellsberg_fixture(self):
        doc = load_scenario(FIXTURES / 'ellsberg.scn')
        assert doc.space.states == ('R', 'B', 'G')
        assert doc.partition.names() == ['G', 'RB']
        assert doc.credal_set.vertices[0].mass == (Fraction(1, 3), 0, Fraction(2, 3))
        assert [name for name, _ in doc.acts] == ['f', 'g', "f'"]
        assert doc.act("f'").utils == (10, 0, 0)
        assert len(doc.credal_set_hat) == 3
        assert doc.mode is UpdateMode.LENIENT
        assert doc.seed == 20200401

    def test_consequence_labels(self):
        doc = load_scenario(FIXTURES / 'singleton.scn')
        assert doc.act('bet_a').utils == (10, 0, 0)
        assert doc.act('safe').is_constant
        assert doc.consequence_table.null_outcome() == 'nothing'

    def test_fixture_lookup_by_name(self):
        doc = load_scenario('singleton.scn', search_dirs=(FIXTURES,))
        assert doc.name == 'singleton'

    def test_cell_lookup(self):
        doc = parse_scenario(document())
        assert doc.cell('R,B') == frozenset({0, 1})
        assert doc.cell('RB') == frozenset({0, 1})
        assert doc.cell('G') == frozenset({2})
        with pytest.raises(ValidationError):
            doc.cell('Y')


class TestRoundTrip:
    """parse(render(doc)) == doc"""

    @pytest.mark.parametrize('name', ['ellsberg.scn', 'singleton.scn'])
    def test_fixtures(self, name):
        doc = load_scenario(FIXTURES / name)
        assert parse_scenario(render_scenario(doc)) == doc

    def test_random_instances(self):
        """Generated instances with rational acts survive rendering exactly"""
        for seed in range(10):
            space, C, partition = random_instance(seed)
            doc = ScenarioDocument(space=space, partition=partition, credal_set=C,
                                   acts=sample_acts(space, 3, seed), seed=seed, mode=UpdateMode.STRICT)
            assert parse_scenario(render_scenario(doc)) == doc


class TestDiagnostics:
    """ParseError and ValidationError carry a location"""

    def test_not_normalized(self):
        text = document(credal_set=[['1/3', '1/3', '0']])
        with pytest.raises(ValidationError) as excinfo:
            parse_scenario(text)
        assert excinfo.value.field == 'credal_set[0]'
        assert excinfo.value.line == text.splitlines().index('  "credal_set": [') + 1
        assert 'not 1' in str(excinfo.value)

    def test_duplicate_state(self):
        with pytest.raises(ValidationError) as excinfo:
            parse_scenario(document(states=['R', 'B', 'R']))
        assert excinfo.value.field == 'states'
        assert 'duplicate' in excinfo.value.message

    def test_float_entry(self):
        with pytest.raises(ValidationError) as excinfo:
            parse_scenario(document(credal_set=[[0.5, 0.5, 0]]))
        assert excinfo.value.field == 'credal_set[0][0]'

    def test_unknown_state_in_partition(self):
        with pytest.raises(ValidationError) as excinfo:
            parse_scenario(document(partition=[['Y'], ['R', 'B', 'G']]))
        assert excinfo.value.field == 'partition'

    def test_wrong_act_length(self):
        with pytest.raises(ValidationError) as excinfo:
            parse_scenario(document(acts={'f': [1, 2]}))
        assert excinfo.value.field == 'acts.f'

    def test_unknown_consequence_label(self):
        with pytest.raises(ValidationError):
            parse_scenario(document(consequence_table={'prize': 10}, acts={'f': ['prize', 'prize', 'oops']}))

    def test_unknown_key(self):
        with pytest.raises(ValidationError):
            parse_scenario(document(extra=1))

    def test_missing_key(self):
        data = dict(MINIMAL)
        del data['acts']
        with pytest.raises(ValidationError) as excinfo:
            parse_scenario(json.dumps(data))
        assert excinfo.value.field == 'acts'

    def test_bad_mode(self):
        with pytest.raises(ValidationError):
            parse_scenario(document(options={'mode': 'sloppy'}))

    def test_malformed_json(self):
        with pytest.raises(ParseError) as excinfo:
            parse_scenario('{\n  "states": ["R", "B",\n}')
        assert excinfo.value.line == 3

    def test_duplicate_act_name(self):
        with pytest.raises(ParseError):
            parse_scenario('{"acts": {"f": [1, 2, 3], "f": [3, 2, 1]}}')

    def test_non_utf8_file(self, tmp_path):
        path = tmp_path / 'latin1.scn'
        path.write_bytes(b'{"states": ["\xff"]}')
        with pytest.raises(ParseError) as excinfo:
            load_scenario(path)
        assert 'not valid UTF-8' in str(excinfo.value)

    def test_states_must_be_a_list(self):
        """A bare string is not split into one-letter states"""
        with pytest.raises(ValidationError) as excinfo:
            parse_scenario(document(states='RBG'))
        assert excinfo.value.field == 'states'

    def test_partition_cells_must_be_lists(self):
        with pytest.raises(ValidationError) as excinfo:
            parse_scenario(document(partition=[['G'], 'RB']))
        assert excinfo.value.field == 'partition'
        assert 'cell 1' in excinfo.value.message

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_scenario(tmp_path / 'nowhere.scn')

    def test_unknown_act(self):
        doc = parse_scenario(document())
        with pytest.raises(ValidationError):
            doc.act('h')

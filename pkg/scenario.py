"""Scenario documents: parsing, validation and rendering.

A scenario is a JSON document. Rationals are written as "a/b" strings or
integers so that a parse/render round trip is exact.

    {
      "name": "ellsberg",
      "states": ["R", "B", "G"],
      "partition": [["G"], ["R", "B"]],
      "credal_set": [["1/3", "0", "2/3"], ["1/3", "2/3", "0"]],
      "acts": {"f": [10, 0, 10], "g": [0, 10, 10]},
      "options": {"mode": "lenient", "seed": 20200401}
    }

Optional keys: "description", "consequence_table" (label -> utility; acts
may then use labels), "credal_set_hat" (second set for axiom checks).
"""
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from errors import CredalError, ParseError, ValidationError
from models import (
    ConsequenceTable,
    CredalSet,
    Partition,
    Prior,
    StateSpace,
    UpdateMode,
    UtilityProfile,
    as_fraction,
    format_vector,
)

logger = logging.getLogger('credalkit.scenario')

KNOWN_KEYS = ('name', 'description', 'states', 'partition', 'credal_set', 'credal_set_hat',
              'acts', 'consequence_table', 'options')


@dataclass(frozen=True)
class ScenarioDocument:
    space: StateSpace
    partition: Partition
    credal_set: CredalSet
    acts: tuple
    consequence_table: ConsequenceTable = None
    credal_set_hat: CredalSet = None
    mode: UpdateMode = None
    seed: int = None
    name: str = ''
    description: str = ''

    def act(self, name):
        for candidate, profile in self.acts:
            if candidate == name:
                return profile
        known = ', '.join(n for n, _ in self.acts)
        raise ValidationError(f'unknown act {name!r} (known: {known})', field='acts')

    def select_acts(self, names):
        return tuple((name, self.act(name)) for name in names)

    def cell(self, text):
        """Resolve "R,B", "R+B", "RB" or a single label to a cell of the partition."""
        tokens = [t for t in text.replace('+', ',').split(',') if t.strip()]
        states = self.space.states
        if all(t.strip() in states for t in tokens):
            cell = self.space.cell(t.strip() for t in tokens)
        else:
            names = self.partition.names()
            if text not in names:
                raise ValidationError(f'{text!r} names neither states nor a partition cell',
                                      field='partition')
            cell = self.partition.cells[names.index(text)]
        return cell

    def to_dict(self):
        document = {}
        if self.name:
            document['name'] = self.name
        if self.description:
            document['description'] = self.description
        document['states'] = list(self.space.states)
        document['partition'] = self.partition.to_dict()['cells']
        document['credal_set'] = self.credal_set.to_dict()['vertices']
        if self.credal_set_hat is not None:
            document['credal_set_hat'] = self.credal_set_hat.to_dict()['vertices']
        if self.consequence_table is not None:
            document['consequence_table'] = self.consequence_table.to_dict()
        document['acts'] = {name: format_vector(act.utils) for name, act in self.acts}
        options = {}
        if self.mode is not None:
            options['mode'] = self.mode.value
        if self.seed is not None:
            options['seed'] = self.seed
        if options:
            document['options'] = options
        return document


def _line_of(text, key):
    needle = f'"{key}"'
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


def _unique_pairs(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise ValueError(f'duplicate key {key!r}')
        seen[key] = value
    return seen


class _Reader:
    """Validates one parsed document, attaching field paths and lines to errors."""

    def __init__(self, text, raw):
        self.text = text
        self.raw = raw

    def fail(self, message, field, key=None):
        key = key or field.split('[')[0].split('.')[0]
        raise ValidationError(message, field=field, line=_line_of(self.text, key))

    def require(self, key):
        if key not in self.raw:
            raise ValidationError(f'missing required key {key!r}', field=key)
        return self.raw[key]

    def rational(self, value, field, table=None):
        if isinstance(value, str) and table is not None and value in table:
            return table.utility(value)
        try:
            return as_fraction(value)
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail(f'{value!r} is not an exact rational (use integers or "a/b" strings)', field)

    def vector(self, values, field, table=None):
        if not isinstance(values, list):
            self.fail('expected a list of rationals', field)
        return tuple(self.rational(v, f'{field}[{k}]', table) for k, v in enumerate(values))

    def credal_set(self, space, key):
        vectors = self.raw[key]
        if not isinstance(vectors, list) or not vectors:
            self.fail('expected a non-empty list of prior vectors', key)
        priors = []
        for k, vector in enumerate(vectors):
            field = f'{key}[{k}]'
            try:
                priors.append(Prior(space, self.vector(vector, field)))
            except ValidationError:
                raise
            except CredalError as exc:
                self.fail(exc.message, field)
        return CredalSet(space, tuple(priors))

    def document(self):
        raw = self.raw
        if not isinstance(raw, dict):
            raise ValidationError('a scenario must be a JSON object')
        for key in raw:
            if key not in KNOWN_KEYS:
                self.fail(f'unknown key {key!r}', key)
        states = self.require('states')
        if not isinstance(states, list):
            self.fail('expected a list of state labels', 'states')
        try:
            space = StateSpace(tuple(states))
        except (CredalError, TypeError) as exc:
            self.fail(str(exc), 'states')

        groups = self.require('partition')
        if not isinstance(groups, list):
            self.fail('expected a list of lists of state labels', 'partition')
        for position, group in enumerate(groups):
            if not isinstance(group, list):
                self.fail(f'cell {position} must be a list of state labels, got {group!r}', 'partition')
        try:
            partition = Partition.from_labels(space, groups)
        except CredalError as exc:
            self.fail(exc.message, 'partition')
        except TypeError:
            self.fail('expected a list of lists of state labels', 'partition')

        self.require('credal_set')
        credal_set = self.credal_set(space, 'credal_set')
        credal_set_hat = self.credal_set(space, 'credal_set_hat') if 'credal_set_hat' in raw else None

        table = None
        if 'consequence_table' in raw:
            entries = raw['consequence_table']
            if not isinstance(entries, dict) or not entries:
                self.fail('expected a non-empty map from labels to utilities', 'consequence_table')
            table = ConsequenceTable(tuple(
                (label, self.rational(value, f'consequence_table.{label}'))
                for label, value in entries.items()))

        acts_raw = self.require('acts')
        if not isinstance(acts_raw, dict) or not acts_raw:
            self.fail('expected a non-empty map from act names to utility vectors', 'acts')
        acts = []
        for name, values in acts_raw.items():
            field = f'acts.{name}'
            utils = self.vector(values, field, table)
            if len(utils) != len(space):
                self.fail(f'act {name!r} has {len(utils)} entries for {len(space)} states', field)
            acts.append((name, UtilityProfile(space, utils)))

        options = raw.get('options', {})
        if not isinstance(options, dict):
            self.fail('expected a map of options', 'options')
        mode = seed = None
        if 'mode' in options:
            try:
                mode = UpdateMode(options['mode'])
            except ValueError:
                self.fail(f'mode must be strict or lenient, got {options["mode"]!r}', 'options.mode', 'mode')
        if 'seed' in options:
            seed = options['seed']
            if not isinstance(seed, int) or isinstance(seed, bool):
                self.fail(f'seed must be an integer, got {seed!r}', 'options.seed', 'seed')

        return ScenarioDocument(
            space=space,
            partition=partition,
            credal_set=credal_set,
            acts=tuple(acts),
            consequence_table=table,
            credal_set_hat=credal_set_hat,
            mode=mode,
            seed=seed,
            name=str(raw.get('name', '')),
            description=str(raw.get('description', '')),
        )


def parse_scenario(text):
    """Parse and validate scenario text into a ScenarioDocument."""
    try:
        raw = json.loads(text, object_pairs_hook=_unique_pairs)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    document = _Reader(text, raw).document()
    logger.debug('Parsed scenario', extra={
        'scenario': document.name, 'states': len(document.space), 'vertices': len(document.credal_set)})
    return document


def render_scenario(document):
    return json.dumps(document.to_dict(), indent=2) + '\n'


def load_scenario(path, search_dirs=()):
    """Read a scenario from a path, falling back to the given directories."""
    candidates = [Path(path)] + [Path(d) / path for d in search_dirs]
    for candidate in candidates:
        if candidate.is_file():
            try:
                text = candidate.read_text(encoding='utf-8')
            except OSError as exc:
                raise ParseError(f'cannot read {candidate}: {exc.strerror}') from None
            except UnicodeDecodeError as exc:
                raise ParseError(f'{candidate} is not valid UTF-8 (byte {exc.start})') from None
            logger.info('Loading scenario', extra={'path': str(candidate)})
            return parse_scenario(text)
    raise ParseError(f'scenario file {path} not found')


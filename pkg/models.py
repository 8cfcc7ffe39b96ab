"""Domain types for credalkit.

All values are immutable after construction and every vector is indexed in
the canonical state order fixed by its StateSpace. Numbers are exact
``Fraction``s; floats are rejected at the boundary.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from errors import (
    DimensionMismatch,
    EmptyCredalSet,
    InvalidPartition,
    InvalidPrior,
    InvalidStateSpace,
    UnknownConsequence,
)


def as_fraction(value):
    """Convert an int, Fraction or rational string ("a/b", "3") exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f'refusing inexact or boolean value {value!r}')
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f'cannot read {value!r} as a rational number')


def format_fraction(value):
    """Render a Fraction as "a/b" (or "a" for integers)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def format_vector(values):
    return [format_fraction(v) for v in values]


class UpdateMode(str, Enum):
    """How prior-by-prior updating treats priors giving the cell zero mass."""
    STRICT = 'strict'
    LENIENT = 'lenient'


class Rule(str, Enum):
    BEWLEY = 'bewley'
    MAXMIN = 'maxmin'


class VerdictKind(str, Enum):
    STRICTLY_BETTER = 'StrictlyBetter'
    INDIFFERENT = 'Indifferent'
    STRICTLY_WORSE = 'StrictlyWorse'
    INCOMPARABLE = 'Incomparable'


class Ordering(str, Enum):
    BETTER = 'Better'
    INDIFFERENT = 'Indifferent'
    WORSE = 'Worse'


@dataclass(frozen=True)
class StateSpace:
    """Ordered, finite set of state labels.

    Quotient spaces (whose states are partition cells) may have a single
    state; user-facing spaces need at least two.
    """
    states: tuple
    quotient: bool = False

    def __post_init__(self):
        states = tuple(self.states)
        object.__setattr__(self, 'states', states)
        minimum = 1 if self.quotient else 2
        if len(states) < minimum:
            raise InvalidStateSpace(f'a state space needs at least {minimum} states', states=states)
        for label in states:
            if not isinstance(label, str) or not label:
                raise InvalidStateSpace(f'state labels must be non-empty strings, got {label!r}')
        if len(set(states)) != len(states):
            duplicates = sorted({s for s in states if states.count(s) > 1})
            raise InvalidStateSpace(f'duplicate state labels: {", ".join(duplicates)}')

    def __len__(self):
        return len(self.states)

    def index(self, label):
        try:
            return self.states.index(label)
        except ValueError:
            raise InvalidStateSpace(f'unknown state {label!r}', state=label) from None

    def cell(self, labels):
        """State-index set for an iterable of labels."""
        return frozenset(self.index(label) for label in labels)

    @property
    def everything(self):
        return frozenset(range(len(self.states)))

    def cell_name(self, cell):
        return ''.join(self.states[i] for i in sorted(cell)) or '{}'

    def to_dict(self):
        return {'states': list(self.states)}


@dataclass(frozen=True)
class Partition:
    """Ordered information structure: disjoint, covering, non-empty cells."""
    space: StateSpace
    cells: tuple

    def __post_init__(self):
        cells = tuple(frozenset(cell) for cell in self.cells)
        object.__setattr__(self, 'cells', cells)
        n = len(self.space)
        if not cells:
            raise InvalidPartition('a partition needs at least one cell')
        seen = set()
        for position, cell in enumerate(cells):
            if not cell:
                raise InvalidPartition(f'cell {position} is empty', cell=position)
            if any(i < 0 or i >= n for i in cell):
                raise InvalidPartition(f'cell {position} refers to unknown states', cell=position)
            overlap = seen & cell
            if overlap:
                labels = ', '.join(self.space.states[i] for i in sorted(overlap))
                raise InvalidPartition(f'cells overlap on {labels}', cell=position)
            seen |= cell
        if seen != self.space.everything:
            missing = ', '.join(self.space.states[i] for i in sorted(self.space.everything - seen))
            raise InvalidPartition(f'cells do not cover states {missing}')

    @classmethod
    def from_labels(cls, space, groups):
        return cls(space, tuple(space.cell(group) for group in groups))

    @classmethod
    def trivial(cls, space):
        return cls(space, (space.everything,))

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def names(self):
        names = [self.space.cell_name(cell) for cell in self.cells]
        if len(set(names)) != len(names):
            names = ['+'.join(self.space.states[i] for i in sorted(cell)) for cell in self.cells]
        return names

    def position(self, cell):
        cell = frozenset(cell)
        for position, candidate in enumerate(self.cells):
            if candidate == cell:
                return position
        raise InvalidPartition(f'{self.space.cell_name(cell)} is not a cell of the partition')

    def quotient_space(self):
        return StateSpace(tuple(self.names()), quotient=True)

    def to_dict(self):
        return {'cells': [[self.space.states[i] for i in sorted(cell)] for cell in self.cells]}


@dataclass(frozen=True)
class Prior:
    """Exact probability vector over a StateSpace."""
    space: StateSpace
    mass: tuple

    def __post_init__(self):
        mass = tuple(as_fraction(m) for m in self.mass)
        object.__setattr__(self, 'mass', mass)
        if len(mass) != len(self.space):
            raise DimensionMismatch(
                f'prior has {len(mass)} entries for {len(self.space)} states',
                expected=len(self.space), actual=len(mass))
        if any(m < 0 for m in mass):
            raise InvalidPrior('prior has a negative entry', mass=format_vector(mass))
        if sum(mass) != 1:
            raise InvalidPrior(f'prior sums to {format_fraction(sum(mass))}, not 1',
                               mass=format_vector(mass))

    def __getitem__(self, index):
        return self.mass[index]

    def __len__(self):
        return len(self.mass)

    def mass_of(self, cell):
        return sum((self.mass[i] for i in cell), Fraction(0))

    @property
    def support(self):
        return frozenset(i for i, m in enumerate(self.mass) if m > 0)

    def to_dict(self):
        return {'mass': format_vector(self.mass)}

    def __str__(self):
        return '(' + ', '.join(format_vector(self.mass)) + ')'


@dataclass(frozen=True)
class UtilityProfile:
    """An act in utility units: one rational per state."""
    space: StateSpace
    utils: tuple

    def __post_init__(self):
        utils = tuple(as_fraction(u) for u in self.utils)
        object.__setattr__(self, 'utils', utils)
        if len(utils) != len(self.space):
            raise DimensionMismatch(
                f'act has {len(utils)} entries for {len(self.space)} states',
                expected=len(self.space), actual=len(utils))

    @classmethod
    def constant(cls, space, value):
        return cls(space, (as_fraction(value),) * len(space))

    def __getitem__(self, index):
        return self.utils[index]

    def __len__(self):
        return len(self.utils)

    def _check(self, other):
        if self.space != other.space:
            raise DimensionMismatch('acts are defined over different state spaces')

    def __sub__(self, other):
        self._check(other)
        return UtilityProfile(self.space, tuple(a - b for a, b in zip(self.utils, other.utils)))

    def __neg__(self):
        return UtilityProfile(self.space, tuple(-u for u in self.utils))

    def affine(self, scale, shift=0):
        """Positive affine transform a*u + b."""
        scale, shift = as_fraction(scale), as_fraction(shift)
        return UtilityProfile(self.space, tuple(scale * u + shift for u in self.utils))

    def expectation(self, prior):
        if prior.space != self.space:
            raise DimensionMismatch('act and prior are defined over different state spaces')
        return sum((u * p for u, p in zip(self.utils, prior.mass)), Fraction(0))

    @property
    def is_constant(self):
        return len(set(self.utils)) == 1

    def to_dict(self):
        return {'utils': format_vector(self.utils)}

    def __str__(self):
        return '(' + ', '.join(format_vector(self.utils)) + ')'


@dataclass(frozen=True)
class ConsequenceTable:
    """Optional mapping from consequence labels to utilities."""
    entries: tuple

    def __post_init__(self):
        pairs = self.entries.items() if hasattr(self.entries, 'items') else self.entries
        pairs = tuple((str(label), as_fraction(value)) for label, value in pairs)
        labels = [label for label, _ in pairs]
        if len(set(labels)) != len(labels):
            raise UnknownConsequence('duplicate consequence labels')
        object.__setattr__(self, 'entries', pairs)

    def utility(self, label):
        for candidate, value in self.entries:
            if candidate == label:
                return value
        raise UnknownConsequence(f'unknown consequence {label!r}', consequence=label)

    def __contains__(self, label):
        return any(candidate == label for candidate, _ in self.entries)

    def null_outcome(self):
        """A label with utility 0 (the x_0 normalization), or None."""
        for label, value in self.entries:
            if value == 0:
                return label
        return None

    def profile(self, space, labels):
        labels = tuple(labels)
        if len(labels) != len(space):
            raise DimensionMismatch(
                f'act has {len(labels)} consequences for {len(space)} states',
                expected=len(space), actual=len(labels))
        return UtilityProfile(space, tuple(self.utility(label) for label in labels))

    def to_dict(self):
        return {label: format_fraction(value) for label, value in self.entries}


@dataclass(frozen=True)
class CredalSet:
    """Convex hull of a finite, non-empty list of priors.

    The vertex list may be redundant; every operation uses hull semantics.
    """
    space: StateSpace
    vertices: tuple

    def __post_init__(self):
        vertices = tuple(self.vertices)
        object.__setattr__(self, 'vertices', vertices)
        if not vertices:
            raise EmptyCredalSet('a credal set needs at least one prior')
        for vertex in vertices:
            if vertex.space != self.space:
                raise DimensionMismatch('vertex is defined over a different state space')

    @classmethod
    def from_vectors(cls, space, vectors):
        return cls(space, tuple(Prior(space, tuple(v)) for v in vectors))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def to_dict(self):
        return {'vertices': [format_vector(v.mass) for v in self.vertices]}


@dataclass(frozen=True)
class SupportResult:
    """Minimum of a linear functional over a credal set, with its minimizer."""
    value: Fraction
    witness: Prior

    def to_dict(self):
        return {'value': format_fraction(self.value), 'witness': format_vector(self.witness.mass)}


@dataclass(frozen=True)
class MembershipResult:
    """Exact hull membership with a certificate.

    ``weights`` is a convex combination of the vertices reproducing the point;
    ``separator`` is a direction d with d.q < min_k d.v_k when the point is outside.
    """
    member: bool
    weights: tuple = None
    separator: tuple = None

    def __bool__(self):
        return self.member

    def to_dict(self):
        return {
            'member': self.member,
            'weights': format_vector(self.weights) if self.weights is not None else None,
            'separator': format_vector(self.separator) if self.separator is not None else None
        }


@dataclass(frozen=True)
class InclusionResult:
    """Hull inclusion, with the first uncovered vertex when it fails."""
    included: bool
    uncovered: Prior = None
    separator: tuple = None

    def __bool__(self):
        return self.included

    def to_dict(self):
        return {
            'included': self.included,
            'uncovered': format_vector(self.uncovered.mass) if self.uncovered is not None else None,
            'separator': format_vector(self.separator) if self.separator is not None else None
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of a unanimity (Bewley) comparison of f against g.

    ``f_minus_g`` and ``g_minus_f`` are the support minima of the two
    differences; their witnesses are the certificates.
    """
    kind: VerdictKind
    f_minus_g: SupportResult
    g_minus_f: SupportResult

    @property
    def prefers_f(self):
        """A prior under which f is strictly better, if any."""
        return self.g_minus_f.witness if self.g_minus_f.value < 0 else None

    @property
    def prefers_g(self):
        return self.f_minus_g.witness if self.f_minus_g.value < 0 else None

    def to_dict(self):
        return {
            'verdict': self.kind.value,
            'min_f_minus_g': self.f_minus_g.to_dict(),
            'min_g_minus_f': self.g_minus_f.to_dict(),
            'prefers_f': format_vector(self.prefers_f.mass) if self.prefers_f else None,
            'prefers_g': format_vector(self.prefers_g.mass) if self.prefers_g else None
        }


@dataclass(frozen=True)
class MaxminComparison:
    ordering: Ordering
    value_f: SupportResult
    value_g: SupportResult

    def to_dict(self):
        return {
            'ordering': self.ordering.value,
            'value_f': self.value_f.to_dict(),
            'value_g': self.value_g.to_dict()
        }


def named_acts(acts):
    """Normalize a mapping, a list of (name, act) pairs or a bare list of acts."""
    if hasattr(acts, 'items'):
        return tuple(acts.items())
    acts = tuple(acts)
    if all(isinstance(act, UtilityProfile) for act in acts):
        return tuple((f'a{position}', act) for position, act in enumerate(acts))
    return tuple((str(name), act) for name, act in acts)


@dataclass(frozen=True)
class Violation:
    """One failed check, replayable from its recorded data.

    ``ex_ante`` and ``ex_post`` hold the two verdicts whose disagreement is
    the violation; set-level checks leave them empty and fill ``condition``.
    """
    pair_index: int
    cell_index: int
    acts: tuple
    cell: str
    ex_ante: str
    ex_post: str
    condition: str = ''
    certificate: tuple = ()

    def sort_key(self):
        return (self.pair_index, self.cell_index, self.condition)

    def to_dict(self):
        return {
            'pair_index': self.pair_index,
            'cell_index': self.cell_index,
            'acts': list(self.acts),
            'cell': self.cell,
            'ex_ante': self.ex_ante,
            'ex_post': self.ex_post,
            'condition': self.condition,
            'certificate': format_vector(self.certificate)
        }


@dataclass(frozen=True)
class ConditionResult:
    """Pass/fail of one set-level Coherence or Prudence condition."""
    name: str
    description: str
    passed: bool
    certificates: tuple = ()

    def to_dict(self):
        return {
            'name': self.name,
            'description': self.description,
            'passed': self.passed,
            'certificates': [dict(c) for c in self.certificates]
        }


@dataclass(frozen=True)
class AuditReport:
    """Result of one audit; fails exactly when it lists violations."""
    check: str
    checked_pairs: int
    violations: tuple = ()
    rule: Rule = None
    mode: UpdateMode = None
    seed: int = None
    conditions: tuple = ()
    regrets: tuple = ()
    acts: tuple = field(default=(), compare=False)

    @property
    def passed(self):
        return not self.violations

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'

    def to_dict(self):
        return {
            'check': self.check,
            'verdict': self.verdict,
            'rule': self.rule.value if self.rule else None,
            'mode': self.mode.value if self.mode else None,
            'seed': self.seed,
            'checked_pairs': self.checked_pairs,
            'violations': [v.to_dict() for v in self.violations],
            'conditions': [c.to_dict() for c in self.conditions],
            'regrets': [list(pair) for pair in self.regrets],
            'acts': {name: format_vector(act.utils) for name, act in self.acts}
        }

"""Decision criteria over a credal set.

* unanimity (Bewley): f beats g when every prior agrees,
* maxmin (precautionary): rank by the worst expected utility,
* recursive maxmin: backward induction over a partition,
* the completion relationship between the first two.

f is weakly preferred under unanimity iff min_P E_P[f - g] >= 0. The strict
part requires the weak preference, at least one prior with a strict
preference, and not g weakly preferred to f.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from credal.sets import partition_marginals, support_max, support_min, update_set
from models import (
    AuditReport,
    MaxminComparison,
    Ordering,
    Rule,
    UpdateMode,
    UtilityProfile,
    Verdict,
    VerdictKind,
    Violation,
    format_fraction,
    named_acts,
)

logger = logging.getLogger('credalkit.rules')

GRID_STEPS = 12

# verdicts that mean "f is weakly preferred to g"
WEAKLY_BETTER = (VerdictKind.STRICTLY_BETTER, VerdictKind.INDIFFERENT)


def bewley_compare(C, f, g):
    f_minus_g = support_min(C, f - g)
    g_minus_f = support_min(C, g - f)
    m1, m2 = f_minus_g.value, g_minus_f.value
    if m1 == 0 and m2 == 0:
        kind = VerdictKind.INDIFFERENT
    elif m1 >= 0 and m2 < 0:
        kind = VerdictKind.STRICTLY_BETTER
    elif m2 >= 0 and m1 < 0:
        kind = VerdictKind.STRICTLY_WORSE
    else:
        kind = VerdictKind.INCOMPARABLE
    return Verdict(kind, f_minus_g, g_minus_f)


def maxmin_value(C, f):
    return support_min(C, f).value


def upper_value(C, f):
    return support_max(C, f).value


def _order(a, b):
    if a > b:
        return Ordering.BETTER
    if a < b:
        return Ordering.WORSE
    return Ordering.INDIFFERENT


def maxmin_comparison(C, f, g):
    """Maxmin ordering of f against g, with both values and their minimizers."""
    value_f = support_min(C, f)
    value_g = support_min(C, g)
    return MaxminComparison(_order(value_f.value, value_g.value), value_f, value_g)


def maxmin_compare(C, f, g):
    return maxmin_comparison(C, f, g).ordering


def compare(rule, C, f, g):
    """Verdict class of f against g under a rule, as a plain string."""
    if Rule(rule) is Rule.BEWLEY:
        return bewley_compare(C, f, g).kind.value
    return maxmin_compare(C, f, g).value


def conditional_values(C, partition, f, mode=UpdateMode.STRICT):
    """Maxmin value of f under each cell's updated set, in cell order."""
    return tuple(maxmin_value(update_set(C, cell, mode), f) for cell in partition.cells)


def recursive_maxmin_value(C, partition, f, mode=UpdateMode.STRICT):
    """min over marginals w of sum_i w_i * (maxmin of f given E_i)."""
    values = conditional_values(C, partition, f, mode)
    marginals = partition_marginals(C, partition)
    return min(sum((w * v for w, v in zip(marginal.mass, values)), Fraction(0))
               for marginal in marginals.vertices)


@dataclass(frozen=True)
class PrecautionaryChoice:
    """Ordering from unanimity when it speaks, from maxmin otherwise."""
    ordering: Ordering
    decided_by: Rule
    verdict: Verdict

    def to_dict(self):
        return {
            'ordering': self.ordering.value,
            'decided_by': self.decided_by.value,
            'unanimity': self.verdict.to_dict()
        }


_FROM_VERDICT = {
    VerdictKind.STRICTLY_BETTER: Ordering.BETTER,
    VerdictKind.STRICTLY_WORSE: Ordering.WORSE,
    VerdictKind.INDIFFERENT: Ordering.INDIFFERENT,
}


def precautionary_compare(C, f, g):
    verdict = bewley_compare(C, f, g)
    if verdict.kind is VerdictKind.INCOMPARABLE:
        return PrecautionaryChoice(maxmin_compare(C, f, g), Rule.MAXMIN, verdict)
    return PrecautionaryChoice(_FROM_VERDICT[verdict.kind], Rule.BEWLEY, verdict)


def constant_grid(f, steps=GRID_STEPS):
    """Rational constants spanning the utility range of an act."""
    low, high = min(f.utils), max(f.utils)
    if low == high:
        return (low - 1, low, low + 1)
    return tuple(low + (high - low) * Fraction(k, steps) for k in range(steps + 1))


def gmms_completion_check(C, acts, constants=None):
    """Check Consistency and Default to Certainty for (unanimity, maxmin) over C.

    Consistency: f weakly preferred to g unanimously implies the same under
    maxmin. Default to Certainty: unless f is unanimously weakly preferred to
    the constant x, maxmin strictly prefers x.
    """
    acts = named_acts(acts)
    violations = []
    pair_index = 0
    for i, (name_f, f) in enumerate(acts):
        for j, (name_g, g) in enumerate(acts):
            if i == j:
                continue
            verdict = bewley_compare(C, f, g).kind
            ordering = maxmin_compare(C, f, g)
            consistent = (
                (verdict is VerdictKind.STRICTLY_BETTER and ordering is not Ordering.WORSE)
                or (verdict is VerdictKind.INDIFFERENT and ordering is Ordering.INDIFFERENT)
                or verdict in (VerdictKind.STRICTLY_WORSE, VerdictKind.INCOMPARABLE)
            )
            if not consistent:
                violations.append(Violation(pair_index, -1, (name_f, name_g), '',
                                            verdict.value, ordering.value, condition='consistency'))
            pair_index += 1
    checked = pair_index
    for name_f, f in acts:
        grid = constants if constants is not None else constant_grid(f)
        for x in grid:
            x = Fraction(x)
            constant = UtilityProfile.constant(f.space, x)
            verdict = bewley_compare(C, f, constant).kind
            if verdict in WEAKLY_BETTER:
                checked += 1
                continue
            if not maxmin_value(C, f) < x:
                violations.append(Violation(checked, -1, (name_f, f'x={format_fraction(x)}'), '',
                                            verdict.value, maxmin_compare(C, constant, f).value,
                                            condition='default_to_certainty'))
            checked += 1
    if violations:
        logger.error('Completion check found counterexamples', extra={'violations': len(violations)})
    return AuditReport('gmms_completion', checked, tuple(violations), acts=acts)

"""Dynamic-consistency and axiom audits.

Reports are deterministic given (inputs, seed): pairs are visited in act
order, cells in partition order, and violations are sorted by
(pair index, cell index) before the report is assembled.
"""
import logging
import random

from credal.core import splice
from credal.rules import compare
from credal.sampling import DEFAULT_SEED, random_act, sample_acts
from credal.sets import inclusion, partition_marginals, update_set
from models import (
    AuditReport,
    ConditionResult,
    Ordering,
    Rule,
    UpdateMode,
    VerdictKind,
    Violation,
    format_vector,
    named_acts,
)

logger = logging.getLogger('credalkit.audit')

CONSEQUENTIALISM_SAMPLES = 100

_STRICT_GAIN = {VerdictKind.STRICTLY_BETTER.value, Ordering.BETTER.value}
_STRICT_LOSS = {VerdictKind.STRICTLY_WORSE.value, Ordering.WORSE.value}
_INDIFFERENT = {VerdictKind.INDIFFERENT.value, Ordering.INDIFFERENT.value}


def _ordered_pairs(acts):
    return [(i, j) for i in range(len(acts)) for j in range(len(acts)) if i != j]


def _with_samples(space, acts, sample_count, seed):
    acts = named_acts(acts)
    if sample_count:
        acts = acts + sample_acts(space, sample_count, seed)
    return acts


def dynamic_consistency_audit(C, partition, rule, acts, mode=UpdateMode.STRICT,
                              seed=DEFAULT_SEED, sample_count=0):
    """Check f >=_E g  <=>  fEg >= g for every ordered act pair and cell.

    The conditional verdict uses the prior-by-prior update of C on E; the
    unconditional one compares fEg with g under C. Verdict classes must match
    exactly, with Incomparable a class of its own.
    """
    rule, mode = Rule(rule), UpdateMode(mode)
    acts = _with_samples(C.space, acts, sample_count, seed)
    names = partition.names()
    conditionals = [update_set(C, cell, mode) for cell in partition.cells]
    pairs = _ordered_pairs(acts)
    violations = []
    regrets = []
    for pair_index, (i, j) in enumerate(pairs):
        (name_f, f), (name_g, g) = acts[i], acts[j]
        ex_post_verdicts = []
        for cell_index, cell in enumerate(partition.cells):
            ex_post = compare(rule, conditionals[cell_index], f, g)
            ex_ante = compare(rule, C, splice(f, g, cell), g)
            ex_post_verdicts.append(ex_post)
            if ex_ante != ex_post:
                violations.append(Violation(pair_index, cell_index, (name_f, name_g),
                                            names[cell_index], ex_ante, ex_post))
        unconditional = compare(rule, C, f, g)
        if (unconditional in _STRICT_LOSS
                and all(v in _STRICT_GAIN | _INDIFFERENT for v in ex_post_verdicts)
                and any(v in _STRICT_GAIN for v in ex_post_verdicts)):
            regrets.append((name_f, name_g))
    violations.sort(key=Violation.sort_key)
    report = AuditReport('dynamic_consistency', len(pairs), tuple(violations), rule=rule,
                         mode=mode, seed=seed, regrets=tuple(regrets), acts=acts)
    log = logger.warning if violations else logger.info
    log('Dynamic consistency audit finished', extra={
        'rule': rule.value, 'mode': mode.value, 'pairs': len(pairs), 'violations': len(violations)})
    return report


def consequentialism_check(C, partition, acts, mode=UpdateMode.STRICT, seed=DEFAULT_SEED,
                           samples=CONSEQUENTIALISM_SAMPLES):
    """Acts agreeing on a cell must be conditionally indifferent under both rules.

    For every ordered pair (f, g) and cell E the act g is replaced by
    splice(f, g, E), which agrees with f on E. ``samples`` further seeded
    random pairs are forced to agree on a random cell.
    """
    mode = UpdateMode(mode)
    acts = named_acts(acts)
    names = partition.names()
    conditionals = [update_set(C, cell, mode) for cell in partition.cells]
    cases = []
    for i, j in _ordered_pairs(acts):
        (name_f, f), (name_g, g) = acts[i], acts[j]
        for cell_index, cell in enumerate(partition.cells):
            cases.append(((name_f, f'{name_g}|{names[cell_index]}'), cell_index, f, splice(f, g, cell)))
    rng = random.Random(seed)
    for k in range(samples):
        f, g = random_act(rng, C.space), random_act(rng, C.space, integer=False)
        cell_index = rng.randrange(len(partition))
        cases.append(((f'sample{k}', f'sample{k}|{names[cell_index]}'), cell_index, f,
                      splice(f, g, partition.cells[cell_index])))
    violations = []
    for pair_index, (labels, cell_index, f, agreeing) in enumerate(cases):
        for rule in Rule:
            verdict = compare(rule, conditionals[cell_index], f, agreeing)
            if verdict not in _INDIFFERENT:
                violations.append(Violation(pair_index, cell_index, labels, names[cell_index],
                                            '', verdict, condition=rule.value))
    if violations:
        logger.error('Consequentialism violated; conditional sets leak outside their cell',
                     extra={'violations': len(violations)})
    return AuditReport('consequentialism', len(cases), tuple(violations), mode=mode, seed=seed,
                       acts=acts)


def _certificate(result):
    return {
        'uncovered': format_vector(result.uncovered.mass),
        'separator': format_vector(result.separator)
    }


def coherence_prudence_check(C, C_hat, partition, mode=UpdateMode.STRICT):
    """Set-level conditions equivalent to Coherence and Prudence for (C, C_hat).

    (ii) C_hat contains C; (iii) both sets have the same update on every
    cell; (iv) every partition marginal of C_hat is a marginal of C. The
    utility condition holds by construction because both sets are read
    against one utility normalization, so it is not re-checked here.
    """
    mode = UpdateMode(mode)
    conditions = []
    violations = []

    prudence = inclusion(C_hat, C)
    conditions.append(ConditionResult(
        'ii', 'C_hat contains C', prudence.included,
        () if prudence.included else (_certificate(prudence),)))
    if not prudence.included:
        violations.append(Violation(-1, -1, (), '', '', '', condition='ii',
                                    certificate=prudence.uncovered.mass))

    names = partition.names()
    failures = []
    for cell_index, cell in enumerate(partition.cells):
        original, enlarged = update_set(C, cell, mode), update_set(C_hat, cell, mode)
        for result, side in ((inclusion(original, enlarged), 'C_hat'), (inclusion(enlarged, original), 'C')):
            if not result.included:
                failures.append(dict(_certificate(result), cell=names[cell_index], side=side))
                violations.append(Violation(-1, cell_index, (), names[cell_index], '', '',
                                            condition='iii', certificate=result.uncovered.mass))
                break
    conditions.append(ConditionResult(
        'iii', 'C and C_hat have the same update on every cell', not failures, tuple(failures)))

    marginals = inclusion(partition_marginals(C, partition), partition_marginals(C_hat, partition))
    conditions.append(ConditionResult(
        'iv', 'every partition marginal of C_hat is a marginal of C', marginals.included,
        () if marginals.included else (_certificate(marginals),)))
    if not marginals.included:
        violations.append(Violation(-1, -1, (), '', '', '', condition='iv',
                                    certificate=marginals.uncovered.mass))

    violations.sort(key=Violation.sort_key)
    return AuditReport('coherence_prudence', 0, tuple(violations), mode=mode, conditions=tuple(conditions))

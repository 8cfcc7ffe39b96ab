"""Command dispatch and report rendering.

``run_command`` is independent of click: it takes a validated
ScenarioDocument, a command name, positional arguments and a flag mapping,
and returns the exit code together with a report dict. The same dict is
rendered as text or as sorted JSON.

Exit codes: 0 success or passing audit, 1 failing audit, 2 input error.
"""
import json
import logging
from dataclasses import dataclass

from credal.audit import coherence_prudence_check, consequentialism_check, dynamic_consistency_audit
from credal.rectangular import rectangular_hull
from credal.rules import (
    bewley_compare,
    conditional_values,
    gmms_completion_check,
    maxmin_comparison,
    precautionary_compare,
    recursive_maxmin_value,
    upper_value,
)
from credal.sampling import DEFAULT_SEED
from credal.sets import canonicalize, event_bounds, set_equals, support_max, support_min, update_set
from errors import CredalError, ValidationError
from models import Rule, UpdateMode, format_fraction, format_vector
from scenario import render_scenario

logger = logging.getLogger('credalkit.commands')

EXIT_OK = 0
EXIT_AUDIT_FAILED = 1
EXIT_INPUT_ERROR = 2

COMPARE_RULES = ('bewley', 'maxmin', 'precautionary')


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    report: dict

    @property
    def is_error(self):
        return self.exit_code == EXIT_INPUT_ERROR

    def render(self, fmt='text'):
        if fmt == 'structured':
            return json.dumps(self.report, indent=2, sort_keys=True)
        return render_text(self.report)


def error_result(exc):
    logger.error('Input error', extra={'code': exc.code, 'details': exc.details})
    return CommandResult(EXIT_INPUT_ERROR, {'command': 'error', 'error': exc.to_dict(), 'message': str(exc)})


def _rule(name):
    try:
        return Rule(name)
    except ValueError:
        raise ValidationError(f'unknown rule {name!r} (expected bewley or maxmin)', field='rule') from None


def _settings(doc, flags):
    mode = flags.get('mode') or doc.mode or UpdateMode.STRICT
    seed = flags.get('seed')
    if seed is None:
        seed = doc.seed if doc.seed is not None else DEFAULT_SEED
    return UpdateMode(mode), seed


def _vertices(C):
    return [format_vector(v.mass) for v in C.vertices]


def _working_set(doc, flags, mode):
    if flags.get('after_rectangularize'):
        return rectangular_hull(doc.credal_set, doc.partition, mode), 'rectangular hull'
    return doc.credal_set, 'C'


def _acts(doc, flags):
    names = flags.get('acts')
    if names:
        return doc.select_acts(names)
    return doc.acts


def _compare(doc, args, flags):
    rule, name_f, name_g = args
    mode, _ = _settings(doc, flags)
    C, label = _working_set(doc, flags, mode)
    f, g = doc.act(name_f), doc.act(name_g)
    report = {'command': 'compare', 'rule': rule, 'f': name_f, 'g': name_g,
              'credal_set': label, 'vertices': _vertices(C)}
    if rule == 'bewley':
        report.update(bewley_compare(C, f, g).to_dict())
    elif rule == 'maxmin':
        report.update(maxmin_comparison(C, f, g).to_dict())
    elif rule == 'precautionary':
        report.update(precautionary_compare(C, f, g).to_dict())
    else:
        raise ValidationError(f'unknown rule {rule!r}', field='rule')
    return CommandResult(EXIT_OK, report)


def _evaluate(doc, args, flags):
    rule, name = args
    rule = _rule(rule)
    mode, _ = _settings(doc, flags)
    C, label = _working_set(doc, flags, mode)
    f = doc.act(name)
    report = {'command': 'evaluate', 'rule': rule.value, 'act': name, 'credal_set': label,
              'mode': mode.value}
    if rule is Rule.BEWLEY:
        if flags.get('recursive'):
            raise ValidationError('--recursive applies to the maxmin rule only', field='rule')
        lower, upper = support_min(C, f), support_max(C, f)
        report.update(lower=lower.to_dict(), upper=upper.to_dict())
    else:
        lowest = support_min(C, f)
        report.update(value=format_fraction(lowest.value), witness=format_vector(lowest.witness.mass),
                      upper=format_fraction(upper_value(C, f)))
        if flags.get('recursive'):
            values = conditional_values(C, doc.partition, f, mode)
            report['recursive'] = {
                'value': format_fraction(recursive_maxmin_value(C, doc.partition, f, mode)),
                'conditional': dict(zip(doc.partition.names(), format_vector(values)))
            }
    return CommandResult(EXIT_OK, report)


def _update(doc, args, flags):
    (text,) = args
    mode, _ = _settings(doc, flags)
    cell = doc.cell(text)
    updated = canonicalize(update_set(doc.credal_set, cell, mode))
    return CommandResult(EXIT_OK, {
        'command': 'update', 'cell': doc.space.cell_name(cell), 'mode': mode.value,
        'vertices': _vertices(updated)
    })


def _rectangularize(doc, args, flags):
    mode, _ = _settings(doc, flags)
    hull = rectangular_hull(doc.credal_set, doc.partition, mode)
    return CommandResult(EXIT_OK, {
        'command': 'rectangularize', 'mode': mode.value, 'vertices': _vertices(hull),
        'rectangular': set_equals(doc.credal_set, hull)
    })


def _bounds(doc, args, flags):
    cells = []
    for name, cell in zip(doc.partition.names(), doc.partition.cells):
        lower, upper = event_bounds(doc.credal_set, cell)
        cells.append({'cell': name, 'lower': format_fraction(lower), 'upper': format_fraction(upper)})
    return CommandResult(EXIT_OK, {'command': 'bounds', 'cells': cells})


def _validate(doc, args, flags):
    return CommandResult(EXIT_OK, {'command': 'validate', 'document': doc.to_dict(),
                                   'rendered': render_scenario(doc)})


def _audit_dc(doc, args, flags):
    (rule,) = args
    rule = _rule(rule)
    mode, seed = _settings(doc, flags)
    C, label = _working_set(doc, flags, mode)
    audit = dynamic_consistency_audit(C, doc.partition, rule, _acts(doc, flags), mode=mode,
                                      seed=seed, sample_count=flags.get('sample_acts') or 0)
    report = dict(audit.to_dict(), command='audit-dc', credal_set=label)
    return CommandResult(EXIT_OK if audit.passed else EXIT_AUDIT_FAILED, report)


def _check_axioms(doc, args, flags):
    mode, _ = _settings(doc, flags)
    if flags.get('hull') or doc.credal_set_hat is None:
        C_hat, label = rectangular_hull(doc.credal_set, doc.partition, mode), 'rectangular hull'
    else:
        C_hat, label = doc.credal_set_hat, 'credal_set_hat'
    audit = coherence_prudence_check(doc.credal_set, C_hat, doc.partition, mode)
    report = dict(audit.to_dict(), command='check-axioms', credal_set_hat=label)
    return CommandResult(EXIT_OK if audit.passed else EXIT_AUDIT_FAILED, report)


def _self_test(doc, args, flags):
    mode, seed = _settings(doc, flags)
    acts = _acts(doc, flags)
    audits = [
        consequentialism_check(doc.credal_set, doc.partition, acts, mode=mode, seed=seed),
        gmms_completion_check(doc.credal_set, acts),
    ]
    passed = all(audit.passed for audit in audits)
    return CommandResult(EXIT_OK if passed else EXIT_AUDIT_FAILED, {
        'command': 'self-test', 'verdict': 'pass' if passed else 'fail',
        'reports': [audit.to_dict() for audit in audits]
    })


# command name -> (handler, positional argument count)
COMMANDS = {
    'compare': (_compare, 3),
    'evaluate': (_evaluate, 2),
    'update': (_update, 1),
    'rectangularize': (_rectangularize, 0),
    'bounds': (_bounds, 0),
    'validate': (_validate, 0),
    'audit-dc': (_audit_dc, 1),
    'check-axioms': (_check_axioms, 0),
    'self-test': (_self_test, 0),
}


def run_command(doc, command, args=(), flags=None):
    """Run one command against a validated document."""
    flags = flags or {}
    if command not in COMMANDS:
        return error_result(ValidationError(f'unknown command {command!r}', field='command'))
    handler, arity = COMMANDS[command]
    args = tuple(args)
    if len(args) != arity:
        return error_result(ValidationError(
            f'{command} takes {arity} argument(s), got {len(args)}', field='command'))
    try:
        result = handler(doc, args, flags)
    except CredalError as exc:
        return error_result(exc)
    logger.info('Command finished', extra={'command': command, 'exit_code': result.exit_code})
    return result


# text rendering

def _point(vector):
    return '(' + ', '.join(vector) + ')'


def _render_compare(report):
    lines = [f"compare {report['rule']} {report['f']} {report['g']} "
             f"(credal set: {report['credal_set']}, {len(report['vertices'])} vertices)"]
    f, g = report['f'], report['g']
    if report['rule'] == 'bewley':
        lines.append(f"verdict: {report['verdict']}")
        first, second = report['min_f_minus_g'], report['min_g_minus_f']
        lines.append(f"min E[{f} - {g}] = {first['value']} at {_point(first['witness'])}")
        lines.append(f"min E[{g} - {f}] = {second['value']} at {_point(second['witness'])}")
        if report['prefers_f']:
            lines.append(f"prior strictly preferring {f}: {_point(report['prefers_f'])}")
        if report['prefers_g']:
            lines.append(f"prior strictly preferring {g}: {_point(report['prefers_g'])}")
    elif report['rule'] == 'maxmin':
        lines.append(f"ordering: {report['ordering']}")
        for name, key in ((f, 'value_f'), (g, 'value_g')):
            lines.append(f"maxmin {name} = {report[key]['value']} at {_point(report[key]['witness'])}")
    else:
        lines.append(f"ordering: {report['ordering']} (decided by {report['decided_by']})")
        lines.append(f"unanimity verdict: {report['unanimity']['verdict']}")
    return lines


def _render_evaluate(report):
    lines = [f"evaluate {report['rule']} {report['act']} (credal set: {report['credal_set']})"]
    if report['rule'] == 'bewley':
        lines.append(f"lower expectation = {report['lower']['value']} at {_point(report['lower']['witness'])}")
        lines.append(f"upper expectation = {report['upper']['value']} at {_point(report['upper']['witness'])}")
        return lines
    lines.append(f"maxmin value = {report['value']} at {_point(report['witness'])}")
    lines.append(f"upper value = {report['upper']}")
    if 'recursive' in report:
        lines.append(f"recursive value = {report['recursive']['value']}")
        for cell, value in report['recursive']['conditional'].items():
            lines.append(f"  given {cell}: {value}")
    return lines


def _render_vertices(header, vertices):
    return [header] + [f'  {_point(v)}' for v in vertices]


def _render_audit(report):
    lines = [f"audit {report['check']} rule={report['rule']} mode={report['mode']} seed={report['seed']}",
             f"checked pairs: {report['checked_pairs']}",
             f"verdict: {report['verdict']}"]
    for violation in report['violations']:
        f, g = violation['acts']
        lines.append(f"violation: ({f}, {g}) on {violation['cell']}: "
                     f"ex ante {violation['ex_ante']}, ex post {violation['ex_post']}")
    for f, g in report['regrets']:
        lines.append(f'regret: {g} chosen over {f} ex ante, {f} preferred whatever is learned')
    return lines


def _render_conditions(report):
    lines = [f"check {report['check']} mode={report['mode']} against {report['credal_set_hat']}"]
    for condition in report['conditions']:
        status = 'pass' if condition['passed'] else 'fail'
        lines.append(f"({condition['name']}) {condition['description']}: {status}")
        for certificate in condition['certificates']:
            where = f"cell {certificate['cell']} ({certificate['side']}): " if 'cell' in certificate else ''
            lines.append(f"    {where}uncovered {_point(certificate['uncovered'])} "
                         f"separator {_point(certificate['separator'])}")
    lines.append(f"verdict: {report['verdict']}")
    return lines


def _render_self_test(report):
    lines = []
    for audit in report['reports']:
        lines.append(f"{audit['check']}: {audit['verdict']} ({audit['checked_pairs']} checks)")
        for violation in audit['violations']:
            lines.append(f"  {violation['condition']}: {' vs '.join(violation['acts'])} "
                         f"{violation['ex_ante']} / {violation['ex_post']}")
    lines.append(f"verdict: {report['verdict']}")
    return lines


def render_text(report):
    command = report['command']
    if command == 'error':
        lines = [f"Error [{report['error']['code']}]: {report['message']}"]
    elif command == 'compare':
        lines = _render_compare(report)
    elif command == 'evaluate':
        lines = _render_evaluate(report)
    elif command == 'update':
        lines = _render_vertices(f"update on {report['cell']} ({report['mode']}):", report['vertices'])
    elif command == 'rectangularize':
        lines = _render_vertices(f"rectangular hull ({report['mode']}), {len(report['vertices'])} extreme points:",
                                 report['vertices'])
        lines.append(f"C is rectangular: {'yes' if report['rectangular'] else 'no'}")
    elif command == 'bounds':
        lines = [f"P({c['cell']}) in [{c['lower']}, {c['upper']}]" for c in report['cells']]
    elif command == 'validate':
        return report['rendered'].rstrip('\n')
    elif command == 'audit-dc':
        lines = _render_audit(report)
    elif command == 'check-axioms':
        lines = _render_conditions(report)
    else:
        lines = _render_self_test(report)
    return '\n'.join(lines)

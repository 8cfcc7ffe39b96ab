"""Polytopes of priors given by vertex lists.

Every predicate here uses hull semantics: a vertex list may be redundant and
two lists describing the same hull are the same credal set.
"""
import logging
from fractions import Fraction

from credal.core import bayes_update, cell_masses
from credal.lp import find_nonnegative_solution
from errors import DimensionMismatch, ZeroMassConditioning
from models import (
    CredalSet,
    InclusionResult,
    MembershipResult,
    Prior,
    SupportResult,
    UpdateMode,
)

logger = logging.getLogger('credalkit.sets')


def _check_space(C, other):
    if C.space != other.space:
        raise DimensionMismatch(
            f'credal set has {len(C.space)} states, argument has {len(other.space)}',
            expected=len(C.space), actual=len(other.space))


def canonical_key(prior):
    """Descending lexicographic order on mass vectors."""
    return tuple(-m for m in prior.mass)


def simplex(space):
    """The full simplex: every prior over the space."""
    n = len(space)
    return CredalSet(space, tuple(
        Prior(space, tuple(Fraction(1 if i == k else 0) for i in range(n))) for k in range(n)))


def support_min(C, direction):
    """min over the hull of direction.P; ties go to the first minimizer in canonical order."""
    _check_space(C, direction)
    scored = [(direction.expectation(vertex), vertex) for vertex in C.vertices]
    value, vertex = min(scored, key=lambda item: (item[0], canonical_key(item[1])))
    return SupportResult(value, vertex)


def support_max(C, direction):
    lowest = support_min(C, -direction)
    return SupportResult(-lowest.value, lowest.witness)


def membership(C, q):
    """Exact convex-hull membership with a certificate either way."""
    _check_space(C, q)
    vertices = C.vertices
    n = len(C.space)
    for position, vertex in enumerate(vertices):
        if vertex == q:
            return MembershipResult(True, weights=tuple(
                Fraction(1 if k == position else 0) for k in range(len(vertices))))
    # box test: a coordinate outside the vertex range is already a separator
    for s in range(n):
        low = min(v[s] for v in vertices)
        high = max(v[s] for v in vertices)
        if q[s] < low:
            return MembershipResult(False, separator=tuple(Fraction(1 if i == s else 0) for i in range(n)))
        if q[s] > high:
            return MembershipResult(False, separator=tuple(Fraction(-1 if i == s else 0) for i in range(n)))
    rows = [[v[s] for v in vertices] for s in range(n)]
    rows.append([Fraction(1)] * len(vertices))
    rhs = list(q.mass) + [Fraction(1)]
    result = find_nonnegative_solution(rows, rhs)
    if result.feasible:
        return MembershipResult(True, weights=result.solution)
    # y.(v_k, 1) <= 0 < y.(q, 1), so -y[:n] separates q from every vertex
    return MembershipResult(False, separator=tuple(-y for y in result.farkas[:n]))


def contains(C, q):
    return membership(C, q).member


def inclusion(C, D):
    """Is hull(D) inside hull(C)? Reports the first uncovered vertex of D."""
    _check_space(C, D)
    for vertex in D.vertices:
        result = membership(C, vertex)
        if not result.member:
            return InclusionResult(False, uncovered=vertex, separator=result.separator)
    return InclusionResult(True)


def includes(C, D):
    return inclusion(C, D).included


def set_equals(C, D):
    return includes(C, D) and includes(D, C)


def admissible_vertices(C, cell, mode=UpdateMode.STRICT):
    """Vertices that may be conditioned on the cell under the given mode."""
    cell = frozenset(cell)
    name = C.space.cell_name(cell)
    if not cell:
        raise ZeroMassConditioning('cannot condition on the empty event', cell=name)
    positive = tuple(v for v in C.vertices if v.mass_of(cell) > 0)
    if UpdateMode(mode) is UpdateMode.STRICT:
        if len(positive) != len(C.vertices):
            raise ZeroMassConditioning(
                f'a prior gives {name} zero mass (strict mode)', cell=name, mode='strict')
    elif not positive:
        raise ZeroMassConditioning(
            f'every prior gives {name} zero mass', cell=name, mode='lenient')
    elif len(positive) != len(C.vertices):
        logger.warning('Dropping zero-mass priors before updating', extra={
            'cell': name, 'dropped': len(C.vertices) - len(positive)})
    return positive


def update_set(C, cell, mode=UpdateMode.STRICT):
    """Prior-by-prior Bayesian update: hull of the updated admissible vertices."""
    cell = frozenset(cell)
    updated = []
    for vertex in admissible_vertices(C, cell, mode):
        posterior = bayes_update(vertex, cell)
        if posterior not in updated:
            updated.append(posterior)
    return CredalSet(C.space, tuple(updated))


def partition_marginals(C, partition):
    """Hull of the cell-mass vectors of C's vertices, over the quotient space."""
    _check_space(C, partition)
    quotient = partition.quotient_space()
    marginals = []
    for vertex in C.vertices:
        marginal = Prior(quotient, cell_masses(vertex, partition))
        if marginal not in marginals:
            marginals.append(marginal)
    return CredalSet(quotient, tuple(marginals))


def canonicalize(C):
    """Same hull, extreme points only, in canonical order."""
    distinct = sorted(set(C.vertices), key=canonical_key)
    kept = list(distinct)
    for vertex in distinct:
        if len(kept) == 1:
            break
        others = [v for v in kept if v != vertex]
        if contains(CredalSet(C.space, tuple(others)), vertex):
            kept = others
    return CredalSet(C.space, tuple(kept))


def event_bounds(C, cell):
    """Lower and upper probability of an event over the hull."""
    masses = [v.mass_of(frozenset(cell)) for v in C.vertices]
    return min(masses), max(masses)


def is_unambiguous(C, f):
    """True when every prior in the set gives f the same expected utility."""
    _check_space(C, f)
    return len({f.expectation(v) for v in C.vertices}) == 1

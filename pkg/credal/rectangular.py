"""Rectangular hulls and the coherent precautionary restriction.

The rectangular hull of C with respect to a partition collects every prior
w_1 Q_1 + ... + w_n Q_n where w is the partition marginal of some member of
C and each Q_i is the update on E_i of some (possibly different) member.

Marginal weights are linear in the member providing them and conditionals
are images of a linear-fractional map, so the extreme points of the hull come
from tuples of extreme points: one marginal vertex and one conditional
vertex per cell.
"""
import itertools
import logging

from credal.core import bayes_update, cell_masses, total_probability_recompose
from credal.sets import (
    admissible_vertices,
    canonicalize,
    contains,
    partition_marginals,
    set_equals,
    update_set,
)
from errors import DimensionMismatch
from models import CredalSet, Prior, UpdateMode

logger = logging.getLogger('credalkit.rectangular')


def rectangular_generators(C, partition, mode=UpdateMode.STRICT, reduce=True):
    """All recomposed priors over marginal/conditional vertex tuples.

    With ``reduce`` the marginal and conditional sets are canonicalized first,
    which keeps the same hull with far fewer tuples.
    """
    if C.space != partition.space:
        raise DimensionMismatch('credal set and partition use different state spaces')
    if reduce:
        marginals = canonicalize(partition_marginals(C, partition)).vertices
        conditionals = [canonicalize(update_set(C, cell, mode)).vertices for cell in partition.cells]
    else:
        quotient = partition.quotient_space()
        marginals = tuple(Prior(quotient, cell_masses(v, partition)) for v in C.vertices)
        conditionals = [
            tuple(bayes_update(v, cell) for v in admissible_vertices(C, cell, mode))
            for cell in partition.cells
        ]
    generators = []
    for marginal, *chosen in itertools.product(marginals, *conditionals):
        generators.append(total_probability_recompose(marginal.mass, chosen, partition))
    return tuple(generators)


def rectangular_hull(C, partition, mode=UpdateMode.STRICT):
    """r_P(C) as a canonical list of extreme points."""
    generators = rectangular_generators(C, partition, mode)
    hull = canonicalize(CredalSet(C.space, generators))
    logger.info('Built rectangular hull', extra={
        'cells': len(partition), 'generators': len(generators), 'extreme_points': len(hull)})
    return hull


def coherent_precautionary_restriction(C, partition, mode=UpdateMode.STRICT):
    """Priors of the most incomplete unanimity rule that is coherent and prudent.

    This is exactly the rectangular hull; the name keeps client code at the
    level of the decision problem.
    """
    return rectangular_hull(C, partition, mode)


def is_rectangular(C, partition, mode=UpdateMode.STRICT):
    return set_equals(C, rectangular_hull(C, partition, mode))


class MaximalityOracle:
    """Membership test for r_P(C) that never builds the hull.

    q belongs to the hull iff its partition marginal is a marginal of C and,
    on every cell it charges, its conditional is an update of C.
    """

    def __init__(self, C, partition, mode=UpdateMode.STRICT):
        self.partition = partition
        self.marginals = partition_marginals(C, partition)
        self.conditionals = [update_set(C, cell, mode) for cell in partition.cells]

    def conditions(self, q):
        """Per-condition outcome: one entry per cell, then the marginal check."""
        outcome = {}
        for name, cell, updated in zip(self.partition.names(), self.partition.cells, self.conditionals):
            if q.mass_of(cell) > 0:
                outcome[name] = contains(updated, bayes_update(q, cell))
        outcome['marginal'] = contains(self.marginals, Prior(self.marginals.space, cell_masses(q, self.partition)))
        return outcome

    def __call__(self, q):
        for cell, updated in zip(self.partition.cells, self.conditionals):
            if q.mass_of(cell) > 0 and not contains(updated, bayes_update(q, cell)):
                return False
        return contains(self.marginals, Prior(self.marginals.space, cell_masses(q, self.partition)))


def maximality_oracle(C, partition, q, mode=UpdateMode.STRICT):
    return MaximalityOracle(C, partition, mode)(q)

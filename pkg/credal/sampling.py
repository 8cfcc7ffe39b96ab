"""Seeded generators for exact random instances, priors and acts.

Everything draws from a ``random.Random`` seeded by the caller, so reports
and property suites are reproducible from (inputs, seed).
"""
import itertools
import random
from fractions import Fraction

from credal.core import total_probability_recompose
from credal.sets import partition_marginals, update_set
from models import CredalSet, Partition, Prior, StateSpace, UpdateMode, UtilityProfile

DEFAULT_SEED = 20200401
MAX_DENOMINATOR = 12
UTILITY_GRID = range(0, 11)


def composition(rng, parts, total, positive=False):
    """Random non-negative integers of a given length summing to total."""
    if positive:
        cuts = sorted(rng.sample(range(1, total), parts - 1))
    else:
        cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    bounds = [0] + cuts + [total]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def random_weights(rng, k, denominator=MAX_DENOMINATOR):
    return tuple(Fraction(c, denominator) for c in composition(rng, k, denominator))


def random_prior(rng, space, denominator=MAX_DENOMINATOR, positive=False):
    denominator = max(denominator, len(space)) if positive else denominator
    counts = composition(rng, len(space), denominator, positive=positive)
    return Prior(space, tuple(Fraction(c, denominator) for c in counts))


def random_partition(rng, space, max_cells=3):
    cells = rng.randint(1, min(max_cells, len(space)))
    order = list(range(len(space)))
    rng.shuffle(order)
    sizes = composition(rng, cells, len(space), positive=True) if cells > 1 else [len(space)]
    groups, start = [], 0
    for size in sizes:
        groups.append(frozenset(order[start:start + size]))
        start += size
    groups.sort(key=min)
    return Partition(space, tuple(groups))


def random_instance(seed, max_states=5, max_vertices=4, max_cells=3):
    """A strict-positive instance: every vertex charges every state."""
    rng = random.Random(seed)
    n = rng.randint(2, max_states)
    space = StateSpace(tuple(f's{i}' for i in range(n)))
    vertices = tuple(random_prior(rng, space, positive=True)
                     for _ in range(rng.randint(1, max_vertices)))
    return space, CredalSet(space, vertices), random_partition(rng, space, max_cells)


def random_act(rng, space, integer=True):
    if integer:
        return UtilityProfile(space, tuple(Fraction(rng.choice(UTILITY_GRID)) for _ in space.states))
    return UtilityProfile(space, tuple(
        Fraction(rng.randint(0, 10 * d), d)
        for d in (rng.randint(1, MAX_DENOMINATOR) for _ in space.states)))


def sample_acts(space, count, seed=DEFAULT_SEED):
    """Acts alternating between the integer grid {0..10}^n and rationals with small denominators."""
    rng = random.Random(seed)
    return tuple((f'sample{k}', random_act(rng, space, integer=(k % 2 == 0))) for k in range(count))


def grid_priors(space, denominator):
    """Every prior whose entries are multiples of 1/denominator."""
    n = len(space)
    for cuts in itertools.combinations_with_replacement(range(denominator + 1), n - 1):
        bounds = (0,) + cuts + (denominator,)
        yield Prior(space, tuple(Fraction(b - a, denominator) for a, b in zip(bounds, bounds[1:])))


def _combination(rng, vertices):
    weights = random_weights(rng, len(vertices))
    space = vertices[0].space
    return Prior(space, tuple(sum((w * v[s] for w, v in zip(weights, vertices)), Fraction(0))
                              for s in range(len(space))))


def sample_priors(C, partition, count, seed=DEFAULT_SEED, mode=UpdateMode.STRICT):
    """Priors near and inside the rectangular hull plus grid and free draws.

    Roughly a third are recompositions of candidate marginals and
    conditionals (inside the hull), a third mix in conditionals of unrelated
    priors (mostly outside), the rest come from a coarse rational grid and
    free random draws.
    """
    rng = random.Random(seed)
    space = C.space
    marginals = partition_marginals(C, partition).vertices
    conditionals = [update_set(C, cell, mode).vertices for cell in partition.cells]
    samples = []
    grid = list(grid_priors(space, 4 if len(space) <= 4 else 3))
    rng.shuffle(grid)
    samples.extend(grid[:count // 6])
    while len(samples) < count:
        draw = rng.random()
        if draw < 0.7:
            weights = _combination(rng, marginals).mass
            chosen = []
            for cell, candidates in zip(partition.cells, conditionals):
                if draw < 0.4 or rng.random() < 0.5:
                    chosen.append(_combination(rng, candidates))
                else:
                    chosen.append(_foreign_conditional(rng, space, cell))
            samples.append(total_probability_recompose(weights, chosen, partition))
        else:
            samples.append(random_prior(rng, space))
    return tuple(samples[:count])


def _foreign_conditional(rng, space, cell):
    members = sorted(cell)
    counts = composition(rng, len(members), MAX_DENOMINATOR)
    mass = [Fraction(0)] * len(space)
    for member, c in zip(members, counts):
        mass[member] = Fraction(c, MAX_DENOMINATOR)
    return Prior(space, tuple(mass))

"""Elementary operations on priors and acts: update, splice, mixture, recomposition."""
from fractions import Fraction

from errors import (
    AlphaOutOfRange,
    DimensionMismatch,
    SupportViolation,
    WeightNotNormalized,
    ZeroMassConditioning,
)
from models import Prior, UtilityProfile, as_fraction, format_fraction


def _same_space(first, second):
    if first.space != second.space:
        raise DimensionMismatch(
            f'objects live on spaces of size {len(first.space)} and {len(second.space)}',
            expected=len(first.space), actual=len(second.space))


def bayes_update(p, cell):
    """Condition p on a cell: p(s)/p(cell) inside the cell, 0 outside."""
    cell = frozenset(cell)
    total = p.mass_of(cell)
    if total == 0:
        raise ZeroMassConditioning(
            f'prior {p} gives {p.space.cell_name(cell)} zero mass',
            cell=p.space.cell_name(cell))
    return Prior(p.space, tuple(m / total if i in cell else Fraction(0)
                                for i, m in enumerate(p.mass)))


def splice(f, g, cell):
    """The act fEg: f on the cell, g off it."""
    _same_space(f, g)
    cell = frozenset(cell)
    return UtilityProfile(f.space, tuple(f[i] if i in cell else g[i] for i in range(len(f))))


def mixture(f, g, alpha):
    """Pointwise alpha*f + (1-alpha)*g."""
    _same_space(f, g)
    alpha = as_fraction(alpha)
    if alpha < 0 or alpha > 1:
        raise AlphaOutOfRange(f'mixture weight {format_fraction(alpha)} is outside [0, 1]',
                              alpha=format_fraction(alpha))
    return UtilityProfile(f.space, tuple(alpha * a + (1 - alpha) * b for a, b in zip(f.utils, g.utils)))


def expected_utility(p, f):
    _same_space(p, f)
    return f.expectation(p)


def cell_masses(p, partition):
    """Marginal of p on the partition, in cell order."""
    _same_space(p, partition)
    return tuple(p.mass_of(cell) for cell in partition.cells)


def bet(space, cell, prize, null=0):
    """Utility profile of the bet x E x_0: prize on the cell, the null utility elsewhere."""
    prize, null = as_fraction(prize), as_fraction(null)
    return UtilityProfile(space, tuple(prize if i in cell else null for i in range(len(space))))


def total_probability_recompose(marginal_weights, conditionals, partition):
    """Sum_i weight_i * conditional_i, checking each conditional sits inside its cell."""
    weights = tuple(as_fraction(w) for w in marginal_weights)
    conditionals = tuple(conditionals)
    if len(weights) != len(partition) or len(conditionals) != len(partition):
        raise DimensionMismatch(
            f'expected {len(partition)} weights and conditionals, got '
            f'{len(weights)} and {len(conditionals)}',
            expected=len(partition), actual=len(weights))
    if any(w < 0 for w in weights) or sum(weights) != 1:
        raise WeightNotNormalized(
            'marginal weights must be non-negative and sum to 1',
            weights=', '.join(format_fraction(w) for w in weights))
    space = partition.space
    mass = [Fraction(0)] * len(space)
    for position, (weight, conditional, cell) in enumerate(zip(weights, conditionals, partition.cells)):
        _same_space(conditional, partition)
        outside = conditional.support - cell
        if outside:
            raise SupportViolation(
                f'conditional for {space.cell_name(cell)} puts mass on '
                f'{", ".join(space.states[i] for i in sorted(outside))}',
                cell=space.cell_name(cell), position=position)
        for i in cell:
            mass[i] += weight * conditional[i]
    return Prior(space, tuple(mass))

"""
Unit tests for the decision criteria: unanimity, maxmin, recursive maxmin and their completion
"""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from credal.rectangular import is_rectangular, rectangular_hull
from credal.rules import (
    bewley_compare,
    compare,
    conditional_values,
    constant_grid,
    gmms_completion_check,
    maxmin_compare,
    maxmin_comparison,
    maxmin_value,
    precautionary_compare,
    recursive_maxmin_value,
    upper_value,
)
from credal.sampling import random_instance, sample_acts
from credal.sets import includes, simplex, update_set
from models import CredalSet, Ordering, Partition, Prior, Rule, StateSpace, UpdateMode, UtilityProfile, VerdictKind

LENIENT = UpdateMode.LENIENT

SPACE = StateSpace(('R', 'B', 'G'))
ELLSBERG = CredalSet.from_vectors(SPACE, [('1/3', '0', '2/3'), ('1/3', '2/3', '0')])
ELLSBERG_HULL = CredalSet.from_vectors(
    SPACE, [(1, 0, 0), ('1/3', '2/3', 0), ('1/3', 0, '2/3'), ('1/9', '2/9', '2/3')])
SINGLE = CredalSet.from_vectors(SPACE, [('1/2', '1/4', '1/4')])

utilities = st.lists(st.integers(min_value=0, max_value=10), min_size=3, max_size=3).map(
    lambda values: UtilityProfile(SPACE, tuple(values)))


class TestBewley:
    """Unanimity comparisons with witnessing priors"""

    def test_g_beats_f_prime(self, ellsberg):
        """Every prior ranks g above f'"""
        verdict = bewley_compare(ellsberg.C, ellsberg.g, ellsberg.f_prime)
        assert verdict.kind is VerdictKind.STRICTLY_BETTER
        assert verdict.f_minus_g.value == Fraction(10, 3)
        assert verdict.prefers_f == ellsberg.C.vertices[1]
        assert verdict.prefers_g is None

    def test_f_and_g_are_incomparable(self, ellsberg):
        """Each expert prefers a different act"""
        verdict = bewley_compare(ellsberg.C, ellsberg.f, ellsberg.g)
        assert verdict.kind is VerdictKind.INCOMPARABLE
        assert verdict.f_minus_g.value == Fraction(-10, 3)
        assert verdict.g_minus_f.value == Fraction(-10, 3)
        assert verdict.prefers_f == ellsberg.C.vertices[0]
        assert verdict.prefers_g == ellsberg.C.vertices[1]

    def test_indifferent_to_itself(self, ellsberg):
        assert bewley_compare(ellsberg.C, ellsberg.f, ellsberg.f).kind is VerdictKind.INDIFFERENT

    def test_weak_but_not_strict_on_every_prior(self, ellsberg):
        """Better under one prior, equal under the other, is still StrictlyBetter"""
        better = UtilityProfile(ellsberg.space, (10, 3, 0))
        worse = UtilityProfile(ellsberg.space, (10, 0, 0))
        verdict = bewley_compare(ellsberg.C, better, worse)
        assert verdict.kind is VerdictKind.STRICTLY_BETTER
        assert verdict.f_minus_g.value == 0

    @given(f=utilities, g=utilities, scale=st.integers(min_value=1, max_value=7),
           shift=st.integers(min_value=-4, max_value=4))
    def test_affine_invariance(self, f, g, scale, shift):
        """Positive affine transforms of utility keep the verdict"""
        original = bewley_compare(ELLSBERG, f, g).kind
        transformed = bewley_compare(ELLSBERG, f.affine(scale, shift), g.affine(scale, shift)).kind
        assert original is transformed

    @given(f=utilities, g=utilities)
    def test_verdicts_are_antisymmetric(self, f, g):
        """Swapping the acts swaps Better and Worse"""
        mirrored = {
            VerdictKind.STRICTLY_BETTER: VerdictKind.STRICTLY_WORSE,
            VerdictKind.STRICTLY_WORSE: VerdictKind.STRICTLY_BETTER,
            VerdictKind.INDIFFERENT: VerdictKind.INDIFFERENT,
            VerdictKind.INCOMPARABLE: VerdictKind.INCOMPARABLE,
        }
        assert bewley_compare(ELLSBERG, g, f).kind is mirrored[bewley_compare(ELLSBERG, f, g).kind]

    @given(f=utilities, g=utilities)
    def test_single_prior_is_complete(self, f, g):
        """One expert always has an opinion"""
        assert bewley_compare(SINGLE, f, g).kind is not VerdictKind.INCOMPARABLE


class TestPrudenceDirection:
    """Enlarging the set can only make unanimity more demanding"""

    def test_supersets_include_ellsberg(self):
        assert includes(ELLSBERG_HULL, ELLSBERG)
        assert includes(simplex(SPACE), ELLSBERG)

    @given(f=utilities, g=utilities)
    def test_strict_on_superset_is_weak_on_subset(self, f, g):
        on_subset = bewley_compare(ELLSBERG, f, g).kind
        for superset in (ELLSBERG_HULL, simplex(SPACE)):
            if bewley_compare(superset, f, g).kind is VerdictKind.STRICTLY_BETTER:
                assert on_subset in (VerdictKind.STRICTLY_BETTER, VerdictKind.INDIFFERENT)

    @given(f=utilities, g=utilities)
    def test_incomparable_on_subset_stays_incomparable(self, f, g):
        if bewley_compare(ELLSBERG, f, g).kind is VerdictKind.INCOMPARABLE:
            for superset in (ELLSBERG_HULL, simplex(SPACE)):
                assert bewley_compare(superset, f, g).kind is VerdictKind.INCOMPARABLE


class TestMaxmin:
    """Worst-case expected utility"""

    def test_ex_ante_values(self, ellsberg):
        """I(f) = 10/3 and I(g) = 20/3, so g is chosen"""
        assert maxmin_value(ellsberg.C, ellsberg.f) == Fraction(10, 3)
        assert maxmin_value(ellsberg.C, ellsberg.g) == Fraction(20, 3)
        assert maxmin_compare(ellsberg.C, ellsberg.f, ellsberg.g) is Ordering.WORSE

    def test_ex_post_reversal(self, ellsberg):
        """Given RB, f is chosen"""
        updated = update_set(ellsberg.C, ellsberg.RB, LENIENT)
        comparison = maxmin_comparison(updated, ellsberg.f, ellsberg.g)
        assert comparison.ordering is Ordering.BETTER
        assert comparison.value_f.value == Fraction(10, 3)
        assert comparison.value_g.value == 0

    def test_values_on_the_hull(self, ellsberg):
        """I(f) = 10/3, I(g) = 0, I(f') = 10/9 over r_P(C)"""
        hull = rectangular_hull(ellsberg.C, ellsberg.partition, LENIENT)
        assert maxmin_value(hull, ellsberg.f) == Fraction(10, 3)
        assert maxmin_value(hull, ellsberg.g) == 0
        assert maxmin_value(hull, ellsberg.f_prime) == Fraction(10, 9)
        assert maxmin_compare(hull, ellsberg.f_prime, ellsberg.g) is Ordering.BETTER

    def test_upper_value(self, ellsberg):
        assert upper_value(ellsberg.C, ellsberg.f) == 10

    def test_compare_returns_plain_strings(self, ellsberg):
        assert compare(Rule.MAXMIN, ellsberg.C, ellsberg.f, ellsberg.g) == 'Worse'
        assert compare('bewley', ellsberg.C, ellsberg.f, ellsberg.g) == 'Incomparable'

    @given(f=utilities, g=utilities, scale=st.integers(min_value=1, max_value=7),
           shift=st.integers(min_value=-4, max_value=4))
    def test_affine_invariance(self, f, g, scale, shift):
        """Positive affine transforms of utility keep the ordering"""
        original = maxmin_compare(ELLSBERG, f, g)
        assert maxmin_compare(ELLSBERG, f.affine(scale, shift), g.affine(scale, shift)) is original


class TestRecursiveMaxmin:
    """Backward induction over the partition"""

    def test_conditional_values(self, ellsberg):
        """f is worth 10 given G and 10/3 given RB"""
        values = conditional_values(ellsberg.C, ellsberg.partition, ellsberg.f, LENIENT)
        assert values == (10, Fraction(10, 3))

    def test_recursive_values_match_the_hull(self, ellsberg):
        """Folding back gives the maxmin value over r_P(C)"""
        hull = rectangular_hull(ellsberg.C, ellsberg.partition, LENIENT)
        for act in (ellsberg.f, ellsberg.g, ellsberg.f_prime):
            assert recursive_maxmin_value(ellsberg.C, ellsberg.partition, act, LENIENT) == maxmin_value(hull, act)
        assert recursive_maxmin_value(ellsberg.C, ellsberg.partition, ellsberg.f, LENIENT) == Fraction(10, 3)
        assert recursive_maxmin_value(ellsberg.C, ellsberg.partition, ellsberg.g, LENIENT) == 0

    def test_rectangular_sets_need_no_recursion(self):
        """On a rectangular set folding back changes nothing"""
        for seed in range(8):
            space, C, partition = random_instance(seed)
            hull = rectangular_hull(C, partition)
            trivial = Partition.trivial(space)
            assert is_rectangular(hull, partition)
            assert is_rectangular(C, trivial)
            for name, act in sample_acts(space, 4, seed):
                assert recursive_maxmin_value(hull, partition, act) == maxmin_value(hull, act), (seed, name)
                assert recursive_maxmin_value(C, trivial, act) == maxmin_value(C, act), (seed, name)


class TestPrecautionary:
    """Unanimity when it speaks, maxmin otherwise"""

    def test_unanimity_decides(self, ellsberg):
        choice = precautionary_compare(ellsberg.C, ellsberg.g, ellsberg.f_prime)
        assert choice.ordering is Ordering.BETTER
        assert choice.decided_by is Rule.BEWLEY

    def test_maxmin_completes(self, ellsberg):
        choice = precautionary_compare(ellsberg.C, ellsberg.f, ellsberg.g)
        assert choice.ordering is Ordering.WORSE
        assert choice.decided_by is Rule.MAXMIN
        assert choice.to_dict()['unanimity']['verdict'] == 'Incomparable'


class TestCompletion:
    """Consistency and Default to Certainty between unanimity and maxmin"""

    def test_constant_grid(self, ellsberg):
        grid = constant_grid(ellsberg.f)
        assert grid[0] == 0 and grid[-1] == 10
        assert len(grid) == 13

    def test_default_to_certainty_example(self, ellsberg):
        """f is not unanimously above 5, and maxmin strictly prefers 5"""
        five = UtilityProfile.constant(ellsberg.space, 5)
        assert bewley_compare(ellsberg.C, ellsberg.f, five).kind is VerdictKind.INCOMPARABLE
        assert maxmin_value(ellsberg.C, ellsberg.f) < 5

    def test_passes_on_ellsberg(self, ellsberg):
        acts = {'f': ellsberg.f, 'g': ellsberg.g, "f'": ellsberg.f_prime}
        report = gmms_completion_check(ellsberg.C, acts)
        assert report.passed
        assert report.checked_pairs > 6

    def test_passes_for_a_single_prior(self, ellsberg):
        C = CredalSet(ellsberg.space, (Prior(ellsberg.space, ('1/2', '1/4', '1/4')),))
        assert gmms_completion_check(C, [ellsberg.f, ellsberg.g]).passed

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

import branchlat.straightening as stmod
from branchlat.errors import InconsistencyError, PreconditionError
from branchlat.exact import det, solve_unique
from branchlat.gtpattern import GTPoset
from branchlat.lattice import LatticeFamily, column, comparable, join, leq, meet
from branchlat.sampling import SeedStream, random_matrix
from branchlat.straightening import (StraighteningExpansion, Term, check_expansion,
                                     hibi_normal_form, initial_term, minor_eval, monomial_pattern,
                                     standard_candidates, straighten_monomial, straighten_pair,
                                     verify_degeneration, weight)
from branchlat.tableaux import Chain, content_shape, shape_of

from oracles import cofactor_det, naive_hibi


def c(*e, m=6):
    return column(e, m)


I36, J36 = c(1, 2, 5, 6), c(1, 3, 4)
EXPECTED_36 = {
    (c(1, 2, 4, 6), c(1, 3, 5)): 1,
    (c(1, 2, 3, 6), c(1, 4, 5)): -1,
    (c(1, 2, 3, 5), c(1, 4, 6)): 1,
    (c(1, 2, 4, 5), c(1, 3, 6)): -1,
    (c(1, 2, 3, 4), c(1, 5, 6)): -1,
}


def rationals():
    return st.fractions(min_value=-10, max_value=10, max_denominator=7)


# ---------------------------------------------------------------- minors

def test_minor_trivial_cases():
    Q = [[Fraction(0)] * 2 for _ in range(6)]
    Q[1][0] = Fraction(5)
    assert minor_eval(c(2), Q) == 5
    E = [[Fraction(int(i == j)) for j in range(2)] for i in range(6)]
    assert minor_eval(c(1, 2), E) == 1


def test_minor_dimension_errors():
    Q = random_matrix(6, 2, SeedStream(1).rng())
    with pytest.raises(PreconditionError):
        minor_eval(c(1, 2, 3), Q)
    with pytest.raises(PreconditionError):
        minor_eval(column([1], 5), Q)


@given(st.lists(st.lists(rationals(), min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_matches_cofactor_expansion(M):
    assert det(M) == cofactor_det(M)


def test_random_minor_matches_cofactor():
    rng = SeedStream(7).child("minor").rng()
    for _ in range(20):
        Q = random_matrix(6, 3, rng)
        I = c(*sorted(rng.sample(range(1, 7), 3)))
        assert minor_eval(I, Q) == cofactor_det([Q[i - 1][:3] for i in I.entries])


def test_solver_detects_rank_deficiency():
    x, ok = solve_unique([[1, 2], [2, 4], [3, 6]], [1, 2, 3])
    assert x is None and ok
    x, ok = solve_unique([[1, 0], [0, 1], [1, 1]], [1, 2, 4])
    assert not ok


# ---------------------------------------------------------------- pair straightening

def test_worked_example_expansion():
    exp = straighten_pair(I36, J36, LatticeFamily(6, 4, 2))
    assert len(exp.terms) == 5
    assert exp.as_dict() == EXPECTED_36


def test_comparable_pair_is_a_single_term():
    exp = straighten_pair(c(1, 2, 3, 6), c(1, 2, 5, 6))
    assert exp.terms == (Term(Fraction(1), c(1, 2, 3, 6), c(1, 2, 5, 6)),)
    swapped = straighten_pair(c(1, 2, 5), c(1, 2, 3, 6))
    assert swapped.terms[0].pair == (c(1, 2, 3, 6), c(1, 2, 5))


def test_expansion_independent_of_seed_and_order():
    a = straighten_pair(I36, J36, seed=0).as_dict()
    assert straighten_pair(I36, J36, seed=12345).as_dict() == a
    assert straighten_pair(J36, I36, seed=3).as_dict() == a


def test_candidates_respect_content_and_order():
    for S, T in standard_candidates(I36, J36):
        assert leq(S, T) and len(S) == 4 and len(T) == 3
        assert sorted(S.entries + T.entries) == sorted(I36.entries + J36.entries)


def _incomparable_pairs(family):
    return [(a, b) for a, b in combinations(family.elements, 2) if not comparable(a, b)]


L632 = LatticeFamily(6, 3, 2)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(_incomparable_pairs(L632)), st.integers(0, 2**32))
def test_random_pairs_reevaluate_at_fresh_points(pair, point_seed):
    I, J = pair
    exp = straighten_pair(I, J, L632)
    rng = SeedStream(point_seed).child("fresh").rng()
    for _ in range(20):
        lhs, rhs = exp.evaluate(random_matrix(6, 3, rng))
        assert lhs == rhs
    assert check_expansion(exp, L632) == []


def test_singular_systems_exhaust_the_retry_budget(monkeypatch):
    calls = []

    def zeros(rows, cols, rng):
        calls.append(1)
        return [[Fraction(0)] * cols for _ in range(rows)]

    monkeypatch.setattr(stmod, "random_matrix", zeros)
    with pytest.raises(InconsistencyError, match="8 retries"):
        straighten_pair(I36, J36)
    points = len(standard_candidates(I36, J36)) + stmod.EXTRA_POINTS
    assert len(calls) == (stmod.RETRY_BUDGET + 1) * points


def test_family_membership_required():
    with pytest.raises(PreconditionError):
        straighten_pair(c(2, 4), c(1, 3), LatticeFamily(6, 4, 2))


# ---------------------------------------------------------------- weights

def test_weight_examples():
    assert weight(c(1, 4, 6), 13) == 13**5 + 4 * 13**4 + 6 * 13**3
    assert weight(c(3), 13) == 3 * 13**5
    assert weight(c(1, 4, 6)) == weight(c(1, 4, 6), 13)
    with pytest.raises(PreconditionError):
        weight(c(1), 12)


_elems643 = LatticeFamily(6, 4, 3).elements


@given(st.sampled_from(_elems643), st.sampled_from(_elems643), st.integers(13, 40))
def test_weight_is_additive_over_meet_and_join(I, J, N):
    assert weight(I, N) + weight(J, N) == weight(meet(I, J), N) + weight(join(I, J), N)


def test_worked_example_weight_gaps():
    exp = straighten_pair(I36, J36)
    base = weight(I36, 13) + weight(J36, 13)
    gaps = {t.pair: weight(t.S, 13) + weight(t.T, 13) - base for t in exp.terms}
    # gap = sum over rows h of (change in row sum) * 13^(6-h)
    assert gaps[(c(1, 2, 4, 6), c(1, 3, 5))] == 0
    assert gaps[(c(1, 2, 4, 5), c(1, 3, 6))] == 13**3 - 13**2 == 2028
    assert gaps[(c(1, 2, 3, 6), c(1, 4, 5))] == 13**4 - 13**3 == 26364
    assert gaps[(c(1, 2, 3, 5), c(1, 4, 6))] == 13**4 - 13**2 == 28392
    assert gaps[(c(1, 2, 3, 4), c(1, 5, 6))] == 2 * 13**4 - 2 * 13**2 == 56784
    assert all(g > 0 for p, g in gaps.items() if p != (c(1, 2, 4, 6), c(1, 3, 5)))


def test_initial_term():
    exp = straighten_pair(I36, J36)
    lead = initial_term(exp, 13)
    assert (lead.coeff, lead.pair) == (1, (c(1, 2, 4, 6), c(1, 3, 5)))
    single = straighten_pair(c(1, 2), c(3))
    assert initial_term(single) == single.terms[0]


def test_initial_term_tie_is_an_inconsistency():
    S, T = c(1, 2, 4, 6), c(1, 3, 5)
    fake = StraighteningExpansion(I36, J36, (Term(Fraction(1), S, T), Term(Fraction(2), S, T)))
    with pytest.raises(InconsistencyError):
        initial_term(fake)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_incomparable_pairs(LatticeFamily(6, 4, 3))))
def test_initial_term_is_meet_join(pair):
    I, J = pair
    lead = initial_term(straighten_pair(I, J))
    assert lead.pair == (meet(I, J), join(I, J)) and lead.coeff == 1


def test_corrupted_expansion_is_flagged():
    good = straighten_pair(I36, J36)
    bad_terms = tuple(Term(Fraction(2) if t.pair == (c(1, 2, 4, 6), c(1, 3, 5)) else t.coeff, t.S, t.T)
                      for t in good.terms)
    assert check_expansion(StraighteningExpansion(I36, J36, bad_terms)) != []
    wrong_content = good.terms + (Term(Fraction(1), c(1, 2, 3, 4), c(1, 2, 3)),)
    assert check_expansion(StraighteningExpansion(I36, J36, wrong_content)) != []


# ---------------------------------------------------------------- monomials

def test_two_columns_reduce_to_pair():
    F = LatticeFamily(6, 4, 2)
    res = straighten_monomial([I36, J36], F)
    assert {tuple(ch.columns): coeff for coeff, ch in res} == {k: v for k, v in EXPECTED_36.items()}


def test_three_column_monomial():
    F = LatticeFamily(6, 4, 2)
    cols = [I36, J36, c(1, 2)]
    res = straighten_monomial(cols, F)
    target = content_shape(cols, 2)
    assert all(shape_of(ch, 2) == target for _, ch in res)
    rng = SeedStream(99).child("monomial").rng()
    for _ in range(20):
        Q = random_matrix(6, 4, rng)
        lhs = 1
        for C in cols:
            lhs *= minor_eval(C, Q)
        rhs = Fraction(0)
        for coeff, ch in res:
            term = coeff
            for C in ch:
                term *= minor_eval(C, Q)
            rhs += term
        assert lhs == rhs


def test_standard_monomial_is_fixed():
    t = [c(1, 2, 3, 6), c(1, 2, 5), c(4, 5, 6)]
    assert straighten_monomial(t, LatticeFamily(6, 4, 3)) == [(Fraction(1), Chain(tuple(t)))]


# ---------------------------------------------------------------- Hibi normal form

L532 = LatticeFamily(5, 3, 2)


def test_hibi_examples():
    assert hibi_normal_form([c(1, 2, 5, m=5), c(1, 2, 3, m=5)], L532).columns == (c(1, 2, 3, m=5), c(1, 2, 5, m=5))
    F = LatticeFamily(6, 4, 2)
    assert hibi_normal_form([I36, J36], F).columns == (meet(I36, J36), join(I36, J36))


def test_hibi_exhaustive_small():
    P = GTPoset.of_family(L532)
    assert len(L532.elements) == 18
    for size in (1, 2, 3):
        for cols in combinations_with_replacement(L532.elements, size):
            nf = hibi_normal_form(cols, L532)
            assert monomial_pattern(cols, L532) == monomial_pattern(nf.columns, L532)
            assert hibi_normal_form(nf.columns, L532) == nf
            assert list(nf.columns) == naive_hibi(cols)
            if size == 2 and not comparable(*cols):
                assert nf.columns == (meet(*cols), join(*cols))
    assert P.size == 2 + 3 + 3 + 3


def test_hibi_rejects_foreign_columns():
    with pytest.raises(PreconditionError):
        hibi_normal_form([c(2, 4, m=5)], L532)


# ---------------------------------------------------------------- degeneration reports

def test_degeneration_exhaustive_desk_scale():
    rep = verify_degeneration(LatticeFamily(6, 4, 3), base=13)
    assert rep.ok and rep.pairs_checked > 0
    assert rep.pairs_checked + rep.comparable_skipped == 26 * 25 // 2
    assert f"checked {rep.pairs_checked} pairs, 0 violations" in rep.render_text()


def test_degeneration_trials_skip_comparable():
    rep = verify_degeneration(LatticeFamily(6, 4, 3), trials=60, seed=42)
    assert rep.pairs_checked + rep.comparable_skipped == 60
    assert rep.to_json()["mode"] == "trials=60"
    again = verify_degeneration(LatticeFamily(6, 4, 3), trials=60, seed=42)
    assert again.to_json() == rep.to_json()


def test_degeneration_jobs_do_not_change_the_report():
    F = LatticeFamily(5, 3, 2)
    assert verify_degeneration(F, jobs=2).to_json() == verify_degeneration(F, jobs=1).to_json()


def test_degeneration_bad_base():
    with pytest.raises(PreconditionError):
        verify_degeneration(LatticeFamily(5, 3, 2), base=10)

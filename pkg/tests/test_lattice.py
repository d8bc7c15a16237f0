from itertools import product

import pytest
from hypothesis import given, strategies as st

from branchlat.errors import PreconditionError
from branchlat.lattice import (LatticeFamily, column, join, leq, meet, parse_column,
                               shift_iso, shifted_family)

from oracles import family_by_filter, leq_by_definition


def c(*entries, m=6):
    return column(entries, m)


def test_leq_examples():
    assert leq(c(1, 2, 3, 6), c(1, 2, 5, 6))
    assert leq(c(1, 3), c(1, 3))
    assert not leq(c(1, 2, 5, 6), c(1, 3, 4))
    assert not leq(c(1, 3, 4), c(1, 2, 5, 6))


def test_meet_join_examples():
    I, J = c(1, 2, 5, 6), c(1, 3, 4)
    assert meet(I, J) == c(1, 2, 4, 6)
    assert join(I, J) == c(1, 3, 5)
    assert meet(I, I) == I and join(I, I) == I
    assert meet(c(2), c(1, 3)) == c(1, 3)
    assert join(c(2), c(1, 3)) == c(2)


def test_ambient_mismatch_is_rejected():
    with pytest.raises(PreconditionError):
        leq(column([1], 5), column([1], 6))
    with pytest.raises(PreconditionError):
        meet(column([1], 5), column([2], 6))


def test_column_validation():
    with pytest.raises(PreconditionError):
        column([2, 1], 6)
    with pytest.raises(PreconditionError):
        column([], 6)
    with pytest.raises(PreconditionError):
        column([7], 6)
    assert parse_column("1, 2,5", 6) == c(1, 2, 5)


def test_family_validation():
    with pytest.raises(PreconditionError):
        LatticeFamily(5, 0, 2)
    with pytest.raises(PreconditionError):
        LatticeFamily(5, 3, 5)


def test_small_family_listing():
    got = {I.entries for I in LatticeFamily(3, 2, 1).elements}
    assert got == {(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)}


@pytest.mark.parametrize("m,k,n", [(6, 4, 3), (5, 3, 2), (6, 3, 1), (4, 4, 0), (7, 2, 5)])
def test_enumeration_matches_subset_filter(m, k, n):
    assert set(LatticeFamily(m, k, n).elements) == set(family_by_filter(m, k, n))


def test_frozen_family_sizes():
    # sizes obtained from the subset filter and frozen
    assert len(LatticeFamily(6, 4, 3).elements) == 26
    assert len(LatticeFamily(5, 3, 2).elements) == 18


def test_partial_order_axioms_exhaustive():
    E = LatticeFamily(6, 4, 3).elements
    for a in E:
        assert leq(a, a)
        for b in E:
            assert leq(a, b) == leq_by_definition(a, b)
            if leq(a, b) and leq(b, a):
                assert a == b
            if leq(a, b):
                for x in E:
                    if leq(b, x):
                        assert leq(a, x)


def _lattice_law_violations(E, triples):
    bad = 0
    for a, b, x in triples:
        checks = [
            meet(a, b) == meet(b, a), join(a, b) == join(b, a),
            meet(a, meet(b, x)) == meet(meet(a, b), x),
            join(a, join(b, x)) == join(join(a, b), x),
            meet(a, join(a, b)) == a, join(a, meet(a, b)) == a,
            meet(a, join(b, x)) == join(meet(a, b), meet(a, x)),
            join(a, meet(b, x)) == meet(join(a, b), join(a, x)),
        ]
        bad += not all(checks)
    return bad


def test_distributive_laws_exhaustive_small():
    E = LatticeFamily(5, 3, 2).elements
    assert _lattice_law_violations(E, product(E, repeat=3)) == 0


def test_meet_join_bounds_and_closure():
    F = LatticeFamily(6, 4, 3)
    E = F.elements
    for a, b in product(E, repeat=2):
        lo, hi = meet(a, b, F), join(a, b, F)
        assert leq(lo, a) and leq(lo, b) and leq(a, hi) and leq(b, hi)
        assert len(lo) == max(len(a), len(b)) and len(hi) == min(len(a), len(b))
        for x in E:
            if leq(x, a) and leq(x, b):
                assert leq(x, lo)
            if leq(a, x) and leq(b, x):
                assert leq(hi, x)


def test_shift_examples():
    F = LatticeFamily(6, 3, 3)
    assert shift_iso(c(1, 2, 5), F, 2) == column([1, 2, 7], 8)
    assert shift_iso(c(1, 2, 5), F, 0) == c(1, 2, 5)
    assert shift_iso(c(1, 2, 3), F, 2) == column([1, 2, 3], 8)
    assert shifted_family(F, 2) == LatticeFamily(8, 3, 5)


def test_shift_requires_k_at_most_n():
    with pytest.raises(PreconditionError):
        shift_iso(c(1, 4), LatticeFamily(6, 3, 2), 1)


@pytest.mark.parametrize("m", range(2, 7))
def test_shift_is_an_order_isomorphism(m):
    for n in range(1, m):
        for k in range(1, n + 1):
            F = LatticeFamily(m, k, n)
            for d in range(3):
                G = shifted_family(F, d)
                image = {I: shift_iso(I, F, d) for I in F.elements}
                assert set(image.values()) == set(G.elements)
                for a, b in product(F.elements, repeat=2):
                    assert leq(a, b) == leq(image[a], image[b])


_big = LatticeFamily(8, 4, 3)


@given(st.sampled_from(_big.elements), st.sampled_from(_big.elements),
       st.sampled_from(_big.elements))
def test_distributive_laws_random_larger_family(a, b, x):
    assert _lattice_law_violations(_big.elements, [(a, b, x)]) == 0
    assert _big.contains(meet(a, b)) and _big.contains(join(a, b))


def test_json():
    assert c(1, 2, 5, 6).to_json() == [1, 2, 5, 6]
    assert repr(c(1, 4)) == "[1,4]"

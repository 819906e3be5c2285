import itertools

import pytest
from hypothesis import given, strategies as st

from graycube.poset import (FinitePoset, MonotoneMap, TotalOrder, interval, inversions,
                            is_monotone, lax_covers, laxer_than, product)


def all_orders(k):
    return [TotalOrder(p) for p in itertools.permutations(range(1, k + 1))]


def test_interval_zero_is_a_point():
    p = interval(0)
    assert p.elements == (0,)
    assert p.relation == {(0, 0)}


def test_interval_one_is_a_chain():
    p = interval(1)
    assert p.relation == {(0, 0), (1, 1), (0, 1)}


def test_interval_two_has_three_strict_pairs():
    p = interval(2)
    strict = {(x, y) for x, y in p.relation if x != y}
    assert strict == {(0, 1), (0, 2), (1, 2)}


def test_interval_rejects_negative():
    with pytest.raises(ValueError):
        interval(-1)


def test_product_unit_law():
    p = product(interval(1), product())
    assert len(p) == 2
    assert p.le((0, ()), (1, ()))
    assert not p.le((1, ()), (0, ()))


def test_product_of_two_arrows():
    p = product(interval(1), interval(1))
    assert len(p) == 4
    assert len(p.relation) == 9


def test_product_with_empty_is_empty():
    empty = FinitePoset((), ())
    assert len(product(empty, interval(3))) == 0


@pytest.mark.parametrize("qs", [(), (0,), (2,), (1, 1), (2, 0, 1), (3, 2)])
def test_builders_satisfy_poset_axioms(qs):
    assert product(*map(interval, qs), audit=True).check() == []
    for q in qs:
        assert interval(q).check() == []


def test_supplied_covers_match_hasse_diagram():
    p = product(interval(2), interval(1))
    generic = FinitePoset(p.elements, p.relation)
    assert set(p.cover_pairs()) == set(generic.cover_pairs())


def test_check_reports_broken_relation():
    p = FinitePoset("ab", [("a", "b"), ("b", "a")])
    assert any("antisymmetric" in msg for msg in p.check())
    q = FinitePoset("abc", [("a", "b"), ("b", "c")])
    assert any("transitive" in msg for msg in q.check())


def test_duplicate_elements_rejected():
    with pytest.raises(ValueError):
        FinitePoset([1, 1], [])


def test_monotone_identity():
    p = product(interval(2), interval(1))
    assert is_monotone(MonotoneMap(p, p, {x: x for x in p}))


def test_order_reversal_not_monotone():
    c = interval(1)
    assert not is_monotone(MonotoneMap(c, c, {0: 1, 1: 0}))


def test_collapse_map_is_monotone():
    f = MonotoneMap(interval(2), interval(1), {0: 0, 1: 0, 2: 1})
    assert is_monotone(f)
    assert is_monotone(f, all_pairs=True)


def test_partial_assignment_is_malformed():
    with pytest.raises(ValueError):
        is_monotone(MonotoneMap(interval(1), interval(1), {0: 0}))


def test_lax_square_two_cell():
    assert laxer_than((2, 1), (1, 2))
    assert not laxer_than((1, 2), (2, 1))


def test_incomparable_orders():
    # inversion sets {(1,2),(1,3)} and {(1,3),(2,3)}: neither contains the other
    assert inversions((2, 3, 1)) == {(1, 2), (1, 3)}
    assert inversions((3, 1, 2)) == {(1, 3), (2, 3)}
    assert not laxer_than((2, 3, 1), (3, 1, 2))
    assert not laxer_than((3, 1, 2), (2, 3, 1))


def test_laxer_than_needs_same_set():
    with pytest.raises(ValueError):
        laxer_than((1, 2), (1, 3))


@pytest.mark.parametrize("k", range(6))
def test_laxness_is_inversion_containment(k):
    orders = all_orders(k)
    for s, t in itertools.product(orders, repeat=2):
        assert laxer_than(s, t) == (inversions(t) <= inversions(s))


@pytest.mark.parametrize("k", range(6))
def test_laxness_is_a_partial_order(k):
    orders = all_orders(k)
    p = FinitePoset(orders, le=laxer_than)
    assert p.check() == []


@pytest.mark.parametrize("k", range(5))
def test_adjacent_swaps_are_the_covers(k):
    orders = all_orders(k)
    generic = FinitePoset(orders, le=laxer_than)
    assert {t: set(lax_covers(t)) for t in orders} == \
        {t: set(ys) for t, ys in generic.upper_covers.items()}


@given(st.permutations(range(1, 7)))
def test_each_cover_removes_one_inversion(seq):
    t = TotalOrder(seq)
    for u in lax_covers(t):
        assert laxer_than(t, u)
        assert len(inversions(t)) - len(inversions(u)) == 1


def test_total_order_validation():
    with pytest.raises(ValueError):
        TotalOrder((1, 1))
    with pytest.raises(ValueError):
        TotalOrder((0, 1))
    assert str(TotalOrder((3, 2, 1))) == "(3⪯2⪯1)"
    assert TotalOrder() == ()


def test_poset_json_round_trip():
    p = product(interval(1), interval(2))
    data = p.to_json(lambda x: list(x))
    assert FinitePoset.from_json(data, tuple) == p

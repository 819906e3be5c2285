import pytest

from graycube.cube import build_cube, materialize
from graycube.poset import MonotoneMap, TotalOrder
from graycube.retract import retraction, section
from graycube.theta import ThetaShape, build_theta
from graycube.twocat import (TwoCategory, TwoFunctor, check_axioms, check_functor,
                             compose_functors, equal_functors, identity_functor, make_functor)


def broken_square():
    sq = materialize(build_cube(2))
    table = {}
    for x, y, z in sq.composable_pairs():
        for f in sq.hom(x, y):
            for g in sq.hom(y, z):
                table[(x, y, z, f, g)] = sq.compose(x, y, z, f, g)
    key = ((0, 0), (0, 0), (1, 1), (), (2, 1))
    table[key] = TotalOrder((1, 2))
    homs = {(x, y): sq.hom(x, y) for x in sq.objects for y in sq.objects}
    return TwoCategory.from_tables(sq.objects, homs, {x: () for x in sq.objects}, table), key


@pytest.mark.parametrize("d", range(4))
def test_cubes_pass(d):
    assert check_axioms(build_cube(d)) == []


def test_theta_pass():
    assert check_axioms(build_theta(ThetaShape(1, (1,)))) == []


def test_broken_unit_is_reported():
    c, key = broken_square()
    bad = check_axioms(c)
    assert bad
    kinds = {v.kind for v in bad}
    assert "left unit" in kinds
    left = [v for v in bad if v.kind == "left unit"]
    assert left[0].witness == ((0, 0), (1, 1), (), (2, 1))


def test_nonmonotone_composition_is_reported():
    sq = build_cube(3)
    # reversing the first factor whenever the second is not an identity
    bent = TwoCategory(
        sq.objects, sq.hom, sq.identity,
        lambda x, y, z, f, g: TotalOrder(tuple(reversed(f)) + tuple(g)) if g else TotalOrder(f),
    )
    kinds = {v.kind for v in check_axioms(bent)}
    assert "composition not monotone in first variable" in kinds
    assert "associativity" in kinds


def test_identity_functor_on_cube3():
    assert check_functor(identity_functor(build_cube(3))) == []


def test_section_is_a_functor():
    assert check_functor(section(ThetaShape(1, (2,)))) == []


def test_corrupted_section_is_not_monotone():
    S = section(ThetaShape(1, (2,)))
    m = S.hom_map[(0, 1)]
    corrupted = dict(m.assignment)
    corrupted[(0,)], corrupted[(2,)] = corrupted[(2,)], corrupted[(0,)]
    hom_map = dict(S.hom_map)
    hom_map[(0, 1)] = MonotoneMap(m.source, m.target, corrupted)
    bad = check_functor(TwoFunctor(S.source, S.target, S.object_map, hom_map))
    assert bad and all(v.kind == "not monotone" for v in bad)


def test_partial_object_map_is_malformed():
    S = section(ThetaShape(1, (1,)))
    with pytest.raises(ValueError):
        check_functor(TwoFunctor(S.source, S.target, {0: (0, 0)}, S.hom_map))


def test_broken_composition_is_reported():
    c = build_cube(2)
    # constant on each hom, hence monotone, but (1)(2) must go to (1⪯2)
    sends_to_lax = make_functor(
        c, c, {x: x for x in c.objects},
        lambda x, y, t: TotalOrder(sorted(t, reverse=True)),
    )
    bad = check_functor(sends_to_lax)
    assert {v.kind for v in bad} == {"composition not preserved"}


def test_rs_is_identity_on_example_shapes():
    for text in ("[1;1]", "[2;0,1]"):
        s = ThetaShape.parse(text)
        RS = compose_functors(section(s), retraction(s))
        assert equal_functors(RS, identity_functor(build_theta(s)))


def test_compose_with_identity():
    S = section(ThetaShape(1, (2,)))
    assert equal_functors(compose_functors(identity_functor(S.source), S), S)
    assert equal_functors(compose_functors(S, identity_functor(S.target)), S)


def test_sr_is_idempotent():
    s = ThetaShape(1, (2,))
    e = compose_functors(retraction(s), section(s))
    assert equal_functors(compose_functors(e, e), e)
    assert check_functor(e) == []


def test_compose_mismatch():
    S = section(ThetaShape(1, (1,)))
    with pytest.raises(ValueError):
        compose_functors(S, S)


def test_functors_differing_in_one_cell():
    S = section(ThetaShape(1, (2,)))
    m = S.hom_map[(0, 1)]
    changed = dict(m.assignment)
    changed[(1,)] = TotalOrder((2, 1, 3))
    hom_map = dict(S.hom_map)
    hom_map[(0, 1)] = MonotoneMap(m.source, m.target, changed)
    other = TwoFunctor(S.source, S.target, S.object_map, hom_map)
    assert equal_functors(S, S)
    assert not equal_functors(S, other)


@pytest.mark.parametrize("text", ["[1;1]", "[1;2]", "[2;0,1]", "[2;1,1]"])
def test_composites_of_functors_stay_functors(text):
    s = ThetaShape.parse(text)
    S, R = section(s), retraction(s)
    for F, G in ((S, R), (R, S)):
        assert check_functor(compose_functors(F, G)) == []

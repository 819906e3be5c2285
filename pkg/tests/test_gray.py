import itertools
from collections import Counter

import pytest

from graycube import gray
from graycube.cube import all_atoms, build_cube
from graycube.gray import (BlockSplit, block_embedding_first, block_embedding_second, gamma,
                           verify_gray_relations)
from graycube.poset import TotalOrder, laxer_than
from graycube.twocat import check_functor

SPLITS = [BlockSplit(m, d - m) for d in range(6) for m in range(d + 1)]


def test_first_embedding_of_arrow():
    F = block_embedding_first(BlockSplit(1, 1), (0,))
    assert F((0,)) == (0, 0) and F((1,)) == (1, 0)
    assert F.on_cell((0,), (1,), (1,)) == (1,)


def test_second_embedding_shifts_directions():
    G = block_embedding_second(BlockSplit(2, 1), (1, 0))
    assert G((1,)) == (1, 0, 1)
    assert G.on_cell((0,), (1,), (1,)) == (3,)


def test_empty_first_factor_picks_out_basepoint():
    F = block_embedding_first(BlockSplit(0, 2), (1, 0))
    assert list(F.object_map.values()) == [(1, 0)]


def test_square_onto_top_face():
    F = block_embedding_first(BlockSplit(2, 1), (1,))
    assert F((0, 0)) == (0, 0, 1) and F((1, 1)) == (1, 1, 1)
    lo, hi = F.on_cell((0, 0), (1, 1), (2, 1)), F.on_cell((0, 0), (1, 1), (1, 2))
    assert build_cube(3).hom((0, 0, 1), (1, 1, 1)).le(lo, hi)
    assert check_functor(F) == []


@pytest.mark.parametrize("split", SPLITS, ids=lambda s: f"{s.m}+{s.n}")
def test_embeddings_are_functors(split):
    for b in build_cube(split.n).objects:
        assert check_functor(block_embedding_first(split, b)) == []
    for a in build_cube(split.m).objects:
        assert check_functor(block_embedding_second(split, a)) == []


def test_gamma_on_lax_square():
    assert gamma(BlockSplit(1, 1), (1,), (1,)) == ((2, 1), (1, 2))


def test_gamma_with_identity_is_degenerate():
    s, t = gamma(BlockSplit(1, 1), (1,), ())
    assert s == t == (1,)


def test_gamma_block_cells():
    assert gamma(BlockSplit(2, 1), (2, 1), (1,)) == ((3, 2, 1), (2, 1, 3))


@pytest.mark.parametrize("split", [s for s in SPLITS if s.dim <= 4], ids=lambda s: f"{s.m}+{s.n}")
def test_gamma_is_a_two_cell(split):
    big = build_cube(split.dim)
    for (a, a2, f), (b, b2, g) in itertools.product(build_cube(split.m).cells(),
                                                     build_cube(split.n).cells()):
        s, t = gamma(split, f, g)
        h = big.hom(a + b, a2 + b2)
        assert s in h and t in h
        assert laxer_than(s, t)


@pytest.mark.parametrize("split", [s for s in SPLITS if s.dim <= 4], ids=lambda s: f"{s.m}+{s.n}")
def test_gamma_boundaries_compose(split):
    A, B, big = build_cube(split.m), build_cube(split.n), build_cube(split.dim)
    for (a, a1, f) in A.cells():
        for a2 in A.successors(a1):
            for f2 in A.hom(a1, a2):
                for (b, b2, g) in B.cells():
                    whole = gamma(split, A.compose(a, a1, a2, f, f2), g)
                    s1, _ = gamma(split, f, g)
                    _, t2 = gamma(split, f2, g)
                    gs = split.shift(g)
                    src = big.compose(a + b, a1 + b2, a2 + b2, s1, TotalOrder(f2))
                    dst = big.compose(a + b, a1 + b, a2 + b2, TotalOrder(f), t2)
                    assert (src, dst) == whole
                    assert src[:len(gs)] == gs


@pytest.mark.parametrize("split", SPLITS, ids=lambda s: f"{s.m}+{s.n}")
def test_relations_hold(split):
    r = verify_gray_relations(split)
    assert r.ok, r.violations[:5]
    assert all(r.counts[b] > 0 for b in gray.BULLETS[:2])


def test_degenerate_factor_has_no_mixed_instances():
    r = verify_gray_relations(BlockSplit(0, 2))
    assert r.ok
    assert r.counts["gamma natural in 2-cells of second factor"] > 0


def test_reversed_interchanger_is_caught(monkeypatch):
    real = gray.gamma
    monkeypatch.setattr(gray, "gamma", lambda split, f, g: real(split, f, g)[::-1])
    r = verify_gray_relations(BlockSplit(1, 1))
    assert not r.ok


@pytest.mark.parametrize("split", SPLITS, ids=lambda s: f"{s.m}+{s.n}")
def test_embeddings_tile_atoms(split):
    hits = Counter()
    for b in build_cube(split.n).objects:
        F = block_embedding_first(split, b)
        for at in all_atoms(split.m):
            hits[(F(at.src), F(at.dst), F.on_cell(at.src, at.dst, (at.direction,)))] += 1
    for a in build_cube(split.m).objects:
        G = block_embedding_second(split, a)
        for at in all_atoms(split.n):
            hits[(G(at.src), G(at.dst), G.on_cell(at.src, at.dst, (at.direction,)))] += 1
    want = Counter((at.src, at.dst, (at.direction,)) for at in all_atoms(split.dim))
    assert hits == want


def test_report_json():
    data = verify_gray_relations(BlockSplit(1, 1)).to_json()
    assert data["ok"] and set(data["bullets"]) == set(gray.BULLETS)

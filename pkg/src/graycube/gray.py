"""The Gray tensor structure on cubes, checked inside □^(m+n).

□^m ⊗ □^n is identified with □^(m+n): directions ``1..m`` come from the first
factor and direction ``c`` of the second factor becomes ``m + c``.  In a
locally posetal target an equation between pasted 2-cells holds as soon as
both sides are defined with the same boundary, so each defining relation is
checked as a chain of ⊴ steps between the expected boundary 1-cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cube import bits_str, build_cube
from .poset import TotalOrder, laxer_than
from .twocat import TwoFunctor, Violation, check_functor, make_functor


@dataclass(frozen=True)
class BlockSplit:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("factor dimensions must be nonnegative")

    @property
    def dim(self) -> int:
        return self.m + self.n

    def shift(self, t) -> TotalOrder:
        return TotalOrder(self.m + c for c in t)


def block_embedding_first(split: BlockSplit, b) -> TwoFunctor:
    """``x -> (x, b)``: □^m into □^(m+n) with the second block fixed at ``b``."""
    b = tuple(b)
    if len(b) != split.n:
        raise ValueError(f"basepoint must have {split.n} bits")
    return make_functor(build_cube(split.m), build_cube(split.dim),
                        {e: e + b for e in build_cube(split.m).objects},
                        lambda x, y, t: TotalOrder(t))


def block_embedding_second(split: BlockSplit, a) -> TwoFunctor:
    """``y -> (a, y)``: □^n into □^(m+n), directions shifted by ``m``."""
    a = tuple(a)
    if len(a) != split.m:
        raise ValueError(f"basepoint must have {split.m} bits")
    return make_functor(build_cube(split.n), build_cube(split.dim),
                        {e: a + e for e in build_cube(split.n).objects},
                        lambda x, y, t: split.shift(t))


def gamma(split: BlockSplit, f, g) -> tuple[TotalOrder, TotalOrder]:
    """The interchanger of ``f`` in □^m and ``g`` in □^n as ``(source, target)``.

    ``f`` and ``g`` are total orders (1-cells of the factors).  The source
    runs ``(a, g)`` then ``(f, b')``; the target runs ``(f, b)`` then
    ``(a', g)``.
    """
    gs = split.shift(g)
    return TotalOrder(tuple(gs) + tuple(f)), TotalOrder(tuple(f) + tuple(gs))


def _cat(*ts) -> TotalOrder:
    return TotalOrder(itertools.chain.from_iterable(ts))


def _cells(d):
    c = build_cube(d)
    return [(x, y, f) for x, y, f in c.cells()]


@dataclass
class GrayReport:
    m: int
    n: int
    counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "ok": self.ok,
                "bullets": {k: {"instances": v,
                                "failures": sum(1 for w in self.violations if w.kind == k)}
                            for k, v in self.counts.items()},
                "violations": [str(w) for w in self.violations]}

    @classmethod
    def from_json(cls, data) -> "GrayReport":
        counts = {k: v["instances"] for k, v in data["bullets"].items()}
        return cls(data["m"], data["n"], counts, list(data["violations"]))


BULLETS = (
    "first embedding is a 2-functor",
    "second embedding is a 2-functor",
    "gamma with identity in first factor",
    "gamma with identity in second factor",
    "gamma composes along first factor",
    "gamma composes along second factor",
    "gamma natural in 2-cells of first factor",
    "gamma natural in 2-cells of second factor",
)


def verify_gray_relations(split: BlockSplit) -> GrayReport:
    """Instantiate every defining relation of the Gray tensor product in □^(m+n).

    Quantifies over all objects, all 1-cells and all ⊴-pairs of the factors,
    not only the generators.
    """
    m, n = split.m, split.n
    A, B = build_cube(m), build_cube(n)
    big = build_cube(split.dim)
    report = GrayReport(m, n, counts=dict.fromkeys(BULLETS, 0))

    def fail(bullet, *witness):
        report.violations.append(Violation(bullet, witness))

    def chain(bullet, src, dst, steps, witness):
        # steps must form a ⊴-chain inside hom(src, dst)
        report.counts[bullet] += 1
        h = big.hom(src, dst)
        if any(t not in h for t in steps):
            fail(bullet, *witness, "boundary mismatch")
            return
        for lo, hi in zip(steps, steps[1:]):
            if not laxer_than(lo, hi):
                fail(bullet, *witness, lo, hi)
                return

    for b in B.objects:
        report.counts[BULLETS[0]] += 1
        for v in check_functor(block_embedding_first(split, b)):
            fail(BULLETS[0], bits_str(b), str(v))
    for a in A.objects:
        report.counts[BULLETS[1]] += 1
        for v in check_functor(block_embedding_second(split, a)):
            fail(BULLETS[1], bits_str(a), str(v))

    cells_a, cells_b = _cells(m), _cells(n)

    for a in A.objects:
        for (b, b2, g) in cells_b:
            report.counts[BULLETS[2]] += 1
            s, t = gamma(split, A.identity(a), g)
            if s != t or s != split.shift(g):
                fail(BULLETS[2], bits_str(a), g)
    for b in B.objects:
        for (a, a2, f) in cells_a:
            report.counts[BULLETS[3]] += 1
            s, t = gamma(split, f, B.identity(b))
            if s != t or s != TotalOrder(f):
                fail(BULLETS[3], f, bits_str(b))

    for (a, a1, f) in cells_a:
        for a2 in A.successors(a1):
            for f2 in A.hom(a1, a2):
                for (b, b2, g) in cells_b:
                    src, dst = a + b, a2 + b2
                    g_ = split.shift(g)
                    # γ_{f,g} whiskered by (f2,b2), then (f,b) whiskered with γ_{f2,g}
                    steps = [_cat(g_, f, f2), _cat(f, g_, f2), _cat(f, f2, g_)]
                    whole = gamma(split, A.compose(a, a1, a2, f, f2), g)
                    if (steps[0], steps[-1]) != whole:
                        report.counts[BULLETS[4]] += 1
                        fail(BULLETS[4], f, f2, g, "pasting boundary differs from composite gamma")
                        continue
                    chain(BULLETS[4], src, dst, steps, (f, f2, g))

    for (b, b1, g) in cells_b:
        for b2 in B.successors(b1):
            for g2 in B.hom(b1, b2):
                for (a, a2, f) in cells_a:
                    src, dst = a + b, a2 + b2
                    g_, g2_ = split.shift(g), split.shift(g2)
                    # (a,g) whiskered with γ_{f,g2}, then γ_{f,g} whiskered by (a',g2)
                    steps = [_cat(g_, g2_, f), _cat(g_, f, g2_), _cat(f, g_, g2_)]
                    whole = gamma(split, f, B.compose(b, b1, b2, g, g2))
                    if (steps[0], steps[-1]) != whole:
                        report.counts[BULLETS[5]] += 1
                        fail(BULLETS[5], f, g, g2, "pasting boundary differs from composite gamma")
                        continue
                    chain(BULLETS[5], src, dst, steps, (f, g, g2))

    for a in A.objects:
        for a2 in A.successors(a):
            h = A.hom(a, a2)
            for f, f2 in h.relation:
                for (b, b2, g) in cells_b:
                    g_ = split.shift(g)
                    lhs = [_cat(g_, f), _cat(f, g_), _cat(f2, g_)]
                    rhs = [_cat(g_, f), _cat(g_, f2), _cat(f2, g_)]
                    chain(BULLETS[6], a + b, a2 + b2, lhs, (f, f2, g, "left"))
                    chain(BULLETS[6], a + b, a2 + b2, rhs, (f, f2, g, "right"))

    for b in B.objects:
        for b2 in B.successors(b):
            h = B.hom(b, b2)
            for g, g2 in h.relation:
                for (a, a2, f) in cells_a:
                    g_, g2_ = split.shift(g), split.shift(g2)
                    lhs = [_cat(g_, f), _cat(f, g_), _cat(f, g2_)]
                    rhs = [_cat(g_, f), _cat(g2_, f), _cat(f, g2_)]
                    chain(BULLETS[7], a + b, a2 + b2, lhs, (f, g, g2, "left"))
                    chain(BULLETS[7], a + b, a2 + b2, rhs, (f, g, g2, "right"))
    return report

"""Gray cubes: the d-fold Gray tensor power of the free-living arrow.

Objects are bit vectors ``(e_1, ..., e_d)``.  A 1-cell ``e -> z`` exists when
``e <= z`` coordinatewise and is a total order on the directions flipped
from 0 to 1; 2-cells are the laxness order ⊴ between such orders, and
horizontal composition concatenates (the join of the two orders).
Directions are 1-indexed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce

from .poset import FinitePoset, TotalOrder, lax_covers, laxer_than
from .twocat import TwoCategory, TwoFunctor, make_functor

Bits = tuple[int, ...]


def parse_bits(s: str, d: int | None = None) -> Bits:
    if set(s) - {"0", "1"}:
        raise ValueError(f"not a bit string: {s!r}")
    if d is not None and len(s) != d:
        raise ValueError(f"expected {d} bits, got {s!r}")
    return tuple(int(c) for c in s)


def bits_str(e: Bits) -> str:
    return "".join(map(str, e))


def rank_square(e: Bits) -> int:
    """Number of 1-bits."""
    return sum(e)


def directions_between(e: Bits, z: Bits) -> frozenset[int] | None:
    """Directions flipped going from ``e`` to ``z``; ``None`` if ``e`` is not below ``z``."""
    if len(e) != len(z):
        raise ValueError(f"bit vectors of different lengths: {e}, {z}")
    if any(a > b for a, b in zip(e, z)):
        return None
    return frozenset(i + 1 for i, (a, b) in enumerate(zip(e, z)) if a < b)


def unit_vector(d: int, a: int) -> Bits:
    return tuple(1 if b == a else 0 for b in range(1, d + 1))


@dataclass(frozen=True)
class CubeOneCell:
    dim: int
    src: Bits
    dst: Bits
    order: TotalOrder

    def __post_init__(self):
        if len(self.src) != self.dim or len(self.dst) != self.dim:
            raise ValueError("endpoint length differs from dimension")
        support = directions_between(self.src, self.dst)
        if support is None:
            raise ValueError(f"no 1-cell {bits_str(self.src)} -> {bits_str(self.dst)}")
        if frozenset(self.order) != support:
            raise ValueError(f"order {self.order} is not on directions {sorted(support)}")
        object.__setattr__(self, "order", TotalOrder(self.order))

    def __str__(self):
        return f"{self.order}: {bits_str(self.src)} -> {bits_str(self.dst)}"

    def to_json(self) -> dict:
        return {"dim": self.dim, "src": bits_str(self.src), "dst": bits_str(self.dst),
                "order": list(self.order)}

    @classmethod
    def from_json(cls, data) -> "CubeOneCell":
        d = data["dim"]
        return cls(d, parse_bits(data["src"], d), parse_bits(data["dst"], d),
                   TotalOrder(data["order"]))


def identity_cell(e: Bits) -> CubeOneCell:
    return CubeOneCell(len(e), e, e, TotalOrder())


@dataclass(frozen=True)
class Atom:
    """The generating 1-cell ``{a} : dst - δ^a -> dst``."""

    dim: int
    direction: int
    dst: Bits

    def __post_init__(self):
        if len(self.dst) != self.dim or not 1 <= self.direction <= self.dim:
            raise ValueError(f"bad atom {self.direction} into {self.dst}")
        if self.dst[self.direction - 1] != 1:
            raise ValueError(f"atom {{{self.direction}}} needs bit {self.direction} of its target set")

    @property
    def src(self) -> Bits:
        a = self.direction - 1
        return self.dst[:a] + (0,) + self.dst[a + 1:]

    def cell(self) -> CubeOneCell:
        return CubeOneCell(self.dim, self.src, self.dst, TotalOrder((self.direction,)))

    def __str__(self):
        return f"{{{self.direction}}}: {bits_str(self.src)} -> {bits_str(self.dst)}"


def all_atoms(d: int):
    for e in itertools.product((0, 1), repeat=d):
        for a in range(1, d + 1):
            if e[a - 1]:
                yield Atom(d, a, e)


@lru_cache(maxsize=None)
def hom_poset(d: int, e: Bits, z: Bits) -> FinitePoset:
    """The hom-poset ``□^d(e, z)`` ordered by ⊴ (empty unless ``e <= z``)."""
    e, z = tuple(e), tuple(z)
    if len(e) != d or len(z) != d:
        raise ValueError(f"objects of □^{d} must have {d} bits")
    support = directions_between(e, z)
    if support is None:
        return FinitePoset((), ())
    orders = [TotalOrder(p) for p in itertools.permutations(sorted(support))]
    # reverse-sorted lists the most lax order first
    orders.sort(reverse=True)
    return FinitePoset(orders, le=laxer_than, covers=lax_covers)


def compose_orders(t1, t2) -> TotalOrder:
    # Directions of the first cell all precede those of the second.
    return TotalOrder(tuple(t1) + tuple(t2))


def compose_cells(c1: CubeOneCell, c2: CubeOneCell) -> CubeOneCell:
    if c1.dim != c2.dim or c1.dst != c2.src:
        raise ValueError(f"cells not composable: {c1} then {c2}")
    return CubeOneCell(c1.dim, c1.src, c2.dst, compose_orders(c1.order, c2.order))


def atomic_decompose(c: CubeOneCell) -> list[Atom]:
    """Atoms whose composite, in order, is ``c``."""
    out = []
    cur = list(c.src)
    for a in c.order:
        cur[a - 1] = 1
        out.append(Atom(c.dim, a, tuple(cur)))
    return out


def recompose(d: int, src: Bits, atoms: list[Atom]) -> CubeOneCell:
    return reduce(compose_cells, (at.cell() for at in atoms), identity_cell(src))


@lru_cache(maxsize=None)
def build_cube(d: int) -> TwoCategory:
    """The Gray cube □^d with lazily computed homs and composition."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    objects = list(itertools.product((0, 1), repeat=d))
    return TwoCategory(
        objects,
        lambda e, z: hom_poset(d, e, z),
        lambda e: TotalOrder(),
        lambda e, z, w, f, g: compose_orders(f, g),
        name=f"□^{d}",
    )


def materialize(c: TwoCategory) -> TwoCategory:
    """An explicit-table copy of ``c``; meant for small cubes (d <= 4)."""
    homs = {(x, y): FinitePoset(c.hom(x, y).elements, c.hom(x, y).relation)
            for x in c.objects for y in c.successors(x)}
    table = {
        (x, y, z, f, g): c.compose(x, y, z, f, g)
        for x, y, z in c.composable_pairs() for f in c.hom(x, y) for g in c.hom(y, z)
    }
    return TwoCategory.from_tables(c.objects, homs, {x: c.identity(x) for x in c.objects},
                                   table, name=c.name)


class NotAFunctorError(ValueError):
    """Atom data whose extension breaks 2-functoriality.

    ``witness`` is ``(src, dst, lower, upper, image_lower, image_upper)``: a
    covering pair ``lower ⊴ upper`` in a hom of the cube whose images are not
    related in the target.
    """

    def __init__(self, witness):
        self.witness = witness
        src, dst, lo, hi, flo, fhi = witness
        super().__init__(
            f"{lo} ⊴ {hi} in hom {bits_str(src)} -> {bits_str(dst)} "
            f"maps to {flo!r}, {fhi!r}, which are not related"
        )


def extend_from_atoms(d: int, target: TwoCategory, obj_map, atom_map, *,
                      all_pairs: bool = False) -> TwoFunctor:
    """Extend object and atom images to a 2-functor ``□^d -> target``.

    The underlying 1-category of a cube is free on its atoms, so the
    extension always exists as a 1-functor; it is a 2-functor iff every
    covering pair of ⊴ maps to an ordered pair.  Raises
    :class:`NotAFunctorError` with the first failing pair otherwise.
    ``all_pairs=True`` checks every ⊴-pair instead of the covers.
    """
    cube = build_cube(d)
    obj_map = {e: obj_map[e] for e in cube.objects}
    for at in all_atoms(d):
        x, y = obj_map[at.src], obj_map[at.dst]
        if atom_map[at] not in target.hom(x, y):
            raise ValueError(f"image of atom {at} is not a 1-cell {x!r} -> {y!r}")

    def image(e, z, t):
        cur, out = e, target.identity(obj_map[e])
        for at in atomic_decompose(CubeOneCell(d, e, z, t)):
            out = target.compose(obj_map[e], obj_map[cur], obj_map[at.dst], out, atom_map[at])
            cur = at.dst
        return out

    F = make_functor(cube, target, obj_map, image)
    for e in cube.objects:
        for z in cube.successors(e):
            m = F.hom_map[(e, z)]
            pairs = sorted(m.source.relation) if all_pairs else m.source.cover_pairs()
            for lo, hi in pairs:
                if not m.target.le(m(lo), m(hi)):
                    raise NotAFunctorError((e, z, lo, hi, m(lo), m(hi)))
    return F


def atom_dot(d: int) -> str:
    """DOT source for the 1-skeleton of □^d: objects and atoms."""
    lines = [f'digraph "cube{d}" {{', "  rankdir=TB;"]
    for e in itertools.product((0, 1), repeat=d):
        lines.append(f'  "{bits_str(e)}" [label="{bits_str(e)}"];')
    for at in all_atoms(d):
        lines.append(f'  "{bits_str(at.src)}" -> "{bits_str(at.dst)}" [label="{at.direction}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_dot(poset: FinitePoset, name: str = "hom", label=str) -> str:
    """DOT source for the Hasse diagram of a poset, edges pointing upward."""
    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    for x in poset.elements:
        lines.append(f'  "{label(x)}";')
    for x, y in poset.cover_pairs():
        lines.append(f'  "{label(x)}" -> "{label(y)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

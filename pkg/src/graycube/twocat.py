"""Finite locally posetal 2-categories and 2-functors between them.

2-cells are never stored: a 2-cell ``f => g`` exists exactly when ``f <= g``
in the hom-poset, so every coherence condition becomes an order check.
Composition is written diagrammatically, ``compose(x, y, z, f, g)`` being
``f`` followed by ``g``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Hashable, Iterable, Mapping

from .poset import FinitePoset, MonotoneMap, monotonicity_failures


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple

    def __str__(self):
        return f"{self.kind}: " + ", ".join(map(_show, self.witness))


def _show(x):
    if isinstance(x, tuple) and x and all(isinstance(a, int) for a in x) and type(x) is tuple:
        return "(" + ",".join(map(str, x)) + ")"
    return str(x)


class TwoCategory:
    """A finite 2-category whose hom-categories are posets.

    ``hom(x, y)`` returns a :class:`FinitePoset` (empty when there are no
    1-cells), ``identity(x)`` an element of ``hom(x, x)`` and
    ``compose(x, y, z, f, g)`` the composite in ``hom(x, z)``.  Homs are
    memoised, so lazily defined categories pay for each hom once.
    """

    def __init__(self, objects: Iterable[Hashable], hom: Callable, identity: Callable,
                 compose: Callable, *, name: str | None = None):
        self.objects = tuple(objects)
        self._hom = lru_cache(maxsize=None)(hom)
        self.identity = identity
        self.compose = compose
        self.name = name

    def hom(self, x, y) -> FinitePoset:
        return self._hom(x, y)

    @classmethod
    def from_tables(cls, objects, homs: Mapping, identities: Mapping, compose: Mapping,
                    *, name=None) -> "TwoCategory":
        """Build from explicit tables.

        ``homs`` maps ``(x, y)`` to a poset (missing pairs are empty);
        ``compose`` maps ``(x, y, z, f, g)`` to the composite.
        """
        empty = FinitePoset((), ())
        homs, identities, table = dict(homs), dict(identities), dict(compose)
        return cls(
            objects,
            lambda x, y: homs.get((x, y), empty),
            lambda x: identities[x],
            lambda x, y, z, f, g: table[(x, y, z, f, g)],
            name=name,
        )

    def successors(self, x) -> list:
        return [y for y in self.objects if len(self.hom(x, y))]

    def cells(self):
        """Every 1-cell as ``(x, y, f)``."""
        for x in self.objects:
            for y in self.successors(x):
                for f in self.hom(x, y):
                    yield x, y, f

    def composable_pairs(self):
        for x in self.objects:
            for y in self.successors(x):
                for z in self.successors(y):
                    yield x, y, z

    def __repr__(self):
        label = self.name or f"{len(self.objects)} objects"
        return f"TwoCategory({label})"

    def __eq__(self, other):
        if not isinstance(other, TwoCategory):
            return NotImplemented
        return same_category(self, other)

    __hash__ = object.__hash__


def same_category(a: TwoCategory, b: TwoCategory) -> bool:
    """Structural equality: objects, homs, identities and all composites."""
    if a is b:
        return True
    if set(a.objects) != set(b.objects):
        return False
    for x in a.objects:
        if a.identity(x) != b.identity(x):
            return False
        for y in a.objects:
            if a.hom(x, y) != b.hom(x, y):
                return False
    for x, y, z in a.composable_pairs():
        for f in a.hom(x, y):
            for g in a.hom(y, z):
                if a.compose(x, y, z, f, g) != b.compose(x, y, z, f, g):
                    return False
    return True


def check_axioms(c: TwoCategory) -> list[Violation]:
    """Exhaustively check a locally posetal 2-category.

    Returns every typing, unit, associativity and monotonicity failure found;
    an empty list means ``c`` is a 2-category.  Monotonicity is checked on
    covering pairs of each hom-poset, which generate the order.
    """
    out = []
    for x in c.objects:
        i = c.identity(x)
        if i not in c.hom(x, x):
            out.append(Violation("identity not in hom", (x, i)))
    for x, y, f in c.cells():
        ix, iy = c.identity(x), c.identity(y)
        if c.compose(x, x, y, ix, f) != f:
            out.append(Violation("left unit", (x, y, ix, f)))
        if c.compose(x, y, y, f, iy) != f:
            out.append(Violation("right unit", (x, y, f, iy)))
    for x, y, z in c.composable_pairs():
        hxy, hyz, hxz = c.hom(x, y), c.hom(y, z), c.hom(x, z)
        for f in hxy:
            for g in hyz:
                h = c.compose(x, y, z, f, g)
                if h not in hxz:
                    out.append(Violation("composite not in hom", (x, y, z, f, g, h)))
        for f, f2 in hxy.cover_pairs():
            for g in hyz:
                if not hxz.le(c.compose(x, y, z, f, g), c.compose(x, y, z, f2, g)):
                    out.append(Violation("composition not monotone in first variable",
                                         (x, y, z, f, f2, g)))
        for g, g2 in hyz.cover_pairs():
            for f in hxy:
                if not hxz.le(c.compose(x, y, z, f, g), c.compose(x, y, z, f, g2)):
                    out.append(Violation("composition not monotone in second variable",
                                         (x, y, z, f, g, g2)))
    for x, y, z in c.composable_pairs():
        for w in c.successors(z):
            for f in c.hom(x, y):
                for g in c.hom(y, z):
                    fg = c.compose(x, y, z, f, g)
                    for h in c.hom(z, w):
                        lhs = c.compose(x, z, w, fg, h)
                        rhs = c.compose(x, y, w, f, c.compose(y, z, w, g, h))
                        if lhs != rhs:
                            out.append(Violation("associativity", (x, y, z, w, f, g, h)))
    return out


@dataclass(frozen=True, eq=False)
class TwoFunctor:
    """A 2-functor given by its object map and one monotone map per hom."""

    source: TwoCategory
    target: TwoCategory
    object_map: Mapping = field(repr=False)
    hom_map: Mapping = field(repr=False)

    def __call__(self, x):
        return self.object_map[x]

    def on_cell(self, x, y, f):
        return self.hom_map[(x, y)](f)

    def __eq__(self, other):
        if not isinstance(other, TwoFunctor):
            return NotImplemented
        return equal_functors(self, other)

    __hash__ = object.__hash__


def make_functor(source: TwoCategory, target: TwoCategory, object_map: Mapping,
                 cell_image: Callable) -> TwoFunctor:
    """Tabulate a functor from ``cell_image(x, y, f)`` on every source hom."""
    hom_map = {}
    for x in source.objects:
        for y in source.objects:
            h = source.hom(x, y)
            hom_map[(x, y)] = MonotoneMap(
                h, target.hom(object_map[x], object_map[y]),
                {f: cell_image(x, y, f) for f in h},
            )
    return TwoFunctor(source, target, dict(object_map), hom_map)


def identity_functor(c: TwoCategory) -> TwoFunctor:
    return make_functor(c, c, {x: x for x in c.objects}, lambda x, y, f: f)


def check_functor(F: TwoFunctor) -> list[Violation]:
    """Every way ``F`` fails to be a 2-functor; empty means it is one.

    Raises ``ValueError`` if the object map or some hom map is not total.
    """
    src, tgt = F.source, F.target
    missing = [x for x in src.objects if x not in F.object_map]
    if missing:
        raise ValueError(f"object map undefined on {missing!r}")
    out = []
    for x in src.objects:
        if F.object_map[x] not in tgt.objects:
            out.append(Violation("object image not an object", (x, F.object_map[x])))
    if out:
        return out
    for x in src.objects:
        for y in src.successors(x):
            if (x, y) not in F.hom_map:
                raise ValueError(f"hom map undefined on ({x!r}, {y!r})")
            m = F.hom_map[(x, y)]
            fx, fy = F.object_map[x], F.object_map[y]
            h = tgt.hom(fx, fy)
            bad = [f for f in src.hom(x, y) if f not in m.assignment or m(f) not in h]
            if any(f not in m.assignment for f in bad):
                raise ValueError(f"hom map on ({x!r}, {y!r}) is not total")
            for f in bad:
                out.append(Violation("cell image not in target hom", (x, y, f, m(f))))
            if bad:
                continue
            retyped = MonotoneMap(m.source, h, m.assignment)
            for f, g in monotonicity_failures(retyped):
                out.append(Violation("not monotone", (x, y, f, g, m(f), m(g))))
    if out:
        return out
    for x in src.objects:
        want = tgt.identity(F.object_map[x])
        got = F.on_cell(x, x, src.identity(x))
        if got != want:
            out.append(Violation("identity not preserved", (x, got, want)))
    for x, y, z in src.composable_pairs():
        fx, fy, fz = F.object_map[x], F.object_map[y], F.object_map[z]
        for f in src.hom(x, y):
            for g in src.hom(y, z):
                lhs = F.on_cell(x, z, src.compose(x, y, z, f, g))
                rhs = tgt.compose(fx, fy, fz, F.on_cell(x, y, f), F.on_cell(y, z, g))
                if lhs != rhs:
                    out.append(Violation("composition not preserved", (x, y, z, f, g, lhs, rhs)))
    return out


def compose_functors(F: TwoFunctor, G: TwoFunctor) -> TwoFunctor:
    """``F`` then ``G`` (the composite usually written ``G F``)."""
    if F.target is not G.source and F.target != G.source:
        raise ValueError("target of the first functor is not the source of the second")
    obj = {x: G.object_map[F.object_map[x]] for x in F.source.objects}
    return make_functor(
        F.source, G.target, obj,
        lambda x, y, f: G.on_cell(F(x), F(y), F.on_cell(x, y, f)),
    )


def equal_functors(F: TwoFunctor, G: TwoFunctor) -> bool:
    for x in F.source.objects:
        if F.object_map[x] != G.object_map[x]:
            return False
    for x, y, f in F.source.cells():
        if F.on_cell(x, y, f) != G.on_cell(x, y, f):
            return False
    return True


# JSON.  Object and cell ids become JSON values (tuples as lists); hom keys
# are "x|y" built from the canonical string of each object.

def to_jsonable(v):
    if isinstance(v, tuple):
        return [to_jsonable(a) for a in v]
    return v


def from_jsonable(v):
    if isinstance(v, list):
        return tuple(from_jsonable(a) for a in v)
    return v


def object_key(x) -> str:
    if isinstance(x, tuple) and all(a in (0, 1) for a in x):
        return "".join(map(str, x))
    return str(x) if not isinstance(x, tuple) else json.dumps(to_jsonable(x))


def element_key(f) -> str:
    return json.dumps(to_jsonable(f))


def category_to_json(c: TwoCategory, *, include_compose: bool = True) -> dict:
    out: dict[str, Any] = {
        "objects": [to_jsonable(x) for x in c.objects],
        "homs": {},
        "identities": {object_key(x): to_jsonable(c.identity(x)) for x in c.objects},
    }
    for x in c.objects:
        for y in c.successors(x):
            out["homs"][f"{object_key(x)}|{object_key(y)}"] = c.hom(x, y).to_json(to_jsonable)
    if include_compose:
        out["compose"] = [
            [to_jsonable(v) for v in (x, y, z, f, g, c.compose(x, y, z, f, g))]
            for x, y, z in c.composable_pairs()
            for f in c.hom(x, y) for g in c.hom(y, z)
        ]
    if c.name:
        out["name"] = c.name
    return out


def category_from_json(data: Mapping, compose: Callable | None = None) -> TwoCategory:
    """Rebuild a category; without a ``compose`` table a callable must be given."""
    objects = [from_jsonable(x) for x in data["objects"]]
    by_key = {object_key(x): x for x in objects}
    homs = {}
    for key, poset in data["homs"].items():
        kx, ky = key.split("|")
        homs[(by_key[kx], by_key[ky])] = FinitePoset.from_json(poset, from_jsonable)
    identities = {by_key[k]: from_jsonable(v) for k, v in data["identities"].items()}
    name = data.get("name")
    if "compose" in data:
        table = {}
        for row in data["compose"]:
            x, y, z, f, g, h = (from_jsonable(v) for v in row)
            table[(x, y, z, f, g)] = h
        return TwoCategory.from_tables(objects, homs, identities, table, name=name)
    if compose is None:
        raise ValueError("no compose table in the data and no compose callable given")
    empty = FinitePoset((), ())
    return TwoCategory(objects, lambda x, y: homs.get((x, y), empty),
                       identities.__getitem__, compose, name=name)


def functor_to_json(F: TwoFunctor) -> dict:
    return {
        "objects": {object_key(x): to_jsonable(F(x)) for x in F.source.objects},
        "homs": {
            f"{object_key(x)}|{object_key(y)}": {
                element_key(f): to_jsonable(F.on_cell(x, y, f)) for f in F.source.hom(x, y)
            }
            for x in F.source.objects for y in F.source.successors(x)
        },
    }


def functor_from_json(data: Mapping, source: TwoCategory, target: TwoCategory) -> TwoFunctor:
    by_key = {object_key(x): x for x in source.objects}
    obj = {by_key[k]: from_jsonable(v) for k, v in data["objects"].items()}
    cells = {}
    for key, table in data["homs"].items():
        kx, ky = key.split("|")
        x, y = by_key[kx], by_key[ky]
        for fk, v in table.items():
            cells[(x, y, from_jsonable(json.loads(fk)))] = from_jsonable(v)
    return make_functor(source, target, obj, lambda x, y, f: cells[(x, y, f)])

"""Finite posets, monotone maps, and the laxness order on total orders.

Hom-categories of every 2-category in this package are finite posets, so the
whole 2-dimensional structure reduces to order checks on these objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping


class TotalOrder(tuple):
    """An ordering of a finite set of directions, listed smallest first.

    ``TotalOrder((3, 2, 1))`` is the order 3 ⪯ 2 ⪯ 1.  The empty order is the
    unique total order on the empty set and labels identity 1-cells.
    """

    def __new__(cls, sequence: Iterable[int] = ()):
        seq = tuple(sequence)
        for a in seq:
            if isinstance(a, bool) or not isinstance(a, int) or a < 1:
                raise ValueError(f"directions must be positive integers, got {a!r}")
        if len(set(seq)) != len(seq):
            raise ValueError(f"repeated direction in {seq}")
        return super().__new__(cls, seq)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self)

    def __repr__(self):
        return f"TotalOrder({tuple(self)!r})"

    def __str__(self):
        if not self:
            return "()"
        return "(" + "⪯".join(str(a) for a in self) + ")"


def inversions(t: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Pairs ``(a, b)`` with ``a < b`` as integers but ``b`` placed before ``a``."""
    seq = tuple(t)
    return frozenset(
        (seq[j], seq[i])
        for i, j in itertools.combinations(range(len(seq)), 2)
        if seq[i] > seq[j]
    )


def laxer_than(t1: Iterable[int], t2: Iterable[int]) -> bool:
    """Whether ``t1 ⊴ t2``: every pair ``t1`` orders correctly stays correct in ``t2``."""
    s1, s2 = tuple(t1), tuple(t2)
    if set(s1) != set(s2):
        raise ValueError(f"total orders on different sets: {s1} vs {s2}")
    pos1 = {a: i for i, a in enumerate(s1)}
    pos2 = {a: i for i, a in enumerate(s2)}
    for a, b in itertools.combinations(sorted(s1), 2):
        if pos1[a] < pos1[b] and not pos2[a] < pos2[b]:
            return False
    return True


def lax_covers(t: Iterable[int]) -> list[TotalOrder]:
    """The orders covering ``t`` under ⊴: swap one adjacent inverted pair."""
    seq = list(t)
    out = []
    for i in range(len(seq) - 1):
        if seq[i] > seq[i + 1]:
            nxt = seq.copy()
            nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
            out.append(TotalOrder(nxt))
    return out


class FinitePoset:
    """A finite poset on hashable element ids.

    The order is given either as an explicit set of ``(x, y)`` pairs meaning
    ``x <= y`` (reflexive pairs optional) or as a comparison callable ``le``.
    ``covers``, when supplied, must generate the order under reflexive-
    transitive closure; trusted builders pass it to avoid recomputing the
    Hasse diagram.
    """

    def __init__(
        self,
        elements: Iterable[Hashable],
        leq: Iterable[tuple[Hashable, Hashable]] | None = None,
        *,
        le: Callable[[Hashable, Hashable], bool] | None = None,
        covers: Callable[[Hashable], Iterable[Hashable]] | None = None,
    ):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("element ids must be distinct")
        if (leq is None) == (le is None):
            raise ValueError("give exactly one of leq or le")
        if leq is not None:
            pairs = set(leq)
            pairs.update((x, x) for x in self.elements)
            for x, y in pairs:
                if x not in self._index or y not in self._index:
                    raise ValueError(f"pair ({x!r}, {y!r}) mentions a non-element")
            self.__dict__["relation"] = frozenset(pairs)
            self._le = lambda x, y: (x, y) in self.relation
        else:
            self._le = le
        self._covers_fn = covers

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def le(self, x, y) -> bool:
        return self._le(x, y)

    @cached_property
    def relation(self) -> frozenset:
        """The full reflexive order relation as a set of pairs."""
        return frozenset(
            (x, y) for x in self.elements for y in self.elements if self._le(x, y)
        )

    @cached_property
    def upper_covers(self) -> dict:
        """Map each element to the elements covering it (the Hasse diagram)."""
        if self._covers_fn is not None:
            return {x: tuple(self._covers_fn(x)) for x in self.elements}
        strict = {x: [y for y in self.elements if y != x and self.le(x, y)]
                  for x in self.elements}
        out = {}
        for x, above in strict.items():
            out[x] = tuple(
                y for y in above
                if not any(z != y and self.le(z, y) for z in above)
            )
        return out

    def cover_pairs(self):
        for x, ys in self.upper_covers.items():
            for y in ys:
                yield x, y

    def check(self) -> list[str]:
        """Audit the partial-order axioms; returns a list of problems."""
        problems = []
        rel = self.relation
        for x in self.elements:
            if (x, x) not in rel:
                problems.append(f"not reflexive at {x!r}")
        for x, y in rel:
            if x != y and (y, x) in rel:
                problems.append(f"not antisymmetric: {x!r}, {y!r}")
        for x, y in rel:
            for z in self.elements:
                if (y, z) in rel and (x, z) not in rel:
                    problems.append(f"not transitive: {x!r} <= {y!r} <= {z!r}")
        return problems

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.relation == other.relation

    __hash__ = None

    def __repr__(self):
        return f"FinitePoset({len(self.elements)} elements)"

    def to_json(self, encode=lambda x: x) -> dict:
        return {
            "elements": [encode(x) for x in self.elements],
            "leq": sorted(([encode(x), encode(y)] for x, y in self.relation), key=repr),
        }

    @classmethod
    def from_json(cls, data: Mapping, decode=lambda x: x) -> "FinitePoset":
        return cls(
            [decode(x) for x in data["elements"]],
            [(decode(x), decode(y)) for x, y in data["leq"]],
        )


def interval(q: int) -> FinitePoset:
    """The chain ``0 < 1 < ... < q``."""
    if q < 0:
        raise ValueError(f"interval length must be nonnegative, got {q}")
    return FinitePoset(range(q + 1), le=lambda x, y: x <= y,
                       covers=lambda x: (x + 1,) if x < q else ())


def product(*posets: FinitePoset, audit: bool = False) -> FinitePoset:
    """Cartesian product with the componentwise order; elements are tuples.

    ``product()`` is the one-point poset on the empty tuple.
    """
    elements = list(itertools.product(*(p.elements for p in posets)))

    def le(x, y):
        return all(p.le(a, b) for p, a, b in zip(posets, x, y))

    def covers(x):
        for i, p in enumerate(posets):
            for y in p.upper_covers[x[i]]:
                yield x[:i] + (y,) + x[i + 1:]

    out = FinitePoset(elements, le=le, covers=covers)
    if audit and out.check():
        raise AssertionError(out.check())
    return out


@dataclass(frozen=True)
class MonotoneMap:
    source: FinitePoset
    target: FinitePoset
    assignment: Mapping = field(repr=False)

    def __call__(self, x):
        return self.assignment[x]


def is_monotone(f: MonotoneMap, *, all_pairs: bool = False) -> bool:
    """Whether ``f`` preserves order.

    Checking the covering pairs suffices because the target order is
    transitive; ``all_pairs=True`` checks every related pair instead.
    """
    return not monotonicity_failures(f, all_pairs=all_pairs)


def monotonicity_failures(f: MonotoneMap, *, all_pairs: bool = False) -> list:
    missing = [x for x in f.source.elements if x not in f.assignment]
    if missing:
        raise ValueError(f"assignment undefined on {missing!r}")
    pairs = f.source.relation if all_pairs else f.source.cover_pairs()
    return [
        (x, y) for x, y in pairs
        if not f.target.le(f.assignment[x], f.assignment[y])
    ]

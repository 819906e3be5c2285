"""The objects [n; q_1, ..., q_n] of Θ₂ as explicit 2-categories.

A 1-cell ``j -> k`` of the free 2-category is a tuple with one entry per
edge crossed, the entry for edge ``m`` lying in the chain ``[q_m]``;
composition concatenates tuples and 2-cells are the componentwise order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .poset import FinitePoset, interval, product
from .twocat import TwoCategory

_SHAPE = re.compile(r"^\s*\[\s*(\d+)\s*;\s*((?:-?\d+\s*(?:,\s*-?\d+\s*)*)?)\]\s*$")


@dataclass(frozen=True, order=True)
class ThetaShape:
    n: int
    q: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(self.q))
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if len(self.q) != self.n:
            raise ValueError(f"[{self.n};...] needs {self.n} entries, got {len(self.q)}")
        if any(x < 0 for x in self.q):
            raise ValueError(f"negative entry in {self.q}")

    @classmethod
    def parse(cls, text: str) -> "ThetaShape":
        """Parse ``"[n;q1,...,qn]"``; ``"[0;]"`` is the point."""
        m = _SHAPE.match(text)
        if not m:
            raise ValueError(f"malformed shape literal {text!r}")
        q = tuple(int(x) for x in m.group(2).split(",")) if m.group(2).strip() else ()
        return cls(int(m.group(1)), q)

    @property
    def dim(self) -> int:
        """Dimension of the cube it retracts from: ``n + sum(q)``."""
        return self.n + sum(self.q)

    def __str__(self):
        return f"[{self.n};{','.join(map(str, self.q))}]"


def rank_theta(s: ThetaShape, k: int) -> int:
    """``k + q_1 + ... + q_k``."""
    if not 0 <= k <= s.n:
        raise ValueError(f"object {k} out of range for {s}")
    return k + sum(s.q[:k])


def shapes_of_dim(d: int):
    """All shapes with ``n + sum(q) == d``, in sorted order."""
    out = []

    def go(rest, q):
        if rest == 0:
            out.append(ThetaShape(len(q), tuple(q)))
            return
        for step in range(1, rest + 1):
            go(rest - step, q + [step - 1])

    go(d, [])
    return sorted(out)


@lru_cache(maxsize=None)
def build_theta(s: ThetaShape) -> TwoCategory:
    chains = [interval(q) for q in s.q]
    empty = FinitePoset((), ())

    def hom(j, k):
        if j > k:
            return empty
        return product(*chains[j:k])

    return TwoCategory(
        range(s.n + 1),
        hom,
        lambda j: (),
        lambda j, k, l, f, g: tuple(f) + tuple(g),
        name=str(s),
    )

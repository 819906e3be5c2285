"""Each [n;q] as a retract of the Gray cube of dimension n + q_1 + ... + q_n.

The section sends object ``k`` to the vector with ``rank_theta(k)`` leading
ones and generator ``i`` of ``[q_k]`` to an ascending run followed by a
descending run.  The retraction thresholds objects by bit count and is built
from its atom images through :func:`extend_from_atoms`, so its
2-functoriality is checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import NamedTuple

from .cube import (Atom, NotAFunctorError, all_atoms, atomic_decompose, bits_str,
                   build_cube, extend_from_atoms, rank_square, CubeOneCell)
from .poset import TotalOrder
from .theta import ThetaShape, build_theta, rank_theta
from .twocat import (TwoFunctor, check_functor, compose_functors, equal_functors,
                     identity_functor, make_functor)


def section_object(s: ThetaShape, k: int) -> tuple[int, ...]:
    r = rank_theta(s, k)
    return (1,) * r + (0,) * (s.dim - r)


def generator_order(s: ThetaShape, k: int, i: int) -> TotalOrder:
    """Image of ``i in [q_k]``: ``lo+1 .. lo+i`` ascending, then ``hi .. lo+i+1`` descending."""
    if not 1 <= k <= s.n or not 0 <= i <= s.q[k - 1]:
        raise ValueError(f"no generator {i} on edge {k} of {s}")
    lo, hi = rank_theta(s, k - 1), rank_theta(s, k)
    return TotalOrder(list(range(lo + 1, lo + i + 1)) + list(range(hi, lo + i, -1)))


def section(s: ThetaShape) -> TwoFunctor:
    """The 2-functor ``[n;q] -> □^d``; composites go to joins of generator images."""
    theta, cube = build_theta(s), build_cube(s.dim)
    obj = {k: section_object(s, k) for k in theta.objects}

    def image(j, k, f):
        seq = []
        for m, i in enumerate(f, start=j + 1):
            seq.extend(generator_order(s, m, i))
        return TotalOrder(seq)

    return make_functor(theta, cube, obj, image)


def retraction_object(s: ThetaShape, e) -> int:
    r = rank_square(e)
    return max(k for k in range(s.n + 1) if rank_theta(s, k) <= r)


def retraction_atom(s: ThetaShape, at: Atom) -> tuple:
    """Image of an atom: ``()`` for an identity, ``(i,)`` for ``i in [q_k]``."""
    r = rank_square(at.dst)
    ks = [k for k in range(s.n + 1) if rank_theta(s, k) == r]
    if not ks:
        return ()
    k = ks[0]
    lo = rank_theta(s, k - 1)
    if at.dst == section_object(s, k) and at.direction > lo:
        return (at.direction - lo - 1,)
    return (0,)


def retraction(s: ThetaShape) -> TwoFunctor:
    """The 2-functor ``□^d -> [n;q]``.

    Raises :class:`NotAFunctorError` if the atom data fails to extend.
    """
    d = s.dim
    cube = build_cube(d)
    obj = {e: retraction_object(s, e) for e in cube.objects}
    atoms = {at: retraction_atom(s, at) for at in all_atoms(d)}
    return extend_from_atoms(d, build_theta(s), obj, atoms)


@dataclass
class RetractReport:
    shape: ThetaShape
    d: int
    section_ok: bool = False
    retraction_ok: bool = False
    composite_identity: bool = False
    idempotent_ok: bool = False
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.section_ok and self.retraction_ok and self.composite_identity
                and self.idempotent_ok and not self.witnesses)

    def to_json(self) -> dict:
        out = asdict(self)
        out["shape"] = str(self.shape)
        out["witnesses"] = [str(w) for w in self.witnesses]
        out["ok"] = self.ok
        return out

    @classmethod
    def from_json(cls, data) -> "RetractReport":
        """Inverse of :meth:`to_json`; witnesses come back as their printed form."""
        return cls(ThetaShape.parse(data["shape"]), data["d"], data["section_ok"],
                   data["retraction_ok"], data["composite_identity"], data["idempotent_ok"],
                   list(data["witnesses"]))


def verify_retract(s: ThetaShape) -> RetractReport:
    """Build S and R, check both, and check ``RS = 1`` and ``(SR)^2 = SR``."""
    report = RetractReport(s, s.dim)
    S = section(s)
    bad = check_functor(S)
    report.witnesses.extend(bad)
    report.section_ok = not bad
    try:
        R = retraction(s)
    except NotAFunctorError as exc:
        report.witnesses.append(exc)
        return report
    bad = check_functor(R)
    report.witnesses.extend(bad)
    report.retraction_ok = not bad
    if not (report.section_ok and report.retraction_ok):
        return report
    RS = compose_functors(S, R)
    report.composite_identity = equal_functors(RS, identity_functor(S.source))
    if not report.composite_identity:
        report.witnesses.append("RS differs from the identity")
    e = compose_functors(R, S)
    report.idempotent_ok = equal_functors(compose_functors(e, e), e)
    if not report.idempotent_ok:
        report.witnesses.append("SR is not idempotent")
    return report


class Splitting(NamedTuple):
    idempotent: TwoFunctor
    retraction: TwoFunctor
    section: TwoFunctor
    fixed_objects: list


def idempotent_split(s: ThetaShape) -> Splitting:
    """The idempotent ``e = SR`` on □^d together with its splitting ``(R, S)``."""
    S, R = section(s), retraction(s)
    e = compose_functors(R, S)
    fixed = [x for x in e.source.objects if e(x) == x]
    return Splitting(e, R, S, fixed)


def last_factor_only(s: ThetaShape) -> list:
    """Generators where R does *not* send all but the last atom of S(i) to an identity."""
    S, R = section(s), retraction(s)
    out = []
    for k in range(1, s.n + 1):
        for i in range(s.q[k - 1] + 1):
            cell = CubeOneCell(s.dim, S(k - 1), S(k), S.on_cell(k - 1, k, (i,)))
            atoms = atomic_decompose(cell)
            images = [R.on_cell(at.src, at.dst, TotalOrder((at.direction,))) for at in atoms]
            if any(img != () for img in images[:-1]) or (atoms and images[-1] != (i,)):
                out.append((k, i, images))
    return out


def describe(s: ThetaShape, R: TwoFunctor | None = None) -> str:
    """Text tables of the object, generator and atom images of S and R."""
    S = section(s)
    R = R if R is not None else retraction(s)
    lines = [f"shape {s}  d = {s.dim}", "", "section S:"]
    for k in range(s.n + 1):
        lines.append(f"  object {k} -> {bits_str(S(k))}")
    for k in range(1, s.n + 1):
        for i in range(s.q[k - 1] + 1):
            lines.append(f"  generator {i} in Hom({k - 1},{k}) -> {generator_order(s, k, i)}")
    lines += ["", "retraction R:"]
    for e in R.source.objects:
        lines.append(f"  object {bits_str(e)} -> {R(e)}")
    for at in sorted(all_atoms(s.dim), key=lambda a: (sum(a.dst), a.dst, a.direction)):
        img = R.on_cell(at.src, at.dst, TotalOrder((at.direction,)))
        shown = "identity" if img == () else str(img[0])
        lines.append(f"  atom {{{at.direction}}}: {bits_str(at.src)} -> {bits_str(at.dst)} -> {shown}")
    return "\n".join(lines) + "\n"

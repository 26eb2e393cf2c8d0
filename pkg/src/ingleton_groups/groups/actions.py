"""Group actions on points, projective points, subspaces and point sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .. import config
from ..errors import CapExceededError, GroupError
from ..ffield import Field
from .arith import MatrixArith, PermArith, apply_to_vector
from .core import Group, Subgroup


def _normalize_vector(field: Field, v) -> tuple:
    for x in v:
        if x:
            if x == 1:
                return tuple(v)
            m = field.mul_table[field.inv(x)]
            return tuple(m[y] for y in v)
    raise GroupError("zero vector has no projective point")


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """A one-dimensional subspace, stored by its scaled spanning vector."""

    coords: tuple[int, ...]

    @staticmethod
    def of(field: Field, v) -> "ProjectivePoint":
        return ProjectivePoint(_normalize_vector(field, v))

    def fmt(self, field: Field) -> str:
        return "<" + ",".join(field.fmt(x) for x in self.coords) + ">"


def rref(field: Field, rows) -> tuple[tuple[int, ...], ...]:
    rows = [list(r) for r in rows]
    out, col = [], 0
    n = len(rows[0]) if rows else 0
    for col in range(n):
        piv = next((r for r in rows if r[col]), None)
        if piv is None:
            continue
        rows.remove(piv)
        inv = field.inv(piv[col])
        piv = [field.mul(inv, x) for x in piv]
        rows = [[field.sub(x, field.mul(r[col], y)) for x, y in zip(r, piv)] for r in rows]
        out = [[field.sub(x, field.mul(r[col], y)) for x, y in zip(r, piv)] for r in out]
        out.append(piv)
    out = [r for r in out if any(r)]
    out.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True, order=True)
class Subspace:
    """A subspace of F_q^n held by its reduced row echelon basis."""

    basis: tuple[tuple[int, ...], ...]

    @staticmethod
    def span(field: Field, vectors) -> "Subspace":
        return Subspace(rref(field, vectors))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def points(self, field: Field) -> frozenset:
        out = set()
        for cs in product(range(field.q), repeat=self.dim):
            if any(cs):
                v = [0] * len(self.basis[0])
                for c, b in zip(cs, self.basis):
                    v = [field.add(x, field.mul(c, y)) for x, y in zip(v, b)]
                out.add(ProjectivePoint.of(field, v))
        return frozenset(out)


def act(G: Group, g, x):
    """Image of x under g. Points of permutation groups are 0-based ints."""
    a = G.arith
    if isinstance(x, frozenset):
        return frozenset(act(G, g, y) for y in x)
    if isinstance(a, PermArith):
        return g[x]
    if isinstance(a, MatrixArith):
        f = a.field
        if isinstance(x, ProjectivePoint):
            return ProjectivePoint(_normalize_vector(f, apply_to_vector(a, g, x.coords)))
        if isinstance(x, Subspace):
            return Subspace(rref(f, [apply_to_vector(a, g, b) for b in x.basis]))
        return apply_to_vector(a, g, x)
    return a.act(g, x)


def projective_points(field: Field, n: int) -> list[ProjectivePoint]:
    return sorted(
        ProjectivePoint(v) for v in product(range(field.q), repeat=n) if any(v) and next(x for x in v if x) == 1
    )


def domain(G: Group) -> list:
    """The natural domain a group acts on."""
    a = G.arith
    if isinstance(a, PermArith):
        return list(range(a.degree))
    if isinstance(a, MatrixArith):
        return projective_points(a.field, a.n)
    raise GroupError("no natural domain for this group")


def orbit(G: Group, x) -> list:
    gens = G.generating_set()
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g in gens:
                z = act(G, g, y)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return sorted(seen, key=_sort_key)


def _sort_key(x):
    if isinstance(x, ProjectivePoint):
        return x.coords
    if isinstance(x, Subspace):
        return x.basis
    if isinstance(x, frozenset):
        return tuple(sorted(_sort_key(y) for y in x))
    return x


def _filter(G: Group, pred, cap: int | None) -> Subgroup:
    cap = config.FILTER_CAP if cap is None else cap
    if G.order > cap:
        raise CapExceededError(f"stabilizer filtering over order {G.order} exceeds cap {cap}")
    return Subgroup(G, [g for g in G.elements if pred(g)])


def point_stabilizer(G: Group, x, cap: int | None = None) -> Subgroup:
    return _filter(G, lambda g: act(G, g, x) == x, cap)


def setwise_stabilizer(G: Group, xs, cap: int | None = None) -> Subgroup:
    xs = frozenset(xs)
    if isinstance(G.arith, MatrixArith) and all(isinstance(x, ProjectivePoint) for x in xs):
        a, f = G.arith, G.arith.field
        vecs = [x.coords for x in xs]
        cs = {x.coords for x in xs}
        return _filter(G, lambda g: all(_normalize_vector(f, apply_to_vector(a, g, v)) in cs for v in vecs), cap)
    return _filter(G, lambda g: all(act(G, g, x) in xs for x in xs), cap)


def pointwise_stabilizer(G: Group, xs, cap: int | None = None) -> Subgroup:
    xs = list(xs)
    return _filter(G, lambda g: all(act(G, g, x) == x for x in xs), cap)


def subspace_stabilizer(G: Group, U: Subspace, cap: int | None = None) -> Subgroup:
    """N_G(U): elements mapping U onto itself."""
    a = G.arith
    f = a.field
    pts = {p.coords for p in U.points(f)}
    return _filter(G, lambda g: all(_normalize_vector(f, apply_to_vector(a, g, b)) in pts for b in U.basis), cap)

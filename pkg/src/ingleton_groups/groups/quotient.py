"""Quotients by normal subgroups and preimages of subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import GroupError
from .arith import MatrixArith, ProjArith, QuotientArith
from .core import Group, Subgroup, closure, is_normal, projective_linear_group


@dataclass
class NaturalMap:
    """The projection G -> G/N. By default cosets are named by their
    smallest element; ``project`` overrides the naming."""

    source: Group
    kernel: Subgroup
    target: Group
    project: Callable | None = None

    def image(self, g):
        if self.project is not None:
            return self.project(g)
        return self.target.arith.rep(g)

    def image_subgroup(self, H: Subgroup) -> Subgroup:
        return Subgroup(self.target, {self.image(h) for h in H.element_set})


def quotient(G: Group, N: Subgroup) -> NaturalMap:
    if not is_normal(N, G):
        raise GroupError("quotient by a subgroup that is not normal")
    arith = QuotientArith(G.arith, N.element_set)
    reps = {arith.rep(g) for g in G.elements}
    Q = Group(arith, elements=reps, label=f"{G.label}/N")
    return NaturalMap(G, N, Q)


def projective_map(G: Group) -> NaturalMap:
    """GL(n,q) -> PGL(n,q), killing the scalar matrices."""
    a = G.arith
    if not isinstance(a, MatrixArith) or isinstance(a, ProjArith) or not getattr(G, "_full", False):
        raise GroupError("projective_map needs a full general linear group")
    f, n = a.field, a.n
    t = f.primitive
    V = closure(G, [tuple(t if i == j else 0 for i in range(n) for j in range(n))], label="V")
    P = projective_linear_group(n, f)
    return NaturalMap(G, V, P, project=P.arith.normalize)


def preimage_subgroup(hom: NaturalMap, S: Subgroup) -> Subgroup:
    """The full preimage of S. Elements of S must be coset representatives."""
    mul, rep = hom.source.mul, hom.image
    out = set()
    for s in S.element_set:
        if s not in hom.source or rep(s) != s:
            raise GroupError("element is not a coset representative of the quotient")
        for n in hom.kernel.element_set:
            out.add(mul(s, n))
    return Subgroup(hom.source, out)

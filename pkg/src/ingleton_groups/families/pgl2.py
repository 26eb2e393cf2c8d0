"""The PGL(2,q) family and its flower structure."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import FamilyError, FieldError, GroupError
from ..ffield import Field, field_of_order, is_prime
from ..groups import Group, Subgroup, closure, conjugate, is_normal, projective_linear_group


@dataclass
class Pgl2FamilyData:
    q: int
    field: Field
    group: Group
    t: int
    s: int
    k1: int | None
    k3: int
    k4: int
    A: dict = field(repr=False)
    B: tuple = ()
    C: tuple = ()
    B1: tuple = ()
    B3: tuple = ()
    B4: tuple = ()
    N: Subgroup | None = None
    H: Subgroup | None = None
    tuple: tuple = ()


_CACHE: dict[int, Pgl2FamilyData] = {}


def pgl2_family(q: int) -> Pgl2FamilyData:
    if q in _CACHE:
        return _CACHE[q]
    if q < 3:
        raise FamilyError("invalid", "the PGL(2,q) tuple needs q >= 3")
    f = field_of_order(q)
    G = projective_linear_group(2, f)
    norm = G.arith.normalize
    t = f.primitive
    m1 = f.neg(1)
    A = {a: norm((1, 0, a, 1)) for a in range(q)}
    B = norm((1, 0, 0, t))
    C = norm((0, 1, m1, m1))
    # the literal form of b1 is used in every characteristic
    B1 = norm((1, 0, m1, m1))
    B3 = norm((1, 0, f.sub(t, 1), t))
    B4 = B
    N = closure(G, [A[x] for x in f.basis()], label="N")
    H = closure(G, [B], label="H")
    G1 = closure(G, [C, B1], label="G1")
    G2 = closure(G, [A[x] for x in f.basis()] + [B], label="G2")
    G3 = closure(G, [G.mul(C, B1), B3], label="G3")
    G4 = closure(G, [G.mul(B1, C), B4], label="G4")
    data = Pgl2FamilyData(
        q=q,
        field=f,
        group=G,
        t=t,
        s=f.inv(t),
        k1=(f.p + 1) // 2 if f.p != 2 else None,
        k3=1,
        k4=0,
        A=A,
        B=B,
        C=C,
        B1=B1,
        B3=B3,
        B4=B4,
        N=N,
        H=H,
        tuple=(G1, G2, G3, G4),
    )
    _CACHE[q] = data
    return data


def pgl2_tuple(q: int) -> tuple:
    return pgl2_family(q).tuple


def presentation_report(p: int) -> dict:
    """Check a^p = b^(p-1) = c^3 = 1, a^b = a^s, (c b1)^2 = b3^c b4 = 1 in
    PGL(2,p), with b1, b3, b4 built from conjugates of b by powers of a."""
    if not is_prime(p) or p == 2:
        raise FieldError(f"{p} is not an odd prime")
    d = pgl2_family(p)
    G = d.group
    e = G.identity
    a, b, c = d.A[1], d.B, d.C
    s = d.s  # an integer in 1..p-1 since F_p is prime
    b1 = G.conj(G.power(b, (p - 1) // 2), G.power(a, d.k1))
    b3 = G.conj(b, G.power(a, d.k3))
    b4 = G.conj(b, G.power(a, d.k4))
    rel = {
        "a^p": G.power(a, p) == e,
        "b^(p-1)": G.power(b, p - 1) == e,
        "c^3": G.power(c, 3) == e,
        "a^b=a^s": G.conj(a, b) == G.power(a, s),
        "(cb1)^2": G.power(G.mul(c, b1), 2) == e,
        "b3^c b4": G.mul(G.conj(b3, c), b4) == e,
    }
    gen = closure(G, [a, b, c])
    return {
        "relations": rel,
        "b1_literal": b1 == d.B1,
        "b3_literal": b3 == d.B3,
        "generated_order": gen.order,
        "group_order": G.order,
        "ok": all(rel.values()) and gen.order == G.order and b1 == d.B1 and b3 == d.B3,
    }


def verify_presentation_relations(p: int) -> bool:
    return presentation_report(p)["ok"]


@dataclass
class FlowerReport:
    ok: bool
    petals: int
    petal_size: int
    tubers: int
    covers: bool
    disjoint: bool


def flower_check(G2: Subgroup, N: Subgroup, H: Subgroup) -> FlowerReport:
    """Does (G2 \\ N) + {1} split into the |N| conjugates H^g (g in N),
    pairwise meeting only in the identity?"""
    if not is_normal(N, G2):
        raise GroupError("N is not normal in G2")
    if len(N.element_set & H.element_set) != 1 or N.order * H.order != G2.order:
        raise GroupError("H is not a complement of N in G2")
    G = G2.root
    petals = {conjugate(H, g) for g in N.elements}
    petals_l = list(petals)
    e = G.identity
    disjoint = len(petals_l) == N.order and all(
        petals_l[i].element_set & petals_l[j].element_set == {e}
        for i in range(len(petals_l))
        for j in range(i + 1, len(petals_l))
    )
    union = frozenset().union(*[P.element_set for P in petals_l])
    target = (G2.element_set - N.element_set) | {e}
    covers = union == target
    tubers = {closure(G, [x]).element_set for x in N.elements if x != e}
    return FlowerReport(
        ok=disjoint and covers,
        petals=len(petals_l),
        petal_size=H.order,
        tubers=len(tubers),
        covers=covers,
        disjoint=disjoint,
    )


def pgl2_flower(q: int) -> FlowerReport:
    d = pgl2_family(q)
    return flower_check(d.tuple[1], d.N, d.H)


def generates_whole_group(q: int) -> bool:
    d = pgl2_family(q)
    G = d.group
    gens = [x for H in d.tuple for x in H.generating_set()]
    return closure(G, gens).order == G.order


def g4_is_conjugate_of_g3(q: int) -> bool:
    d = pgl2_family(q)
    return conjugate(d.tuple[2], d.C) == d.tuple[3]


__all__ = [
    "FlowerReport",
    "Pgl2FamilyData",
    "flower_check",
    "g4_is_conjugate_of_g3",
    "generates_whole_group",
    "pgl2_family",
    "pgl2_flower",
    "pgl2_tuple",
    "presentation_report",
    "verify_presentation_relations",
]

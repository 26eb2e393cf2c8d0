"""Finite groups materialized as explicit element sets."""

from __future__ import annotations

from functools import cached_property
from math import prod

import numpy as np

from .. import config
from ..errors import CapExceededError, GroupError
from .arith import MatrixArith, PermArith, ProductArith, ProjArith


class Group:
    """A finite group given by element arithmetic plus either explicit
    elements, generators, or (when both are absent) the whole ambient group
    of the arithmetic."""

    def __init__(self, arith, elements=None, generators=None, label: str = "", order: int | None = None):
        self.arith = arith
        self.label = label
        self.generators = tuple(generators) if generators is not None else None
        self._explicit = frozenset(elements) if elements is not None else None
        self._order = order if elements is None else len(self._explicit)
        self._full = elements is None and generators is None

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label or '?'} order={self.order}>"

    # arithmetic
    def mul(self, a, b):
        return self.arith.mul(a, b)

    def inv(self, a):
        return self.arith.inv(a)

    @cached_property
    def identity(self):
        return self.arith.identity()

    def fmt(self, a) -> str:
        return self.arith.fmt(a)

    def parse(self, s: str):
        return self.arith.parse(s)

    def conj(self, x, g):
        """x^g = g^-1 x g."""
        return self.arith.mul(self.arith.inv(g), self.arith.mul(x, g))

    def power(self, x, k: int):
        if k < 0:
            x, k = self.inv(x), -k
        r = self.identity
        while k:
            if k & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            k >>= 1
        return r

    # element set
    @cached_property
    def element_set(self) -> frozenset:
        if self._explicit is not None:
            return self._explicit
        if self._full:
            return frozenset(self.arith.full())
        return _bfs(self.arith, self.generators, config.CLOSURE_CAP)

    @cached_property
    def elements(self) -> tuple:
        return tuple(sorted(self.element_set))

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}

    @property
    def order(self) -> int:
        if self._order is None:
            if self._full and hasattr(self.arith, "full_order"):
                self._order = self.arith.full_order()
            else:
                self._order = len(self.element_set)
        return self._order

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        if self._full and self._explicit is None:
            return self.arith.contains(x)
        return x in self.element_set

    @property
    def root(self) -> "Group":
        return self

    def generating_set(self) -> tuple:
        """Generators if known, else a greedy generating set in element order."""
        if self.generators is not None:
            return self.generators
        gens: list = []
        current = frozenset([self.identity])
        for x in self.elements:
            if x not in current:
                gens.append(x)
                current = _bfs(self.arith, gens, None)
                if len(current) == self.order:
                    break
        self.generators = tuple(gens)
        return self.generators

    def is_abelian(self) -> bool:
        gens = self.generating_set()
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def table(self, cap: int | None = None) -> np.ndarray:
        """Multiplication table on element indices."""
        cap = config.TABLE_CAP if cap is None else cap
        if self.order > cap:
            raise CapExceededError(f"multiplication table for order {self.order} exceeds cap {cap}")
        if "_table" not in self.__dict__:
            els, idx, mul = self.elements, self.index, self.arith.mul
            self._table = np.array([[idx[mul(a, b)] for b in els] for a in els], dtype=np.int32)
        return self._table

    def whole(self) -> "Subgroup":
        return Subgroup(self, self.element_set, generators=self.generators, label=self.label)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, [self.identity], label="1")


class Subgroup(Group):
    """A subgroup stored as an explicit element set inside a parent group."""

    def __init__(self, parent: Group, elements, generators=None, label: str = ""):
        super().__init__(parent.arith, elements=elements, generators=generators, label=label)
        self.parent = parent

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash(self.element_set)

    def __contains__(self, x) -> bool:
        return x in self.element_set

    def __le__(self, other: "Subgroup") -> bool:
        return self.element_set <= other.element_set

    @property
    def root(self) -> Group:
        g = self.parent
        while isinstance(g, Subgroup):
            g = g.parent
        return g

    def sort_key(self):
        return (self.order, self.elements)

    def generating_set(self) -> tuple:
        if self.generators is not None:
            return self.generators
        return Group.generating_set(self)


def _bfs(arith, generators, cap) -> frozenset:
    mul = arith.mul
    e = arith.identity()
    elems = {e}
    frontier = [e]
    gens = [g for g in generators if g != e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        if cap is not None and len(elems) > cap:
            raise CapExceededError(f"closure exceeds cap {cap}")
        frontier = nxt
    return frozenset(elems)


def closure(G: Group, generators, cap: int | None = None, label: str = "") -> Subgroup:
    """The subgroup of G generated by ``generators``."""
    gens = [G.arith.normalize(g) if hasattr(G.arith, "normalize") else g for g in generators]
    for g in gens:
        if g not in G:
            raise GroupError(f"generator {G.fmt(g)} is not in {G.label or 'the group'}")
    elems = _bfs(G.arith, gens, config.CLOSURE_CAP if cap is None else cap)
    return Subgroup(G, elems, generators=tuple(gens), label=label)


def _same_root(H: Group, K: Group) -> None:
    if H.root is not K.root and H.root.arith != K.root.arith:
        raise GroupError("subgroups live in different parent groups")


def intersect(H: Subgroup, K: Subgroup) -> Subgroup:
    _same_root(H, K)
    return Subgroup(H.root, H.element_set & K.element_set)


def intersect_all(subgroups) -> Subgroup:
    subgroups = list(subgroups)
    if not subgroups:
        raise GroupError("empty intersection")
    s = subgroups[0].element_set
    for H in subgroups[1:]:
        _same_root(subgroups[0], H)
        s = s & H.element_set
    return Subgroup(subgroups[0].root, s)


def conjugate(H: Subgroup, g) -> Subgroup:
    """H^g = {g^-1 h g}."""
    G = H.root
    gi = G.inv(g)
    mul = G.mul
    return Subgroup(G, {mul(gi, mul(h, g)) for h in H.element_set})


def set_product(H: Group, K: Group) -> frozenset:
    mul = H.arith.mul
    return frozenset(mul(h, k) for h in H.element_set for k in K.element_set)


def set_product_commutes(H: Subgroup, K: Subgroup) -> bool:
    """Whether HK = KH, equivalently whether HK is a subgroup."""
    _same_root(H, K)
    hk = set_product(H, K)
    # |HK| |H cap K| = |H| |K| always holds; equality of the two products is the test
    assert len(hk) * len(H.element_set & K.element_set) == H.order * K.order
    return hk == set_product(K, H)


def is_normal(H: Subgroup, G: Group | None = None) -> bool:
    G = H.parent if G is None else G
    hs = H.element_set
    hgens = H.generating_set()
    for g in G.generating_set():
        gi = G.inv(g)
        for h in hgens:
            if G.mul(gi, G.mul(h, g)) not in hs:
                return False
    return True


def center(G: Group) -> Subgroup:
    gens = G.generating_set()
    mul = G.mul
    return Subgroup(G, [z for z in G.elements if all(mul(z, g) == mul(g, z) for g in gens)], label="Z")


def element_order(G: Group, g) -> int:
    e, x, k = G.identity, g, 1
    while x != e:
        x = G.mul(x, g)
        k += 1
    return k


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    hs = H.element_set
    hgens = H.generating_set()
    mul, inv = G.mul, G.inv
    out = []
    for g in G.elements:
        gi = inv(g)
        if all(mul(gi, mul(h, g)) in hs for h in hgens):
            out.append(g)
    return Subgroup(G, out)


# -- constructors ---------------------------------------------------------


def symmetric_group(n: int) -> Group:
    a = PermArith(n)
    gens = None
    if n > 1:
        gens = (a.parse("(" + ",".join(str(i) for i in range(1, n + 1)) + ")"), a.parse("(1,2)"))
    G = Group(a, label=f"sym:{n}")
    G.generators = gens
    return G


def alternating_group(n: int) -> Group:
    a = PermArith(n)
    els = [p for p in a.full() if a.sign(p) == 1]
    return Group(a, elements=els, label=f"alt:{n}")


def permutation_group(degree: int, generators, label: str = "") -> Group:
    a = PermArith(degree)
    gens = [a.parse(g) if isinstance(g, str) else tuple(g) for g in generators]
    for g in gens:
        if not a.contains(g):
            raise GroupError("generator is not a permutation of the stated degree")
    return Group(a, generators=gens, label=label or f"perm:{degree}")


def cyclic_group(n: int) -> Group:
    a = PermArith(n)
    g = tuple((i + 1) % n for i in range(n))
    return Group(a, generators=[g], label=f"cyc:{n}")


def dihedral_group(order: int) -> Group:
    """Dihedral group with ``order`` elements acting on order/2 points."""
    if order % 2 or order < 4:
        raise GroupError("dihedral order must be even and at least 4")
    n = order // 2
    a = PermArith(n)
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((-i) % n for i in range(n))
    return Group(a, generators=[r, s], label=f"dih:{order}")


def _gl_generators(arith: MatrixArith):
    f, n = arith.field, arith.n
    gens = []
    d = list(arith.identity())
    d[0] = f.primitive
    gens.append(arith.normalize(tuple(d)))
    for i in range(n):
        for j in range(n):
            if i != j:
                for xi in f.basis():
                    m = list(arith.identity())
                    m[i * n + j] = xi
                    gens.append(arith.normalize(tuple(m)))
    return tuple(sorted(set(gens)))


def general_linear_group(n: int, field) -> Group:
    a = MatrixArith(field, n)
    G = Group(a, label=f"gl:{n}:{field.q}")
    G.generators = _gl_generators(a)
    return G


def projective_linear_group(n: int, field) -> Group:
    a = ProjArith(field, n)
    G = Group(a, label=f"pgl:{n}:{field.q}")
    G.generators = _gl_generators(a)
    return G


class ProductGroup(Group):
    """Direct product of finite groups; elements are listed only on demand."""

    def __init__(self, factors):
        factors = tuple(factors)
        gens = []
        for i, g in enumerate(factors):
            for x in g.generating_set():
                el = [h.identity for h in factors]
                el[i] = x
                gens.append(tuple(el))
        super().__init__(
            ProductArith([g.arith for g in factors]),
            generators=gens,
            label="*".join(g.label for g in factors),
            order=prod(g.order for g in factors),
        )
        self.factors = factors

    @cached_property
    def element_set(self) -> frozenset:
        from itertools import product as cart

        return frozenset(cart(*[g.elements for g in self.factors]))

    def __contains__(self, x) -> bool:
        return isinstance(x, tuple) and len(x) == len(self.factors) and all(
            y in g for g, y in zip(self.factors, x)
        )


def direct_product(*groups: Group) -> ProductGroup:
    return ProductGroup(groups)


def product_subgroup(P: ProductGroup, parts) -> Subgroup:
    """H_1 x ... x H_k inside a direct product P."""
    from itertools import product as cart

    parts = list(parts)
    if len(parts) != len(P.factors):
        raise GroupError("wrong number of factors")
    return Subgroup(P, cart(*[H.elements for H in parts]))

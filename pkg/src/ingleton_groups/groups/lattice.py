"""Enumeration of all subgroups of a small group.

Start from the cyclic subgroups and keep joining a representative of each
conjugacy class of known subgroups with every cyclic subgroup until nothing
new appears. Each new subgroup brings its whole conjugacy class with it, so
the result is the complete subgroup list. Subgroups are bitmasks over element
indices internally.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import config
from ..errors import CapExceededError
from .core import Group, Subgroup


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass
class SubgroupLattice:
    group: Group
    masks: list[int]
    members: list[tuple[int, ...]]
    gens: list[list[int]]
    class_of: list[int]
    conj_perms: list[list[int]]
    position: dict[int, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.masks)

    def orders(self) -> list[int]:
        return [len(m) for m in self.members]

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.class_of):
            out.setdefault(c, []).append(i)
        return [out[c] for c in sorted(out)]

    def class_representatives(self) -> list[int]:
        return [c[0] for c in self.classes()]

    def conj_index(self, i: int, perm: list[int]) -> int:
        m = 0
        for x in self.members[i]:
            m |= 1 << perm[x]
        return self.position[m]

    def subgroup(self, i: int) -> Subgroup:
        els = self.group.elements
        return Subgroup(self.group, [els[x] for x in self.members[i]], generators=[els[g] for g in self.gens[i]])

    @property
    def subgroups(self) -> list[Subgroup]:
        if "_subs" not in self.__dict__:
            self._subs = [self.subgroup(i) for i in range(self.size)]
        return self._subs

    def index_of(self, H: Subgroup) -> int:
        idx = self.group.index
        m = 0
        for x in H.element_set:
            m |= 1 << idx[x]
        return self.position[m]


def subgroup_lattice(G: Group, cap: int | None = None) -> SubgroupLattice:
    cap = config.ENUMERATION_CAP if cap is None else cap
    if G.order > cap:
        raise CapExceededError(f"subgroup enumeration for order {G.order} exceeds cap {cap}")
    cached = G.__dict__.get("_lattice")
    if cached is not None:
        return cached
    n = G.order
    T = G.table(cap=max(cap, config.TABLE_CAP)).tolist()
    e = G.index[G.identity]
    inv = [0] * n
    for x in range(n):
        inv[x] = T[x].index(e)
    gens_idx = [G.index[g] for g in G.generating_set()]
    conj_perms = [[T[T[inv[g]][x]][g] for x in range(n)] for g in gens_idx]

    cyclic: dict[int, int] = {}
    for x in range(n):
        m, y = 1 << e, x
        while y != e:
            m |= 1 << y
            y = T[y][x]
        cyclic.setdefault(m, x)
    cyc_list = sorted(cyclic.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))

    known: dict[int, list[int]] = {}
    members: dict[int, list[int]] = {}
    class_id: dict[int, int] = {}
    reps: list[int] = []

    def add_class(mask: int, elems: list[int], gens: list[int]) -> None:
        cid = len(reps)
        reps.append(mask)
        known[mask], members[mask], class_id[mask] = gens, elems, cid
        stack = [mask]
        while stack:
            m = stack.pop()
            for perm in conj_perms:
                img = [perm[x] for x in members[m]]
                m2 = 0
                for x in img:
                    m2 |= 1 << x
                if m2 not in known:
                    known[m2] = [perm[g] for g in known[m]]
                    members[m2] = img
                    class_id[m2] = cid
                    stack.append(m2)

    for m, x in cyc_list:
        if m not in known:
            add_class(m, bits(m), [x] if x != e else [])

    queue = list(reps)
    while queue:
        r = queue.pop(0)
        r_elems, r_gens = members[r], known[r]
        for cm, c in cyc_list:
            if cm & ~r == 0:
                continue
            gens = r_gens + [c]
            mask, elems = r, list(r_elems)
            frontier = list(r_elems)
            while frontier:
                nxt = []
                for x in frontier:
                    row = T[x]
                    for g in gens:
                        y = row[g]
                        if not (mask >> y) & 1:
                            mask |= 1 << y
                            elems.append(y)
                            nxt.append(y)
                frontier = nxt
            if mask not in known:
                add_class(mask, elems, gens)
                queue.append(mask)

    order_key = sorted(known, key=lambda m: (m.bit_count(), tuple(sorted(members[m]))))
    lat = SubgroupLattice(
        group=G,
        masks=order_key,
        members=[tuple(sorted(members[m])) for m in order_key],
        gens=[known[m] for m in order_key],
        class_of=[],
        conj_perms=conj_perms,
    )
    lat.position = {m: i for i, m in enumerate(order_key)}
    # renumber classes by first appearance in sorted order
    remap: dict[int, int] = {}
    for m in order_key:
        remap.setdefault(class_id[m], len(remap))
    lat.class_of = [remap[class_id[m]] for m in order_key]
    G._lattice = lat
    return lat


def enumerate_subgroups(G: Group, cap: int | None = None) -> list[Subgroup]:
    """All subgroups of G sorted by (order, sorted element list)."""
    return subgroup_lattice(G, cap).subgroups

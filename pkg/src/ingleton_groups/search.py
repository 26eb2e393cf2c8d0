"""Exhaustive search for Ingleton-violating subgroup 4-tuples.

Tuples are generated as ordered 4-tuples of subgroups from the full subgroup
list. Sufficient conditions for the inequality to hold are used to skip
tuples before any order arithmetic:

    1  G is abelian
    2  every G_i is normal in G          (off by default)
    3  G1 G2 = G2 G1
    4  some G_i is 1 or G
    5  G_i = G_j for some i != j
    6  G1 and G2 intersect trivially
    7  G_i <= G_j for some i != j

Conditions 4, 5 and 7 are screened on every pair of positions, conditions 6
and 3 on the pair (1, 2). Survivors are recorded up to the symmetry that swaps
G1 with G2 and G3 with G4, keeping the lexicographically smallest index tuple.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_context

import numpy as np

from .groups import Group, is_normal, set_product_commutes
from .groups.lattice import SubgroupLattice, subgroup_lattice
from .ingleton import IngletonReport, OrderProfile, ingleton_check, order_profile

ALL_CONDITIONS = (1, 2, 3, 4, 5, 6, 7)


@dataclass(frozen=True)
class PruneConfig:
    enabled: frozenset = frozenset({1, 3, 4, 5, 6, 7})
    order: tuple = (1, 4, 5, 7, 6, 2, 3)

    @classmethod
    def none(cls) -> "PruneConfig":
        return cls(enabled=frozenset())

    @classmethod
    def all(cls) -> "PruneConfig":
        return cls(enabled=frozenset(ALL_CONDITIONS))

    def without(self, *conds: int) -> "PruneConfig":
        return PruneConfig(self.enabled - set(conds), self.order)

    def on(self, c: int) -> bool:
        return c in self.enabled


def symmetric_variants(t: tuple) -> list[tuple]:
    a, b, c, d = t
    return [(a, b, c, d), (b, a, c, d), (a, b, d, c), (b, a, d, c)]


def canonical(t: tuple) -> tuple:
    return min(symmetric_variants(t))


def condition_screen(G: Group, subgroups, config: PruneConfig | None = None) -> int | None:
    """First condition (in evaluation order) certifying that the tuple
    satisfies Ingleton, or None."""
    config = config or PruneConfig.all()
    hs = list(subgroups)
    pairs = [(i, j) for i in range(4) for j in range(4) if i != j]
    for c in config.order:
        if not config.on(c):
            continue
        if c == 1 and G.is_abelian():
            return 1
        if c == 4 and any(H.order in (1, G.order) for H in hs):
            return 4
        if c == 5 and any(hs[i] == hs[j] for i, j in pairs):
            return 5
        if c == 7 and any(hs[i].element_set <= hs[j].element_set for i, j in pairs):
            return 7
        if c == 6 and len(hs[0].element_set & hs[1].element_set) == 1:
            return 6
        if c == 2 and all(is_normal(H, G) for H in hs):
            return 2
        if c == 3 and set_product_commutes(hs[0], hs[1]):
            return 3
    return None


@dataclass
class ViolationRecord:
    indices: tuple
    subgroups: tuple
    profile: OrderProfile
    report: IngletonReport


@dataclass
class SearchResult:
    group: Group
    lattice: SubgroupLattice
    records: list
    ordered_count: int
    classes: list = field(default_factory=list)
    pair_screens: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, i):
        return self.records[i]


# -- worker state ---------------------------------------------------------

_STATE: dict = {}


def _prepare(G: Group, lat: SubgroupLattice, config: PruneConfig) -> dict:
    S = lat.size
    masks = lat.masks
    orders = np.array([len(m) for m in lat.members], dtype=np.int64)
    I2 = np.zeros((S, S), dtype=np.int64)
    for i in range(S):
        mi = masks[i]
        for j in range(i, S):
            I2[i, j] = I2[j, i] = (mi & masks[j]).bit_count()
    contain = (I2 == orders[:, None]) | (I2 == orders[None, :])
    extreme = (orders == 1) | (orders == G.order)
    # a subgroup is normal exactly when its conjugacy class is a singleton
    class_sizes: dict = {}
    for c in lat.class_of:
        class_sizes[c] = class_sizes.get(c, 0) + 1
    normal = np.array([class_sizes[c] == 1 for c in lat.class_of])
    big = G.order**5 >= 2**62
    return {
        "S": S,
        "masks": masks,
        "members": [np.array(m, dtype=np.int64) for m in lat.members],
        "position": lat.position,
        "orders": orders.astype(object) if big else orders,
        "I2": I2.astype(object) if big else I2,
        "contain": contain,
        "extreme": extreme,
        "normal": normal,
        "table": G.table(),
        "config": config,
    }


def _init_worker(state: dict) -> None:
    _STATE.clear()
    _STATE.update(state)


def _commutes(T, ea, eb) -> bool:
    hk = np.unique(T[np.ix_(ea, eb)])
    kh = np.unique(T[np.ix_(eb, ea)])
    return hk.shape == kh.shape and bool(np.all(hk == kh))


def _scan(firsts: list[int]) -> tuple[list[tuple], dict]:
    st = _STATE
    S, masks, I2, orders = st["S"], st["masks"], st["I2"], st["orders"]
    contain, extreme, normal, T = st["contain"], st["extreme"], st["normal"], st["table"]
    members, position = st["members"], st["position"]
    cfg: PruneConfig = st["config"]
    c2, c3, c4, c5, c6, c7 = (cfg.on(c) for c in (2, 3, 4, 5, 6, 7))
    screens = {c: 0 for c in ALL_CONDITIONS}
    found: list[tuple] = []
    base = np.ones(S, dtype=bool)
    if c4:
        base &= ~extreme
    idx = np.arange(S)
    for a in firsts:
        for b in range(S):
            if c4 and (extreme[a] or extreme[b]):
                screens[4] += 1
                continue
            if c5 and a == b:
                screens[5] += 1
                continue
            if c7 and contain[a, b]:
                screens[7] += 1
                continue
            if c6 and I2[a, b] == 1:
                screens[6] += 1
                continue
            if c3 and _commutes(T, members[a], members[b]):
                screens[3] += 1
                continue
            m12 = masks[a] & masks[b]
            p12 = position.get(m12)
            if p12 is not None:
                f123 = I2[p12]
            else:
                f123 = np.array([(m12 & m).bit_count() for m in masks], dtype=I2.dtype)
            o12 = I2[a, b]
            f13, f23 = I2[a], I2[b]
            valid = base.copy()
            if c5:
                valid &= (idx != a) & (idx != b)
            if c7:
                valid &= ~contain[a] & ~contain[b]
            ks = np.nonzero(valid)[0]
            if ks.size == 0:
                continue
            num = (f13[ks] * f23[ks]).astype(float)
            den = f123[ks].astype(float)
            fk = num / den
            # a violation needs |G12| f(k) f(l) > |G1||G2||G34| >= |G1||G2|
            need = float(orders[a] * orders[b]) / float(o12)
            keep = fk * fk.max() > need * (1 - 1e-9)
            ks = ks[keep]
            if ks.size == 0:
                continue
            sub = I2[np.ix_(ks, ks)]
            dk = f123[ks]
            nk = f13[ks] * f23[ks]
            lhs = (orders[a] * orders[b]) * sub * dk[:, None] * dk[None, :]
            rhs = o12 * nk[:, None] * nk[None, :]
            viol = lhs < rhs
            if c5:
                np.fill_diagonal(viol, False)
            if c7:
                viol &= ~contain[np.ix_(ks, ks)]
            if c2 and normal[a] and normal[b]:
                viol &= ~(normal[ks][:, None] & normal[ks][None, :])
            for i, j in zip(*np.nonzero(viol)):
                found.append((a, b, int(ks[i]), int(ks[j])))
    return found, screens


def search_group(
    G: Group,
    config: PruneConfig | None = None,
    jobs: int = 1,
    cap: int | None = None,
    conjugacy_reduced: bool = False,
) -> SearchResult:
    """All Ingleton-violating 4-tuples of subgroups of G, one record per
    symmetry class. With ``conjugacy_reduced`` only G1 ranging over
    conjugacy class representatives is scanned and one record per
    conjugacy class of tuples is returned."""
    config = config or PruneConfig()
    lat = subgroup_lattice(G, cap)
    if config.on(1) and G.is_abelian():
        return SearchResult(G, lat, [], 0, [], {1: 1})
    state = _prepare(G, lat, config)
    firsts = lat.class_representatives() if conjugacy_reduced else list(range(lat.size))
    jobs = max(1, min(jobs, len(firsts)))
    if jobs == 1:
        _init_worker(state)
        found, screens = _scan(firsts)
    else:
        chunks = [firsts[i::jobs] for i in range(jobs)]
        ctx = get_context("fork") if os.name == "posix" else None
        with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx, initializer=_init_worker, initargs=(state,)) as ex:
            parts = list(ex.map(_scan, chunks))
        found = [t for p, _ in parts for t in p]
        screens = {c: sum(s[c] for _, s in parts) for c in ALL_CONDITIONS}
    ordered = sorted(set(found))
    canon = sorted({canonical(t) for t in ordered})
    class_ids = tuple_class_ids(lat, canon)
    if conjugacy_reduced:
        canon = sorted(set(class_ids.values()))
        class_ids = {t: t for t in canon}
    records = [_record(lat, t) for t in canon]
    pos = {r.indices: i for i, r in enumerate(records)}
    groups: dict = {}
    for t in canon:
        groups.setdefault(class_ids[t], []).append(pos[t])
    classes = [groups[k] for k in sorted(groups)]
    return SearchResult(G, lat, records, len(ordered), classes, screens)


def _record(lat: SubgroupLattice, t: tuple) -> ViolationRecord:
    subs = tuple(lat.subgroups[i] for i in t)
    prof = order_profile(subs, group_order=lat.group.order)
    return ViolationRecord(t, subs, prof, ingleton_check(prof))


def _subgroup_perms(lat: SubgroupLattice) -> list[list[int]]:
    if "_sub_perms" not in lat.__dict__:
        lat._sub_perms = [[lat.conj_index(i, p) for i in range(lat.size)] for p in lat.conj_perms]
    return lat._sub_perms


def tuple_class_ids(lat: SubgroupLattice, tuples) -> dict:
    """Map each canonical tuple to the smallest canonical tuple in its orbit
    under simultaneous conjugation."""
    perms = _subgroup_perms(lat)
    out: dict = {}
    for t in tuples:
        if t in out:
            continue
        seen = {t}
        frontier = [t]
        while frontier:
            nxt = []
            for u in frontier:
                for p in perms:
                    v = canonical(tuple(p[i] for i in u))
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        rep = min(seen)
        for u in seen:
            out[u] = rep
    return out


def conjugacy_classes_of_tuples(G: Group, records) -> list[list]:
    """Partition records into classes under simultaneous conjugation."""
    lat = subgroup_lattice(G)
    ids = tuple_class_ids(lat, [r.indices for r in records])
    groups: dict = {}
    for r in records:
        groups.setdefault(ids[r.indices], []).append(r)
    return [groups[k] for k in sorted(groups)]


def screen_all_tuples(G: Group, config: PruneConfig | None = None):
    """Yield (ordered index tuple, screening condition or None, report) for
    every ordered 4-tuple of subgroups. Used for soundness audits."""
    config = config or PruneConfig.all()
    lat = subgroup_lattice(G)
    subs = lat.subgroups
    from itertools import product

    for t in product(range(lat.size), repeat=4):
        hs = [subs[i] for i in t]
        yield t, condition_screen(G, hs, config), ingleton_check(order_profile(hs, group_order=G.order))


def tuple_from_subgroups(lat: SubgroupLattice, subs) -> tuple:
    return canonical(tuple(lat.index_of(H) for H in subs))


def is_violating(subs) -> bool:
    return ingleton_check(order_profile(subs)).violated


__all__ = [
    "PruneConfig",
    "SearchResult",
    "ViolationRecord",
    "canonical",
    "condition_screen",
    "conjugacy_classes_of_tuples",
    "is_violating",
    "screen_all_tuples",
    "search_group",
    "tuple_class_ids",
    "tuple_from_subgroups",
]

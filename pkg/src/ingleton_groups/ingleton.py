"""Order profiles of subgroup tuples and exact Ingleton checks.

For subgroups G_1..G_n of G and a nonempty index set a, G_a is the
intersection of the G_i with i in a, and G_{} = G. The entropy vector of the
coset random variables is h_a = log(|G| / |G_a|), so every inequality on
entropies turns into an inequality between products of subgroup orders.
All comparisons here are done on integers or Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import log2, prod
from typing import Mapping

from . import config
from .errors import CapExceededError, IngletonError
from .groups import Group, Subgroup

Alpha = tuple[int, ...]

# Ingleton for four variables, written on subgroup orders:
#   |G1||G2||G34||G123||G124| >= |G12||G13||G14||G23||G24|
LHS_SETS: tuple[Alpha, ...] = ((1,), (2,), (3, 4), (1, 2, 3), (1, 2, 4))
RHS_SETS: tuple[Alpha, ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4))
INGLETON_SETS: tuple[Alpha, ...] = ((1,), (2,), (3,), (4,), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 2, 3), (1, 2, 4))


def alpha_key(a) -> Alpha:
    if isinstance(a, str):
        a = a.strip()
        if a in ("", "0", "G"):
            return ()
        parts = a.split(",") if "," in a else list(a)
        return tuple(sorted(int(x) for x in parts))
    return tuple(sorted(a))


def alpha_str(a: Alpha) -> str:
    if not a:
        return "G"
    return ("," if max(a) > 9 else "").join(str(i) for i in a)


def all_alphas(n: int) -> list[Alpha]:
    return [c for k in range(1, n + 1) for c in combinations(range(1, n + 1), k)]


@dataclass(frozen=True)
class OrderProfile:
    """Subgroup orders |G_a| keyed by index tuples, plus |G|.

    A profile built from subgroups lists every nonempty a. Profiles taken
    from closed-form tables may list only the index sets the table covers.
    """

    group_order: int
    orders: Mapping[Alpha, int]

    def __getitem__(self, a) -> int:
        key = alpha_key(a)
        if not key:
            return self.group_order
        return self.orders[key]

    def get(self, a, default=None):
        try:
            return self[a]
        except KeyError:
            return default

    def keys(self) -> list[Alpha]:
        return sorted(self.orders, key=lambda a: (len(a), a))

    def restricted(self, alphas) -> "OrderProfile":
        return OrderProfile(self.group_order, {alpha_key(a): self[a] for a in alphas})

    def ingleton_tuple(self) -> tuple[int, ...]:
        """(|G1|,|G2|,|G3|,|G4|,|G12|,|G13|,|G14|,|G23|,|G24|,|G34|,|G123|,|G124|)."""
        return tuple(self[a] for a in INGLETON_SETS)

    def lines(self) -> list[str]:
        return [f"{alpha_str(a)}={self.orders[a]}" for a in self.keys()] + [f"G={self.group_order}"]

    def to_text(self) -> str:
        return "\n".join(self.lines()) + "\n"

    @staticmethod
    def parse(text: str) -> "OrderProfile":
        orders, g = {}, None
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            k, _, v = line.partition("=")
            if k == "G":
                g = int(v)
            else:
                orders[alpha_key(k)] = int(v)
        if g is None:
            raise IngletonError("profile text has no G= line")
        return OrderProfile(g, orders)

    def to_dict(self) -> dict[str, int]:
        d = {alpha_str(a): self.orders[a] for a in self.keys()}
        d["G"] = self.group_order
        return d


def order_profile(subgroups, group_order: int | None = None) -> OrderProfile:
    """Orders of all intersections of the given subgroups."""
    subgroups = list(subgroups)
    if not subgroups:
        raise IngletonError("empty subgroup tuple")
    root = subgroups[0].root
    for H in subgroups[1:]:
        if H.root is not root and H.root.arith != root.arith:
            raise IngletonError("subgroups live in different parent groups")
    sets = [H.element_set for H in subgroups]
    orders: dict[Alpha, int] = {}
    inter: dict[Alpha, frozenset] = {}
    for a in all_alphas(len(sets)):
        s = sets[a[0] - 1] if len(a) == 1 else inter[a[:-1]] & sets[a[-1] - 1]
        inter[a] = s
        orders[a] = len(s)
    return OrderProfile(root.order if group_order is None else group_order, orders)


@dataclass(frozen=True)
class IngletonReport:
    lhs: int
    rhs: int

    @property
    def violated(self) -> bool:
        return self.lhs < self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    @property
    def ratio(self) -> Fraction:
        """rhs / lhs; above 1 exactly when the inequality fails."""
        return Fraction(self.rhs, self.lhs)

    @property
    def difference(self) -> int:
        return self.lhs - self.rhs

    def to_dict(self) -> dict:
        r = self.ratio
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ratio": f"{r.numerator}/{r.denominator}",
            "violated": self.violated,
        }


def ingleton_check(profile: OrderProfile) -> IngletonReport:
    return IngletonReport(
        lhs=prod(profile[a] for a in LHS_SETS),
        rhs=prod(profile[a] for a in RHS_SETS),
    )


def delta(profile: OrderProfile, a, b) -> Fraction:
    """exp of h_a + h_b - h_{a&b} - h_{a|b}, always >= 1 by submodularity.

    Equals |G_{a&b}| |G_{a|b}| / (|G_a| |G_b|).
    """
    a, b = set(alpha_key(a)), set(alpha_key(b))
    meet, join = tuple(sorted(a & b)), tuple(sorted(a | b))
    return Fraction(profile[meet] * profile[join], profile[tuple(sorted(a))] * profile[tuple(sorted(b))])


def ingleton_delta_form(profile: OrderProfile) -> bool:
    """Violation test via d(13,14) + d(23,24) + d(134,234) - d(123,124) < 0."""
    x = delta(profile, "13", "14") * delta(profile, "23", "24") * delta(profile, "134", "234")
    return x < delta(profile, "123", "124")


def char_vector(profile: OrderProfile) -> dict[Alpha, Fraction]:
    """|G| / |G_a| for each a; h_a is the base-2 log of this value."""
    return {a: Fraction(profile.group_order, profile[a]) for a in profile.keys()}


def entropy_bits(profile: OrderProfile) -> dict[Alpha, float]:
    return {a: log2(v) for a, v in char_vector(profile).items()}


def ingleton_entropy_form(profile: OrderProfile) -> bool:
    """Violation test on the entropy vector:
    h12 + h13 + h14 + h23 + h24 < h1 + h2 + h34 + h123 + h124."""
    cv = {a: Fraction(profile.group_order, profile[a]) for a in LHS_SETS + RHS_SETS}
    return prod(cv[a] for a in RHS_SETS) < prod(cv[a] for a in LHS_SETS)


def ingleton_gap_bits(profile: OrderProfile) -> float:
    """Slack h12 + h13 + h14 + h23 + h24 - (h1 + h2 + h34 + h123 + h124) in
    bits; negative exactly when Ingleton fails. Floating point, display only."""
    h = entropy_bits(profile.restricted(LHS_SETS + RHS_SETS))
    return sum(h[a] for a in RHS_SETS) - sum(h[a] for a in LHS_SETS)


def coset_labels(G: Group, H: Subgroup) -> dict:
    """Map each element x of G to an integer naming its left coset xH."""
    labels: dict = {}
    mul = G.mul
    hs = H.elements
    k = 0
    for x in G.elements:
        if x not in labels:
            for h in hs:
                labels[mul(x, h)] = k
            k += 1
    return labels


def entropy_oracle(G: Group, subgroups, cap: int | None = None) -> dict[Alpha, int]:
    """Number of distinct coset tuples (xG_i : i in a) over x in G.

    Each value is also checked to occur equally often, so the counts are the
    support sizes of uniform distributions and h_a = log(count).
    """
    cap = config.ORACLE_CAP if cap is None else cap
    if G.order > cap:
        raise CapExceededError(f"entropy oracle over order {G.order} exceeds cap {cap}")
    subgroups = list(subgroups)
    labels = [coset_labels(G, H) for H in subgroups]
    out: dict[Alpha, int] = {}
    for a in all_alphas(len(subgroups)):
        counts: dict[tuple, int] = {}
        for x in G.elements:
            key = tuple(labels[i - 1][x] for i in a)
            counts[key] = counts.get(key, 0) + 1
        if len(set(counts.values())) != 1:
            raise IngletonError("coset tuple distribution is not uniform")
        out[a] = len(counts)
    return out


def oracle_agrees(G: Group, subgroups, cap: int | None = None) -> bool:
    counts = entropy_oracle(G, subgroups, cap)
    prof = order_profile(subgroups, group_order=G.order)
    return all(counts[a] * prof[a] == G.order for a in counts)

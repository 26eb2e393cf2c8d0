"""The fifteen GL(2,q) instances lifted from the PGL(2,q) family."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..ffield import Field, field_of_order
from ..groups import Group, Subgroup, closure, conjugate, general_linear_group, intersect
from .formulas import check_instance, half_is_odd


@dataclass
class Gl2Context:
    """Matrices and auxiliary subgroups of GL(2,q) shared by all instances."""

    q: int
    field: Field
    group: Group
    mats: dict = field(default_factory=dict)
    subs: dict = field(default_factory=dict)

    def A(self, a: int):
        return (1, 0, a, 1)


@dataclass
class Gl2InstanceData:
    q: int
    instance: int
    context: Gl2Context
    tuple: tuple


_CTX: dict[int, Gl2Context] = {}


def gl2_context(q: int) -> Gl2Context:
    if q in _CTX:
        return _CTX[q]
    f = field_of_order(q)
    G = general_linear_group(2, f)
    t, m1 = f.primitive, f.neg(1)
    mul = G.mul
    m = {
        "I": G.identity,
        "-I": (m1, 0, 0, m1),
        "tI": (t, 0, 0, t),
        "B": (1, 0, 0, t),
        "C": (0, 1, m1, m1),
        "B1": (1, 0, m1, m1),
        "B3": (1, 0, f.sub(t, 1), t),
        "B'": (m1, 0, 0, t),
        "P": (t, 0, 0, 1),
        "P'": (t, 0, 0, m1),
        "E": (m1, 1, 1, 0),
        "Q": (f.from_int(2), 1, 1, 0),
        "W": (0, 1, m1, 1),
    }
    m["CB1"] = mul(m["C"], m["B1"])
    m["B1C"] = mul(m["B1"], m["C"])
    m["-C"] = mul(m["-I"], m["C"])
    m["-B1"] = mul(m["-I"], m["B1"])
    m["tB1"] = mul(m["tI"], m["B1"])
    ngens = [(1, 0, x, 1) for x in f.basis()]

    def gen(*names, with_n=False):
        return closure(G, ([*ngens] if with_n else []) + [m[x] for x in names])

    s = {
        "N": closure(G, ngens, label="N"),
        "V": gen("tI"),
        "M": gen("C", "B1"),
        "K": gen("B", with_n=True),
        "K'": gen("B'", with_n=True),
        "J": gen("P", with_n=True),
        "J'": gen("P'", with_n=True),
        "T": gen("tI", "B3"),
        "D": gen("tI", "B"),
    }
    ctx = Gl2Context(q, f, G, m, s)
    _CTX[q] = ctx
    return ctx


def _instance_subgroups(ctx: Gl2Context, instance: int) -> tuple:
    G, m, s = ctx.group, ctx.mats, ctx.subs
    nlist = list(s["N"].generating_set())

    def gen(*names, with_n=False):
        return closure(G, (nlist if with_n else []) + [m[x] for x in names])

    if instance >= 12:
        JE, JQ = conjugate(s["J"], m["E"]), conjugate(s["J"], m["Q"])
        JpE, JpQ = conjugate(s["J'"], m["E"]), conjugate(s["J'"], m["Q"])
        rest = {
            12: (s["K"], JE, JQ),
            13: (s["K'"], JpE, JpQ),
            14: (JE, s["K"], conjugate(s["K"], m["W"])),
            15: (JpE, s["K'"], conjugate(s["K'"], m["W"])),
        }[instance]
        return (s["M"],) + rest
    g1 = {
        2: lambda: gen("C", "B1"),
        3: lambda: gen("-C", "B1"),
        4: lambda: gen("C", "-B1"),
        5: lambda: gen("C", "tB1"),
    }.get(instance, lambda: gen("tI", "C", "B1"))()
    g2 = {
        6: lambda: s["K"],
        7: lambda: s["J"],
        8: lambda: s["K'"],
        9: lambda: s["J'"],
        10: lambda: gen("-I", "B", with_n=True),
        11: lambda: gen("-I", "P", with_n=True),
    }.get(instance, lambda: gen("tI", "B", with_n=True))()
    g3 = gen("tI", "CB1", "B3")
    g4 = gen("tI", "B1C", "B")
    return (g1, g2, g3, g4)


def gl2_instance(q: int, instance: int, strict: bool = True) -> Gl2InstanceData:
    """Build an instance. ``strict=False`` also builds the p = 3 instances
    12-15, which exist but do not violate the inequality."""
    check_instance(q, instance, strict=strict)
    ctx = gl2_context(q)
    return Gl2InstanceData(q, instance, ctx, _instance_subgroups(ctx, instance))


def gl2_tuple(q: int, instance: int, strict: bool = True) -> tuple:
    return gl2_instance(q, instance, strict).tuple


# -- structure maps between K, K', J, J' -----------------------------------


def _map_report(G: Group, mapping: dict, target: Subgroup) -> dict:
    images = list(mapping.values())
    bijective = len(set(images)) == len(images) and set(images) == set(target.element_set)
    hom = all(
        mapping.get(G.mul(x, y)) == G.mul(mapping[x], mapping[y]) for x in mapping for y in mapping
    )
    return {"bijective": bijective, "homomorphism": hom, "isomorphism": bijective and hom}


def _param_map(ctx: Gl2Context, src_gen, dst_gen, exponent) -> dict:
    """A_a src^k -> A_a dst^(exponent(k)) for a in F_q and k mod |src|."""
    G = ctx.group
    order = 1
    x = src_gen
    while x != G.identity:
        x = G.mul(x, src_gen)
        order += 1
    out = {}
    for a in range(ctx.q):
        A = ctx.A(a)
        for k in range(order):
            out[G.mul(A, G.power(src_gen, k))] = G.mul(A, G.power(dst_gen, exponent(k)))
    return out


def verify_structure_maps(q: int) -> dict:
    """Check the maps sigma: K -> J, sigma': K' -> J', tau: K -> K' and the
    intersections <B'> cap <B'>^{A_a} in the odd branch."""
    ctx = gl2_context(q)
    G, m, s = ctx.group, ctx.mats, ctx.subs
    odd_char = ctx.field.p != 2
    report: dict = {"q": q, "half_odd": half_is_odd(q)}
    sigma = _param_map(ctx, m["B"], m["P"], lambda k: -k)
    report["sigma"] = _map_report(G, sigma, s["J"])["isomorphism"]
    if odd_char:
        sp = _param_map(ctx, m["B'"], m["P'"], lambda k: -k)
        report["sigma_prime"] = _map_report(G, sp, s["J'"])["isomorphism"]
        tau = _param_map(ctx, m["B"], m["B'"], lambda k: ((q + 1) // 2) * k)
        report["tau"] = _map_report(G, tau, s["K'"])["isomorphism"]
        report["tau_expected"] = not half_is_odd(q)
        if half_is_odd(q):
            Bp = closure(G, [m["B'"]])
            minus = closure(G, [m["-I"]])
            report["minus_identity"] = all(
                intersect(Bp, conjugate(Bp, ctx.A(a))) == minus for a in range(1, q)
            )
        else:
            report["minus_identity"] = None
    else:
        report["sigma_prime"] = None
        report["tau"] = None
        report["tau_expected"] = None
        report["minus_identity"] = None
        report["identified"] = s["K"] == s["K'"] and s["J"] == s["J'"]
    report["ok"] = (
        report["sigma"]
        and report["sigma_prime"] in (True, None)
        and report["tau"] == report["tau_expected"]
        and report["minus_identity"] in (True, None)
        and report.get("identified", True)
    )
    return report


__all__ = [
    "Gl2Context",
    "Gl2InstanceData",
    "gl2_context",
    "gl2_instance",
    "gl2_tuple",
    "verify_structure_maps",
]

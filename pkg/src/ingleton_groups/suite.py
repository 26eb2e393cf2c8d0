"""The acceptance battery behind ``ingleton verify-suite``.

Each check returns a CriterionResult; ``detail`` lists what failed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from .errors import FamilyError
from .ffield import field_of_order
from .families import (
    COLLAPSE_P2,
    expected_difference,
    expected_profile,
    flower_check,
    gl2_context,
    gl2_instance,
    pgl2_flower,
    pgl2_ratio,
    pgl2_tuple,
    pgln_expected_orders,
    pgln_points_tuple,
    pgln_predicted,
    pgln_subspace_tuple,
    table_row,
    two_transitive_setup,
    two_transitive_tuple,
    verify_presentation_relations,
    verify_structure_maps,
)
from .groups import (
    Subgroup,
    closure,
    cyclic_group,
    direct_product,
    general_linear_group,
    parse_group,
    preimage_subgroup,
    projective_map,
    subgroup_lattice,
    symmetric_group,
)
from .ingleton import ingleton_check, oracle_agrees, order_profile
from .netcode import (
    butterfly,
    butterfly_linear,
    empirical_counts,
    independence_check,
    make_independent_sources,
    simulate_all,
    unembed_vector,
    validate_code,
)
from .search import PruneConfig, screen_all_tuples, search_group


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool = True
    detail: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def check(self, cond: bool, msg: str) -> None:
        if not cond:
            self.ok = False
            self.detail.append(msg)

    def line(self) -> str:
        status = "pass" if self.ok else "fail"
        extra = f" detail={'; '.join(self.detail)!r}" if self.detail else ""
        return f"criterion={self.number} name={self.name} result={status}{extra}"


S5_ORDERS = (6, 20, 8, 8, 2, 2, 2, 4, 4, 1, 1, 1)


def abelian_invariants(n: int):
    """Invariant-factor lists of every abelian group of order n."""

    def parts(k, m):
        if k == 0:
            yield ()
            return
        for a in range(min(k, m), 0, -1):
            for rest in parts(k - a, a):
                yield (a,) + rest

    f, m, p = {}, n, 2
    while m > 1:
        while m % p == 0:
            f[p] = f.get(p, 0) + 1
            m //= p
        p += 1
    for combo in product(*[[(p, pt) for pt in parts(e, e)] for p, e in sorted(f.items())]):
        yield sorted(p**k for p, pt in combo for k in pt)


def abelian_group(cyclics):
    if len(cyclics) <= 1:
        return cyclic_group(cyclics[0] if cyclics else 1)
    return direct_product(*[cyclic_group(k) for k in cyclics])


def c1_s5(r: CriterionResult) -> None:
    G = symmetric_group(5)
    lat = subgroup_lattice(G)
    r.check(lat.size == 156 and len(lat.classes()) == 19, f"S5 lattice has {lat.size} subgroups")
    res = search_group(G)
    r.check(len(res) == 60, f"{len(res)} records instead of 60")
    r.check(len(res.classes) == 1, f"{len(res.classes)} classes instead of 1")
    hits = [x for x in res if x.profile.ingleton_tuple() == S5_ORDERS]
    r.check(bool(hits), "no record has the expected order list")
    if hits:
        rep = hits[0].report
        r.check((rep.lhs, rep.rhs) == (120, 128), f"lhs/rhs {rep.lhs}/{rep.rhs}")


def c2_controls(r: CriterionResult) -> None:
    for d in ("sym:4", "alt:5", "dih:8", "cyc:2*sym:3"):
        n = len(search_group(parse_group(d)))
        r.check(n == 0, f"{d} has {n} violations")
    count = 0
    for n in range(1, 61):
        for inv in abelian_invariants(n):
            count += 1
            k = len(search_group(abelian_group(inv)))
            r.check(k == 0, f"abelian {inv} has {k} violations")
    r.check(count == 102, f"{count} abelian groups of order <= 60")


def c3_pgl2(r: CriterionResult) -> None:
    for q in (4, 5, 7, 8, 9, 11, 13):
        prof = order_profile(pgl2_tuple(q))
        exp = expected_profile(0, q)
        r.check(prof.restricted(exp.keys()) == exp, f"q={q} orders differ")
        rep = ingleton_check(prof)
        r.check(rep.violated == (q >= 5), f"q={q} violated={rep.violated}")
        if q == 4:
            r.check(rep.equality, "q=4 is not an equality")
        if rep.violated:
            r.check(rep.ratio == pgl2_ratio(q), f"q={q} ratio {rep.ratio}")


def c4_gl2(r: CriterionResult) -> None:
    for q in (5, 7, 8, 9, 11, 13):
        f = field_of_order(q)
        G = general_linear_group(2, f)
        for inst in range(1, 16):
            if f.p == 2 and inst in COLLAPSE_P2:
                try:
                    gl2_instance(q, inst)
                    r.check(False, f"q={q} instance {inst} did not collapse")
                except FamilyError as e:
                    r.check(e.kind == "collapsed", f"q={q} instance {inst}: {e.kind}")
                continue
            if f.p == 3 and inst >= 12:
                try:
                    gl2_instance(q, inst)
                    r.check(False, f"q={q} instance {inst} was not rejected")
                except FamilyError as e:
                    r.check(e.kind == "rejected", f"q={q} instance {inst}: {e.kind}")
                continue
            prof = order_profile(gl2_instance(q, inst).tuple)
            exp = expected_profile(inst, q)
            r.check(prof.restricted(exp.keys()) == exp, f"q={q} instance {inst} orders differ")
            rep = ingleton_check(prof)
            row = table_row(inst, q)
            r.check(rep.violated == (row not in ("8'", "13'")), f"q={q} instance {inst} violated={rep.violated}")
            if row in ("8'", "13'"):
                want = expected_difference(inst, q)
                r.check(
                    rep.difference == want,
                    f"q={q} instance {inst} row {row}: lhs-rhs={rep.difference}, table says {want}",
                )
        hom = projective_map(G)
        pre = [preimage_subgroup(hom, Subgroup(hom.target, H.element_set)) for H in pgl2_tuple(q)]
        inst1 = gl2_instance(q, 1).tuple
        r.check(
            all(a.element_set == b.element_set for a, b in zip(pre, inst1)),
            f"q={q} instance 1 is not the preimage of the PGL(2,q) tuple",
        )


def c5_presentation(r: CriterionResult) -> None:
    for p in (5, 7, 11, 13):
        r.check(verify_presentation_relations(p), f"relations fail at p={p}")
        tup = pgl2_tuple(p)
        G = tup[0].root
        gens = [x for H in tup for x in H.generating_set()]
        order = closure(G, gens).order
        r.check(order == (p - 1) * p * (p + 1), f"p={p} tuple generates order {order}")


def c6_flowers(r: CriterionResult) -> None:
    for q in (5, 7, 8, 9):
        fr = pgl2_flower(q)
        p = field_of_order(q).p
        r.check(fr.ok, f"PGL(2,{q}) G2 is not a flower")
        r.check(fr.petals == q, f"q={q}: {fr.petals} petals")
        r.check(fr.tubers == (q - 1) // (p - 1), f"q={q}: {fr.tubers} tubers")
    for q, want in ((5, True), (7, False), (13, True)):
        ctx = gl2_context(q)
        K1 = ctx.subs["K'"]
        fr = flower_check(K1, ctx.subs["N"], closure(ctx.group, [ctx.mats["B'"]]))
        r.check(fr.ok == want, f"K' flower at q={q} is {fr.ok}")
    for q in (5, 7, 8, 9, 13):
        rep = verify_structure_maps(q)
        r.check(bool(rep["ok"]), f"structure maps fail at q={q}: {rep}")


def c7_pgln(r: CriterionResult, include_34: bool = True) -> None:
    cases = [(3, 2), (3, 3), (4, 2)] + ([(3, 4)] if include_34 else [])
    for n, q in cases:
        for kind in ("indep", "dep", "subspace"):
            tup = pgln_subspace_tuple(n, q) if kind == "subspace" else pgln_points_tuple(n, q, kind == "dep")
            prof = order_profile(tup)
            exp = pgln_expected_orders(n, q, kind)
            r.check(all(prof[a] == v for a, v in exp.items()), f"{kind} ({n},{q}) orders differ")
            flag, ratio = pgln_predicted(n, q, kind)
            rep = ingleton_check(prof)
            r.check(rep.violated == flag, f"{kind} ({n},{q}) violated={rep.violated}, predicted {flag}")
            r.check(rep.ratio == ratio, f"{kind} ({n},{q}) ratio {rep.ratio} vs {ratio}")
            if kind == "indep" and (n, q) == (3, 3):
                r.check(rep.ratio == 1, "indep (3,3) is not an equality")
            if kind == "subspace" and (n, q) == (4, 2):
                r.check(rep.ratio == Fraction(54, 49), f"subspace (4,2) ratio {rep.ratio}")
            if kind == "dep":
                r.check(not rep.violated, f"dependent points violate at n={n}")
    # the dependent-points construction does violate on the projective line
    for q in (5, 7):
        prof = order_profile(pgln_points_tuple(2, q, True))
        r.check(ingleton_check(prof).violated, f"dependent points on PG(1,{q}) do not violate")


def c8_twotrans(r: CriterionResult) -> None:
    want = {5: Fraction(1), 6: Fraction(16, 15), 7: Fraction(10, 9)}
    for n, ratio in want.items():
        setup = two_transitive_setup(symmetric_group(n), 0, 1, 2)
        tup, predicted = two_transitive_tuple(setup)
        rep = ingleton_check(order_profile(tup))
        r.check(rep.ratio == ratio, f"S{n} ratio {rep.ratio}")
        r.check(rep.violated == predicted, f"S{n} predicted {predicted}, observed {rep.violated}")
        r.check(ratio == Fraction(4 * (n - 2), 3 * (n - 1)), f"S{n} closed form")


def c9_network(r: CriterionResult) -> None:
    t0 = time.perf_counter()
    spec, code = butterfly()
    v = validate_code(spec, code)
    r.check(v.r1 and v.r2 and v.r3, f"butterfly code fails {v.diagnostics}")
    traces = simulate_all(spec, code)
    r.check(len(traces) == 25, f"{len(traces)} source pairs")
    r.check(all(all(t.decode_ok.values()) for t in traces), "a sink failed to decode")
    r.check(all(t.ok for t in traces), "a trace broke the common-coset or global-map check")
    terms = spec.terms
    i = {t: terms.index(t) + 1 for t in terms}
    singles = [(i["s1"],), (i["s2"],), (i["e5"],)]
    pairs = [(i["s1"], i["s2"]), (i["s1"], i["e5"]), (i["s2"], i["e5"])]
    counts = empirical_counts(spec, code, singles + pairs, traces)
    r.check(all(counts[a] == 5 for a in singles), f"single counts {counts}")
    r.check(all(counts[a] == 25 for a in pairs), f"joint counts {counts}")
    lin = butterfly_linear(5)
    f = lin.field
    embed = {
        "G1": {(0, x) for x in range(5)},
        "G2": {(y, 0) for y in range(5)},
        "G3": {(z, f.neg(z)) for z in range(5)},
    }
    got = {t: {unembed_vector(f, g) for g in H.elements} for t, H in lin.code.assignment.items()}
    r.check(got["s1"] == embed["G1"] and got["s2"] == embed["G2"], "source kernels differ")
    r.check(got["e5"] == embed["G3"], "middle edge kernel differs")
    r.check(all(lin.agrees(vec) for vec in lin.all_vectors()), "group and linear decodes differ")
    took = time.perf_counter() - t0
    r.check(took <= 1.0, f"took {took:.2f}s")


ORACLE_GROUPS = ("sym:4", "sym:5", "alt:4", "alt:5", "dih:12", "dih:20", "gl:2:3", "pgl:2:5", "cyc:2*sym:4", "cyc:3*sym:3")


def c10_oracle(r: CriterionResult, trials: int = 24, seed: int = 1) -> None:
    rng = random.Random(seed)
    bad = 0
    for k in range(trials):
        G = parse_group(ORACLE_GROUPS[k % len(ORACLE_GROUPS)])
        subs = subgroup_lattice(G).subgroups
        tup = [subs[rng.randrange(len(subs))] for _ in range(4)]
        if not oracle_agrees(G, tup):
            bad += 1
    r.check(trials >= 20 and bad == 0, f"{bad} mismatches in {trials} trials")


def c11_pruning(r: CriterionResult) -> None:
    for d in ("sym:4", "dih:12"):
        G = parse_group(d)
        screened = 0
        for t, cond, rep in screen_all_tuples(G):
            if cond is not None:
                screened += 1
                r.check(not rep.violated, f"{d} tuple {t} screened by {cond} but violates")
        r.check(screened > 0, f"{d}: nothing screened")
        a = [x.indices for x in search_group(G)]
        b = [x.indices for x in search_group(G, PruneConfig.none())]
        r.check(a == b, f"{d}: pruned and unpruned searches differ")
    a = [x.indices for x in search_group(symmetric_group(5))]
    b = [x.indices for x in search_group(symmetric_group(5), PruneConfig.none())]
    r.check(a == b, "S5: pruned and unpruned searches differ")


def c12_independence(r: CriterionResult) -> None:
    for q in (5, 7, 9):
        for kind in ("psl_u", "sl_b", "sl_p"):
            G, S = make_independent_sources(kind, q)
            r.check(independence_check(G, S), f"{kind} q={q} not independent")
            r.check(S[0].order * S[1].order == G.order, f"{kind} q={q} orders")
    G, S = make_independent_sources("product", cyclic_group(2), cyclic_group(3), symmetric_group(3))
    r.check(independence_check(G, S), "three-factor product not independent")
    G0, (A, B) = make_independent_sources("sl_b", 5)
    P, S = make_independent_sources("square", G0, A, B)
    r.check(S[0].order == S[1].order, "squared pair orders differ")
    r.check(independence_check(P, S), "squared GL(2,5) pair not independent")


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "s5_reproduction", c1_s5),
    (2, "negative_controls", c2_controls),
    (3, "pgl2_family", c3_pgl2),
    (4, "gl2_instances", c4_gl2),
    (5, "presentation", c5_presentation),
    (6, "flowers", c6_flowers),
    (7, "projective_constructions", c7_pgln),
    (8, "two_transitive", c8_twotrans),
    (9, "network_coding", c9_network),
    (10, "oracle_equivalence", c10_oracle),
    (11, "pruning_soundness", c11_pruning),
    (12, "independence", c12_independence),
]


def run_criterion(number: int) -> CriterionResult:
    num, name, fn = next(c for c in CRITERIA if c[0] == number)
    res = CriterionResult(num, name)
    t0 = time.perf_counter()
    try:
        fn(res)
    except Exception as e:  # a crash is a failure, reported like any other
        res.check(False, f"{type(e).__name__}: {e}")
    res.seconds = time.perf_counter() - t0
    return res


def run_suite(numbers=None) -> list[CriterionResult]:
    numbers = [c[0] for c in CRITERIA] if numbers is None else list(numbers)
    return [run_criterion(n) for n in numbers]

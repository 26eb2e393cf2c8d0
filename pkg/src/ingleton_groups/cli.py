"""Command-line entry point.

Every command builds a report: a list of lines, each an ordered mapping of
keys to values. Text output writes ``key=value`` tokens; JSON output writes
the same mappings. Exit status: 0 success, 1 verification mismatch, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import IngletonError
from .families import (
    expected_difference,
    expected_profile,
    gl2_instance,
    pgl2_ratio,
    pgl2_tuple,
    pgln_expected_orders,
    pgln_points_tuple,
    pgln_predicted,
    pgln_subspace_tuple,
    predicted_ratio,
    table_row,
    twotrans_expected,
    two_transitive_setup,
    two_transitive_tuple,
)
from .groups import (
    Group,
    ProjectivePoint,
    closure,
    format_generators,
    parse_generators,
    parse_group,
)
from .groups.arith import MatrixArith, PermArith
from .ingleton import INGLETON_SETS, alpha_key, alpha_str, ingleton_check, order_profile
from .netcode import GroupCode, NetworkSpec, simulate, simulate_all, source_symbols, validate_code
from .search import PruneConfig, search_group

Line = dict


class UsageError(Exception):
    pass


def render(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def jsonable(v):
    if isinstance(v, Fraction):
        return render(v)
    return v


def emit(lines: list[Line], fmt: str, out=None) -> None:
    out = sys.stdout if out is None else out
    if fmt == "json":
        json.dump([{k: jsonable(v) for k, v in ln.items()} for ln in lines], out, indent=1)
        out.write("\n")
    else:
        for ln in lines:
            out.write(" ".join(f"{k}={render(v)}" for k, v in ln.items()) + "\n")


def parse_text_line(line: str) -> dict[str, str]:
    """Inverse of the text rendering of one line."""
    out = {}
    for tok in line.split():
        k, _, v = tok.partition("=")
        out[k] = v
    return out


def _cap(args):
    return getattr(args, "cap", None)


# -- search --------------------------------------------------------------------


def cmd_search(args) -> tuple[list[Line], int]:
    G = parse_group(args.group)
    config = PruneConfig.none() if args.unpruned else PruneConfig()
    if args.without:
        config = config.without(*args.without)
    res = search_group(G, config, jobs=args.jobs, cap=_cap(args), conjugacy_reduced=args.conjugacy_reduced)
    class_of = {pos: k for k, members in enumerate(res.classes) for pos in members}
    lines = []
    for i, rec in enumerate(res.records):
        gens = "|".join(format_generators(G, H.generating_set()) for H in rec.subgroups)
        rep = rec.report
        lines.append(
            {
                "tuple": gens,
                "orders": ",".join(str(x) for x in rec.profile.ingleton_tuple()),
                "lhs": rep.lhs,
                "rhs": rep.rhs,
                "ratio": rep.ratio,
                "class": class_of.get(i, 0),
            }
        )
    lines.append({"group": G.label, "order": G.order, "records": len(res), "ordered": res.ordered_count, "classes": len(res.classes)})
    return lines, 0


# -- orders --------------------------------------------------------------------


def cmd_orders(args) -> tuple[list[Line], int]:
    G = parse_group(args.group)
    subs = [closure(G, parse_generators(G, g)) for g in args.gens]
    prof = order_profile(subs, group_order=G.order)
    lines = [{alpha_str(a): prof[a]} for a in prof.keys()] + [{"G": G.order}]
    if len(subs) >= 4:
        rep = ingleton_check(prof)
        lines.append({"lhs": rep.lhs, "rhs": rep.rhs, "ratio": rep.ratio, "violated": rep.violated})
    return lines, 0


# -- family --------------------------------------------------------------------


def _profile_lines(prof, expected: dict) -> list[Line]:
    lines = []
    for a in prof.keys():
        ln = {"alpha": alpha_str(a), "order": prof[a]}
        if a in expected:
            ln["expected"] = expected[a]
        lines.append(ln)
    return lines


def _family_report(head: Line, tup, expected: dict, extra_ok: bool, extra: Line) -> tuple[list[Line], int]:
    prof = order_profile(tup)
    rep = ingleton_check(prof)
    match = all(prof[a] == v for a, v in expected.items()) and extra_ok
    lines = [head]
    lines += _profile_lines(prof, expected)
    lines.append({"G": prof.group_order})
    lines.append({"lhs": rep.lhs, "rhs": rep.rhs, "difference": rep.difference, **extra})
    lines.append({"match": match, "violated": rep.violated, "ratio": rep.ratio})
    return lines, 0 if match else 1


def _ingleton_expected(prof) -> dict:
    return {alpha_key(a): prof[a] for a in INGLETON_SETS}


def cmd_family(args) -> tuple[list[Line], int]:
    kind = args.family
    if kind == "pgl2":
        q = args.q
        tup = pgl2_tuple(q)
        exp = _ingleton_expected(expected_profile(0, q))
        rep = ingleton_check(order_profile(tup))
        flags = rep.violated == (q >= 5) and (not rep.violated or rep.ratio == pgl2_ratio(q))
        head = {"family": "pgl2", "q": q, "group": tup[0].root.label}
        return _family_report(head, tup, exp, flags, {"predicted_ratio": pgl2_ratio(q)})
    if kind == "gl2":
        q, inst = args.q, args.instance
        data = gl2_instance(q, inst, strict=not args.allow_p3)
        if data.context.field.p == 3 and inst >= 12:
            exp, extra = {}, {"row": "none"}
        else:
            row = table_row(inst, q)
            exp = _ingleton_expected(expected_profile(inst, q))
            extra = {"row": row}
            if row in ("8'", "13'"):
                extra["table_difference"] = expected_difference(inst, q)
        head = {"family": "gl2", "q": q, "instance": inst, "group": data.tuple[0].root.label}
        return _family_report(head, data.tuple, exp, True, extra)
    if kind == "pgln":
        n, q, which = args.n, args.q, args.kind
        if which == "subspace":
            tup = pgln_subspace_tuple(n, q, cap=_cap(args))
        else:
            tup = pgln_points_tuple(n, q, dependent=which == "dep", cap=_cap(args))
        exp = {alpha_key(a): v for a, v in pgln_expected_orders(n, q, which).items()}
        flag, ratio = pgln_predicted(n, q, which)
        rep = ingleton_check(order_profile(tup))
        head = {"family": "pgln", "n": n, "q": q, "kind": which, "group": tup[0].root.label}
        extra = {"predicted_violated": flag, "predicted_ratio": ratio}
        return _family_report(head, tup, exp, rep.violated == flag and rep.ratio == ratio, extra)
    if kind == "twotrans":
        G = parse_group(args.group)
        pts = [parse_point(G, x) for x in (args.a, args.b, args.c)]
        setup = two_transitive_setup(G, *pts)
        tup, predicted = two_transitive_tuple(setup)
        exp = _ingleton_expected(twotrans_expected(G.order, setup.l, setup.k, setup.d))
        rep = ingleton_check(order_profile(tup))
        head = {"family": "twotrans", "group": G.label, "l": setup.l, "k": setup.k, "d": setup.d, "c": setup.c}
        pr = predicted_ratio(setup)
        extra = {"predicted_violated": predicted, "predicted_ratio": pr}
        return _family_report(head, tup, exp, rep.violated == predicted and rep.ratio == pr, extra)
    raise UsageError(f"unknown family {kind!r}")  # pragma: no cover


def parse_point(G: Group, text: str):
    """Points are 1-based integers for permutation groups and coordinate
    lists such as ``0,1`` or ``<0,1>`` for projective groups."""
    a = G.arith
    if isinstance(a, PermArith):
        try:
            x = int(text) - 1
        except ValueError:
            raise UsageError(f"bad point {text!r}") from None
        if not 0 <= x < a.degree:
            raise UsageError(f"point {text} is out of range")
        return x
    if isinstance(a, MatrixArith):
        f = a.field
        coords = [f.parse(c) for c in text.strip("<>()").split(",")]
        if len(coords) != a.n:
            raise UsageError(f"point {text!r} needs {a.n} coordinates")
        return ProjectivePoint.of(f, coords)
    raise UsageError("this group has no natural points")


# -- simulate --------------------------------------------------------------------


def _trace_line(G, spec, tr) -> Line:
    ln: Line = {"x": G.fmt(tr.witness)}
    for s in spec.sources:
        ln[s] = G.fmt(tr.sources[s].rep)
    for e in spec.edges:
        ln[e.name] = G.fmt(tr.edges[e.name].rep)
    for (s, t), ok in tr.decode_ok.items():
        ln[f"{s}@{t}"] = G.fmt(tr.decoded[(s, t)].rep)
    ln["decode"] = "ok" if tr.ok else "fail"
    return ln


def cmd_simulate(args) -> tuple[list[Line], int]:
    spec = NetworkSpec.load(args.network)
    code = GroupCode.load(args.code)
    G = code.group
    val = validate_code(spec, code)
    lines: list[Line] = [{"r1": val.r1, "r2": val.r2, "r3": val.r3, "sources_in_edges": val.sources_in_edges}]
    if not (val.r2 and val.r3):
        lines.append({"error": "code requirements fail", "decode": "fail"})
        return lines, 1
    if args.exhaustive:
        traces = simulate_all(spec, code, jobs=args.jobs)
    else:
        x = G.parse(args.x) if args.x else G.identity
        if x not in G:
            raise UsageError(f"{args.x} is not an element of {G.label}")
        traces = [simulate(spec, code, source_symbols(code, spec, x), validation=val)]
    lines += [_trace_line(G, spec, tr) for tr in traces]
    bad = sum(not tr.ok for tr in traces)
    lines.append({"tuples": len(traces), "failures": bad})
    return lines, 1 if bad else 0


# -- verify-suite ------------------------------------------------------------------


def cmd_verify_suite(args) -> tuple[list[Line], int]:
    from .suite import CRITERIA, run_suite

    numbers = None
    if args.only:
        known = {c[0] for c in CRITERIA}
        try:
            numbers = [int(x) for x in args.only.split(",")]
        except ValueError:
            raise UsageError(f"--only expects criterion numbers, got {args.only!r}") from None
        if not set(numbers) <= known:
            raise UsageError(f"criteria are numbered 1-{max(known)}")
    results = run_suite(numbers)
    lines = []
    for r in results:
        ln: Line = {"criterion": r.number, "name": r.name, "result": "pass" if r.ok else "fail"}
        if r.detail:
            ln["failures"] = len(r.detail)
        lines.append(ln)
    failed = [r for r in results if not r.ok]
    lines.append({"passed": len(results) - len(failed), "failed": len(failed)})
    if failed and args.format == "text":
        for r in failed:
            for d in r.detail:
                print(f"# criterion {r.number}: {d}", file=sys.stderr)
    return lines, 1 if failed else 0


# -- parser ----------------------------------------------------------------------------


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS
    p.add_argument("--jobs", type=_positive, default=d if suppress else 1, help="worker processes")
    p.add_argument("--format", choices=("text", "json"), default=d if suppress else "text")
    p.add_argument("--cap", type=_positive, default=d if suppress else None, help="size cap for enumerations")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ingleton", description="Ingleton-violating subgroup tuples and group network codes.")
    p.add_argument("--version", action="version", version=__version__)
    _add_globals(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("search", help="find all violating 4-tuples of subgroups")
    _add_globals(s, suppress=True)
    s.add_argument("group")
    s.add_argument("--unpruned", action="store_true", help="disable all screening conditions")
    s.add_argument("--without", type=int, action="append", choices=range(1, 8), metavar="N")
    s.add_argument("--conjugacy-reduced", action="store_true", help="one record per conjugacy class")
    s.set_defaults(func=cmd_search)

    f = sub.add_parser("family", help="build and check an explicit family member")
    _add_globals(f, suppress=True)
    fam = f.add_subparsers(dest="family", required=True, parser_class=_Parser)
    a = fam.add_parser("pgl2")
    a.add_argument("q", type=int)
    b = fam.add_parser("gl2")
    b.add_argument("q", type=int)
    b.add_argument("instance", type=int)
    b.add_argument("--allow-p3", action="store_true", help="also build instances 12-15 when p = 3")
    c = fam.add_parser("pgln")
    c.add_argument("n", type=int)
    c.add_argument("q", type=int)
    c.add_argument("kind", choices=("indep", "dep", "subspace"))
    d = fam.add_parser("twotrans")
    d.add_argument("group")
    d.add_argument("a")
    d.add_argument("b")
    d.add_argument("c")
    for x in (a, b, c, d):
        _add_globals(x, suppress=True)
    f.set_defaults(func=cmd_family)

    m = sub.add_parser("simulate", help="run a group network code")
    _add_globals(m, suppress=True)
    m.add_argument("network")
    m.add_argument("code")
    m.add_argument("--exhaustive", action="store_true", help="every admissible source tuple")
    m.add_argument("--x", help="common source representative (default: identity)")
    m.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify-suite", help="run the acceptance battery")
    _add_globals(v, suppress=True)
    v.add_argument("--only", help="comma-separated criterion numbers")
    v.set_defaults(func=cmd_verify_suite)

    o = sub.add_parser("orders", help="order profile of a subgroup tuple")
    _add_globals(o, suppress=True)
    o.add_argument("group")
    o.add_argument("gens", nargs="+", help="generator lists such as [(1,2);(3,4,5)]")
    o.set_defaults(func=cmd_orders)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines, status = args.func(args)
    except (UsageError, IngletonError, OSError) as e:
        print(f"ingleton: error: {e}", file=sys.stderr)
        return 2
    emit(lines, args.format)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Group network codes on acyclic networks.

Every source and edge t carries a coset of a subgroup G_t. An edge is
encoded by intersecting the cosets arriving at its tail and mapping the
result onto the unique G_e-coset containing it; a sink decodes a source the
same way. Cosets are stored by their smallest element.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from itertools import product
from math import prod
from multiprocessing import get_context
from pathlib import Path

from .errors import CodeRequirementError, GroupError, NetworkError, SourceSymbolError
from .ffield import Field, field_of_order
from .groups import (
    Group,
    ProductGroup,
    Subgroup,
    closure,
    cyclic_group,
    direct_product,
    general_linear_group,
    intersect_all,
    parse_generators,
    parse_group,
    product_subgroup,
    projective_linear_group,
)
from .ingleton import OrderProfile, all_alphas, order_profile

# -- networks ----------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    name: str
    tail: str
    head: str


@dataclass
class NetworkSpec:
    nodes: list[str]
    edges: list[Edge]
    sources: list[str]
    demands: dict[str, list[str]]

    def __post_init__(self):
        names = set(self.nodes)
        if len(names) != len(self.nodes):
            raise NetworkError("duplicate node name")
        enames = [e.name for e in self.edges]
        if len(set(enames)) != len(enames):
            raise NetworkError("duplicate edge name")
        if names & set(enames):
            raise NetworkError("edge and node names must be distinct")
        for e in self.edges:
            if e.tail not in names or e.head not in names:
                raise NetworkError(f"edge {e.name} uses an undeclared node")
        for s in self.sources:
            if s not in names:
                raise NetworkError(f"source {s} is not a node")
        if len(set(self.sources)) != len(self.sources):
            raise NetworkError("duplicate source")
        for s, sinks in self.demands.items():
            if s not in self.sources:
                raise NetworkError(f"demand from {s}, which is not a source")
            for t in sinks:
                if t not in names:
                    raise NetworkError(f"demand sink {t} is not a node")
        self.edge_order = self._topological_edges()
        for s, sinks in self.demands.items():
            reach = self.reachable(s)
            for t in sinks:
                if t not in reach:
                    raise NetworkError(f"sink {t} cannot be reached from source {s}")

    @property
    def edge_map(self) -> dict[str, Edge]:
        return {e.name: e for e in self.edges}

    def in_edges(self, v: str) -> list[str]:
        return [e.name for e in self.edges if e.head == v]

    def node_inputs(self, v: str) -> list[str]:
        """I(v): the in-edges of v, preceded by v's own source symbol."""
        return ([v] if v in self.sources else []) + self.in_edges(v)

    def edge_inputs(self, e: str) -> list[str]:
        """I(e): everything available at the tail of e."""
        return self.node_inputs(self.edge_map[e].tail)

    @property
    def terms(self) -> list[str]:
        """Sources then edges, in declaration order."""
        return list(self.sources) + [e.name for e in self.edges]

    def _topological_edges(self) -> list[str]:
        ts = TopologicalSorter({e.name: self.in_edges(e.tail) for e in self.edges})
        try:
            return list(ts.static_order())
        except CycleError:
            raise NetworkError("the network has a directed cycle") from None

    def reachable(self, v: str) -> set[str]:
        seen, stack = {v}, [v]
        while stack:
            u = stack.pop()
            for e in self.edges:
                if e.tail == u and e.head not in seen:
                    seen.add(e.head)
                    stack.append(e.head)
        return seen

    def demand_pairs(self) -> list[tuple[str, str]]:
        """(source, sink) pairs in declaration order."""
        return [(s, t) for s in self.sources for t in self.demands.get(s, [])]

    @staticmethod
    def parse(text: str) -> "NetworkSpec":
        nodes, edges, sources, demands = [], [], [], {}
        for no, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            kw, args = line[0], line[1:]
            want = {"node": 1, "edge": 3, "source": 1, "demand": 2}.get(kw)
            if want is None:
                raise NetworkError(f"line {no}: unknown keyword {kw!r}")
            if len(args) != want:
                raise NetworkError(f"line {no}: {kw} takes {want} argument(s)")
            if kw == "node":
                nodes.append(args[0])
            elif kw == "edge":
                edges.append(Edge(*args))
            elif kw == "source":
                sources.append(args[0])
            else:
                demands.setdefault(args[0], []).append(args[1])
        return NetworkSpec(nodes, edges, sources, demands)

    @staticmethod
    def load(path) -> "NetworkSpec":
        return NetworkSpec.parse(Path(path).read_text(encoding="utf-8"))


# -- codes and symbols ---------------------------------------------------------


@dataclass
class GroupCode:
    group: Group
    assignment: dict[str, Subgroup]

    def __getitem__(self, t: str) -> Subgroup:
        try:
            return self.assignment[t]
        except KeyError:
            raise CodeRequirementError(f"no subgroup assigned to {t}") from None

    def subgroups(self, terms) -> list[Subgroup]:
        return [self[t] for t in terms]

    def meet(self, terms) -> Subgroup:
        """Intersection of G_t over ``terms``; the whole group when empty."""
        terms = list(terms)
        if not terms:
            return self.group.whole()
        return intersect_all(self.subgroups(terms))

    @staticmethod
    def parse(text: str) -> "GroupCode":
        G, pending = None, []
        for no, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            kw, _, rest = line.partition(" ")
            rest = rest.strip()
            if kw == "group":
                if G is not None:
                    raise NetworkError(f"line {no}: second group line")
                G = parse_group(rest)
            elif kw == "assign":
                name, _, gens = rest.partition(" ")
                if not name:
                    raise NetworkError(f"line {no}: assign needs a name")
                pending.append((name, gens.strip()))
            else:
                raise NetworkError(f"line {no}: unknown keyword {kw!r}")
        if G is None:
            raise NetworkError("code file has no group line")
        assignment = {}
        for name, gens in pending:
            if name in assignment:
                raise NetworkError(f"{name} assigned twice")
            assignment[name] = closure(G, parse_generators(G, gens), label=name)
        return GroupCode(G, assignment)

    @staticmethod
    def load(path) -> "GroupCode":
        return GroupCode.parse(Path(path).read_text(encoding="utf-8"))


def canonical_rep(G: Group, x, H: Subgroup):
    mul = G.mul
    return min(mul(x, h) for h in H.elements)


@dataclass(frozen=True)
class CodeSymbol:
    """The left coset rep * subgroup, with rep its smallest element."""

    subgroup: Subgroup
    rep: object

    @staticmethod
    def of(G: Group, x, H: Subgroup) -> "CodeSymbol":
        return CodeSymbol(H, canonical_rep(G, x, H))

    def contains(self, G: Group, y) -> bool:
        return G.mul(G.inv(self.rep), y) in self.subgroup

    def elements(self, G: Group) -> frozenset:
        return frozenset(G.mul(self.rep, h) for h in self.subgroup.elements)


def coset_map(G: Group, symbol: CodeSymbol, K2: Subgroup) -> CodeSymbol:
    """xK1 -> xK2 for K1 <= K2."""
    if not symbol.subgroup <= K2:
        raise GroupError("coset map needs K1 contained in K2")
    return CodeSymbol.of(G, symbol.rep, K2)


def intersection_map(G: Group, symbols, meet: Subgroup | None = None) -> CodeSymbol:
    """(xG_i : i in a) -> xG_a. Raises when the cosets share no element."""
    symbols = list(symbols)
    if not symbols:
        raise NetworkError("intersection of no cosets")
    meet = intersect_all([s.subgroup for s in symbols]) if meet is None else meet
    smallest = min(symbols, key=lambda s: s.subgroup.order)
    mul = G.mul
    for h in smallest.subgroup.elements:
        y = mul(smallest.rep, h)
        if all(s.contains(G, y) for s in symbols):
            return CodeSymbol.of(G, y, meet)
    raise SourceSymbolError("the cosets have empty intersection")


def cosets(G: Group, H: Subgroup) -> list[CodeSymbol]:
    """All left cosets of H, sorted by representative."""
    reps = sorted({canonical_rep(G, x, H) for x in G.elements})
    return [CodeSymbol(H, r) for r in reps]


# -- requirements --------------------------------------------------------------


def independence_check(G: Group, sources) -> bool:
    """prod |G_s| == |G|^(k-1) |G_S| for k sources."""
    sources = list(sources)
    if not sources:
        return True
    meet = intersect_all(sources)
    return prod(H.order for H in sources) == G.order ** (len(sources) - 1) * meet.order


@dataclass
class Validation:
    r1: bool
    r2: bool
    r3: bool
    sources_in_edges: bool
    diagnostics: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.r1 and self.r2 and self.r3

    def to_dict(self) -> dict:
        return {
            "r1": self.r1,
            "r2": self.r2,
            "r3": self.r3,
            "sources_in_edges": self.sources_in_edges,
            "diagnostics": list(self.diagnostics),
        }


def validate_code(spec: NetworkSpec, code: GroupCode) -> Validation:
    for t in spec.terms:
        code[t]
    diag = []
    G = code.group
    r1 = independence_check(G, code.subgroups(spec.sources))
    if not r1:
        diag.append("R1: source subgroups are not independent")
    r2 = True
    for e in spec.edge_order:
        if not code.meet(spec.edge_inputs(e)) <= code[e]:
            r2 = False
            diag.append(f"R2: inputs of {e} do not determine it")
    r3 = True
    for s, t in spec.demand_pairs():
        if not code.meet(spec.node_inputs(t)) <= code[s]:
            r3 = False
            diag.append(f"R3: sink {t} cannot decode {s}")
    GS = code.meet(spec.sources)
    contained = all(GS <= code[e.name] for e in spec.edges)
    if r2 and not contained:
        diag.append("R2 holds but G_S is not inside every G_e")  # pragma: no cover
    return Validation(r1, r2, r3, contained, diag)


# -- simulation ----------------------------------------------------------------


@dataclass
class SimulationTrace:
    witness: object
    sources: dict[str, CodeSymbol]
    edges: dict[str, CodeSymbol]
    decoded: dict[tuple[str, str], CodeSymbol]
    decode_ok: dict[tuple[str, str], bool]
    global_ok: bool
    witness_ok: bool

    @property
    def ok(self) -> bool:
        return all(self.decode_ok.values()) and self.global_ok and self.witness_ok

    def symbols(self) -> dict[str, CodeSymbol]:
        return {**self.sources, **self.edges}


def source_symbols(code: GroupCode, spec: NetworkSpec, x) -> dict[str, CodeSymbol]:
    """(xG_s : s in S) for a group element x."""
    return {s: CodeSymbol.of(code.group, x, code[s]) for s in spec.sources}


def simulate(
    spec: NetworkSpec,
    code: GroupCode,
    sources: dict,
    order: list[str] | None = None,
    validation: Validation | None = None,
) -> SimulationTrace:
    """Encode along the edges, decode at every demanded sink and check the
    result against the common-representative and global-map descriptions.

    ``sources`` maps each source to a CodeSymbol or to a group element. When
    the source subgroups are not independent the symbols must share a
    representative, otherwise SourceSymbolError is raised.
    """
    G = code.group
    validation = validate_code(spec, code) if validation is None else validation
    if not (validation.r2 and validation.r3):
        raise CodeRequirementError("; ".join(validation.diagnostics))
    ys: dict[str, CodeSymbol] = {}
    for s in spec.sources:
        if s not in sources:
            raise SourceSymbolError(f"no symbol for source {s}")
        v = sources[s]
        ys[s] = v if isinstance(v, CodeSymbol) else CodeSymbol.of(G, v, code[s])
        if ys[s].subgroup != code[s]:
            raise SourceSymbolError(f"symbol for {s} is not a coset of G_{s}")
    GS = code.meet(spec.sources)
    try:
        theta_s = intersection_map(G, [ys[s] for s in spec.sources], GS)
    except SourceSymbolError:
        if validation.r1:  # pragma: no cover
            raise NetworkError("independent sources produced an empty intersection")
        raise SourceSymbolError("dependent sources: the symbols have no common representative") from None

    order = spec.edge_order if order is None else list(order)
    if sorted(order) != sorted(e.name for e in spec.edges):
        raise NetworkError("edge order must list every edge once")
    sym = dict(ys)
    for e in order:
        inputs = spec.edge_inputs(e)
        missing = [f for f in inputs if f not in sym]
        if missing:
            raise NetworkError(f"edge {e} evaluated before its input {missing[0]}")
        if inputs:
            theta = intersection_map(G, [sym[f] for f in inputs], code.meet(inputs))
            sym[e] = coset_map(G, theta, code[e])
        else:
            sym[e] = CodeSymbol.of(G, G.identity, code[e])
    edges = {e.name: sym[e.name] for e in spec.edges}

    decoded, ok = {}, {}
    for s, t in spec.demand_pairs():
        inputs = spec.node_inputs(t)
        if inputs:
            theta = intersection_map(G, [sym[f] for f in inputs], code.meet(inputs))
        else:
            theta = CodeSymbol.of(G, G.identity, G.whole())
        decoded[(s, t)] = coset_map(G, theta, code[s])
        ok[(s, t)] = decoded[(s, t)] == ys[s]

    global_ok = all(CodeSymbol.of(G, theta_s.rep, code[e]) == edges[e] for e in edges)
    x = theta_s.rep
    witness_ok = all(CodeSymbol.of(G, x, code[t]) == v for t, v in sym.items())
    return SimulationTrace(x, ys, edges, decoded, ok, global_ok, witness_ok)


def source_tuples(spec: NetworkSpec, code: GroupCode, validation: Validation | None = None) -> list[dict]:
    """Every admissible source tuple, in a fixed order.

    With independent sources this is the full product of the alphabets;
    otherwise only tuples (xG_s) coming from a common x are admitted.
    """
    G = code.group
    validation = validate_code(spec, code) if validation is None else validation
    if validation.r1:
        alphabets = [cosets(G, code[s]) for s in spec.sources]
        return [dict(zip(spec.sources, combo)) for combo in product(*alphabets)]
    seen, out = set(), []
    for x in G.elements:
        tup = source_symbols(code, spec, x)
        key = tuple(tup[s].rep for s in spec.sources)
        if key not in seen:
            seen.add(key)
            out.append(tup)
    return sorted(out, key=lambda d: tuple(d[s].rep for s in spec.sources))


_STATE: dict = {}


def _simulate_chunk(chunk):
    spec, code, val = _STATE["args"]
    return [simulate(spec, code, tup, validation=val) for tup in chunk]


def simulate_all(spec: NetworkSpec, code: GroupCode, jobs: int = 1) -> list[SimulationTrace]:
    val = validate_code(spec, code)
    tuples = source_tuples(spec, code, val)
    if jobs <= 1 or len(tuples) < 2 * jobs:
        return [simulate(spec, code, tup, validation=val) for tup in tuples]
    _STATE["args"] = (spec, code, val)
    size = -(-len(tuples) // (4 * jobs))
    chunks = [tuples[i : i + size] for i in range(0, len(tuples), size)]
    with ProcessPoolExecutor(jobs, mp_context=get_context("fork")) as pool:
        return [t for part in pool.map(_simulate_chunk, chunks) for t in part]


# -- entropies of code symbols --------------------------------------------------


def code_char_vector(spec: NetworkSpec, code: GroupCode) -> tuple[list[str], OrderProfile]:
    """Orders |G_a| for index sets a over ``spec.terms`` (1-based)."""
    terms = spec.terms
    return terms, order_profile(code.subgroups(terms), group_order=code.group.order)


def empirical_counts(spec: NetworkSpec, code: GroupCode, alphas=None, traces=None) -> dict[tuple, int]:
    """Number of distinct joint symbol values over all source tuples, for each
    index set. Also checks that every value occurs equally often."""
    terms = spec.terms
    val = validate_code(spec, code)
    if not val.r1:
        raise SourceSymbolError("empirical counts need independent uniform sources")
    traces = simulate_all(spec, code) if traces is None else traces
    alphas = all_alphas(len(terms)) if alphas is None else alphas
    rows = []
    for tr in traces:
        s = tr.symbols()
        rows.append([s[t].rep for t in terms])
    out = {}
    for a in alphas:
        counts: dict = {}
        for r in rows:
            k = tuple(r[i - 1] for i in a)
            counts[k] = counts.get(k, 0) + 1
        if len(set(counts.values())) != 1:
            raise NetworkError(f"symbols {a} are not uniformly distributed")
        out[tuple(a)] = len(counts)
    return out


def lemma_counts_agree(spec: NetworkSpec, code: GroupCode, alphas=None) -> bool:
    """Empirical counts equal |G| / |G_a| for every index set checked."""
    _, prof = code_char_vector(spec, code)
    counts = empirical_counts(spec, code, alphas)
    return all(c * prof[a] == prof.group_order for a, c in counts.items())


# -- linear codes inside group codes ---------------------------------------------


def vector_group(field: Field, dim: int) -> ProductGroup:
    """(F_q^dim, +) as a product of m*dim cyclic groups of order p."""
    return direct_product(*[cyclic_group(field.p) for _ in range(field.m * dim)])


def _rotation(p: int, k: int) -> tuple:
    return tuple((i + k) % p for i in range(p))


def embed_vector(field: Field, v) -> tuple:
    out = []
    for x in v:
        for _ in range(field.m):
            out.append(_rotation(field.p, x % field.p))
            x //= field.p
    return tuple(out)


def unembed_vector(field: Field, g) -> tuple:
    p, m = field.p, field.m
    digits = [r[0] for r in g]
    return tuple(sum(digits[i * m + j] * p**j for j in range(m)) for i in range(len(digits) // m))


def _matvec(field: Field, A, v) -> tuple:
    out = []
    for row in A:
        s = 0
        for a, x in zip(row, v):
            s = field.add(s, field.mul(a, x))
        out.append(s)
    return tuple(out)


def _matmul(field: Field, A, B) -> tuple:
    cols = list(zip(*B)) if B else []
    return tuple(tuple(_matvec(field, [row], c)[0] for c in cols) for row in A)


@dataclass
class LinearEmbedding:
    field: Field
    spec: NetworkSpec
    code: GroupCode
    global_maps: dict[str, tuple]
    decoders: dict[tuple[str, str], tuple]
    dims: dict[str, int]

    @property
    def total_dim(self) -> int:
        return sum(self.dims[s] for s in self.spec.sources)

    def linear_values(self, v) -> dict[str, tuple]:
        """phi_t(v) for every source and edge."""
        return {t: _matvec(self.field, A, v) for t, A in self.global_maps.items()}

    def linear_decode(self, v) -> dict[tuple[str, str], tuple]:
        vals = self.linear_values(v)
        out = {}
        for (s, t), D in self.decoders.items():
            inp = [x for f in self.spec.node_inputs(t) for x in vals[f]]
            out[(s, t)] = _matvec(self.field, D, inp)
        return out

    def psi(self, t: str, symbol: CodeSymbol) -> tuple:
        """v + W_t -> phi_t(v)."""
        return _matvec(self.field, self.global_maps[t], unembed_vector(self.field, symbol.rep))

    def agrees(self, v) -> bool:
        """Group-code trace and linear evaluation match at the source vector v."""
        x = embed_vector(self.field, v)
        tr = simulate(self.spec, self.code, source_symbols(self.code, self.spec, x))
        vals = self.linear_values(v)
        if not tr.ok:
            return False
        for t, sym in tr.symbols().items():
            if self.psi(t, sym) != vals[t]:
                return False
        lin = self.linear_decode(v)
        return all(self.psi(s, tr.decoded[(s, t)]) == lin[(s, t)] for (s, t) in lin)

    def all_vectors(self):
        return product(range(self.field.q), repeat=self.total_dim)


def linear_embed(
    field: Field,
    spec: NetworkSpec,
    dims: dict[str, int],
    local: dict[str, tuple],
    decoders: dict | None = None,
) -> LinearEmbedding:
    """Turn a linear code into a group code on the additive group of V.

    ``local[e]`` is the matrix sending the stacked inputs I(e) (in the order
    of ``spec.edge_inputs``) to the symbol on e. Each G_t is the kernel of
    the global map V -> F_q^(d_t).
    """
    if set(dims) != set(spec.sources):
        raise NetworkError("need a dimension for every source")
    total = sum(dims[s] for s in spec.sources)
    gmaps: dict[str, tuple] = {}
    off = 0
    for s in spec.sources:
        gmaps[s] = tuple(tuple(1 if j == off + i else 0 for j in range(total)) for i in range(dims[s]))
        off += dims[s]
    for e in spec.edge_order:
        A = local.get(e)
        if A is None:
            raise NetworkError(f"no local map for edge {e}")
        stacked = tuple(row for f in spec.edge_inputs(e) for row in gmaps[f])
        if any(len(r) != len(stacked) for r in A):
            raise NetworkError(f"local map of {e} has the wrong number of columns")
        gmaps[e] = _matmul(field, A, stacked) if stacked else tuple(tuple(0 for _ in range(total)) for _ in A)
    for (s, t), D in (decoders or {}).items():
        width = sum(len(gmaps[f]) for f in spec.node_inputs(t))
        if len(D) != dims[s] or any(len(r) != width for r in D):
            raise NetworkError(f"decoder for {s} at {t} has the wrong shape")
    V = vector_group(field, total)
    kernels = {}
    vecs = list(product(range(field.q), repeat=total))
    for t, A in gmaps.items():
        zero = tuple(0 for _ in A)
        kernels[t] = Subgroup(V, [embed_vector(field, v) for v in vecs if _matvec(field, A, v) == zero], label=t)
    return LinearEmbedding(field, spec, GroupCode(V, kernels), gmaps, dict(decoders or {}), dict(dims))


# -- independent source constructions ---------------------------------------------


def _sl(G: Group) -> Subgroup:
    det = G.arith.det
    return Subgroup(G, [g for g in G.elements if det(g) == 1], label="SL")


def make_independent_sources(kind: str, *params) -> tuple[Group, list[Subgroup]]:
    """Known independent source pairs.

    psl_u q      image of SL(2,q) and <U>, U = [[0,-1],[t,0]], in PGL(2,q), q odd
    sl_b q       SL(2,q) and <diag(1,t)> in GL(2,q)
    sl_p q       SL(2,q) and <diag(t,1)> in GL(2,q)
    product H..  in H_1 x ... x H_n, the subgroups with the i-th factor trivial
    square G A B in G x G, the pair A x B and B x A
    """
    if kind in ("psl_u", "sl_b", "sl_p"):
        (q,) = params
        f = field_of_order(q)
        t = f.primitive
        if kind == "psl_u":
            if f.p == 2:
                raise NetworkError("psl_u needs odd characteristic")
            P = projective_linear_group(2, f)
            norm = P.arith.normalize
            GL = general_linear_group(2, f)
            H = Subgroup(P, {norm(g) for g in _sl(GL).elements}, label="PSL")
            U = closure(P, [norm((0, f.neg(1), t, 0))], label="U")
            return P, [H, U]
        G = general_linear_group(2, f)
        gen = (1, 0, 0, t) if kind == "sl_b" else (t, 0, 0, 1)
        return G, [_sl(G), closure(G, [gen], label="B" if kind == "sl_b" else "P")]
    if kind == "product":
        groups = list(params)
        if len(groups) < 2:
            raise NetworkError("product needs at least two factors")
        P = direct_product(*groups)
        subs = []
        for i in range(len(groups)):
            parts = [H.trivial() if j == i else H.whole() for j, H in enumerate(groups)]
            subs.append(product_subgroup(P, parts))
        return P, subs
    if kind == "square":
        G, A, B = params
        P = direct_product(G, G)
        return P, [product_subgroup(P, [A, B]), product_subgroup(P, [B, A])]
    raise NetworkError(f"unknown construction {kind!r}")


# -- the butterfly network ------------------------------------------------------------

DATA = Path(__file__).parent / "data"


def butterfly() -> tuple[NetworkSpec, GroupCode]:
    return NetworkSpec.load(DATA / "butterfly.net"), GroupCode.load(DATA / "butterfly.code")


def butterfly_linear(q: int) -> LinearEmbedding:
    """a on the left, b on the right, a + b down the middle."""
    spec = NetworkSpec.load(DATA / "butterfly.net")
    f = field_of_order(q)
    one, m1 = 1, f.neg(1)
    local = {
        "e1": ((one,),),
        "e2": ((one,),),
        "e3": ((one,),),
        "e4": ((one,),),
        "e5": ((one, one),),
        "e6": ((one,),),
        "e7": ((one,),),
    }
    decoders = {("s2", "t1"): ((m1, one),), ("s1", "t2"): ((m1, one),)}
    return linear_embed(f, spec, {"s1": 1, "s2": 1}, local, decoders)


__all__ = [
    "CodeSymbol",
    "Edge",
    "GroupCode",
    "LinearEmbedding",
    "NetworkSpec",
    "SimulationTrace",
    "Validation",
    "butterfly",
    "butterfly_linear",
    "canonical_rep",
    "code_char_vector",
    "coset_map",
    "cosets",
    "embed_vector",
    "empirical_counts",
    "independence_check",
    "intersection_map",
    "lemma_counts_agree",
    "linear_embed",
    "make_independent_sources",
    "simulate",
    "simulate_all",
    "source_symbols",
    "source_tuples",
    "unembed_vector",
    "validate_code",
    "vector_group",
]

"""Potentials p = alpha*v - beta*e, the G_F[phi] construction and extensions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .critical import critical_edge_set
from .graph import Graph, GraphError, induced_subgraph, is_connected
from .hom import DEFAULT_BUDGET, find_hom

DEFAULT_SCAN_LIMIT = 12


@dataclass(frozen=True)
class PotentialParams:
    alpha: Fraction = Fraction(17)
    beta: Fraction = Fraction(15)

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")


P17_15 = PotentialParams(17, 15)


def potential(g, params: PotentialParams = P17_15) -> Fraction:
    """Exact alpha*v - beta*e. ``g`` may be a Graph or a Subgraph."""
    return params.alpha * g.v - params.beta * g.e


def potential_counts(v: int, e: int, params: PotentialParams = P17_15) -> Fraction:
    return params.alpha * v - params.beta * e


# ------------------------------------------------------------ density checks

def main_bound_value(v: int) -> Fraction:
    """Right-hand side (17v - 2)/15 of the C7 density bound."""
    return Fraction(17 * v - 2, 15)


def basic_density_value(v: int, t: int) -> Fraction:
    return (1 + Fraction(1, 4 * t)) * v + Fraction(1, 3 * t)


def ore_density_value(v: int, t: int) -> Fraction:
    return Fraction(t * (2 * t + 3) * v - (t + 1) * (2 * t - 1), 2 * t * t + 2 * t - 1)


def density_predicates(g: Graph, t: int, basic: bool | None = None) -> dict:
    """Exact density comparisons.

    ``basic`` None computes the basic-density bound only when a vertex of
    degree >= 3 exists; True demands it and raises otherwise.
    """
    if t < 1:
        raise GraphError("t must be positive")
    out = {"v": g.v, "e": g.e, "t": t}
    if t == 3:
        rhs = main_bound_value(g.v)
        out["main_bound"] = {"rhs": str(rhs), "holds": g.e >= rhs, "equality": g.e == rhs}
    has_branch = g.max_degree() >= 3
    if basic and not has_branch:
        raise GraphError("basic-density bound needs a vertex of degree >= 3")
    if has_branch and basic is not False:
        rhs = basic_density_value(g.v, t)
        out["basic_density"] = {"rhs": str(rhs), "holds": g.e >= rhs}
    ore = ore_density_value(g.v, t)
    out["ore_density"] = {"rhs": str(ore), "equality": g.e == ore}
    return out


# ------------------------------------------------------------------ G_F[phi]

@dataclass(frozen=True)
class Subgraph:
    """A subgraph of a host graph, in the host's vertex ids."""
    vertices: frozenset
    edges: frozenset

    def __init__(self, vertices, edges=()):
        es = frozenset((min(a, b), max(a, b)) for a, b in edges)
        vs = frozenset(vertices) | {x for e in es for x in e}
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    @classmethod
    def induced(cls, g: Graph, vertices) -> "Subgraph":
        vs = frozenset(vertices)
        return cls(vs, [e for e in g.edges if e[0] in vs and e[1] in vs])

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    def check_in(self, g: Graph) -> None:
        bad = [x for x in self.vertices if not 0 <= x < g.n]
        if bad:
            raise GraphError(f"vertex {bad[0]} is not in the host graph")
        missing = sorted(self.edges - g.edges)
        if missing:
            raise GraphError(f"edge {missing[0]} is not in the host graph")

    def is_induced_in(self, g: Graph) -> bool:
        return all(e in self.edges for e in g.edges if e[0] in self.vertices and e[1] in self.vertices)

    def to_dict(self) -> dict:
        return {"vertices": sorted(self.vertices), "edges": [list(e) for e in sorted(self.edges)]}


@dataclass
class GFPhi:
    graph: Graph
    vertex_map: tuple          # G vertex -> G_F[phi] vertex
    image_ids: dict            # H vertex in phi(F) -> G_F[phi] vertex
    outside: tuple             # G_F[phi] vertex -> G vertex, for ids below len(outside)


def build_G_F_phi(G: Graph, F: Subgraph, H: Graph, phi: dict) -> GFPhi:
    """Replace F by its image phi(F), keeping every edge from outside F.

    Vertices outside F keep their relative order as ids 0..m-1; the image
    vertices get ids m.. in increasing H order. Edges of G between vertices of
    F that are not edges of F are dropped; pass an induced F to make a
    homomorphism of the result pull back to G.
    """
    F.check_in(G)
    if F.v == 0:
        raise GraphError("F must be nonempty")
    if set(phi) != set(F.vertices):
        raise GraphError("phi must be defined exactly on the vertices of F")
    for x, y in F.edges:
        if not H.has_edge(phi[x], phi[y]):
            raise GraphError(f"phi maps edge {(x, y)} to a non-edge")
    outside = tuple(x for x in range(G.n) if x not in F.vertices)
    m = len(outside)
    image = sorted({phi[x] for x in F.vertices})
    image_ids = {h: m + i for i, h in enumerate(image)}
    vmap = [None] * G.n
    for i, x in enumerate(outside):
        vmap[x] = i
    for x in F.vertices:
        vmap[x] = image_ids[phi[x]]
    es = set()
    for a, b in G.edges:
        fa, fb = a in F.vertices, b in F.vertices
        if fa and fb:
            continue
        es.add((min(vmap[a], vmap[b]), max(vmap[a], vmap[b])))
    for a, b in F.edges:
        u, w = image_ids[phi[a]], image_ids[phi[b]]
        es.add((min(u, w), max(u, w)))
    return GFPhi(Graph(m + len(image), es), tuple(vmap), image_ids, outside)


@dataclass
class ExtensionWitness:
    F: Subgraph
    phi: dict
    G_F_phi: GFPhi
    W: Subgraph            # in G_F[phi] ids
    X: Subgraph            # W restricted to the image vertices, in G_F[phi] ids
    F_prime: Subgraph      # in G ids

    def potentials(self, params: PotentialParams = P17_15) -> dict:
        return {k: potential(getattr(self, k), params) for k in ("F", "W", "X", "F_prime")}

    def identity_holds(self, params: PotentialParams = P17_15) -> bool:
        p = self.potentials(params)
        return p["F_prime"] == p["F"] + p["W"] - p["X"]

    def counts_hold(self) -> bool:
        return (self.F_prime.v == self.F.v + self.W.v - self.X.v
                and self.F_prime.e == self.F.e + self.W.e - self.X.e)

    def to_dict(self, params: PotentialParams = P17_15) -> dict:
        return {
            "F": self.F.to_dict(),
            "phi": {str(k): v for k, v in sorted(self.phi.items())},
            "W": self.W.to_dict(),
            "X": self.X.to_dict(),
            "F_prime": self.F_prime.to_dict(),
            "potentials": {k: str(v) for k, v in self.potentials(params).items()},
            "identity_holds": self.identity_holds(params),
        }


def find_extension(G: Graph, H: Graph, F: Subgraph, phi: dict | None = None,
                   budget: int = DEFAULT_BUDGET) -> ExtensionWitness:
    """Extension F' of F through the extender W of G_F[phi] (phi found if omitted).

    For each W-edge vu with u an image vertex, the cross edge used in F' is
    vw for the smallest w in phi^-1(u) adjacent to v.
    """
    F.check_in(G)
    if F.vertices == frozenset(range(G.n)) and F.edges == G.edges:
        raise GraphError("F must be a proper subgraph of G")
    if phi is None:
        fg, fmap = _as_graph(F)
        sol = find_hom(fg, H, budget)
        if sol is None:
            raise GraphError("F has no homomorphism to H")
        back = {i: x for x, i in fmap.items()}
        phi = {back[i]: sol[i] for i in range(fg.n)}
    gf = build_G_F_phi(G, F, H, phi)
    w_edges = critical_edge_set(gf.graph, H, budget)  # raises if G_F[phi] maps to H
    W = Subgraph((), w_edges)
    if not W.vertices:
        raise GraphError("extender is empty")
    image = set(gf.image_ids.values())
    X = Subgraph(W.vertices & image, [e for e in W.edges if e[0] in image and e[1] in image])
    inv = {}
    for x in sorted(F.vertices):
        inv.setdefault(gf.image_ids[phi[x]], []).append(x)
    fp_edges = set(F.edges)
    for a, b in W.edges:
        ia, ib = a in image, b in image
        if ia and ib:
            continue
        if not ia and not ib:
            fp_edges.add((min(gf.outside[a], gf.outside[b]), max(gf.outside[a], gf.outside[b])))
            continue
        v, u = (b, a) if ia else (a, b)
        gv = gf.outside[v]
        w = next(x for x in inv[u] if G.has_edge(gv, x))
        fp_edges.add((min(gv, w), max(gv, w)))
    fp_vertices = set(F.vertices) | {gf.outside[x] for x in W.vertices if x not in image}
    return ExtensionWitness(F, dict(phi), gf, W, X, Subgraph(fp_vertices, fp_edges))


def _as_graph(F: Subgraph):
    order = sorted(F.vertices)
    pos = {x: i for i, x in enumerate(order)}
    return Graph(len(order), [(pos[a], pos[b]) for a, b in F.edges]), pos


# -------------------------------------------------------------------- scans

def connected_vertex_sets(g: Graph, limit: int):
    """Every connected vertex set of size <= limit exactly once (ESU enumeration)."""
    adj = g.adj

    def extend(sub, ext, nbhd, root):
        yield sub
        if len(sub) == limit:
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            new_ext = set(ext)
            for x in adj[w]:
                if x > root and x not in nbhd:
                    new_ext.add(x)
            yield from extend(sub | {w}, new_ext, nbhd | set(adj[w]), root)

    for r in range(g.n):
        yield from extend(frozenset((r,)), {x for x in adj[r] if x > r}, frozenset(adj[r]) | {r}, r)


def attachment_path_length(g: Graph, vs: frozenset) -> int | None:
    """k when g is obtained from g[vs] by adding a path of length k between two
    distinct vertices of vs with new internal vertices; None otherwise."""
    rest = set(range(g.n)) - vs
    extra = [e for e in g.edges if not (e[0] in vs and e[1] in vs)]
    k = len(extra)
    if k != len(rest) + 1 or k == 0:
        return None
    deg = {}
    for a, b in extra:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    ends = [x for x in deg if x in vs]
    if len(ends) != 2 or any(deg[x] != 1 for x in ends) or any(deg.get(x) != 2 for x in rest):
        return None
    # walk from one end; must reach the other using all extra edges
    nb = {}
    for a, b in extra:
        nb.setdefault(a, []).append(b)
        nb.setdefault(b, []).append(a)
    prev, cur, steps = None, ends[0], 0
    while True:
        nxt = [x for x in nb[cur] if x != prev]
        if not nxt or (steps and cur in vs):
            break
        prev, cur = cur, nxt[0]
        steps += 1
    return k if cur == ends[1] and steps == k else None


def potential_floor(g: Graph, vs: frozenset, sub: Graph) -> tuple[str, int]:
    """Which case of the subgraph-potential floor for a C7 minimum
    counterexample applies to the induced subgraph on ``vs``, and its floor."""
    if len(vs) == g.n:
        return "whole-graph", 3
    k = attachment_path_length(g, vs)
    if k in (3, 4, 5):
        return f"plus-path-{k}", {5: 10, 4: 12, 3: 14}[k]
    if sub.n == 7 and sub.e == 7 and sub.max_degree() == 2 and is_connected(sub):
        return "seven-cycle", 14
    return "other", 15


@dataclass
class ScanResult:
    minimum: Fraction
    argmin: tuple
    examined: int
    floor_violations: list

    def to_dict(self) -> dict:
        return {
            "minimum": str(self.minimum),
            "argmin": list(self.argmin),
            "examined": self.examined,
            "floor_violations": self.floor_violations,
        }


def subgraph_potential_scan(G: Graph, params: PotentialParams = P17_15, max_vertices: int = 7,
                            limit_cap: int = DEFAULT_SCAN_LIMIT, floors: bool = False) -> ScanResult:
    """Minimum potential over connected induced subgraphs with <= max_vertices vertices.

    Induced subgraphs suffice: with beta > 0, adding edges on a fixed vertex
    set only lowers the potential. With ``floors`` each subgraph is compared
    against the floor of its case; violations are reported, never raised.
    """
    if max_vertices > limit_cap:
        raise ValueError(f"limit {max_vertices} exceeds the configured cap {limit_cap}")
    if max_vertices < 1 or G.n == 0:
        raise ValueError("need a nonempty graph and a positive limit")
    best = None
    count = 0
    viol = []
    for vs in connected_vertex_sets(G, max_vertices):
        count += 1
        sub, _ = induced_subgraph(G, sorted(vs))
        p = potential(sub, params)
        key = (p, len(vs), tuple(sorted(vs)))
        if best is None or key < best:
            best = key
        if floors:
            case, floor = potential_floor(G, vs, sub)
            if p < floor:
                viol.append({"vertices": sorted(vs), "potential": str(p), "case": case, "floor": floor})
    viol.sort(key=lambda d: (len(d["vertices"]), d["vertices"]))
    return ScanResult(best[0], best[2], count, viol)

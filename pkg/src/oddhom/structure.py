"""Strings, vertex and cell types/weights, and structural audits.

A *string* is a path whose internal vertices have degree 2 and whose
endpoints have degree >= 3; a k-string has k internal vertices. A *cell* is
a (2t+1)-cycle. Audits here are diagnostics: they report, they do not assume.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError, connected_components, cut_vertices, girth, is_connected

SHORT_STRING_MAX = 2

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


class StructureError(GraphError):
    """The graph lacks the structure needed (low degree, closed strings)."""


def is_short(k: int) -> bool:
    return k <= SHORT_STRING_MAX


@dataclass(frozen=True)
class String:
    a: int
    b: int
    interior: tuple

    @property
    def k(self) -> int:
        return len(self.interior)

    @property
    def closed(self) -> bool:
        return self.a == self.b

    def vertices(self) -> tuple:
        return (self.a,) + self.interior + (self.b,)

    def edges(self) -> set:
        vs = self.vertices()
        return {(min(x, y), max(x, y)) for x, y in zip(vs, vs[1:])}

    def other_end(self, v: int) -> int:
        return self.b if v == self.a else self.a

    def to_dict(self) -> dict:
        return {"ends": [self.a, self.b], "k": self.k, "interior": list(self.interior)}


@dataclass
class StringDecomposition:
    branch_vertices: list
    strings: list
    pure_cycles: list

    def strings_at(self, v: int) -> list:
        return [s for s in self.strings if v in (s.a, s.b)]

    def string_of(self) -> dict:
        """Map each degree-2 vertex on a string to that string."""
        return {x: s for s in self.strings for x in s.interior}

    def shared_short(self, u: int, v: int) -> bool:
        return any(not s.closed and {s.a, s.b} == {u, v} and is_short(s.k) for s in self.strings)

    def to_dict(self) -> dict:
        return {
            "branch_vertices": self.branch_vertices,
            "strings": [s.to_dict() for s in self.strings],
            "pure_cycles": [list(c) for c in self.pure_cycles],
        }


def decompose(g: Graph) -> StringDecomposition:
    low = [u for u in range(g.n) if g.degree(u) <= 1]
    if low:
        raise StructureError(f"vertex {low[0]} has degree {g.degree(low[0])}; minimum degree 2 required")
    branch = [u for u in range(g.n) if g.degree(u) >= 3]
    is_branch = set(branch)
    strings = []
    used = set()
    direct = set()
    for a in branch:
        for w in g.adj[a]:
            if w in is_branch:
                if (min(a, w), max(a, w)) not in direct:
                    direct.add((min(a, w), max(a, w)))
                    strings.append(String(min(a, w), max(a, w), ()))
                continue
            if w in used:
                continue
            chain = []
            prev, cur = a, w
            while cur not in is_branch:
                chain.append(cur)
                x, y = g.adj[cur]
                prev, cur = cur, (y if x == prev else x)
            used.update(chain)
            if cur < a or (cur == a and chain[-1] < chain[0]):
                strings.append(String(cur, a, tuple(reversed(chain))))
            else:
                strings.append(String(a, cur, tuple(chain)))
    cycles = []
    for comp in connected_components(g):
        if all(g.degree(x) == 2 for x in comp):
            start = comp[0]
            seq = [start]
            prev, cur = start, g.adj[start][0]
            while cur != start:
                seq.append(cur)
                x, y = g.adj[cur]
                prev, cur = cur, (y if x == prev else x)
            cycles.append(tuple(seq))
    strings.sort(key=lambda s: (s.a, s.b, s.interior))
    return StringDecomposition(branch, strings, cycles)


@dataclass(frozen=True)
class VertexProfile:
    vertex: int
    degree: int
    type: tuple
    weight: int

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "degree": self.degree, "type": list(self.type), "weight": self.weight}


def vertex_profile(g: Graph, v: int, dec: StringDecomposition | None = None) -> VertexProfile:
    """Type (k1 >= ... >= kd) and weight sum(ki) of a branch vertex."""
    if g.degree(v) < 3:
        raise StructureError(f"vertex {v} has degree {g.degree(v)}; type needs degree >= 3")
    dec = dec or decompose(g)
    at = dec.strings_at(v)
    if any(s.closed for s in at):
        raise StructureError(f"vertex {v} is both ends of a string; its type is undefined")
    ks = tuple(sorted((s.k for s in at), reverse=True))
    return VertexProfile(v, g.degree(v), ks, sum(ks))


def vertex_profiles(g: Graph, dec: StringDecomposition | None = None) -> list[VertexProfile]:
    dec = dec or decompose(g)
    return [vertex_profile(g, v, dec) for v in dec.branch_vertices]


# -------------------------------------------------------------------- cycles

def cycles_of_length(g: Graph, length: int) -> list[tuple]:
    """All cycles with exactly ``length`` vertices, each listed once.

    Canonical form: starts at its smallest vertex, second vertex smaller than last.
    """
    out = []
    adj = g.adj
    for s in range(g.n):
        stack = [(s, [s], {s})]
        while stack:
            u, seq, inside = stack.pop()
            if len(seq) == length:
                if s in adj[u] and seq[1] < seq[-1]:
                    out.append(tuple(seq))
                continue
            for w in adj[u]:
                if w > s and w not in inside:
                    stack.append((w, seq + [w], inside | {w}))
    out.sort()
    return out


def cycle_edges(cyc: tuple) -> set:
    return {(min(x, y), max(x, y)) for x, y in zip(cyc, cyc[1:] + cyc[:1])}


@dataclass
class Cell:
    vertices: tuple
    incident_strings: list = field(default_factory=list)
    degree: int | None = None
    type: tuple | None = None
    weight: int | None = None

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "degree": self.degree,
            "type": list(self.type) if self.type is not None else None,
            "weight": self.weight,
            "incident_strings": [s.to_dict() for s in self.incident_strings],
        }


def find_cells(g: Graph, t: int, dec: StringDecomposition | None = None) -> list[Cell]:
    """All (2t+1)-cycles with their incident strings (strings not inside the
    cycle with an endpoint on it). Degree/type/weight stay None when the graph
    has vertices of degree < 2 and strings are undefined."""
    if t < 1:
        raise GraphError("t must be positive")
    cycles = cycles_of_length(g, 2 * t + 1)
    if dec is None and g.min_degree() >= 2:
        dec = decompose(g)
    cells = []
    for cyc in cycles:
        cell = Cell(cyc)
        if dec is not None:
            vs = set(cyc)
            es = cycle_edges(cyc)
            inc = [s for s in dec.strings if (s.a in vs or s.b in vs) and not s.edges() <= es]
            cell.incident_strings = inc
            cell.degree = len(inc)
            cell.type = tuple(sorted((s.k for s in inc), reverse=True))
            cell.weight = sum(cell.type)
        cells.append(cell)
    return cells


# ------------------------------------------------------------ audit helpers

def long_strings(dec: StringDecomposition, t: int) -> list:
    """Strings with k >= 2t-1 internal vertices (impossible in C_{2t+1}-critical graphs)."""
    return [s for s in dec.strings if s.k >= 2 * t - 1]


def parity_violations(dec: StringDecomposition) -> list:
    """Pairs of distinct strings with the same two ends and the same parity of k."""
    by_ends = {}
    for s in dec.strings:
        if not s.closed:
            by_ends.setdefault((s.a, s.b), []).append(s)
    bad = []
    for group in by_ends.values():
        for s1, s2 in combinations(group, 2):
            if s1.k % 2 == s2.k % 2:
                bad.append((s1, s2))
    return bad


def vertex_weight_bound(t: int, degree: int) -> int:
    return (2 * t - 1) * degree - (2 * t + 1)


def cell_weight_bound(t: int, degree: int) -> int:
    return (2 * t - 1) * degree - (2 * t + 1)


def _cycle_intersection(c1: tuple, c2: tuple):
    vs = set(c1) & set(c2)
    es = cycle_edges(c1) & cycle_edges(c2)
    return vs, es


def _is_path(vs: set, es: set) -> bool:
    if not vs:
        return False
    if len(es) != len(vs) - 1:
        return False
    deg = Counter(x for e in es for x in e)
    if any(d > 2 for d in deg.values()):
        return False
    return is_connected(Graph(len(vs), _compact(vs, es))) if es else len(vs) == 1


def _compact(vs, es):
    pos = {x: i for i, x in enumerate(sorted(vs))}
    return [(pos[a], pos[b]) for a, b in es]


@dataclass
class LemmaResult:
    status: str
    witness: object = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {"status": self.status, "witness": _jsonable(self.witness), "detail": self.detail}


def _jsonable(x):
    if isinstance(x, String):
        return x.to_dict()
    if isinstance(x, (list, tuple, set, frozenset)):
        seq = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(y) for y in seq]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    return x


@dataclass
class LemmaAuditReport:
    t: int
    results: dict

    def status(self, name: str) -> str:
        return self.results[name].status

    def failures(self) -> list[str]:
        return [k for k, r in self.results.items() if r.status == FAILS]

    def to_dict(self) -> dict:
        return {"t": self.t, "lemmas": {k: r.to_dict() for k, r in self.results.items()}}


# Audits that are theorems for every C_{2t+1}-critical graph.
CRITICAL_GRAPH_THEOREMS = ("two_connected", "max_string", "string_parity", "vertex_weight",
                           "strings_in_cells", "cell_weight")
# Statements about a minimum counterexample (t = 3 only); report-only.
MINIMUM_COUNTEREXAMPLE_CLAIMS = ("girth_at_least_7", "cell_degree_at_least_3", "cells_vertex_disjoint",
                                 "cells_edge_disjoint_from_9_cycles", "nine_cycle_intersections")


def audit_lemmas(g: Graph, t: int) -> LemmaAuditReport:
    r: dict[str, LemmaResult] = {}
    cuts = cut_vertices(g)
    if g.n < 3:
        r["two_connected"] = LemmaResult(FAILS, None, "fewer than 3 vertices")
    elif not is_connected(g):
        comps = connected_components(g)
        r["two_connected"] = LemmaResult(FAILS, [c[0] for c in comps], "disconnected")
    elif cuts:
        r["two_connected"] = LemmaResult(FAILS, cuts[0], "cut vertex")
    else:
        r["two_connected"] = LemmaResult(HOLDS)

    dec = None
    if g.min_degree() >= 2:
        dec = decompose(g)
    na = "minimum degree < 2: strings undefined"
    if dec is None:
        for name in ("max_string", "string_parity", "vertex_weight", "strings_in_cells", "cell_weight"):
            r[name] = LemmaResult(NOT_APPLICABLE, None, na)
    else:
        if not dec.strings:
            r["max_string"] = LemmaResult(NOT_APPLICABLE, None, "no branch vertices")
            r["string_parity"] = LemmaResult(NOT_APPLICABLE, None, "no branch vertices")
        else:
            bad = long_strings(dec, t)
            r["max_string"] = LemmaResult(FAILS, bad[0], f"string with k >= {2 * t - 1}") if bad else LemmaResult(HOLDS)
            par = parity_violations(dec)
            r["string_parity"] = LemmaResult(FAILS, list(par[0]), "same ends, same parity") if par else LemmaResult(HOLDS)

        closed = [s for s in dec.strings if s.closed]
        if not dec.branch_vertices:
            r["vertex_weight"] = LemmaResult(NOT_APPLICABLE, None, "no branch vertices")
        elif closed:
            r["vertex_weight"] = LemmaResult(NOT_APPLICABLE, closed[0], "closed string: type undefined")
        else:
            worst = None
            for p in vertex_profiles(g, dec):
                slack = vertex_weight_bound(t, p.degree) - p.weight
                if slack < 0 and (worst is None or slack < worst[0]):
                    worst = (slack, p)
            if worst:
                p = worst[1]
                r["vertex_weight"] = LemmaResult(FAILS, p.to_dict(), f"weight {p.weight} > {vertex_weight_bound(t, p.degree)}")
            else:
                r["vertex_weight"] = LemmaResult(HOLDS)

    cells = find_cells(g, t, dec) if dec is not None else []
    if dec is not None:
        if not cells:
            r["strings_in_cells"] = LemmaResult(NOT_APPLICABLE, None, "no cells")
            r["cell_weight"] = LemmaResult(NOT_APPLICABLE, None, "no cells")
        else:
            both = [(c.vertices, s) for c in cells for s in c.incident_strings
                    if s.a in c.vertices and s.b in c.vertices]
            r["strings_in_cells"] = LemmaResult(FAILS, list(both[0]), "string with both ends on a cell") if both else LemmaResult(HOLDS)
            heavy = [c for c in cells if c.weight > cell_weight_bound(t, c.degree)]
            if heavy:
                c = heavy[0]
                r["cell_weight"] = LemmaResult(FAILS, list(c.vertices), f"cell weight {c.weight} > {cell_weight_bound(t, c.degree)}")
            else:
                r["cell_weight"] = LemmaResult(HOLDS)

    if t != 3:
        for name in MINIMUM_COUNTEREXAMPLE_CLAIMS:
            r[name] = LemmaResult(NOT_APPLICABLE, None, "stated for t = 3 only")
        return LemmaAuditReport(t, r)

    gi = girth(g)
    r["girth_at_least_7"] = LemmaResult(HOLDS) if gi >= 7 else LemmaResult(FAILS, gi, f"girth {gi}")
    if dec is None or not cells:
        r["cell_degree_at_least_3"] = LemmaResult(NOT_APPLICABLE, None, "no cells" if dec is not None else na)
    else:
        low = [c for c in cells if c.degree < 3]
        r["cell_degree_at_least_3"] = (LemmaResult(FAILS, list(low[0].vertices), f"cell of degree {low[0].degree}")
                                       if low else LemmaResult(HOLDS))
    sevens = [c.vertices for c in cells] if dec is not None else cycles_of_length(g, 7)
    nines = cycles_of_length(g, 9)
    if len(sevens) < 2:
        r["cells_vertex_disjoint"] = LemmaResult(NOT_APPLICABLE, None, "fewer than two 7-cycles")
    else:
        hit = next(((a, b) for a, b in combinations(sevens, 2) if set(a) & set(b)), None)
        r["cells_vertex_disjoint"] = (LemmaResult(FAILS, list(hit), "two 7-cycles share a vertex")
                                      if hit else LemmaResult(HOLDS))
    if not sevens or not nines:
        r["cells_edge_disjoint_from_9_cycles"] = LemmaResult(NOT_APPLICABLE, None, "no 7-cycle/9-cycle pair")
    else:
        hit = next(((a, b) for a in sevens for b in nines if cycle_edges(a) & cycle_edges(b)), None)
        r["cells_edge_disjoint_from_9_cycles"] = (LemmaResult(FAILS, list(hit), "7-cycle and 9-cycle share an edge")
                                                  if hit else LemmaResult(HOLDS))
    pairs = [(a, b) for a, b in combinations(nines, 2) if set(a) & set(b)]
    if not pairs:
        r["nine_cycle_intersections"] = LemmaResult(NOT_APPLICABLE, None, "no intersecting 9-cycles")
    else:
        hit = None
        for a, b in pairs:
            vs, es = _cycle_intersection(a, b)
            if not _is_path(vs, es) or len(es) > 2:
                hit = (a, b)
                break
        r["nine_cycle_intersections"] = (LemmaResult(FAILS, list(hit), "intersection is not a path of length <= 2")
                                         if hit else LemmaResult(HOLDS))
    return LemmaAuditReport(t, r)


def structure_report(g: Graph, t: int) -> dict:
    """Decomposition, branch-vertex profiles and cells as one JSON-ready dict."""
    dec = decompose(g)
    profiles = []
    for v in dec.branch_vertices:
        try:
            profiles.append(vertex_profile(g, v, dec).to_dict())
        except StructureError as exc:
            profiles.append({"vertex": v, "degree": g.degree(v), "error": str(exc)})
    return {
        "decomposition": dec.to_dict(),
        "profiles": profiles,
        "cells": [c.to_dict() for c in find_cells(g, t, dec)],
    }

"""Exhaustive search for small C_{2t+1}-critical graphs, and graph6 stream filtering."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .critical import is_critical
from .formats import FormatError, emit_graph6, parse_graph6
from .graph import Graph, GraphError, cycle, is_connected, is_two_connected, odd_girth
from .hom import DEFAULT_BUDGET
from .potential import potential

CANONICAL_MAX_N = 10
ENUMERATE_MAX_N = 8


# ------------------------------------------------------------ canonical form

def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; split order depends only on counts."""
    while True:
        masks = [sum(1 << x for x in c) for c in cells]
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {x: tuple(bin(adj[x] & m).count("1") for m in masks) for x in c}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
            for k in keys:
                out.append([x for x in c if sig[x] == k])
        cells = out
        if not changed:
            return cells


def _certificate(adj: list[int], order: list[int]) -> int:
    n = len(order)
    bits = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            bits = (bits << 1) | ((row >> order[i]) & 1)
    return bits


def canonical_order(g: Graph) -> list[int]:
    """A vertex order ``order`` such that relabelling ``order[i] -> i`` is canonical."""
    if g.n > CANONICAL_MAX_N:
        raise GraphError(f"canonical form supports n <= {CANONICAL_MAX_N}, got {g.n}")
    if g.n == 0:
        return []
    adj = [sum(1 << y for y in g.adj[x]) for x in range(g.n)]
    by_deg = {}
    for x in range(g.n):
        by_deg.setdefault(g.degree(x), []).append(x)
    start = _refine(adj, [by_deg[d] for d in sorted(by_deg)])
    best = [-1, None]

    def search(cells):
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if cert > best[0]:
                best[0], best[1] = cert, order
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[idx]
        tried = []
        for v in target:
            # transposing twins is an automorphism fixing this node: skip
            if any((adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            rest = [x for x in target if x != v]
            search(_refine(adj, cells[:idx] + [[v], rest] + cells[idx + 1:]))

    search(start)
    return best[1]


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonical relabelling; equal exactly for isomorphic graphs."""
    order = canonical_order(g)
    pos = {x: i for i, x in enumerate(order)}
    return emit_graph6(Graph(g.n, [(pos[a], pos[b]) for a, b in g.edges])).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    return parse_graph6(canonical_form(g))


# ---------------------------------------------------------------- generation

def graphs_by_edge_addition(n: int, expand=None) -> Iterable[Graph]:
    """All graphs on exactly n vertices up to isomorphism, by edge count.

    Each level is built from the previous one by adding a single edge and
    deduplicating by canonical form. ``expand(g)`` False keeps ``g`` in the
    output but does not extend it; sound when the excluded property is
    inherited by supergraphs and all wanted graphs avoid it.
    """
    if n > CANONICAL_MAX_N:
        raise GraphError(f"generation supports n <= {CANONICAL_MAX_N}")
    level = {canonical_form(Graph(n, [])): Graph(n, [])}
    while level:
        nxt = {}
        for key in sorted(level):
            g = level[key]
            yield g
            if expand is not None and not expand(g):
                continue
            for j in range(1, n):
                for i in range(j):
                    if (i, j) in g.edges:
                        continue
                    h = Graph(n, list(g.edges) + [(i, j)])
                    c = canonical_form(h)
                    if c not in nxt:
                        nxt[c] = parse_graph6(c)
        level = nxt


def count_graphs(n: int) -> int:
    return sum(1 for _ in graphs_by_edge_addition(n))


@dataclass
class EnumerationResult:
    t: int
    n_range: tuple
    constraints: dict
    critical: list = field(default_factory=list)          # graph6 strings
    candidates_per_n: dict = field(default_factory=dict)
    critical_per_n: dict = field(default_factory=dict)
    min_potential: Fraction | None = None
    errors: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "n_range": list(self.n_range),
            "constraints": self.constraints,
            "critical": self.critical,
            "candidates_per_n": {str(k): v for k, v in sorted(self.candidates_per_n.items())},
            "critical_per_n": {str(k): v for k, v in sorted(self.critical_per_n.items())},
            "min_potential": str(self.min_potential) if self.min_potential is not None else None,
            "errors": self.errors,
        }


def _check_one(args):
    g6, t, budget = args
    g = parse_graph6(g6)
    return g6, is_critical(g, cycle(2 * t + 1), budget).critical


def _run_checks(items, t, budget, workers):
    jobs = [(g6, t, budget) for g6 in items]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_check_one, jobs, chunksize=64))
    return [_check_one(j) for j in jobs]


def enumerate_critical(t: int, n_max: int, prune: bool = True, n_min: int = 1,
                       budget: int = DEFAULT_BUDGET, workers: int | None = None) -> EnumerationResult:
    """All C_{2t+1}-critical graphs with n_min <= n <= n_max vertices, up to isomorphism.

    Candidates are connected with minimum degree >= 2 (every critical graph on
    more than one vertex is). With ``prune``, graphs with an odd cycle shorter
    than 2t+1 are not extended (such a cycle is itself critical, so only the
    cycle can be) and candidates must be 2-connected.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if n_max > ENUMERATE_MAX_N:
        raise ValueError(f"internal generation supports n_max <= {ENUMERATE_MAX_N}")
    k = 2 * t + 1
    res = EnumerationResult(t, (n_min, n_max), {
        "min_degree": 2, "connected": True, "two_connected": prune,
        "odd_girth_pruning": f"< {k}" if prune else None,
    })
    expand = (lambda g: odd_girth(g) >= k) if prune else None
    for n in range(max(n_min, 1), n_max + 1):
        cands = []
        for g in graphs_by_edge_addition(n, expand):
            if g.n > 1 and (g.min_degree() < 2 or not is_connected(g)):
                continue
            if prune and g.n > 2 and not is_two_connected(g):
                continue
            cands.append(emit_graph6(g))
        res.candidates_per_n[n] = len(cands)
        found = sorted(g6 for g6, ok in _run_checks(cands, t, budget, workers) if ok)
        res.critical_per_n[n] = len(found)
        res.critical += found
    _min_potential(res)
    return res


def _min_potential(res: EnumerationResult) -> None:
    ps = [potential(parse_graph6(g6)) for g6 in res.critical]
    res.min_potential = min(ps) if ps else None


def stream_critical(t: int, lines: Iterable[str | bytes], budget: int = DEFAULT_BUDGET,
                    workers: int | None = None) -> EnumerationResult:
    """Keep the C_{2t+1}-critical graphs of a graph6 stream; bad lines are reported, not fatal."""
    res = EnumerationResult(t, (None, None), {"source": "stream"})
    seen = {}
    for lineno, line in enumerate(lines, 1):
        text = line.decode("ascii", "replace") if isinstance(line, bytes) else line
        if not text.strip():
            continue
        try:
            g = parse_graph6(text.strip())
        except FormatError as exc:
            res.errors.append({"line": lineno, "error": str(exc)})
            continue
        key = canonical_form(g) if g.n <= CANONICAL_MAX_N else emit_graph6(g).encode()
        if key not in seen:
            seen[key] = emit_graph6(g)
    ns = {}
    for g6 in seen.values():
        n = parse_graph6(g6).n
        ns[n] = ns.get(n, 0) + 1
    res.candidates_per_n = ns
    found = sorted(g6 for g6, ok in _run_checks(list(seen.values()), t, budget, workers) if ok)
    for g6 in found:
        n = parse_graph6(g6).n
        res.critical_per_n[n] = res.critical_per_n.get(n, 0) + 1
    res.critical = found
    if seen:
        sizes = [parse_graph6(g).n for g in seen.values()]
        res.n_range = (min(sizes), max(sizes))
    _min_potential(res)
    return res


def default_workers() -> int:
    return os.cpu_count() or 1

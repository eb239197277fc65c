"""Immutable simple graphs on vertices ``0..n-1`` and the elementary operations on them.

Every structural operation that renames vertices also returns a vertex map
(a tuple ``m`` with ``m[old] = new``, or ``None`` for deleted vertices) so that
homomorphisms found on the result can be pulled back to the input.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

INF = math.inf

VertexMap = tuple  # tuple[int | None, ...], indexed by old vertex id


class GraphError(ValueError):
    """Raised when an operation's preconditions on a graph are violated."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    adj: tuple = field(repr=False, compare=False, hash=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} out of range for n={n}")
            es.add(_norm(u, v))
        nbrs = [[] for _ in range(n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nbrs))

    @property
    def v(self) -> int:
        return self.n

    @property
    def e(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def neighborhood(self, vs: Iterable[int]) -> set[int]:
        """Vertices adjacent to at least one vertex of ``vs``."""
        out = set()
        for u in vs:
            out.update(self.adj[u])
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"


# ---------------------------------------------------------------- constructors

def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(num_edges: int) -> Graph:
    return Graph(num_edges + 1, [(i, i + 1) for i in range(num_edges)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n)


def disjoint_union(*graphs: Graph) -> Graph:
    off = 0
    es = []
    for g in graphs:
        es.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, es)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``u`` renamed ``perm[u]``; ``perm`` must be a permutation."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of the vertex set")
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# ----------------------------------------------------------------- traversal

def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [INF] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def cut_vertices(g: Graph) -> list[int]:
    """Articulation points (Hopcroft-Tarjan lowpoints, iterative)."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if parent != root and low[u] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts)


def is_two_connected(g: Graph) -> bool:
    """True for connected graphs on >= 3 vertices without cut vertices."""
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests. BFS from every vertex."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def odd_girth(g: Graph) -> float:
    """Length of a shortest odd cycle, ``math.inf`` for bipartite graphs.

    BFS in the bipartite double cover: the shortest odd closed walk through
    ``s`` is the distance from ``(s, 0)`` to ``(s, 1)``, and the minimum over
    all ``s`` is attained by a cycle.
    """
    best = INF
    for s in range(g.n):
        dist = {(s, 0): 0}
        q = deque([(s, 0)])
        while q:
            u, p = q.popleft()
            d = dist[(u, p)]
            if d + 1 >= best:
                break
            for w in g.adj[u]:
                key = (w, 1 - p)
                if key not in dist:
                    dist[key] = d + 1
                    if key == (s, 1):
                        best = min(best, d + 1)
                    q.append(key)
    return best


def is_bipartite(g: Graph) -> bool:
    return odd_girth(g) == INF


# ----------------------------------------------------------------- operations

def identify(g: Graph, u: int, v: int) -> tuple[Graph, VertexMap]:
    """Merge non-adjacent ``u`` and ``v`` into one vertex, collapsing parallel edges.

    The merged vertex takes the id ``min(u, v)`` in the compacted numbering.
    """
    if u == v:
        raise GraphError("cannot identify a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range: {(u, v)}")
    if g.has_edge(u, v):
        raise GraphError(f"cannot identify adjacent vertices {u} and {v}")
    keep, gone = min(u, v), max(u, v)
    m = []
    for x in range(g.n):
        if x == gone:
            m.append(keep)
        else:
            m.append(x if x < gone else x - 1)
    return Graph(g.n - 1, [(m[a], m[b]) for a, b in g.edges]), tuple(m)


def quotient(g: Graph, classes: Iterable[Iterable[int]]) -> tuple[Graph, VertexMap]:
    """Identify each given class of pairwise non-adjacent vertices to a single vertex."""
    rep = list(range(g.n))
    for cls in classes:
        cls = sorted(set(cls))
        for a in cls:
            for b in cls:
                if a < b and g.has_edge(a, b):
                    raise GraphError(f"cannot identify adjacent vertices {a} and {b}")
        for a in cls:
            rep[a] = cls[0]
    reps = sorted(set(rep))
    new_id = {r: i for i, r in enumerate(reps)}
    m = tuple(new_id[rep[x]] for x in range(g.n))
    return Graph(len(reps), [(m[a], m[b]) for a, b in g.edges]), m


def subdivide_all(g: Graph, s: int) -> Graph:
    """Replace every edge by a path with ``s`` new internal vertices.

    Edges are processed in sorted order; the internal vertices of edge number
    ``i`` get ids ``n + i*s .. n + i*s + s - 1`` listed from the smaller endpoint.
    """
    if s < 0:
        raise GraphError("subdivision count must be nonnegative")
    if s == 0:
        return g
    es = []
    nxt = g.n
    for a, b in g.sorted_edges():
        chain = [a] + list(range(nxt, nxt + s)) + [b]
        nxt += s
        es.extend(zip(chain, chain[1:]))
    return Graph(nxt, es)


def subdivide_edge(g: Graph, edge: Sequence[int], s: int) -> Graph:
    a, b = _norm(*edge)
    if (a, b) not in g.edges:
        raise GraphError(f"edge {(a, b)} not in graph")
    chain = [a] + list(range(g.n, g.n + s)) + [b]
    es = [e for e in g.edges if e != (a, b)]
    es.extend(zip(chain, chain[1:]))
    return Graph(g.n + s, es)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    e = _norm(u, v)
    if e not in g.edges:
        raise GraphError(f"edge {e} not in graph")
    return Graph(g.n, g.edges - {e})


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    drop = {_norm(*e) for e in edges}
    missing = drop - g.edges
    if missing:
        raise GraphError(f"edges not in graph: {sorted(missing)}")
    return Graph(g.n, g.edges - drop)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, VertexMap]:
    keep = sorted(set(vertices))
    for x in keep:
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} not in graph")
    pos = {x: i for i, x in enumerate(keep)}
    es = [(pos[a], pos[b]) for a, b in g.edges if a in pos and b in pos]
    return Graph(len(keep), es), tuple(pos.get(x) for x in range(g.n))


def delete_vertex(g: Graph, u: int) -> tuple[Graph, VertexMap]:
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} not in graph")
    return induced_subgraph(g, [x for x in range(g.n) if x != u])


def delete_vertices(g: Graph, us: Iterable[int]) -> tuple[Graph, VertexMap]:
    drop = set(us)
    for u in drop:
        if not 0 <= u < g.n:
            raise GraphError(f"vertex {u} not in graph")
    return induced_subgraph(g, [x for x in range(g.n) if x not in drop])


def edge_subgraph(g: Graph, edges: Iterable[Sequence[int]]) -> tuple[Graph, VertexMap]:
    """Subgraph formed by ``edges`` and their endpoints, compacted."""
    es = {_norm(*e) for e in edges}
    missing = es - g.edges
    if missing:
        raise GraphError(f"edges not in graph: {sorted(missing)}")
    verts = sorted({x for e in es for x in e})
    pos = {x: i for i, x in enumerate(verts)}
    return Graph(len(verts), [(pos[a], pos[b]) for a, b in es]), tuple(pos.get(x) for x in range(g.n))


def without_isolated(g: Graph) -> tuple[Graph, VertexMap]:
    return induced_subgraph(g, [x for x in range(g.n) if g.adj[x]])

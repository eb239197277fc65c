"""Homomorphism search into a small target graph H.

Two routes decide ``G -> H``:

* ``method="direct"``: one CSP variable per vertex of G, one binary
  constraint per edge, solved by backtracking with maintained arc consistency.
* ``method="contract"`` (default): pendant trees are stripped, every maximal
  chain of degree-2 vertices is replaced by the relation "a walk of that
  length joins the two colours", and only branch vertices are searched.
  Solutions are lifted back by walking H along each chain.

Domains are bitmasks over V(H), so v(H) <= 64.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .graph import Graph, GraphError, is_connected

DEFAULT_BUDGET = 10**8
MAX_TARGET = 64

Homomorphism = tuple  # tuple[int, ...]: colour of each vertex of G


class BudgetExhausted(RuntimeError):
    """The node budget ran out before the search finished; nothing is known."""

    def __init__(self, expansions: int):
        self.expansions = expansions
        super().__init__(f"search budget exhausted after {expansions} expansions")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_target(H: Graph) -> None:
    if H.n > MAX_TARGET:
        raise GraphError(f"target has {H.n} vertices; at most {MAX_TARGET} supported")


@lru_cache(maxsize=None)
def neighbour_masks(H: Graph) -> tuple[int, ...]:
    _check_target(H)
    return tuple(sum(1 << w for w in H.adj[c]) for c in range(H.n))


def _step(nbr: Sequence[int], mask: int) -> int:
    out = 0
    for c in _bits(mask):
        out |= nbr[c]
    return out


def is_homomorphism(G: Graph, H: Graph, phi: Sequence[int]) -> bool:
    if len(phi) != G.n or any(not 0 <= c < H.n for c in phi):
        return False
    return all(H.has_edge(phi[u], phi[v]) for u, v in G.edges)


# ------------------------------------------------------------ extension sets

def extension_set(H: Graph, start_color: int, path_edge_count: int) -> frozenset:
    """Colours the far end of a path with ``path_edge_count`` edges can take
    when its first vertex is coloured ``start_color``."""
    if not 0 <= start_color < H.n:
        raise GraphError(f"start colour {start_color} not a vertex of the target")
    if path_edge_count < 0:
        raise GraphError("path length must be nonnegative")
    if not is_connected(H):
        raise GraphError("target must be connected")
    return frozenset(_bits(reach_table(H, path_edge_count)[start_color]))


def cycle_extension_set(n: int, start_color: int, path_edge_count: int) -> frozenset:
    """Closed form for H = C_n: displacements of the right parity and size <= L."""
    L = path_edge_count
    return frozenset((start_color + d) % n for d in range(-L, L + 1) if (d - L) % 2 == 0)


@lru_cache(maxsize=None)
def reach_table(H: Graph, length: int) -> tuple[int, ...]:
    """``table[c]`` = bitmask of colours reachable from ``c`` by a walk of ``length`` edges."""
    nbr = neighbour_masks(H)
    if length == 0:
        return tuple(1 << c for c in range(H.n))
    prev = reach_table(H, length - 1)
    return tuple(_step(nbr, prev[c]) for c in range(H.n))


# ------------------------------------------------------------- CSP core

def _mac_solve(domains: list[int], arcs: list[list[tuple[int, Sequence[int]]]], budget: int):
    """Backtracking with maintained arc consistency.

    ``arcs[i]`` lists ``(j, table)`` with ``table[c]`` the colours allowed at
    ``j`` when ``i`` has colour ``c``. Returns one colour per variable or None.
    Raises BudgetExhausted after ``budget`` assignments.
    """
    nv = len(domains)
    weight = [len(a) for a in arcs]

    def propagate(doms, queue):
        queue = list(queue)
        pending = set(queue)
        while queue:
            y = queue.pop()
            pending.discard(y)
            dy = doms[y]
            for x, table in arcs[y]:
                sup = 0
                for c in _bits(dy):
                    sup |= table[c]
                nd = doms[x] & sup
                if nd != doms[x]:
                    if not nd:
                        return False
                    doms[x] = nd
                    if x not in pending:
                        pending.add(x)
                        queue.append(x)
        return True

    doms = list(domains)
    if any(d == 0 for d in doms) or not propagate(doms, range(nv)):
        return None

    def choose(doms):
        best = None
        best_key = None
        for i, d in enumerate(doms):
            if d & (d - 1):
                key = (d.bit_count(), -weight[i], i)
                if best_key is None or key < best_key:
                    best, best_key = i, key
        return best

    expansions = 0
    stack = []
    var = choose(doms)
    if var is None:
        return [d.bit_length() - 1 for d in doms]
    stack.append((doms, var, list(_bits(doms[var]))[::-1]))
    while stack:
        doms, var, colours = stack[-1]
        if not colours:
            stack.pop()
            continue
        c = colours.pop()
        expansions += 1
        if expansions > budget:
            raise BudgetExhausted(expansions - 1)
        child = list(doms)
        child[var] = 1 << c
        if not propagate(child, [var]):
            continue
        nxt = choose(child)
        if nxt is None:
            return [d.bit_length() - 1 for d in child]
        stack.append((child, nxt, list(_bits(child[nxt]))[::-1]))
    return None


def _direct(G: Graph, H: Graph, budget: int):
    nbr = neighbour_masks(H)
    full = (1 << H.n) - 1
    live = sum(1 << c for c in range(H.n) if nbr[c])
    domains = [(live if G.adj[u] else full) for u in range(G.n)]
    if G.n and not full:
        return None
    arcs = [[(w, nbr) for w in G.adj[u]] for u in range(G.n)]
    sol = _mac_solve(domains, arcs, budget)
    return None if sol is None else tuple(sol)


# ------------------------------------------------------- string contraction

@dataclass
class ChainString:
    a: int                # G-vertex at one end
    b: int                # G-vertex at the other end (== a for closed strings)
    interior: tuple       # degree-2 vertices from a to b

    @property
    def length(self) -> int:
        return len(self.interior) + 1


@dataclass
class ContractedInstance:
    source: Graph
    target: Graph
    variables: tuple                      # G-vertex id of each CSP variable
    domains: list                         # unary constraint (bitmask) per variable
    constraints: dict                     # (i, j), i < j -> table over colours of i
    strings: list = field(default_factory=list)
    cycles: list = field(default_factory=list)     # pure cycles, anchor first
    stripped: list = field(default_factory=list)   # (vertex, attachment), in strip order
    roots: list = field(default_factory=list)      # vertices left isolated by stripping
    isolated: list = field(default_factory=list)   # vertices isolated in G

    def relation(self, i: int, j: int) -> set:
        """The binary constraint between variables i and j as a set of colour pairs."""
        if i > j:
            return {(y, x) for x, y in self.relation(j, i)}
        table = self.constraints[(i, j)]
        return {(x, y) for x in range(self.target.n) for y in _bits(table[x])}


def _strip_pendants(G: Graph):
    alive = [set(a) for a in G.adj]
    stripped = []
    queue = [u for u in range(G.n) if len(alive[u]) == 1]
    while queue:
        x = queue.pop()
        if len(alive[x]) != 1:
            continue
        (y,) = alive[x]
        alive[x].clear()
        alive[y].discard(x)
        stripped.append((x, y))
        if len(alive[y]) == 1:
            queue.append(y)
    roots = sorted({y for _, y in stripped if not alive[y]} - {x for x, _ in stripped})
    isolated = [u for u in range(G.n) if not G.adj[u]]
    return alive, stripped, roots, isolated


def contract_strings(G: Graph, H: Graph) -> ContractedInstance:
    """Reduce ``G -> H`` to a CSP on branch vertices.

    Pendant vertices are stripped first (they never constrain feasibility when
    every used colour has a neighbour in H); each remaining pure cycle becomes
    a single variable with a unary "closed walk of this length" constraint.
    """
    _check_target(H)
    alive, stripped, roots, isolated = _strip_pendants(G)
    nbr = neighbour_masks(H)
    live = sum(1 << c for c in range(H.n) if nbr[c])
    branch = [u for u in range(G.n) if len(alive[u]) >= 3]
    var_of = {u: i for i, u in enumerate(branch)}
    variables = list(branch)
    domains = [live] * len(branch)
    constraints: dict = {}
    strings: list[ChainString] = []
    seen_interior = set()
    seen_direct = set()

    for a in branch:
        for w in sorted(alive[a]):
            if w in var_of:
                key = (min(a, w), max(a, w))
                if key not in seen_direct:
                    seen_direct.add(key)
                    strings.append(ChainString(a, w, ()))
                continue
            if w in seen_interior:
                continue
            chain = []
            prev, cur = a, w
            while cur not in var_of:
                chain.append(cur)
                nxt = [x for x in alive[cur] if x != prev]
                if len(nxt) != 1:
                    # both neighbours are the previous vertex: impossible in a simple graph
                    raise RuntimeError("malformed chain during contraction")
                prev, cur = cur, nxt[0]
            seen_interior.update(chain)
            strings.append(ChainString(a, cur, tuple(chain)))

    for s in strings:
        table = reach_table(H, s.length)
        i, j = var_of[s.a], var_of[s.b]
        if i == j:
            domains[i] &= sum(1 << c for c in range(H.n) if table[c] >> c & 1)
            continue
        if i > j:
            i, j = j, i  # reach tables of undirected H are symmetric
        old = constraints.get((i, j))
        constraints[(i, j)] = table if old is None else tuple(x & y for x, y in zip(old, table))

    cycles = []
    for u in range(G.n):
        if len(alive[u]) == 2 and u not in seen_interior:
            seq = [u]
            seen_interior.add(u)
            prev, cur = u, min(alive[u])
            while cur != u:
                seq.append(cur)
                seen_interior.add(cur)
                nxt = [x for x in alive[cur] if x != prev]
                prev, cur = cur, nxt[0]
            table = reach_table(H, len(seq))
            variables.append(u)
            domains.append(live & sum(1 << c for c in range(H.n) if table[c] >> c & 1))
            cycles.append(tuple(seq))

    return ContractedInstance(G, H, tuple(variables), domains, constraints,
                              strings, cycles, stripped, roots, isolated)


def solve_contracted(inst: ContractedInstance, budget: int = DEFAULT_BUDGET) -> dict | None:
    """Colour every CSP variable (keyed by G-vertex) consistently, or None if impossible."""
    nbr = neighbour_masks(inst.target)
    if inst.roots and not any(nbr):
        return None
    if inst.isolated and inst.target.n == 0:
        return None
    arcs: list[list] = [[] for _ in inst.variables]
    for (i, j), table in inst.constraints.items():
        arcs[i].append((j, table))
        arcs[j].append((i, table))
    sol = _mac_solve(list(inst.domains), arcs, budget)
    if sol is None:
        return None
    return {inst.variables[i]: c for i, c in enumerate(sol)}


def _walk(nbr: Sequence[int], start: int, end: int, steps: int) -> list[int]:
    """Colours of a walk with ``steps`` edges from ``start`` to ``end`` (inner positions only)."""
    reach = [0] * (steps + 1)
    reach[steps] = 1 << end
    for j in range(steps - 1, -1, -1):
        reach[j] = _step(nbr, reach[j + 1])
    if not reach[0] >> start & 1:
        raise RuntimeError(f"no walk of length {steps} from {start} to {end}: contraction bug")
    out = []
    cur = start
    for j in range(1, steps):
        cand = nbr[cur] & reach[j]
        cur = (cand & -cand).bit_length() - 1
        out.append(cur)
    return out


def lift(inst: ContractedInstance, branch_solution: dict, G: Graph | None = None,
         H: Graph | None = None) -> Homomorphism:
    """Extend a solution on branch vertices to a homomorphism of the whole graph."""
    G = G or inst.source
    H = H or inst.target
    nbr = neighbour_masks(H)
    phi: list[int | None] = [None] * G.n
    for u, c in branch_solution.items():
        phi[u] = c
    for s in inst.strings:
        for x, c in zip(s.interior, _walk(nbr, phi[s.a], phi[s.b], s.length)):
            phi[x] = c
    for seq in inst.cycles:
        c0 = phi[seq[0]]
        for x, c in zip(seq[1:], _walk(nbr, c0, c0, len(seq))):
            phi[x] = c
    live = [c for c in range(H.n) if nbr[c]]
    for r in inst.roots:
        phi[r] = live[0]
    for u in inst.isolated:
        phi[u] = 0
    for x, y in reversed(inst.stripped):
        m = nbr[phi[y]]
        phi[x] = (m & -m).bit_length() - 1
    if any(c is None for c in phi) or not is_homomorphism(G, H, phi):
        raise RuntimeError("lifted map is not a homomorphism: contraction bug")
    return tuple(phi)


# ------------------------------------------------------------------ public

def find_hom(G: Graph, H: Graph, budget: int = DEFAULT_BUDGET,
             method: str = "contract") -> Homomorphism | None:
    """A homomorphism G -> H, or None when none exists.

    None is returned only after a complete search; if ``budget`` assignment
    nodes are not enough, :class:`BudgetExhausted` is raised instead.
    """
    _check_target(H)
    if method == "direct":
        return _direct(G, H, budget)
    if method != "contract":
        raise ValueError(f"unknown method {method!r}")
    inst = contract_strings(G, H)
    sol = solve_contracted(inst, budget)
    return None if sol is None else lift(inst, sol)


def has_hom(G: Graph, H: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    return find_hom(G, H, budget) is not None

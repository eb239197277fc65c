"""H-criticality: no homomorphism to H, while every proper subgraph has one."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, delete_edge, without_isolated
from .hom import DEFAULT_BUDGET, find_hom

CRITICAL = "critical"
NOT_HOM_FREE = "not-hom-free"
NOT_MINIMAL = "not-minimal"


@dataclass
class CriticalityReport:
    is_hom_free: bool
    verdict: str
    failing_edge: tuple | None = None
    witness: tuple | None = None          # a homomorphism when one exists
    isolated_vertices: list = field(default_factory=list)

    @property
    def critical(self) -> bool:
        return self.verdict == CRITICAL

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "is_hom_free": self.is_hom_free,
            "failing_edge": list(self.failing_edge) if self.failing_edge else None,
            "witness": list(self.witness) if self.witness is not None else None,
            "isolated_vertices": self.isolated_vertices,
        }


def is_critical(G: Graph, H: Graph, budget: int = DEFAULT_BUDGET) -> CriticalityReport:
    """Decide H-criticality with |E|+1 homomorphism searches.

    Checking single-edge deletions suffices for graphs without isolated
    vertices: every proper subgraph maps into some G - e. A hom-free graph
    with an isolated vertex is reported not minimal (G minus that vertex
    is a smaller hom-free subgraph).
    """
    phi = find_hom(G, H, budget)
    if phi is not None:
        return CriticalityReport(False, NOT_HOM_FREE, witness=phi)
    isolated = [u for u in range(G.n) if not G.adj[u]]
    if isolated and G.n > 1:
        return CriticalityReport(True, NOT_MINIMAL, isolated_vertices=isolated)
    for u, v in G.sorted_edges():
        if find_hom(delete_edge(G, u, v), H, budget) is None:
            return CriticalityReport(True, NOT_MINIMAL, failing_edge=(u, v))
    return CriticalityReport(True, CRITICAL)


def critical_edge_set(G: Graph, H: Graph, budget: int = DEFAULT_BUDGET) -> list[tuple[int, int]]:
    """Edges of an H-critical subgraph of the hom-free graph G, in input labels.

    Greedy in lexicographic edge order: an edge is dropped whenever the rest
    stays hom-free. Every kept edge was needed at the time it was tested, and
    later deletions only shrink the graph, so the result is critical.
    """
    if find_hom(G, H, budget) is not None:
        raise ValueError("graph admits a homomorphism to the target; no critical subgraph")
    if G.e == 0:
        # only the null target leaves an edgeless graph hom-free; keep one vertex
        return []
    cur = G
    for u, v in G.sorted_edges():
        trial = delete_edge(cur, u, v)
        if find_hom(trial, H, budget) is None:
            cur = trial
    return cur.sorted_edges()


def extract_critical_subgraph(G: Graph, H: Graph, budget: int = DEFAULT_BUDGET) -> Graph:
    """An H-critical subgraph of G, compacted to ids ``0..k-1`` in the original order."""
    edges = critical_edge_set(G, H, budget)
    sub, _ = without_isolated(Graph(G.n, edges))
    return sub

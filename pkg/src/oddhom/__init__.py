"""Homomorphisms of graphs into odd cycles, C_{2t+1}-critical graphs and their density."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, complete, cycle, girth, odd_girth, path, subdivide_all
from .hom import BudgetExhausted, extension_set, find_hom, has_hom, is_homomorphism
from .critical import CriticalityReport, extract_critical_subgraph, is_critical
from .potential import PotentialParams, potential

__all__ = [
    "BudgetExhausted", "CriticalityReport", "Graph", "GraphError", "PotentialParams",
    "complete", "cycle", "extension_set", "extract_critical_subgraph", "find_hom", "girth",
    "has_hom", "is_critical", "is_homomorphism", "odd_girth", "path", "potential", "subdivide_all",
]

"""Exact criticality checks for small hypergraphs.

Weak chromatic number, transversal number, 2-colouring certificates and
set-pair (Bollobas) audits on hypergraphs with at most 30 vertices.
"""

from hypercrit.core import Graph, Hypergraph, MAX_VERTICES
from hypercrit.color import KColoring, TwoColoring
from hypercrit.corpus import builtin_h9, complete_uniform, fano_plane

__all__ = [
    "Graph",
    "Hypergraph",
    "KColoring",
    "MAX_VERTICES",
    "TwoColoring",
    "builtin_h9",
    "complete_uniform",
    "fano_plane",
]

__version__ = "0.1.0"

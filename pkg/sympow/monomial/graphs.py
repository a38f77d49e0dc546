from __future__ import annotations

from typing import Optional

import networkx as nx

from sympow.monomial.ideal import intersect_all, normalize, unit_ideal
from sympow.monomial.types import MonomialIdeal, PrimeSupport, Ring


def _graph_ring(graph: nx.Graph, ring: Optional[Ring]) -> tuple[Ring, dict]:
    nodes = sorted(graph.nodes)
    if ring is None:
        ring = Ring.of_size(len(nodes))
    return ring, {node: i for i, node in enumerate(nodes)}


def edge_ideal(graph: nx.Graph, ring: Optional[Ring] = None) -> MonomialIdeal:
    """
    The squarefree ideal generated by x_u·x_v for every edge uv.
    """
    ring, index = _graph_ring(graph, ring)
    gens = []
    for u, v in graph.edges:
        m = [0] * ring.ngens
        m[index[u]] = 1
        m[index[v]] = 1
        gens.append(m)
    return normalize(gens, ring)


def cover_ideal(graph: nx.Graph, ring: Optional[Ring] = None) -> MonomialIdeal:
    """
    The intersection of the primes (x_u, x_v) over all edges uv.
    """
    ring, index = _graph_ring(graph, ring)
    if not graph.number_of_edges():
        return unit_ideal(ring)
    primes = [
        PrimeSupport.of((index[u], index[v])).as_ideal(ring) for u, v in graph.edges
    ]
    return intersect_all(primes, ring)


def pairs_ideal(n: int) -> MonomialIdeal:
    """
    ∩_{i<j} (x_i, x_j): the cover ideal of the complete graph on n vertices.
    """
    return cover_ideal(nx.complete_graph(n))

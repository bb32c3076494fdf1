"""Linear-time existence decision for non-separating s-t paths.

On a connected chordal graph a non-separating s-t path exists exactly when
no bridge separates s from t, and in that case any fewest-edges s-t path is
itself non-separating. Both facts together reduce the decision problem to
bridge finding plus breadth-first search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DisconnectedError, NotChordalError
from .graph import (Graph, Path, bfs_parents, bridges, build_graph,
                    extract_path, is_chordal, is_connected)


@dataclass
class Region:
    """Bridge-free region around a start vertex, with both vertex mappings."""

    graph: Graph
    to_region: dict[int, int]     # original id -> region id
    to_original: list[int]        # region id -> original id

    def __contains__(self, original_vertex: int) -> bool:
        return original_vertex in self.to_region


def prune_to_bridge_free_region(g: Graph, s: int) -> Region:
    """Subgraph of vertices reachable from s without traversing any bridge.

    The region is induced (no bridge joins two region vertices) and keeps
    the original relative edge order, so adjacency-order tie-breaking is
    unchanged. On a connected chordal input the result is connected,
    chordal, and bridge-free.
    """
    bridge_ids = bridges(g)
    seen = bytearray(g.n)
    seen[s] = 1
    stack = [s]
    while stack:
        u = stack.pop()
        for v, eid, _w in g.adj[u]:
            if eid in bridge_ids or seen[v]:
                continue
            seen[v] = 1
            stack.append(v)
    to_original = [v for v in range(g.n) if seen[v]]
    to_region = {v: i for i, v in enumerate(to_original)}
    edge_list = [(to_region[u], to_region[v], w)
                 for u, v, w in g.edges
                 if seen[u] and seen[v]]
    return Region(build_graph(len(to_original), edge_list), to_region, to_original)


def decide(g: Graph, s: int, t: int, validate: bool = True
           ) -> tuple[bool, Optional[Path]]:
    """Existence of a non-separating s-t path, with a witness when it exists.

    The witness is the breadth-first fewest-edges path inside the bridge-free
    region of s, tie-broken by adjacency order.
    """
    if s == t:
        raise ValueError("s and t must be distinct")
    if validate:
        if not is_connected(g):
            raise DisconnectedError("decide requires a connected graph")
        ok, _peo = is_chordal(g)
        if not ok:
            raise NotChordalError("decide requires a chordal graph")
    region = prune_to_bridge_free_region(g, s)
    if t not in region:
        return False, None
    rs, rt = region.to_region[s], region.to_region[t]
    _depth, parent = bfs_parents(region.graph, rs)
    witness = extract_path(region.graph, parent, rs, rt)
    if witness is None:
        raise DisconnectedError("bridge-free region unexpectedly disconnected")
    verts = tuple(region.to_original[v] for v in witness.vertices)
    return True, Path.from_vertices(g, verts)

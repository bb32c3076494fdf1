"""Shortest s-t path that avoids a set of normal separator paths.

The search runs on a layered directed graph holding up to two copies of
each vertex: the low copy means the walk is not currently committed to any
avoided path, the high copy of an inner vertex means the walk has covered
the whole prefix of its path up to here and must bail out before the tail.
Head edges force entry into the high layer, tail edges are unreachable from
it, and left/right reach tables cut every detour that would sneak back onto
an already-traversed prefix. Members of the avoid set must be pairwise
edge-disjoint and inner-vertex-disjoint; violations abort loudly because
they mean an upstream bug, not a recoverable condition.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalInconsistencyError
from .graph import Graph, Path, biconnected_components, shortest_path


class _Member:
    __slots__ = ("verts", "vset", "pos", "edge_ids")

    def __init__(self, verts: tuple[int, ...], vset: frozenset[int],
                 pos: dict[int, int], edge_ids: list[int]):
        self.verts = verts
        self.vset = vset
        self.pos = pos
        self.edge_ids = edge_ids


def _prepare_members(g: Graph, x_paths: Sequence[tuple[int, ...]]
                     ) -> tuple[list[_Member], dict[int, tuple[int, int]],
                                dict[int, tuple[int, int]]]:
    members: list[_Member] = []
    inner_of: dict[int, tuple[int, int]] = {}
    edge_on: dict[int, tuple[int, int]] = {}
    for pid, verts in enumerate(x_paths):
        if len(verts) < 4 or len(set(verts)) != len(verts):
            raise InternalInconsistencyError(f"avoid-set member {verts} is not a simple >2-edge path")
        pos = {v: i for i, v in enumerate(verts)}
        eids = []
        for k, (a, b) in enumerate(zip(verts, verts[1:])):
            eid = g.edge_id(a, b)
            if eid is None:
                raise InternalInconsistencyError(f"avoid-set member has non-edge {a}-{b}")
            if eid in edge_on:
                raise InternalInconsistencyError("avoid-set members share an edge")
            edge_on[eid] = (pid, k)
            eids.append(eid)
        for i in range(1, len(verts) - 1):
            v = verts[i]
            if v in inner_of:
                raise InternalInconsistencyError("avoid-set members share an inner vertex")
            inner_of[v] = (pid, i)
        members.append(_Member(verts, frozenset(verts), pos, eids))
    return members, inner_of, edge_on


def compute_reach_table(g: Graph, x_paths: Sequence[tuple[int, ...]]
                        ) -> dict[tuple[int, int], tuple[int, int]]:
    """Strong-reach window per (member id, off-path neighbor of an inner vertex).

    Entry (pid, u) -> (lo, hi): indices of the lowest and highest vertex of
    member pid strongly path-connected to u. With all avoided edges removed,
    u reaches index i-2 (or i+2) exactly when the surviving edge u-r_i lies
    in a biconnected component containing r_{i-2} (or r_{i+2}); when the
    edge u-r_i itself belongs to another member, u is its head or tail
    neighbor and the member's first chord stands in for it.
    """
    members, inner_of, edge_on = _prepare_members(g, x_paths)
    return _reach_table(g, members, edge_on)


def _reach_table(g: Graph, members: list[_Member],
                 edge_on: dict[int, tuple[int, int]]
                 ) -> dict[tuple[int, int], tuple[int, int]]:
    n = g.n
    madj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v, _w) in enumerate(g.edges):
        if eid in edge_on:
            continue
        madj[u].append((v, eid))
        madj[v].append((u, eid))
    blocks, _cut = biconnected_components(n, madj)
    blk_of_edge = [-1] * g.m
    blk_vsets: list[set[int]] = []
    for b, blk in enumerate(blocks):
        vs: set[int] = set()
        for eid in blk:
            blk_of_edge[eid] = b
            x, y, _w = g.edges[eid]
            vs.add(x)
            vs.add(y)
        blk_vsets.append(vs)

    reach: dict[tuple[int, int], tuple[int, int]] = {}
    for pid, mem in enumerate(members):
        verts = mem.verts
        last = len(verts) - 1
        for i in range(1, last):
            x = verts[i]
            for u, eid, _w in g.adj[x]:
                if u in mem.vset:
                    continue
                lo = hi = i
                ep = edge_on.get(eid)
                if ep is None:
                    vs = blk_vsets[blk_of_edge[eid]]
                    if i >= 2 and verts[i - 2] in vs:
                        lo = i - 2
                    if i + 2 <= last and verts[i + 2] in vs:
                        hi = i + 2
                else:
                    other = members[ep[0]].verts
                    if x == other[0] and u == other[1]:
                        y = other[2]
                    elif x == other[-1] and u == other[-2]:
                        y = other[-3]
                    else:
                        raise InternalInconsistencyError(
                            "avoid-set member crosses another's interior")
                    if y in mem.vset:
                        yi = mem.pos[y]
                        if yi == i - 2:
                            lo = i - 2
                        if yi == i + 2:
                            hi = i + 2
                    else:
                        ce = g.edge_id(x, y)
                        if ce is None or ce in edge_on:
                            raise InternalInconsistencyError(
                                "missing detour chord next to an avoid-set member")
                        vs = blk_vsets[blk_of_edge[ce]]
                        if i >= 2 and verts[i - 2] in vs:
                            lo = i - 2
                        if i + 2 <= last and verts[i + 2] in vs:
                            hi = i + 2
                key = (pid, u)
                cur = reach.get(key)
                if cur is None:
                    reach[key] = (lo, hi)
                else:
                    reach[key] = (min(cur[0], lo), max(cur[1], hi))
    return reach


@dataclass
class AuxGraph:
    """Layered directed graph: aux id v is the low copy, base_n + v the high copy."""

    base_n: int
    adj: list[list[tuple[int, int, int]]]   # aux id -> [(target aux id, weight, source eid)]
    vertex_count: int
    edge_count: int

    def original_vertex(self, aux_id: int) -> int:
        return aux_id % self.base_n

    def level(self, aux_id: int) -> int:
        return aux_id // self.base_n


def build_layered_graph(g: Graph, x_paths: Sequence[tuple[int, ...]],
                        bad: set[int]) -> AuxGraph:
    """Construct the avoidance graph; at most 2|V| vertices and 8|E| edges."""
    members, inner_of, edge_on = _prepare_members(g, x_paths)
    reach = _reach_table(g, members, edge_on)
    n = g.n
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(2 * n)]
    edge_count = 0
    is_bad = bytearray(n)
    for v in bad:
        is_bad[v] = 1
    for u in range(n):
        if is_bad[u]:
            continue
        iu = inner_of.get(u)
        low_u = adj[u]
        high_u = adj[n + u] if iu is not None else None
        for v, eid, w in g.adj[u]:
            if is_bad[v]:
                continue
            iv = inner_of.get(v)
            ep = edge_on.get(eid)

            head_forward = ep is not None and ep[1] == 0 and u == members[ep[0]].verts[0]

            # low -> low: everything except head edges and left-reach-blocked entries
            low_low = not head_forward
            if low_low and iv is not None:
                pidv, idxv = iv
                if u not in members[pidv].vset and reach[(pidv, u)][0] == idxv:
                    low_low = False
            if low_low:
                low_u.append((v, w, eid))
                edge_count += 1

            # low -> high: entry just below the tail, or the head edge itself
            if iv is not None:
                pidv, idxv = iv
                mv = members[pidv]
                if (idxv == len(mv.verts) - 3 and u not in mv.vset) or head_forward:
                    low_u.append((n + v, w, eid))
                    edge_count += 1

            if high_u is None:
                continue
            pidu, idxu = iu
            mu = members[pidu]

            # high -> high: except tail rides, same-path back-steps, right-reach exits
            if iv is not None:
                blocked = (ep is not None and ep[1] == len(members[ep[0]].verts) - 2
                           and u == members[ep[0]].verts[-2])
                if not blocked and idxu >= 2 and (v == mu.verts[idxu - 1] or v == mu.verts[idxu - 2]):
                    blocked = True
                if not blocked and v not in mu.vset and reach[(pidu, v)][1] == idxu:
                    blocked = True
                if not blocked:
                    high_u.append((n + v, w, eid))
                    edge_count += 1

            # high -> low: except avoided-path edges, back-skips, reach-blocked pairs
            blocked = ep is not None
            if not blocked and idxu >= 2 and v == mu.verts[idxu - 2]:
                blocked = True
            if not blocked and iv is not None:
                pidv, idxv = iv
                if u not in members[pidv].vset and reach[(pidv, u)][0] == idxv:
                    blocked = True
            if not blocked and v not in mu.vset and reach[(pidu, v)][1] == idxu:
                blocked = True
            if not blocked:
                high_u.append((v, w, eid))
                edge_count += 1

    lows = n - sum(is_bad)
    highs = sum(1 for v in inner_of if not is_bad[v])
    return AuxGraph(base_n=n, adj=adj, vertex_count=lows + highs, edge_count=edge_count)


def layered_sizes_without_members(g: Graph, bad: set[int]) -> tuple[int, int]:
    """Sizes the layered graph would have with an empty avoid set."""
    lows = g.n - len(bad)
    edge_count = 2 * sum(1 for u, v, _w in g.edges if u not in bad and v not in bad)
    return lows, edge_count


def _aux_dijkstra(aux: AuxGraph, source: int, target: int
                  ) -> Optional[tuple[list[int], int]]:
    """Shortest path in the layered graph; same tie contract as graph.dijkstra."""
    size = 2 * aux.base_n
    dist: list[Optional[int]] = [None] * size
    parent: list[int] = [-1] * size
    done = bytearray(size)
    dist[source] = 0
    heap: list[tuple[int, int]] = [(0, source)]
    adjacency = aux.adj
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = 1
        if u == target:
            break
        for v, w, _eid in adjacency[u]:
            if done[v]:
                continue
            nd = d + w
            dv = dist[v]
            if dv is None or nd < dv:
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    if dist[target] is None or not done[target]:
        return None
    chain = [target]
    while chain[-1] != source:
        chain.append(parent[chain[-1]])
    chain.reverse()
    return chain, dist[target]


def avoid(g: Graph, x_paths: Sequence[tuple[int, ...]], bad: set[int],
          s: int, t: int) -> Optional[Path]:
    """Shortest s->t path containing no avoid-set member and no bad vertex."""
    if s in bad or t in bad:
        raise ValueError("terminal vertices must not be bad")
    if not x_paths:
        # No high copies: the layered graph is the doubled base graph minus
        # bad vertices, where Dijkstra behaves identically.
        return shortest_path(g, s, t, forbidden=bad if bad else None)
    aux = build_layered_graph(g, x_paths, bad)
    hit = _aux_dijkstra(aux, s, t)
    if hit is None:
        return None
    chain, total = hit
    verts = tuple(a % aux.base_n for a in chain)
    path = Path(verts, total)
    _validate_avoid_result(g, x_paths, bad, path)
    return path


def _validate_avoid_result(g: Graph, x_paths: Sequence[tuple[int, ...]],
                           bad: set[int], path: Path) -> None:
    verts = path.vertices
    if len(set(verts)) != len(verts):
        raise InternalInconsistencyError("avoidance search produced a non-simple path")
    if bad and not bad.isdisjoint(verts):
        raise InternalInconsistencyError("avoidance search entered a bad vertex")
    pos = {v: i for i, v in enumerate(verts)}
    for member in x_paths:
        i = pos.get(member[0])
        if i is not None and verts[i:i + len(member)] == member:
            raise InternalInconsistencyError("avoidance search produced a path containing an avoided member")

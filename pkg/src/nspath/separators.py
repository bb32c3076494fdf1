"""Separator-path discovery on the bridge-free working graph.

Three pieces feed the solver's avoid set:

* bad vertices - middle vertices of traversable length-2 separator paths,
  read off the block-cut tree: inside every block on the tree path between
  the terminals, any vertex of block-degree 2 qualifies except the two
  vertices the s-t route passes through (their two block edges can never be
  consecutive on a simple s-t path).
* s-/t-separator paths relative to the bad-avoiding shortest path: found by
  merging alternating path vertices into fat vertices so that all edges of a
  sought separator path become incident to a single merged vertex, then
  scanning per-vertex edge sets inside each biconnected component of the
  merged multigraph.
* separator paths lying on a given simple path: a two-pointer sweep over the
  component labels the path's vertices get once the path's own edges are
  removed.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .errors import InternalInconsistencyError
from .graph import Graph, biconnected_components, block_cut_tree


def compute_bad_vertices(g: Graph, s: int, t: int) -> set[int]:
    """Bad vertices of a connected bridge-free graph for terminals s, t."""
    if s == t:
        raise ValueError("s and t must be distinct")
    bct = block_cut_tree(g)
    node_path = _tree_path(bct, s, t)
    bad: set[int] = set()
    for k, node in enumerate(node_path):
        kind, idx = node
        if kind != "b":
            continue
        entry = node_path[k - 1][1] if k > 0 else s
        exit_ = node_path[k + 1][1] if k + 1 < len(node_path) else t
        block = bct.blocks[idx]
        deg: dict[int, int] = {}
        for eid in block.edge_ids:
            u, v, _w = g.edges[eid]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        for v, d in deg.items():
            if d == 2 and v != entry and v != exit_:
                bad.add(v)
    return bad


def _tree_path(bct, s: int, t: int) -> list[tuple[str, int]]:
    """Node sequence from s's tree node to t's on the block-cut tree."""
    def node_of(v: int) -> tuple[str, int]:
        if v in bct.cut_vertices:
            return ("c", v)
        blocks = bct.vertex_blocks[v]
        if not blocks:
            raise InternalInconsistencyError(f"vertex {v} lies in no block")
        return ("b", blocks[0])

    start, goal = node_of(s), node_of(t)
    if start == goal:
        return [start]
    parent: dict[tuple[str, int], tuple[str, int]] = {start: start}
    queue = [start]
    qi = 0
    while qi < len(queue):
        node = queue[qi]
        qi += 1
        if node == goal:
            break
        kind, idx = node
        if kind == "b":
            nbrs = [("c", v) for v in bct.block_cuts[idx]]
        else:
            nbrs = [("b", b) for b in bct.cut_blocks.get(idx, [])]
        for nxt in nbrs:
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    if goal not in parent:
        raise InternalInconsistencyError("terminals not connected in block-cut tree")
    path = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])
    path.reverse()
    return path


# ---------------------------------------------------------------------------
# S-/T-separator paths


def compute_st_separators(g: Graph, base_path: tuple[int, ...], s: int, t: int
                          ) -> dict[tuple[int, ...], set[str]]:
    """All s-separator and t-separator paths relative to the base path.

    Returns vertex tuples (oriented source-side first) mapped to their
    provenance tags; a path lying entirely on the base path carries both.
    """
    found: dict[tuple[int, ...], set[str]] = {}
    for tag, path in (("s_separator", base_path),
                      ("t_separator", tuple(reversed(base_path)))):
        for parity in (0, 1):
            for verts in _merged_run(g, path, parity):
                key = verts if tag == "s_separator" else tuple(reversed(verts))
                found.setdefault(key, set()).add(tag)
    return found


def _merged_run(g: Graph, path: tuple[int, ...], class_parity: int
                ) -> Iterator[tuple[int, ...]]:
    """One merge pass: fat vertices absorb path vertices of one index parity.

    Merges path vertices two apart (when chord-adjacent) within the parity
    class, and every off-path vertex into its on-path neighbors of that
    parity except the minimum-index one. Candidate separator paths are the
    per-vertex edge sets inside each biconnected component of the quotient
    multigraph.
    """
    n = g.n
    pos: dict[int, int] = {v: i for i, v in enumerate(path)}
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for i in range(len(path) - 2):
        if i % 2 == class_parity and g.edge_id(path[i], path[i + 2]) is not None:
            union(path[i], path[i + 2])
    for u in range(n):
        if u in pos:
            continue
        min_index = None
        for v, _eid, _w in g.adj[u]:
            iv = pos.get(v)
            if iv is not None and (min_index is None or iv < min_index):
                min_index = iv
        if min_index is None:
            continue
        for v, _eid, _w in g.adj[u]:
            iv = pos.get(v)
            if iv is not None and iv != min_index and iv % 2 == class_parity:
                union(u, v)

    qadj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v, _w) in enumerate(g.edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        qadj[ru].append((rv, eid))
        qadj[rv].append((ru, eid))
    blocks, _cut = biconnected_components(n, qadj)

    min_adj = _min_path_neighbor_index(g, pos)
    for blk in blocks:
        owners: dict[int, list[int]] = {}
        for eid in blk:
            u, v, _w = g.edges[eid]
            owners.setdefault(find(u), []).append(eid)
            owners.setdefault(find(v), []).append(eid)
        for eids in owners.values():
            if len(eids) < 3:
                continue
            verts = _edge_set_as_path(g, eids)
            if verts is None:
                continue
            oriented = _validate_source_side(g, pos, min_adj, verts)
            if oriented is not None:
                yield oriented


def _min_path_neighbor_index(g: Graph, pos: dict[int, int]) -> list[Optional[int]]:
    out: list[Optional[int]] = [None] * g.n
    for u in range(g.n):
        best = None
        for v, _eid, _w in g.adj[u]:
            iv = pos.get(v)
            if iv is not None and (best is None or iv < best):
                best = iv
        out[u] = best
    return out


def _edge_set_as_path(g: Graph, eids: list[int]) -> Optional[tuple[int, ...]]:
    """Order an edge id set into a simple path's vertex sequence, if it is one."""
    nbrs: dict[int, list[int]] = {}
    for eid in eids:
        u, v, _w = g.edges[eid]
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    ends = []
    for v, lst in nbrs.items():
        if len(lst) > 2:
            return None
        if len(lst) == 1:
            ends.append(v)
    if len(ends) != 2:
        return None
    verts = [ends[0]]
    prev = None
    cur = ends[0]
    for _ in range(len(eids)):
        options = nbrs[cur]
        nxt = options[0] if options[0] != prev else options[1] if len(options) > 1 else None
        if nxt is None:
            return None
        verts.append(nxt)
        prev, cur = cur, nxt
    if len(set(verts)) != len(verts):
        return None
    return tuple(verts)


def _validate_source_side(g: Graph, pos: dict[int, int],
                          min_adj: list[Optional[int]],
                          verts: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Try both orientations against the source-side separator conditions."""
    for cand in (verts, tuple(reversed(verts))):
        if _is_source_side(g, pos, min_adj, cand):
            return cand
    return None


def _is_source_side(g: Graph, pos: dict[int, int],
                    min_adj: list[Optional[int]], r: tuple[int, ...]) -> bool:
    k = len(r)
    if k < 4:
        return False
    j = pos.get(r[2])
    if j is None:
        return False
    # r[2:] must sit contiguously on the base path, in index order
    for off in range(3, k):
        if pos.get(r[off]) != j + off - 2:
            return False
    p1 = pos.get(r[1])
    if p1 is not None and p1 >= j:
        return False
    p0 = pos.get(r[0])
    if p0 is not None and p0 >= (p1 if p1 is not None else j):
        return False
    if p0 is None and p1 is not None:
        # A traversable path visits r[0] or r[2] first among r's vertices;
        # with r[1] on the base path before r[2] and r[0] off it, the base
        # path itself would hit r[1] first, so no such candidate survives.
        return False
    if not _useful(g, r):
        return False
    # traversable: the head vertex equals or neighbors a path vertex before r[2]
    if p0 is not None:
        return True
    ma = min_adj[r[0]]
    return ma is not None and ma < j


def _useful(g: Graph, r: tuple[int, ...]) -> bool:
    """Every two-step detour is strictly shorter than its chord edge."""
    for i in range(len(r) - 2):
        chord = g.edge_length(r[i], r[i + 2])
        if chord is None:
            continue
        if g.edge_length(r[i], r[i + 1]) + g.edge_length(r[i + 1], r[i + 2]) >= chord:
            return False
    return True


# ---------------------------------------------------------------------------
# Separator paths contained in a simple path


def separator_paths_on_path(g: Graph, path: tuple[int, ...]
                            ) -> list[tuple[int, ...]]:
    """Normal separator paths contained in the given simple path.

    With the path's edges removed, a contained separator path is a maximal
    window whose odd-position vertices share one component and even-position
    vertices share a different one; the sweep keeps the smallest valid window
    start per end index. Windows are kept only when useful with >2 edges.
    """
    L = len(path)
    if L < 2:
        return []
    path_eids = set()
    for a, b in zip(path, path[1:]):
        path_eids.add(g.edge_id(a, b))
    comp = _components_without(g, path_eids)
    bel = [comp[v] for v in path]
    out: list[tuple[int, ...]] = []

    def emit(i: int, j: int) -> None:
        if j - i < 3:
            return
        window = path[i:j + 1]
        if _useful(g, window):
            out.append(window)

    i = 0
    for j in range(1, L):
        if j > 1 and bel[j] != bel[j - 2]:
            if i < j - 1:
                emit(i, j - 1)
            i = j - 1
        if bel[j] == bel[j - 1]:
            i = j
    if i < L - 1:
        emit(i, L - 1)
    return out


def _components_without(g: Graph, removed_eids: set[int]) -> list[int]:
    comp = [-1] * g.n
    label = 0
    for start in range(g.n):
        if comp[start] != -1:
            continue
        comp[start] = label
        stack = [start]
        while stack:
            u = stack.pop()
            for v, eid, _w in g.adj[u]:
                if comp[v] == -1 and eid not in removed_eids:
                    comp[v] = label
                    stack.append(v)
        label += 1
    return comp

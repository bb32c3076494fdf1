"""Immutable weighted undirected graphs plus the shared graph algorithms.

Provides the graph/path types, chordality recognition (lexicographic BFS +
perfect-elimination check), bridges and biconnected components with the
block-cut tree, deterministic Dijkstra/BFS, and the graph text format.

All edge lengths are positive integers and every distance computation uses
exact integer arithmetic; Python integers are unbounded, so no overflow
guard is needed.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DisconnectedError, GraphBuildError, GraphFormatError


class Graph:
    """Simple undirected graph with positive integer edge lengths.

    Treated as immutable after construction. Adjacency lists keep the edge
    insertion order; that order is the tie-breaking substrate for every
    traversal in the package, so it must never be re-sorted.
    """

    __slots__ = ("n", "edges", "adj", "_eindex")

    def __init__(self, n: int, edges: list[tuple[int, int, int]],
                 adj: list[list[tuple[int, int, int]]],
                 eindex: dict[tuple[int, int], int]):
        self.n = n
        self.edges = edges          # eid -> (u, v, length)
        self.adj = adj              # v -> [(neighbor, eid, length), ...] in insertion order
        self._eindex = eindex       # (min(u,v), max(u,v)) -> eid

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._eindex.get((u, v) if u < v else (v, u))

    def edge_length(self, u: int, v: int) -> Optional[int]:
        eid = self.edge_id(u, v)
        return None if eid is None else self.edges[eid][2]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int, int]]) -> Graph:
    """Build a graph from an edge list, assigning edge ids by list position."""
    if n < 0:
        raise GraphBuildError(f"vertex count must be non-negative, got {n}")
    edges: list[tuple[int, int, int]] = []
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    eindex: dict[tuple[int, int], int] = {}
    for u, v, w in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphBuildError(f"edge ({u},{v}) out of range for {n} vertices")
        if u == v:
            raise GraphBuildError(f"self-loop at vertex {u}")
        if w < 1:
            raise GraphBuildError(f"edge ({u},{v}) has non-positive length {w}")
        key = (u, v) if u < v else (v, u)
        if key in eindex:
            raise GraphBuildError(f"parallel edge ({u},{v})")
        eid = len(edges)
        eindex[key] = eid
        edges.append((u, v, w))
        adj[u].append((v, eid, w))
        adj[v].append((u, eid, w))
    return Graph(n, edges, adj, eindex)


class Path:
    """Directed sequence of pairwise-adjacent vertices with a cached length."""

    __slots__ = ("vertices", "length", "_pos")

    def __init__(self, vertices: Sequence[int], length: int):
        self.vertices = tuple(vertices)
        self.length = length
        self._pos: Optional[dict[int, int]] = None

    @classmethod
    def from_vertices(cls, g: Graph, vertices: Sequence[int]) -> "Path":
        verts = tuple(vertices)
        if not verts:
            raise ValueError("a path needs at least one vertex")
        total = 0
        for a, b in zip(verts, verts[1:]):
            w = g.edge_length(a, b)
            if w is None:
                raise ValueError(f"vertices {a} and {b} are not adjacent")
            total += w
        return cls(verts, total)

    def index(self, v: int) -> int:
        if self._pos is None:
            self._pos = {u: i for i, u in enumerate(self.vertices)}
        return self._pos[v]

    def __contains__(self, v: int) -> bool:
        if self._pos is None:
            self._pos = {u: i for i, u in enumerate(self.vertices)}
        return v in self._pos

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def inner_vertices(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def subpath(self, g: Graph, i: int, j: int) -> "Path":
        if not (0 <= i <= j < len(self.vertices)):
            raise IndexError(f"subpath bounds ({i},{j}) out of range")
        return Path.from_vertices(g, self.vertices[i:j + 1])

    def reverse(self) -> "Path":
        return Path(tuple(reversed(self.vertices)), self.length)

    def contains_path(self, other: "Path") -> bool:
        """Directed contiguous containment: other equals some slice of self."""
        return _contains_subsequence(self.vertices, other.vertices)

    def edge_ids(self, g: Graph) -> list[int]:
        out = []
        for a, b in zip(self.vertices, self.vertices[1:]):
            eid = g.edge_id(a, b)
            if eid is None:
                raise ValueError(f"vertices {a} and {b} are not adjacent")
            out.append(eid)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Path) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Path({list(self.vertices)}, length={self.length})"


def _contains_subsequence(hay: tuple[int, ...], needle: tuple[int, ...]) -> bool:
    k = len(needle)
    if k > len(hay):
        return False
    first = needle[0]
    for i, v in enumerate(hay[:len(hay) - k + 1]):
        if v == first and hay[i:i + k] == needle:
            return True
    return False


# ---------------------------------------------------------------------------
# Connectivity


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    adj = g.adj
    while stack:
        u = stack.pop()
        for v, _eid, _w in adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == g.n


# ---------------------------------------------------------------------------
# Chordality: lexicographic BFS + perfect elimination ordering verification


class _Cell:
    __slots__ = ("items", "prev", "next", "split")

    def __init__(self, items: dict):
        self.items = items          # ordered dict of vertices
        self.prev: Optional["_Cell"] = None
        self.next: Optional["_Cell"] = None
        self.split: Optional["_Cell"] = None


def lex_bfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order, deterministic in vertex ids."""
    n = g.n
    head = _Cell(dict.fromkeys(range(n)))
    cell_of: list[Optional[_Cell]] = [head] * n
    order: list[int] = []
    adj = g.adj
    while head is not None:
        if not head.items:
            head = head.next
            if head is not None:
                head.prev = None
            continue
        v = next(iter(head.items))
        del head.items[v]
        cell_of[v] = None
        order.append(v)
        touched: list[_Cell] = []
        for w, _eid, _wt in adj[v]:
            c = cell_of[w]
            if c is None:
                continue
            if c.split is None:
                nc = _Cell({})
                nc.prev = c.prev
                nc.next = c
                if c.prev is not None:
                    c.prev.next = nc
                else:
                    head = nc
                c.prev = nc
                c.split = nc
                touched.append(c)
            c.split.items[w] = None
            del c.items[w]
            cell_of[w] = c.split
        for c in touched:
            c.split = None
            if not c.items:
                # unlink the emptied cell
                if c.prev is not None:
                    c.prev.next = c.next
                else:
                    head = c.next
                if c.next is not None:
                    c.next.prev = c.prev
    return order


def is_chordal(g: Graph) -> tuple[bool, Optional[list[int]]]:
    """Chordality test; on success also returns a perfect elimination ordering.

    A perfect elimination ordering lists vertices so that each one's
    neighbors occurring later in the ordering form a clique.
    """
    n = g.n
    if n == 0:
        return True, []
    order = lex_bfs_order(g)
    peo = list(reversed(order))
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    nbr = [set() for _ in range(n)]
    for u, v, _w in g.edges:
        nbr[u].add(v)
        nbr[v].add(u)
    for v in peo:
        later = [w for w in nbr[v] if pos[w] > pos[v]]
        if not later:
            continue
        anchor = min(later, key=lambda w: pos[w])
        for w in later:
            if w != anchor and w not in nbr[anchor]:
                return False, None
    return True, peo


# ---------------------------------------------------------------------------
# Biconnected components, bridges, block-cut tree


def biconnected_components(n: int, adj: list[list[tuple[int, int]]]
                           ) -> tuple[list[list[int]], list[bool]]:
    """Biconnected components of an undirected multigraph.

    adj holds (neighbor, edge_id) pairs; parallel edges are allowed and a
    pair of parallel edges forms a biconnected component of its own. Returns
    (blocks, is_cut) where each block is a list of edge ids and is_cut flags
    articulation vertices. Isolated vertices belong to no block.
    """
    disc = [0] * n
    low = [0] * n
    ptr = [0] * n
    parent_eid = [-1] * n
    is_cut = [False] * n
    blocks: list[list[int]] = []
    estack: list[int] = []
    time = 1
    for root in range(n):
        if disc[root]:
            continue
        disc[root] = low[root] = time
        time += 1
        stack = [root]
        root_children = 0
        while stack:
            u = stack[-1]
            au = adj[u]
            if ptr[u] < len(au):
                v, eid = au[ptr[u]]
                ptr[u] += 1
                if eid == parent_eid[u]:
                    continue
                dv = disc[v]
                if dv:
                    if dv < disc[u]:
                        estack.append(eid)
                        if dv < low[u]:
                            low[u] = dv
                    continue
                parent_eid[v] = eid
                estack.append(eid)
                disc[v] = low[v] = time
                time += 1
                stack.append(v)
                if u == root:
                    root_children += 1
            else:
                stack.pop()
                if not stack:
                    break
                p = stack[-1]
                lu = low[u]
                if lu < low[p]:
                    low[p] = lu
                if lu >= disc[p]:
                    blk = []
                    pe = parent_eid[u]
                    while True:
                        e = estack.pop()
                        blk.append(e)
                        if e == pe:
                            break
                    blocks.append(blk)
                    if p != root or root_children > 1:
                        is_cut[p] = True
    return blocks, is_cut


def bridges(g: Graph) -> set[int]:
    """Edge ids whose removal disconnects the graph (single-edge blocks)."""
    adj = [[(v, eid) for v, eid, _w in g.adj[u]] for u in range(g.n)]
    blocks, _cut = biconnected_components(g.n, adj)
    return {blk[0] for blk in blocks if len(blk) == 1}


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]


class BlockCutTree:
    """Bipartite tree of biconnected components and cut vertices."""

    __slots__ = ("blocks", "cut_vertices", "vertex_blocks", "block_cuts", "cut_blocks")

    def __init__(self, blocks: list[Block], cut_vertices: frozenset[int],
                 vertex_blocks: list[list[int]],
                 block_cuts: list[list[int]], cut_blocks: dict[int, list[int]]):
        self.blocks = blocks
        self.cut_vertices = cut_vertices
        self.vertex_blocks = vertex_blocks   # v -> block ids containing v
        self.block_cuts = block_cuts         # block id -> cut vertices in it
        self.cut_blocks = cut_blocks         # cut vertex -> block ids


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Hopcroft-Tarjan decomposition of a connected graph."""
    if g.n > 0 and not is_connected(g):
        raise DisconnectedError("block_cut_tree requires a connected graph")
    adj = [[(v, eid) for v, eid, _w in g.adj[u]] for u in range(g.n)]
    raw_blocks, is_cut = biconnected_components(g.n, adj)
    blocks: list[Block] = []
    vertex_blocks: list[list[int]] = [[] for _ in range(g.n)]
    block_cuts: list[list[int]] = []
    cut_blocks: dict[int, list[int]] = {}
    for bid, eids in enumerate(raw_blocks):
        verts: dict[int, None] = {}
        for eid in eids:
            u, v, _w = g.edges[eid]
            verts[u] = None
            verts[v] = None
        vtuple = tuple(verts)
        blocks.append(Block(vtuple, tuple(eids)))
        cuts = []
        for v in vtuple:
            vertex_blocks[v].append(bid)
            if is_cut[v]:
                cuts.append(v)
                cut_blocks.setdefault(v, []).append(bid)
        block_cuts.append(cuts)
    cut_vertices = frozenset(v for v in range(g.n) if is_cut[v])
    return BlockCutTree(blocks, cut_vertices, vertex_blocks, block_cuts, cut_blocks)


# ---------------------------------------------------------------------------
# Deterministic shortest paths
#
# Tie-breaking contract: the priority queue orders by (distance, vertex id),
# relaxation scans adjacency lists in stored order, and an equal-distance
# relaxation never replaces an existing parent. Derived graphs preserve the
# adjacency order of their source graph, so the same scheme stays consistent
# across every shortest-path invocation of the pipeline.


def dijkstra(g: Graph, source: int,
             forbidden: Optional[set[int]] = None,
             edge_mask: Optional[Sequence[bool]] = None
             ) -> tuple[list[Optional[int]], list[int]]:
    """Single-source shortest paths; returns (dist, parent_edge).

    Vertices in `forbidden` are never entered or left; edges with a falsy
    edge_mask entry are ignored. Unreachable vertices get dist None and
    parent_edge -1.
    """
    n = g.n
    if forbidden and source in forbidden:
        raise ValueError("source vertex is forbidden")
    INF = None
    dist: list[Optional[int]] = [INF] * n
    parent: list[int] = [-1] * n
    done = bytearray(n)
    if forbidden:
        for v in forbidden:
            done[v] = 1
    dist[source] = 0
    heap: list[tuple[int, int]] = [(0, source)]
    adj = g.adj
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        d, u = pop(heap)
        if done[u]:
            continue
        done[u] = 1
        for v, eid, w in adj[u]:
            if done[v]:
                continue
            if edge_mask is not None and not edge_mask[eid]:
                continue
            nd = d + w
            dv = dist[v]
            if dv is None or nd < dv:
                dist[v] = nd
                parent[v] = eid
                push(heap, (nd, v))
    return dist, parent


def bfs_parents(g: Graph, source: int,
                forbidden: Optional[set[int]] = None,
                edge_mask: Optional[Sequence[bool]] = None
                ) -> tuple[list[int], list[int]]:
    """Fewest-edges search; returns (depth, parent_edge), depth -1 if unreachable."""
    n = g.n
    depth = [-1] * n
    parent = [-1] * n
    if forbidden and source in forbidden:
        raise ValueError("source vertex is forbidden")
    depth[source] = 0
    queue = [source]
    qi = 0
    adj = g.adj
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        du = depth[u]
        for v, eid, _w in adj[u]:
            if depth[v] != -1 or (forbidden and v in forbidden):
                continue
            if edge_mask is not None and not edge_mask[eid]:
                continue
            depth[v] = du + 1
            parent[v] = eid
            queue.append(v)
    return depth, parent


def extract_path(g: Graph, parent: Sequence[int], source: int, target: int
                 ) -> Optional[Path]:
    """Rebuild the tree path from a parent-edge array; None if unreachable."""
    if target == source:
        return Path((source,), 0)
    if parent[target] == -1:
        return None
    verts = [target]
    total = 0
    v = target
    while v != source:
        eid = parent[v]
        a, b, w = g.edges[eid]
        v = a if b == v else b
        total += w
        verts.append(v)
    verts.reverse()
    return Path(tuple(verts), total)


def shortest_path(g: Graph, source: int, target: int,
                  forbidden: Optional[set[int]] = None,
                  edge_mask: Optional[Sequence[bool]] = None) -> Optional[Path]:
    dist, parent = dijkstra(g, source, forbidden=forbidden, edge_mask=edge_mask)
    if dist[target] is None:
        return None
    return extract_path(g, parent, source, target)


# ---------------------------------------------------------------------------
# Graph text format
#
# One record per line: header `p nsp <n> <m>`, terminals `s <vertex>` and
# `t <vertex>`, then `e <u> <v> <w>` lines with 0-based vertex ids and
# positive integer weights. Blank lines and `#` comments are ignored.


def parse_graph_text(text: str) -> tuple[Graph, int, int]:
    n = None
    m = None
    s = None
    t = None
    edge_list: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "p":
                if n is not None:
                    raise GraphFormatError(f"line {lineno}: duplicate header")
                if len(parts) != 4 or parts[1] != "nsp":
                    raise GraphFormatError(f"line {lineno}: header must be 'p nsp <n> <m>'")
                n, m = int(parts[2]), int(parts[3])
            elif kind == "s":
                if len(parts) != 2:
                    raise GraphFormatError(f"line {lineno}: 's' takes one vertex")
                s = int(parts[1])
            elif kind == "t":
                if len(parts) != 2:
                    raise GraphFormatError(f"line {lineno}: 't' takes one vertex")
                t = int(parts[1])
            elif kind == "e":
                if len(parts) != 4:
                    raise GraphFormatError(f"line {lineno}: 'e' takes '<u> <v> <w>'")
                edge_list.append((int(parts[1]), int(parts[2]), int(parts[3])))
            else:
                raise GraphFormatError(f"line {lineno}: unknown record '{kind}'")
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from exc
    if n is None:
        raise GraphFormatError("missing 'p nsp <n> <m>' header")
    if m != len(edge_list):
        raise GraphFormatError(f"header declares {m} edges, found {len(edge_list)}")
    if s is None or t is None:
        raise GraphFormatError("missing 's' or 't' terminal line")
    try:
        g = build_graph(n, edge_list)
    except GraphBuildError as exc:
        raise GraphFormatError(str(exc)) from exc
    if not (0 <= s < n and 0 <= t < n):
        raise GraphFormatError(f"terminal out of range: s={s}, t={t}")
    return g, s, t


def format_graph_text(g: Graph, s: int, t: int) -> str:
    lines = [f"p nsp {g.n} {g.m}", f"s {s}", f"t {t}"]
    lines.extend(f"e {u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"

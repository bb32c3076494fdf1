"""Brute-force reference implementations used as ground truth in tests.

Everything here favors obviousness over speed and is guarded by a vertex
count cap (default 12, configurable per call). The solver never calls into
this module; property tests compare both against each other. Reduced 3-SAT
instances are not chordal, so this module is also the only component that
answers existence questions about them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import OracleCapError
from .graph import Graph, Path

DEFAULT_CAP = 12


def _check_cap(g: Graph, cap: Optional[int]) -> None:
    if cap is not None and g.n > cap:
        raise OracleCapError(f"graph has {g.n} vertices, oracle cap is {cap}")


@dataclass
class SeparatorPath:
    """A simple separating path with no properly contained separating subpath.

    head/tail are the edge ids of the first and last edges. Classification
    flags are filled in by `classify`; enumeration leaves them None.
    """

    path: Path
    head: int
    tail: int
    useful: Optional[bool] = None
    traversable: Optional[bool] = None
    normal: Optional[bool] = None

    @classmethod
    def of(cls, g: Graph, path: Path) -> "SeparatorPath":
        eids = path.edge_ids(g)
        return cls(path=path, head=eids[0], tail=eids[-1])


def simple_paths(g: Graph, s: int, t: int, cap: Optional[int] = DEFAULT_CAP
                 ) -> Iterator[tuple[int, ...]]:
    """All simple s->t vertex sequences, DFS order over stored adjacency."""
    _check_cap(g, cap)
    if s == t:
        raise ValueError("simple path enumeration needs distinct endpoints")
    adj = g.adj
    on_path = bytearray(g.n)
    on_path[s] = 1
    stack_path = [s]

    def rec(u: int) -> Iterator[tuple[int, ...]]:
        for v, _eid, _w in adj[u]:
            if v == t:
                yield tuple(stack_path) + (t,)
            elif not on_path[v]:
                on_path[v] = 1
                stack_path.append(v)
                yield from rec(v)
                stack_path.pop()
                on_path[v] = 0

    yield from rec(s)


def enumerate_simple_paths(g: Graph, s: int, t: int,
                           cap: Optional[int] = DEFAULT_CAP) -> list[Path]:
    return [Path.from_vertices(g, verts) for verts in simple_paths(g, s, t, cap)]


def _connected_after_removal(g: Graph, removed: set[int]) -> bool:
    """Is the graph still connected after dropping the given edge ids?"""
    n = g.n
    if n <= 1:
        return True
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v, eid, _w in g.adj[u]:
            if eid in removed or seen[v]:
                continue
            seen[v] = 1
            count += 1
            stack.append(v)
    return count == n


def is_separating_path(g: Graph, p: Path) -> bool:
    """True iff removing all edges on p disconnects the (connected) graph."""
    return not _connected_after_removal(g, set(p.edge_ids(g)))


def _is_separator_path(g: Graph, verts: tuple[int, ...]) -> bool:
    """Separating, and no proper contiguous subpath is separating."""
    p = Path.from_vertices(g, verts)
    if not is_separating_path(g, p):
        return False
    k = len(verts)
    for i in range(k):
        for j in range(i + 1, k):
            if j - i == k - 1:
                continue
            if is_separating_path(g, Path.from_vertices(g, verts[i:j + 1])):
                return False
    return True


def enumerate_separator_paths(g: Graph, cap: Optional[int] = DEFAULT_CAP
                              ) -> list[SeparatorPath]:
    """All directed separator paths; both orientations are reported."""
    _check_cap(g, cap)
    out = []
    for s in range(g.n):
        for t in range(g.n):
            if s == t:
                continue
            for verts in simple_paths(g, s, t, cap):
                if _is_separator_path(g, verts):
                    out.append(SeparatorPath.of(g, Path.from_vertices(g, verts)))
    return out


def classify(g: Graph, s: int, t: int, r: SeparatorPath,
             cap: Optional[int] = DEFAULT_CAP) -> tuple[bool, bool, bool]:
    """(useful, traversable, normal) flags for a separator path.

    Useful: every two-step detour r_{i,i+2} is strictly shorter than the
    chord edge between r_i and r_{i+2} (a missing chord counts as infinite).
    Traversable: some simple s->t path contains r as a directed contiguous
    subpath. Normal: both, with more than two edges.
    """
    verts = r.path.vertices
    useful = True
    for i in range(len(verts) - 2):
        chord = g.edge_length(verts[i], verts[i + 2])
        if chord is None:
            continue
        two_step = g.edge_length(verts[i], verts[i + 1]) + g.edge_length(verts[i + 1], verts[i + 2])
        if not two_step < chord:
            useful = False
            break
    traversable = False
    for cand in simple_paths(g, s, t, cap):
        if _contains(cand, verts):
            traversable = True
            break
    normal = useful and traversable and r.path.edge_count > 2
    r.useful, r.traversable, r.normal = useful, traversable, normal
    return useful, traversable, normal


def _contains(hay: tuple[int, ...], needle: tuple[int, ...]) -> bool:
    k = len(needle)
    if k > len(hay):
        return False
    first = needle[0]
    for i in range(len(hay) - k + 1):
        if hay[i] == first and hay[i:i + k] == needle:
            return True
    return False


def weakly_connected(g: Graph, p: Path, u: int, v: int) -> bool:
    """Is there a u-v path sharing no edge with p?"""
    if u == v:
        return True
    removed = set(p.edge_ids(g))
    seen = bytearray(g.n)
    seen[u] = 1
    stack = [u]
    while stack:
        a = stack.pop()
        for b, eid, _w in g.adj[a]:
            if eid in removed or seen[b]:
                continue
            if b == v:
                return True
            seen[b] = 1
            stack.append(b)
    return False


def strongly_connected(g: Graph, p: Path, u: int, v: int) -> bool:
    """Weakly connected by a path that also avoids p's vertices internally."""
    if u == v:
        return True
    removed = set(p.edge_ids(g))
    blocked = set(p.vertices)
    seen = bytearray(g.n)
    seen[u] = 1
    stack = [u]
    while stack:
        a = stack.pop()
        for b, eid, _w in g.adj[a]:
            if eid in removed or seen[b]:
                continue
            if b == v:
                return True
            if b in blocked:
                continue
            seen[b] = 1
            stack.append(b)
    return False


def brute_shortest_nonseparating(g: Graph, s: int, t: int,
                                 cap: Optional[int] = DEFAULT_CAP
                                 ) -> Optional[Path]:
    """Minimum-length simple non-separating s->t path, if any.

    Two sound prunings keep this usable on lane-shaped reduction instances:
    a path entering a degree-2 vertex other than t must traverse both of its
    edges and isolate it, so such branches only hold separating paths; and a
    partial path at least as long as the best found cannot improve it.
    """
    _check_cap(g, cap)
    if s == t:
        raise ValueError("endpoints must be distinct")
    adj = g.adj
    n = g.n
    on_path = bytearray(n)
    on_path[s] = 1
    best: list[Optional[Path]] = [None]

    def consider(verts: tuple[int, ...], length: int) -> None:
        p = Path(verts, length)
        if not is_separating_path(g, p):
            best[0] = p

    stack_path = [s]

    def rec(u: int, length: int) -> None:
        for v, _eid, w in adj[u]:
            if on_path[v]:
                continue
            nl = length + w
            if best[0] is not None and nl >= best[0].length:
                continue
            if v == t:
                consider(tuple(stack_path) + (t,), nl)
                continue
            if len(adj[v]) == 2 and n > 2:
                continue
            on_path[v] = 1
            stack_path.append(v)
            rec(v, nl)
            stack_path.pop()
            on_path[v] = 0

    rec(s, 0)
    return best[0]


def exists_nonseparating(g: Graph, s: int, t: int,
                         cap: Optional[int] = DEFAULT_CAP) -> bool:
    return brute_shortest_nonseparating(g, s, t, cap) is not None

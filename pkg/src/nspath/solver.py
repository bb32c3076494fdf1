"""End-to-end optimization pipeline for shortest non-separating s-t paths.

Stages: restrict to the bridge-free region of s (a no answer exists iff t
falls outside it), compute bad vertices, shortest bad-avoiding path, the
s-/t-separator paths it anchors, the detour graph stripped of their tails
and heads, the separator paths on the detour shortest path, and finally the
layered-graph avoidance search over the union of everything found.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .avoid import (build_layered_graph, layered_sizes_without_members,
                    _aux_dijkstra, _validate_avoid_result)
from .decision import prune_to_bridge_free_region
from .errors import (DisconnectedError, InternalInconsistencyError,
                     NotChordalError)
from .graph import Graph, Path, is_chordal, is_connected, shortest_path
from .separators import (compute_bad_vertices, compute_st_separators,
                         separator_paths_on_path)


@dataclass(frozen=True)
class XMember:
    """One avoided separator path, in original vertex ids."""

    vertices: tuple[int, ...]
    tags: tuple[str, ...]                       # s_separator / t_separator / extra
    inner_interval_on_base: Optional[tuple[int, int]]


@dataclass
class SolveReport:
    """Pipeline artifacts for tracing, benchmarking, and invariant checks."""

    n: int
    m: int
    s: int
    t: int
    found: bool = False
    path: Optional[Path] = None
    region_n: int = 0
    region_m: int = 0
    bad: tuple[int, ...] = ()
    base_path: Optional[tuple[int, ...]] = None
    detour_path: Optional[tuple[int, ...]] = None
    avoid_set: list[XMember] = field(default_factory=list)
    aux_vertices: int = 0
    aux_edges: int = 0
    stage_us: dict[str, int] = field(default_factory=dict)

    @property
    def length(self) -> Optional[int]:
        return self.path.length if self.path is not None else None


def solve(g: Graph, s: int, t: int, validate: bool = True) -> Optional[Path]:
    """Shortest non-separating s-t path of a connected chordal graph, or None."""
    path, _report = solve_with_report(g, s, t, validate=validate)
    return path


def solve_with_report(g: Graph, s: int, t: int, validate: bool = True
                      ) -> tuple[Optional[Path], SolveReport]:
    report = SolveReport(n=g.n, m=g.m, s=s, t=t)
    clock = time.perf_counter_ns
    t_start = clock()

    def stage(name: str, since: int) -> int:
        now = clock()
        report.stage_us[name] = (now - since) // 1000
        return now

    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError(f"terminals out of range: s={s}, t={t}")
    if s == t:
        raise ValueError("s and t must be distinct")
    if validate:
        if not is_connected(g):
            raise DisconnectedError("solve requires a connected graph")
        ok, _peo = is_chordal(g)
        if not ok:
            raise NotChordalError("solve requires a chordal graph")
    now = stage("validate", t_start)

    region = prune_to_bridge_free_region(g, s)
    report.region_n = region.graph.n
    report.region_m = region.graph.m
    now = stage("prune", now)
    if t not in region:
        stage("total", t_start)
        return None, report

    gp = region.graph
    back = region.to_original
    rs, rt = region.to_region[s], region.to_region[t]

    bad = compute_bad_vertices(gp, rs, rt)
    report.bad = tuple(sorted(back[v] for v in bad))
    now = stage("bad", now)
    if rs in bad or rt in bad:
        raise InternalInconsistencyError("a terminal came out bad; impossible on valid inputs")

    base = shortest_path(gp, rs, rt, forbidden=bad if bad else None)
    if base is None:
        raise InternalInconsistencyError(
            "no bad-avoiding path although the decision procedure says one exists")
    report.base_path = tuple(back[v] for v in base.vertices)
    now = stage("base_path", now)

    st_map = compute_st_separators(gp, base.vertices, rs, rt)
    now = stage("st_separators", now)

    edge_mask = [True] * gp.m
    for verts, tags in st_map.items():
        if "s_separator" in tags:
            edge_mask[gp.edge_id(verts[-2], verts[-1])] = False
        if "t_separator" in tags:
            edge_mask[gp.edge_id(verts[0], verts[1])] = False
    detour = shortest_path(gp, rs, rt, forbidden=bad if bad else None, edge_mask=edge_mask)
    if detour is None:
        raise InternalInconsistencyError("detour graph lost s-t connectivity")
    report.detour_path = tuple(back[v] for v in detour.vertices)
    now = stage("detour_path", now)

    collected: dict[tuple[int, ...], set[str]] = {v: set(tags) for v, tags in st_map.items()}
    for verts in separator_paths_on_path(gp, detour.vertices):
        collected.setdefault(verts, set()).add("extra")
    x_paths = list(collected)
    base_pos = {v: i for i, v in enumerate(base.vertices)}
    for verts in x_paths:
        hits = [base_pos[v] for v in verts[1:-1] if v in base_pos]
        interval = (min(hits), max(hits)) if hits else None
        report.avoid_set.append(XMember(
            vertices=tuple(back[v] for v in verts),
            tags=tuple(sorted(collected[verts])),
            inner_interval_on_base=interval))
    now = stage("extra_separators", now)

    if x_paths:
        aux = build_layered_graph(gp, x_paths, bad)
        report.aux_vertices = aux.vertex_count
        report.aux_edges = aux.edge_count
        now = stage("layered_graph", now)
        hit = _aux_dijkstra(aux, rs, rt)
        if hit is None:
            raise InternalInconsistencyError("avoidance search found no path")
        chain, total = hit
        answer = Path(tuple(a % aux.base_n for a in chain), total)
        _validate_avoid_result(gp, x_paths, bad, answer)
    else:
        report.aux_vertices, report.aux_edges = layered_sizes_without_members(gp, bad)
        now = stage("layered_graph", now)
        answer = shortest_path(gp, rs, rt, forbidden=bad if bad else None)
        if answer is None:
            raise InternalInconsistencyError("avoidance search found no path")
    now = stage("avoid", now)

    if report.aux_vertices > 2 * gp.n or report.aux_edges > 8 * gp.m:
        raise InternalInconsistencyError("layered graph exceeded its size bounds")

    final = Path.from_vertices(g, tuple(back[v] for v in answer.vertices))
    if final.length != answer.length:
        raise InternalInconsistencyError("length changed while mapping back to original ids")
    report.found = True
    report.path = final
    stage("avoid_total", now)
    stage("total", t_start)
    return final, report

"""Seeded generators for chordal graphs, k-trees, and 3-CNF formulas.

Everything is a pure function of its seed (Python's Mersenne Twister is
stable across platforms), so corpora regenerate identically between runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, build_graph
from .reduction import CNF


@dataclass(frozen=True)
class GenConfig:
    vertex_count: int
    attachment_clique_max: int = 4
    weight_min: int = 1
    weight_max: int = 32
    seed: int = 0

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be at least 1")
        if self.attachment_clique_max < 1:
            raise ValueError("attachment_clique_max must be at least 1")
        if not (1 <= self.weight_min <= self.weight_max):
            raise ValueError("need 1 <= weight_min <= weight_max")


def gen_chordal(cfg: GenConfig) -> Graph:
    """Connected chordal graph grown by attaching each vertex to a clique.

    Every new vertex is simplicial at insertion time, so the reverse
    insertion order is a perfect elimination ordering by construction.
    Attachments of size 1 produce bridges on purpose; the decision
    procedure's negative branch needs them.
    """
    rng = random.Random(cfg.seed)
    edges: list[tuple[int, int, int]] = []
    cliques: list[tuple[int, ...]] = [(0,)]
    for v in range(1, cfg.vertex_count):
        base = cliques[rng.randrange(len(cliques))]
        size = min(rng.randint(1, cfg.attachment_clique_max), len(base))
        anchors = rng.sample(base, size)
        for a in anchors:
            edges.append((a, v, rng.randint(cfg.weight_min, cfg.weight_max)))
        cliques.append(tuple(anchors) + (v,))
    return build_graph(cfg.vertex_count, edges)


def gen_ktree(n: int, k: int, weight_min: int = 1, weight_max: int = 32,
              seed: int = 0) -> Graph:
    """Random k-tree: a (k+1)-clique plus vertices attached to random k-cliques.

    Edge count is exactly k*n - k*(k+1)/2.
    """
    if not (n > k >= 1):
        raise ValueError("need n > k >= 1")
    rng = random.Random(seed)
    edges: list[tuple[int, int, int]] = []

    def w() -> int:
        return rng.randint(weight_min, weight_max)

    base = tuple(range(k + 1))
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            edges.append((i, j, w()))
    kcliques: list[tuple[int, ...]] = [tuple(c for c in base if c != drop) for drop in base]
    for v in range(k + 1, n):
        anchor = kcliques[rng.randrange(len(kcliques))]
        for a in anchor:
            edges.append((a, v, w()))
        for drop in range(k):
            kcliques.append(anchor[:drop] + anchor[drop + 1:] + (v,))
    return build_graph(n, edges)


def gen_cnf(num_vars: int, num_clauses: int, seed: int = 0) -> CNF:
    """Random 3-CNF with exactly three distinct variables per clause."""
    if num_vars < 3:
        raise ValueError("need at least 3 variables")
    rng = random.Random(seed)
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(num_vars), 3)
        clauses.append(tuple((v, rng.random() < 0.5) for v in vs))
    return CNF(num_vars=num_vars, clauses=tuple(clauses))

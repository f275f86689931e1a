"""Exhaustive reference enumeration and a seeded random network generator.

Only usable on tiny instances: every vertex subset is crossed with every
grid-aligned interval of the lifetime.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .clique_core import Clique, Parameters, is_delta_gamma_clique, is_maximal_def
from .temporal_graph import TemporalNetwork, build_dictionary

DEFAULT_MAX_VERTICES = 6
DEFAULT_MAX_GRID = 24


class OracleBoundsError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    vertex_count: int
    grid_length: int
    edge_probability: float
    seed: int
    dt: int = 1
    # lifetime = whole grid rather than the observed span
    pin_lifetime: bool = True

    def __post_init__(self):
        if self.vertex_count < 0 or self.grid_length < 1 or self.dt < 1:
            raise ValueError(f"invalid generator config {self}")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise ValueError(f"edge_probability must lie in [0, 1], got {self.edge_probability}")


def random_temporal_network(config: GeneratorConfig) -> TemporalNetwork:
    rng = random.Random(config.seed)
    edges = []
    for u, v in combinations(range(config.vertex_count), 2):
        for step in range(config.grid_length):
            if rng.random() < config.edge_probability:
                edges.append((u, v, step * config.dt))
    lifetime = (0, (config.grid_length - 1) * config.dt) if config.pin_lifetime or not edges else None
    return TemporalNetwork.from_edges(
        edges, dt=config.dt, lifetime=lifetime, vertices=range(config.vertex_count)
    )


def brute_force_maximal(
    net: TemporalNetwork,
    params: Parameters,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_grid: int = DEFAULT_MAX_GRID,
) -> list[Clique]:
    """Every maximal (delta, gamma)-clique, found by checking all candidates."""
    if params.dt != net.dt:
        raise ValueError(f"parameter dt={params.dt} does not match network dt={net.dt}")
    vertices = sorted(net.vertices)
    grid = [net.t_start + k * net.dt for k in range(net.span // net.dt + 1)]
    if len(vertices) > max_vertices:
        raise OracleBoundsError(f"{len(vertices)} vertices exceeds max_vertices={max_vertices}")
    if len(grid) > max_grid:
        raise OracleBoundsError(f"{len(grid)} grid points exceeds max_grid={max_grid}")
    if len(vertices) < 2:
        return []

    dictionary = build_dictionary(net)
    intervals = [(a, b) for i, a in enumerate(grid) for b in grid[i:]]
    # membership is a per-pair conjunction, so tabulate pairs once
    pair_ok = {
        pair: {iv for iv in intervals if is_delta_gamma_clique(pair, iv, dictionary, params)}
        for pair in combinations(vertices, 2)
    }

    found = []
    for size in range(2, len(vertices) + 1):
        for subset in combinations(vertices, size):
            ok = None
            for pair in combinations(subset, 2):
                ok = pair_ok[pair] if ok is None else ok & pair_ok[pair]
                if not ok:
                    break
            for t_a, t_b in sorted(ok or ()):
                c = Clique(subset, t_a, t_b)
                if is_maximal_def(c, net, dictionary, params):
                    found.append(c)
    found.sort(key=lambda c: c.key)
    return found

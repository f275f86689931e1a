"""Work-queue enumeration of maximal (Delta, gamma)-cliques.

Each dequeued clique is grown three ways: by one extra vertex, by moving its
start left to (latest first gamma-th occurrence - delta), and by moving its
end right to (earliest last gamma-th occurrence + delta).  A clique with no
possible growth of any kind is maximal.
"""
from __future__ import annotations

import logging
import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .clique_core import (
    Clique,
    Parameters,
    first_gamma_occurrence,
    is_delta_gamma_clique,
    last_gamma_occurrence,
    pair_satisfies,
)
from .initializer import seed_cliques
from .temporal_graph import EdgeDictionary, TemporalNetwork, build_dictionary, candidate_vertices

logger = logging.getLogger(__name__)


@dataclass
class RunStats:
    iterations: int = 0
    seeds: int = 0
    vertex_expansions: int = 0
    left_expansions: int = 0
    right_expansions: int = 0
    seen_size: int = 0
    wall_time: float = 0.0
    note: str = ""


def vertex_expansions(clique: Clique, dictionary: EdgeDictionary, params: Parameters) -> list[Clique]:
    """One-vertex growths of ``clique`` at the same interval, by vertex id.

    ``clique`` must already be a clique, so only the pairs through the new
    vertex are checked.
    """
    t_a, t_b = clique.interval
    out = []
    for v in sorted(candidate_vertices(dictionary, clique.members, clique.interval, params.gamma)):
        if all(pair_satisfies(dictionary.times(u, v), t_a, t_b, params) for u in clique.members):
            out.append(Clique(clique.members + (v,), t_a, t_b))
    return out


def left_expansion(
    clique: Clique, dictionary: EdgeDictionary, params: Parameters, lifetime: tuple[int, int]
) -> Clique | None:
    t_al = max(
        first_gamma_occurrence(dictionary.times(u, v), clique.interval, params)
        for u, v in combinations(clique.members, 2)
    )
    t_a = max(t_al - params.delta, lifetime[0])
    if t_a < clique.t_a:
        return Clique(clique.members, t_a, clique.t_b)
    return None


def right_expansion(
    clique: Clique, dictionary: EdgeDictionary, params: Parameters, lifetime: tuple[int, int]
) -> Clique | None:
    t_br = min(
        last_gamma_occurrence(dictionary.times(u, v), clique.interval, params)
        for u, v in combinations(clique.members, 2)
    )
    t_b = min(t_br + params.delta, lifetime[1])
    if t_b > clique.t_b:
        return Clique(clique.members, clique.t_a, t_b)
    return None


def enumerate_maximal(
    net: TemporalNetwork,
    params: Parameters,
    *,
    dictionary: EdgeDictionary | None = None,
    order: str = "fifo",
    on_enqueue: Callable[[Clique, str], None] | None = None,
    check: bool = False,
) -> tuple[list[Clique], RunStats]:
    """All maximal (delta, gamma)-cliques of ``net``, sorted by key.

    ``order`` picks the pending-queue discipline (``"fifo"`` or ``"lifo"``);
    the result set does not depend on it.  ``on_enqueue(clique, kind)`` is
    called for every clique put on the queue, with ``kind`` one of ``seed``,
    ``vertex``, ``left``, ``right``.  ``check`` asserts every enqueued clique
    against the membership predicate.
    """
    if order not in ("fifo", "lifo"):
        raise ValueError(f"order must be 'fifo' or 'lifo', got {order!r}")
    if params.dt != net.dt:
        raise ValueError(f"parameter dt={params.dt} does not match network dt={net.dt}")
    started = time.perf_counter()
    stats = RunStats()
    if params.gamma > params.max_window_hits:
        stats.note = f"gamma={params.gamma} exceeds delta/dt+1={params.max_window_hits}"
        logger.info("empty by cutoff: %s", stats.note)
        stats.wall_time = time.perf_counter() - started
        return [], stats

    if dictionary is None:
        dictionary = build_dictionary(net)
    lifetime = net.lifetime

    pending: deque[Clique] = deque()
    seen: set[tuple] = set()
    counters = {"vertex": 0, "left": 0, "right": 0}

    def push(c: Clique, kind: str) -> None:
        if check:
            assert is_delta_gamma_clique(c.members, c.interval, dictionary, params), (kind, c)
        seen.add(c.key)
        pending.append(c)
        if kind in counters:
            counters[kind] += 1
        if on_enqueue is not None:
            on_enqueue(c, kind)

    for c in seed_cliques(dictionary, params, lifetime):
        push(c, "seed")
    stats.seeds = len(pending)

    pop = pending.popleft if order == "fifo" else pending.pop
    results = []
    while pending:
        c = pop()
        stats.iterations += 1
        maximal = True
        grown = [(n, "vertex") for n in vertex_expansions(c, dictionary, params)]
        for kind, fn in (("left", left_expansion), ("right", right_expansion)):
            n = fn(c, dictionary, params, lifetime)
            if n is not None:
                grown.append((n, kind))
        for n, kind in grown:
            # an already-seen expansion still disqualifies c
            maximal = False
            if n.key not in seen:
                push(n, kind)
        if maximal:
            results.append(c)

    stats.vertex_expansions = counters["vertex"]
    stats.left_expansions = counters["left"]
    stats.right_expansions = counters["right"]
    stats.seen_size = len(seen)
    stats.wall_time = time.perf_counter() - started
    results.sort(key=lambda c: c.key)
    return results, stats

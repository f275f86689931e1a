"""Seed cliques: one or two length-delta intervals per run of gamma
consecutive occurrences of a static edge."""
from __future__ import annotations

import logging

from .clique_core import Clique, Parameters
from .temporal_graph import EdgeDictionary

logger = logging.getLogger(__name__)


def _fit(t_a: int, t_b: int, lifetime: tuple[int, int]) -> tuple[int, int]:
    # shift, don't shrink: the generating run stays inside because its span <= delta
    t_start, t_end = lifetime
    if t_b > t_end:
        return t_end - (t_b - t_a), t_end
    if t_a < t_start:
        return t_start, t_start + (t_b - t_a)
    return t_a, t_b


def seed_cliques(
    dictionary: EdgeDictionary, params: Parameters, lifetime: tuple[int, int]
) -> list[Clique]:
    """Initial clique set, deduplicated and sorted by :attr:`Clique.key`.

    For every static edge with at least gamma occurrences and every window of
    gamma consecutive occurrences ``e .. l``:

    * ``l - e == delta``: emit ``[e, l]``;
    * ``l - e < delta``: emit ``[e, e + delta]`` and ``[l - delta, l]``;
    * ``l - e > delta``: nothing.

    Intervals that stick out of the lifetime are shifted back inside.  When the
    whole lifetime is shorter than delta no length-delta interval fits; each
    qualifying edge is then seeded over the full lifetime instead.
    """
    delta, gamma = params.delta, params.gamma
    t_start, t_end = lifetime
    short = t_end - t_start < delta
    if short:
        logger.warning(
            "lifetime %s is shorter than delta=%d; seeding over the whole lifetime", lifetime, delta
        )

    out: dict[tuple, Clique] = {}

    def emit(pair, t_a, t_b):
        c = Clique(pair, t_a, t_b)
        out.setdefault(c.key, c)

    for pair, times in dictionary.items():
        if len(times) < gamma:
            continue
        for i in range(len(times) - gamma + 1):
            e, l = times[i], times[i + gamma - 1]
            span = l - e
            if span > delta:
                continue
            if short:
                emit(pair, t_start, t_end)
                continue
            if span == delta:
                emit(pair, e, l)
            else:
                emit(pair, *_fit(e, e + delta, lifetime))
                emit(pair, *_fit(l - delta, l, lifetime))
    return [out[k] for k in sorted(out)]

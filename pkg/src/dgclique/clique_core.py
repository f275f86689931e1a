"""(Delta, gamma)-clique data model and the membership / maximality predicates."""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .temporal_graph import EdgeDictionary, TemporalNetwork, count_in_window

__all__ = [
    "Parameters",
    "Clique",
    "count_in_window",
    "pair_satisfies",
    "is_delta_gamma_clique",
    "first_gamma_occurrence",
    "last_gamma_occurrence",
    "is_maximal_def",
]


@dataclass(frozen=True)
class Parameters:
    delta: int
    gamma: int
    dt: int = 1

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.gamma < 1:
            raise ValueError(f"gamma must be >= 1, got {self.gamma}")
        if self.delta < self.dt or self.delta % self.dt:
            raise ValueError(f"delta={self.delta} must be a positive multiple of dt={self.dt}")

    @property
    def max_window_hits(self) -> int:
        """Most grid instants a closed window of length delta can hold."""
        return self.delta // self.dt + 1


@dataclass(frozen=True)
class Clique:
    members: tuple[int, ...]
    t_a: int
    t_b: int

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if len(members) != len(self.members):
            raise ValueError(f"duplicate members in {self.members}")
        if len(members) < 2:
            raise ValueError("a clique needs at least two members")
        if self.t_a > self.t_b:
            raise ValueError(f"empty interval [{self.t_a}, {self.t_b}]")
        object.__setattr__(self, "members", members)

    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        """Total order used for dedup and output: ``(t_a, t_b, members)``."""
        return (self.t_a, self.t_b, self.members)

    @property
    def interval(self) -> tuple[int, int]:
        return (self.t_a, self.t_b)

    @property
    def duration(self) -> int:
        return self.t_b - self.t_a

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"Clique({set(self.members)}, [{self.t_a}, {self.t_b}])"


def pair_satisfies(times: Sequence[int], t_a: int, t_b: int, params: Parameters) -> bool:
    """Every grid window ``[tau, min(tau + delta, t_b)]`` for ``tau`` in
    ``[t_a, max(t_b - delta, t_a)]`` holds at least gamma of ``times``.

    The window count only drops right after tau steps past an occurrence, so
    it suffices to test tau = t_a and tau = t + dt for occurrences t.
    """
    delta, gamma, dt = params.delta, params.gamma, params.dt
    if t_b - t_a <= delta:
        return count_in_window(times, t_a, t_b) >= gamma
    first = bisect.bisect_left(times, t_a)
    right = bisect.bisect_right(times, t_a + delta)
    if right - first < gamma:
        return False
    last_tau = t_b - delta
    n = len(times)
    # two pointers: both window edges only move forward
    left = first
    for i in range(bisect.bisect_left(times, t_a - dt), bisect.bisect_right(times, last_tau - dt)):
        tau = times[i] + dt
        if tau <= t_a:
            continue
        end = tau + delta
        while right < n and times[right] <= end:
            right += 1
        while left < n and times[left] < tau:
            left += 1
        if right - left < gamma:
            return False
    return True


def is_delta_gamma_clique(
    members: Iterable[int],
    interval: tuple[int, int],
    dictionary: EdgeDictionary,
    params: Parameters,
) -> bool:
    members = sorted(members)
    if len(members) < 2:
        raise ValueError("a clique needs at least two members")
    t_a, t_b = interval
    if t_a > t_b:
        raise ValueError(f"empty interval {interval}")
    for u, v in combinations(members, 2):
        if not pair_satisfies(dictionary.times(u, v), t_a, t_b, params):
            return False
    return True


def _in_interval(times: Sequence[int], interval: tuple[int, int]) -> tuple[int, int]:
    t_a, t_b = interval
    return bisect.bisect_left(times, t_a), bisect.bisect_right(times, t_b)


def first_gamma_occurrence(
    times: Sequence[int], interval: tuple[int, int], params: Parameters
) -> int:
    """gamma-th occurrence counted forward from ``t_a``, moved one dt earlier
    when the window ending there already holds gamma occurrences."""
    lo, hi = _in_interval(times, interval)
    idx = lo + params.gamma - 1
    if idx >= hi:
        raise ValueError(f"fewer than {params.gamma} occurrences in {interval}")
    f = times[idx]
    probe = f - params.dt
    if count_in_window(times, probe - params.delta, probe) >= params.gamma:
        return probe
    return f


def last_gamma_occurrence(
    times: Sequence[int], interval: tuple[int, int], params: Parameters
) -> int:
    """Mirror of :func:`first_gamma_occurrence`, counted backward from ``t_b``."""
    lo, hi = _in_interval(times, interval)
    idx = hi - params.gamma
    if idx < lo:
        raise ValueError(f"fewer than {params.gamma} occurrences in {interval}")
    l = times[idx]
    probe = l + params.dt
    if count_in_window(times, probe, probe + params.delta) >= params.gamma:
        return probe
    return l


def is_maximal_def(
    clique: Clique, net: TemporalNetwork, dictionary: EdgeDictionary, params: Parameters
) -> bool:
    """Literal maximality test: no single vertex, and no single dt step to the
    left or right inside the lifetime, yields another clique."""
    X, (t_a, t_b) = clique.members, clique.interval
    if not is_delta_gamma_clique(X, (t_a, t_b), dictionary, params):
        raise ValueError(f"{clique!r} is not a ({params.delta}, {params.gamma})-clique")
    in_x = set(X)
    for v in sorted(net.vertices):
        if v not in in_x and is_delta_gamma_clique(X + (v,), (t_a, t_b), dictionary, params):
            return False
    dt = params.dt
    if t_a - dt >= net.t_start and is_delta_gamma_clique(X, (t_a - dt, t_b), dictionary, params):
        return False
    if t_b + dt <= net.t_end and is_delta_gamma_clique(X, (t_a, t_b + dt), dictionary, params):
        return False
    return True

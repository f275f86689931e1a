"""Temporal network ingestion and the static-edge dictionary.

Edge streams are read from KONECT/SNAP style text files (``u v t`` or
``u v w t``), folded to undirected pairs and deduplicated.  The resulting
:class:`TemporalNetwork` is immutable and can be shared between sweep workers.
"""
from __future__ import annotations

import bisect
import logging
import math
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

logger = logging.getLogger(__name__)

Pair = tuple[int, int]

FORMATS = ("3col", "4col")
DEFAULT_COMMENT_PREFIXES = ("%", "#")


class ParseError(ValueError):
    """Raised for malformed edge-stream input."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def canonical_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, order=True)
class TemporalEdge:
    u: int
    v: int
    t: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"self-loop on vertex {self.u}")
        if self.u > self.v:
            a, b = self.v, self.u
            object.__setattr__(self, "u", a)
            object.__setattr__(self, "v", b)


@dataclass
class ParseReport:
    lines: int = 0
    comments: int = 0
    raw_edges: int = 0
    self_loops: int = 0
    duplicates: int = 0
    ordered_pairs: int = 0

    def emit(self, stream: TextIO = sys.stderr) -> None:
        for name in ("lines", "comments", "raw_edges", "self_loops", "duplicates", "ordered_pairs"):
            print(f"{name}={getattr(self, name)}", file=stream)


@dataclass(frozen=True)
class TemporalNetwork:
    """Vertex set, deduplicated contact triplets, grid resolution and lifetime.

    ``edges`` is kept sorted by ``(t, u, v)``.  ``lifetime`` defaults to the
    observed time span; passing it explicitly widens the observation window.
    """

    vertices: frozenset[int]
    edges: tuple[TemporalEdge, ...]
    dt: int
    lifetime: tuple[int, int]
    report: ParseReport = field(default_factory=ParseReport, compare=False, repr=False)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[TemporalEdge | tuple[int, int, int]],
        *,
        dt: int | None = None,
        lifetime: tuple[int, int] | None = None,
        vertices: Iterable[int] = (),
        report: ParseReport | None = None,
    ) -> "TemporalNetwork":
        uniq = set()
        for e in edges:
            if not isinstance(e, TemporalEdge):
                e = TemporalEdge(*e)
            uniq.add(e)
        ordered = tuple(sorted(uniq, key=lambda e: (e.t, e.u, e.v)))
        verts = set(vertices)
        for e in ordered:
            verts.add(e.u)
            verts.add(e.v)

        if lifetime is None:
            if not ordered:
                lifetime = (0, 0)
            else:
                lifetime = (ordered[0].t, ordered[-1].t)
        t_start, t_end = lifetime
        if t_start > t_end:
            raise ValueError(f"empty lifetime {lifetime}")
        for e in ordered:
            if not t_start <= e.t <= t_end:
                raise ValueError(f"edge {e} outside lifetime {lifetime}")

        if dt is None:
            dt = infer_resolution_from_times([e.t for e in ordered] + [t_end], t_start)
        if dt <= 0:
            raise ValueError(f"dt must be positive, got {dt}")
        if (t_end - t_start) % dt:
            raise ValueError(f"lifetime {lifetime} is not a whole number of dt={dt} steps")
        for e in ordered:
            if (e.t - t_start) % dt:
                raise ValueError(f"edge time {e.t} is off the dt={dt} grid anchored at {t_start}")

        return cls(frozenset(verts), ordered, dt, (t_start, t_end), report or ParseReport())

    @property
    def t_start(self) -> int:
        return self.lifetime[0]

    @property
    def t_end(self) -> int:
        return self.lifetime[1]

    @property
    def span(self) -> int:
        return self.t_end - self.t_start

    def with_dt(self, dt: int) -> "TemporalNetwork":
        return TemporalNetwork.from_edges(
            self.edges, dt=dt, lifetime=self.lifetime, vertices=self.vertices, report=self.report
        )

    def __len__(self) -> int:
        return len(self.edges)


def _iter_records(
    source: TextIO, fmt: str, comment_prefixes: tuple[str, ...], report: ParseReport
) -> Iterator[tuple[int, int, int, int]]:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    time_col = 2 if fmt == "3col" else 3
    for lineno, line in enumerate(source, start=1):
        report.lines += 1
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(comment_prefixes):
            report.comments += 1
            continue
        fields = stripped.split()
        if len(fields) <= time_col:
            raise ParseError(f"expected at least {time_col + 1} fields, got {len(fields)}", lineno)
        try:
            u = int(fields[0])
            v = int(fields[1])
            t = int(fields[time_col])
        except ValueError:
            raise ParseError(f"non-integer field in {stripped!r}", lineno) from None
        yield lineno, u, v, t


def parse_edge_stream(
    source: TextIO,
    fmt: str = "3col",
    *,
    comment_prefixes: tuple[str, ...] = DEFAULT_COMMENT_PREFIXES,
    dt: int | None = None,
    lifetime: tuple[int, int] | None = None,
    directed_as_undirected: bool = True,
) -> TemporalNetwork:
    """Read an edge stream into a :class:`TemporalNetwork`.

    ``3col`` lines are ``u v t``; ``4col`` lines are ``u v w t`` with the
    weight ignored.  Self-loops are dropped and counted, ``(u, v, t)``
    duplicates collapse, and ``v u t`` is the same contact as ``u v t``.
    """
    if not directed_as_undirected:
        raise NotImplementedError("directed cliques are not supported; inputs are always folded")
    report = ParseReport()
    seen: set[tuple[int, int, int]] = set()
    ordered: set[Pair] = set()
    edges: list[TemporalEdge] = []
    for lineno, u, v, t in _iter_records(source, fmt, comment_prefixes, report):
        report.raw_edges += 1
        if u == v:
            report.self_loops += 1
            continue
        ordered.add((u, v))
        a, b = canonical_pair(u, v)
        if (a, b, t) in seen:
            report.duplicates += 1
            continue
        seen.add((a, b, t))
        edges.append(TemporalEdge(a, b, t))
    report.ordered_pairs = len(ordered)
    if not edges:
        raise ParseError("no edges")
    if report.self_loops:
        logger.warning("dropped %d self-loop lines", report.self_loops)
    return TemporalNetwork.from_edges(edges, dt=dt, lifetime=lifetime, report=report)


def read_edge_file(path, fmt: str = "3col", **kwargs) -> TemporalNetwork:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_stream(fh, fmt, **kwargs)


def infer_resolution_from_times(times: Iterable[int], t_start: int | None = None) -> int:
    times = list(times)
    if not times:
        return 1
    if t_start is None:
        t_start = min(times)
    g = 0
    for t in times:
        g = math.gcd(g, t - t_start)
    return g or 1


def infer_resolution(net: TemporalNetwork) -> int:
    """GCD of all offsets from the first observed timestamp (1 if they coincide)."""
    if not net.edges:
        raise ValueError("cannot infer dt of an empty network")
    times = [e.t for e in net.edges]
    return infer_resolution_from_times(times, min(times))


class EdgeDictionary:
    """Static edge -> strictly ascending distinct occurrence times.

    Pairs are canonical ``(u, v)`` with ``u < v``; lookups accept either
    order.  Missing pairs behave as frequency 0.
    """

    def __init__(self, times: dict[Pair, list[int]]):
        self._times = {k: tuple(v) for k, v in times.items()}
        adj: dict[int, set[int]] = defaultdict(set)
        for u, v in self._times:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {k: frozenset(s) for k, s in adj.items()}

    def times(self, u: int, v: int) -> tuple[int, ...]:
        return self._times.get(canonical_pair(u, v), ())

    def frequency(self, u: int, v: int) -> int:
        return len(self.times(u, v))

    def neighbors(self, u: int) -> frozenset[int]:
        return self._adj.get(u, frozenset())

    def keys(self):
        return self._times.keys()

    def items(self):
        return self._times.items()

    def __len__(self) -> int:
        return len(self._times)

    def __contains__(self, pair) -> bool:
        return canonical_pair(*pair) in self._times

    def total_occurrences(self) -> int:
        return sum(len(ts) for ts in self._times.values())


def build_dictionary(net: TemporalNetwork) -> EdgeDictionary:
    acc: dict[Pair, set[int]] = defaultdict(set)
    for e in net.edges:
        acc[(e.u, e.v)].add(e.t)
    return EdgeDictionary({k: sorted(ts) for k, ts in acc.items()})


def count_in_window(times, lo: int, hi: int) -> int:
    """Entries of ascending ``times`` inside the closed range ``[lo, hi]``."""
    if lo > hi:
        return 0
    return bisect.bisect_right(times, hi) - bisect.bisect_left(times, lo)


def candidate_vertices(
    dictionary: EdgeDictionary, members: Iterable[int], interval: tuple[int, int], gamma: int
) -> set[int]:
    """Vertices outside ``members`` that meet every member at least ``gamma``
    times inside ``interval``.  Necessary (not sufficient) for extending the
    clique by that vertex."""
    members = list(members)
    if len(members) < 2:
        raise ValueError("need at least two members")
    t_a, t_b = interval
    if t_a > t_b:
        raise ValueError(f"bad interval {interval}")
    pool = set(dictionary.neighbors(members[0]))
    for u in members[1:]:
        pool &= dictionary.neighbors(u)
        if not pool:
            return set()
    pool.difference_update(members)
    return {
        v
        for v in pool
        if all(count_in_window(dictionary.times(u, v), t_a, t_b) >= gamma for u in members)
    }

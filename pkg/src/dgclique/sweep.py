"""(Delta, gamma) parameter sweeps, maximum-clique selection and output files."""
from __future__ import annotations

import csv
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .clique_core import Clique, Parameters
from .enumerator import enumerate_maximal
from .oracle import DEFAULT_MAX_GRID, DEFAULT_MAX_VERTICES, OracleBoundsError, brute_force_maximal
from .temporal_graph import TemporalNetwork, build_dictionary

logger = logging.getLogger(__name__)

CSV_HEADER = (
    "delta",
    "gamma",
    "maximal_count",
    "max_duration",
    "max_cardinality",
    "iterations",
    "seed_count",
    "wall_ms",
)
AUTO = "auto"
AUTO_GAMMA_START = 2


class ConfigError(ValueError):
    pass


class OracleMismatch(RuntimeError):
    pass


@dataclass
class SweepConfig:
    deltas: list[int]
    gammas: list[int] | str
    out_dir: Path | None = None
    emit_cliques: bool = False
    oracle_check: bool = False
    oracle_max_vertices: int = DEFAULT_MAX_VERTICES
    oracle_max_grid: int = DEFAULT_MAX_GRID
    jobs: int = 1
    record_wall_time: bool = False

    def validate(self, dt: int) -> None:
        if not self.deltas:
            raise ConfigError("no delta values")
        for d in self.deltas:
            if d <= 0 or d % dt:
                raise ConfigError(f"delta={d} is not a positive multiple of dt={dt}")
        if self.gammas == AUTO:
            return
        if not self.gammas:
            raise ConfigError("no gamma values")
        for g in self.gammas:
            if g < 1:
                raise ConfigError(f"gamma={g} must be >= 1")


@dataclass
class SweepRow:
    delta: int
    gamma: int
    maximal_count: int
    max_duration: int
    max_cardinality: int
    iterations: int
    seed_count: int
    wall_time: float = 0.0
    cliques: list[Clique] = field(default_factory=list, repr=False, compare=False)
    oracle: str = ""

    def csv_fields(self, with_wall_time: bool) -> list[int]:
        wall_ms = int(round(self.wall_time * 1000)) if with_wall_time else 0
        return [
            self.delta,
            self.gamma,
            self.maximal_count,
            self.max_duration,
            self.max_cardinality,
            self.iterations,
            self.seed_count,
            wall_ms,
        ]


def parse_int_list(text: str) -> list[int]:
    """``"1,2,5"`` or inclusive ``"START:STEP:END"``."""
    text = text.strip()
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) != 3:
                raise ConfigError(f"range must be START:STEP:END, got {text!r}")
            start, step, end = parts
            if step <= 0 or end < start:
                raise ConfigError(f"bad range {text!r}")
            return list(range(start, end + 1, step))
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ConfigError(f"not an integer list: {text!r}") from None


def select_maximum(results: Iterable[Clique], mode: str) -> list[Clique]:
    """Temporally (longest interval) or cardinally (most members) maximum
    cliques; ties are all kept."""
    if mode == "temporal":
        measure = lambda c: c.duration  # noqa: E731
    elif mode == "cardinal":
        measure = len
    else:
        raise ValueError(f"mode must be 'temporal' or 'cardinal', got {mode!r}")
    results = list(results)
    if not results:
        return []
    best = max(measure(c) for c in results)
    return sorted((c for c in results if measure(c) == best), key=lambda c: c.key)


def run_cell(net: TemporalNetwork, delta: int, gamma: int, dictionary=None, **oracle_opts) -> SweepRow:
    params = Parameters(delta, gamma, net.dt)
    cliques, stats = enumerate_maximal(net, params, dictionary=dictionary)
    row = SweepRow(
        delta=delta,
        gamma=gamma,
        maximal_count=len(cliques),
        max_duration=max((c.duration for c in cliques), default=0),
        max_cardinality=max((len(c) for c in cliques), default=0),
        iterations=stats.iterations,
        seed_count=stats.seeds,
        wall_time=stats.wall_time,
        cliques=cliques,
    )
    if oracle_opts.pop("oracle_check", False):
        try:
            expected = brute_force_maximal(net, params, **oracle_opts)
        except OracleBoundsError as exc:
            logger.warning("oracle skipped for delta=%d gamma=%d: %s", delta, gamma, exc)
            row.oracle = "skipped"
        else:
            row.oracle = "match" if expected == cliques else "mismatch"
    return row


def _sweep_delta(net: TemporalNetwork, delta: int, gammas, oracle_opts: dict) -> list[SweepRow]:
    dictionary = build_dictionary(net)
    rows = []
    if gammas == AUTO:
        # stop at the first empty cell; gamma beyond delta/dt + 1 is empty anyway
        gamma = AUTO_GAMMA_START
        while True:
            row = run_cell(net, delta, gamma, dictionary, **oracle_opts)
            rows.append(row)
            if row.maximal_count == 0:
                break
            gamma += 1
    else:
        for gamma in gammas:
            rows.append(run_cell(net, delta, gamma, dictionary, **oracle_opts))
    return rows


def iter_sweep(net: TemporalNetwork, config: SweepConfig) -> Iterator[SweepRow]:
    """Rows in grid order (delta-major).  With ``jobs > 1`` each delta runs in
    its own process; rows are still yielded in grid order."""
    config.validate(net.dt)
    oracle_opts = dict(
        oracle_check=config.oracle_check,
        max_vertices=config.oracle_max_vertices,
        max_grid=config.oracle_max_grid,
    )
    if config.jobs > 1 and len(config.deltas) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [
                pool.submit(_sweep_delta, net, d, config.gammas, oracle_opts) for d in config.deltas
            ]
            for fut in futures:
                yield from fut.result()
    else:
        for d in config.deltas:
            yield from _sweep_delta(net, d, config.gammas, oracle_opts)


def prepare_out_dir(out_dir: Path) -> None:
    """Fail early if ``out_dir`` cannot be written."""
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        probe = out_dir / ".write-probe"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise ConfigError(f"output directory {out_dir} is not writable: {exc}") from exc


def clique_record(c: Clique) -> dict:
    return {"vertices": list(c.members), "t_a": c.t_a, "t_b": c.t_b}


def write_cliques(path: Path, cliques: Sequence[Clique]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for c in sorted(cliques, key=lambda c: c.key):
            fh.write(json.dumps(clique_record(c)) + "\n")


def write_outputs(rows: Iterable[SweepRow], config: SweepConfig) -> list[SweepRow]:
    """Stream ``rows`` into ``sweep.csv`` (and per-cell jsonl files)."""
    out_dir = Path(config.out_dir)
    written = []
    with open(out_dir / "sweep.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.csv_fields(config.record_wall_time))
            fh.flush()
            if config.emit_cliques:
                write_cliques(out_dir / f"cliques_{row.delta}_{row.gamma}.jsonl", row.cliques)
            written.append(row)
    return written


def run_sweep(net: TemporalNetwork, config: SweepConfig) -> list[SweepRow]:
    """Run every cell; write outputs when ``config.out_dir`` is set.

    Raises :class:`OracleMismatch` (after all output is written) if any
    oracle-checked cell disagrees with the brute-force result.
    """
    config.validate(net.dt)
    rows = iter_sweep(net, config)
    if config.out_dir is not None:
        prepare_out_dir(config.out_dir)
        rows = write_outputs(rows, config)
    else:
        rows = list(rows)
    bad = [(r.delta, r.gamma) for r in rows if r.oracle == "mismatch"]
    if bad:
        raise OracleMismatch(f"oracle mismatch in cells {bad}")
    return rows

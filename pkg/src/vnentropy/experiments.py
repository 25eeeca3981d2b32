"""Greedy dismantling and its measurement tracks.

A dismantling run repeatedly removes the current top-scoring node of a
strategy and records, per step, the removed fraction q, the giant
component fraction G(q) relative to the original node count, the average
clustering coefficient, and optionally Spearman rank correlations
between the driving entropy strategy and other measures. Ensemble runs
average the per-step traces over independently seeded replicates.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Mapping, Sequence

import numpy as np
from scipy.stats import rankdata

from . import __version__
from .centrality import compute_centrality
from .generators import GeneratorConfig, generate
from .graph import Graph, average_clustering, giant_component_fraction, remove_nodes
from .scores import CentralityScores, Method

__all__ = [
    "DismantleStep",
    "DismantleTrace",
    "ExperimentConfig",
    "dismantle",
    "spearman",
    "correlation_trace",
    "run_figure_experiment",
    "write_trace_csv",
    "read_trace_csv",
]

FLOAT_FORMAT = ".12g"


def _fmt(value: float) -> str:
    return format(value, FLOAT_FORMAT)


@dataclass(frozen=True)
class DismantleStep:
    removed: str
    q: float
    giant_fraction: float
    avg_clustering: float
    spearman: Mapping[Method, float | None] = field(default_factory=dict)


@dataclass
class DismantleTrace:
    strategy: Method
    steps: list[DismantleStep]
    config: dict[str, object] = field(default_factory=dict)
    spearman_methods: tuple[Method, ...] = ()


def _strategy_scores(graph: Graph, method: Method, ci_radius: int) -> CentralityScores:
    """Scores for a dismantling step; degenerate graphs where a method is
    undefined (no edges for EC, fewer than two nodes for the exact
    entropy) fall back to uniform zeros so label order decides."""
    if method is Method.EC and graph.edge_count == 0:
        return CentralityScores(method, {v: 0.0 for v in graph.labels})
    if method is Method.CE_EXACT and graph.node_count < 2:
        return CentralityScores(method, {v: 0.0 for v in graph.labels})
    return compute_centrality(graph, method, ci_radius=ci_radius)


def _safe_average_clustering(graph: Graph) -> float:
    return average_clustering(graph) if graph.node_count else 0.0


def dismantle(graph: Graph, strategy: Method | str, stop_q: float = 1.0,
              adaptive: bool = True, ci_radius: int = 2) -> DismantleTrace:
    """Greedy removal loop driven by ``strategy``.

    With ``adaptive`` (the default) scores are recomputed on the current
    graph before every removal; otherwise the ranking of the intact
    graph is replayed. Stops after ceil(stop_q * N0) removals.
    """
    strategy = Method(strategy)
    if not 0.0 < stop_q <= 1.0:
        raise ValueError("stop_q must lie in (0, 1]")
    n0 = graph.node_count
    if n0 == 0:
        raise ValueError("cannot dismantle an empty graph")
    total = math.ceil(stop_q * n0)
    static_order: list[str] = []
    if not adaptive:
        static_order = [v for v, _ in _strategy_scores(graph, strategy, ci_radius).ranked()]
    current = graph
    steps: list[DismantleStep] = []
    for step in range(total):
        if adaptive:
            target = _strategy_scores(current, strategy, ci_radius).ranked()[0][0]
        else:
            target = static_order[step]
        current = remove_nodes(current, (target,))
        steps.append(DismantleStep(
            removed=target,
            q=(step + 1) / n0,
            giant_fraction=giant_component_fraction(current, n0),
            avg_clustering=_safe_average_clustering(current),
        ))
    return DismantleTrace(
        strategy=strategy,
        steps=steps,
        config={"n0": n0, "strategy": strategy.value, "stop_q": stop_q,
                "adaptive": adaptive, "ci_radius": ci_radius},
    )


def spearman(x: CentralityScores, y: CentralityScores) -> float:
    """Spearman rank correlation: Pearson correlation of average ranks
    (ties get fractional ranks). Raises on mismatched node sets, fewer
    than two nodes, or a constant score vector."""
    if set(x.scores) != set(y.scores):
        raise ValueError("score maps cover different node sets")
    labels = sorted(x.scores)
    if len(labels) < 2:
        raise ValueError("spearman correlation needs at least two nodes")
    xv = np.array([x.scores[v] for v in labels])
    yv = np.array([y.scores[v] for v in labels])
    if np.all(xv == xv[0]) or np.all(yv == yv[0]):
        raise ValueError("constant score vector has zero rank variance")
    rx = rankdata(xv)
    ry = rankdata(yv)
    return float(np.corrcoef(rx, ry)[0, 1])


def correlation_trace(graph: Graph, driver: Method | str,
                      others: Sequence[Method | str], stop_q: float = 1.0,
                      adaptive: bool = True, ci_radius: int = 2) -> DismantleTrace:
    """Dismantle by an entropy strategy and record, after each removal,
    the Spearman correlation between the driver's scores and each other
    method on the surviving graph. Degenerate snapshots (constant scores
    or a measure that is undefined on the survivor) are recorded as
    absent values, not errors."""
    driver = Method(driver)
    if driver not in (Method.CE_EXACT, Method.CE_APPROX):
        raise ValueError("correlation traces are driven by ce_exact or ce_approx")
    others = tuple(Method(m) for m in others)
    if not 0.0 < stop_q <= 1.0:
        raise ValueError("stop_q must lie in (0, 1]")
    n0 = graph.node_count
    if n0 == 0:
        raise ValueError("cannot dismantle an empty graph")
    total = math.ceil(stop_q * n0)
    current = graph
    driver_scores = _strategy_scores(current, driver, ci_radius)
    static_order = [v for v, _ in driver_scores.ranked()] if not adaptive else []
    steps: list[DismantleStep] = []
    for step in range(total):
        # snapshots always need survivor scores, so the driver is rescored
        # even in static mode; static mode only fixes the removal order
        target = static_order[step] if not adaptive else driver_scores.ranked()[0][0]
        current = remove_nodes(current, (target,))
        driver_scores = _strategy_scores(current, driver, ci_radius)
        snapshots: dict[Method, float | None] = {}
        for method in others:
            try:
                other_scores = _strategy_scores(current, method, ci_radius)
                snapshots[method] = spearman(driver_scores, other_scores)
            except ValueError:
                snapshots[method] = None
        steps.append(DismantleStep(
            removed=target,
            q=(step + 1) / n0,
            giant_fraction=giant_component_fraction(current, n0),
            avg_clustering=_safe_average_clustering(current),
            spearman=snapshots,
        ))
    return DismantleTrace(
        strategy=driver,
        steps=steps,
        config={"n0": n0, "strategy": driver.value, "stop_q": stop_q,
                "adaptive": adaptive, "ci_radius": ci_radius,
                "others": ",".join(m.value for m in others)},
        spearman_methods=others,
    )


# -- trace serialization ---------------------------------------------------


def write_trace_csv(trace: DismantleTrace, target: IO[str]) -> None:
    """CSV schema: step, q, removed_node, giant_fraction, avg_clustering,
    then one spearman_<METHOD> column per tracked method (empty cell for
    an absent value)."""
    writer = csv.writer(target, lineterminator="\n")
    columns = ["step", "q", "removed_node", "giant_fraction", "avg_clustering"]
    columns += [f"spearman_{m.name}" for m in trace.spearman_methods]
    writer.writerow(columns)
    for i, step in enumerate(trace.steps, start=1):
        row = [str(i), _fmt(step.q), step.removed,
               _fmt(step.giant_fraction), _fmt(step.avg_clustering)]
        for m in trace.spearman_methods:
            value = step.spearman.get(m)
            row.append("" if value is None else _fmt(value))
        writer.writerow(row)


def read_trace_csv(source: IO[str]) -> DismantleTrace:
    """Inverse of :func:`write_trace_csv` (strategy metadata not recoverable
    from the CSV alone is left unset)."""
    reader = csv.reader(source)
    header = next(reader)
    expected = ["step", "q", "removed_node", "giant_fraction", "avg_clustering"]
    if header[:5] != expected:
        raise ValueError(f"unexpected trace header: {header!r}")
    methods = tuple(Method[name.removeprefix("spearman_")] for name in header[5:])
    steps = []
    for row in reader:
        snapshots = {
            m: (float(cell) if cell else None)
            for m, cell in zip(methods, row[5:])
        }
        steps.append(DismantleStep(
            removed=row[2], q=float(row[1]),
            giant_fraction=float(row[3]), avg_clustering=float(row[4]),
            spearman=snapshots,
        ))
    return DismantleTrace(strategy=Method.CE_EXACT, steps=steps,
                          spearman_methods=methods)


def write_metadata(entries: Mapping[str, object], target: IO[str]) -> None:
    for key, value in entries.items():
        target.write(f"{key}={value}\n")


# -- ensemble driver --------------------------------------------------------


@dataclass(frozen=True)
class ExperimentConfig:
    """Descriptor for an averaged multi-replicate experiment."""

    name: str
    generator: GeneratorConfig          # seed field acts as the master seed
    replicates: int
    track: str                          # "giant" | "clustering" | "spearman"
    strategies: tuple[Method, ...] = ()  # giant/clustering tracks
    driver: Method | None = None        # spearman track
    others: tuple[Method, ...] = ()     # spearman track
    stop_q: float = 1.0
    adaptive: bool = True
    ci_radius: int = 2

    def validate(self) -> None:
        self.generator.validate()
        if self.replicates < 1:
            raise ValueError("replicate count must be at least 1")
        if self.track not in ("giant", "clustering", "spearman"):
            raise ValueError(f"unknown track: {self.track!r}")
        if self.track == "spearman":
            if self.driver is None or not self.others:
                raise ValueError("spearman track needs a driver and other methods")
        elif not self.strategies:
            raise ValueError("giant/clustering tracks need at least one strategy")
        if not 0.0 < self.stop_q <= 1.0:
            raise ValueError("stop_q must lie in (0, 1]")


def replicate_seeds(master_seed: int, count: int) -> list[int]:
    """Per-replicate 64-bit seeds derived deterministically from the master."""
    state = np.random.SeedSequence(master_seed).generate_state(count, dtype=np.uint64)
    return [int(s) for s in state]


def _replicate_config(config: ExperimentConfig, seed: int) -> GeneratorConfig:
    g = config.generator
    return GeneratorConfig(model=g.model, n=g.n, seed=seed, m=g.m, gamma=g.gamma,
                           k_min=g.k_min, dim=g.dim, mean_degree=g.mean_degree)


def _run_replicate(args: tuple[ExperimentConfig, int]) -> dict[str, list[float | None]]:
    """One replicate of an experiment; returns per-strategy step series."""
    config, seed = args
    graph = generate(_replicate_config(config, seed))
    series: dict[str, list[float | None]] = {}
    if config.track == "spearman":
        trace = correlation_trace(graph, config.driver, config.others,
                                  stop_q=config.stop_q, adaptive=config.adaptive,
                                  ci_radius=config.ci_radius)
        for m in config.others:
            series[f"spearman_{m.name}"] = [s.spearman.get(m) for s in trace.steps]
    else:
        attribute = "giant_fraction" if config.track == "giant" else "avg_clustering"
        prefix = "G" if config.track == "giant" else "C"
        for strategy in config.strategies:
            trace = dismantle(graph, strategy, stop_q=config.stop_q,
                              adaptive=config.adaptive, ci_radius=config.ci_radius)
            series[f"{prefix}_{strategy.name}"] = [getattr(s, attribute) for s in trace.steps]
    return series


def run_figure_experiment(config: ExperimentConfig, out_dir, svg: bool = False,
                          workers: int = 1) -> list[str]:
    """Run all replicates, average the traces pointwise over the shared
    q-grid, and emit ``<name>.csv`` plus a ``<name>.meta`` sidecar (and
    ``<name>.svg`` on request). Returns the written paths."""
    from pathlib import Path

    config.validate()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    seeds = replicate_seeds(config.generator.seed, config.replicates)
    jobs = [(config, seed) for seed in seeds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_replicate, jobs))
    else:
        results = [_run_replicate(job) for job in jobs]

    columns = list(results[0])
    length = len(next(iter(results[0].values())))
    q_grid = [(i + 1) / config.generator.n for i in range(length)]
    averaged: dict[str, list[float | None]] = {}
    for column in columns:
        rows = [r[column] for r in results]
        merged: list[float | None] = []
        for i in range(length):
            values = [row[i] for row in rows if row[i] is not None]
            merged.append(sum(values) / len(values) if values else None)
        averaged[column] = merged

    paths: list[str] = []
    csv_path = out / f"{config.name}.csv"
    with open(csv_path, "w") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["q"] + columns)
        for i, q in enumerate(q_grid):
            row = [_fmt(q)]
            for column in columns:
                value = averaged[column][i]
                row.append("" if value is None else _fmt(value))
            writer.writerow(row)
    paths.append(str(csv_path))

    meta_path = out / f"{config.name}.meta"
    with open(meta_path, "w") as handle:
        entries = dict(config.generator.header())
        entries.update({
            "experiment": config.name,
            "track": config.track,
            "replicates": config.replicates,
            "replicate_seeds": ",".join(str(s) for s in seeds),
            "stop_q": config.stop_q,
            "adaptive": config.adaptive,
            "ci_radius": config.ci_radius,
            "tool_version": __version__,
        })
        if config.track == "spearman":
            entries["driver"] = config.driver.value
            entries["others"] = ",".join(m.value for m in config.others)
        else:
            entries["strategies"] = ",".join(m.value for m in config.strategies)
        write_metadata(entries, handle)
    paths.append(str(meta_path))

    if svg:
        from .charts import polyline_chart
        svg_path = out / f"{config.name}.svg"
        series = {
            column: [(q, value) for q, value in zip(q_grid, averaged[column])
                     if value is not None]
            for column in columns
        }
        ylabel = {"giant": "giant component fraction",
                  "clustering": "average clustering",
                  "spearman": "spearman correlation"}[config.track]
        polyline_chart(series, svg_path, title=config.name,
                       xlabel="removed fraction q", ylabel=ylabel)
        paths.append(str(svg_path))
    return paths

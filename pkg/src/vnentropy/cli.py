"""Command-line interface.

Subcommands: centrality, entropy, dismantle, generate, experiment,
spearman. Graph inputs are file paths or bundled dataset names; all
numeric CSV output uses 12 significant digits so runs replay exactly.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .centrality import compute_centrality
from .datasets import BUNDLED, resolve_graph
from .errors import ConvergenceError, GenerationError
from .experiments import (
    ExperimentConfig,
    correlation_trace,
    dismantle,
    run_figure_experiment,
    spearman,
    write_metadata,
    write_trace_csv,
)
from .generators import GeneratorConfig, generate
from .graph import write_edge_list
from .scores import Method
from .spectral import (
    entropy_s1,
    entropy_s2,
    normalized_laplacian,
    von_neumann_entropy,
)
from .eigen import count_zero_eigenvalues, symmetric_eigenvalues

METHOD_CHOICES = [m.value for m in Method]
MODEL_ALIASES = {"er": "er_gnm", "sf": "sf_config", "rgg": "rgg"}


def _fmt(value: float) -> str:
    return format(value, ".12g")


def _open_output(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def parse_key_value_file(path: str) -> dict[str, str]:
    """Parse a '#'-commented key=value configuration file."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        entries[key.strip()] = value.strip()
    return entries


def _methods_from(text: str) -> tuple[Method, ...]:
    return tuple(Method(tag.strip()) for tag in text.split(",") if tag.strip())


def experiment_config_from_file(path: str) -> ExperimentConfig:
    entries = parse_key_value_file(path)
    try:
        generator = GeneratorConfig.from_mapping(entries)
        config = ExperimentConfig(
            name=entries.get("name", Path(path).stem),
            generator=generator,
            replicates=int(entries.get("replicates", 1)),
            track=entries.get("track", "giant"),
            strategies=_methods_from(entries.get("strategies", "")),
            driver=Method(entries["driver"]) if "driver" in entries else None,
            others=_methods_from(entries.get("others", "")),
            stop_q=float(entries.get("stop_q", 1.0)),
            adaptive=entries.get("adaptive", "true").lower() != "false",
            ci_radius=int(entries.get("ci_radius", 2)),
        )
    except KeyError as exc:
        raise ValueError(f"{path}: missing required key {exc}") from None
    config.validate()
    return config


# -- subcommand handlers ----------------------------------------------------


def cmd_centrality(args) -> int:
    graph = resolve_graph(args.data)
    method = Method(args.method)
    scores = compute_centrality(graph, method, ci_radius=args.ci_radius)
    ranks = scores.dense_ranks()
    target, owned = _open_output(args.output)
    try:
        target.write("node,score,rank\n")
        for label, score in scores.ranked():
            target.write(f"{label},{_fmt(score)},{ranks[label]}\n")
    finally:
        if owned:
            target.close()
    return 0


def cmd_entropy(args) -> int:
    graph = resolve_graph(args.data)
    print(f"nodes={graph.node_count}")
    print(f"edges={graph.edge_count}")
    if args.level == "exact":
        eigenvalues = symmetric_eigenvalues(normalized_laplacian(graph))
        from .spectral import entropy_from_spectrum
        print(f"entropy={_fmt(entropy_from_spectrum(eigenvalues))}")
        if len(eigenvalues):
            print(f"eigenvalue_min={_fmt(float(eigenvalues[0]))}")
            print(f"eigenvalue_max={_fmt(float(eigenvalues[-1]))}")
            print(f"eigenvalue_sum={_fmt(float(eigenvalues.sum()))}")
            print(f"zero_eigenvalues={count_zero_eigenvalues(eigenvalues)}")
    elif args.level == "s1":
        print(f"entropy={_fmt(entropy_s1(graph))}")
    else:
        print(f"entropy={_fmt(entropy_s2(graph, alt_coefficients=args.alt_coefficients))}")
    return 0


def cmd_dismantle(args) -> int:
    graph = resolve_graph(args.data)
    strategy = Method(args.strategy)
    extra = _methods_from(args.spearman_with) if args.spearman_with else ()
    if extra:
        trace = correlation_trace(graph, strategy, extra, stop_q=args.stop_q,
                                  adaptive=not args.static, ci_radius=args.ci_radius)
    else:
        trace = dismantle(graph, strategy, stop_q=args.stop_q,
                          adaptive=not args.static, ci_radius=args.ci_radius)
    with open(args.output, "w") as handle:
        write_trace_csv(trace, handle)
    meta = dict(trace.config)
    meta.update({"source": args.data, "tool_version": __version__})
    with open(Path(args.output).with_suffix(".meta"), "w") as handle:
        write_metadata(meta, handle)
    return 0


def cmd_generate(args) -> int:
    config = GeneratorConfig(
        model=MODEL_ALIASES[args.model],
        n=args.n,
        seed=args.seed,
        m=args.m,
        gamma=args.gamma,
        k_min=args.k_min,
        dim=args.dim,
        mean_degree=args.mean_degree,
    )
    config.validate()
    graph = generate(config)
    target, owned = _open_output(args.output)
    try:
        write_edge_list(graph, target, header=config.header())
    finally:
        if owned:
            target.close()
    return 0


def cmd_experiment(args) -> int:
    config = experiment_config_from_file(args.config)
    paths = run_figure_experiment(config, args.output_dir,
                                  svg=args.format == "svg", workers=args.workers)
    for path in paths:
        print(path)
    return 0


def cmd_spearman(args) -> int:
    graph = resolve_graph(args.data)
    x = compute_centrality(graph, Method(args.method_x), ci_radius=args.ci_radius)
    y = compute_centrality(graph, Method(args.method_y), ci_radius=args.ci_radius)
    print(f"spearman={_fmt(spearman(x, y))}")
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vnentropy",
        description="Spectral-entropy node centrality and network dismantling.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_data(p):
        p.add_argument("--data", required=True,
                       help=f"edge-list path or bundled dataset ({', '.join(BUNDLED)})")

    p = sub.add_parser("centrality", help="score every node with one method")
    add_data(p)
    p.add_argument("--method", required=True, choices=METHOD_CHOICES)
    p.add_argument("--ci-radius", type=int, default=2)
    p.add_argument("--output", help="CSV path (default stdout)")
    p.set_defaults(handler=cmd_centrality)

    p = sub.add_parser("entropy", help="spectral entropy of a graph")
    add_data(p)
    p.add_argument("--level", choices=["exact", "s1", "s2"], default="exact")
    p.add_argument("--alt-coefficients", action="store_true",
                   help="with --level s2: use the alternative closed-form coefficients")
    p.set_defaults(handler=cmd_entropy)

    p = sub.add_parser("dismantle", help="greedy node removal trace")
    add_data(p)
    p.add_argument("--strategy", required=True, choices=METHOD_CHOICES)
    p.add_argument("--stop-q", type=float, default=1.0)
    p.add_argument("--static", action="store_true",
                   help="rank once on the intact graph instead of adaptively")
    p.add_argument("--ci-radius", type=int, default=2)
    p.add_argument("--spearman-with",
                   help="comma-separated methods to correlate against per step "
                        "(entropy strategies only)")
    p.add_argument("--output", required=True, help="trace CSV path")
    p.set_defaults(handler=cmd_dismantle)

    p = sub.add_parser("generate", help="write a random graph as an edge list")
    p.add_argument("--model", required=True, choices=sorted(MODEL_ALIASES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="edge count (er)")
    p.add_argument("--gamma", type=float, help="power-law exponent (sf)")
    p.add_argument("--k-min", type=int, default=2, help="minimum degree (sf)")
    p.add_argument("--dim", type=int, help="embedding dimension (rgg)")
    p.add_argument("--mean-degree", type=float, help="target mean degree (rgg)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--output", help="edge-list path (default stdout)")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("experiment", help="averaged multi-replicate experiment")
    p.add_argument("--config", required=True, help="key=value experiment descriptor")
    p.add_argument("--output-dir", required=True)
    p.add_argument("--format", choices=["csv", "svg"], default="csv",
                   help="svg additionally renders a line chart")
    p.add_argument("--workers", type=int, default=1,
                   help="parallel replicate processes")
    p.set_defaults(handler=cmd_experiment)

    p = sub.add_parser("spearman", help="rank correlation between two methods")
    add_data(p)
    p.add_argument("--method-x", required=True, choices=METHOD_CHOICES)
    p.add_argument("--method-y", required=True, choices=METHOD_CHOICES)
    p.add_argument("--ci-radius", type=int, default=2)
    p.set_defaults(handler=cmd_spearman)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, KeyError, OSError, ConvergenceError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every command that writes files also writes ``<output>.manifest.json``
recording the argument vector, parameters, seed and SHA-256 digests of the
inputs and outputs. ``hyperkit replay MANIFEST --check`` re-runs it and
verifies the digests.

Exit codes: 0 success, 2 invalid usage or input, 3 domain error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional

from . import __version__
from .algorithms import connected_components, graph_expansion, simple_reduction
from .core import Hypergraph, MultilayerHypergraph
from .dynamics.schelling import SchellingState, schelling_run
from .dynamics.sir import SIRConfig, pick_initial_infected, sir_run
from .dynamics.trajectory import WALK_COLUMNS, Trajectory
from .dynamics.walk import random_walk
from .errors import DomainError, HyperkitError, InvalidParameter, ValidationError
from .generators import GENERATORS
from .io import (
    export_bipartite,
    export_graph,
    export_incidence_csv,
    export_trajectory_csv,
    load,
    save,
)
from .metrics import METRICS
from .rng import make_rng, spawn_seeds

log = logging.getLogger("hyperkit")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

GENERATOR_PARAMS = {
    "simple-matrix": ("n", "m", "p"),
    "simple-bipartite": ("n", "m", "p"),
    "simple-powersets": ("n", "p"),
    "simple-order": ("n", "k", "p"),
    "k-uniform": ("n", "k", "p"),
}


class UsageError(ValidationError):
    pass


# -- helpers -----------------------------------------------------------------


def _sha256(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _write_manifest(args, argv: List[str], inputs: List[Path], outputs: List[Path]) -> Path:
    params = {
        k: (str(v) if isinstance(v, Path) else v)
        for k, v in sorted(vars(args).items())
        if k not in ("func",)
    }
    manifest = {
        "tool": "hyperkit",
        "version": __version__,
        "subcommand": args.command,
        "argv": list(argv),
        "parameters": params,
        "seed": getattr(args, "seed", None),
        "inputs": {str(p): _sha256(p) for p in inputs},
        "outputs": {str(p): _sha256(p) for p in outputs},
    }
    path = Path(str(args.output) + ".manifest.json")
    path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return path


def _load_hypergraph(path: Path) -> Hypergraph:
    h = load(path)
    if isinstance(h, MultilayerHypergraph):
        raise UsageError("this command needs a single-layer hypergraph document")
    return h


def _sibling(path: Path, tag: str, suffix: Optional[str] = None) -> Path:
    suffix = path.suffix if suffix is None else suffix
    return path.with_name(f"{path.stem}.{tag}{suffix}")


# -- generate ----------------------------------------------------------------


def cmd_generate(args, argv) -> int:
    needed = GENERATOR_PARAMS[args.model]
    missing = [f"--{name}" for name in needed if getattr(args, name) is None]
    if missing:
        raise UsageError(f"model {args.model} requires {', '.join(missing)}")
    kwargs = {name: getattr(args, name) for name in needed}
    h = GENERATORS[args.model](seed=args.seed, **kwargs)
    save(h, args.output)
    _write_manifest(args, argv, [], [args.output])
    log.info("wrote %r to %s", h, args.output)
    return EXIT_OK


# -- metrics -----------------------------------------------------------------


def metrics_report(h: Hypergraph) -> Dict:
    report: Dict = {"vertices": h.num_vertices, "edges": h.num_edges}
    reasons = {}
    for name, fn in METRICS.items():
        try:
            report[name] = fn(h)
        except DomainError as exc:
            report[name] = None
            reasons[name] = "no edges" if h.num_vertices else "no vertices"
            log.debug("%s undefined: %s", name, exc)
    report["reasons"] = reasons
    return report


def cmd_metrics(args, argv) -> int:
    h = _load_hypergraph(args.input)
    report = metrics_report(h)
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        lines = [f"{k}={'null' if v is None else v}" for k, v in report.items() if k != "reasons"]
        lines += [f"{k}_reason={v}" for k, v in report["reasons"].items()]
        text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.output is not None:
        Path(args.output).write_text(text, encoding="utf-8")
        _write_manifest(args, argv, [args.input], [args.output])
    return EXIT_OK


# -- analyze -----------------------------------------------------------------


def cmd_analyze(args, argv) -> int:
    h = _load_hypergraph(args.input)
    if args.op == "components":
        comps = connected_components(h)
        Path(args.output).write_text(json.dumps(comps) + "\n", encoding="utf-8")
    elif args.op == "reduce":
        save(simple_reduction(h), args.output)
    else:
        if args.mode is None:
            raise UsageError("--op expand requires --mode clique|star")
        export_graph(graph_expansion(h, args.mode), args.output)
    _write_manifest(args, argv, [args.input], [args.output])
    return EXIT_OK


# -- export ------------------------------------------------------------------


def cmd_export(args, argv) -> int:
    h = _load_hypergraph(args.input)
    if args.format == "bipartite":
        export_bipartite(h, args.output)
    else:
        export_incidence_csv(h, args.output)
    _write_manifest(args, argv, [args.input], [args.output])
    return EXIT_OK


# -- simulate ----------------------------------------------------------------


def _simulate_once(kind: str, h: Hypergraph, params: Dict, seed) -> Trajectory:
    rng = make_rng(seed)
    if kind == "sir":
        if params["infected"]:
            infected = frozenset(params["infected"])
        else:
            infected = pick_initial_infected(h, params["initial_infected"], rng)
        cfg = SIRConfig(params["beta"], params["gamma"], infected, params["steps"])
        traj = sir_run(h, cfg, rng)
        traj.final_state = {"kind": "sir", "states": {str(v): s for v, s in traj.final_state.items()}}
        return traj
    if kind == "schelling":
        state = SchellingState.random(h, params["labels"], params["per_label"], params["tau"], rng)
        _, traj = schelling_run(h, state, params["iters"])
        traj.final_state = {
            "kind": "schelling",
            "tau": params["tau"],
            "labels": {str(v): a for v, a in sorted(traj.final_state.items())},
        }
        return traj
    start = params["start"] if params["start"] is not None else min(h.vertices, default=0)
    path = random_walk(h, start, params["steps"], params["lazy"], rng)
    traj = Trajectory(WALK_COLUMNS, list(enumerate(path)))
    traj.final_state = {"kind": "walk", "vertex": path[-1]}
    return traj


def _summary_row(kind: str, run: int, traj: Trajectory):
    last = traj.rows[-1]
    if kind == "sir":
        return (run, *last[1:])
    if kind == "schelling":
        return (run, traj.rows[0][1], last[1], sum(traj.column("moves")))
    return (run, traj.rows[0][1], last[1])


SUMMARY_COLUMNS = {
    "sir": ("run", "S", "I", "R"),
    "schelling": ("run", "initial_mean_G", "final_mean_G", "moves"),
    "walk": ("run", "start", "end"),
}


def _write_run(traj: Trajectory, out: Path) -> List[Path]:
    state_path = _sibling(out, "state", ".json")
    export_trajectory_csv(traj, out)
    state_path.write_text(json.dumps(traj.final_state, indent=2) + "\n", encoding="utf-8")
    return [out, state_path]


def cmd_simulate(args, argv) -> int:
    h = _load_hypergraph(args.input)
    params = {k: v for k, v in vars(args).items() if k not in ("func", "input", "output")}
    out = Path(args.output)
    if args.runs < 1:
        raise InvalidParameter("--runs must be at least 1")
    if args.runs == 1:
        outputs = _write_run(_simulate_once(args.kind, h, params, args.seed), out)
    else:
        seeds = spawn_seeds(args.seed, args.runs)
        jobs = max(1, min(args.jobs, args.runs))
        if jobs == 1:
            trajs = [_simulate_once(args.kind, h, params, s) for s in seeds]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                trajs = list(
                    pool.map(_simulate_once, [args.kind] * args.runs, [h] * args.runs,
                             [params] * args.runs, seeds)
                )
        outputs = []
        for i, traj in enumerate(trajs):
            outputs += _write_run(traj, _sibling(out, f"run{i}"))
        summary = Trajectory(SUMMARY_COLUMNS[args.kind],
                             [_summary_row(args.kind, i, t) for i, t in enumerate(trajs)])
        export_trajectory_csv(summary, out)
        outputs.append(out)
    _write_manifest(args, argv, [args.input], outputs)
    return EXIT_OK


# -- replay ------------------------------------------------------------------


def cmd_replay(args, argv) -> int:
    manifest = json.loads(Path(args.manifest).read_text(encoding="utf-8"))
    recorded = manifest.get("argv")
    if not isinstance(recorded, list) or recorded[:1] == ["replay"]:
        raise UsageError("manifest has no replayable argv")
    code = main(recorded)
    if code != EXIT_OK or not args.check:
        return code
    bad = [p for p, digest in manifest["outputs"].items() if _sha256(Path(p)) != digest]
    for p in bad:
        log.error("output differs from manifest: %s", p)
    if bad:
        sys.stderr.write(f"hyperkit: {len(bad)} output(s) differ from the manifest\n")
        return EXIT_DOMAIN
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def _probability(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _seed(text: str) -> int:
    return int(text, 0)


def _add_walk_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--start", type=int, default=None, help="start vertex (default: smallest id)")
    p.add_argument("--lazy", action="store_true")


def _add_sim_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-i", "--input", type=Path, required=True)
    p.add_argument("-o", "--output", type=Path, required=True, help="trajectory CSV")
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--runs", type=int, default=1, help="independent seeded runs")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --runs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperkit", description="Hypergraph toolkit")
    parser.add_argument("--version", action="version", version=f"hyperkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample a random hypergraph")
    p.add_argument("--model", choices=sorted(GENERATORS), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=_probability)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("metrics", help="density, girth, average degree and edge size")
    p.add_argument("-i", "--input", type=Path, required=True)
    p.add_argument("-o", "--output", type=Path)
    p.add_argument("--format", choices=("json", "kv"), default="json")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("analyze", help="components, simple reduction or expansion")
    p.add_argument("-i", "--input", type=Path, required=True)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--op", choices=("components", "reduce", "expand"), required=True)
    p.add_argument("--mode", choices=("clique", "star"))
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export", help="bipartite edge list or incidence CSV")
    p.add_argument("-i", "--input", type=Path, required=True)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--format", choices=("bipartite", "incidence"), required=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("simulate", help="run a dynamical process")
    kinds = p.add_subparsers(dest="kind", required=True)

    k = kinds.add_parser("sir")
    _add_sim_common(k)
    k.add_argument("--beta", type=_probability, required=True)
    k.add_argument("--gamma", type=_probability, required=True)
    k.add_argument("--steps", type=int, required=True)
    k.add_argument("--initial-infected", type=int, default=1,
                   help="number of randomly chosen initially infected vertices")
    k.add_argument("--infected", type=int, nargs="+", default=None,
                   help="explicit initially infected vertices (overrides --initial-infected)")

    k = kinds.add_parser("schelling")
    _add_sim_common(k)
    k.add_argument("--labels", type=int, required=True)
    k.add_argument("--per-label", type=int, required=True)
    k.add_argument("--tau", type=_probability, required=True)
    k.add_argument("--iters", type=int, required=True)

    k = kinds.add_parser("walk")
    _add_sim_common(k)
    _add_walk_flags(k)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("walk", help="shorthand for 'simulate walk'")
    _add_sim_common(p)
    _add_walk_flags(p)
    p.set_defaults(func=cmd_simulate, kind="walk")

    p = sub.add_parser("replay", help="re-run the command recorded in a manifest")
    p.add_argument("manifest", type=Path)
    p.add_argument("--check", action="store_true", help="verify output digests")
    p.set_defaults(func=cmd_replay)
    return parser


def _configure_logging() -> None:
    level = os.environ.get("HYPERKIT_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    _configure_logging()
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, argv)
    except ValidationError as exc:
        sys.stderr.write(f"hyperkit: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    except HyperkitError as exc:
        sys.stderr.write(f"hyperkit: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        sys.stderr.write(f"hyperkit: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

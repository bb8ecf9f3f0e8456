"""Command-line front end.

Exit codes: 0 success, 1 invariant violation, 2 usage error, 3 I/O error.
Every subcommand writes its primary output to stdout unless --out is given.
"""

from __future__ import annotations

import argparse
import json
import sys

from .components import (
    case4_cutoff,
    case4_shape_check,
    connected_components,
    is_star,
)
from .cube_graph import (
    DENSE_STREAM_TAG,
    RNG_NAME,
    SPARSE_SAMPLER_THRESHOLD,
    SPARSE_STREAM_TAG,
    SampleParams,
    max_degree,
    read_edge_file,
    sample_subgraph,
    write_edge_file,
)
from .degree_theory import (
    degree_profile,
    prob_max_degree_ge,
    prob_max_degree_lt,
)
from .eigensolve import SolverConfig, lanczos_lambda1
from .experiment import (
    ExperimentConfig,
    SchemaError,
    parse_p_rule,
    plot_ratio,
    read_records,
    records_text,
    run_experiment,
    summarize,
    summary_text,
    verify_suite,
)
from .locality_stats import lemma22_i_stat, lemma22_ii_stat
from .spectral_bounds import bound_report, sandwich_bounds


class InvariantViolation(Exception):
    """A computed quantity broke a bound that must always hold."""


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=1)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0, help="master seed")
    sub.add_argument("--threads", type=int, default=1, help="worker threads")
    sub.add_argument("--out", default=None, help="output file (default stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default=None)


def _add_sampling(sub: argparse.ArgumentParser, with_edges: bool = True) -> None:
    sub.add_argument("--n", type=int, default=None, help="cube dimension")
    sub.add_argument("--p", type=float, default=None, help="edge probability")
    sub.add_argument("--trial", type=int, default=0, help="trial index for seed derivation")
    if with_edges:
        sub.add_argument("--edges", default=None, help="read graph from an edge file instead")


def _graph_from_args(args, parser):
    """Either sample from (--n, --p, --seed, --trial) or load --edges."""
    edges = getattr(args, "edges", None)
    if edges is not None:
        if args.n is not None or args.p is not None:
            parser.error("--edges cannot be combined with --n/--p")
        return read_edge_file(edges), None
    if args.n is None or args.p is None:
        parser.error("need either --edges or both --n and --p")
    params = SampleParams(n=args.n, p=args.p, master_seed=args.seed, trial_index=args.trial)
    return sample_subgraph(params), params


def _solver_from_args(args) -> SolverConfig:
    kwargs = {}
    if getattr(args, "tol", None) is not None:
        kwargs["tol"] = args.tol
    if getattr(args, "max_iter", None) is not None:
        kwargs["max_iter"] = args.max_iter
    return SolverConfig(**kwargs)


def _cmd_sample(args, parser) -> int:
    if args.n is None or args.p is None:
        parser.error("sample requires --n and --p")
    params = SampleParams(n=args.n, p=args.p, master_seed=args.seed, trial_index=args.trial)
    graph = sample_subgraph(params)
    if args.emit_edges:
        write_edge_file(graph, args.emit_edges)
    sparse = 0.0 < args.p < SPARSE_SAMPLER_THRESHOLD
    _emit(_json({
        "n": graph.n,
        "p": args.p,
        "trial_index": args.trial,
        "derived_seed": params.seed(),
        "m": graph.edge_count,
        "max_degree": max_degree(graph),
        "rng": RNG_NAME,
        "stream": SPARSE_STREAM_TAG if sparse else DENSE_STREAM_TAG,
    }), args.out)
    return 0


def _cmd_eig(args, parser) -> int:
    graph, _ = _graph_from_args(args, parser)
    result = lanczos_lambda1(graph, _solver_from_args(args), return_vector=bool(args.emit_vector))
    if args.emit_vector:
        with open(args.emit_vector, "w", encoding="ascii") as fh:
            for value in result.vector:
                fh.write(f"{value:.17g}\n")
    _emit(_json({
        "lambda1": result.lambda1,
        "iterations": result.iterations,
        "residual": result.residual,
        "converged": result.converged,
    }), args.out)
    return 0


def _cmd_bounds(args, parser) -> int:
    graph, params = _graph_from_args(args, parser)
    p = params.p if params is not None else None
    report = bound_report(graph, p=p)
    result = lanczos_lambda1(graph, _solver_from_args(args))
    lam = result.lambda1
    lower, upper = sandwich_bounds(graph)
    checks = {
        "sandwich_lower": lower <= lam + 1e-9,
        "sandwich_upper": lam <= upper + 1e-9,
        "sqrt_edges": lam <= report.sqrt_edges + 1e-9,
        "walk2": lam <= report.walk2_bound + 1e-9,
    }
    _emit(_json({
        "lambda1": lam,
        "converged": result.converged,
        "sqrt_max_degree": report.sqrt_max_degree,
        "avg_degree": report.avg_degree,
        "max_degree_bound": report.max_degree_bound,
        "sqrt_edges": report.sqrt_edges,
        "walk2_bound": report.walk2_bound,
        "prediction": report.prediction,
        "checks": checks,
    }), args.out)
    if not all(checks.values()):
        raise InvariantViolation(
            "bound violated: " + ", ".join(k for k, v in checks.items() if not v)
        )
    return 0


def _cmd_kappa(args, parser) -> int:
    if args.n is None or args.p is None:
        parser.error("kappa requires --n and --p")
    profile = degree_profile(args.n, args.p)
    span = profile.predicted_delta_range
    _emit(_json({
        "n": profile.n,
        "p": profile.p,
        "kappa": profile.kappa,
        "regime": profile.regime,
        "predicted_delta_range": list(span) if span is not None else None,
        "c_coefficient": profile.c_coefficient,
    }), args.out)
    return 0


def _cmd_tails(args, parser) -> int:
    if args.n is None or args.p is None:
        parser.error("tails requires --n and --p")
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    n, p = args.n, args.p
    deltas = []
    for trial in range(args.trials):
        graph = sample_subgraph(SampleParams(n=n, p=p, master_seed=args.seed, trial_index=trial))
        deltas.append(max_degree(graph))
    lines = ["k,bound_lt,bound_ge,mc_lt,mc_ge"]
    for k in range(1, n + 1):
        mc_lt = sum(d < k for d in deltas) / len(deltas)
        mc_ge = sum(d >= k for d in deltas) / len(deltas)
        lines.append(
            f"{k},{prob_max_degree_lt(n, p, k):.17g},{prob_max_degree_ge(n, p, k):.17g},"
            f"{mc_lt:.17g},{mc_ge:.17g}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_components(args, parser) -> int:
    graph, params = _graph_from_args(args, parser)
    census = connected_components(graph)
    solver = _solver_from_args(args)
    result = lanczos_lambda1(graph, solver)
    check = case4_shape_check(graph, census, result.lambda1, solver)
    edged = [c for c in census.components if c.edge_count >= 1]
    star_fraction = (
        sum(is_star(c) for c in edged) / len(edged) if edged else None
    )
    cutoff = None
    if params is not None and params.p > 0:
        cutoff = case4_cutoff(graph.n, params.p)
    _emit(_json({
        "num_components": len(census.components),
        "yk": {str(k): v for k, v in sorted(census.yk.items())},
        "largest_component_edges": census.largest_component_edges,
        "star_fraction": star_fraction,
        "case4": {
            "lambda1": check.lambda1,
            "delta": check.delta,
            "shape_ok": check.shape_ok,
            "achiever_is_star": check.achiever_is_star,
            "cutoff_k0": cutoff,
        },
    }), args.out)
    return 0


def _cmd_locality(args, parser) -> int:
    graph, params = _graph_from_args(args, parser)
    p = params.p if params is not None else None
    if args.mode == "i":
        if args.a is None or args.b is None:
            parser.error("locality mode i requires --a and --b")
        report = lemma22_i_stat(graph, args.a, args.b, p=p)
    else:
        if args.a is None:
            parser.error("locality mode ii requires --a")
        if p is None:
            parser.error("locality mode ii needs a sampled graph (p enters the threshold)")
        report = lemma22_ii_stat(graph, args.a, p)
    _emit(_json({
        "mode": report.mode,
        "a": report.a,
        "b": report.b,
        "threshold": report.threshold,
        "max_cluster": report.max_cluster,
        "argmax_vertex": report.argmax_vertex,
        "cluster_limit": report.cluster_limit,
        "conclusion_holds": report.conclusion_holds,
        "hypothesis_flags": report.hypothesis_flags,
    }), args.out)
    return 0


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


def _parse_locality(text: str) -> tuple[tuple[float, float], ...]:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        a_text, sep, b_text = chunk.partition(":")
        if not sep:
            raise ValueError(f"locality pair must look like a:b, got {chunk!r}")
        pairs.append((float(a_text), float(b_text)))
    return tuple(pairs)


_CONFIG_KEYS = {
    "n_values", "p_values", "trials", "master_seed", "seed", "threads",
    "format", "out", "census", "locality", "tol", "max_iter", "plot",
}


def parse_config_file(path) -> dict:
    """Flat key=value settings; # starts a comment, blank lines ignored."""
    settings: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep or not key:
                raise ValueError(f"{path}: line {line_no}: expected key=value")
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}: line {line_no}: unknown key {key!r}")
            settings[key] = value.strip()
    return settings


def _cmd_run(args, parser) -> int:
    settings = parse_config_file(args.config) if args.config else {}

    def pick(cli_value, key, convert):
        if cli_value is not None:
            return cli_value
        if key in settings:
            return convert(settings[key])
        return None

    n_values = pick(args.n_values and _parse_int_list(args.n_values), "n_values", _parse_int_list)
    p_values = pick(
        tuple(args.p_values.split(",")) if args.p_values else None,
        "p_values",
        lambda s: tuple(part.strip() for part in s.split(",") if part.strip()),
    )
    trials = pick(args.trials, "trials", int)
    if n_values is None or p_values is None or trials is None:
        parser.error("run needs n_values, p_values, and trials (flags or config file)")
    seed = args.seed if args.seed is not None else int(
        settings.get("master_seed", settings.get("seed", "0"))
    )
    threads = args.threads if args.threads is not None else int(settings.get("threads", "1"))
    fmt = args.format or settings.get("format", "csv")
    out = args.out or settings.get("out") or f"records.{fmt}"
    census = args.census or settings.get("census", "false").lower() == "true"
    locality = pick(
        _parse_locality(args.locality) if args.locality else None, "locality", _parse_locality
    ) or ()
    solver_kwargs = {}
    tol = args.tol if args.tol is not None else (
        float(settings["tol"]) if "tol" in settings else None
    )
    if tol is not None:
        solver_kwargs["tol"] = tol
    max_iter = args.max_iter if args.max_iter is not None else (
        int(settings["max_iter"]) if "max_iter" in settings else None
    )
    if max_iter is not None:
        solver_kwargs["max_iter"] = max_iter

    config = ExperimentConfig(
        n_values=n_values,
        p_values=tuple(str(r) for r in p_values),
        trials=trials,
        master_seed=seed,
        solver=SolverConfig(**solver_kwargs),
        output_path=out,
        format=fmt,
        census=census,
        locality=locality,
    )
    records = run_experiment(config, threads=max(1, threads))
    with open(out, "w", encoding="ascii", newline="") as fh:
        fh.write(records_text(records, fmt))
    plot_path = args.plot or settings.get("plot")
    if plot_path:
        plot_ratio(records, plot_path)
    sys.stdout.write(f"wrote {len(records)} records to {out}\n")
    return 0


def _cmd_summarize(args, parser) -> int:
    records = read_records(args.records)
    rows = summarize(records)
    _emit(summary_text(rows, args.format or "csv"), args.out)
    return 0


def _cmd_plot(args, parser) -> int:
    if not args.out:
        parser.error("plot requires --out for the SVG path")
    records = read_records(args.records)
    plot_ratio(records, args.out)
    return 0


def _cmd_verify(args, parser) -> int:
    ok, lines = verify_suite(master_seed=args.seed or 20240814, quick=args.quick)
    text = "\n".join(lines) + "\n"
    text += "verify: all checks passed\n" if ok else "verify: FAILED\n"
    _emit(text, args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubespectra",
        description="Largest eigenvalues and degree statistics of random subgraphs of the n-cube.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sample = subs.add_parser("sample", help="sample a graph and report its size")
    _add_sampling(sample, with_edges=False)
    sample.add_argument("--emit-edges", default=None, help="also write an edge file")
    _add_common(sample)
    sample.set_defaults(func=_cmd_sample)

    eig = subs.add_parser("eig", help="largest adjacency eigenvalue")
    _add_sampling(eig)
    eig.add_argument("--tol", type=float, default=None)
    eig.add_argument("--max-iter", type=int, default=None)
    eig.add_argument("--emit-vector", default=None, help="write the eigenvector, one entry per line")
    _add_common(eig)
    eig.set_defaults(func=_cmd_eig)

    bounds = subs.add_parser("bounds", help="eigenvalue bounds and the prediction")
    _add_sampling(bounds)
    bounds.add_argument("--tol", type=float, default=None)
    bounds.add_argument("--max-iter", type=int, default=None)
    _add_common(bounds)
    bounds.set_defaults(func=_cmd_bounds)

    kap = subs.add_parser("kappa", help="degree-theory profile for (n, p)")
    _add_sampling(kap, with_edges=False)
    _add_common(kap)
    kap.set_defaults(func=_cmd_kappa)

    tails = subs.add_parser("tails", help="max-degree tail bounds against Monte Carlo")
    _add_sampling(tails, with_edges=False)
    tails.add_argument("--trials", type=int, default=200)
    _add_common(tails)
    tails.set_defaults(func=_cmd_tails)

    comp = subs.add_parser("components", help="connected-component census and shape check")
    _add_sampling(comp)
    comp.add_argument("--tol", type=float, default=None)
    comp.add_argument("--max-iter", type=int, default=None)
    _add_common(comp)
    comp.set_defaults(func=_cmd_components)

    loc = subs.add_parser("locality", help="clustering of high-degree vertices")
    _add_sampling(loc)
    loc.add_argument("--mode", choices=("i", "ii"), default="i")
    loc.add_argument("--a", type=float, default=None)
    loc.add_argument("--b", type=float, default=None)
    _add_common(loc)
    loc.set_defaults(func=_cmd_locality)

    run = subs.add_parser("run", help="run an experiment grid and write records")
    run.add_argument("--config", default=None, help="key=value config file")
    run.add_argument("--n-values", default=None, help="comma-separated dimensions")
    run.add_argument("--p-values", default=None, help="comma-separated p rules")
    run.add_argument("--trials", type=int, default=None)
    run.add_argument("--census", action="store_true", default=False)
    run.add_argument("--locality", default=None, help="comma-separated a:b pairs")
    run.add_argument("--tol", type=float, default=None)
    run.add_argument("--max-iter", type=int, default=None)
    run.add_argument("--plot", default=None, help="also write a ratio SVG here")
    run.add_argument("--seed", type=int, default=None, help="master seed")
    run.add_argument("--threads", type=int, default=None)
    run.add_argument("--out", default=None, help="records file (default records.<format>)")
    run.add_argument("--format", choices=("csv", "json"), default=None)
    run.set_defaults(func=_cmd_run)

    summ = subs.add_parser("summarize", help="aggregate a records file per (n, p)")
    summ.add_argument("--records", required=True)
    _add_common(summ)
    summ.set_defaults(func=_cmd_summarize)

    plot = subs.add_parser("plot", help="scatter ratio against n from a records file")
    plot.add_argument("--records", required=True)
    _add_common(plot)
    plot.set_defaults(func=_cmd_plot)

    verify = subs.add_parser("verify", help="self-check battery over sampled graphs")
    verify.add_argument("--quick", action="store_true", default=False)
    _add_common(verify)
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, parser)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

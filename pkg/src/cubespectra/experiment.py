"""Monte Carlo harness tying the degree/eigenvalue theory to sampled data.

A run walks a grid of dimensions and densities, samples `trials` graphs per
cell from seeds derived off one master seed, solves each for lambda1, and
records the comparison against the prediction max(sqrt(Delta), np).  Records
round-trip through CSV or JSON with exact 17-significant-digit reals, so a
re-run with the same config is byte-identical, and trials are independent,
so the worker count cannot change the output.

Densities may be given as plain numbers or as named rules evaluated per n:
"const:0.5", "pow:-4/9" (p = n^e), "sparse:3" (p = 2^(-n/3)/n).
"""

from __future__ import annotations

import csv
import io
import json
import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .components import case4_shape_check, connected_components
from .cube_graph import (
    SampleParams,
    full_cube,
    max_degree,
    sample_subgraph,
    validate_graph,
)
from .degree_theory import classify_regime, expected_exceed_count, kappa
from .eigensolve import SolverConfig, lanczos_lambda1
from .locality_stats import lemma22_i_stat
from .spectral_bounds import (
    bipartite_product_bound,
    parity_sides,
    sandwich_bounds,
    sqrt_edges_bound,
    theorem_prediction,
    walk2_max,
)

CSV_COLUMNS = [
    "n", "p", "trial_index", "derived_seed", "m", "delta", "kappa", "regime",
    "lambda1", "iterations", "residual", "converged", "prediction", "ratio",
    "largest_component_edges", "case4_shape",
]


class SchemaError(ValueError):
    """A records file whose layout does not match the fixed schema."""


@dataclass(frozen=True)
class ExperimentConfig:
    n_values: tuple[int, ...]
    p_values: tuple[str, ...]
    trials: int
    master_seed: int = 0
    solver: SolverConfig = SolverConfig()
    output_path: str | None = None
    format: str = "csv"
    census: bool = False
    locality: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        if not self.n_values or not self.p_values:
            raise ValueError("n and p grids must be non-empty")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")


@dataclass
class TrialRecord:
    n: int
    p: float
    trial_index: int
    derived_seed: int
    m: int
    delta: int
    kappa: int | None
    regime: str
    lambda1: float
    iterations: int
    residual: float
    converged: bool
    prediction: float
    ratio: float | None
    largest_component_edges: int | None = None
    case4_shape: bool | None = None
    # In-memory annotations; never persisted, never compared.
    p_rule: str | None = field(default=None, compare=False, repr=False)
    locality_reports: list | None = field(default=None, compare=False, repr=False)


@dataclass
class SummaryRow:
    n: int
    p: float
    count: int
    ratio_median: float | None
    ratio_mean: float | None
    ratio_min: float | None
    ratio_max: float | None
    delta_in_range_freq: float | None
    convergence_rate: float


def parse_p_rule(rule) -> tuple[str, object]:
    """Normalize a density spec into (label, function of n)."""
    if isinstance(rule, (int, float)):
        value = float(rule)
        return f"const:{value:.17g}", lambda n, v=value: v
    text = str(rule).strip()
    if ":" not in text:
        value = float(text)
        return f"const:{value:.17g}", lambda n, v=value: v
    kind, _, arg = text.partition(":")
    kind = kind.strip()
    arg = arg.strip()
    if kind == "const":
        value = float(arg)
        return f"const:{value:.17g}", lambda n, v=value: v
    if kind == "pow":
        exponent = float(Fraction(arg)) if "/" in arg else float(arg)
        return f"pow:{arg}", lambda n, e=exponent: float(n) ** e
    if kind == "sparse":
        k = int(arg)
        if k < 1:
            raise ValueError(f"sparse rule needs k >= 1, got {arg!r}")
        return f"sparse:{k}", lambda n, kk=k: 2.0 ** (-n / kk) / n
    raise ValueError(f"unknown p-rule {rule!r} (use const:x, pow:e, or sparse:k)")


def _run_one(
    n: int, rule_label: str, p: float, trial: int, config: ExperimentConfig
) -> TrialRecord:
    params = SampleParams(n=n, p=p, master_seed=config.master_seed, trial_index=trial)
    graph = sample_subgraph(params)
    delta = max_degree(graph)
    result = lanczos_lambda1(graph, config.solver)
    prediction = theorem_prediction(delta, n, p)
    record = TrialRecord(
        n=n,
        p=p,
        trial_index=trial,
        derived_seed=params.seed(),
        m=graph.edge_count,
        delta=delta,
        kappa=kappa(n, p) if p > 0 else None,
        regime=classify_regime(n, p) if (n >= 2 and p > 0) else "",
        lambda1=result.lambda1,
        iterations=result.iterations,
        residual=result.residual,
        converged=result.converged,
        prediction=prediction,
        ratio=result.lambda1 / prediction if prediction > 0 else None,
        p_rule=rule_label,
    )
    if config.census:
        census = connected_components(graph)
        record.largest_component_edges = census.largest_component_edges
        record.case4_shape = case4_shape_check(
            graph, census, result.lambda1, config.solver
        ).shape_ok
    if config.locality:
        record.locality_reports = [
            lemma22_i_stat(graph, a, b, p=p) for a, b in config.locality
        ]
    return record


def run_experiment(config: ExperimentConfig, threads: int = 1) -> list[TrialRecord]:
    """One record per (n, p-rule, trial), in canonical grid order.

    Each trial's pipeline runs on a single worker, and the output order is
    fixed by the grid, so the result is identical for every threads value.
    """
    rules = [parse_p_rule(rule) for rule in config.p_values]
    tasks = []
    for n in config.n_values:
        for label, fn in rules:
            p = float(fn(n))
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"rule {label!r} gives p={p!r} outside [0, 1] at n={n}")
            for trial in range(config.trials):
                tasks.append((n, label, p, trial))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(lambda t: _run_one(*t, config), tasks))
    else:
        records = [_run_one(*t, config) for t in tasks]
    return records


def _real(x: float | None) -> str:
    return "" if x is None else f"{x:.17g}"


def _flag(x: bool | None) -> str:
    return "" if x is None else ("true" if x else "false")


def _record_row(r: TrialRecord) -> list[str]:
    return [
        str(r.n), _real(r.p), str(r.trial_index), str(r.derived_seed), str(r.m),
        str(r.delta), "" if r.kappa is None else str(r.kappa), r.regime,
        _real(r.lambda1), str(r.iterations), _real(r.residual), _flag(r.converged),
        _real(r.prediction), _real(r.ratio),
        "" if r.largest_component_edges is None else str(r.largest_component_edges),
        _flag(r.case4_shape),
    ]


def _record_dict(r: TrialRecord) -> dict:
    return {
        "n": r.n, "p": r.p, "trial_index": r.trial_index,
        "derived_seed": r.derived_seed, "m": r.m, "delta": r.delta,
        "kappa": r.kappa, "regime": r.regime, "lambda1": r.lambda1,
        "iterations": r.iterations, "residual": r.residual,
        "converged": r.converged, "prediction": r.prediction, "ratio": r.ratio,
        "largest_component_edges": r.largest_component_edges,
        "case4_shape": r.case4_shape,
    }


def records_text(records: list[TrialRecord], format: str = "csv") -> str:
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow(_record_row(r))
        return buf.getvalue()
    if format == "json":
        return json.dumps([_record_dict(r) for r in records], indent=1) + "\n"
    raise ValueError(f"format must be csv or json, got {format!r}")


def write_records(records: list[TrialRecord], path, format: str = "csv") -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(records_text(records, format))


def _parse_flag(text: str, line_no: int) -> bool | None:
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    raise SchemaError(f"line {line_no}: boolean field must be true/false/empty, got {text!r}")


def _row_to_record(row: list[str], line_no: int) -> TrialRecord:
    if len(row) != len(CSV_COLUMNS):
        raise SchemaError(
            f"line {line_no}: expected {len(CSV_COLUMNS)} fields, got {len(row)}"
        )
    try:
        return TrialRecord(
            n=int(row[0]),
            p=float(row[1]),
            trial_index=int(row[2]),
            derived_seed=int(row[3]),
            m=int(row[4]),
            delta=int(row[5]),
            kappa=None if row[6] == "" else int(row[6]),
            regime=row[7],
            lambda1=float(row[8]),
            iterations=int(row[9]),
            residual=float(row[10]),
            converged=bool(_parse_flag(row[11], line_no)),
            prediction=float(row[12]),
            ratio=None if row[13] == "" else float(row[13]),
            largest_component_edges=None if row[14] == "" else int(row[14]),
            case4_shape=_parse_flag(row[15], line_no),
        )
    except ValueError as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"line {line_no}: {exc}") from None


def _records_from_json(data) -> list[TrialRecord]:
    if not isinstance(data, list):
        raise SchemaError("line 1: top-level JSON value must be a list of records")
    expected = set(CSV_COLUMNS)
    records = []
    for idx, item in enumerate(data):
        if not isinstance(item, dict) or set(item) != expected:
            bad = sorted(set(item) ^ expected) if isinstance(item, dict) else []
            raise SchemaError(f"record {idx}: field names do not match schema ({bad})")
        records.append(TrialRecord(**{k: item[k] for k in CSV_COLUMNS}))
    return records


def read_records(path) -> list[TrialRecord]:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            return _records_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"line {exc.lineno}: malformed JSON: {exc.msg}") from None
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise SchemaError("line 1: empty records file")
    if rows[0] != CSV_COLUMNS:
        diff = [c for c in rows[0] if c not in CSV_COLUMNS] or ["missing columns"]
        raise SchemaError(f"line 1: unexpected column name(s): {diff}")
    return [_row_to_record(row, i) for i, row in enumerate(rows[1:], start=2)]


def summarize(records: list[TrialRecord]) -> list[SummaryRow]:
    """Per-(n, p) aggregates, keys sorted."""
    if not records:
        raise ValueError("no records to summarize")
    groups: dict[tuple[int, float], list[TrialRecord]] = {}
    for r in records:
        groups.setdefault((r.n, r.p), []).append(r)
    out = []
    for (n, p) in sorted(groups):
        rs = groups[(n, p)]
        ratios = [r.ratio for r in rs if r.ratio is not None]
        in_range = None
        if p > 0:
            from .degree_theory import predicted_max_degree

            span = predicted_max_degree(n, p)
            if span is not None:
                lo, hi = span
                in_range = sum(lo <= r.delta <= hi for r in rs) / len(rs)
        out.append(
            SummaryRow(
                n=n,
                p=p,
                count=len(rs),
                ratio_median=statistics.median(ratios) if ratios else None,
                ratio_mean=statistics.fmean(ratios) if ratios else None,
                ratio_min=min(ratios) if ratios else None,
                ratio_max=max(ratios) if ratios else None,
                delta_in_range_freq=in_range,
                convergence_rate=sum(r.converged for r in rs) / len(rs),
            )
        )
    return out


SUMMARY_COLUMNS = [
    "n", "p", "count", "ratio_median", "ratio_mean", "ratio_min", "ratio_max",
    "delta_in_range_freq", "convergence_rate",
]


def summary_text(rows: list[SummaryRow], format: str = "csv") -> str:
    if format == "json":
        payload = [
            {
                "n": s.n, "p": s.p, "count": s.count,
                "ratio_median": s.ratio_median, "ratio_mean": s.ratio_mean,
                "ratio_min": s.ratio_min, "ratio_max": s.ratio_max,
                "delta_in_range_freq": s.delta_in_range_freq,
                "convergence_rate": s.convergence_rate,
            }
            for s in rows
        ]
        return json.dumps(payload, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SUMMARY_COLUMNS)
    for s in rows:
        writer.writerow([
            str(s.n), _real(s.p), str(s.count), _real(s.ratio_median),
            _real(s.ratio_mean), _real(s.ratio_min), _real(s.ratio_max),
            _real(s.delta_in_range_freq), _real(s.convergence_rate),
        ])
    return buf.getvalue()


_PALETTE = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2",
]


def _svg_escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def plot_ratio(
    records: list[TrialRecord], path, series_labels: list[str] | None = None
) -> None:
    """Scatter of ratio against n as a self-contained SVG file.

    One series per label; records carrying in-memory rule labels group by
    rule, otherwise by their p value.  Records without a ratio (empty-graph
    trials) are skipped.  The output is assembled from formatted strings
    only, so identical records give identical bytes.
    """
    if not records:
        raise ValueError("no records to plot")
    if series_labels is None:
        series_labels = [
            r.p_rule if r.p_rule is not None else f"p={r.p:.6g}" for r in records
        ]
    elif len(series_labels) != len(records):
        raise ValueError("series_labels must align with records")
    points: dict[str, list[tuple[int, float]]] = {}
    order: list[str] = []
    for r, label in zip(records, series_labels):
        if r.ratio is None:
            continue
        if label not in points:
            points[label] = []
            order.append(label)
        points[label].append((r.n, r.ratio))
    if not points:
        raise ValueError("no records have a defined ratio")

    xs = [x for pts in points.values() for x, _ in pts]
    ys = [y for pts in points.values() for _, y in pts] + [1.0]
    x_lo, x_hi = min(xs) - 1, max(xs) + 1
    y_lo, y_hi = min(ys), max(ys)
    pad = 0.05 * (y_hi - y_lo) or 0.1
    y_lo, y_hi = y_lo - pad, y_hi + pad

    width, height = 640.0, 440.0
    left, right, top, bottom = 60.0, width - 170.0, 20.0, height - 50.0

    def sx(x: float) -> str:
        return f"{left + (x - x_lo) / (x_hi - x_lo) * (right - left):.2f}"

    def sy(y: float) -> str:
        return f"{bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top):.2f}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect x="0" y="0" width="{width:.0f}" height="{height:.0f}" fill="white"/>',
        f'<line x1="{left:.2f}" y1="{bottom:.2f}" x2="{right:.2f}" y2="{bottom:.2f}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{left:.2f}" y1="{top:.2f}" x2="{left:.2f}" y2="{bottom:.2f}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for x in sorted(set(xs)):
        px = sx(x)
        parts.append(
            f'<line x1="{px}" y1="{bottom:.2f}" x2="{px}" y2="{bottom + 4:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px}" y="{bottom + 18:.2f}" font-size="11" text-anchor="middle" '
            f'font-family="sans-serif">{x}</text>'
        )
    for j in range(6):
        y = y_lo + j * (y_hi - y_lo) / 5
        py = sy(y)
        parts.append(
            f'<line x1="{left - 4:.2f}" y1="{py}" x2="{left:.2f}" y2="{py}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{left - 8:.2f}" y="{py}" font-size="11" text-anchor="end" '
            f'dominant-baseline="middle" font-family="sans-serif">{y:.3g}</text>'
        )
    parts.append(
        f'<text x="{(left + right) / 2:.2f}" y="{height - 8:.2f}" font-size="12" '
        'text-anchor="middle" font-family="sans-serif">n</text>'
    )
    parts.append(
        f'<text x="14" y="{(top + bottom) / 2:.2f}" font-size="12" text-anchor="middle" '
        f'font-family="sans-serif" transform="rotate(-90 14 {(top + bottom) / 2:.2f})">'
        "lambda1 / prediction</text>"
    )
    if y_lo <= 1.0 <= y_hi:
        py = sy(1.0)
        parts.append(
            f'<line x1="{left:.2f}" y1="{py}" x2="{right:.2f}" y2="{py}" '
            'stroke="#888888" stroke-width="1" stroke-dasharray="5,4"/>'
        )
    for s_idx, label in enumerate(order):
        color = _PALETTE[s_idx % len(_PALETTE)]
        for x, y in points[label]:
            parts.append(
                f'<circle cx="{sx(x)}" cy="{sy(y)}" r="3" fill="{color}" fill-opacity="0.7"/>'
            )
        ly = 30.0 + 18.0 * s_idx
        parts.append(
            f'<circle cx="{right + 16:.2f}" cy="{ly:.2f}" r="4" fill="{color}"/>'
        )
        parts.append(
            f'<text x="{right + 26:.2f}" y="{ly + 4:.2f}" font-size="11" '
            f'font-family="sans-serif">{_svg_escape(label)}</text>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(parts) + "\n")


def verify_suite(master_seed: int = 20240814, quick: bool = False) -> tuple[bool, list[str]]:
    """Battery of structural and spectral invariant checks on sampled graphs.

    Returns (all_ok, report lines).  Used by the `verify` CLI subcommand;
    any failure there exits with the invariant-violation code.
    """
    lines: list[str] = []
    failures = 0

    def check(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        if ok:
            lines.append(f"ok   {name}" + (f" ({detail})" if detail else ""))
        else:
            failures += 1
            lines.append(f"FAIL {name}" + (f" ({detail})" if detail else ""))

    grid = [(6, 0.5), (8, 0.2), (10, 0.1), (8, 0.02), (10, 2.0 ** -8)]
    if not quick:
        grid += [(12, 0.3), (12, 2.0 ** -10), (13, 0.05), (14, 2.0 ** -12)]
    solver = SolverConfig(tol=1e-11)

    g0 = sample_subgraph(SampleParams(8, 0.3, master_seed, 0))
    g1 = sample_subgraph(SampleParams(8, 0.3, master_seed, 0))
    check("sampler determinism", bool((g0.masks == g1.masks).all()))

    qn = full_cube(10)
    res = lanczos_lambda1(qn, solver)
    check("full-cube lambda1 = n", abs(res.lambda1 - 10) <= 1e-8, f"lambda1={res.lambda1:.12f}")

    for idx, (n, p) in enumerate(grid):
        graph = sample_subgraph(SampleParams(n, p, master_seed, idx))
        name = f"n={n} p={p:.3g}"
        try:
            validate_graph(graph)
            check(f"structure {name}", True)
        except ValueError as exc:
            check(f"structure {name}", False, str(exc))
            continue
        result = lanczos_lambda1(graph, solver)
        lam = result.lambda1
        lower, upper = sandwich_bounds(graph)
        check(f"sandwich {name}", lower - 1e-9 <= lam <= upper + 1e-9,
              f"{lower:.6f} <= {lam:.6f} <= {upper:.6f}")
        check(f"walk2 {name}", lam <= math.sqrt(walk2_max(graph)) + 1e-9)
        check(f"edges-bound {name}", lam <= sqrt_edges_bound(graph) + 1e-9)
        check(f"parity-bound {name}",
              lam <= bipartite_product_bound(graph, parity_sides(n)) + 1e-9)
        check(f"residual {name}",
              (not result.converged) or result.residual <= solver.tol * max(1.0, lam))
        if graph.edge_count and graph.edge_count <= 3000:
            census = connected_components(graph)
            sizes = sorted(len(c.vertices) for c in census.components)
            partition_ok = sum(sizes) == graph.num_vertices
            edges_ok = sum(c.edge_count for c in census.components) == graph.edge_count
            check(f"census {name}", partition_ok and edges_ok)
            from .components import per_component_lambda1

            best = max(per_component_lambda1(graph, census, solver))
            check(f"disjoint-union {name}", abs(best - lam) <= 1e-8,
                  f"|{best:.10f} - {lam:.10f}|")

    ks = [kappa(10, p) for p in (0.05, 0.1, 0.3, 0.5, 1.0)]
    check("kappa monotone in p", all(a <= b for a, b in zip(ks, ks[1:])), f"{ks}")
    ex = [expected_exceed_count(12, 0.2, k) for k in range(13)]
    check("E[X_k] non-increasing", all(a >= b for a, b in zip(ex, ex[1:])))
    return failures == 0, lines

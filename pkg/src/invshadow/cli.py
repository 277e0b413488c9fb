"""Command-line front end: system ingestion, decisions, sweeps, reports.

Exit codes: 0 success / verdict true / all suites pass; 1 verdict false or
any suite failure; 2 usage or input error; 3 undetermined.  JSON output is
deterministic (sorted keys, stable schema) so reruns with identical
configs are byte-identical apart from nothing at all: tool_version is
pinned by the build.

System config files are YAML documents:

    points: [a, b]          # optional labels; default "0".."n-1"
    metric:
      explicit:             # lower-triangular rows: row i lists d(i, 0..i-1)
        - [0.5]
    map: {a: b, b: a}       # or a positional list of image labels

    metric: {circle_grid: 8}   # alternative: the n-point circle space
    map: [1, 2, 3, 4, 5, 6, 7, 0]
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from . import __version__, deciders, theorems
from .deciders import (
    BI,
    CLASS_T0,
    CLASS_TC,
    CLASS_TH,
    FULL,
    INF,
    ISQuery,
    POSITIVE,
)
from .errors import BadParams, InvShadowError, MonotonicityViolation, ParseError
from .graph import build_graph, is_chain_transitive
from .properties import measure_properties
from .systems import SystemMap, ZOO_FAMILIES, make_zoo_system
from .metric import validate_metric

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_UNDETERMINED = 3


# --------------------------------------------------------------------------
# system ingestion

def parse_system_config(text: str, name: str = "custom") -> SystemMap:
    """Parse the YAML system config format into a validated SystemMap."""
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        line = None
        mark = getattr(exc, "problem_mark", None)
        if mark is not None:
            line = mark.line + 1
        raise ParseError(f"invalid YAML: {exc}", line) from None
    if not isinstance(doc, dict):
        raise ParseError("config must be a mapping with 'metric' and 'map'")
    if "metric" not in doc or "map" not in doc:
        raise ParseError("config needs both 'metric' and 'map' fields")
    metric = doc["metric"]
    if not isinstance(metric, dict) or len(metric) != 1:
        raise ParseError("'metric' must be {circle_grid: n} or {explicit: rows}")

    if "circle_grid" in metric:
        n = metric["circle_grid"]
        if not isinstance(n, int) or n < 1:
            raise ParseError(f"circle_grid must be a positive int, got {n!r}")
        from .systems import circle_space

        space = circle_space(n)
        if "points" in doc:
            space = validate_metric(space.dist, labels=doc["points"], coords=space.coords)
    elif "explicit" in metric:
        rows = metric["explicit"]
        if not isinstance(rows, list):
            raise ParseError("'explicit' metric must be a list of rows")
        n = len(rows) + 1
        full = [[0.0] * n for _ in range(n)]
        for i, row in enumerate(rows, start=1):
            if not isinstance(row, list) or len(row) != i:
                raise ParseError(
                    f"explicit row {i - 1} must list the {i} distances to points 0..{i - 1}"
                )
            for j, v in enumerate(row):
                full[i][j] = full[j][i] = float(v)
        labels = doc.get("points")
        if labels is not None and len(labels) != n:
            raise ParseError(f"{len(labels)} point labels for {n} points")
        space = validate_metric(full, labels=labels)
    else:
        raise ParseError("'metric' must contain 'circle_grid' or 'explicit'")

    mapping = doc["map"]
    if isinstance(mapping, dict):
        table = [None] * space.n
        for src, dst in mapping.items():
            table[space.index_of(str(src))] = space.index_of(str(dst))
        missing = [space.labels[i] for i, v in enumerate(table) if v is None]
        if missing:
            raise ParseError(f"map missing images for points: {', '.join(missing)}")
    elif isinstance(mapping, list):
        if len(mapping) != space.n:
            raise ParseError(f"map lists {len(mapping)} images for {space.n} points")
        table = [space.index_of(str(dst)) for dst in mapping]
    else:
        raise ParseError("'map' must be a mapping or a list of image labels")
    return SystemMap.build(space, table, name=name)


def load_system(spec: str) -> SystemMap:
    """Resolve --system: either family:params or a config file path."""
    head = spec.split(":", 1)[0]
    if head in ZOO_FAMILIES:
        params = []
        if ":" in spec:
            for tok in spec.split(":", 1)[1].split(","):
                tok = tok.strip()
                params.append(int(tok) if tok.lstrip("+-").isdigit() else float(tok))
        return make_zoo_system(head, *params)
    path = Path(spec)
    if not path.exists():
        raise BadParams(
            f"{spec!r} is neither a zoo family ({', '.join(sorted(ZOO_FAMILIES))}) "
            "nor an existing config file"
        )
    return parse_system_config(path.read_text(), name=path.stem)


# --------------------------------------------------------------------------
# phase sweeps

@dataclass(frozen=True)
class RunConfig:
    """Inputs of one sweep; everything is deterministic, no seeds exist."""

    system: SystemMap
    eps_grid: tuple[float, ...]
    delta_grid: tuple[float, ...]
    horizon: int | str = FULL
    mode: str = POSITIVE
    method_class: str = CLASS_T0
    cap: int | None = None

    def __post_init__(self):
        for grid, label in ((self.eps_grid, "eps"), (self.delta_grid, "delta")):
            if not grid or any(not v > 0 for v in grid):
                raise BadParams(f"{label} grid must be nonempty and positive")
            if list(grid) != sorted(grid):
                raise BadParams(f"{label} grid must be sorted ascending")


@dataclass
class PhaseCell:
    verdict: bool | None
    min_tube_horizon: int | float | None
    witness_count: int

    def to_dict(self) -> dict:
        return {
            "verdict": "undetermined" if self.verdict is None else self.verdict,
            "min_tube_horizon": deciders._horizon_doc(self.min_tube_horizon),
            "witness_count": self.witness_count,
        }


@dataclass
class PhaseDiagram:
    """Verdict table over the (eps, delta) grid for one system."""

    system: str
    eps_grid: tuple[float, ...]
    delta_grid: tuple[float, ...]
    horizon: int | str
    mode: str
    method_class: str
    rows: list[list[PhaseCell]] = field(default_factory=list)  # rows: eps, cols: delta

    def best_delta(self) -> dict[float, float | None]:
        """Largest grid delta with a true verdict, per eps."""
        out = {}
        for i, eps in enumerate(self.eps_grid):
            true_deltas = [
                d for j, d in enumerate(self.delta_grid)
                if self.rows[i][j].verdict is True
            ]
            out[eps] = max(true_deltas) if true_deltas else None
        return out

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "eps_grid": list(self.eps_grid),
            "delta_grid": list(self.delta_grid),
            "horizon": self.horizon,
            "mode": self.mode,
            "method_class": self.method_class,
            "cells": [[c.to_dict() for c in row] for row in self.rows],
            "best_delta": [
                {"eps": e, "delta": d} for e, d in sorted(self.best_delta().items())
            ],
        }


def run_phase_sweep(config: RunConfig) -> PhaseDiagram:
    """Fill every grid cell and enforce the monotonicity contract:
    verdicts may only improve as eps grows and only degrade as delta grows."""
    decide = (deciders.decide_T0_IS if config.method_class != CLASS_TH
              else deciders.decide_Th_IS)
    diagram = PhaseDiagram(
        config.system.name, tuple(config.eps_grid), tuple(config.delta_grid),
        config.horizon, config.mode, config.method_class,
    )
    for eps in config.eps_grid:
        row = []
        for delta in config.delta_grid:
            verdict = decide(ISQuery(
                config.system, eps, delta, horizon=config.horizon,
                mode=config.mode, method_class=config.method_class,
                cap=config.cap,
            ))
            row.append(PhaseCell(
                verdict.overall, verdict.min_tube_horizon(), verdict.witness_count
            ))
        diagram.rows.append(row)
    _check_monotone(diagram)
    return diagram


def _check_monotone(diagram: PhaseDiagram) -> None:
    for j in range(len(diagram.delta_grid)):
        col = [row[j].verdict for row in diagram.rows]
        known = [(i, v) for i, v in enumerate(col) if v is not None]
        for (i1, v1), (i2, v2) in zip(known, known[1:]):
            if v1 and not v2:
                raise MonotonicityViolation(
                    f"verdict degraded as eps grew: delta={diagram.delta_grid[j]}, "
                    f"eps {diagram.eps_grid[i1]} -> {diagram.eps_grid[i2]}"
                )
    for i in range(len(diagram.eps_grid)):
        row = [c.verdict for c in diagram.rows[i]]
        known = [(j, v) for j, v in enumerate(row) if v is not None]
        for (j1, v1), (j2, v2) in zip(known, known[1:]):
            if not v1 and v2:
                raise MonotonicityViolation(
                    f"verdict improved as delta grew: eps={diagram.eps_grid[i]}, "
                    f"delta {diagram.delta_grid[j1]} -> {diagram.delta_grid[j2]}"
                )


# --------------------------------------------------------------------------
# output plumbing

def make_report(system, query, verdict, certificates, diagnostics) -> dict:
    return {
        "schema_version": 1,
        "tool_version": __version__,
        "system": system,
        "query": query,
        "verdict": verdict,
        "certificates": certificates,
        "diagnostics": diagnostics,
    }


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def system_doc(system: SystemMap) -> dict:
    gap = system.space.min_gap()
    return {
        "name": system.name,
        "n": system.n,
        "bijective": system.bijective,
        "min_gap": "inf" if gap == math.inf else gap,
        "labels": list(system.space.labels),
        "map": list(system.map_table),
    }


def _emit(doc: dict, text: str, args) -> None:
    out = dump_json(doc) if args.format == "json" else text
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _fmt_horizon(value) -> str:
    return str(deciders._horizon_doc(value))


def _verdict_word(overall) -> str:
    if overall is None:
        return "UNDETERMINED"
    return "true" if overall else "false"


def _exit_for(overall) -> int:
    if overall is None:
        return EXIT_UNDETERMINED
    return EXIT_OK if overall else EXIT_FALSE


def _verdict_text(verdict) -> str:
    lines = [
        f"system {verdict.system}  eps={verdict.eps} delta={verdict.delta} "
        f"horizon={verdict.horizon} mode={verdict.mode} class={verdict.method_class}",
        f"verdict: {_verdict_word(verdict.overall)} "
        f"(witnesses {verdict.witness_count}/{len(verdict.points)})",
    ]
    for pv in verdict.points:
        if pv.witness is not None:
            lines.append(
                f"  x={pv.x}: witness y={pv.witness} N*={_fmt_horizon(pv.tube_horizon)}"
            )
        elif pv.counterexample is not None:
            c = pv.counterexample
            lines.append(
                f"  x={pv.x}: no witness, N*={_fmt_horizon(pv.tube_horizon)}; "
                f"counterexample from y={c.y}: path {list(c.path)} "
                f"starting at t={c.start_time}, tube violated at t={c.fail_time}"
            )
        else:
            lines.append(f"  x={pv.x}: undetermined (cap hit)")
    for note in verdict.diagnostics:
        lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# subcommands

def _cmd_zoo(args) -> int:
    if args.zoo_action != "list":
        raise BadParams(f"unknown zoo action {args.zoo_action!r}")
    families = [
        {"family": name, "usage": usage} for name, (_, usage) in sorted(ZOO_FAMILIES.items())
    ]
    doc = make_report(None, {"subcommand": "zoo list"}, families, [], {})
    text = "\n".join(f["usage"] for f in families) + "\n"
    _emit(doc, text, args)
    return EXIT_OK


def _cmd_graph(args) -> int:
    system = load_system(args.system)
    graph = build_graph(system, args.delta)
    succ = {u: sorted(graph.succ_set(u)) for u in range(system.n)}
    transitive = is_chain_transitive(graph)
    doc = make_report(
        system_doc(system),
        {"subcommand": "graph", "delta": args.delta},
        {"succ": {str(u): v for u, v in succ.items()}, "chain_transitive": transitive},
        [], {},
    )
    lines = [f"delta-graph of {system.name} at delta={args.delta}"]
    lines += [f"  succ({u}) = {succ[u]}" for u in range(system.n)]
    lines.append(f"chain transitive: {transitive}")
    _emit(doc, "\n".join(lines) + "\n", args)
    return EXIT_OK


def _parse_horizon(raw: str):
    if raw.lower() == FULL:
        return FULL
    try:
        return int(raw)
    except ValueError:
        raise BadParams(f"horizon must be an integer or 'full', got {raw!r}") from None


def _single_query(args, system) -> ISQuery:
    return ISQuery(
        system,
        eps=_one(args.eps, "--eps"),
        delta=_one(args.delta, "--delta"),
        horizon=_parse_horizon(args.horizon),
        mode=args.mode,
        method_class=args.method_class,
        cap=args.cap,
    )


def _one(values, flag) -> float:
    if len(values) != 1:
        raise BadParams(f"{flag} takes exactly one value here, got {values}")
    return values[0]


def _cmd_decide(args) -> int:
    system = load_system(args.system)
    query = _single_query(args, system)
    if query.method_class == CLASS_TH:
        verdict = deciders.decide_Th_IS(query)
    elif args.robust:
        verdict = deciders.decide_robust_IS(query)
    else:
        verdict = deciders.decide_T0_IS(query)
    doc = make_report(
        system_doc(system),
        {
            "subcommand": "decide", "eps": query.eps, "delta": query.delta,
            "horizon": query.horizon, "mode": query.mode,
            "method_class": query.method_class, "robust": bool(args.robust),
        },
        verdict.to_dict(),
        [c.to_dict() for c in verdict.counterexamples()],
        {"notes": list(verdict.diagnostics)},
    )
    _emit(doc, _verdict_text(verdict), args)
    return _exit_for(verdict.overall)


def _cmd_weak(args) -> int:
    system = load_system(args.system)
    query = _single_query(args, system)
    verdict = deciders.decide_weak_IS(query)
    doc = make_report(
        system_doc(system),
        {"subcommand": "weak", "eps": query.eps, "delta": query.delta,
         "mode": query.mode},
        verdict.to_dict(),
        [c.to_dict() for c in verdict.counterexamples()],
        {},
    )
    _emit(doc, _verdict_text(verdict), args)
    return _exit_for(verdict.overall)


def _cmd_phase(args) -> int:
    system = load_system(args.system)
    config = RunConfig(
        system, tuple(args.eps), tuple(args.delta),
        horizon=_parse_horizon(args.horizon), mode=args.mode,
        method_class=args.method_class, cap=args.cap,
    )
    diagram = run_phase_sweep(config)
    doc = make_report(
        system_doc(system),
        {"subcommand": "phase", "eps_grid": list(config.eps_grid),
         "delta_grid": list(config.delta_grid), "horizon": config.horizon,
         "mode": config.mode, "method_class": config.method_class},
        diagram.to_dict(), [], {},
    )
    lines = [f"phase diagram of {system.name} (rows: eps, cols: delta)"]
    header = "eps\\delta " + " ".join(f"{d:>8}" for d in config.delta_grid)
    lines.append(header)
    undet = False
    for i, eps in enumerate(config.eps_grid):
        cells = []
        for cell in diagram.rows[i]:
            undet = undet or cell.verdict is None
            cells.append("   true " if cell.verdict else
                         ("  undet " if cell.verdict is None else "  false "))
        lines.append(f"{eps:>9} " + " ".join(cells))
    _emit(doc, "\n".join(lines) + "\n", args)
    return EXIT_UNDETERMINED if undet else EXIT_OK


def _cmd_props(args) -> int:
    system = load_system(args.system)
    horizon = _parse_horizon(args.horizon)
    if horizon == FULL:
        raise BadParams("props needs a finite --horizon")
    report = measure_properties(
        system, eta=args.eta, N=horizon,
        eps_grid=tuple(args.eps), delta_grid=tuple(args.delta),
    )
    doc = make_report(
        system_doc(system),
        {"subcommand": "props", "eta": args.eta, "horizon": horizon,
         "eps_grid": list(args.eps), "delta_grid": list(args.delta)},
        report.to_dict(), [], {},
    )
    r = report.to_dict()
    lines = [f"properties of {system.name} (eta={args.eta}, N={horizon})"]
    for key in ("sensitivity_modulus", "eventual_sensitivity_modulus",
                "expansivity_constant", "minimality_defect"):
        lines.append(f"  {key}: {r[key]}")
    for entry in r["equicontinuity_modulus"]:
        lines.append(f"  equicontinuity_modulus(eps={entry['eps']}): {entry['delta']}")
    lines.append(f"  chain_transitive_at: {r['chain_transitive_at']}")
    _emit(doc, "\n".join(lines) + "\n", args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.all:
        ids = None
    elif args.suites:
        ids = [s.strip().upper() for s in args.suites.split(",")]
    else:
        raise BadParams("verify needs --all or --suites ID[,ID...]")
    try:
        results = theorems.run_suites(ids)
    except KeyError as exc:
        raise BadParams(str(exc)) from None
    verdicts = {r.theorem_id: r.outcome for r in results}
    certificates = [c for r in results for c in r.certificates()]
    doc = make_report(
        None,
        {"subcommand": "verify", "suites": [r.theorem_id for r in results]},
        {"suites": [r.to_dict() for r in results], "outcomes": verdicts},
        certificates,
        {},
    )
    lines = []
    for r in results:
        lines.append(
            f"{r.theorem_id}: {r.outcome} "
            f"(cells={len(r.cells)}, coverage={r.coverage:.0%})"
        )
    _emit(doc, "\n".join(lines) + "\n", args)
    outcomes = set(verdicts.values())
    if theorems.FAIL in outcomes:
        return EXIT_FALSE
    if theorems.UNDETERMINED in outcomes:
        return EXIT_UNDETERMINED
    return EXIT_OK


def _cmd_report(args) -> int:
    system = load_system(args.system)
    horizon = _parse_horizon(args.horizon)
    sweep_horizon = horizon
    props_horizon = 6 if horizon == FULL else horizon
    config = RunConfig(
        system, tuple(args.eps), tuple(args.delta),
        horizon=sweep_horizon, mode=args.mode,
        method_class=args.method_class, cap=args.cap,
    )
    diagram = run_phase_sweep(config)
    props = measure_properties(
        system, eta=args.eta, N=props_horizon,
        eps_grid=tuple(args.eps), delta_grid=tuple(args.delta),
    )
    doc = make_report(
        system_doc(system),
        {"subcommand": "report", "eps_grid": list(args.eps),
         "delta_grid": list(args.delta), "horizon": horizon,
         "mode": args.mode, "method_class": args.method_class,
         "eta": args.eta},
        {"phase": diagram.to_dict(), "properties": props.to_dict()},
        [], {},
    )
    text = (
        f"report for {system.name}: phase {len(args.eps)}x{len(args.delta)} cells, "
        f"properties at eta={args.eta}\n"
    )
    _emit(doc, text, args)
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invshadow",
        description="Inverse-shadowing deciders on finite metric dynamical systems",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    zoo = sub.add_parser("zoo", help="zoo utilities")
    zoo.add_argument("zoo_action", choices=["list"])
    _common_output(zoo)
    zoo.set_defaults(handler=_cmd_zoo)

    graph_p = sub.add_parser("graph", help="print the delta-transition graph")
    graph_p.add_argument("--system", required=True)
    graph_p.add_argument("--delta", type=float, required=True)
    _common_output(graph_p)
    graph_p.set_defaults(handler=_cmd_graph)

    decide = sub.add_parser("decide", help="decide inverse shadowing at one cell")
    _query_flags(decide)
    decide.add_argument("--robust", action="store_true",
                        help="require the whole delta-ball around the witness to work")
    decide.set_defaults(handler=_cmd_decide)

    weak = sub.add_parser("weak", help="decide weak inverse shadowing")
    _query_flags(weak)
    weak.set_defaults(handler=_cmd_weak)

    phase = sub.add_parser("phase", help="sweep an (eps, delta) grid")
    _query_flags(phase)
    phase.set_defaults(handler=_cmd_phase)

    props = sub.add_parser("props", help="resolution-bounded property report")
    _query_flags(props, default_horizon="6")
    props.add_argument("--eta", type=float, default=0.12,
                       help="resolution for the sensitivity moduli")
    props.set_defaults(handler=_cmd_props)

    verify = sub.add_parser("verify", help="run the theorem suites")
    verify.add_argument("--all", action="store_true")
    verify.add_argument("--suites", help="comma-separated theorem ids")
    verify.add_argument("--cap", type=int, default=None)
    _common_output(verify)
    verify.set_defaults(handler=_cmd_verify)

    report = sub.add_parser("report", help="combined phase + properties document")
    _query_flags(report)
    report.add_argument("--eta", type=float, default=0.12)
    report.set_defaults(handler=_cmd_report)
    return parser


def _query_flags(p, default_horizon: str = FULL) -> None:
    p.add_argument("--system", required=True,
                   help="zoo family:params (e.g. rotation:8,1) or a config file path")
    p.add_argument("--eps", type=float, nargs="+", default=[0.15, 0.2, 0.3],
                   help="threshold(s); single value for decide/weak, grid for sweeps")
    p.add_argument("--delta", type=float, nargs="+", default=[0.1, 0.12, 0.13])
    p.add_argument("--horizon", default=default_horizon,
                   help="positive integer or 'full'")
    p.add_argument("--mode", choices=[POSITIVE, BI], default=POSITIVE)
    p.add_argument("--class", dest="method_class",
                   choices=[CLASS_T0, CLASS_TH, CLASS_TC], default=CLASS_T0)
    p.add_argument("--cap", type=int, default=None,
                   help="stabilization cap override for FULL horizons")
    _common_output(p)


def _common_output(p) -> None:
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None, help="write output to this path")


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except InvShadowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())

#!/usr/bin/env python3
"""
Командная строка grpdim: вычисление, перекрёстная проверка и экспорт графов групп.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Optional

import pandas as pd
import typer

# Добавляем корневую директорию пакета в PYTHONPATH
sys.path.insert(0, str(Path(__file__).resolve().parents[2]))

from src import config
from src.closed_forms import formula_for
from src.errors import GrpDimError
from src.graphs.builders import Family, build_graph
from src.graphs.export import write_graph
from src.groups.builders import build_group
from src.groups.profile import cyclic_lattice, order_counts, order_profile
from src.cli.runner import (
    METHODS,
    evaluate,
    outcomes_agree,
    parse_families,
    parse_methods,
    verify_catalog,
    write_reports,
)

logger = logging.getLogger(__name__)

app = typer.Typer(help="Strong metric dimension of power-type graphs of finite groups.", add_completion=False)


def _limits(oracle_cap, vertex_cover_cap, clique_cap, node_budget) -> dict:
    limits = {
        "oracle_cap": oracle_cap,
        "vertex_cover_cap": vertex_cover_cap,
        "clique_cap": clique_cap,
        "node_budget": node_budget,
    }
    return {k: v for k, v in limits.items() if v is not None}


def _fail(message: str, code: int = 2) -> None:
    logger.error(message)
    typer.echo(f"error: {message}", err=True)
    raise typer.Exit(code=code)


def _emit(payload, fmt: str, frame: Optional[pd.DataFrame] = None) -> None:
    if fmt == "table" and frame is not None:
        typer.echo(frame.to_string(index=False))
    else:
        typer.echo(json.dumps(payload, indent=2))


@app.callback()
def main(
    log_level: str = typer.Option(config.LOG_LEVEL, "--log-level", help="Logging level for stderr output."),
) -> None:
    # Логи идут в stderr, результаты в stdout
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=getattr(logging, log_level.upper(), logging.INFO),
        stream=sys.stderr,
    )


@app.command()
def compute(
    spec: str = typer.Argument(..., help="Group descriptor, e.g. Q8, Z2xZ4, file:table.txt"),
    family: str = typer.Option("supergraph", "--family", "-f", help="power, enhanced, supergraph or reduced"),
    method: str = typer.Option("formula", "--method", "-m", help="formula, diameter2, vertexcover, oracle or all"),
    fmt: str = typer.Option("json", "--format", help="json or table"),
    oracle_cap: Optional[int] = typer.Option(None, "--oracle-cap"),
    vertex_cover_cap: Optional[int] = typer.Option(None, "--vertex-cover-cap"),
    clique_cap: Optional[int] = typer.Option(None, "--clique-cap"),
    node_budget: Optional[int] = typer.Option(None, "--node-budget"),
) -> None:
    """Computes sdim of one graph by one method, or by all applicable methods."""
    limits = _limits(oracle_cap, vertex_cover_cap, clique_cap, node_budget)
    try:
        fam = Family.parse(family)
        method = method.strip().lower()
        run_all = method == "all"
        if not run_all and method not in METHODS:
            raise GrpDimError(f"Unknown method '{method}'. Known: {', '.join(METHODS)}, all")
        group = build_group(spec)
        methods = METHODS if run_all else [method]
        logger.info(f"Computing sdim of {fam.value}({group.name}) by {', '.join(methods)}")
        outcomes = evaluate(group, fam, methods, limits, tolerate=run_all)
    except ValueError as e:
        # GrpDimError наследует ValueError
        _fail(str(e))

    frame = pd.DataFrame([o.model_dump() for o in outcomes], columns=["method", "value", "branch", "millis", "note"])
    if not run_all:
        outcome = outcomes[0]
        payload = {"group": group.name, "n": group.n, "family": fam.value, **outcome.model_dump(exclude_none=True)}
        if outcome.method == "formula":
            payload = {"group": group.name, **formula_for(group, fam).to_json_dict()}
        _emit(payload, fmt, frame)
        return

    agree = outcomes_agree(outcomes)
    values = {o.method: o.value for o in outcomes}
    present = [v for v in values.values() if v is not None]
    payload = {
        "group": group.name,
        "n": group.n,
        "family": fam.value,
        "value": present[0] if agree and present else None,
        "values": values,
        "agree": agree,
    }
    _emit(payload, fmt, frame)
    if not agree:
        _fail(f"Methods disagree on {fam.value}({group.name}): {values}", code=1)


@app.command()
def verify(
    max_order: int = typer.Option(16, "--max-order", help="Largest group order to include (at most 720)."),
    families: str = typer.Option("all", "--families", help="Comma-separated families or 'all'."),
    methods: str = typer.Option("formula,diameter2,vertexcover,oracle", "--methods"),
    out_dir: Path = typer.Option(Path(config.REPORT_DIR), "--out-dir"),
    workers: int = typer.Option(config.WORKERS, "--workers", min=1),
    oracle_cap: Optional[int] = typer.Option(None, "--oracle-cap"),
    vertex_cover_cap: Optional[int] = typer.Option(None, "--vertex-cover-cap"),
    clique_cap: Optional[int] = typer.Option(None, "--clique-cap"),
    node_budget: Optional[int] = typer.Option(None, "--node-budget"),
) -> None:
    """Cross-validates closed forms against the generic engines over the catalog."""
    limits = _limits(oracle_cap, vertex_cover_cap, clique_cap, node_budget)
    try:
        fams = parse_families(families)
        meths = parse_methods(methods)
        report = verify_catalog(max_order, fams, meths, limits=limits, workers=workers)
    except ValueError as e:
        _fail(str(e))

    try:
        paths = write_reports(report, out_dir)
    except OSError as e:
        _fail(f"Cannot write reports to {out_dir}: {e}")

    summary = report.summary.model_dump()
    summary["reports"] = {kind: str(path) for kind, path in paths.items()}
    typer.echo(json.dumps(summary, indent=2))
    if report.summary.mismatches:
        _fail(f"{report.summary.mismatches} mismatching rows, see {paths['csv']}", code=1)


@app.command()
def export(
    spec: str = typer.Argument(...),
    family: str = typer.Option("power", "--family", "-f"),
    fmt: str = typer.Option("json", "--format", help="dot or json"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file (default <group>_<family>.<format>)."),
) -> None:
    """Writes one graph as Graphviz DOT or adjacency JSON."""
    try:
        fam = Family.parse(family)
        group = build_group(spec)
        graph = build_graph(group, fam)
        target = out or Path(f"{group.name}_{fam.value}.{fmt}")
        path = write_graph(graph, target, fmt)
    except (ValueError, OSError) as e:
        _fail(str(e))
    typer.echo(str(path))


@app.command()
def profile(
    spec: str = typer.Argument(...),
    fmt: str = typer.Option("json", "--format", help="json or table"),
) -> None:
    """Prints element orders, classification flags and the maximal cyclic subgroups."""
    try:
        group = build_group(spec)
    except ValueError as e:
        _fail(str(e))
    prof = order_profile(group)
    lattice = cyclic_lattice(group)
    maximals = [
        {"generator": lattice.generators[k], "order": bin(lattice.cyclics[k]).count("1")}
        for k in lattice.maximals
    ]
    payload = {
        "group": group.name,
        **prof.model_dump(by_alias=True, exclude={"orders"}),
        "order_counts": order_counts(prof),
        "maximal_cyclic": maximals,
    }
    counts = order_counts(prof)
    frame = pd.DataFrame({"order": list(counts.keys()), "elements": list(counts.values())})
    _emit(payload, fmt, frame)


if __name__ == "__main__":
    app()

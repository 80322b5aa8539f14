import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from .. import config
from ..closed_forms import formula_for
from ..errors import CapacityError, GrpDimError, PreconditionError
from ..graphs.builders import FAMILIES, Family, build_graph
from ..groups.builders import build_group
from ..groups.catalog import builtin_catalog
from ..groups.model import FiniteGroup
from ..groups.profile import cyclic_lattice, order_profile
from ..sdim.engine import sdim_diameter2, sdim_vertex_cover
from ..sdim.resolving import sdim_subset_oracle
from .model import REPORT_COLUMNS, MethodOutcome, VerifyReport, VerifyRow

logger = logging.getLogger(__name__)

METHODS = ["formula", "diameter2", "vertexcover", "oracle"]


def parse_methods(text: str) -> List[str]:
    """'all' or a comma-separated subset of METHODS, in canonical order."""
    if text.strip().lower() == "all":
        return list(METHODS)
    requested = {m.strip().lower() for m in text.split(",") if m.strip()}
    unknown = requested - set(METHODS)
    if unknown or not requested:
        raise GrpDimError(f"Unknown method(s) {sorted(unknown)}. Known: {', '.join(METHODS)}, all")
    return [m for m in METHODS if m in requested]


def parse_families(text: str) -> List[Family]:
    if text.strip().lower() == "all":
        return list(FAMILIES)
    try:
        families = [Family.parse(f) for f in text.split(",") if f.strip()]
    except ValueError as e:
        raise GrpDimError(str(e))
    if not families:
        raise GrpDimError("No graph family given")
    return list(dict.fromkeys(families))


def _run_one(method: str, group: FiniteGroup, family: Family, context: dict, limits: dict) -> Tuple[int, Optional[str]]:
    if method == "formula":
        report = formula_for(group, family, profile=context["profile"], lattice=context["lattice"])
        return report.value, report.branch
    graph = context["graph"]
    if method == "diameter2":
        result = sdim_diameter2(graph, cap=limits.get("clique_cap"), node_budget=limits.get("node_budget"))
    elif method == "vertexcover":
        result = sdim_vertex_cover(graph, cap=limits.get("vertex_cover_cap"), node_budget=limits.get("node_budget"))
    else:
        result = sdim_subset_oracle(graph, cap=limits.get("oracle_cap"))
    return result.value, None


def evaluate(
    group: FiniteGroup,
    family: Family,
    methods: Sequence[str],
    limits: Optional[dict] = None,
    tolerate: bool = True,
) -> List[MethodOutcome]:
    """
    Runs each requested method on one (group, family) cell.

    Args:
        group: The group.
        family: Graph family.
        methods: Names from METHODS.
        limits: oracle_cap, vertex_cover_cap, clique_cap, node_budget overrides.
        tolerate: Record capacity and precondition failures as skipped instead of raising.

    Returns:
        One MethodOutcome per method, in the requested order.
    """
    limits = limits or {}
    oracle_cap = limits.get("oracle_cap") or config.oracle_cap()
    context = {"profile": order_profile(group), "lattice": cyclic_lattice(group)}
    context["graph"] = build_graph(group, family, lattice=context["lattice"])

    outcomes = []
    for method in methods:
        if tolerate and method == "formula" and family is Family.POWER:
            outcomes.append(MethodOutcome(method=method, note="no closed form"))
            continue
        if tolerate and method == "oracle" and group.n > oracle_cap:
            outcomes.append(MethodOutcome(method=method, note=f"n above oracle cap {oracle_cap}"))
            continue
        started = time.perf_counter()
        try:
            value, branch = _run_one(method, group, family, context, limits)
        except (CapacityError, PreconditionError) as e:
            if not tolerate:
                raise
            logger.warning(f"{method} skipped on {family.value}({group.name}): {e}")
            outcomes.append(MethodOutcome(method=method, note=str(e)))
            continue
        millis = (time.perf_counter() - started) * 1000.0
        outcomes.append(MethodOutcome(method=method, value=value, branch=branch, millis=round(millis, 3)))
    return outcomes


def outcomes_agree(outcomes: Sequence[MethodOutcome]) -> bool:
    return len({o.value for o in outcomes if not o.skipped}) <= 1


def _verify_cell(spec: str, family_value: str, methods: Tuple[str, ...], limits: dict) -> List[dict]:
    group = build_group(spec)
    family = Family(family_value)
    outcomes = evaluate(group, family, methods, limits)
    match = outcomes_agree(outcomes)
    branch = next((o.branch for o in outcomes if o.branch), None)
    if not match:
        values = {o.method: o.value for o in outcomes}
        logger.error(f"Mismatch on {family.value}({spec}): {values}")
    return [
        VerifyRow(
            group=spec,
            n=group.n,
            family=family.value,
            method=o.method,
            value=o.value,
            branch=branch,
            millis=o.millis,
            match=match,
        ).model_dump()
        for o in outcomes
    ]


def verify_catalog(
    max_order: int,
    families: Sequence[Family],
    methods: Sequence[str],
    limits: Optional[dict] = None,
    workers: Optional[int] = None,
) -> VerifyReport:
    """
    Cross-validates every requested method on every catalog group up to max_order.

    Cells run in a process pool when workers > 1; rows are sorted afterwards so the
    report does not depend on completion order.
    """
    limits = limits or {}
    workers = config.WORKERS if workers is None else workers
    catalog = builtin_catalog(max_order)
    cells = [(spec, family.value) for spec in catalog for family in families]
    logger.info(f"Verifying {len(catalog)} groups x {len(families)} families with {', '.join(methods)}")

    rows: List[dict] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_verify_cell, spec, fam, tuple(methods), limits) for spec, fam in cells]
            for future in futures:
                rows.extend(future.result())
    else:
        for spec, fam in cells:
            rows.extend(_verify_cell(spec, fam, tuple(methods), limits))

    report = VerifyReport.from_rows(max_order, [VerifyRow(**row) for row in rows])
    logger.info(f"Verify finished: {report.summary.total} rows, {report.summary.mismatches} mismatches")
    return report


def report_frame(report: VerifyReport) -> pd.DataFrame:
    """Rows as a DataFrame with the fixed column order; skipped values shown as 'skipped'."""
    frame = pd.DataFrame([row.model_dump() for row in report.rows], columns=REPORT_COLUMNS)
    frame["value"] = [("skipped" if row.value is None else row.value) for row in report.rows]
    frame["branch"] = frame["branch"].fillna("")
    return frame


def write_reports(report: VerifyReport, out_dir: Union[str, Path]) -> Dict[str, Path]:
    """Writes verify_report.csv and verify_report.json (UTF-8, newline-terminated)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "verify_report.csv"
    json_path = out / "verify_report.json"
    report_frame(report).to_csv(csv_path, index=False, lineterminator="\n", encoding="utf-8")
    json_path.write_text(json.dumps(report.model_dump(mode="json"), indent=2) + "\n", encoding="utf-8")
    logger.info(f"Reports written to {out}")
    return {"csv": csv_path, "json": json_path}

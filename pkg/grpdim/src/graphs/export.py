import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from ..errors import GrpDimError
from .model import SimpleGraph

logger = logging.getLogger(__name__)


def _vertex_label(graph: SimpleGraph, v: int) -> str:
    if graph.labels is None:
        return str(v)
    return f"{v}(o={graph.labels[v]})"


def to_dot(graph: SimpleGraph) -> str:
    """DOT text; vertex labels read like "5(o=6)"."""
    lines = [f'graph "{graph.name}" {{']
    for v in range(graph.vcount):
        lines.append(f'  {v} [label="{_vertex_label(graph, v)}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(graph: SimpleGraph) -> Dict[str, Any]:
    return {"n": graph.vcount, "edges": [[u, v] for u, v in graph.edges()]}


def to_json(graph: SimpleGraph) -> str:
    return json.dumps(to_json_dict(graph)) + "\n"


def graph_from_json(text: str, name: str = "graph") -> SimpleGraph:
    """Re-ingests the adjacency JSON export."""
    try:
        data = json.loads(text)
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise GrpDimError(f"Invalid graph JSON: {e}")
    return SimpleGraph.from_edges(n, edges, name=name)


def write_graph(graph: SimpleGraph, path: Union[str, Path], fmt: str) -> Path:
    """
    Writes a graph as DOT or adjacency JSON (UTF-8, newline-terminated).

    Args:
        graph: The graph to export.
        path: Target file.
        fmt: "dot" or "json".

    Returns:
        The written path.
    """
    path = Path(path)
    if fmt == "dot":
        payload = to_dot(graph)
    elif fmt == "json":
        payload = to_json(graph)
    else:
        raise GrpDimError(f"Unknown export format '{fmt}' (expected dot or json)")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(payload, encoding="utf-8")
    logger.info(f"Exported {graph.name} as {fmt} to {path}")
    return path

"""JSON interchange.  Output uses sorted keys and sorted lists so runs are byte-identical."""

from __future__ import annotations

import json
from pathlib import Path

from .drawing import TwoLayerDrawing
from .graph import Graph
from .pathwidth import PathDecomposition


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        out["labels"] = [{"id": v, "row": c.row, "col": c.col} for v, c in enumerate(g.labels)]
    return out


def graph_from_json(data: dict) -> Graph:
    n = int(data["n"])
    labels = None
    if data.get("labels") is not None:
        table = {int(item["id"]): (int(item["row"]), int(item["col"])) for item in data["labels"]}
        if set(table) != set(range(n)):
            raise ValueError("labels must cover every vertex id exactly once")
        labels = [table[v] for v in range(n)]
    return Graph(n, data["edges"], labels)


def drawing_to_json(d: TwoLayerDrawing) -> dict:
    return {
        "partX": sorted(d.order_x),
        "partY": sorted(d.order_y),
        "posX": list(d.order_x),
        "posY": list(d.order_y),
    }


def drawing_from_json(data: dict) -> TwoLayerDrawing:
    d = TwoLayerDrawing(data["posX"], data["posY"])
    if "partX" in data and set(data["partX"]) != d.part_x:
        raise ValueError("partX does not match posX")
    if "partY" in data and set(data["partY"]) != d.part_y:
        raise ValueError("partY does not match posY")
    return d


def decomposition_to_json(pd: PathDecomposition) -> dict:
    return {"bags": [sorted(b) for b in pd.bags]}


def decomposition_from_json(data: dict) -> PathDecomposition:
    return PathDecomposition(data["bags"])


def model_to_json(model: dict[int, frozenset[int]]) -> dict:
    return {"sets": {str(p): sorted(s) for p, s in sorted(model.items())}}


def model_from_json(data: dict) -> dict[int, frozenset[int]]:
    return {int(p): frozenset(int(v) for v in s) for p, s in data["sets"].items()}


def read_json(path) -> dict:
    return json.loads(Path(path).read_text())


def write_text(path, text: str) -> None:
    Path(path).write_text(text)

"""GraphML export and import on top of networkx's GraphML writer and reader.

Node attributes: ``name``, ``community``, ``dc``, ``bc``, ``cc``, ``ec``, ``x``,
``y``; edge attribute: ``kind``. Nodes and edges are inserted in sorted order
and doubles are written with their shortest round-trip text, so re-exporting a
parsed document reproduces it byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Union

import networkx as nx

from analysis.centrality import CentralityScores, Metric
from analysis.community.partition import Partition
from core.errors import AnnotationMismatch, MalformedRecord, safe_fromstring
from network.build import build_network
from network.types import EdgeKind, LayerGraph, MultiplexNetwork, PersonId

from .layout import LayoutResult

GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"
XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>'
_Q = f"{{{GRAPHML_NS}}}"

SCORE_KEYS = {
    Metric.DEGREE: "dc",
    Metric.BETWEENNESS: "bc",
    Metric.CLOSENESS: "cc",
    Metric.EIGENVECTOR: "ec",
}
_KIND_ORDER = {kind: i for i, kind in enumerate(EdgeKind)}

PartitionLike = Union[Partition, Mapping[PersonId, int]]
ScoresLike = Mapping[Metric, Union[CentralityScores, Mapping[PersonId, float]]]
LayoutLike = Union[LayoutResult, Mapping[PersonId, tuple[float, float]]]


@dataclass(slots=True)
class GraphMLDocument:
    """Parsed GraphML: structure plus whatever annotations were present."""

    network: MultiplexNetwork
    community: dict[PersonId, int] = field(default_factory=dict)
    scores: dict[Metric, dict[PersonId, float]] = field(default_factory=dict)
    positions: dict[PersonId, tuple[float, float]] = field(default_factory=dict)
    graph_id: str = "G"


def _check(label: str, keys, nodes: set[PersonId]) -> None:
    extra = sorted(set(keys) - nodes)
    if extra:
        raise AnnotationMismatch(f"{label} references unknown nodes: {', '.join(extra[:5])}")


def _normalize(partition, scores, layout):
    community = dict(partition.assignment if isinstance(partition, Partition) else (partition or {}))
    values: dict[Metric, Mapping[PersonId, float]] = {}
    for metric, s in (scores or {}).items():
        values[Metric(metric)] = s.scores if isinstance(s, CentralityScores) else s
    positions = dict(layout.positions if isinstance(layout, LayoutResult) else (layout or {}))
    return community, values, positions


def _node_data(
    node: PersonId,
    names: Mapping[PersonId, str],
    community: Mapping[PersonId, int],
    values: Mapping[Metric, Mapping[PersonId, float]],
    positions: Mapping[PersonId, tuple[float, float]],
) -> dict[str, Any]:
    # builtin types only: networkx maps them to string / long / double
    data: dict[str, Any] = {}
    if node in names:
        data["name"] = str(names[node])
    if node in community:
        data["community"] = int(community[node])
    for metric, key in SCORE_KEYS.items():
        if metric in values and node in values[metric]:
            data[key] = float(values[metric][node])
    if node in positions:
        x, y = positions[node]
        data["x"], data["y"] = float(x), float(y)
    return data


def to_graphml(
    source: MultiplexNetwork | LayerGraph,
    *,
    names: Mapping[PersonId, str] | None = None,
    partition: PartitionLike | None = None,
    scores: ScoresLike | None = None,
    layout: LayoutLike | None = None,
    graph_id: str | None = None,
) -> str:
    """Serialize a network or single layer with optional annotations.

    Annotations may cover a subset of the nodes (for example scores computed on
    the giant component); nodes they do not mention get no value.
    """
    if isinstance(source, MultiplexNetwork):
        nodes = source.nodes
        node_names = dict(source.names)
        edges = [(u, v, kind) for kind in EdgeKind for u, v in source.edges(kind)]
        gid = graph_id or "multiplex"
    else:
        if source.kind is None:
            raise ValueError("layer graphs need a kind to be exported")
        nodes = source.nodes
        node_names = dict(names or {})
        edges = [(u, v, source.kind) for u, v in source.edges]
        gid = graph_id or source.kind.value

    node_set = set(nodes)
    community, values, positions = _normalize(partition, scores, layout)
    _check("names", node_names, node_set)
    _check("partition", community, node_set)
    for metric, vals in values.items():
        _check(f"{metric.value} scores", vals, node_set)
    _check("layout", positions, node_set)

    graph = nx.MultiGraph(id=gid)
    for node in sorted(nodes):
        graph.add_node(node, **_node_data(node, node_names, community, values, positions))
    # sorted insertion keeps the writer's edge order equal to the id order
    edges.sort(key=lambda e: (e[0], e[1], _KIND_ORDER[e[2]]))
    for i, (u, v, kind) in enumerate(edges):
        graph.add_edge(u, v, key=f"e{i}", kind=kind.value)

    body = "\n".join(nx.generate_graphml(graph, named_key_ids=True))
    return f"{XML_DECLARATION}\n{body}\n"


def read_graphml(text: str) -> GraphMLDocument:
    """Parse a document written by :func:`to_graphml`.

    Edges without a ``kind`` are rejected since every edge belongs to a layer.
    """
    root = safe_fromstring(text, description="GraphML")
    if root is None or root.tag != f"{_Q}graphml":
        raise MalformedRecord(0, "not a GraphML document")
    graph_el = root.find(f"{_Q}graph")
    if graph_el is None:
        raise MalformedRecord(0, "GraphML document has no graph element")

    try:
        parsed = nx.parse_graphml(text, node_type=str, edge_key_type=str, force_multigraph=True)
        declared = [el.attrib["id"] for el in graph_el.iter(f"{_Q}node")]
    except (nx.NetworkXError, KeyError, ValueError) as exc:
        raise MalformedRecord(0, f"bad GraphML content: {exc}") from exc

    by_key = {metric_key: metric for metric, metric_key in SCORE_KEYS.items()}
    community: dict[PersonId, int] = {}
    scores: dict[Metric, dict[PersonId, float]] = {}
    positions: dict[PersonId, tuple[float, float]] = {}
    names: list[tuple[PersonId, str]] = []
    for node in declared:
        data = parsed.nodes[node]
        names.append((node, data.get("name", node)))
        if "community" in data:
            community[node] = int(data["community"])
        for key, metric in by_key.items():
            if key in data:
                scores.setdefault(metric, {})[node] = float(data[key])
        if "x" in data and "y" in data:
            positions[node] = (float(data["x"]), float(data["y"]))

    edges: list[tuple[PersonId, PersonId, EdgeKind]] = []
    for u, v, key, data in parsed.edges(keys=True, data=True):
        if "kind" not in data:
            raise MalformedRecord(0, f"edge {key} has no kind")
        edges.append((u, v, EdgeKind.parse(str(data["kind"]))))

    return GraphMLDocument(
        network=build_network(names, edges),
        community=community,
        scores=scores,
        positions=positions,
        graph_id=graph_el.attrib.get("id", "G"),
    )

"""Multiplex network substrate: types, construction, components, degrees."""

from .build import build_network, layer
from .components import component_index, connected_components, giant_component, is_connected
from .degree import degree, degree_sequence, neighbor_degree_histogram
from .types import Edge, EdgeKind, LayerGraph, MultiplexNetwork, PersonId, canonical_edge

__all__ = [
    "Edge",
    "EdgeKind",
    "LayerGraph",
    "MultiplexNetwork",
    "PersonId",
    "build_network",
    "canonical_edge",
    "component_index",
    "connected_components",
    "degree",
    "degree_sequence",
    "giant_component",
    "is_connected",
    "layer",
    "neighbor_degree_histogram",
]

"""Utilities for consistent error handling across the application.

Every failure a Tejido operation can report derives from :class:`TejidoError`
so CLI actions can catch one type and turn it into a diagnostic plus a
nonzero exit status.
"""

from __future__ import annotations

import logging
from typing import Optional
import xml.etree.ElementTree as ET

# plain stdlib logger: ``utils`` imports ``app_config``, which imports this module
logger = logging.getLogger(__name__)


class TejidoError(Exception):
    """Base class for all domain errors."""


# -----------------------------
# graph-core
# -----------------------------


class UnknownEndpoint(TejidoError):
    """An edge references a node that is not part of the network."""

    def __init__(self, node: str, edge: tuple[str, str]) -> None:
        super().__init__(f"Edge {edge[0]}-{edge[1]} references unknown node {node!r}")
        self.node = node
        self.edge = edge


class SelfLoop(TejidoError):
    """An edge connects a node to itself."""

    def __init__(self, node: str) -> None:
        super().__init__(f"Self-loop on node {node!r}")
        self.node = node


class UnknownNode(TejidoError):
    """A query names a node the graph does not contain."""

    def __init__(self, node: str) -> None:
        super().__init__(f"Unknown node {node!r}")
        self.node = node


class EmptyGraph(TejidoError):
    """An operation needs at least one node."""


class DisconnectedGraph(TejidoError):
    """An operation needs a connected graph (pass the giant component)."""


class NoConvergence(TejidoError):
    """An iterative solver hit its iteration cap."""

    def __init__(self, max_iter: int, residual: float) -> None:
        super().__init__(f"No convergence after {max_iter} iterations (residual {residual:.3e})")
        self.max_iter = max_iter
        self.residual = residual


# -----------------------------
# ingest
# -----------------------------


class MalformedRecord(TejidoError):
    """A line of input could not be parsed into a record."""

    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class DuplicateId(TejidoError):
    """Two records share the same id."""

    def __init__(self, person_id: str, line: int | None = None) -> None:
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"Duplicate id {person_id!r}{where}")
        self.person_id = person_id
        self.line = line


class UnknownRelationKind(TejidoError):
    """A relation kind token is not one of the five edge kinds."""

    def __init__(self, token: str, line: int | None = None) -> None:
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"Unknown relation kind {token!r}{where}")
        self.token = token
        self.line = line


class DanglingReference(TejidoError):
    """A relation targets an id without a record (reject policy)."""

    def __init__(self, source: str, target: str, kind: str) -> None:
        super().__init__(f"{source} lists {kind} relation to missing profile {target!r}")
        self.source = source
        self.target = target
        self.kind = kind


# -----------------------------
# community
# -----------------------------


class ExhaustedEdges(TejidoError):
    """More split events were requested than the graph can produce."""

    def __init__(self, requested: int, achieved: int) -> None:
        super().__init__(f"Requested {requested} splits but only {achieved} are possible")
        self.requested = requested
        self.achieved = achieved


class DegenerateSpectrum(TejidoError):
    """The second-smallest Laplacian eigenvalue is repeated."""

    def __init__(self, value: float, multiplicity: int) -> None:
        super().__init__(f"Fiedler value {value:.6g} has multiplicity {multiplicity}")
        self.value = value
        self.multiplicity = multiplicity


class NodeSetMismatch(TejidoError):
    """Two partitions do not cover the same nodes."""


# -----------------------------
# degree-stats
# -----------------------------


class InsufficientSupport(TejidoError):
    """Too few observations for a fit."""


class InvalidExponent(TejidoError):
    """A fitted exponent falls outside the estimator's validity range."""

    def __init__(self, gamma: float, reason: str = "is not greater than 1") -> None:
        super().__init__(f"Estimated exponent {gamma:.4f} {reason}")
        self.gamma = gamma


# -----------------------------
# export
# -----------------------------


class AnnotationMismatch(TejidoError):
    """An annotation references nodes that are not in the graph."""


class EmptyBundle(TejidoError):
    """A report was requested without any analysis results."""


def log_exception(message: str, exc: Exception) -> None:
    """Log an exception with a standard format."""
    logger.error("%s: %s", message, exc)


def safe_fromstring(xml_text: str, *, description: str = "XML") -> Optional[ET.Element]:
    """Safely parse XML text, returning ``None`` on failure.

    The caller is responsible for handling the ``None`` case.
    """
    try:
        return ET.fromstring(xml_text)
    except ET.ParseError as exc:
        log_exception(f"Failed to parse {description}", exc)
        return None

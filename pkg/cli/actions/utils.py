from __future__ import annotations

import sys
from contextlib import contextmanager
from pathlib import Path

from app_config import ConfigError
from core.errors import TejidoError
from core.helpers import atomic_write_text
from ingest import DanglingPolicy, IngestSummary, load_records, resolve
from network import EdgeKind, LayerGraph, MultiplexNetwork, giant_component, layer
from utils.display_utils import display
from utils.logging_utils.app_logger import app_logger

logger = app_logger.get_logger(__name__)
log_context = app_logger.context

# failures an action turns into a diagnostic and exit status 1
HANDLED_ERRORS = (TejidoError, OSError)


@contextmanager
def action_context(
    action: str,
    *,
    layer: str | None = None,
    input_path: str | None = None,
):
    """Wrapper around :func:`log_context` to reduce repetition in actions."""
    with log_context(action=action, layer=layer, input_path=input_path):
        yield


def report_failure(action: str, exc: BaseException) -> int:
    """Log ``exc`` and print a one-line diagnostic; returns the exit status."""
    logger.error("%s failed: %s", action, exc, exc_info=not isinstance(exc, HANDLED_ERRORS))
    detail = f"{exc.filename}: {exc.strerror}" if isinstance(exc, OSError) and exc.filename else str(exc)
    display.fail(f"{action} failed: {detail}")
    return 1


def load_network(
    input_path: str | Path | None, policy: DanglingPolicy | str | None = None
) -> tuple[MultiplexNetwork, IngestSummary]:
    if not input_path:
        raise ConfigError("--input is required")
    records = load_records(input_path)
    net, summary = resolve(records, DanglingPolicy(policy or DanglingPolicy.MATERIALIZE_STUB))
    logger.info(
        "network loaded",
        extra={"nodes": summary.node_count, "edges": summary.total_edges},
    )
    return net, summary


def select_graph(
    net: MultiplexNetwork, kind: EdgeKind | str, giant: bool = True
) -> tuple[LayerGraph, LayerGraph]:
    """``(analysed graph, full layer)``; the first is the giant component when ``giant``."""
    full = layer(net, EdgeKind(kind))
    return (giant_component(full) if giant else full), full


def emit(text: str, output: str | Path | None = None) -> None:
    """Write ``text`` to ``output`` atomically, or to stdout."""
    if output:
        path = atomic_write_text(output, text)
        display.ok(f"Wrote {path}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")

"""Resolution of parsed profile records into a multiplex network."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from core.errors import DanglingReference
from network.build import build_network
from network.types import EdgeKind, MultiplexNetwork, PersonId
from utils.logging_utils.app_logger import app_logger

from .records import ProfileRecord
from .summary import DanglingRef, IngestSummary, summarize

logger = app_logger.get_logger(__name__)


class DanglingPolicy(str, Enum):
    """What to do with relations whose target has no record."""

    REJECT = "reject"
    DROP = "drop"
    MATERIALIZE_STUB = "materialize-stub"


def resolve(
    records: Sequence[ProfileRecord],
    policy: DanglingPolicy | str = DanglingPolicy.MATERIALIZE_STUB,
) -> tuple[MultiplexNetwork, IngestSummary]:
    """Turn records into a network and tally it.

    Mutual and one-sided mentions both yield one undirected edge. Stubs
    created under ``materialize-stub`` use their id as display name.
    """
    policy = DanglingPolicy(policy)
    nodes: dict[PersonId, str] = {rec.id: rec.name for rec in records}
    edges: list[tuple[PersonId, PersonId, EdgeKind]] = []
    dangling: list[DanglingRef] = []
    stubs: set[PersonId] = set()

    for rec in records:
        for target, kind in rec.relations:
            if target not in nodes or target in stubs:
                ref = DanglingRef(rec.id, target, kind)
                if policy is DanglingPolicy.REJECT:
                    raise DanglingReference(rec.id, target, kind.value)
                dangling.append(ref)
                logger.warning(
                    "dangling reference %s -> %s (%s), policy=%s",
                    rec.id,
                    target,
                    kind.value,
                    policy.value,
                )
                if policy is DanglingPolicy.DROP:
                    continue
                if target not in nodes:
                    nodes[target] = target
                    stubs.add(target)
            edges.append((rec.id, target, kind))

    if stubs:
        logger.info("materialized %d stub profiles", len(stubs))
    net = build_network(nodes.items(), edges)
    return net, summarize(net, tuple(dangling))

"""CSV tables for partitions, centrality scores and degree fits.

Headers are fixed; reals are written at full round-trip precision.
"""

from __future__ import annotations

import csv
import io
from typing import Iterable, Mapping, Sequence

from analysis.centrality import CentralityScores, Metric
from analysis.community.partition import Partition
from core.errors import AnnotationMismatch, MalformedRecord
from core.helpers import fmt_full
from network.types import PersonId

PARTITION_HEADER = ("node", "community")
CENTRALITY_HEADER = ("node", "degree", "betweenness", "closeness", "eigenvector")
FIT_HEADER = ("k", "p_k", "fitted")


def _write(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _read(text: str | Iterable[str], header: Sequence[str]) -> list[list[str]]:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    rows = [row for row in csv.reader(lines) if row]
    if not rows or tuple(rows[0]) != tuple(header):
        raise MalformedRecord(1, f"expected header {','.join(header)}")
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise MalformedRecord(lineno, f"expected {len(header)} columns, got {len(row)}")
    return rows[1:]


def partition_csv(partition: Partition | Mapping[PersonId, int]) -> str:
    assignment = partition.assignment if isinstance(partition, Partition) else partition
    return _write(PARTITION_HEADER, ((node, int(c)) for node, c in sorted(assignment.items())))


def read_partition_csv(text: str | Iterable[str]) -> Partition:
    try:
        return Partition({node: int(c) for node, c in _read(text, PARTITION_HEADER)})
    except ValueError as exc:
        raise MalformedRecord(0, str(exc)) from exc


def centrality_csv(scores: Mapping[Metric, CentralityScores]) -> str:
    """One row per node; every metric must cover the same node set."""
    missing = [m.value for m in Metric if m not in scores]
    if missing:
        raise AnnotationMismatch(f"missing centrality columns: {', '.join(missing)}")
    nodes = sorted(scores[Metric.DEGREE].scores)
    for metric in Metric:
        if sorted(scores[metric].scores) != nodes:
            raise AnnotationMismatch(f"{metric.value} scores cover a different node set")
    rows = (
        [node, *(fmt_full(scores[m].scores[node]) for m in Metric)]
        for node in nodes
    )
    return _write(CENTRALITY_HEADER, rows)


def read_centrality_csv(text: str | Iterable[str]) -> dict[Metric, dict[PersonId, float]]:
    out: dict[Metric, dict[PersonId, float]] = {m: {} for m in Metric}
    for lineno, (node, *values) in enumerate(_read(text, CENTRALITY_HEADER), start=2):
        try:
            for metric, value in zip(Metric, values):
                out[metric][node] = float(value)
        except ValueError as exc:
            raise MalformedRecord(lineno, str(exc)) from exc
    return out


def fit_csv(rows: Iterable[tuple[float, float, float]]) -> str:
    """Rows from :func:`analysis.degree_stats.fit_table`."""
    return _write(FIT_HEADER, ([fmt_full(k), fmt_full(p), fmt_full(f)] for k, p, f in rows))


def read_fit_csv(text: str | Iterable[str]) -> list[tuple[float, float, float]]:
    try:
        return [(float(k), float(p), float(f)) for k, p, f in _read(text, FIT_HEADER)]
    except ValueError as exc:
        raise MalformedRecord(0, str(exc)) from exc

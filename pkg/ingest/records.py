"""Profile record parsing and serialization.

Records are JSON objects, one per line::

    {"id": "p01", "name": "Ana Ruiz", "url": "https://...",
     "relations": [{"target": "p02", "kind": "work"}]}

The alternative input is a CSV edge list with header ``source,target,kind``;
nodes are inferred from the endpoints.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from core.errors import DuplicateId, MalformedRecord
from network.types import EdgeKind, PersonId

CSV_HEADER = ("source", "target", "kind")


@dataclass(frozen=True, slots=True)
class ProfileRecord:
    """One person's profile and the relations it lists."""

    id: PersonId
    name: str
    url: str | None = None
    relations: tuple[tuple[PersonId, EdgeKind], ...] = ()


class _RelationModel(BaseModel):
    model_config = ConfigDict(extra="forbid", str_strip_whitespace=True)

    target: str = Field(min_length=1)
    kind: str


class _RecordModel(BaseModel):
    model_config = ConfigDict(extra="forbid", str_strip_whitespace=True)

    id: str = Field(min_length=1)
    name: str
    url: str | None = None
    relations: list[_RelationModel] = Field(default_factory=list)


def _first_error(exc: ValidationError) -> str:
    err = exc.errors()[0]
    where = ".".join(str(p) for p in err.get("loc", ())) or "record"
    return f"{where}: {err.get('msg', 'invalid value')}"


def parse_profiles(lines: Iterable[str]) -> list[ProfileRecord]:
    """Parse a line-delimited record stream; blank lines are skipped."""
    records: list[ProfileRecord] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            model = _RecordModel.model_validate_json(text)
        except ValidationError as exc:
            raise MalformedRecord(lineno, _first_error(exc)) from None
        if model.id in seen:
            raise DuplicateId(model.id, lineno)
        seen[model.id] = lineno

        relations: list[tuple[PersonId, EdgeKind]] = []
        for rel in model.relations:
            kind = EdgeKind.parse(rel.kind, line=lineno)
            if rel.target == model.id:
                raise MalformedRecord(lineno, f"relation targets its own id {model.id!r}")
            relations.append((rel.target, kind))
        records.append(
            ProfileRecord(id=model.id, name=model.name, url=model.url, relations=tuple(relations))
        )
    return records


def serialize_profiles(records: Sequence[ProfileRecord]) -> str:
    """Inverse of :func:`parse_profiles`: one JSON object per line."""
    out: list[str] = []
    for rec in records:
        payload: dict[str, object] = {"id": rec.id, "name": rec.name}
        if rec.url is not None:
            payload["url"] = rec.url
        payload["relations"] = [{"target": t, "kind": k.value} for t, k in rec.relations]
        out.append(json.dumps(payload, ensure_ascii=False))
    return "\n".join(out) + ("\n" if out else "")


def parse_edge_csv(lines: Iterable[str]) -> list[ProfileRecord]:
    """Build records from a ``source,target,kind`` edge list.

    Every endpoint becomes a record whose name is its id, in order of first
    appearance; relations are attached to the source.
    """
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        return []
    if tuple(h.strip().lower() for h in header) != CSV_HEADER:
        raise MalformedRecord(1, f"expected header {','.join(CSV_HEADER)}")

    order: list[str] = []
    relations: dict[str, list[tuple[PersonId, EdgeKind]]] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 3:
            raise MalformedRecord(lineno, f"expected 3 columns, got {len(row)}")
        source, target, token = (cell.strip() for cell in row)
        if not source or not target:
            raise MalformedRecord(lineno, "empty endpoint")
        if source == target:
            raise MalformedRecord(lineno, f"relation targets its own id {source!r}")
        kind = EdgeKind.parse(token, line=lineno)
        for node in (source, target):
            if node not in relations:
                relations[node] = []
                order.append(node)
        relations[source].append((target, kind))

    return [ProfileRecord(id=n, name=n, relations=tuple(relations[n])) for n in order]


def serialize_edge_csv(records: Sequence[ProfileRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerows((rec.id, target, kind.value) for target, kind in rec.relations)
    return buf.getvalue()


def _decoded(lines: Iterable[bytes]) -> Iterator[str]:
    for lineno, raw in enumerate(lines, start=1):
        try:
            yield raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedRecord(lineno, f"invalid UTF-8: {exc.reason}") from None


def load_records(path: str | Path) -> list[ProfileRecord]:
    """Read records from ``path``; ``.csv`` selects the edge-list reader."""
    p = Path(path)
    with p.open("rb") as fh:
        if p.suffix.lower() == ".csv":
            return parse_edge_csv(_decoded(fh))
        return parse_profiles(_decoded(fh))

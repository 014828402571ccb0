import json
import logging

import pytest

from core.errors import DanglingReference, DuplicateId, MalformedRecord, UnknownRelationKind
from ingest import (
    DanglingPolicy,
    ProfileRecord,
    load_records,
    parse_edge_csv,
    parse_profiles,
    resolve,
    serialize_edge_csv,
    serialize_profiles,
)
from network import EdgeKind


def _line(pid, name, *relations, url=None):
    payload = {"id": pid, "name": name, "relations": [{"target": t, "kind": k} for t, k in relations]}
    if url:
        payload["url"] = url
    return json.dumps(payload)


def test_parse_profiles_basic():
    lines = [
        _line("p1", "Ana", ("p2", "work"), url="https://example.org/p1"),
        "",
        _line("p2", "Bea", ("p1", "ALLIANCE")),
    ]
    records = parse_profiles(lines)
    assert [r.id for r in records] == ["p1", "p2"]
    assert records[0].url == "https://example.org/p1"
    assert records[1].relations == (("p1", EdgeKind.ALLIANCE),)


@pytest.mark.parametrize(
    "line",
    [
        "{not json",
        json.dumps({"name": "no id"}),
        json.dumps({"id": "", "name": "empty id"}),
        json.dumps({"id": "p1", "name": "x", "extra": 1}),
        json.dumps({"id": "p1", "name": "x", "relations": [{"kind": "work"}]}),
    ],
)
def test_malformed_lines_report_line_number(line):
    with pytest.raises(MalformedRecord) as excinfo:
        parse_profiles([_line("p0", "ok"), line])
    assert excinfo.value.line == 2
    assert "line 2" in str(excinfo.value)


def test_duplicate_id():
    with pytest.raises(DuplicateId) as excinfo:
        parse_profiles([_line("p1", "Ana"), _line("p1", "Other")])
    assert excinfo.value.line == 2


def test_unknown_relation_kind():
    with pytest.raises(UnknownRelationKind) as excinfo:
        parse_profiles([_line("p1", "Ana", ("p2", "neighbour"))])
    assert excinfo.value.token == "neighbour"


def test_relation_to_self_is_malformed():
    with pytest.raises(MalformedRecord):
        parse_profiles([_line("p1", "Ana", ("p1", "work"))])


def test_mutual_mentions_collapse_to_one_edge():
    records = parse_profiles([_line("a", "A", ("b", "family")), _line("b", "B", ("a", "family"))])
    net, summary = resolve(records)
    assert net.edge_count(EdgeKind.FAMILY) == 1
    assert summary.edges_per_kind[EdgeKind.FAMILY] == 1


# -----------------------------
# Dangling references
# -----------------------------


@pytest.fixture
def dangling_records():
    return parse_profiles([_line("a", "A", ("b", "work"), ("ghost", "alliance")), _line("b", "B")])


def test_dangling_reject(dangling_records):
    with pytest.raises(DanglingReference) as excinfo:
        resolve(dangling_records, DanglingPolicy.REJECT)
    assert excinfo.value.target == "ghost"


def test_dangling_drop(dangling_records, caplog):
    caplog.set_level(logging.WARNING)
    net, summary = resolve(dangling_records, "drop")
    assert "ghost" not in net
    assert net.edge_count(EdgeKind.ALLIANCE) == 0
    assert [d.target for d in summary.dangling_references] == ["ghost"]
    assert any("dangling reference" in r.getMessage() for r in caplog.records)


def test_dangling_materialize_stub(dangling_records):
    net, summary = resolve(dangling_records, DanglingPolicy.MATERIALIZE_STUB)
    assert net.name("ghost") == "ghost"
    assert net.edge_count(EdgeKind.ALLIANCE) == 1
    assert summary.node_count == 3
    assert summary.to_dict()["dangling_references"] == [
        {"source": "a", "target": "ghost", "kind": "alliance"}
    ]


def test_forward_references_are_not_dangling():
    records = parse_profiles([_line("a", "A", ("z", "work")), _line("z", "Z")])
    _, summary = resolve(records, DanglingPolicy.REJECT)
    assert summary.dangling_references == ()


# -----------------------------
# Edge list input and serialization
# -----------------------------


def test_parse_edge_csv_infers_nodes():
    records = parse_edge_csv(["source,target,kind", "x,y,work", "", "y,z,Rivalry"])
    assert [r.id for r in records] == ["x", "y", "z"]
    assert records[0].name == "x"
    net, _ = resolve(records)
    assert net.edge_count(EdgeKind.RIVALRY) == 1


@pytest.mark.parametrize(
    "lines, line",
    [
        (["a,b,c", "x,y,work"], 1),
        (["source,target,kind", "x,y"], 2),
        (["source,target,kind", "x,x,work"], 2),
        (["source,target,kind", ",y,work"], 2),
    ],
)
def test_parse_edge_csv_errors(lines, line):
    with pytest.raises(MalformedRecord) as excinfo:
        parse_edge_csv(lines)
    assert excinfo.value.line == line


def test_serialize_profiles_reparses_to_equal_records():
    records = [
        ProfileRecord("p1", "Ana Núñez", "https://example.org", (("p2", EdgeKind.WORK),)),
        ProfileRecord("p2", "Bea"),
    ]
    text = serialize_profiles(records)
    assert "Núñez" in text
    assert parse_profiles(text.splitlines()) == records


def test_serialize_edge_csv_reparses():
    records = parse_edge_csv(["source,target,kind", "x,y,work", "y,z,family"])
    again = parse_edge_csv(serialize_edge_csv(records).splitlines())
    assert again == records


def test_serialize_edge_csv_quotes_awkward_ids():
    records = parse_edge_csv(["source,target,kind", '"Ruiz, Ana","say ""hi""",alliance'])
    text = serialize_edge_csv(records)
    assert text.splitlines()[1] == '"Ruiz, Ana","say ""hi""",alliance'
    assert parse_edge_csv(text.splitlines()) == records


@pytest.mark.parametrize("name", ["profiles.jsonl", "edges.csv"])
def test_load_records_rejects_invalid_utf8(tmp_path, name):
    path = tmp_path / name
    path.write_bytes(b"\xff\xfe")
    with pytest.raises(MalformedRecord) as excinfo:
        load_records(path)
    assert excinfo.value.line == 1
    assert "UTF-8" in str(excinfo.value)


def test_load_records_reports_line_of_bad_bytes(tmp_path):
    path = tmp_path / "profiles.jsonl"
    path.write_bytes(_line("a", "A").encode("utf-8") + b"\n" + b'{"id": "b", "name": "\xe9"}\n')
    with pytest.raises(MalformedRecord) as excinfo:
        load_records(path)
    assert excinfo.value.line == 2


def test_load_records_dispatches_on_suffix(tmp_path):
    csv_path = tmp_path / "edges.csv"
    csv_path.write_text("source,target,kind\na,b,work\n", encoding="utf-8")
    jsonl_path = tmp_path / "profiles.jsonl"
    jsonl_path.write_text(_line("a", "A") + "\n", encoding="utf-8")
    assert [r.id for r in load_records(csv_path)] == ["a", "b"]
    assert [r.id for r in load_records(jsonl_path)] == ["a"]


def test_load_records_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_records(tmp_path / "absent.jsonl")


# -----------------------------
# Summary on the shipped fixture
# -----------------------------


def test_fixture_summary_matches_golden(fixture_path, golden):
    net, summary = resolve(load_records(fixture_path))
    assert summary.node_count == golden["node_count"]
    assert summary.to_dict()["edges_per_kind"] == golden["edges_per_kind"]
    assert summary.to_dict()["giant_component_per_kind"] == golden["giant_component_per_kind"]
    assert summary.dangling_references == ()
    assert summary.total_edges == sum(golden["edges_per_kind"].values())

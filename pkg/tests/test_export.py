import math

import numpy as np
import pytest

from analysis.centrality import Metric, ranked_table
from analysis.cliques import maximum_cliques
from analysis.community import Partition, fiedler_bisection, girvan_newman
from analysis.degree_stats import (
    LS_METHOD,
    MLE_METHOD,
    PowerLawFit,
    degree_summary,
    fit_power_law_ls,
)
from core.errors import AnnotationMismatch, EmptyBundle, MalformedRecord
from export import (
    AnalysisBundle,
    LayerAnalysis,
    LayoutParams,
    Lcg64,
    centrality_csv,
    fit_csv,
    force_layout,
    partition_csv,
    read_centrality_csv,
    read_fit_csv,
    read_graphml,
    read_partition_csv,
    render_report,
    styled_graph,
    to_dot,
    to_graphml,
)
from export.layout import unit_disc_positions
from export.report import format_centrality_table, format_fits
from network import EdgeKind, LayerGraph, giant_component, layer
from oracles import make_graph

# -----------------------------
# Layout
# -----------------------------


def test_lcg_is_deterministic():
    a, b = Lcg64(42), Lcg64(42)
    draws = [a.random() for _ in range(100)]
    assert draws == [b.random() for _ in range(100)]
    assert all(0.0 <= x < 1.0 for x in draws)
    assert Lcg64(43).random() != draws[0]


def test_unit_disc_start():
    pos = unit_disc_positions(tuple(f"n{i}" for i in range(200)), seed=5)
    radii = np.sqrt((pos**2).sum(axis=1))
    assert (radii <= 1.0).all()
    assert radii.mean() == pytest.approx(2 / 3, abs=0.08)


def test_layout_same_seed_same_positions(barbell):
    first = force_layout(barbell, seed=9, iterations=100)
    second = force_layout(barbell, seed=9, iterations=100)
    assert first.positions == second.positions
    assert force_layout(barbell, seed=10, iterations=100).positions != first.positions


def test_layout_history_and_settling(barbell):
    result = force_layout(barbell, seed=1)
    assert len(result.displacements) == result.iterations == 500
    assert max(result.displacements[-10:]) <= 1e-4
    assert max(result.displacements[-10:]) < max(result.displacements[:10]) / 100
    assert result.params == LayoutParams()


def test_layout_single_node_drifts_to_origin():
    g = LayerGraph(["solo"], [])
    start = unit_disc_positions(("solo",), 3)[0]
    x, y = force_layout(g, seed=3).positions["solo"]
    assert math.hypot(x, y) <= 5.3e-4 * math.hypot(*start) + 1e-12


def test_layout_two_nodes_balance_about_origin():
    g = make_graph([("a", "b")])
    pos = force_layout(g, seed=4).positions
    (ax, ay), (bx, by) = pos["a"], pos["b"]
    assert abs((ax + bx) / 2) < 1e-2 and abs((ay + by) / 2) < 1e-2
    assert math.hypot(ax - bx, ay - by) > 0.5


def test_layout_separates_barbell_halves(barbell):
    pos = force_layout(barbell, seed=2).positions
    left = np.array([pos[v] for v in "abc"])
    right = np.array([pos[v] for v in "def"])
    between = np.linalg.norm(left.mean(axis=0) - right.mean(axis=0))

    def spread(block):
        return np.mean([np.linalg.norm(p - q) for i, p in enumerate(block) for q in block[i + 1:]])

    assert between > 2 * max(spread(left), spread(right))


def test_layout_ignores_node_naming(barbell):
    rename = dict(zip("abcdef", "zyxwvu"))
    renamed = make_graph([(rename[u], rename[v]) for u, v in barbell.edges])
    start = dict(zip(barbell.nodes, unit_disc_positions(barbell.nodes, 8)))
    base = force_layout(barbell, seed=0, iterations=200, initial=start).positions
    moved = force_layout(
        renamed, seed=0, iterations=200, initial={rename[v]: p for v, p in start.items()}
    ).positions
    for v in barbell.nodes:
        assert moved[rename[v]] == pytest.approx(base[v], abs=1e-9)


def test_layout_rejects_zero_iterations(triangle):
    with pytest.raises(ValueError):
        force_layout(triangle, seed=1, iterations=0)


# -----------------------------
# GraphML
# -----------------------------


@pytest.fixture
def alliance_graphml(fixture_net):
    full = layer(fixture_net, EdgeKind.ALLIANCE)
    g = giant_component(full)
    table = ranked_table(g, 2)
    gn = girvan_newman(g, 1)
    positions = force_layout(full, seed=7, iterations=50)
    return to_graphml(
        full,
        names=fixture_net.names,
        partition=gn.first_cut,
        scores=table.scores,
        layout=positions,
    )


def test_graphml_counts_and_annotations(alliance_graphml, fixture_net, golden):
    doc = read_graphml(alliance_graphml)
    assert doc.graph_id == "alliance"
    assert len(doc.network) == golden["node_count"]
    assert doc.network.edge_count(EdgeKind.ALLIANCE) == golden["edges_per_kind"]["alliance"]
    assert doc.network.edge_count() == golden["edges_per_kind"]["alliance"]
    assert doc.community["p01"] == 0 and doc.community["p29"] == 1
    assert doc.scores[Metric.DEGREE]["p01"] == golden["alliance"]["hub_degree"]
    assert set(doc.scores) == set(Metric)
    assert len(doc.positions) == golden["node_count"]
    assert doc.network.name("p01") == fixture_net.name("p01")


def test_graphml_reexport_is_byte_identical(alliance_graphml):
    doc = read_graphml(alliance_graphml)
    again = to_graphml(
        doc.network,
        partition=doc.community,
        scores=doc.scores,
        layout=doc.positions,
        graph_id=doc.graph_id,
    )
    assert again == alliance_graphml


def test_graphml_multiplex_export(fixture_net, golden):
    text = to_graphml(fixture_net)
    assert text.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    doc = read_graphml(text)
    assert doc.graph_id == "multiplex"
    for kind, count in golden["edges_per_kind"].items():
        assert doc.network.edge_count(EdgeKind(kind)) == count


def test_graphml_rejects_unknown_annotation(triangle):
    with pytest.raises(AnnotationMismatch):
        to_graphml(triangle, partition={"a": 0, "ghost": 1})
    with pytest.raises(AnnotationMismatch):
        to_graphml(triangle, layout={"zz": (0.0, 0.0)})


def test_graphml_needs_layer_kind():
    with pytest.raises(ValueError):
        to_graphml(LayerGraph(["a", "b"], [("a", "b")]))


@pytest.mark.parametrize("text", ["<graphml", "<other/>", '<graphml xmlns="http://graphml.graphdrawing.org/xmlns"/>'])
def test_read_graphml_malformed(text):
    with pytest.raises(MalformedRecord):
        read_graphml(text)


def test_graphml_triangle_document(triangle):
    text = to_graphml(triangle, names={"a": "Ana"}, partition={"a": 0, "b": 0, "c": 1})
    lines = text.splitlines()
    assert lines[0] == '<?xml version="1.0" encoding="UTF-8"?>'
    assert lines[2:5] == [
        '  <key id="kind" for="edge" attr.name="kind" attr.type="string" />',
        '  <key id="community" for="node" attr.name="community" attr.type="long" />',
        '  <key id="name" for="node" attr.name="name" attr.type="string" />',
    ]
    assert lines[5] == '  <graph edgedefault="undirected" id="alliance">'
    assert '    <edge source="a" target="b" id="e0">' in lines
    assert '    <edge source="b" target="c" id="e2">' in lines
    assert text.endswith("</graphml>\n")


@pytest.mark.parametrize(
    "body",
    [
        '<node id="a"/><node id="b"/><edge source="a" target="b"/>',
        '<node id="a"><data key="community">north</data></node>',
        '<node id="a"><data key="nope">1</data></node>',
    ],
)
def test_read_graphml_bad_content(body):
    text = (
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">'
        '<key id="community" for="node" attr.name="community" attr.type="long"/>'
        f'<graph id="work" edgedefault="undirected">{body}</graph></graphml>'
    )
    with pytest.raises(MalformedRecord):
        read_graphml(text)


# -----------------------------
# DOT
# -----------------------------


def test_dot_triangle(triangle):
    text = to_dot(triangle, names={"a": "Ana"}, partition=Partition({"a": 0, "b": 0, "c": 1}))
    lines = text.splitlines()
    assert lines[0] == 'graph "alliance" {'
    assert lines[2] == '  "a" [label="Ana", fillcolor="#1f77b4", width=0.400];'
    assert lines[4] == '  "c" [label="c", fillcolor="#ff7f0e", width=0.400];'
    assert sum("--" in line for line in lines) == 3
    assert lines[-1] == "}"


def test_dot_quotes_awkward_ids_and_labels():
    g = LayerGraph(["a--b", "c;d"], [("a--b", "c;d")], EdgeKind.WORK)
    text = to_dot(g, names={"a--b": 'Say "hi"', "c;d": "back\\slash"})
    lines = text.splitlines()
    assert lines[0] == 'graph "work" {'
    assert lines[2] == '  "a--b" [label="Say \\"hi\\"", fillcolor="#d9d9d9", width=0.350];'
    assert lines[3] == '  "c;d" [label="back\\\\slash", fillcolor="#d9d9d9", width=0.350];'
    assert lines[4] == '  "a--b" -- "c;d";'
    assert len(lines) == 6


def test_styled_graph_attributes(barbell):
    styled = styled_graph(barbell, partition={node: 0 for node in barbell.nodes})
    assert list(styled.nodes) == list(barbell.nodes)
    assert styled.number_of_edges() == barbell.number_of_edges()
    for node, data in styled.nodes(data=True):
        assert set(data) == {"label", "fillcolor", "width"}
        assert data["fillcolor"] == "#1f77b4"
        assert data["width"] == pytest.approx(0.3 + 0.05 * barbell.graph.degree(node))
    assert barbell.graph.nodes[barbell.nodes[0]] == {}


def test_dot_unassigned_colour_and_mismatch(path4):
    assert "#d9d9d9" in to_dot(path4)
    with pytest.raises(AnnotationMismatch):
        to_dot(path4, partition={"q": 0})


# -----------------------------
# CSV tables
# -----------------------------


def test_partition_csv(barbell):
    p = girvan_newman(barbell, 1).first_cut
    text = partition_csv(p)
    assert text.splitlines()[0] == "node,community"
    assert read_partition_csv(text) == p


def test_centrality_csv(barbell):
    table = ranked_table(barbell, 1)
    text = centrality_csv(table.scores)
    lines = text.splitlines()
    assert lines[0] == "node,degree,betweenness,closeness,eigenvector"
    assert len(lines) == barbell.number_of_nodes() + 1
    parsed = read_centrality_csv(text)
    assert parsed[Metric.BETWEENNESS]["c"] == table.scores[Metric.BETWEENNESS].scores["c"]


def test_centrality_csv_requires_all_metrics(barbell):
    table = ranked_table(barbell, 1, [Metric.DEGREE])
    with pytest.raises(AnnotationMismatch):
        centrality_csv(table.scores)


def test_fit_csv():
    rows = [(1.0, 0.5, 0.5), (2.0, 0.125, 0.125)]
    text = fit_csv(rows)
    assert text.splitlines()[0] == "k,p_k,fitted"
    assert read_fit_csv(text) == rows


@pytest.mark.parametrize(
    "reader, text",
    [
        (read_partition_csv, "node,group\na,0\n"),
        (read_partition_csv, "node,community\na,zero\n"),
        (read_fit_csv, "k,p_k,fitted\n1,2\n"),
    ],
)
def test_table_readers_reject_bad_input(reader, text):
    with pytest.raises(MalformedRecord):
        reader(text)


# -----------------------------
# Report
# -----------------------------


def test_empty_bundle():
    with pytest.raises(EmptyBundle):
        render_report(AnalysisBundle())
    bundle = AnalysisBundle()
    bundle.add(LayerAnalysis(EdgeKind.WORK, node_count=3, giant_size=3))
    with pytest.raises(EmptyBundle):
        render_report(bundle)


def test_fit_table_labels_each_estimator():
    fits = [
        PowerLawFit(gamma=2.1, method=LS_METHOD, k_min=1, goodness=0.9, support=6),
        PowerLawFit(gamma=2.4, method=MLE_METHOD, k_min=2, goodness=0.05, support=80, estimator="exact"),
        PowerLawFit(
            gamma=2.3, method=MLE_METHOD, k_min=2, goodness=0.06, support=80, estimator="approximate"
        ),
    ]
    text = format_fits(fits)
    assert LS_METHOD in text and "None" not in text
    assert f"{MLE_METHOD} (exact)" in text
    assert f"{MLE_METHOD} (approximate)" in text


def test_report_sections(barbell):
    g = barbell
    analysis = LayerAnalysis(
        EdgeKind.ALLIANCE,
        node_count=8,
        giant_size=6,
        table=ranked_table(g, 2),
        gn=girvan_newman(g, 1),
        fiedler=fiedler_bisection(g),
        cliques=maximum_cliques(g),
        fits=(fit_power_law_ls({1: 0.5, 2: 0.25, 4: 0.125}),),
        degrees=degree_summary(g),
    )
    bundle = AnalysisBundle(names={"c": "Carla"})
    bundle.add(analysis)
    text = render_report(bundle)
    assert text.startswith("TEJIDO NETWORK REPORT\n=====")
    assert "Alliance layer" in text
    assert "Giant component: 6 of 8 nodes (0.750)" in text
    for heading in ("Degree", "Betweenness", "Closeness", "Eigencentrality"):
        assert heading in text
    assert "Carla (3)" in text
    assert "Girvan-Newman: 2 communities, fractions 0.500 / 0.500" in text
    assert "Maximum clique size: 3 (2 cliques)" in text
    assert "Common to all: 0" in text
    assert render_report(bundle) == text


def test_centrality_table_rows(barbell):
    text = format_centrality_table(ranked_table(barbell, 2))
    body = text.splitlines()
    assert [cell.strip() for cell in body[0].split("|")][:2] == ["#", "Degree"]
    assert sum(1 for line in body if line.strip().startswith(("1", "2"))) == 2

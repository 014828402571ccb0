import json
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from app_config import app_settings
from ingest import load_records, resolve
from oracles import make_graph

FIXTURES = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture(autouse=True)
def _quiet_logging(monkeypatch):
    # JSON logs on stderr would mix into capsys output
    monkeypatch.setenv("TEJIDO_LOG_TO_STDERR", "0")
    app_settings.get_settings.cache_clear()
    yield
    app_settings.get_settings.cache_clear()


# -----------------------------
# Named small graphs
# -----------------------------


@pytest.fixture
def path4():
    return make_graph([("a", "b"), ("b", "c"), ("c", "d")])


@pytest.fixture
def path3():
    return make_graph([("a", "b"), ("b", "c")])


@pytest.fixture
def star3():
    return make_graph([("c", "x"), ("c", "y"), ("c", "z")])


@pytest.fixture
def triangle():
    return make_graph([("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def barbell():
    """Two triangles joined by the bridge c-d."""
    return make_graph(
        [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("d", "e"), ("d", "f"), ("e", "f")]
    )


@pytest.fixture
def cycle6():
    nodes = ["a", "b", "c", "d", "e", "f"]
    return make_graph([(nodes[i], nodes[(i + 1) % 6]) for i in range(6)])


@pytest.fixture
def k5():
    nodes = ["1", "2", "3", "4", "5"]
    return make_graph([(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1:]])


@pytest.fixture
def twin_cliques():
    """K4 on 1-4 plus nodes 5 and 6, each joined to all of 1-4 but not to each other."""
    core = ["1", "2", "3", "4"]
    edges = [(u, v) for i, u in enumerate(core) for v in core[i + 1:]]
    edges += [(c, x) for c in core for x in ("5", "6")]
    return make_graph(edges)


# -----------------------------
# Shipped fixture network
# -----------------------------


@pytest.fixture(scope="session")
def fixture_path() -> Path:
    return FIXTURES / "parliament.jsonl"


@pytest.fixture(scope="session")
def fixture_net(fixture_path):
    net, _ = resolve(load_records(fixture_path))
    return net


@pytest.fixture(scope="session")
def golden() -> dict:
    return json.loads((FIXTURES / "golden.json").read_text(encoding="utf-8"))

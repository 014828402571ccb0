import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]


# each import runs in a fresh interpreter so no earlier import masks a cycle
@pytest.mark.parametrize(
    "module",
    [
        "core.errors",
        "network",
        "ingest",
        "analysis.centrality",
        "analysis.community",
        "analysis.cliques",
        "analysis.degree_stats",
        "export",
        "app_config",
        "app_config.pipeline",
        "utils",
        "cli.__main__",
    ],
)
def test_package_imports_on_its_own(module):
    proc = subprocess.run(
        [sys.executable, "-c", f"import {module}"],
        cwd=ROOT,
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0, proc.stderr

"""Top-level entry point for the Tejido CLI."""

from __future__ import annotations

import sys

from cli.__main__ import main

if __name__ == "__main__":  # pragma: no cover - script entry
    sys.exit(main())

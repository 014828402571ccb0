"""CLI entry point for Tejido."""

from __future__ import annotations

import sys
import uuid
from typing import Callable

from utils.logging_utils.app_logger import app_logger
from utils.logging_utils.logging_config import configure_logging

from .parser import build_parser

logger = app_logger.get_logger(__name__)


def _handlers() -> dict[str, Callable[..., int]]:
    # imported after logging is configured so module-level loggers pick it up
    from .actions import (
        run_centrality,
        run_cliques,
        run_communities,
        run_fit,
        run_ingest,
        run_layout,
        run_pipeline_command,
        run_report,
        run_summary,
    )

    return {
        "ingest": run_ingest,
        "summary": run_summary,
        "centrality": run_centrality,
        "communities": run_communities,
        "cliques": run_cliques,
        "fit": run_fit,
        "layout": run_layout,
        "report": run_report,
        "pipeline": run_pipeline_command,
    }


def main(argv: list[str] | None = None) -> int:
    """Parse ``argv``, run one subcommand and return its exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.cmd:
        parser.print_help(sys.stderr)
        return 2

    configure_logging("pipeline" if args.cmd == "pipeline" else "cli")
    # one identifier per invocation
    app_logger.set_session_id(str(uuid.uuid4()))
    logger.info("command started", extra={"command": args.cmd})
    return _handlers()[args.cmd](args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

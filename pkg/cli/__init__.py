"""Command-line front door: ``python -m cli <command>``."""

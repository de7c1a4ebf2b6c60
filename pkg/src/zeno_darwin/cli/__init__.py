"""Zeno Darwin CLI."""

from zeno_darwin.cli.core import app, parse_and_dispatch

__all__ = [
    "app",
    "parse_and_dispatch",
]

"""Zeno Darwin CLI context."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from zeno_darwin.data import Settings
    from zeno_darwin.log import LoggingFormat, LoggingLevel

_CONTEXT: dict[str, CoreContext] = {}


@dataclass(frozen=True)
class CoreContext:
    """Global flags and settings of the running invocation."""

    logging_format: LoggingFormat
    logging_level: LoggingLevel
    settings: Settings


def set_core_context(context: CoreContext | None) -> None:
    """Set the running invocation's context, or clear it with None."""

    if context is None:
        _CONTEXT.pop("core", None)
    else:
        _CONTEXT["core"] = context


def get_core_context() -> CoreContext | None:
    """Context of the running invocation, if any."""

    return _CONTEXT.get("core")

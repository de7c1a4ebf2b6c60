"""Zeno Darwin CLI."""

from __future__ import annotations

from typing import TYPE_CHECKING, Annotated

from cyclopts import App, CycloptsError, Parameter
from pydantic import ValidationError
from rich.console import Console

from zeno_darwin.cli.checks import lindblad_check, oracle_check
from zeno_darwin.cli.context import CoreContext, set_core_context
from zeno_darwin.cli.experiments import figure, sweep
from zeno_darwin.cli.options import (
    OPTION_LOG_CONFIG,
    OPTION_LOG_FORMAT,
    OPTION_LOG_LEVEL,
)
from zeno_darwin.cli.physics import kappa, profile, redundancy
from zeno_darwin.data import Settings, first_issue
from zeno_darwin.exceptions import InvalidConfigError, UsageError, ZenoDarwinError
from zeno_darwin.log import DEFAULT_LOG_CONFIG, init_logging
from zeno_darwin.utils import VERSION

if TYPE_CHECKING:
    from collections.abc import Sequence

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

ERROR_SETTINGS = "ZDARWIN_{field}: {error}"

app = App(
    help="""
    Zeno Darwin CLI.

    Redundancy of system records in a collision model environment, with Zeno
    and anti-Zeno control of the system-ancilla coupling.
""",
    version=VERSION,
)
app.command(kappa)
app.command(profile)
app.command(redundancy)
app.command(sweep)
app.command(figure)
app.command(oracle_check, name="oracle-check")
app.command(lindblad_check, name="lindblad-check")


def _load_settings() -> Settings:
    try:
        return Settings()
    except ValidationError as ex:
        issue = first_issue(ex)
        field = (issue.field or "settings").upper()
        raise UsageError(
            ERROR_SETTINGS.format(field=field, error=issue.message)
        ) from ex


@app.meta.default
def meta(
    *tokens: Annotated[str, Parameter(show=False, allow_leading_hyphen=True)],
    logging_format: OPTION_LOG_FORMAT = "auto",
    logging_level: OPTION_LOG_LEVEL = "INFO",
    logging_config: OPTION_LOG_CONFIG = DEFAULT_LOG_CONFIG,
) -> int | None:
    """Zeno Darwin."""

    set_core_context(
        CoreContext(
            logging_format=logging_format,
            logging_level=logging_level,
            settings=_load_settings(),
        )
    )
    init_logging(logging_format, logging_level, config=logging_config)

    return app(tokens, exit_on_error=False)  # type: ignore[no-any-return]


def parse_and_dispatch(argv: Sequence[str] | None = None) -> int:
    """
    Run the CLI, returning the process exit code.

    Usage and config errors exit 2, any other failure exits 1.
    """

    console = Console(stderr=True)
    try:
        result = app.meta(argv, exit_on_error=False)
    except CycloptsError:
        # already printed by cyclopts
        return EXIT_USAGE
    except (UsageError, InvalidConfigError) as ex:
        console.print(f"Error: {ex}", style="red", markup=False)
        return EXIT_USAGE
    except ZenoDarwinError as ex:
        console.print(f"Error: {ex}", style="red", markup=False)
        return EXIT_FAILED

    if isinstance(result, int):
        return result
    return EXIT_OK

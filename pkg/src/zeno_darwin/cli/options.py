"""Zeno Darwin CLI options."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated, Any, Literal

from cyclopts import Parameter

from zeno_darwin.log import LoggingFormat, LoggingLevel

ModelName = Literal["base", "zeno", "anti-zeno"]
FormatName = Literal["csv", "json"]

OPTION_LOG_FORMAT = Annotated[LoggingFormat, Parameter(env_var="ZDARWIN_LOG_FORMAT")]
OPTION_LOG_LEVEL = Annotated[LoggingLevel, Parameter(env_var="ZDARWIN_LOG_LEVEL")]
OPTION_LOG_CONFIG = Annotated[dict[str, Any], Parameter(env_var="ZDARWIN_LOG_CONFIG")]

OPTION_MODEL = Annotated[ModelName, Parameter(("--model", "-m"))]
OPTION_OMEGA = Annotated[
    float,
    Parameter(("--omega", "-w"), help="Collision coupling omega (1/time)."),
]
OPTION_TAU = Annotated[
    float,
    Parameter(("--tau", "-t"), help="Collision duration tau."),
]
OPTION_RABI = Annotated[
    float | None,
    Parameter("--rabi", help="Zeno Rabi rate, in [0, pi/2]. Zeno/anti-Zeno only."),
]
OPTION_DETUNING = Annotated[
    float | None,
    Parameter("--detuning", help="Control detuning epsilon >= 0. Anti-Zeno only."),
]
OPTION_N = Annotated[
    int,
    Parameter(("--n", "-n"), help="Number of ancillas (environment size)."),
]
OPTION_OPTIONAL_N = Annotated[
    int | None,
    Parameter(("--n", "-n"), help="Number of ancillas (environment size)."),
]
OPTION_ELL = Annotated[
    int | None,
    Parameter(("--ell", "-l"), help="Collisions so far, defaults to --n."),
]
OPTION_DELTA = Annotated[
    float | None,
    Parameter(("--delta", "-d"), help="Information deficit in (0, 1)."),
]
OPTION_ALPHA = Annotated[
    float | None,
    Parameter("--alpha", help="System |down> amplitude, defaults to 1/sqrt(2)."),
]
OPTION_BETA = Annotated[
    float | None,
    Parameter("--beta", help="System |up> amplitude, defaults to 1/sqrt(2)."),
]
OPTION_OUT = Annotated[
    Path | None,
    Parameter(("--out", "-o"), help="Output file, standard output when unset."),
]
OPTION_FORMAT = Annotated[
    FormatName | None,
    Parameter(
        ("--format", "-f"),
        help="Output format, defaults to ZDARWIN_OUTPUT_FORMAT.",
    ),
]
OPTION_WORKERS = Annotated[
    int | None,
    Parameter(
        ("--workers", "-j"),
        help="Worker processes, defaults to ZDARWIN_WORKERS.",
    ),
]
OPTION_POINTS = Annotated[
    int | None,
    Parameter("--points", help="Override the grid points of every axis."),
]
OPTION_TOLERANCE = Annotated[
    float | None,
    Parameter("--tolerance", help="Largest deviation accepted."),
]

"""Single-point physics commands."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.table import Table

from zeno_darwin.cli.converters import (
    build_amplitudes,
    build_params,
    flag_error,
    resolve_delta,
    resolve_format,
)
from zeno_darwin.cli.options import (
    OPTION_ALPHA,
    OPTION_BETA,
    OPTION_DELTA,
    OPTION_DETUNING,
    OPTION_ELL,
    OPTION_FORMAT,
    OPTION_MODEL,
    OPTION_N,
    OPTION_OMEGA,
    OPTION_OUT,
    OPTION_RABI,
    OPTION_TAU,
)
from zeno_darwin.darwinism import (
    ancilla_survival,
    darwin_profile,
    decoherence_collisions,
    fragment_size_for_deficit,
    kappa_closed_form,
    redundancy_estimate,
)
from zeno_darwin.data import NO_DECOHERENCE, ResultFormat
from zeno_darwin.results import (
    format_fragment,
    profile_to_csv,
    profile_to_json,
    write_profile,
)
from zeno_darwin.utils import format_float

_LOGGER = logging.getLogger(__name__)

DEFAULT_OMEGA = 5.0
DEFAULT_TAU = 0.05
DEFAULT_N = 1000

ERROR_N = "must be >= 1, got {value!r}"
ERROR_ELL = "must lie in [0, --n], got {value!r}"


def kappa(
    *,
    model: OPTION_MODEL = "base",
    omega: OPTION_OMEGA = DEFAULT_OMEGA,
    tau: OPTION_TAU = DEFAULT_TAU,
    rabi: OPTION_RABI = None,
    detuning: OPTION_DETUNING = None,
) -> None:
    """Print the closed-form decoherence factor kappa."""

    p = build_params(model, omega, tau, rabi, detuning)
    print(format_float(kappa_closed_form(p)))


def redundancy(  # noqa: PLR0913
    *,
    model: OPTION_MODEL = "base",
    omega: OPTION_OMEGA = DEFAULT_OMEGA,
    tau: OPTION_TAU = DEFAULT_TAU,
    rabi: OPTION_RABI = None,
    detuning: OPTION_DETUNING = None,
    n: OPTION_N = DEFAULT_N,
    delta: OPTION_DELTA = None,
    alpha: OPTION_ALPHA = None,
    beta: OPTION_BETA = None,
) -> None:
    """Print the redundancy R after n collisions and its -n ln kappa estimate."""

    p = build_params(model, omega, tau, rabi, detuning)
    amps = build_amplitudes(alpha, beta)
    delta = resolve_delta(delta)
    if n < 1:
        raise flag_error("n", ERROR_N.format(value=n))

    kappa_mod = min(abs(kappa_closed_form(p)), 1.0)
    m_delta = fragment_size_for_deficit(kappa_mod, n, delta, amps)
    ratio = 0.0 if m_delta is NO_DECOHERENCE else n / m_delta
    print(f"R\t{format_float(ratio)}")
    print(f"R_estimate\t{format_float(redundancy_estimate(kappa_mod, n))}")
    print(f"m_delta\t{format_fragment(m_delta)}")


def profile(  # noqa: PLR0913
    *,
    model: OPTION_MODEL = "base",
    omega: OPTION_OMEGA = DEFAULT_OMEGA,
    tau: OPTION_TAU = DEFAULT_TAU,
    rabi: OPTION_RABI = None,
    detuning: OPTION_DETUNING = None,
    n: OPTION_N = DEFAULT_N,
    ell: OPTION_ELL = None,
    delta: OPTION_DELTA = None,
    alpha: OPTION_ALPHA = None,
    beta: OPTION_BETA = None,
    out: OPTION_OUT = None,
    output_format: OPTION_FORMAT = None,
) -> None:
    """
    Mutual information I(S, F_m) for every fragment size m after ell collisions.

    Prints a summary table unless --format or --out is given.
    """

    p = build_params(model, omega, tau, rabi, detuning)
    amps = build_amplitudes(alpha, beta)
    delta = resolve_delta(delta)
    if n < 1:
        raise flag_error("n", ERROR_N.format(value=n))
    if ell is not None and not 0 <= ell <= n:
        raise flag_error("ell", ERROR_ELL.format(value=ell))

    result = darwin_profile(p, n, delta, amps, ell=ell)
    if out is not None:
        write_profile(result, out, resolve_format(output_format))
        return
    if output_format is not None:
        if ResultFormat(output_format) == ResultFormat.JSON:
            text = profile_to_json(result)
        else:
            text = profile_to_csv(result)
        print(text, end="")
        return

    summary = Table(title="Darwin profile", row_styles=["dim", ""])
    summary.add_column("Quantity")
    summary.add_column("Value")
    summary.add_row("model", str(p.kind))
    summary.add_row("kappa", format_float(result.kappa))
    summary.add_row("collisions", str(result.n_collisions))
    summary.add_row("S(rho_S) bits", format_float(result.system_entropy_bits))
    summary.add_row("m_delta", format_fragment(result.m_delta))
    summary.add_row("R", format_float(result.redundancy))
    summary.add_row("R_estimate", format_float(result.redundancy_estimate))
    summary.add_row("ancilla survival", format_float(ancilla_survival(p)))
    summary.add_row(
        "1/Gamma collisions",
        format_float(decoherence_collisions(min(abs(result.kappa), 1.0))),
    )

    curve = Table(title="I(S, F_m)", row_styles=["dim", ""])
    curve.add_column("m")
    curve.add_column("I bits")
    for m, info in enumerate(result.mutual_info_bits):
        curve.add_row(str(m), format_float(float(info)))

    console = Console()
    console.print(summary)
    console.print(curve)

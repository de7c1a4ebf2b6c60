"""Numerical self-check commands."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.table import Table

from zeno_darwin.cli.converters import build_amplitudes, build_params, flag_error
from zeno_darwin.cli.options import (
    OPTION_ALPHA,
    OPTION_BETA,
    OPTION_DETUNING,
    OPTION_MODEL,
    OPTION_OMEGA,
    OPTION_OPTIONAL_N,
    OPTION_RABI,
    OPTION_TAU,
    OPTION_TOLERANCE,
)
from zeno_darwin.darwinism import (
    QubitDensity,
    compare_with_calculus,
    continuum_consistency,
    dephasing_rate,
    evolve_dephasing,
    integrate_dephasing,
)
from zeno_darwin.data import ModelKind, SystemAmplitudes
from zeno_darwin.exceptions import TooLargeError
from zeno_darwin.utils import format_float

_LOGGER = logging.getLogger(__name__)

ORACLE_N_QUBIT = 10
ORACLE_N_QUTRIT = 8
ORACLE_TOLERANCE = 1e-9
CONTINUUM_OMEGA = 0.02
CONTINUUM_N = 1000
CONTINUUM_TOLERANCE = 1e-3
INTEGRATOR_TOLERANCE = 1e-8

ERROR_N = "must be >= 1, got {value!r}"
ERROR_TOLERANCE = "must be > 0, got {value!r}"
ERROR_NO_CONTINUUM = "the anti-zeno model has no continuum dephasing limit"


def _check_inputs(n: int, tolerance: float) -> None:
    if n < 1:
        raise flag_error("n", ERROR_N.format(value=n))
    if not tolerance > 0:
        raise flag_error("tolerance", ERROR_TOLERANCE.format(value=tolerance))


def _report(title: str, rows: list[tuple[str, float, float]]) -> int:
    table = Table(title=title)
    table.add_column("Check")
    table.add_column("Deviation")
    table.add_column("Tolerance")
    table.add_column("Status")

    failed = False
    for name, deviation, tolerance in rows:
        ok = deviation <= tolerance
        failed = failed or not ok
        table.add_row(
            name,
            format_float(deviation),
            format_float(tolerance),
            "[green]ok" if ok else "[red]FAIL",
        )

    Console().print(table)
    return 1 if failed else 0


def oracle_check(  # noqa: PLR0913
    *,
    model: OPTION_MODEL = "base",
    omega: OPTION_OMEGA = 5.0,
    tau: OPTION_TAU = 0.05,
    rabi: OPTION_RABI = None,
    detuning: OPTION_DETUNING = None,
    n: OPTION_OPTIONAL_N = None,
    alpha: OPTION_ALPHA = None,
    beta: OPTION_BETA = None,
    tolerance: OPTION_TOLERANCE = None,
) -> int:
    """
    Compare closed-form entropies against exact state vector simulation.

    Every collision count and fragment size up to n is checked. Exits 1 when
    the largest deviation exceeds the tolerance.
    """

    p = build_params(model, omega, tau, rabi, detuning)
    amps = build_amplitudes(alpha, beta)
    if n is None:
        n = ORACLE_N_QUBIT if p.ancilla_dim == 2 else ORACLE_N_QUTRIT  # noqa: PLR2004
    tolerance = ORACLE_TOLERANCE if tolerance is None else tolerance
    _check_inputs(n, tolerance)

    try:
        deviation = compare_with_calculus(p, n, amps)
    except TooLargeError as ex:
        raise flag_error("n", ex) from ex
    title = f"Oracle check, {p.kind} n={n}"
    return _report(title, [("entropies", deviation, tolerance)])


def lindblad_check(  # noqa: PLR0913
    *,
    model: OPTION_MODEL = "base",
    omega: OPTION_OMEGA = CONTINUUM_OMEGA,
    tau: OPTION_TAU = 0.05,
    rabi: OPTION_RABI = None,
    n: OPTION_OPTIONAL_N = None,
    tolerance: OPTION_TOLERANCE = None,
) -> int:
    """
    Compare collisional coherence decay with its continuum dephasing limit.

    Also checks the RK4 integration of the dephasing equation against its exact
    solution at t = n tau. Exits 1 when either deviation is out of tolerance.
    """

    if model == ModelKind.ANTI_ZENO:
        raise flag_error("model", ERROR_NO_CONTINUUM)
    p = build_params(model, omega, tau, rabi, None)
    n = CONTINUUM_N if n is None else n
    tolerance = CONTINUUM_TOLERANCE if tolerance is None else tolerance
    _check_inputs(n, tolerance)

    gap = continuum_consistency(p, n)
    amps = SystemAmplitudes.uniform()
    rho0 = QubitDensity.from_amplitudes(amps.alpha, amps.beta)
    gamma = dephasing_rate(p)
    t = n * p.tau
    exact = evolve_dephasing(rho0, gamma, t)
    stepped = integrate_dephasing(rho0, gamma, t)
    integrator = abs(stepped.coherence - exact.coherence)

    return _report(
        f"Continuum check, {p.kind} omega*tau={format_float(p.omega_tau)} n={n}",
        [
            ("collisions vs continuum", gap, tolerance),
            ("RK4 vs exact", integrator, INTEGRATOR_TOLERANCE),
        ],
    )

"""Built-in initial states, the figure scenario registry, and sweeps."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .hamiltonian import PulseParams, SystemParams
from .lindblad import DecoherenceRates, SimulationConfig, evolve
from .measures import CorrelationSample, measure_trajectory

BELL = "bell"
SEPARABLE = "separable"

# Shared by every figure scenario: pulse centered at half the horizon.
DEFAULT_T0 = 15.0
DEFAULT_T_MAX = 30.0
DEFAULT_DT = 1e-3
DEFAULT_STRIDE = 10
DEFAULT_BETA = 1.0

_SWEEP_AXES = (
    "epsilon",
    "epsilon0",
    "epsilon1",
    "j_zz",
    "j_xx",
    "a_pulse",
    "beta_pulse",
    "t0",
    "gamma_amp",
    "gamma_deph",
    "g_pulse",
)


@dataclass(frozen=True, eq=False)
class InitialState:
    kind: str
    matrix: np.ndarray


@dataclass(frozen=True)
class FigureScenario:
    """A fully specified parameter set for one figure row."""

    name: str
    system: SystemParams
    pulse: PulseParams
    rates: DecoherenceRates
    sim: SimulationConfig


@dataclass(frozen=True)
class SweepSpec:
    """One-axis parameter sweep over a base scenario."""

    base: FigureScenario
    axis: str
    values: tuple[float, ...]


def bell_state() -> InitialState:
    """Maximally entangled |Phi+><Phi+| with |Phi+> = (|00> + |11>) / sqrt(2)."""
    rho = np.zeros((4, 4), dtype=complex)
    for i in (0, 3):
        for j in (0, 3):
            rho[i, j] = 0.5
    return InitialState(kind=BELL, matrix=rho)


def separable_state() -> InitialState:
    """Product ground state |00><00|."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0
    return InitialState(kind=SEPARABLE, matrix=rho)


def initial_states() -> tuple[InitialState, InitialState]:
    return bell_state(), separable_state()


def _scenario(
    name: str,
    epsilon: float = 0.1,
    j_zz: float = 0.5,
    j_xx: float = 0.5,
    a_pulse: float = 1.0,
    beta_pulse: float = DEFAULT_BETA,
    gamma_amp: float = 0.01,
    gamma_deph: float = 0.01,
    g_pulse: float = 0.01,
) -> FigureScenario:
    return FigureScenario(
        name=name,
        system=SystemParams(epsilon0=epsilon, epsilon1=epsilon, j_zz=j_zz, j_xx=j_xx),
        pulse=PulseParams(a_pulse=a_pulse, beta_pulse=beta_pulse, t0=DEFAULT_T0),
        rates=DecoherenceRates(gamma_amp=gamma_amp, gamma_deph=gamma_deph, g_pulse=g_pulse),
        sim=SimulationConfig(t_max=DEFAULT_T_MAX, dt=DEFAULT_DT, sample_stride=DEFAULT_STRIDE),
    )


def builtin_scenarios() -> list[FigureScenario]:
    """The sixteen built-in parameter sets: eight studies, two regimes each.

    Each figN pair varies one knob (splitting, a coupling, a rate, or a pulse
    parameter) against shared defaults (gamma_amp = gamma_deph = G = 0.01,
    A = 1.0, beta = 1.0, pulse centered at t = 15 on a 30-unit horizon).
    """
    return [
        _scenario("fig1_top", epsilon=0.01, j_zz=0.5, j_xx=0.5),
        _scenario("fig1_bottom", epsilon=5.0, j_zz=0.5, j_xx=0.5),
        _scenario("fig2_top", j_zz=0.01, j_xx=1.0),
        _scenario("fig2_bottom", j_zz=5.0, j_xx=1.0),
        _scenario("fig3_top", j_zz=1.0, j_xx=0.1),
        _scenario("fig3_bottom", j_zz=1.0, j_xx=1.0),
        _scenario("fig4_top", j_zz=1.0, j_xx=1.0),
        _scenario("fig4_bottom", j_zz=1.0, j_xx=1.0, gamma_amp=0.1),
        _scenario("fig5_top", j_zz=1.0, j_xx=1.0),
        _scenario("fig5_bottom", j_zz=1.0, j_xx=1.0, gamma_deph=0.1),
        _scenario("fig6_top", j_zz=0.5, j_xx=0.5, a_pulse=0.01),
        _scenario("fig6_bottom", j_zz=0.5, j_xx=0.5, a_pulse=10.0),
        _scenario("fig7_top", j_zz=0.5, j_xx=0.5, a_pulse=5.0, beta_pulse=0.1),
        _scenario("fig7_bottom", j_zz=0.5, j_xx=0.5, a_pulse=5.0, beta_pulse=5.0),
        _scenario("fig8_top", j_zz=1.0, j_xx=1.0),
        _scenario("fig8_bottom", j_zz=1.0, j_xx=1.0, g_pulse=5.0),
    ]


def scenario_registry() -> dict[str, FigureScenario]:
    return {s.name: s for s in builtin_scenarios()}


def run_scenario(
    s: FigureScenario, include_exact: bool = True
) -> dict[str, list[CorrelationSample]]:
    """Evolve and measure both initial states; deterministic for a fixed config."""
    results = {}
    for initial in initial_states():
        traj = evolve(initial.matrix, s.system, s.pulse, s.rates, s.sim)
        results[initial.kind] = measure_trajectory(traj, include_exact=include_exact)
    return results


def expand_sweep(spec: SweepSpec) -> list[FigureScenario]:
    """One scenario per sweep value, named with the axis and value appended."""
    if spec.axis not in _SWEEP_AXES:
        raise ValueError(f"unknown sweep axis {spec.axis!r}; valid axes: {', '.join(_SWEEP_AXES)}")
    out = []
    for value in spec.values:
        base = spec.base
        if spec.axis == "epsilon":
            system = replace(base.system, epsilon0=value, epsilon1=value)
            scenario = replace(base, system=system)
        elif spec.axis in ("epsilon0", "epsilon1", "j_zz", "j_xx"):
            scenario = replace(base, system=replace(base.system, **{spec.axis: value}))
        elif spec.axis in ("a_pulse", "beta_pulse", "t0"):
            scenario = replace(base, pulse=replace(base.pulse, **{spec.axis: value}))
        else:
            scenario = replace(base, rates=replace(base.rates, **{spec.axis: value}))
        out.append(replace(scenario, name=f"{base.name}_{spec.axis}_{value:g}"))
    return out

"""Dissipation channels and fixed-step integration of the master equation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .hamiltonian import (
    PulseParams,
    SystemParams,
    build_drive_operator,
    build_static_hamiltonian,
    pulse_amplitude,
)
from .qmath import I2, SIGMA_MINUS, SIGMA_Z, dagger, kron

# Hard limits at which evolve aborts with the offending time.
TRACE_DRIFT_LIMIT = 1e-6
EIGENVALUE_FLOOR_LIMIT = -1e-6


@dataclass(frozen=True)
class DecoherenceRates:
    """Amplitude damping, pure dephasing, and pulse-induced dephasing strength."""

    gamma_amp: float
    gamma_deph: float
    g_pulse: float

    def __post_init__(self):
        for name in ("gamma_amp", "gamma_deph", "g_pulse"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be a finite non-negative rate")


@dataclass(frozen=True, eq=False)
class CollapseChannel:
    """A 4x4 collapse operator with a time-dependent non-negative rate."""

    operator: np.ndarray
    rate: Callable[[float], float]


@dataclass(frozen=True)
class SimulationConfig:
    """Fixed-step integration grid: horizon, step, and recording stride."""

    t_max: float
    dt: float
    sample_stride: int = 10

    def __post_init__(self):
        if self.dt <= 0.0 or self.t_max <= 0.0:
            raise ValueError("t_max and dt must be positive")
        if self.dt > self.t_max:
            raise ValueError("dt must not exceed t_max")
        if self.sample_stride < 1:
            raise ValueError("sample_stride must be a positive integer")
        steps = round(self.t_max / self.dt)
        if abs(steps * self.dt - self.t_max) > 1e-9 * max(1.0, self.t_max):
            raise ValueError("t_max must be an integer number of dt steps")

    @property
    def n_steps(self) -> int:
        return round(self.t_max / self.dt)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Recorded times and the corresponding 4x4 density matrices."""

    times: np.ndarray
    states: np.ndarray


def build_collapse_channels(r: DecoherenceRates, pulse: PulseParams) -> list[CollapseChannel]:
    """The five dissipation channels.

    Per-qubit lowering operators at rate gamma_amp, per-qubit sigma_z at rate
    gamma_deph, and the collective sigma_z^(0) + sigma_z^(1) operator whose
    rate tracks the squared pulse envelope, G * f(t)^2.
    """

    def constant(value: float) -> Callable[[float], float]:
        return lambda t: value

    def pulse_rate(t: float) -> float:
        f = pulse_amplitude(t, pulse)
        return r.g_pulse * f * f

    return [
        CollapseChannel(kron(SIGMA_MINUS, I2), constant(r.gamma_amp)),
        CollapseChannel(kron(I2, SIGMA_MINUS), constant(r.gamma_amp)),
        CollapseChannel(kron(SIGMA_Z, I2), constant(r.gamma_deph)),
        CollapseChannel(kron(I2, SIGMA_Z), constant(r.gamma_deph)),
        CollapseChannel(kron(SIGMA_Z, I2) + kron(I2, SIGMA_Z), pulse_rate),
    ]


def lindblad_rhs(
    t: float,
    rho: np.ndarray,
    h: np.ndarray,
    channels: Sequence[CollapseChannel],
) -> np.ndarray:
    """Generator of the master equation.

    -i[H, rho] + sum_j gamma_j(t) (L_j rho L_j^dag - {L_j^dag L_j, rho} / 2)
    """
    out = -1j * (h @ rho - rho @ h)
    for channel in channels:
        gamma = channel.rate(t)
        if gamma == 0.0:
            continue
        op = channel.operator
        op_dag = dagger(op)
        op_sq = op_dag @ op
        out = out + gamma * (op @ rho @ op_dag - 0.5 * (op_sq @ rho + rho @ op_sq))
    return out


def rk4_step(
    t: float,
    rho: np.ndarray,
    dt: float,
    rhs: Callable[[float, np.ndarray], np.ndarray],
) -> np.ndarray:
    """Classical RK4 update, re-symmetrized to (rho + rho^dag)/2."""
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    k1 = rhs(t, rho)
    k2 = rhs(t + 0.5 * dt, rho + 0.5 * dt * k1)
    k3 = rhs(t + 0.5 * dt, rho + 0.5 * dt * k2)
    k4 = rhs(t + dt, rho + dt * k3)
    out = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return 0.5 * (out + out.conj().T)


def _check_initial_state(rho0: np.ndarray) -> np.ndarray:
    rho0 = np.asarray(rho0, dtype=complex)
    if rho0.shape != (4, 4):
        raise ValueError(f"initial state must be 4x4, got shape {rho0.shape}")
    if abs(np.trace(rho0) - 1.0) > 1e-9:
        raise ValueError("initial state must have unit trace")
    if float(np.max(np.abs(rho0 - rho0.conj().T))) > 1e-9:
        raise ValueError("initial state must be Hermitian")
    return rho0


def _generator_matrix(h: np.ndarray, channels: Sequence[CollapseChannel]) -> np.ndarray:
    """16x16 matrix of the generator, columns from lindblad_rhs on matrix units."""
    gen = np.empty((16, 16), dtype=complex)
    for i in range(4):
        for j in range(4):
            unit = np.zeros((4, 4), dtype=complex)
            unit[i, j] = 1.0
            gen[:, 4 * i + j] = lindblad_rhs(0.0, unit, h, channels).reshape(16)
    return gen


def _generator_pieces(
    params: SystemParams, rates: DecoherenceRates
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split the generator into pulse-independent, f(t), and f(t)^2 pieces.

    The full generator at time t is L0 + f(t)*LD + G*f(t)^2*LG, exact because
    the master equation is linear in the Hamiltonian and in each rate.
    """
    h0 = build_static_hamiltonian(params)
    h_drive = build_drive_operator()
    zero = np.zeros((4, 4), dtype=complex)
    # Constant-rate channels keep their rates; the collective channel enters
    # at unit rate and is scaled by G*f(t)^2 when the generator is assembled.
    dummy_pulse = PulseParams(a_pulse=0.0, beta_pulse=1.0, t0=0.0)
    channels = build_collapse_channels(rates, dummy_pulse)
    collective = CollapseChannel(channels[4].operator, lambda t: 1.0)
    gen_static = _generator_matrix(h0, channels[:4])
    gen_drive = _generator_matrix(h_drive, [])
    gen_pulse = _generator_matrix(zero, [collective])
    return gen_static, gen_drive, gen_pulse


def _verify_trajectory(times: np.ndarray, states: np.ndarray) -> None:
    traces = np.einsum("nii->n", states)
    drift = np.abs(traces - 1.0)
    worst = int(np.argmax(drift))
    if drift[worst] > TRACE_DRIFT_LIMIT:
        raise RuntimeError(f"trace drift {drift[worst]:.3e} at t={times[worst]:.6f}")
    min_eigs = np.linalg.eigvalsh(states).min(axis=1)
    worst = int(np.argmin(min_eigs))
    if min_eigs[worst] < EIGENVALUE_FLOOR_LIMIT:
        raise RuntimeError(
            f"negative eigenvalue {min_eigs[worst]:.3e} at t={times[worst]:.6f}"
        )


def evolve(
    rho0: np.ndarray,
    params: SystemParams,
    pulse: PulseParams,
    rates: DecoherenceRates,
    cfg: SimulationConfig,
) -> Trajectory:
    """Integrate the master equation with fixed-step RK4 from t=0 to t_max.

    The pulse rate and Hamiltonian are re-evaluated at every internal RK4
    stage time.  Every sample_stride-th state is recorded (plus t=0), each
    re-symmetrized; trace drift beyond 1e-6 or an eigenvalue below -1e-6
    aborts with the offending time.
    """
    rho0 = _check_initial_state(rho0)
    gen_static, gen_drive, gen_pulse = _generator_pieces(params, rates)

    drive_off = pulse.a_pulse == 0.0
    g = rates.g_pulse

    def assemble(t: float) -> np.ndarray:
        f = pulse_amplitude(t, pulse)
        return gen_static + f * gen_drive + (g * f * f) * gen_pulse

    dt = cfg.dt
    n_steps = cfg.n_steps
    stride = cfg.sample_stride

    recorded_times = [0.0]
    recorded_states = [0.5 * (rho0 + rho0.conj().T)]

    v = rho0.reshape(16).astype(complex)
    gen_now = gen_static if drive_off else assemble(0.0)
    for step in range(n_steps):
        t = step * dt
        if drive_off:
            gen_mid = gen_end = gen_now
        else:
            gen_mid = assemble(t + 0.5 * dt)
            gen_end = assemble(t + dt)
        k1 = gen_now @ v
        k2 = gen_mid @ (v + (0.5 * dt) * k1)
        k3 = gen_mid @ (v + (0.5 * dt) * k2)
        k4 = gen_end @ (v + dt * k3)
        v = v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        m = v.reshape(4, 4)
        m = 0.5 * (m + m.conj().T)
        v = m.reshape(16)
        gen_now = gen_end
        if (step + 1) % stride == 0:
            recorded_times.append((step + 1) * dt)
            recorded_states.append(m.copy())

    times = np.array(recorded_times)
    states = np.array(recorded_states)
    _verify_trajectory(times, states)
    return Trajectory(times=times, states=states)


def _expm(m: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring with a Taylor series."""
    norm = float(np.linalg.norm(m, 1))
    squarings = 0
    if norm > 0.25:
        squarings = max(0, int(math.ceil(math.log2(norm / 0.25))))
    b = m / (2.0 ** squarings)
    result = np.eye(m.shape[0], dtype=complex) + b
    term = b
    for k in range(2, 40):
        term = term @ b / k
        result = result + term
        if float(np.max(np.abs(term))) < 1e-18:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def liouvillian_exponential_oracle(
    rho0: np.ndarray,
    params: SystemParams,
    pulse: PulseParams,
    rates: DecoherenceRates,
    cfg: SimulationConfig,
    substeps: int = 10,
) -> Trajectory:
    """Propagate vec(rho) by exponentials of a piecewise-constant Liouvillian.

    Independent verification route for evolve: the 16x16 superoperator is
    assembled from Kronecker identities (row-major vec convention) and frozen
    at the midpoint of each fine step of width dt/substeps.  Test-only.
    """
    if substeps < 10:
        raise ValueError("oracle requires substeps >= 10 (fine_dt <= dt/10)")
    rho0 = _check_initial_state(rho0)

    eye = np.eye(4, dtype=complex)

    def ham_super(h: np.ndarray) -> np.ndarray:
        return -1j * (np.kron(h, eye) - np.kron(eye, h.T))

    def dissipator_super(op: np.ndarray) -> np.ndarray:
        op_sq = op.conj().T @ op
        return np.kron(op, op.conj()) - 0.5 * (
            np.kron(op_sq, eye) + np.kron(eye, op_sq.T)
        )

    sm0 = np.kron(SIGMA_MINUS, I2)
    sm1 = np.kron(I2, SIGMA_MINUS)
    sz0 = np.kron(SIGMA_Z, I2)
    sz1 = np.kron(I2, SIGMA_Z)
    base = (
        ham_super(build_static_hamiltonian(params))
        + rates.gamma_amp * (dissipator_super(sm0) + dissipator_super(sm1))
        + rates.gamma_deph * (dissipator_super(sz0) + dissipator_super(sz1))
    )
    drive = ham_super(build_drive_operator())
    collective = dissipator_super(sz0 + sz1)

    fine_dt = cfg.dt / substeps
    stride_fine = cfg.sample_stride * substeps
    n_fine = cfg.n_steps * substeps
    # without a drive the generator is constant, so one propagator serves all steps
    frozen_step = _expm(base * fine_dt) if pulse.a_pulse == 0.0 else None

    recorded_times = [0.0]
    recorded_states = [rho0.copy()]
    v = rho0.reshape(16).astype(complex)
    for step in range(n_fine):
        if frozen_step is not None:
            v = frozen_step @ v
        else:
            t_mid = (step + 0.5) * fine_dt
            f = pulse_amplitude(t_mid, pulse)
            gen = base + f * drive + (rates.g_pulse * f * f) * collective
            v = _expm(gen * fine_dt) @ v
        if (step + 1) % stride_fine == 0:
            recorded_times.append((step + 1) * fine_dt)
            recorded_states.append(v.reshape(4, 4).copy())

    return Trajectory(times=np.array(recorded_times), states=np.array(recorded_states))

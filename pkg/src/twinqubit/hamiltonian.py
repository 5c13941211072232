"""Static Hamiltonian, drive operator, and the sech pulse envelope.

Units are dimensionless with hbar = 1 throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmath import I2, SIGMA_X, SIGMA_Y, SIGMA_Z, kron

# cosh overflows around 710; beyond this the envelope is exactly 0 in doubles
_SECH_ARG_LIMIT = 700.0


@dataclass(frozen=True)
class SystemParams:
    """Energy splittings and inter-qubit couplings."""

    epsilon0: float
    epsilon1: float
    j_zz: float
    j_xx: float

    def __post_init__(self):
        for name in ("epsilon0", "epsilon1", "j_zz", "j_xx"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class PulseParams:
    """Sech-envelope drive: peak amplitude, inverse width, center time."""

    a_pulse: float
    beta_pulse: float
    t0: float

    def __post_init__(self):
        if not (math.isfinite(self.a_pulse) and math.isfinite(self.beta_pulse) and math.isfinite(self.t0)):
            raise ValueError("pulse parameters must be finite")
        if self.beta_pulse <= 0.0:
            raise ValueError("beta_pulse must be positive")


def build_static_hamiltonian(p: SystemParams) -> np.ndarray:
    """H0 = (eps0/2) sz x I + (eps1/2) I x sz + Jzz sz x sz + Jxx sx x sx."""
    return (
        0.5 * p.epsilon0 * kron(SIGMA_Z, I2)
        + 0.5 * p.epsilon1 * kron(I2, SIGMA_Z)
        + p.j_zz * kron(SIGMA_Z, SIGMA_Z)
        + p.j_xx * kron(SIGMA_X, SIGMA_X)
    )


def build_drive_operator() -> np.ndarray:
    """Coherent drive operator (sx + sy) acting on each qubit."""
    local = SIGMA_X + SIGMA_Y
    return kron(local, I2) + kron(I2, local)


def pulse_amplitude(t: float, p: PulseParams) -> float:
    """Sech envelope A / cosh(beta (t - t0)), symmetric about t0."""
    arg = p.beta_pulse * (t - p.t0)
    if abs(arg) > _SECH_ARG_LIMIT:
        return 0.0
    return p.a_pulse / math.cosh(arg)


def total_hamiltonian(t: float, p: SystemParams, pulse: PulseParams) -> np.ndarray:
    """H(t) = H0 + f(t) * drive operator."""
    h = build_static_hamiltonian(p)
    f = pulse_amplitude(t, pulse)
    if f != 0.0:
        h = h + f * build_drive_operator()
    return h

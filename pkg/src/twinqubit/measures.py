"""Correlation measures: negativity, geometric discord, and QM-EUR."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lindblad import Trajectory
from .qmath import (
    I2,
    I4,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    hermitian_eigs,
    kron,
    partial_trace,
    partial_transpose,
    trace_norm,
    von_neumann_entropy,
)

BERTA_SLACK = 1e-9

_PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)
_PAULI_A = tuple(kron(s, I2) for s in _PAULIS)
_PAULI_B = tuple(kron(I2, s) for s in _PAULIS)
_PAULI_AB = tuple(tuple(kron(si, sj) for sj in _PAULIS) for si in _PAULIS)

# +/-1 projectors of sigma_x and sigma_z on qubit A, padded to two qubits.
_MEASUREMENT_PROJECTORS = {
    "X": tuple(kron(0.5 * (I2 + sign * SIGMA_X), I2) for sign in (+1.0, -1.0)),
    "Z": tuple(kron(0.5 * (I2 + sign * SIGMA_Z), I2) for sign in (+1.0, -1.0)),
}


def _pauli_expectation(rho: np.ndarray, op: np.ndarray) -> float:
    value = complex(np.sum(rho * op.T))  # Tr(rho @ op)
    if abs(value.imag) > 1e-10:
        raise ValueError(f"Pauli expectation has imaginary residue {value.imag:.3e}")
    return value.real


@dataclass(frozen=True, eq=False)
class BlochDecomposition:
    """Local Bloch vectors and the 3x3 correlation matrix of a two-qubit state."""

    x: np.ndarray
    y: np.ndarray
    t_matrix: np.ndarray


@dataclass(frozen=True)
class CorrelationSample:
    """All derived quantities at one trajectory time."""

    t: float
    ng: float
    qd: float
    u_exact: float
    u_approx: float
    purity: float
    trace_error: float


def negativity(rho: np.ndarray) -> float:
    """Entanglement negativity (||rho^T_A||_1 - 1) / 2, in [0, 0.5]."""
    return 0.5 * (trace_norm(partial_transpose(rho, "A")) - 1.0)


def bloch_decompose(rho: np.ndarray) -> BlochDecomposition:
    """Pauli expansion: x_i = Tr[rho si x I], y_j = Tr[rho I x sj], T_ij = Tr[rho si x sj]."""
    x = np.array([_pauli_expectation(rho, op) for op in _PAULI_A])
    y = np.array([_pauli_expectation(rho, op) for op in _PAULI_B])
    t_matrix = np.array(
        [[_pauli_expectation(rho, _PAULI_AB[i][j]) for j in range(3)] for i in range(3)]
    )
    return BlochDecomposition(x=x, y=y, t_matrix=t_matrix)


def bloch_reconstruct(d: BlochDecomposition) -> np.ndarray:
    """Rebuild the density matrix from its Bloch decomposition."""
    rho = I4.copy()
    for i in range(3):
        rho += d.x[i] * _PAULI_A[i] + d.y[i] * _PAULI_B[i]
        for j in range(3):
            rho += d.t_matrix[i, j] * _PAULI_AB[i][j]
    return 0.25 * rho


def geometric_discord(rho: np.ndarray) -> float:
    """Geometric discord (Tr K - lambda_max(K)) / 4 with K = x x^T + T T^T.

    Measurement side is qubit A, so the correlation matrix contracts over its
    B index; this vanishes on every state that is classical on A.
    """
    d = bloch_decompose(rho)
    k = np.outer(d.x, d.x) + d.t_matrix @ d.t_matrix.T
    lam = hermitian_eigs(k.astype(complex)).eigenvalues
    return 0.25 * float(np.trace(k).real - lam[-1])


def conditional_entropy_after_measurement(rho: np.ndarray, axis: str) -> float:
    """S(Q_A|B) after a projective Pauli measurement (X or Z) on qubit A.

    Standard quantum-memory form: S(rho_QB) - S(rho_B) with
    rho_QB = sum_k (Pi_k x I) rho (Pi_k x I); clamped to >= 0.
    """
    if axis not in _MEASUREMENT_PROJECTORS:
        raise ValueError(f"axis must be 'X' or 'Z', got {axis!r}")
    measured = np.zeros((4, 4), dtype=complex)
    for proj in _MEASUREMENT_PROJECTORS[axis]:
        measured += proj @ rho @ proj
    value = von_neumann_entropy(measured) - von_neumann_entropy(partial_trace(rho, "B"))
    return max(0.0, value)


def berta_bound(rho: np.ndarray) -> float:
    """Lower bound log2(1/c) + S(A|B) with c = 1/2 for sigma_x vs sigma_z."""
    return 1.0 + von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, "B"))


def qm_eur_exact(rho: np.ndarray) -> float:
    """Entropic uncertainty S(X_A|B) + S(Z_A|B) in bits.

    Also evaluates the lower bound 1 + S(A|B); a violation beyond 1e-9
    indicates a numerical or construction bug and raises.
    """
    total = conditional_entropy_after_measurement(rho, "X") + conditional_entropy_after_measurement(rho, "Z")
    bound = berta_bound(rho)
    if total < bound - BERTA_SLACK:
        raise RuntimeError(f"uncertainty {total} violates lower bound {bound}")
    return total


def qm_eur_approx(rho: np.ndarray) -> float:
    """Negativity-based linear stand-in 2 (1 - 2 N(rho)), in [0, 2]."""
    return 2.0 * (1.0 - 2.0 * negativity(rho))


def measure_trajectory(traj: Trajectory, include_exact: bool = True) -> list[CorrelationSample]:
    """One CorrelationSample per recorded state.

    include_exact=False skips the entropic Eq-form column (u_exact becomes
    NaN); everything else is always computed.
    """
    samples = []
    for t, rho in zip(traj.times, traj.states):
        try:
            ng = negativity(rho)
            samples.append(
                CorrelationSample(
                    t=float(t),
                    ng=ng,
                    qd=geometric_discord(rho),
                    u_exact=qm_eur_exact(rho) if include_exact else math.nan,
                    u_approx=2.0 * (1.0 - 2.0 * ng),
                    purity=float(np.real(np.sum(rho * rho.T))),
                    trace_error=abs(complex(np.trace(rho)) - 1.0),
                )
            )
        except (ValueError, RuntimeError) as exc:
            raise RuntimeError(f"measurement failed at t={float(t):.6f}: {exc}") from exc
    return samples

"""Dense complex linear algebra for 2x2 and 4x4 qubit operators.

Matrices are plain numpy arrays (complex dtype, row-major).  The two-qubit
basis is ordered |00>, |01>, |10>, |11> with qubit 0 as the left Kronecker
factor (most significant index).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_MINUS = np.array([[0, 1], [0, 0]], dtype=complex)  # |0><1|
SIGMA_PLUS = np.array([[0, 0], [1, 0]], dtype=complex)   # |1><0|

HERMITICITY_TOL = 1e-10
ENTROPY_EIGENVALUE_FLOOR = -1e-9

_JACOBI_OFFDIAG_TOL = 1e-14
_JACOBI_MAX_SWEEPS = 60


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with qubit 0 as the left factor."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def partial_transpose(rho: np.ndarray, subsystem: str) -> np.ndarray:
    """Transpose the indices of one qubit of a 4x4 operator.

    subsystem is "A" (qubit 0) or "B" (qubit 1).
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"partial_transpose requires a 4x4 matrix, got shape {rho.shape}")
    r = rho.reshape(2, 2, 2, 2)
    if subsystem == "A":
        out = r.transpose(2, 1, 0, 3)
    elif subsystem == "B":
        out = r.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return out.reshape(4, 4)


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Reduced 2x2 density matrix of one qubit of a 4x4 state."""
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"partial_trace requires a 4x4 matrix, got shape {rho.shape}")
    r = rho.reshape(2, 2, 2, 2)
    if keep == "A":
        return np.trace(r, axis1=1, axis2=3)
    if keep == "B":
        return np.trace(r, axis1=0, axis2=2)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


@dataclass(frozen=True, eq=False)
class HermitianEigen:
    """Eigenvalues (real, ascending) and orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eigs(m: np.ndarray) -> HermitianEigen:
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Deterministic and dependency-free; intended for dimensions <= 4.
    Raises ValueError if the input is not Hermitian within 1e-10.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if float(np.max(np.abs(m - m.conj().T))) > HERMITICITY_TOL:
        raise ValueError("matrix is not Hermitian within 1e-10")

    # Work on python lists: faster than numpy scalar indexing at this size.
    a = (0.5 * (m + m.conj().T)).tolist()
    v = [[1.0 + 0.0j if i == j else 0.0j for j in range(n)] for i in range(n)]

    for _ in range(_JACOBI_MAX_SWEEPS):
        off = max((abs(a[i][j]) for i in range(n) for j in range(i + 1, n)), default=0.0)
        if off < _JACOBI_OFFDIAG_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                phase = apq / mag
                theta = 0.5 * math.atan2(2.0 * mag, a[p][p].real - a[q][q].real)
                c = math.cos(theta)
                s = math.sin(theta)
                sp = s * phase                 # s * e^{i phi}
                spc = s * phase.conjugate()    # s * e^{-i phi}
                for i in range(n):
                    aip, aiq = a[i][p], a[i][q]
                    a[i][p] = c * aip + spc * aiq
                    a[i][q] = -sp * aip + c * aiq
                for j in range(n):
                    apj, aqj = a[p][j], a[q][j]
                    a[p][j] = c * apj + sp * aqj
                    a[q][j] = -spc * apj + c * aqj
                a[p][q] = 0.0j
                a[q][p] = 0.0j
                for i in range(n):
                    vip, viq = v[i][p], v[i][q]
                    v[i][p] = c * vip + spc * viq
                    v[i][q] = -sp * vip + c * viq
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")

    lam = np.array([a[i][i].real for i in range(n)])
    vecs = np.array(v, dtype=complex)
    order = np.argsort(lam, kind="stable")
    return HermitianEigen(eigenvalues=lam[order], eigenvectors=vecs[:, order])


def trace_norm(m: np.ndarray) -> float:
    """Trace norm ||m||_1 = Tr sqrt(m^dag m).

    Hermitian inputs use the sum of eigenvalue magnitudes; general square
    inputs fall back to the singular values via m^dag m.
    """
    m = np.asarray(m, dtype=complex)
    if float(np.max(np.abs(m - m.conj().T))) <= HERMITICITY_TOL:
        return float(np.sum(np.abs(hermitian_eigs(m).eigenvalues)))
    gram = m.conj().T @ m
    lam = hermitian_eigs(gram).eigenvalues
    return float(np.sum(np.sqrt(np.clip(lam, 0.0, None))))


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy -Tr(rho log2 rho) in bits, with 0*log(0) = 0.

    Eigenvalues in [-1e-9, 0) are treated as round-off and clamped to zero;
    anything below -1e-9 raises.
    """
    lam = hermitian_eigs(rho).eigenvalues
    entropy = 0.0
    for value in lam:
        if value < ENTROPY_EIGENVALUE_FLOOR:
            raise ValueError(f"eigenvalue {value} below {ENTROPY_EIGENVALUE_FLOOR}: not a density matrix")
        value = min(max(value, 0.0), 1.0)
        if value > 0.0:
            entropy -= value * math.log2(value)
    return entropy

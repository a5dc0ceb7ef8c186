"""Named unitary constructors used by the concentration circuits."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .statevec import BELL_LABELS, NORM_TOL, EXACT_TOL, InvariantError, PureState, bell_vector

_SQ2 = 1.0 / np.sqrt(2.0)

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    # iY exposed as a single named gate: det = +1, no extra phase bookkeeping.
    "iY": np.array([[0, 1], [-1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQ2,
}

_TWO_QUBIT = {
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "SWAP": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}


@dataclass(frozen=True, eq=False)
class Unitary:
    """Small complex square matrix with a construction-time unitarity check."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.shape not in ((2, 2), (4, 4)):
            raise ValueError("only 2x2 and 4x4 unitaries are supported")
        if np.linalg.norm(m.conj().T @ m - np.eye(m.shape[0])) > NORM_TOL:
            raise InvariantError("matrix is not unitary")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def u1(alpha: complex, beta: complex) -> Unitary:
    """Single-qubit gate mapping |0> -> alpha|0> + beta|1>; alpha, beta complex."""
    alpha, beta = complex(alpha), complex(beta)
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > NORM_TOL:
        raise InvariantError("(alpha, beta) is not normalized")
    return Unitary(
        np.array([[alpha, -np.conj(beta)], [beta, np.conj(alpha)]], dtype=complex)
    )


def u2(alpha: float, beta: float) -> Unitary:
    """Real rotation with rows (alpha, beta), (-beta, alpha).

    Maps |0> -> alpha|0> - beta|1> and |1> -> beta|0> + alpha|1>.  Complex
    inputs are rejected: this gate belongs to the real-parameter protocol.
    """
    if abs(complex(alpha).imag) > EXACT_TOL or abs(complex(beta).imag) > EXACT_TOL:
        raise InvariantError("u2 requires real alpha, beta")
    alpha, beta = float(complex(alpha).real), float(complex(beta).real)
    if abs(alpha ** 2 + beta ** 2 - 1.0) > NORM_TOL:
        raise InvariantError("(alpha, beta) is not normalized")
    return Unitary(np.array([[alpha, beta], [-beta, alpha]], dtype=complex))


def pauli(name: str) -> Unitary:
    """One of I, X, iY, Z, H."""
    if name not in _PAULI:
        raise ValueError(f"unknown gate {name!r}")
    return Unitary(_PAULI[name])


def two_qubit(name: str) -> Unitary:
    """One of CNOT, SWAP (control / first qubit = more significant bit)."""
    if name not in _TWO_QUBIT:
        raise ValueError(f"unknown gate {name!r}")
    return Unitary(_TWO_QUBIT[name])


def bell_ket(label: str) -> PureState:
    """The Bell state named by one of psi+, psi-, phi+, phi-."""
    if label not in BELL_LABELS:
        raise ValueError(f"unknown Bell label {label!r}")
    return PureState(2, bell_vector(label))

"""Dense pure-state register and the primitive circuit operations.

Indexing convention: qubit 1 is the leftmost ket factor and the most
significant bit of the amplitude index, so the amplitude of |q1 q2 ... qn>
sits at index int("q1q2...qn", 2).  All operations are pure functions that
return new immutable values.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Construction-time tolerance for norms / unitarity / orthogonality.
NORM_TOL = 1e-10
# Tolerance for exact-algebra comparisons (amplitude-wise equality).
EXACT_TOL = 1e-12
# Measurement branches below this probability are dropped.
BRANCH_TOL = 1e-12

BELL_LABELS = ("psi+", "psi-", "phi+", "phi-")

_SQ2 = 1.0 / np.sqrt(2.0)
# psi± = (|00> ± |11>)/sqrt(2), phi± = (|01> ± |10>)/sqrt(2)
_BELL_VECTORS = {
    "psi+": np.array([_SQ2, 0.0, 0.0, _SQ2], dtype=complex),
    "psi-": np.array([_SQ2, 0.0, 0.0, -_SQ2], dtype=complex),
    "phi+": np.array([0.0, _SQ2, _SQ2, 0.0], dtype=complex),
    "phi-": np.array([0.0, _SQ2, -_SQ2, 0.0], dtype=complex),
}


class InvariantError(ValueError):
    """A numeric invariant (normalization, unitarity, orthogonality) failed."""


def bell_vector(label: str) -> np.ndarray:
    """Amplitude vector of the named Bell state, ordered |00>,|01>,|10>,|11>."""
    if label not in _BELL_VECTORS:
        raise ValueError(f"unknown Bell label {label!r}")
    return _BELL_VECTORS[label].copy()


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized complex amplitude vector over ``n_qubits`` qubits."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != 2 ** self.n_qubits:
            raise ValueError(
                f"amplitude vector of length {amps.size} does not match "
                f"{self.n_qubits} qubits"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise InvariantError(f"state norm {norm!r} deviates from 1")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def amplitude(self, bits: str) -> complex:
        """Amplitude of the computational basis ket |bits>."""
        if len(bits) != self.n_qubits:
            raise ValueError("bitstring length mismatch")
        return complex(self.amplitudes[int(bits, 2)])


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix over qubits."""

    n_qubits: int
    entries: np.ndarray

    def __post_init__(self):
        d = 2 ** self.n_qubits
        m = np.asarray(self.entries, dtype=complex)
        if m.shape != (d, d):
            raise ValueError("density matrix dimension mismatch")
        if np.linalg.norm(m - m.conj().T) > NORM_TOL:
            raise InvariantError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > NORM_TOL:
            raise InvariantError("density matrix trace deviates from 1")
        if np.linalg.eigvalsh(m).min() < -NORM_TOL:
            raise InvariantError("density matrix has negative eigenvalue")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)


@dataclass(frozen=True)
class MeasurementBranch:
    """One measurement outcome with its Born probability and post-state.

    ``post_state`` is None when the measurement consumed the whole register.
    """

    outcome: object  # int for computational outcomes, str for Bell labels
    probability: float
    post_state: PureState | None


def _tensor_view(state: PureState) -> np.ndarray:
    return state.amplitudes.reshape([2] * state.n_qubits)


def _check_index(q: int, n: int) -> None:
    if not 1 <= q <= n:
        raise ValueError(f"qubit index {q} out of range 1..{n}")


def _matrix_of(u, dim: int) -> np.ndarray:
    m = np.asarray(getattr(u, "entries", u), dtype=complex)
    if m.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got shape {m.shape}")
    if np.linalg.norm(m.conj().T @ m - np.eye(dim)) > NORM_TOL:
        raise InvariantError("matrix is not unitary")
    return m


def basis_state(n: int, index) -> PureState:
    """Computational basis state |index> on ``n`` qubits.

    ``index`` is either a bitstring of length exactly ``n`` or an integer
    in [0, 2**n).
    """
    if isinstance(index, str):
        if not index or set(index) - {"0", "1"}:
            raise ValueError(f"malformed bitstring {index!r}")
        if len(index) != n:
            raise ValueError(f"index {index!r} out of range for {n} qubits")
        idx = int(index, 2)
    else:
        idx = int(index)
    if not 0 <= idx < 2 ** n:
        raise ValueError(f"index {index!r} out of range for {n} qubits")
    amps = np.zeros(2 ** n, dtype=complex)
    amps[idx] = 1.0
    return PureState(n, amps)


def tensor(a: PureState, b: PureState) -> PureState:
    """Tensor product a ⊗ b; b's qubits are appended after a's."""
    return PureState(a.n_qubits + b.n_qubits, np.kron(a.amplitudes, b.amplitudes))


def apply_1q(state: PureState, u, target: int) -> PureState:
    """Apply a 2x2 unitary to the target qubit (identity elsewhere)."""
    _check_index(target, state.n_qubits)
    m = _matrix_of(u, 2)
    t = np.tensordot(m, _tensor_view(state), axes=([1], [target - 1]))
    t = np.moveaxis(t, 0, target - 1)
    return PureState(state.n_qubits, t.reshape(-1))


def apply_cnot(state: PureState, control: int, target: int) -> PureState:
    """Flip the target bit on amplitudes where the control bit is 1."""
    n = state.n_qubits
    _check_index(control, n)
    _check_index(target, n)
    if control == target:
        raise ValueError("control and target must differ")
    t = np.moveaxis(_tensor_view(state), (control - 1, target - 1), (0, 1)).copy()
    t[1, 0], t[1, 1] = t[1, 1].copy(), t[1, 0].copy()
    t = np.moveaxis(t, (0, 1), (control - 1, target - 1))
    return PureState(n, t.reshape(-1))


def permute_qubits(state: PureState, perm) -> PureState:
    """Reorder the register so output position k holds input qubit perm[k].

    ``perm`` is a 1-based sequence; e.g. (1, 5, 2, 3, 4) sends |abcde> to
    |aebcd|>.
    """
    n = state.n_qubits
    perm = list(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    t = np.transpose(_tensor_view(state), [p - 1 for p in perm])
    return PureState(n, t.reshape(-1))


def measure_computational(state: PureState, target: int) -> list[MeasurementBranch]:
    """Measure one qubit in the computational basis.

    Returns branches for outcomes 0 and 1 with normalized post-states on the
    remaining qubits; zero-probability branches are omitted.
    """
    n = state.n_qubits
    _check_index(target, n)
    t = np.moveaxis(_tensor_view(state), target - 1, 0)
    branches = []
    for outcome in (0, 1):
        vec = t[outcome].reshape(-1)
        p = float(np.vdot(vec, vec).real)
        if p < BRANCH_TOL:
            continue
        post = PureState(n - 1, vec / np.sqrt(p)) if n > 1 else None
        branches.append(MeasurementBranch(outcome, p, post))
    return branches


def measure_bell(state: PureState, q1: int, q2: int) -> list[MeasurementBranch]:
    """Measure qubits (q1, q2) in the Bell basis.

    Labels follow psi± = (|00>±|11>)/sqrt(2), phi± = (|01>±|10>)/sqrt(2),
    with q1 as the first ket factor of the measured pair.  Post-states live
    on the remaining n-2 qubits in their original relative order.
    """
    n = state.n_qubits
    _check_index(q1, n)
    _check_index(q2, n)
    if q1 == q2:
        raise ValueError("Bell measurement needs two distinct qubits")
    t = np.moveaxis(_tensor_view(state), (q1 - 1, q2 - 1), (0, 1)).reshape(4, -1)
    branches = []
    for label in BELL_LABELS:
        vec = _BELL_VECTORS[label].conj() @ t
        p = float(np.vdot(vec, vec).real)
        if p < BRANCH_TOL:
            continue
        post = PureState(n - 2, vec / np.sqrt(p)) if n > 2 else None
        branches.append(MeasurementBranch(label, p, post))
    return branches


def reduced_density(state: PureState, keep) -> DensityMatrix:
    """Partial trace over the complement of ``keep`` (ascending qubit order)."""
    n = state.n_qubits
    keep = sorted(set(keep))
    if not keep or len(keep) >= n:
        raise ValueError("keep must be a nonempty proper subset of qubits")
    for q in keep:
        _check_index(q, n)
    rest = [q for q in range(1, n + 1) if q not in keep]
    t = np.transpose(_tensor_view(state), [q - 1 for q in keep + rest])
    v = t.reshape(2 ** len(keep), -1)
    return DensityMatrix(len(keep), v @ v.conj().T)


def fidelity(a: PureState, b: PureState) -> float:
    """|<a|b>|^2; insensitive to global phase."""
    if a.n_qubits != b.n_qubits:
        raise ValueError("qubit counts differ")
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)

"""Pauli-string algebra, dense realizations, and exact diagonalization.

Qubit j corresponds to character j of an axes string and to bit j of a
statevector index (little-endian: ket labels print qubit 0 rightmost).
Operators are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

import numpy as np

from . import backend

PAULI_AXES = "IXYZ"

_SIGMA = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}

COEFF_PRUNE_TOL = 1e-12
DENSE_QUBIT_CAP = 12


class PauliString:
    """A tensor product of single-qubit Pauli operators, e.g. 'IXYZ'."""

    __slots__ = ("axes", "x_mask", "z_mask", "flip_mask", "phase_mask", "n_y")

    def __init__(self, axes: str):
        if any(a not in PAULI_AXES for a in axes):
            raise ValueError(f"invalid Pauli axes string {axes!r}")
        self.axes = axes
        x = z = 0
        for j, a in enumerate(axes):
            if a in ("X", "Y"):
                x |= 1 << j
            if a in ("Z", "Y"):
                z |= 1 << j
        self.x_mask = x
        self.z_mask = z
        # |b> -> i^n_y * (-1)^popcount(b & phase_mask) |b ^ flip_mask>
        self.flip_mask = x
        self.phase_mask = z
        self.n_y = bin(x & z).count("1")

    @property
    def n_qubits(self) -> int:
        return len(self.axes)

    @property
    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def __eq__(self, other):
        return isinstance(other, PauliString) and self.axes == other.axes

    def __hash__(self):
        return hash(self.axes)

    def __repr__(self):
        return f"PauliString({self.axes!r})"


def identity_axes(n_qubits: int) -> str:
    return "I" * n_qubits


class QubitOperator:
    """Real-weighted sum of Pauli strings on a fixed number of qubits.

    Terms are held in canonical (lexicographic) order with coefficients below
    the pruning tolerance absent, so equal operators have identical
    serializations.
    """

    __slots__ = ("n_qubits", "terms", "_strings")

    def __init__(self, n_qubits: int, terms: Mapping[str, float] | None = None,
                 prune_tol: float = COEFF_PRUNE_TOL):
        self.n_qubits = int(n_qubits)
        clean: dict[str, float] = {}
        if terms:
            for axes, c in terms.items():
                if len(axes) != self.n_qubits:
                    raise ValueError(
                        f"axes {axes!r} has length {len(axes)}, expected {self.n_qubits}")
                c = float(c)
                if abs(c) >= prune_tol:
                    clean[axes] = clean.get(axes, 0.0) + c
        self.terms = {axes: clean[axes] for axes in sorted(clean)}
        self._strings = None

    @property
    def strings(self) -> list[PauliString]:
        if self._strings is None:
            self._strings = [PauliString(a) for a in self.terms]
        return self._strings

    @property
    def identity_coefficient(self) -> float:
        return self.terms.get(identity_axes(self.n_qubits), 0.0)

    def non_identity_items(self):
        ident = identity_axes(self.n_qubits)
        return [(a, c) for a, c in self.terms.items() if a != ident]

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "QubitOperator") -> "QubitOperator":
        if self.n_qubits != other.n_qubits:
            raise ValueError(
                f"qubit-count mismatch: {self.n_qubits} vs {other.n_qubits}")
        merged = dict(self.terms)
        for axes, c in other.terms.items():
            merged[axes] = merged.get(axes, 0.0) + c
        return QubitOperator(self.n_qubits, merged)

    def __sub__(self, other: "QubitOperator") -> "QubitOperator":
        return self + (other * -1.0)

    def __mul__(self, scalar: float) -> "QubitOperator":
        return QubitOperator(self.n_qubits,
                             {a: c * scalar for a, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, QubitOperator)
                and self.n_qubits == other.n_qubits
                and self.terms == other.terms)

    def __repr__(self):
        return f"QubitOperator(n_qubits={self.n_qubits}, n_terms={len(self.terms)})"

    def to_json(self) -> str:
        return json.dumps({
            "n_qubits": self.n_qubits,
            "terms": [{"axes": a, "coeff": c} for a, c in self.terms.items()],
        })

    @classmethod
    def from_json(cls, text: str) -> "QubitOperator":
        data = json.loads(text)
        return cls(data["n_qubits"],
                   {t["axes"]: t["coeff"] for t in data["terms"]})


def add(a: QubitOperator, b: QubitOperator) -> QubitOperator:
    """Term-wise sum with canonicalization; exact cancellations are dropped."""
    return a + b


def dense_matrix(op: QubitOperator, cap: int = DENSE_QUBIT_CAP) -> np.ndarray:
    """Dense Hermitian matrix of the operator (little-endian index order)."""
    n = op.n_qubits
    if n > cap:
        raise ValueError(f"dense matrix for {n} qubits exceeds cap {cap}")
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=complex)
    for axes, c in op.terms.items():
        m = np.array([[1.0]], dtype=complex)
        # qubit 0 is the fastest index, so it sits rightmost in the kron chain
        for a in reversed(axes):
            m = np.kron(m, _SIGMA[a])
        out += c * m
    return out


def _check_normalized(state: np.ndarray, tol: float = 1e-9):
    norm2 = float(np.vdot(state, state).real)
    if abs(norm2 - 1.0) > tol:
        raise ValueError(f"state is not normalized: |psi|^2 = {norm2!r}")


def expect_pauli(state: np.ndarray, p: PauliString) -> float:
    """Exact <psi|P|psi> for a single Pauli string (no normalization check)."""
    return backend.kernels.exact_pauli(state, p.flip_mask, p.phase_mask, p.n_y)


def exact_expectation(op: QubitOperator, state: np.ndarray) -> float:
    """Infinite-shot expectation <psi|H|psi>.

    The imaginary residue is guaranteed below 1e-12 by construction (real
    coefficients, Hermitian strings) and is discarded.
    """
    if state.shape != (1 << op.n_qubits,):
        raise ValueError(
            f"state dimension {state.shape} does not match {op.n_qubits} qubits")
    _check_normalized(state)
    total = 0.0
    for axes, c in op.terms.items():
        p = PauliString(axes)
        total += c * backend.kernels.exact_pauli(state, p.flip_mask, p.phase_mask, p.n_y)
    return total


def min_eigenpair(op: QubitOperator, cap: int = DENSE_QUBIT_CAP):
    """Smallest eigenvalue and a unit eigenvector via direct Hermitian solve."""
    mat = dense_matrix(op, cap=cap)
    vals, vecs = np.linalg.eigh(mat)
    return float(vals[0]), vecs[:, 0]

"""Parameterized ansatz circuits and shot-faithful Pauli measurement.

The circuit is a brick pattern of real-valued two-qubit rotations that
conserve total occupation (Givens rotations acting as [[cos t, -sin t],
[sin t, cos t]] on the single-occupation subspace of an adjacent qubit pair
and as identity elsewhere).  States are little-endian numpy complex vectors;
all hot paths dispatch to the selected kernel backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import backend
from .operators import PauliString, QubitOperator
from .rng import derive_key


@dataclass(frozen=True)
class SampleStats:
    """Outcome mean and unbiased single-shot variance of a Pauli measurement."""

    mean: float
    sample_variance: float
    shots: int


@dataclass(frozen=True)
class AnsatzCircuit:
    """Layout of the occupation-conserving rotation circuit.

    pairs[g] = (a, b) are the adjacent qubits of gate g; each gate consumes
    exactly one angle, applied in layout order to the reference bitstring.
    """

    n_qubits: int
    pairs: tuple[tuple[int, int], ...]
    reference_occupations: tuple[int, ...]
    depth: int = 0
    _qa: np.ndarray = field(init=False, repr=False, compare=False)
    _qb: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for a, b in self.pairs:
            if abs(a - b) != 1:
                raise ValueError(f"gate pair ({a}, {b}) is not adjacent")
            if not (0 <= a < self.n_qubits and 0 <= b < self.n_qubits):
                raise ValueError(f"gate pair ({a}, {b}) outside {self.n_qubits} qubits")
        for q in self.reference_occupations:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"reference occupation {q} outside register")
        object.__setattr__(self, "_qa",
                           np.array([p[0] for p in self.pairs], dtype=np.int32))
        object.__setattr__(self, "_qb",
                           np.array([p[1] for p in self.pairs], dtype=np.int32))

    @property
    def n_parameters(self) -> int:
        return len(self.pairs)

    @property
    def reference_index(self) -> int:
        mask = 0
        for q in self.reference_occupations:
            mask |= 1 << q
        return mask

    @property
    def reference_bitstring(self) -> str:
        """Ket label, qubit 0 rightmost."""
        return format(self.reference_index, f"0{self.n_qubits}b")

    def describe(self) -> dict:
        return {
            "n_qubits": self.n_qubits,
            "depth": self.depth,
            "n_parameters": self.n_parameters,
            "pairs": [list(p) for p in self.pairs],
            "reference": self.reference_bitstring,
        }


def brick_ansatz(n_qubits: int, depth: int,
                 reference_occupations: tuple[int, ...]) -> AnsatzCircuit:
    """Per layer, gates on pairs (0,1), (1,2), ..., (n-2, n-1) in that order."""
    layer = [(q, q + 1) for q in range(n_qubits - 1)]
    return AnsatzCircuit(n_qubits=n_qubits, pairs=tuple(layer * depth),
                         reference_occupations=tuple(reference_occupations),
                         depth=depth)


def prepare_ansatz(circuit: AnsatzCircuit, params) -> np.ndarray:
    params = np.asarray(params, dtype=np.float64)
    if params.shape != (circuit.n_parameters,):
        raise ValueError(
            f"expected {circuit.n_parameters} parameters, got shape {params.shape}")
    return backend.kernels.prepare_ansatz(
        circuit.n_qubits, circuit.reference_index, circuit._qa, circuit._qb, params)


def exact_pauli(state: np.ndarray, p: PauliString) -> float:
    if state.shape[0] != 1 << p.n_qubits:
        raise ValueError("state dimension does not match Pauli string length")
    return backend.kernels.exact_pauli(state, p.flip_mask, p.phase_mask, p.n_y)


def sample_pauli(state: np.ndarray, p: PauliString, shots: int, key: int) -> SampleStats:
    """Measure `shots` independent outcomes of P on the given state.

    The state is rotated into the eigenbasis of P, bitstrings are drawn by
    inverse CDF from the rotated probabilities, and each maps to the product
    of +-1 eigenvalues on the support.  The identity string is deterministic
    and consumes no circuit execution.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    if p.is_identity:
        return SampleStats(mean=1.0, sample_variance=0.0, shots=shots)
    mean, var = backend.kernels.sample_pauli(
        state, p.x_mask, p.z_mask, p.n_qubits, shots, key)
    return SampleStats(mean=mean, sample_variance=var, shots=shots)


# Exact derivative rule for the Givens angle.  The gate generator has
# eigenvalues {0, +-1}, so E(theta_j) carries frequencies 1 and 2 and the
# derivative needs four evaluations:
#   dE/dt = c1*[E(t+pi/4) - E(t-pi/4)] + c2*[E(t+3pi/4) - E(t-3pi/4)]
GIVENS_SHIFTS = (math.pi / 4, -math.pi / 4, 3 * math.pi / 4, -3 * math.pi / 4)
_C1 = (math.sqrt(2.0) + 2.0) / 4.0
_C2 = (math.sqrt(2.0) - 2.0) / 4.0
GIVENS_SHIFT_WEIGHTS = (_C1, -_C1, _C2, -_C2)


def shifted_parameters(params, k: int, delta: float) -> np.ndarray:
    """Copy of params with angle k displaced by delta."""
    params = np.asarray(params, dtype=np.float64)
    if not 0 <= k < params.shape[0]:
        raise IndexError(f"parameter index {k} out of range")
    out = params.copy()
    out[k] += delta
    return out


def gradient_stencil(params, k: int):
    """The four (shifted parameter vector, weight) pairs whose weighted
    energy sum is the exact derivative with respect to angle k."""
    return [(shifted_parameters(params, k, s), w)
            for s, w in zip(GIVENS_SHIFTS, GIVENS_SHIFT_WEIGHTS)]


def exact_energy(op: QubitOperator, circuit: AnsatzCircuit, params) -> float:
    state = prepare_ansatz(circuit, params)
    total = 0.0
    for axes, c in op.terms.items():
        p = PauliString(axes)
        total += c * backend.kernels.exact_pauli(state, p.flip_mask, p.phase_mask, p.n_y)
    return total


def _term_mask_arrays(op: QubitOperator):
    items = op.non_identity_items()
    xs = np.empty(len(items), dtype=np.uint64)
    zs = np.empty(len(items), dtype=np.uint64)
    coeffs = np.empty(len(items), dtype=np.float64)
    for t, (axes, c) in enumerate(items):
        p = PauliString(axes)
        xs[t] = p.x_mask
        zs[t] = p.z_mask
        coeffs[t] = c
    return [a for a, _ in items], xs, zs, coeffs


def _exact_term_arrays(op: QubitOperator):
    items = op.non_identity_items()
    flips = np.empty(len(items), dtype=np.uint64)
    phases = np.empty(len(items), dtype=np.uint64)
    n_ys = np.empty(len(items), dtype=np.int64)
    coeffs = np.empty(len(items), dtype=np.float64)
    for t, (axes, c) in enumerate(items):
        p = PauliString(axes)
        flips[t] = p.flip_mask
        phases[t] = p.phase_mask
        n_ys[t] = p.n_y
        coeffs[t] = c
    return flips, phases, n_ys, coeffs


def exact_gradient(op: QubitOperator, circuit: AnsatzCircuit, params) -> np.ndarray:
    """Analytic energy gradient in the infinite-shot limit."""
    params = np.asarray(params, dtype=np.float64)
    flips, phases, n_ys, coeffs = _exact_term_arrays(op)
    energies = backend.kernels.gradient_energies_exact(
        circuit.n_qubits, circuit.reference_index, circuit._qa, circuit._qb,
        params, np.array(GIVENS_SHIFTS), flips, phases, n_ys, coeffs,
        op.identity_coefficient)
    weights = np.array(GIVENS_SHIFT_WEIGHTS)
    return energies @ weights


def sampled_shift_energies(op: QubitOperator, circuit: AnsatzCircuit, params,
                           shots: int, base_key: int):
    """Sampled energies/variances at all 4M shift displacements, shape (M, 4)."""
    params = np.asarray(params, dtype=np.float64)
    _, xs, zs, coeffs = _term_mask_arrays(op)
    return backend.kernels.gradient_energies(
        circuit.n_qubits, circuit.reference_index, circuit._qa, circuit._qb,
        params, np.array(GIVENS_SHIFTS), xs, zs, coeffs,
        op.identity_coefficient, shots, base_key)


def sample_operator_terms(op: QubitOperator, state: np.ndarray, shots: int,
                          base_key: int) -> dict[str, SampleStats]:
    """One batch of per-term measurements; term t uses stream child(base_key, t).

    Term order (and so stream assignment) is the operator's canonical order
    restricted to non-identity strings.
    """
    axes_list, xs, zs, coeffs = _term_mask_arrays(op)
    means, variances = backend.kernels.sample_operator(
        state, xs, zs, op.n_qubits, shots, base_key)
    return {axes: SampleStats(mean=float(means[t]),
                              sample_variance=float(variances[t]), shots=shots)
            for t, axes in enumerate(axes_list)}


def particle_number_expectation(state: np.ndarray, n_qubits: int) -> float:
    """<sum_j n_j> with n_j = (1 - Z_j)/2."""
    total = 0.0
    for q in range(n_qubits):
        z = PauliString("".join("Z" if j == q else "I" for j in range(n_qubits)))
        total += 0.5 * (1.0 - exact_pauli(state, z))
    return total

"""Pure-numpy implementation of the hot kernels.

This is the fallback backend; qlmd._corecy is the compiled twin.  The two
implement the same arithmetic in the same order (explicit real/imaginary
component operations, sequential prefix sums, integer outcome accumulation,
shared SplitMix64 streams), so sampled results agree bit-for-bit across
backends.  See tests/test_backend_parity.py.
"""

from __future__ import annotations

import numpy as np

from .rng import GAMMA, MASK64, mix64, uniforms

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


def child_key(key: int, word: int) -> int:
    return mix64((key + GAMMA + word) & MASK64)


def prepare_ansatz(n_qubits, ref_index, qa, qb, thetas):
    """Apply a chain of two-qubit rotations to a computational basis state.

    Gate g rotates the single-occupation subspace of qubits (qa[g], qb[g]):
    with u = amplitude of (bit qa=1, bit qb=0) and w = (bit qa=0, bit qb=1),
    u' = cos(t) u - sin(t) w,  w' = sin(t) u + cos(t) w.
    States with both bits equal are untouched, so total occupation is exact.
    """
    dim = 1 << n_qubits
    state = np.zeros(dim, dtype=np.complex128)
    state[ref_index] = 1.0
    idx = np.arange(dim)
    for g in range(len(thetas)):
        a, b = int(qa[g]), int(qb[g])
        c = np.cos(thetas[g])
        s = np.sin(thetas[g])
        sel = ((idx >> a) & 1 == 1) & ((idx >> b) & 1 == 0)
        u_idx = idx[sel]
        w_idx = u_idx - (1 << a) + (1 << b)
        u = state[u_idx]
        w = state[w_idx]
        state[u_idx] = c * u - s * w
        state[w_idx] = s * u + c * w
    return state


def _rotate_to_z_basis(state, x_mask, z_mask, n_qubits):
    """Basis change so the Pauli string becomes Z's on its support."""
    work = state.copy()
    dim = work.shape[0]
    idx = np.arange(dim)
    for q in range(n_qubits):
        bit = (x_mask >> q) & 1
        if not bit:
            continue
        is_y = (z_mask >> q) & 1
        sel0 = (idx >> q) & 1 == 0
        i0 = idx[sel0]
        i1 = i0 + (1 << q)
        s0 = work[i0]
        s1 = work[i1]
        if is_y:
            # H S^dagger:  |0> component (s0 - i s1)/sqrt2, |1> (s0 + i s1)/sqrt2
            re0 = s0.real + s1.imag
            im0 = s0.imag - s1.real
            re1 = s0.real - s1.imag
            im1 = s0.imag + s1.real
            work[i0] = (re0 * _INV_SQRT2) + 1j * (im0 * _INV_SQRT2)
            work[i1] = (re1 * _INV_SQRT2) + 1j * (im1 * _INV_SQRT2)
        else:
            work[i0] = (s0 + s1) * _INV_SQRT2
            work[i1] = (s0 - s1) * _INV_SQRT2
    return work


_PHASES = (1.0 + 0.0j, 0.0 + 1.0j, -1.0 + 0.0j, 0.0 - 1.0j)


def _outcome_signs(dim, support_mask):
    """(-1)^parity(i & support) for every basis index i."""
    v = np.arange(dim) & support_mask
    v ^= v >> 16
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return 1 - 2 * (v & 1)


def sample_pauli(state, x_mask, z_mask, n_qubits, shots, key):
    """Projective measurement of one Pauli string.

    Returns (outcome mean, unbiased single-shot sample variance).  Identity
    strings are handled by the caller (mean 1, variance 0, no execution).
    """
    support = x_mask | z_mask
    if x_mask:
        work = _rotate_to_z_basis(state, x_mask, z_mask, n_qubits)
    else:
        work = state
    probs = work.real * work.real + work.imag * work.imag
    cdf = np.cumsum(probs)
    us = uniforms(key, shots)
    picks = np.searchsorted(cdf, us, side="right")
    np.clip(picks, 0, probs.shape[0] - 1, out=picks)
    signs = _outcome_signs(probs.shape[0], support)
    total = int(signs[picks].sum())
    mean = total / shots
    if shots > 1:
        var = (shots * (1.0 - mean * mean)) / (shots - 1)
    else:
        var = 1.0 - mean * mean
    return mean, var


def sample_operator(state, xs, zs, n_qubits, shots, base_key):
    """Sample every term of an operator; term t uses stream child(base_key, t)."""
    n_terms = len(xs)
    means = np.empty(n_terms)
    variances = np.empty(n_terms)
    for t in range(n_terms):
        key = child_key(base_key, t)
        means[t], variances[t] = sample_pauli(
            state, int(xs[t]), int(zs[t]), n_qubits, shots, key)
    return means, variances


def exact_pauli(state, flip_mask, phase_mask, n_y):
    """<psi|P|psi> without sampling."""
    dim = state.shape[0]
    idx = np.arange(dim)
    signs = _outcome_signs(dim, phase_mask)
    amp = np.conj(state[idx ^ flip_mask]) * state * signs
    total = amp.sum() * _PHASES[n_y % 4]
    return float(total.real)


def expectation_operator(state, flips, phase_masks, n_ys, coeffs):
    acc = 0.0
    for t in range(len(flips)):
        acc += coeffs[t] * exact_pauli(state, int(flips[t]), int(phase_masks[t]),
                                       int(n_ys[t]))
    return acc


def gradient_energies(n_qubits, ref_index, qa, qb, thetas, shifts,
                      xs, zs, coeffs, c_ident, shots, base_key):
    """Sampled energies at every (parameter, shift) displacement.

    Returns (E, V) with shape (M, n_shifts): E[j, s] is the sampled energy at
    thetas + shifts[s] * e_j and V[j, s] its statistical variance.  Streams:
    term t of displacement (j, s) uses child(child(child(base_key, j), s), t).
    """
    m = len(thetas)
    n_shifts = len(shifts)
    energies = np.empty((m, n_shifts))
    variances = np.empty((m, n_shifts))
    work = np.array(thetas, dtype=np.float64, copy=True)
    for j in range(m):
        key_j = child_key(base_key, j)
        theta_j = work[j]
        for s in range(n_shifts):
            work[j] = theta_j + shifts[s]
            state = prepare_ansatz(n_qubits, ref_index, qa, qb, work)
            key_js = child_key(key_j, s)
            e_acc = c_ident
            v_acc = 0.0
            for t in range(len(xs)):
                key_t = child_key(key_js, t)
                mean, var = sample_pauli(state, int(xs[t]), int(zs[t]),
                                         n_qubits, shots, key_t)
                e_acc = e_acc + coeffs[t] * mean
                v_acc = v_acc + coeffs[t] * coeffs[t] * (var / shots)
            energies[j, s] = e_acc
            variances[j, s] = v_acc
        work[j] = theta_j
    return energies, variances


def gradient_energies_exact(n_qubits, ref_index, qa, qb, thetas, shifts,
                            flips, phase_masks, n_ys, coeffs, c_ident):
    """Exact counterpart of gradient_energies (no variance)."""
    m = len(thetas)
    n_shifts = len(shifts)
    energies = np.empty((m, n_shifts))
    work = np.array(thetas, dtype=np.float64, copy=True)
    for j in range(m):
        theta_j = work[j]
        for s in range(n_shifts):
            work[j] = theta_j + shifts[s]
            state = prepare_ansatz(n_qubits, ref_index, qa, qb, work)
            energies[j, s] = c_ident + expectation_operator(
                state, flips, phase_masks, n_ys, coeffs)
        work[j] = theta_j
    return energies

# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementation of the hot kernels.

Mirrors qlmd._corepy operation for operation (same arithmetic order, same
SplitMix64 streams, integer outcome accumulation) so that sampled results are
bit-identical across backends.  Compiled with -ffp-contract=off to keep the
float pipeline identical to numpy's.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt
from libc.stdlib cimport free, malloc

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

DEF GAMMA = 0x9E3779B97F4A7C15
cdef double INV_2_53 = 1.0 / 9007199254740992.0
cdef double INV_SQRT2 = 0.7071067811865475244008443621048490392848359376884740365883398689


cdef inline unsigned long long mix64(unsigned long long z) nogil:
    z ^= z >> 30
    z = z * <unsigned long long>0xBF58476D1CE4E5B9
    z ^= z >> 27
    z = z * <unsigned long long>0x94D049BB133111EB
    z ^= z >> 31
    return z


cdef inline unsigned long long ckey(unsigned long long key, unsigned long long word) nogil:
    return mix64(key + <unsigned long long>GAMMA + word)


cdef inline double stream_uniform(unsigned long long key, unsigned long long index) nogil:
    cdef unsigned long long u = mix64(key + (index + 1) * <unsigned long long>GAMMA)
    return <double>(u >> 11) * INV_2_53


def child_key(key, word):
    return int(ckey(<unsigned long long>key, <unsigned long long>word))


cdef void _apply_gates(double complex* state, Py_ssize_t dim,
                       const int* qa, const int* qb,
                       const double* thetas, Py_ssize_t n_gates) nogil:
    cdef Py_ssize_t g, i, j
    cdef int a, b
    cdef double c, s, ure, uim, wre, wim
    for g in range(n_gates):
        a = qa[g]
        b = qb[g]
        c = cos(thetas[g])
        s = sin(thetas[g])
        for i in range(dim):
            if ((i >> a) & 1) == 1 and ((i >> b) & 1) == 0:
                j = i - (1 << a) + (1 << b)
                ure = state[i].real
                uim = state[i].imag
                wre = state[j].real
                wim = state[j].imag
                state[i].real = c * ure - s * wre
                state[i].imag = c * uim - s * wim
                state[j].real = s * ure + c * wre
                state[j].imag = s * uim + c * wim


def prepare_ansatz(int n_qubits, long ref_index,
                   int[::1] qa, int[::1] qb, double[::1] thetas):
    cdef Py_ssize_t dim = 1 << n_qubits
    out = np.zeros(dim, dtype=np.complex128)
    cdef double complex[::1] state = out
    state[ref_index] = 1.0
    cdef Py_ssize_t n_gates = thetas.shape[0]
    if n_gates:
        _apply_gates(&state[0], dim, &qa[0], &qb[0], &thetas[0], n_gates)
    return out


cdef void _rotate_to_z(const double complex* src, double complex* work,
                       Py_ssize_t dim, unsigned long long x_mask,
                       unsigned long long z_mask, int n_qubits) nogil:
    cdef Py_ssize_t i, i1
    cdef int q, is_y
    cdef double re0, im0, re1, im1, s0re, s0im, s1re, s1im
    for i in range(dim):
        work[i] = src[i]
    for q in range(n_qubits):
        if not ((x_mask >> q) & 1):
            continue
        is_y = (z_mask >> q) & 1
        for i in range(dim):
            if (i >> q) & 1:
                continue
            i1 = i + (1 << q)
            s0re = work[i].real
            s0im = work[i].imag
            s1re = work[i1].real
            s1im = work[i1].imag
            if is_y:
                re0 = s0re + s1im
                im0 = s0im - s1re
                re1 = s0re - s1im
                im1 = s0im + s1re
                work[i].real = re0 * INV_SQRT2
                work[i].imag = im0 * INV_SQRT2
                work[i1].real = re1 * INV_SQRT2
                work[i1].imag = im1 * INV_SQRT2
            else:
                work[i].real = (s0re + s1re) * INV_SQRT2
                work[i].imag = (s0im + s1im) * INV_SQRT2
                work[i1].real = (s0re - s1re) * INV_SQRT2
                work[i1].imag = (s0im - s1im) * INV_SQRT2


cdef void _sample_rotated(const double complex* work, double* cdf, Py_ssize_t dim,
                          unsigned long long support, long shots,
                          unsigned long long key,
                          double* mean_out, double* var_out) nogil:
    cdef Py_ssize_t i
    cdef double acc = 0.0
    for i in range(dim):
        acc = acc + (work[i].real * work[i].real + work[i].imag * work[i].imag)
        cdf[i] = acc
    cdef long long total = 0
    cdef long shot
    cdef double u, mean, var
    cdef Py_ssize_t lo, hi, mid
    for shot in range(shots):
        u = stream_uniform(key, <unsigned long long>shot)
        lo = 0
        hi = dim
        while lo < hi:
            mid = (lo + hi) >> 1
            if cdf[mid] <= u:
                lo = mid + 1
            else:
                hi = mid
        if lo >= dim:
            lo = dim - 1
        if __builtin_popcountll((<unsigned long long>lo) & support) & 1:
            total -= 1
        else:
            total += 1
    mean = <double>total / <double>shots
    if shots > 1:
        var = (shots * (1.0 - mean * mean)) / (shots - 1)
    else:
        var = 1.0 - mean * mean
    mean_out[0] = mean
    var_out[0] = var


def sample_pauli(double complex[::1] state, x_mask, z_mask, int n_qubits,
                 long shots, key):
    cdef Py_ssize_t dim = state.shape[0]
    cdef unsigned long long xm = <unsigned long long>x_mask
    cdef unsigned long long zm = <unsigned long long>z_mask
    cdef unsigned long long k = <unsigned long long>key
    cdef double complex* work = <double complex*>malloc(dim * sizeof(double complex))
    cdef double* cdf = <double*>malloc(dim * sizeof(double))
    cdef double mean = 0.0, var = 0.0
    cdef Py_ssize_t i
    if work == NULL or cdf == NULL:
        free(work)
        free(cdf)
        raise MemoryError()
    try:
        with nogil:
            if xm:
                _rotate_to_z(&state[0], work, dim, xm, zm, n_qubits)
            else:
                for i in range(dim):
                    work[i] = state[i]
            _sample_rotated(work, cdf, dim, xm | zm, shots, k, &mean, &var)
    finally:
        free(work)
        free(cdf)
    return mean, var


def sample_operator(double complex[::1] state,
                    cnp.uint64_t[::1] xs, cnp.uint64_t[::1] zs,
                    int n_qubits, long shots, base_key):
    cdef Py_ssize_t n_terms = xs.shape[0]
    cdef Py_ssize_t dim = state.shape[0]
    means = np.empty(n_terms)
    variances = np.empty(n_terms)
    cdef double[::1] mv = means
    cdef double[::1] vv = variances
    cdef unsigned long long bk = <unsigned long long>base_key
    cdef unsigned long long key
    cdef double complex* work = <double complex*>malloc(dim * sizeof(double complex))
    cdef double* cdf = <double*>malloc(dim * sizeof(double))
    cdef Py_ssize_t t, i
    if work == NULL or cdf == NULL:
        free(work)
        free(cdf)
        raise MemoryError()
    try:
        with nogil:
            for t in range(n_terms):
                key = ckey(bk, <unsigned long long>t)
                if xs[t]:
                    _rotate_to_z(&state[0], work, dim, xs[t], zs[t], n_qubits)
                else:
                    for i in range(dim):
                        work[i] = state[i]
                _sample_rotated(work, cdf, dim, xs[t] | zs[t], shots, key,
                                &mv[t], &vv[t])
    finally:
        free(work)
        free(cdf)
    return means, variances


cdef double _exact_pauli(const double complex* state, Py_ssize_t dim,
                         unsigned long long flip, unsigned long long phase_mask,
                         int n_y) nogil:
    cdef Py_ssize_t b
    cdef double pre, pim, qre, qim, tre, tim
    cdef double acc_re = 0.0, acc_im = 0.0
    cdef double sign
    for b in range(dim):
        pre = state[(<unsigned long long>b) ^ flip].real
        pim = state[(<unsigned long long>b) ^ flip].imag
        qre = state[b].real
        qim = state[b].imag
        if __builtin_popcountll((<unsigned long long>b) & phase_mask) & 1:
            sign = -1.0
        else:
            sign = 1.0
        tre = (pre * qre + pim * qim) * sign
        tim = (pre * qim - pim * qre) * sign
        acc_re += tre
        acc_im += tim
    cdef int r = n_y & 3
    if r == 0:
        return acc_re
    elif r == 1:
        return -acc_im
    elif r == 2:
        return -acc_re
    else:
        return acc_im


def exact_pauli(double complex[::1] state, flip_mask, phase_mask, int n_y):
    return _exact_pauli(&state[0], state.shape[0],
                        <unsigned long long>flip_mask,
                        <unsigned long long>phase_mask, n_y)


def expectation_operator(double complex[::1] state,
                         cnp.uint64_t[::1] flips, cnp.uint64_t[::1] phase_masks,
                         long[::1] n_ys, double[::1] coeffs):
    cdef double acc = 0.0
    cdef Py_ssize_t t
    cdef Py_ssize_t dim = state.shape[0]
    with nogil:
        for t in range(flips.shape[0]):
            acc += coeffs[t] * _exact_pauli(&state[0], dim, flips[t],
                                            phase_masks[t], <int>n_ys[t])
    return acc


def gradient_energies(int n_qubits, long ref_index,
                      int[::1] qa, int[::1] qb, double[::1] thetas,
                      double[::1] shifts,
                      cnp.uint64_t[::1] xs, cnp.uint64_t[::1] zs,
                      double[::1] coeffs, double c_ident,
                      long shots, base_key):
    cdef Py_ssize_t m = thetas.shape[0]
    cdef Py_ssize_t n_shifts = shifts.shape[0]
    cdef Py_ssize_t n_terms = xs.shape[0]
    cdef Py_ssize_t dim = 1 << n_qubits
    energies = np.empty((m, n_shifts))
    variances = np.empty((m, n_shifts))
    cdef double[:, ::1] ev = energies
    cdef double[:, ::1] vv = variances
    cdef unsigned long long bk = <unsigned long long>base_key
    cdef unsigned long long key_j, key_js, key_t
    cdef double complex* state = <double complex*>malloc(dim * sizeof(double complex))
    cdef double complex* work = <double complex*>malloc(dim * sizeof(double complex))
    cdef double* cdf = <double*>malloc(dim * sizeof(double))
    cdef double* theta_work = <double*>malloc(m * sizeof(double))
    cdef Py_ssize_t j, s, t, i
    cdef double theta_j, e_acc, v_acc, mean, var
    if state == NULL or work == NULL or cdf == NULL or theta_work == NULL:
        free(state)
        free(work)
        free(cdf)
        free(theta_work)
        raise MemoryError()
    try:
        with nogil:
            for i in range(m):
                theta_work[i] = thetas[i]
            for j in range(m):
                key_j = ckey(bk, <unsigned long long>j)
                theta_j = theta_work[j]
                for s in range(n_shifts):
                    theta_work[j] = theta_j + shifts[s]
                    for i in range(dim):
                        state[i] = 0.0
                    state[ref_index] = 1.0
                    _apply_gates(state, dim, &qa[0], &qb[0], theta_work, m)
                    key_js = ckey(key_j, <unsigned long long>s)
                    e_acc = c_ident
                    v_acc = 0.0
                    for t in range(n_terms):
                        key_t = ckey(key_js, <unsigned long long>t)
                        if xs[t]:
                            _rotate_to_z(state, work, dim, xs[t], zs[t], n_qubits)
                        else:
                            for i in range(dim):
                                work[i] = state[i]
                        _sample_rotated(work, cdf, dim, xs[t] | zs[t], shots,
                                        key_t, &mean, &var)
                        e_acc = e_acc + coeffs[t] * mean
                        v_acc = v_acc + coeffs[t] * coeffs[t] * (var / shots)
                    ev[j, s] = e_acc
                    vv[j, s] = v_acc
                theta_work[j] = theta_j
    finally:
        free(state)
        free(work)
        free(cdf)
        free(theta_work)
    return energies, variances


def gradient_energies_exact(int n_qubits, long ref_index,
                            int[::1] qa, int[::1] qb, double[::1] thetas,
                            double[::1] shifts,
                            cnp.uint64_t[::1] flips, cnp.uint64_t[::1] phase_masks,
                            long[::1] n_ys, double[::1] coeffs, double c_ident):
    cdef Py_ssize_t m = thetas.shape[0]
    cdef Py_ssize_t n_shifts = shifts.shape[0]
    cdef Py_ssize_t n_terms = flips.shape[0]
    cdef Py_ssize_t dim = 1 << n_qubits
    energies = np.empty((m, n_shifts))
    cdef double[:, ::1] ev = energies
    cdef double complex* state = <double complex*>malloc(dim * sizeof(double complex))
    cdef double* theta_work = <double*>malloc(m * sizeof(double))
    cdef Py_ssize_t j, s, t, i
    cdef double theta_j, e_acc
    if state == NULL or theta_work == NULL:
        free(state)
        free(theta_work)
        raise MemoryError()
    try:
        with nogil:
            for i in range(m):
                theta_work[i] = thetas[i]
            for j in range(m):
                theta_j = theta_work[j]
                for s in range(n_shifts):
                    theta_work[j] = theta_j + shifts[s]
                    for i in range(dim):
                        state[i] = 0.0
                    state[ref_index] = 1.0
                    _apply_gates(state, dim, &qa[0], &qb[0], theta_work, m)
                    e_acc = c_ident
                    for t in range(n_terms):
                        e_acc += coeffs[t] * _exact_pauli(state, dim, flips[t],
                                                          phase_masks[t],
                                                          <int>n_ys[t])
                    ev[j, s] = e_acc
                theta_work[j] = theta_j
    finally:
        free(state)
        free(theta_work)
    return energies

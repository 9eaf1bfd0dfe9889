# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled residual/Jacobian kernels; same contract as _kernels_py."""

import numpy as np

BACKEND = "cython"


cdef void _conv2_into(double complex[:, ::1] a, double complex[:, ::1] b,
                      double complex[:, ::1] out) noexcept:
    cdef Py_ssize_t ra = a.shape[0], ca = a.shape[1]
    cdef Py_ssize_t rb = b.shape[0], cb = b.shape[1]
    cdef Py_ssize_t ro = out.shape[0], co = out.shape[1]
    cdef Py_ssize_t i, j, p, q, pmax, qmax
    cdef double complex aij
    for i in range(ra if ra < ro else ro):
        for j in range(ca if ca < co else co):
            aij = a[i, j]
            if aij == 0:
                continue
            pmax = ro - i
            if pmax > rb:
                pmax = rb
            qmax = co - j
            if qmax > cb:
                qmax = cb
            for p in range(pmax):
                for q in range(qmax):
                    out[i + p, j + q] = out[i + p, j + q] + aij * b[p, q]


def conv2_trunc(A, B, int size):
    """Truncated 2-D convolution (series product) of coefficient arrays."""
    A = np.ascontiguousarray(A, dtype=np.complex128)
    B = np.ascontiguousarray(B, dtype=np.complex128)
    out = np.zeros((size, size), dtype=np.complex128)
    _conv2_into(A, B, out)
    return out


def _base_and_powers(C, double scale, int power, int size):
    C = np.ascontiguousarray(C, dtype=np.complex128)
    base = np.zeros((size, size), dtype=np.complex128)
    D = C.shape[1]
    if C.shape[0]:
        base[1 : D + 1, 1 : D + 1] = scale * (C.T @ np.conj(C))
    base[0, 0] += 1.0
    prev = np.zeros((size, size), dtype=np.complex128)
    prev[0, 0] = 1.0
    cur = base
    cdef int k
    for k in range(power - 1):
        prev = cur
        nxt = np.zeros((size, size), dtype=np.complex128)
        _conv2_into(prev, base, nxt)
        cur = nxt
    return cur, prev


cdef void _fill_f(double complex[:, ::1] L, double complex[:, ::1] R,
                  double[::1] f, int cap) noexcept:
    cdef Py_ssize_t al, be, row
    cdef double complex d
    for al in range(1, cap + 1):
        for be in range(1, cap + 1):
            d = L[al, be] - R[al, be]
            row = 2 * ((al - 1) * cap + (be - 1))
            f[row] = d.real
            f[row + 1] = d.imag


def identity_residual(hc, kc, double a, double b, int s, int r, int cap):
    """Stacked re/im of all bicoefficient differences (indices 1..cap)."""
    cdef int size = cap + 1
    L, _ = _base_and_powers(hc, a, s, size)
    R, _ = _base_and_powers(kc, b, r, size)
    f = np.empty(2 * cap * cap, dtype=np.float64)
    _fill_f(L, R, f, cap)
    return f


cdef void _fill_jac(double complex[:, ::1] Pm1, double complex[:, ::1] C,
                    double complex[:, ::1] Cconj, double factor,
                    double[:, ::1] J, int cap, int col0,
                    double complex[:, ::1] A, double complex[:, ::1] B) noexcept:
    # factor = sign * scale * power; P = factor * Pm1 is folded in on the fly.
    cdef int size = cap + 1
    cdef Py_ssize_t D = C.shape[1], ncurves = C.shape[0]
    cdef Py_ssize_t i, al, be, d, g, row, col, dmax
    cdef double complex acc, sa, sb, dif
    for i in range(ncurves):
        for al in range(size):
            for be in range(size):
                acc = 0
                dmax = be if be < D else D
                for d in range(1, dmax + 1):
                    acc = acc + Pm1[al, be - d] * Cconj[i, d - 1]
                A[al, be] = factor * acc
                acc = 0
                dmax = al if al < D else D
                for d in range(1, dmax + 1):
                    acc = acc + Pm1[al - d, be] * C[i, d - 1]
                B[al, be] = factor * acc
        for g in range(1, D + 1):
            col = col0 + 2 * D * i + 2 * (g - 1)
            for al in range(1, size):
                for be in range(1, size):
                    sa = A[al - g, be] if al >= g else 0
                    sb = B[al, be - g] if be >= g else 0
                    row = 2 * ((al - 1) * cap + (be - 1))
                    dif = sa + sb
                    J[row, col] = dif.real
                    J[row + 1, col] = dif.imag
                    dif = sa - sb  # wrt imaginary part: i * (sa - sb)
                    J[row, col + 1] = -dif.imag
                    J[row + 1, col + 1] = dif.real


def identity_residual_jacobian(hc, kc, double a, double b, int s, int r, int cap):
    """Residual vector and Jacobian; parameter order matches _kernels_py."""
    hc = np.ascontiguousarray(hc, dtype=np.complex128)
    kc = np.ascontiguousarray(kc, dtype=np.complex128)
    cdef int size = cap + 1
    cdef int D = hc.shape[1]
    L, Ls1 = _base_and_powers(hc, a, s, size)
    R, Rs1 = _base_and_powers(kc, b, r, size)
    f = np.empty(2 * cap * cap, dtype=np.float64)
    _fill_f(L, R, f, cap)
    nparams = 2 * D * (hc.shape[0] + kc.shape[0])
    J = np.zeros((2 * cap * cap, nparams), dtype=np.float64)
    scratch_a = np.empty((size, size), dtype=np.complex128)
    scratch_b = np.empty((size, size), dtype=np.complex128)
    _fill_jac(Ls1, hc, np.conj(hc), a * s, J, cap, 0, scratch_a, scratch_b)
    _fill_jac(Rs1, kc, np.conj(kc), -b * r, J, cap, 2 * D * hc.shape[0],
              scratch_a, scratch_b)
    return f, J

"""Numpy implementation of the residual/Jacobian kernels.

Series in one source variable are dense (cap+1) x (cap+1) complex arrays
indexed by (alpha, beta); products are truncated 2-D convolutions.  The
compiled backend in _kernels_cy implements the same two entry points with
C loops; this module is the fallback selected at import when the
extension is unavailable.
"""

from __future__ import annotations

import numpy as np
from scipy.signal import convolve2d

BACKEND = "python"


def conv2_trunc(A: np.ndarray, B: np.ndarray, size: int) -> np.ndarray:
    """Truncated 2-D convolution (series product) of coefficient arrays."""
    return convolve2d(A, B)[:size, :size]


def _gram(C: np.ndarray, size: int) -> np.ndarray:
    """X[alpha, beta] = sum_i C[i, alpha-1] * conj(C[i, beta-1])."""
    D = C.shape[1]
    X = np.zeros((size, size), dtype=np.complex128)
    if C.shape[0]:
        X[1 : D + 1, 1 : D + 1] = C.T @ C.conj()
    return X


def _base_and_powers(C: np.ndarray, scale: float, power: int, size: int):
    """(base^power, base^(power-1)) for base = 1 + scale * gram(C)."""
    base = scale * _gram(C, size)
    base[0, 0] += 1.0
    prev = np.zeros((size, size), dtype=np.complex128)
    prev[0, 0] = 1.0  # base^0
    cur = base
    for _ in range(power - 1):
        prev = cur
        cur = conv2_trunc(cur, base, size)
    return cur, prev


def _residual_parts(hc, kc, a, b, s, r, cap):
    size = cap + 1
    L, Ls1 = _base_and_powers(np.asarray(hc), a, s, size)
    R, Rs1 = _base_and_powers(np.asarray(kc), b, r, size)
    diff = L - R
    sub = diff[1:, 1:]
    f = np.empty(2 * cap * cap, dtype=np.float64)
    f[0::2] = sub.real.ravel()
    f[1::2] = sub.imag.ravel()
    return f, Ls1, Rs1, size


def identity_residual(hc, kc, a, b, s, r, cap) -> np.ndarray:
    """Stacked re/im of all bicoefficient differences (indices 1..cap)."""
    f, _, _, _ = _residual_parts(hc, kc, a, b, s, r, cap)
    return f


def _toeplitz_cols(u: np.ndarray, size: int) -> np.ndarray:
    """U with U[c, j] = u[j - c] (zero when j < c): right-convolution matrix."""
    idx = np.arange(size)
    offs = idx[None, :] - idx[:, None]
    U = np.zeros((size, size), dtype=np.complex128)
    mask = offs >= 0
    U[mask] = u[offs[mask]]
    return U


def identity_residual_jacobian(hc, kc, a, b, s, r, cap):
    """Residual vector and its Jacobian.

    Parameter order: h curves then k curves; per curve, degrees 1..D; per
    degree, (real part, imaginary part).
    """
    hc = np.asarray(hc, dtype=np.complex128)
    kc = np.asarray(kc, dtype=np.complex128)
    f, Ls1, Rs1, size = _residual_parts(hc, kc, a, b, s, r, cap)
    D = hc.shape[1]
    nparams = 2 * D * (hc.shape[0] + kc.shape[0])
    J = np.empty((f.shape[0], nparams), dtype=np.float64)
    col = 0
    for curves, pm1, scale, power, sign in (
        (hc, Ls1, a, s, 1.0),
        (kc, Rs1, b, r, -1.0),
    ):
        P = (sign * scale * power) * pm1
        for i in range(curves.shape[0]):
            u = np.zeros(size, dtype=np.complex128)
            u[1 : D + 1] = curves[i].conj()
            v = np.zeros(size, dtype=np.complex128)
            v[1 : D + 1] = curves[i]
            A = P @ _toeplitz_cols(u, size)  # conv along beta
            B = _toeplitz_cols(v, size).T @ P  # conv along alpha
            for g in range(1, D + 1):
                dre = np.zeros((size, size), dtype=np.complex128)
                dre[g:, :] = A[: size - g, :]
                dcol = np.zeros((size, size), dtype=np.complex128)
                dcol[:, g:] = B[:, : size - g]
                d_re = dre + dcol  # derivative wrt the real part
                d_im = 1j * dre - 1j * dcol  # derivative wrt the imaginary part
                J[0::2, col] = d_re[1:, 1:].real.ravel()
                J[1::2, col] = d_re[1:, 1:].imag.ravel()
                J[0::2, col + 1] = d_im[1:, 1:].real.ravel()
                J[1::2, col + 1] = d_im[1:, 1:].imag.ravel()
                col += 2
    return f, J

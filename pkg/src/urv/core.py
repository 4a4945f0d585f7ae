"""Deterministic dense factorization kernels.

Blocked Householder QR (compact WY), column-pivoted QR with norm
downdating, a dense SVD, and spectral norms.  These are the building
blocks for every randomized factorization in the package.  All routines
are pure functions of float64 arrays and never mutate their inputs.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

EPS = float(np.finfo(np.float64).eps)

DEFAULT_BLOCK_SIZE = 32

# Recompute a downdated column norm from scratch once it has shrunk below
# this fraction of its reference value (guards catastrophic cancellation).
_NORM_RECOMPUTE_FRACTION = 1e-2


class QrResult(NamedTuple):
    """Thin unpivoted QR: ``a = q @ r`` with ``diag(r) >= 0``."""

    q: np.ndarray  # (m, n), orthonormal columns
    r: np.ndarray  # (n, n), upper-triangular


class CpqrResult(NamedTuple):
    """Column-pivoted QR: ``a[:, perm] = q @ r``."""

    q: np.ndarray     # (m, k), k = min(m, n)
    r: np.ndarray     # (k, n), upper-trapezoidal
    perm: np.ndarray  # (n,), pivot order


class SvdResult(NamedTuple):
    """Thin SVD: ``a = u @ diag(sigma) @ v.T`` with sigma nonincreasing."""

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray


def validated_matrix(a, name: str = "a") -> np.ndarray:
    """Return ``a`` as a float64 2-d array, rejecting non-finite entries."""
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def _householder(x):
    """Reflector (v, tau) with v[0] = 1 and (I - tau*v*v^T) x = +||x|| e_1.

    The sign is fixed so the produced diagonal entry is always
    nonnegative; both branches avoid cancellation.
    """
    v = x.copy()
    v[0] = 1.0
    sigma = x[1:] @ x[1:]
    if sigma == 0.0:
        # Already collinear with e_1; reflect only to fix a negative sign.
        return v, (0.0 if x[0] >= 0.0 else 2.0)
    mu = np.sqrt(x[0] * x[0] + sigma)
    if x[0] <= 0.0:
        v0 = x[0] - mu
    else:
        v0 = -sigma / (x[0] + mu)
    tau = 2.0 * v0 * v0 / (sigma + v0 * v0)
    v[1:] = x[1:] / v0
    return v, tau


def _qr_panel(a):
    """Unblocked Householder QR of a panel, in place.

    Returns the unit-lower Householder vectors (stacked column-wise) and
    their coefficients; ``a`` is overwritten with the triangular factor,
    with exact zeros below the diagonal.
    """
    m, n = a.shape
    k = min(m, n)
    vs = np.zeros((m, k))
    taus = np.zeros(k)
    for j in range(k):
        v, tau = _householder(a[j:, j])
        if tau != 0.0:
            w = tau * (v @ a[j:, j:])
            a[j:, j:] -= np.outer(v, w)
        vs[j:, j] = v
        taus[j] = tau
        a[j + 1 :, j] = 0.0
    return vs, taus


def _wy_t(vs, taus):
    """Upper-triangular T of the compact WY form H_1...H_k = I - V T V^T."""
    k = taus.shape[0]
    t = np.zeros((k, k))
    for j in range(k):
        t[j, j] = taus[j]
        if j:
            t[:j, j] = -taus[j] * (t[:j, :j] @ (vs[:, :j].T @ vs[:, j]))
    return t


def householder_qr(a, block_size: int = DEFAULT_BLOCK_SIZE) -> QrResult:
    """Blocked Householder QR of a tall matrix.

    Panels of ``block_size`` columns are factored with elementary
    reflectors; the accumulated reflectors are applied to the trailing
    matrix through the compact WY representation, so the bulk of the
    work is matrix-matrix products.  The factorization is normalized to
    ``diag(r) >= 0``, which makes the result unique and lets the Q of a
    Gaussian matrix be exactly Haar distributed.

    Parameters
    ----------
    a : array_like, shape (m, n)
        Matrix to factor, m >= n, finite entries.
    block_size : int, optional
        Panel width; results agree across block sizes up to roundoff.

    Returns
    -------
    QrResult
        ``q`` (m, n) with orthonormal columns and upper-triangular
        ``r`` (n, n) with nonnegative diagonal such that ``q @ r == a``
        up to roundoff.
    """
    a = validated_matrix(a)
    m, n = a.shape
    if m < n:
        raise ValueError(f"householder_qr requires rows >= cols, got {m}x{n}")
    if block_size < 1:
        raise ValueError("block_size must be >= 1")

    r = a.copy()
    panels = []
    for j0 in range(0, n, block_size):
        j1 = min(j0 + block_size, n)
        vs, taus = _qr_panel(r[j0:, j0:j1])
        t = _wy_t(vs, taus)
        if j1 < n:
            c = r[j0:, j1:]
            c -= vs @ (t.T @ (vs.T @ c))
        panels.append((j0, vs, t))

    q = np.eye(m, n)
    for j0, vs, t in reversed(panels):
        b = q[j0:, :]
        b -= vs @ (t @ (vs.T @ b))
    return QrResult(q, r[:n, :].copy())


def cpqr(a) -> CpqrResult:
    """QR factorization with greedy column pivoting.

    At step j the remaining column of largest trailing norm is moved to
    position j (ties broken by lowest column index).  Trailing squared
    norms are downdated after each reflector and recomputed from scratch
    when the downdated value falls below 1e-2 of its reference value.

    Returns
    -------
    CpqrResult
        ``q`` (m, k), ``r`` (k, n) upper-trapezoidal with nonincreasing
        diagonal magnitudes, and ``perm`` such that
        ``a[:, perm] == q @ r`` up to roundoff, k = min(m, n).
    """
    a = validated_matrix(a)
    m, n = a.shape
    k = min(m, n)
    r = a.copy()
    perm = np.arange(n)
    vs = np.zeros((m, k))
    taus = np.zeros(k)
    norms2 = np.einsum("ij,ij->j", r, r)
    ref2 = norms2.copy()

    for j in range(k):
        p = j + int(np.argmax(norms2[j:]))
        if p != j:
            r[:, [j, p]] = r[:, [p, j]]
            perm[[j, p]] = perm[[p, j]]
            norms2[[j, p]] = norms2[[p, j]]
            ref2[[j, p]] = ref2[[p, j]]
        v, tau = _householder(r[j:, j])
        if tau != 0.0:
            w = tau * (v @ r[j:, j:])
            r[j:, j:] -= np.outer(v, w)
        vs[j:, j] = v
        taus[j] = tau
        r[j + 1 :, j] = 0.0
        if j + 1 < n:
            upd = norms2[j + 1 :] - r[j, j + 1 :] ** 2
            np.clip(upd, 0.0, None, out=upd)
            stale = upd < _NORM_RECOMPUTE_FRACTION * ref2[j + 1 :]
            if stale.any():
                cols = j + 1 + np.nonzero(stale)[0]
                fresh = np.einsum("ij,ij->j", r[j + 1 :, cols], r[j + 1 :, cols])
                upd[stale] = fresh
                ref2[cols] = fresh
            norms2[j + 1 :] = upd

    q = np.eye(m, k)
    for j in range(k - 1, -1, -1):
        if taus[j] != 0.0:
            v = vs[j:, j]
            w = taus[j] * (v @ q[j:, :])
            q[j:, :] -= np.outer(v, w)
    return CpqrResult(q, r[:k, :].copy(), perm)


def svd(a) -> SvdResult:
    """Thin singular value decomposition.

    Delegates to LAPACK through numpy; non-convergence raises
    ``numpy.linalg.LinAlgError`` rather than silently truncating.
    """
    a = validated_matrix(a)
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    return SvdResult(u, s, vt.T)


def singular_values(a) -> np.ndarray:
    """Singular values only, nonincreasing."""
    a = validated_matrix(a)
    if min(a.shape) == 0:
        return np.zeros(0)
    return np.linalg.svd(a, compute_uv=False)


def spectral_norm(a) -> float:
    """Largest singular value of ``a`` (0.0 for an empty matrix)."""
    s = singular_values(a)
    return float(s[0]) if s.size else 0.0

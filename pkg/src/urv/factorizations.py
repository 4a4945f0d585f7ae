"""Randomized and deterministic rank-revealing factorizations.

Four algorithms that factor a tall matrix ``a`` (m >= n) so that
low-rank approximations can be read off by truncation:

ddh_urv
    one multiply by a random Haar matrix followed by one unpivoted QR;
    extremely cheap, data-oblivious right factor
power_urv
    ddh_urv preceded by q steps of power iteration on the random matrix,
    which aligns the right factor with the dominant row space
qlp
    two column-pivoted QR factorizations (applied through the
    transpose), fully deterministic
rsvd
    randomized truncated SVD with the same power iteration and, at equal
    seed, the same Gaussian draw as power_urv restricted to its first
    ``ell`` columns

``truncate`` turns any URV factorization into its rank-k approximant
factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .core import EPS, householder_qr, cpqr, svd, validated_matrix
from .random import RngSeed, as_seed, gaussian_matrix


class RankCollapseError(Exception):
    """The power-iteration sample matrix collapsed to exact zero."""


@dataclass(frozen=True)
class Provenance:
    """How a factorization was produced."""

    algorithm: str
    q: int = 0
    reorth: bool = True
    seed: RngSeed | None = None
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class UrvFactorization:
    """``a = u @ r @ v.T`` with orthonormal u, orthogonal v, triangular r."""

    u: np.ndarray  # (m, n), orthonormal columns
    r: np.ndarray  # (n, n), upper-triangular
    v: np.ndarray  # (n, n), orthogonal
    provenance: Provenance


@dataclass(frozen=True)
class RsvdFactorization:
    """Approximate truncated SVD ``a ~= u @ diag(sigma) @ v.T``."""

    u: np.ndarray      # (m, ell)
    sigma: np.ndarray  # (ell,), nonincreasing
    v: np.ndarray      # (n, ell)
    ell: int
    provenance: Provenance


def _orth(y, warnings: list[str], stage: str):
    """Orthonormal basis of the columns of y via unpivoted QR.

    A numerically rank-deficient sample is kept (with a recorded
    warning); only exact total collapse is an error.
    """
    scale = np.linalg.norm(y)
    if scale == 0.0:
        raise RankCollapseError(f"sample matrix collapsed to zero during {stage}")
    res = householder_qr(y)
    deficient = int(np.sum(np.diagonal(res.r) < EPS * scale))
    if deficient:
        warnings.append(f"{stage}: {deficient} numerically rank-deficient sample columns")
    return res.q


def _powered_sample(a, g, q: int, reorth: bool, warnings: list[str]):
    """Apply q power-iteration steps (A^T A)^q to the sample ``g``."""
    y = g
    if reorth:
        for i in range(q):
            y = _orth(a @ y, warnings, f"power step {i + 1} (after A)")
            y = _orth(a.T @ y, warnings, f"power step {i + 1} (after A^T)")
    else:
        for _ in range(q):
            y = a.T @ (a @ y)
        if q and not y.any():
            raise RankCollapseError(
                "power iteration underflowed to the zero matrix; "
                "re-enable reorthonormalization or reduce q"
            )
    return y


def power_urv(a, q: int = 1, reorth: bool = True, seed=0) -> UrvFactorization:
    """Randomized URV factorization with power iteration.

    Draws an n x n Gaussian matrix G, applies q steps of power iteration
    ``Y = (A^T A)^q G``, takes V as the Q factor of an unpivoted QR of
    Y, and factors ``A V = U R`` with a second unpivoted QR.  With
    ``reorth`` the sample is reorthonormalized after every application
    of A and of A^T, which is the stabilized form of subspace iteration;
    without it the iterated products are formed directly.

    ``q = 0`` is exactly ``ddh_urv`` (same Gaussian draw, same code
    path, bit-identical factors).

    Parameters
    ----------
    a : array_like, shape (m, n)
        Matrix to factor, m >= n.
    q : int
        Number of power-iteration steps, >= 0.
    reorth : bool
        Reorthonormalize between applications of A and A^T.
    seed : int or RngSeed
        Key of the Gaussian draw.

    Returns
    -------
    UrvFactorization
    """
    a = validated_matrix(a)
    m, n = a.shape
    if m < n:
        raise ValueError(f"power_urv requires rows >= cols, got {m}x{n}")
    if q < 0:
        raise ValueError("q must be nonnegative")
    seed = as_seed(seed)
    warnings: list[str] = []
    g = gaussian_matrix(n, n, seed)
    y = _powered_sample(a, g, q, reorth, warnings)
    v = _orth(y, warnings, "right-factor QR")
    u, r = householder_qr(a @ v)
    prov = Provenance("powerurv", q=q, reorth=reorth, seed=seed, warnings=tuple(warnings))
    return UrvFactorization(u, r, v, prov)


def ddh_urv(a, seed=0) -> UrvFactorization:
    """URV factorization by QR against a random Haar matrix.

    Equivalent to ``power_urv`` with ``q = 0``; kept as its own entry
    point because it needs no parameters beyond the seed.
    """
    f = power_urv(a, q=0, reorth=True, seed=seed)
    return replace(f, provenance=replace(f.provenance, algorithm="ddh"))


def qlp(a) -> UrvFactorization:
    """Stewart's QLP factorization, deterministic.

    A column-pivoted QR of ``a.T`` gives ``a.T = Q1 R1 P1^T``; a second
    column-pivoted QR of ``(R1 P1^T)^T`` gives ``Q2 R2 P2^T``.  Then
    ``u = Q2``, ``r = R2`` and ``v = Q1 P2`` form a URV factorization
    whose diagonal of ``r`` tracks the singular values far better than
    a single pivoted QR.
    """
    a = validated_matrix(a)
    m, n = a.shape
    if m < n:
        raise ValueError(f"qlp requires rows >= cols, got {m}x{n}")
    first = cpqr(a.T)
    b = np.empty((m, n))
    b[first.perm, :] = first.r.T
    second = cpqr(b)
    v = first.q[:, second.perm]
    prov = Provenance("qlp", seed=None)
    return UrvFactorization(second.q, second.r, v, prov)


def rsvd(a, ell: int, q: int = 1, reorth: bool = True, seed=0) -> RsvdFactorization:
    """Randomized SVD of rank ``ell`` with power iteration.

    The sample ``Y = A (A^T A)^q G`` is built with the same
    reorthonormalization policy as ``power_urv`` and, at equal seed,
    with the same Gaussian draw restricted to its first ``ell`` columns
    (the column-major fill of ``gaussian_matrix`` guarantees the prefix
    matches bit for bit).  An unpivoted QR of Y gives the range basis Q;
    a deterministic SVD of ``Q^T A`` (computed on its tall transpose)
    yields the singular values and right vectors, and ``u = Q W`` lifts
    the left vectors back.
    """
    a = validated_matrix(a)
    m, n = a.shape
    if not 1 <= ell < min(m, n):
        raise ValueError(f"ell must satisfy 1 <= ell < min(m, n) = {min(m, n)}, got {ell}")
    if q < 0:
        raise ValueError("q must be nonnegative")
    seed = as_seed(seed)
    warnings: list[str] = []
    g = gaussian_matrix(n, ell, seed)
    z = _powered_sample(a, g, q, reorth, warnings)
    qq = _orth(a @ z, warnings, "range-finder QR")
    tall = (qq.T @ a).T
    w_t = svd(tall)  # tall = v_r diag(sigma) w^T
    u = qq @ w_t.v
    prov = Provenance("rsvd", q=q, reorth=reorth, seed=seed, warnings=tuple(warnings))
    return RsvdFactorization(u, w_t.sigma, w_t.u, ell, prov)


def truncate(f: UrvFactorization, k: int):
    """Rank-k approximant factors of a URV factorization.

    Returns ``(u_k, m_k)`` with ``u_k = u[:, :k]`` (m x k) and
    ``m_k = r[:k, :] @ v.T`` (k x n), so the approximant is their
    product.  ``k = 0`` yields empty factors (the zero approximant).
    """
    n = f.r.shape[0]
    if not 0 <= k <= n:
        raise ValueError(f"truncation rank must be in [0, {n}], got {k}")
    return f.u[:, :k], f.r[:k, :] @ f.v.T

"""Rank-revealing quality metrics and cost models.

Per-rank approximation error curves in spectral and Frobenius norms,
block singular-value (reveal) profiles, orthogonal-projection errors,
the numerical check of the PowerURV/RSVD range-equivalence, and
leading-order flop models for each algorithm.

Spectral norms of residuals are computed exactly (SVD of the residual
matrix) rather than estimated; at the few-hundred scale this package
targets, the exact reference removes estimator noise from every
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import singular_values, validated_matrix
from .factorizations import RsvdFactorization, UrvFactorization, power_urv, rsvd

CSV_HEADER = "k,abs_sp,abs_fro,rel_sp,rel_fro,sigma_ref,smin_r11,smax_r22"

GEMM_QR = "gemm_qr"
CPQR_CLASS = "cpqr"
LEVEL2 = "level2"


@dataclass(frozen=True)
class ErrorProfile:
    """Per-rank truncation errors of one factorization.

    Row k holds the errors of the rank-k approximant, k = 0..n;
    ``sigma_ref[k]`` is the optimal spectral error sigma_{k+1}(a)
    (0 at k = n).
    """

    k: np.ndarray
    abs_spectral: np.ndarray
    abs_frobenius: np.ndarray
    rel_spectral: np.ndarray
    rel_frobenius: np.ndarray
    sigma_ref: np.ndarray
    algorithm: str


@dataclass(frozen=True)
class RevealProfile:
    """Per-rank block singular values of a triangular factor.

    ``smin_r11[k]`` is the smallest singular value of the leading k x k
    block of r (0 at k = 0) and ``smax_r22[k]`` the largest singular
    value of the trailing block (0 at k = n).
    """

    k: np.ndarray
    smin_r11: np.ndarray
    smax_r22: np.ndarray
    sigma_ref: np.ndarray


@dataclass(frozen=True)
class FlopModel:
    """Leading-order flop count of one algorithm, split by kernel class."""

    algorithm: str
    m: int
    n: int
    q: int
    by_class: dict

    @property
    def total(self) -> float:
        return float(sum(self.by_class.values()))


def reference_singular_values(a) -> np.ndarray:
    """sigma_{k+1}(a) for k = 0..n: the singular values padded with 0."""
    a = validated_matrix(a)
    s = singular_values(a)
    return np.concatenate([s, np.zeros(a.shape[1] + 1 - s.size)])


def _low_rank_errors(a, u, rows, kmax):
    """Spectral/Frobenius residual norms of u[:, :k] @ rows[:k, :], k = 0..kmax.

    Ranks beyond ``u.shape[1]`` reuse the full approximant (a truncated
    SVD of rank ell cannot be extended past ell).
    """
    resid = a.astype(np.float64, copy=True)
    lim = u.shape[1]
    sp = np.empty(kmax + 1)
    fro = np.empty(kmax + 1)
    for k in range(kmax + 1):
        sp[k] = np.linalg.svd(resid, compute_uv=False)[0]
        fro[k] = np.linalg.norm(resid)
        if k < min(kmax, lim):
            resid -= np.outer(u[:, k], rows[k, :])
    return sp, fro


def error_profile(a, f, sigma_ref=None) -> ErrorProfile:
    """Truncation error curves of a URV or RSVD factorization.

    Parameters
    ----------
    a : array_like
        The factored matrix.
    f : UrvFactorization or RsvdFactorization
        Factorization to evaluate.
    sigma_ref : array, optional
        Cached ``reference_singular_values(a)``; recomputed if absent.

    Returns
    -------
    ErrorProfile
        Absolute and relative errors for every k = 0..n.  Relative
        errors are scaled by the matching norm of ``a``.
    """
    a = validated_matrix(a)
    n = a.shape[1]
    if sigma_ref is None:
        sigma_ref = reference_singular_values(a)
    if isinstance(f, RsvdFactorization):
        u, rows = f.u, f.sigma[:, None] * f.v.T
        algorithm = f.provenance.algorithm
    else:
        u, rows = f.u, f.r @ f.v.T
        algorithm = f.provenance.algorithm
    sp, fro = _low_rank_errors(a, u, rows, n)
    return ErrorProfile(
        k=np.arange(n + 1),
        abs_spectral=sp,
        abs_frobenius=fro,
        rel_spectral=sp / sp[0],
        rel_frobenius=fro / fro[0],
        sigma_ref=sigma_ref,
        algorithm=algorithm,
    )


def reveal_profile(f, a=None, sigma_ref=None) -> RevealProfile:
    """Block singular-value profile of the triangular factor of ``f``.

    For an RSVD factorization the factor is the diagonal of its singular
    values.  ``sigma_ref`` requires either ``a`` or a cached array.
    """
    if sigma_ref is None:
        if a is None:
            raise ValueError("reveal_profile needs a or sigma_ref")
        sigma_ref = reference_singular_values(a)
    if isinstance(f, RsvdFactorization):
        n = sigma_ref.size - 1
        smin = np.zeros(n + 1)
        smax = np.zeros(n + 1)
        smin[1 : f.ell + 1] = f.sigma
        smax[: f.ell] = f.sigma
        return RevealProfile(np.arange(n + 1), smin, smax, sigma_ref)
    r = f.r
    n = r.shape[0]
    smin = np.zeros(n + 1)
    smax = np.zeros(n + 1)
    for k in range(1, n + 1):
        smin[k] = np.linalg.svd(r[:k, :k], compute_uv=False)[-1]
    for k in range(n):
        smax[k] = np.linalg.svd(r[k:, k:], compute_uv=False)[0]
    return RevealProfile(np.arange(n + 1), smin, smax, sigma_ref)


def projection_error(a, u, k: int) -> float:
    """Spectral norm of ``a - u[:, :k] @ u[:, :k].T @ a``."""
    a = validated_matrix(a)
    if not 0 <= k <= u.shape[1]:
        raise ValueError(f"k must be in [0, {u.shape[1]}], got {k}")
    uk = u[:, :k]
    resid = a - uk @ (uk.T @ a)
    return float(np.linalg.svd(resid, compute_uv=False)[0])


def projection_error_curve(a, u, kmax=None) -> np.ndarray:
    """``projection_error(a, u, k)`` for every k = 0..kmax at once."""
    a = validated_matrix(a)
    if kmax is None:
        kmax = u.shape[1]
    resid = a.astype(np.float64, copy=True)
    errs = np.empty(kmax + 1)
    for k in range(kmax + 1):
        errs[k] = np.linalg.svd(resid, compute_uv=False)[0]
        if k < kmax:
            uk = u[:, k]
            resid -= np.outer(uk, uk @ a)
    return errs


def lemma_check(a, ell: int, q: int = 1, seed=0, reorth: bool = True) -> float:
    """Discrepancy between the PowerURV and RSVD rank-ell projectors.

    Runs both algorithms on the shared Gaussian draw and returns

        || U(:,1:ell) U(:,1:ell)^T A  -  U_rsvd U_rsvd^T A ||_F / ||A||_F

    which is zero in exact arithmetic whenever the powered sample has
    full rank.  A numerically rank-deficient sample is recorded in the
    factorization provenances; the value is still returned but is not
    meaningful in that case.
    """
    a = validated_matrix(a)
    purv = power_urv(a, q=q, reorth=reorth, seed=seed)
    rs = rsvd(a, ell, q=q, reorth=reorth, seed=seed)
    up = purv.u[:, :ell]
    diff = up @ (up.T @ a) - rs.u @ (rs.u.T @ a)
    return float(np.linalg.norm(diff) / np.linalg.norm(a))


def _flop_terms(algorithm: str, m: int, n: int, q: int):
    m, n, q = int(m), int(n), int(q)
    m2n, mn2, n3 = m * m * n, m * n * n, n**3
    if algorithm in ("powerurv", "ddh"):
        if algorithm == "ddh":
            q = 0
        return {
            GEMM_QR: 2 * (2 * q + 1) * m2n
            + (4 * q + 2) * mn2
            - Fraction(2, 3) * (2 * q + 1) * n3
        }
    if algorithm == "qlp":
        return {CPQR_CLASS: 2 * mn2 + Fraction(2, 3) * n3}
    if algorithm == "randutv":
        return {GEMM_QR: (5 + 2 * q) * mn2 - Fraction(1, 3) * (3 + 2 * q) * n3}
    if algorithm == "golub_reinsch":
        return {LEVEL2: 4 * m2n + 8 * mn2 + 9 * n3}
    raise ValueError(f"unknown algorithm tag {algorithm!r}")


def flop_estimate(algorithm: str, m: int, n: int, q: int = 0) -> FlopModel:
    """Leading-order flop model of one algorithm.

    Counts are exact polynomial evaluations (internally rational) with a
    breakdown by kernel class: matrix-multiply/unpivoted-QR work, CPQR
    work, and other level-2-bound work.

    Tags: ``powerurv``, ``ddh``, ``qlp``, ``randutv``, ``golub_reinsch``.
    """
    if not (m >= n >= 1):
        raise ValueError(f"need m >= n >= 1, got m={m} n={n}")
    if q < 0:
        raise ValueError("q must be nonnegative")
    if algorithm == "ddh":
        q = 0
    terms = _flop_terms(algorithm, m, n, q)
    by_class = {GEMM_QR: 0.0, CPQR_CLASS: 0.0, LEVEL2: 0.0}
    for cls, val in terms.items():
        by_class[cls] = float(val)
    return FlopModel(algorithm, m, n, q, by_class)


def write_profile_csv(path, err: ErrorProfile, rev: RevealProfile) -> None:
    """Write the combined per-rank profile in the library CSV schema.

    One row per k with 17 significant digits per value; the header is
    fixed so downstream plotting scripts can rely on it.
    """
    cols = (
        err.k,
        err.abs_spectral,
        err.abs_frobenius,
        err.rel_spectral,
        err.rel_frobenius,
        err.sigma_ref,
        rev.smin_r11,
        rev.smax_r22,
    )
    with open(path, "w", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for i in range(err.k.size):
            row = [str(int(err.k[i]))] + [f"{c[i]:.17g}" for c in cols[1:]]
            fh.write(",".join(row) + "\n")

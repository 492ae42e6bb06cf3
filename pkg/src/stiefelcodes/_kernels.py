"""Hot numeric kernels: pairwise chordal distances and the smoothed min-distance
objective used by the optimizer.

Two interchangeable backends are provided:

* numba: typed loops compiled with ``@njit(cache=True, nogil=True)``; used by
  default when numba imports.
* numpy: vectorized einsum fallback; selected by setting ``STIEFEL_NUMBA=0``
  in the environment (or automatically when numba is unavailable).

Each backend is deterministic run-to-run.  The two backends may disagree in
the last few ulps because their summation orders differ, so cross-backend
comparisons must be tolerance-based.  All kernels take an (n, d, r)
complex128 C-contiguous array.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAVE_NUMBA = False


def _coerce(mats: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(mats, dtype=np.complex128)


# ---------------------------------------------------------------------------
# pure-numpy backend


def pairwise_sq_dists_numpy(mats: np.ndarray) -> np.ndarray:
    """Symmetric (n, n) matrix of squared Frobenius distances."""
    mats = _coerce(mats)
    g = np.einsum("iab,jab->ij", mats.conj(), mats).real
    sq = np.einsum("iab,iab->i", mats.conj(), mats).real
    out = sq[:, None] + sq[None, :] - 2.0 * g
    np.maximum(out, 0.0, out=out)
    np.fill_diagonal(out, 0.0)
    return out


def gram_real_trace_numpy(mats: np.ndarray) -> np.ndarray:
    """(n, n) matrix of Re Tr(X_i* X_j)."""
    mats = _coerce(mats)
    return np.einsum("iab,jab->ij", mats.conj(), mats).real


def _softmin_terms_numpy(mats: np.ndarray, beta: float):
    dsq = pairwise_sq_dists_numpy(mats)
    n = dsq.shape[0]
    iu = np.triu_indices(n, 1)
    vals = dsq[iu]
    m = float(vals.min())
    expw = np.zeros_like(dsq)
    expw[iu] = np.exp(-beta * (vals - m))
    expw += expw.T
    tot = float(expw[iu].sum())
    return m, expw, tot


def softmin_value_numpy(mats: np.ndarray, beta: float) -> float:
    """Smooth lower proxy for the minimum squared pairwise distance.

    Equals min_{i<j} d2_ij - log(sum_{i<j} exp(-beta (d2_ij - min))) / beta.
    """
    m, _, tot = _softmin_terms_numpy(mats, beta)
    return m - math.log(tot) / beta


def softmin_value_grad_numpy(mats: np.ndarray, beta: float):
    """Value and ambient (Euclidean) gradient of the smoothed objective."""
    mats = _coerce(mats)
    m, expw, tot = _softmin_terms_numpy(mats, beta)
    w = expw / tot
    row = w.sum(axis=1)
    grad = 2.0 * (row[:, None, None] * mats - np.einsum("ij,jab->iab", w, mats))
    return m - math.log(tot) / beta, grad


# ---------------------------------------------------------------------------
# numba backend

if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _nb_pairwise_sq_dists(mats):
        n, d, r = mats.shape
        out = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                s = 0.0
                for a in range(d):
                    for b in range(r):
                        z = mats[i, a, b] - mats[j, a, b]
                        s += z.real * z.real + z.imag * z.imag
                out[i, j] = s
                out[j, i] = s
        return out

    @njit(cache=True, nogil=True)
    def _nb_gram_real_trace(mats):
        n, d, r = mats.shape
        out = np.empty((n, n))
        for i in range(n):
            for j in range(i, n):
                s = 0.0
                for a in range(d):
                    for b in range(r):
                        x = mats[i, a, b]
                        y = mats[j, a, b]
                        s += x.real * y.real + x.imag * y.imag
                out[i, j] = s
                out[j, i] = s
        return out

    @njit(cache=True, nogil=True)
    def _nb_softmin_value(mats, beta):
        dsq = _nb_pairwise_sq_dists(mats)
        n = dsq.shape[0]
        m = np.inf
        for i in range(n):
            for j in range(i + 1, n):
                if dsq[i, j] < m:
                    m = dsq[i, j]
        tot = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                tot += math.exp(-beta * (dsq[i, j] - m))
        return m - math.log(tot) / beta

    @njit(cache=True, nogil=True)
    def _nb_softmin_value_grad(mats, beta):
        n, d, r = mats.shape
        dsq = _nb_pairwise_sq_dists(mats)
        m = np.inf
        for i in range(n):
            for j in range(i + 1, n):
                if dsq[i, j] < m:
                    m = dsq[i, j]
        tot = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                tot += math.exp(-beta * (dsq[i, j] - m))
        grad = np.zeros((n, d, r), dtype=np.complex128)
        for i in range(n):
            for j in range(i + 1, n):
                w = math.exp(-beta * (dsq[i, j] - m)) / tot
                for a in range(d):
                    for b in range(r):
                        g = 2.0 * w * (mats[i, a, b] - mats[j, a, b])
                        grad[i, a, b] += g
                        grad[j, a, b] -= g
        return m - math.log(tot) / beta, grad

    def pairwise_sq_dists_numba(mats):
        return _nb_pairwise_sq_dists(_coerce(mats))

    def gram_real_trace_numba(mats):
        return _nb_gram_real_trace(_coerce(mats))

    def softmin_value_numba(mats, beta):
        return float(_nb_softmin_value(_coerce(mats), float(beta)))

    def softmin_value_grad_numba(mats, beta):
        f, g = _nb_softmin_value_grad(_coerce(mats), float(beta))
        return float(f), g


USE_NUMBA = HAVE_NUMBA and os.environ.get("STIEFEL_NUMBA", "1") != "0"

if USE_NUMBA:
    pairwise_sq_dists = pairwise_sq_dists_numba
    gram_real_trace = gram_real_trace_numba
    softmin_value = softmin_value_numba
    softmin_value_grad = softmin_value_grad_numba
else:
    pairwise_sq_dists = pairwise_sq_dists_numpy
    gram_real_trace = gram_real_trace_numpy
    softmin_value = softmin_value_numpy
    softmin_value_grad = softmin_value_grad_numpy


def backend() -> str:
    """Name of the active kernel backend, 'numba' or 'numpy'."""
    return "numba" if USE_NUMBA else "numpy"

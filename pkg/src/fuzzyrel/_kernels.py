"""Numeric kernels for max-min algebra.

Each kernel has a pure-numpy implementation and, when numba is importable,
an ``@njit`` twin. The public names ``maxmin`` and ``residual_bound``
dispatch to the numba versions unless the environment variable
``FUZZYREL_DISABLE_NUMBA`` is set to a non-empty value other than ``0``. Both paths return identical arrays: max and min only select
input values, so there is no rounding to disagree about.
"""
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

_flag = os.environ.get("FUZZYREL_DISABLE_NUMBA", "").strip()
USE_NUMBA = numba is not None and _flag in ("", "0")
BACKEND = "numba" if USE_NUMBA else "numpy"


def maxmin_numpy(p, q):
    # (n, m, 1) vs (1, m, s) -> reduce over the shared axis
    return np.minimum(p[:, :, None], q[None, :, :]).max(axis=1)


def residual_bound_numpy(q, r, tol):
    """Row-wise meet of the min-residuum: out[j] = min_k (1 if q[j,k] <= r[k] + tol else r[k])."""
    resid = np.where(q <= r[None, :] + tol, 1.0, r[None, :])
    return resid.min(axis=1)


if numba is not None:

    @numba.njit(cache=True)
    def maxmin_numba(p, q):
        n, m = p.shape
        s = q.shape[1]
        out = np.zeros((n, s))
        for i in range(n):
            for k in range(s):
                best = 0.0
                for j in range(m):
                    a = p[i, j]
                    b = q[j, k]
                    v = a if a < b else b
                    if v > best:
                        best = v
                out[i, k] = best
        return out

    @numba.njit(cache=True)
    def residual_bound_numba(q, r, tol):
        m, s = q.shape
        out = np.ones(m)
        for j in range(m):
            for k in range(s):
                if q[j, k] > r[k] + tol and r[k] < out[j]:
                    out[j] = r[k]
        return out

else:  # pragma: no cover
    maxmin_numba = residual_bound_numba = None


def _as_f64(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def maxmin(p, q):
    """Max-min product of an (n, m) and an (m, s) array."""
    p, q = _as_f64(p), _as_f64(q)
    if USE_NUMBA:
        return maxmin_numba(p, q)
    return maxmin_numpy(p, q)


def residual_bound(q, r, tol=0.0):
    q, r = _as_f64(q), _as_f64(r)
    if USE_NUMBA:
        return residual_bound_numba(q, r, float(tol))
    return residual_bound_numpy(q, r, float(tol))


"""Hot inner loops: numba-compiled kernels with a pure-numpy fallback.

The backend is chosen once at import from ROTAPERM_BACKEND:

    ROTAPERM_BACKEND=numba   force numba (error if unavailable)
    ROTAPERM_BACKEND=numpy   force the pure-numpy path
    unset                    numba when importable, else numpy

Both implementations of every kernel are importable directly (suffixes
_numba / _numpy) so the benchmark can time them against each other; the
unsuffixed names dispatch to the selected backend.  Results are
bit-identical across backends.
"""

from __future__ import annotations

import os

import numpy as np

_REQUESTED = os.environ.get("ROTAPERM_BACKEND", "").strip().lower()

if _REQUESTED not in ("", "numba", "numpy"):
    raise ValueError(f"ROTAPERM_BACKEND must be 'numba' or 'numpy', got {_REQUESTED!r}")

_njit = None
if _REQUESTED in ("", "numba"):
    try:
        from numba import njit as _njit
    except ImportError:
        if _REQUESTED == "numba":
            raise
        _njit = None

BACKEND = "numba" if _njit is not None else "numpy"


# ---------------------------------------------------------------------------
# first-collision scan over packed images
# ---------------------------------------------------------------------------

def _scan_bijection_py(packed: np.ndarray, space: int):
    seen = np.zeros(space, dtype=np.int32)  # stores index+1; space <= 2^27
    for i in range(packed.shape[0]):
        v = packed[i]
        j = seen[v]
        if j != 0:
            return False, np.int64(i), np.int64(j - 1)
        seen[v] = i + 1
    return True, np.int64(-1), np.int64(-1)


def scan_bijection_numpy(packed: np.ndarray, space: int):
    """First collision in scan order via a stable sort (no Python loop).

    Returns (bijective, collide_index, first_index): the smallest index
    whose image already occurred, and where it first occurred.
    """
    order = np.argsort(packed, kind="stable")
    dup = packed[order[1:]] == packed[order[:-1]]
    if not dup.any():
        return True, -1, -1
    second = order[1:][dup]
    first = order[:-1][dup]
    k = int(np.argmin(second))
    return False, int(second[k]), int(first[k])


if _njit is not None:
    scan_bijection_numba = _njit(cache=True)(_scan_bijection_py)
else:  # pragma: no cover - exercised only without numba
    def scan_bijection_numba(packed, space):
        raise RuntimeError("numba backend unavailable")


def scan_bijection(packed: np.ndarray, space: int):
    if BACKEND == "numba":
        return scan_bijection_numba(packed, space)
    return scan_bijection_numpy(packed, space)


# ---------------------------------------------------------------------------
# coefficient extraction for the pointwise-interpolated lift
# ---------------------------------------------------------------------------
# Inputs are in discrete-log form over the multiplicative group of size
# group = 2^(3m) - 1: logv[j] is the log of the value at the point with
# log j (or -1 for value 0), exp_table[i] is the element with log i.
# Output c[k] (1 <= k <= group-1) is the coefficient of X^k; slots 0 and
# group are left zero for the caller.

def _interp_coeffs_py(logv: np.ndarray, exp_table: np.ndarray, group: int) -> np.ndarray:
    coeffs = np.zeros(group + 1, dtype=np.uint32)
    for k in range(1, group):
        e = group - k
        acc = 0
        for j in range(group):
            lv = logv[j]
            if lv >= 0:
                acc ^= exp_table[(lv + j * e) % group]
        coeffs[k] = acc
    return coeffs


def interp_coeffs_numpy(logv: np.ndarray, exp_table: np.ndarray, group: int) -> np.ndarray:
    coeffs = np.zeros(group + 1, dtype=np.uint32)
    valid = logv >= 0
    if not valid.any():
        return coeffs
    jv = np.nonzero(valid)[0].astype(np.int64)
    lv = logv[valid].astype(np.int64)
    for k in range(1, group):
        e = group - k
        coeffs[k] = np.bitwise_xor.reduce(exp_table[(lv + jv * e) % group])
    return coeffs


if _njit is not None:
    interp_coeffs_numba = _njit(cache=True)(_interp_coeffs_py)
else:  # pragma: no cover
    def interp_coeffs_numba(logv, exp_table, group):
        raise RuntimeError("numba backend unavailable")


def interp_coeffs(logv: np.ndarray, exp_table: np.ndarray, group: int) -> np.ndarray:
    if BACKEND == "numba":
        return interp_coeffs_numba(logv, exp_table, group)
    return interp_coeffs_numpy(logv, exp_table, group)


# ---------------------------------------------------------------------------
# sparse-polynomial evaluation at every nonzero point
# ---------------------------------------------------------------------------
# Terms are (exponent, log coefficient) pairs; output v[j] is the value
# at the point with discrete log j (the zero point is the caller's).

def _eval_terms_py(term_exp: np.ndarray, term_logc: np.ndarray,
                   exp_table: np.ndarray, group: int) -> np.ndarray:
    values = np.zeros(group, dtype=np.uint32)
    for j in range(group):
        acc = 0
        for i in range(term_exp.shape[0]):
            acc ^= exp_table[(term_logc[i] + term_exp[i] * j) % group]
        values[j] = acc
    return values


def eval_terms_numpy(term_exp: np.ndarray, term_logc: np.ndarray,
                     exp_table: np.ndarray, group: int) -> np.ndarray:
    values = np.zeros(group, dtype=np.uint32)
    j = np.arange(group, dtype=np.int64)
    for e, lc in zip(term_exp.tolist(), term_logc.tolist()):
        values ^= exp_table[(lc + e * j) % group]
    return values


if _njit is not None:
    eval_terms_numba = _njit(cache=True)(_eval_terms_py)
else:  # pragma: no cover
    def eval_terms_numba(term_exp, term_logc, exp_table, group):
        raise RuntimeError("numba backend unavailable")


def eval_terms(term_exp: np.ndarray, term_logc: np.ndarray,
               exp_table: np.ndarray, group: int) -> np.ndarray:
    if term_exp.shape[0] == 0:
        return np.zeros(group, dtype=np.uint32)
    if BACKEND == "numba":
        return eval_terms_numba(term_exp, term_logc, exp_table, group)
    return eval_terms_numpy(term_exp, term_logc, exp_table, group)

"""State-vector gate kernels.

Two interchangeable backends: numba-jitted loops and a vectorized pure
numpy path.  The numpy path is selected when numba is unavailable or when
GROUPQFT_PURE_NUMPY=1 is set in the environment (the benchmark script
times one against the other).

Kernel contract: amplitudes of basis states whose target bit is 0 and
whose control bits match are combined 2x2 with their partner; everything
else passes through untouched.
"""

from __future__ import annotations

import os

import numpy as np
from numpy.typing import NDArray

try:
    from numba import njit
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - mirror environment dependent
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and os.environ.get("GROUPQFT_PURE_NUMPY", "") != "1"

__all__ = [
    "HAS_NUMBA",
    "USE_NUMBA",
    "apply_2x2",
    "apply_2x2_numpy",
    "apply_perm",
    "apply_perm_numpy",
]


def _apply_2x2_loop(state, u00, u01, u10, u11, tbit, pos_mask, neg_mask):
    for i in range(state.shape[0]):
        if i & tbit:
            continue
        if (i & pos_mask) == pos_mask and (i & neg_mask) == 0:
            j = i | tbit
            a0 = state[i]
            a1 = state[j]
            state[i] = u00 * a0 + u01 * a1
            state[j] = u10 * a0 + u11 * a1
    return state


def _apply_perm_loop(state, out, index_map):
    for i in range(state.shape[0]):
        out[index_map[i]] = state[i]
    return out


if HAS_NUMBA:
    _apply_2x2_jit = njit(cache=True)(_apply_2x2_loop)
    _apply_perm_jit = njit(cache=True)(_apply_perm_loop)


def apply_2x2_numpy(state: NDArray[np.complex128], u: NDArray[np.complex128],
                    tbit: int, pos_mask: int, neg_mask: int
                    ) -> NDArray[np.complex128]:
    idx = np.arange(state.shape[0])
    sel = ((idx & tbit) == 0) \
        & ((idx & pos_mask) == pos_mask) \
        & ((idx & neg_mask) == 0)
    i0 = idx[sel]
    i1 = i0 | tbit
    a0 = state[i0]
    a1 = state[i1]
    out = state.copy()
    out[i0] = u[0, 0] * a0 + u[0, 1] * a1
    out[i1] = u[1, 0] * a0 + u[1, 1] * a1
    return out


def apply_perm_numpy(state: NDArray[np.complex128],
                     index_map: NDArray[np.int64]) -> NDArray[np.complex128]:
    out = np.empty_like(state)
    out[index_map] = state
    return out


def apply_2x2(state: NDArray[np.complex128], u: NDArray[np.complex128],
              tbit: int, pos_mask: int, neg_mask: int
              ) -> NDArray[np.complex128]:
    """Controlled 2x2 update; returns a new state vector."""
    if USE_NUMBA:
        return _apply_2x2_jit(state.copy(), complex(u[0, 0]), complex(u[0, 1]),
                              complex(u[1, 0]), complex(u[1, 1]),
                              tbit, pos_mask, neg_mask)
    return apply_2x2_numpy(state, u, tbit, pos_mask, neg_mask)


def apply_perm(state: NDArray[np.complex128],
               index_map: NDArray[np.int64]) -> NDArray[np.complex128]:
    """Relabel amplitudes, out[index_map[i]] = state[i]."""
    if USE_NUMBA:
        return _apply_perm_jit(state, np.empty_like(state), index_map)
    return apply_perm_numpy(state, index_map)


def apply_2x2_numba(state, u, tbit, pos_mask, neg_mask):
    """Jitted twin of apply_2x2_numpy, exposed for the benchmark."""
    if not HAS_NUMBA:
        raise RuntimeError("numba is not installed")
    return _apply_2x2_jit(state.copy(), complex(u[0, 0]), complex(u[0, 1]),
                          complex(u[1, 0]), complex(u[1, 1]),
                          tbit, pos_mask, neg_mask)


def apply_perm_numba(state, index_map):
    if not HAS_NUMBA:
        raise RuntimeError("numba is not installed")
    return _apply_perm_jit(state, np.empty_like(state), index_map)

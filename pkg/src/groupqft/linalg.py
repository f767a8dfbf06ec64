"""Dense complex linear algebra helpers used by the synthesis pipeline.

Everything works on plain ``numpy`` arrays of dtype complex128.  The only
convention worth spelling out is the permutation-matrix one: ``perm_matrix``
maps basis column ``e_j`` to ``e_{sigma(j)}`` (the 1 of column ``j`` sits in
row ``sigma(j)``), so ``perm_matrix`` is a left-action homomorphism:
``perm_matrix(sigma) @ perm_matrix(tau) == perm_matrix(sigma o tau)``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from numpy.typing import NDArray

Matrix = NDArray[np.complex128]

__all__ = [
    "Matrix",
    "matmul",
    "kron",
    "direct_sum",
    "dft",
    "perm_matrix",
    "is_unitary",
]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product with a shape check that fails loudly."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"incompatible shapes {a.shape} x {b.shape}")
    return a @ b


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, first factor on the most significant index."""
    return np.kron(np.asarray(a, dtype=np.complex128),
                   np.asarray(b, dtype=np.complex128))


def direct_sum(blocks: Sequence[Matrix]) -> Matrix:
    """Block-diagonal matrix assembled from ``blocks`` in order.

    Args:
        blocks: square matrices; the result has dimension equal to the sum
            of the block dimensions.
    """
    mats = [np.asarray(m, dtype=np.complex128) for m in blocks]
    if not mats:
        raise ValueError("direct_sum of no blocks")
    for m in mats:
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"direct_sum needs square blocks, got {m.shape}")
    dim = sum(m.shape[0] for m in mats)
    out = np.zeros((dim, dim), dtype=np.complex128)
    offset = 0
    for m in mats:
        d = m.shape[0]
        out[offset:offset + d, offset:offset + d] = m
        offset += d
    return out


def dft(n: int) -> Matrix:
    """Unitary discrete Fourier matrix of size n.

    Entry (j, k) is omega^(j*k) / sqrt(n) with omega = exp(+2 pi i / n).
    ``dft(2)`` is the Hadamard gate.
    """
    if n < 1:
        raise ValueError(f"dft size must be positive, got {n}")
    idx = np.arange(n)
    return np.exp(2j * np.pi * np.outer(idx, idx) / n) / np.sqrt(n)


def perm_matrix(sigma: Sequence[int]) -> Matrix:
    """Permutation matrix of sigma in one-line notation.

    Column j carries its 1 in row sigma[j], i.e. e_j is mapped to
    e_{sigma[j]}.
    """
    sigma = list(sigma)
    m = len(sigma)
    if sorted(sigma) != list(range(m)):
        raise ValueError("sigma is not a permutation of 0..m-1")
    out = np.zeros((m, m), dtype=np.complex128)
    out[sigma, np.arange(m)] = 1.0
    return out


def is_unitary(a: Matrix, eps: float = 1e-10) -> bool:
    """True when max-entry defect of a a^dagger from the identity is < eps."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    defect = a @ a.conj().T - np.eye(a.shape[0])
    return bool(np.max(np.abs(defect)) < eps)

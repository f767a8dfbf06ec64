"""Circuits realizing each factor of the transform.

Wire layout for the non-abelian families: the group element x^a y^b is
the basis state with a on qubits 0..n-1 (qubit 0 = least significant bit
of a) and b on qubit n.  Cyclic transforms act on n wires.

Every builder returns gates whose product equals the corresponding
matrix factor from `synthesis` exactly (up to rounding); the tests
enforce this against `synthesis.assemble`.
"""

from __future__ import annotations

import numpy as np

from .circuit import (
    Circuit,
    CNot,
    H_MATRIX,
    Local,
    MultiControlled,
    QubitPerm,
    X_MATRIX,
    Z_MATRIX,
    controlled,
    embed,
)
from .groups import Family, GroupSpec

__all__ = [
    "qft_cyclic_circuit",
    "increment_circuit",
    "reorder_circuit",
    "twiddle_circuit",
    "equalizer_circuit",
    "qft_circuit",
]


def _phase(k: int) -> np.ndarray:
    """diag(1, exp(2 pi i / 2**k))."""
    return np.diag([1.0, np.exp(2j * np.pi / (1 << k))]).astype(np.complex128)


def qft_cyclic_circuit(n: int) -> Circuit:
    """Fourier transform on Z_{2^n}: Hadamard-plus-phase cascade followed
    by a bit reversal."""
    if n < 1:
        raise ValueError("need n >= 1")
    gates: list = []
    for j in range(n - 1, -1, -1):
        gates.append(Local(H_MATRIX, j))
        for k in range(j - 1, -1, -1):
            gates.append(MultiControlled(_phase(j - k + 1), ((k, True),), j))
    if n >= 2:
        gates.append(QubitPerm(tuple(reversed(range(n)))))
    return Circuit(n, tuple(gates))


def increment_circuit(n: int) -> Circuit:
    """|v> -> |v + 1 mod 2^n>: carry cascade from the top bit down."""
    if n < 1:
        raise ValueError("need n >= 1")
    gates: list = []
    for j in range(n - 1, 0, -1):
        if j == 1:
            gates.append(CNot(0, 1))
        else:
            gates.append(MultiControlled(
                X_MATRIX, tuple((k, True) for k in range(j)), j))
    gates.append(Local(X_MATRIX, 0))
    return Circuit(n, tuple(gates))


def reorder_circuit(G: GroupSpec) -> Circuit:
    """Width-n circuit for the character reordering P.

    The base order (0, 2^{n-1}, 1, -1, 2, -2, ...) is a decimation: cycle
    the qubits down, then on the odd branch (old top bit set) complement
    and add one, i.e. negate mod 2^n.  The qp order is a single qubit
    swap, and qd corrects the base order with one CNOT and one Toffoli.
    """
    if G.is_abelian:
        raise ValueError("nothing to reorder for the cyclic family")
    n = G.n
    if G.family is Family.QP:
        sigma = list(range(n))
        sigma[0], sigma[n - 1] = n - 1, 0
        return Circuit(n, (QubitPerm(tuple(sigma)),))
    gates: list = [QubitPerm((n - 1,) + tuple(range(n - 1)))]
    gates += [CNot(n - 1, j) for j in range(n - 1)]
    head = Circuit(n, tuple(gates)) + controlled(increment_circuit(n - 1))
    if G.family is not Family.QD:
        return head
    return head + Circuit(n, (
        CNot(0, n - 2),
        MultiControlled(X_MATRIX, ((0, True), (n - 2, True)), n - 1),
    ))


def twiddle_circuit(G: GroupSpec) -> Circuit:
    """Width-(n+1) circuit for D = I (+) rho_bar(y).

    On the y = 1 half each conjugate pair needs [[0, 1], [rho_i(y^2), 0]]:
    an X on qubit 0 wherever some higher bit is set, with the extendable
    positions (0 and 1 in the base layout) masked out.  The quaternion
    sign rho_i(y^2) = (-1)^i is a Z picked out by q0 = 0, q1 = 1.
    """
    if G.is_abelian:
        raise ValueError("the cyclic transform has no twiddle factor")
    n, y = G.n, G.n
    if G.family is Family.QP:
        return Circuit(n + 1, (
            MultiControlled(X_MATRIX, ((y, True), (n - 1, True)), 0),))
    negatives = tuple((q, False) for q in range(1, n))
    gates: list = [
        CNot(y, 0),
        MultiControlled(X_MATRIX, ((y, True),) + negatives, 0),
    ]
    if G.family is Family.QUATERNION:
        gates.insert(0, MultiControlled(Z_MATRIX, ((y, True), (0, False)), 1))
    return Circuit(n + 1, tuple(gates))


def equalizer_circuit(G: GroupSpec) -> Circuit:
    """Width-(n+1) circuit for C: -1 on the second coordinate of every
    conjugate pair in the y = 1 half, the Z-analogue of the twiddle."""
    if G.is_abelian:
        raise ValueError("the cyclic transform has no equalizer factor")
    n, y = G.n, G.n
    if G.family is Family.QP:
        return Circuit(n + 1, (
            MultiControlled(Z_MATRIX, ((y, True), (n - 1, True)), 0),))
    negatives = tuple((q, False) for q in range(1, n))
    return Circuit(n + 1, (
        MultiControlled(Z_MATRIX, ((y, True),), 0),
        MultiControlled(Z_MATRIX, ((y, True),) + negatives, 0),
    ))


def qft_circuit(G: GroupSpec) -> Circuit:
    """Full transform circuit; gate product equals assemble(G).b.

    Matrix order B = (I (x) A P) D (H_y) C reads temporally as C first,
    then the Hadamard on the y wire, the twiddle, the reordering, and the
    cyclic transform on the x register.
    """
    if G.is_abelian:
        if G.n < 1:
            raise ValueError("the synthesis entry point needs n >= 1")
        return qft_cyclic_circuit(G.n)
    w = G.n + 1
    return (
        equalizer_circuit(G)
        + Circuit(w, (Local(H_MATRIX, G.n),))
        + twiddle_circuit(G)
        + embed(reorder_circuit(G), w)
        + embed(qft_cyclic_circuit(G.n), w)
    )

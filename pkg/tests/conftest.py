"""Shared randomized-input helpers."""

from __future__ import annotations

import numpy as np

from groupqft.circuit import Circuit, CNot, Local, MultiControlled, QubitPerm


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_circuit(rng: np.random.Generator, width: int,
                   n_gates: int) -> Circuit:
    gates = []
    for _ in range(n_gates):
        kind = rng.integers(0, 4)
        if kind == 0:
            gates.append(Local(random_unitary(rng, 2),
                               int(rng.integers(0, width))))
        elif kind == 1 and width >= 2:
            c, t = rng.choice(width, size=2, replace=False)
            gates.append(CNot(int(c), int(t)))
        elif kind == 2 and width >= 2:
            k = int(rng.integers(1, width))
            qubits = rng.choice(width, size=k + 1, replace=False)
            controls = tuple(
                (int(q), bool(rng.integers(0, 2))) for q in qubits[:-1])
            gates.append(MultiControlled(random_unitary(rng, 2), controls,
                                         int(qubits[-1])))
        else:
            gates.append(QubitPerm(tuple(int(s) for s in rng.permutation(width))))
    return Circuit(width, tuple(gates))

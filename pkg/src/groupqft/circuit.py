"""Gate-level circuit representation.

A circuit is a list of gates on `width` qubits; qubit 0 is the least
significant bit of the basis-state index.  Gates are listed in temporal
order, so the matrix of the whole circuit multiplies them in reverse:
gates (g1, g2, ..., gm) realize G_m ... G_2 G_1.

Two independent evaluation routes are kept deliberately separate:
`to_matrix` assembles dense gate matrices, while `apply_to_state` runs
the bit-mask kernels from `_kernels`.  Tests play one against the other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .linalg import Matrix, is_unitary, kron

GATE_EPS = 1e-12

X_MATRIX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
Z_MATRIX = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
H_MATRIX = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / np.sqrt(2.0)


def _check_2x2_unitary(u: Matrix) -> None:
    if u.shape != (2, 2):
        raise ValueError(f"gate unitary must be 2x2, got {u.shape}")
    if not is_unitary(u, GATE_EPS):
        raise ValueError("gate matrix is not unitary")


@dataclass(frozen=True, eq=False)
class Local:
    """Single-qubit gate u on `target`."""

    u: Matrix
    target: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", np.asarray(self.u, dtype=np.complex128))
        _check_2x2_unitary(self.u)


@dataclass(frozen=True)
class CNot:
    control: int
    target: int

    def __post_init__(self) -> None:
        if self.control == self.target:
            raise ValueError("control and target coincide")


@dataclass(frozen=True, eq=False)
class MultiControlled:
    """u on `target`, applied when every control matches its polarity.

    Controls are (qubit, polarity) pairs; True fires on |1>, False on |0>.
    """

    u: Matrix
    controls: tuple[tuple[int, bool], ...]
    target: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", np.asarray(self.u, dtype=np.complex128))
        object.__setattr__(self, "controls", tuple(
            (int(q), bool(p)) for q, p in self.controls))
        _check_2x2_unitary(self.u)
        if not self.controls:
            raise ValueError("need at least one control; use Local instead")
        qubits = [q for q, _ in self.controls]
        if len(set(qubits)) != len(qubits):
            raise ValueError("duplicate control qubits")
        if self.target in qubits:
            raise ValueError("target cannot also be a control")


@dataclass(frozen=True)
class QubitPerm:
    """Relabel wires: qubit q is routed to position sigma[q]."""

    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", tuple(int(s) for s in self.sigma))
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise ValueError(f"not a permutation: {self.sigma}")


Gate = Local | CNot | MultiControlled | QubitPerm


def _gate_qubits(g: Gate) -> tuple[int, ...]:
    if isinstance(g, Local):
        return (g.target,)
    if isinstance(g, CNot):
        return (g.control, g.target)
    if isinstance(g, MultiControlled):
        return tuple(q for q, _ in g.controls) + (g.target,)
    return tuple(range(len(g.sigma)))


@dataclass(frozen=True, eq=False)
class Circuit:
    width: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.width < 1:
            raise ValueError("circuit needs at least one qubit")
        for g in self.gates:
            if isinstance(g, QubitPerm) and len(g.sigma) != self.width:
                raise ValueError("permutation length differs from width")
            for q in _gate_qubits(g):
                if not 0 <= q < self.width:
                    raise ValueError(f"qubit {q} outside width {self.width}")

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.width != other.width:
            raise ValueError("cannot concatenate circuits of different widths")
        return Circuit(self.width, self.gates + other.gates)

    def __len__(self) -> int:
        return len(self.gates)


def _perm_index_map(sigma: tuple[int, ...]) -> np.ndarray:
    idx = np.arange(1 << len(sigma), dtype=np.int64)
    out = np.zeros_like(idx)
    for q, s in enumerate(sigma):
        out |= ((idx >> q) & 1) << s
    return out


def _control_masks(controls: tuple[tuple[int, bool], ...]) -> tuple[int, int]:
    pos = 0
    neg = 0
    for q, p in controls:
        if p:
            pos |= 1 << q
        else:
            neg |= 1 << q
    return pos, neg


def gate_matrix(g: Gate, width: int) -> Matrix:
    """Dense matrix of a single gate on `width` qubits."""
    dim = 1 << width
    if isinstance(g, Local):
        lo = np.eye(1 << g.target, dtype=np.complex128)
        hi = np.eye(1 << (width - 1 - g.target), dtype=np.complex128)
        return kron(hi, kron(g.u, lo))
    if isinstance(g, QubitPerm):
        index_map = _perm_index_map(g.sigma)
        out = np.zeros((dim, dim), dtype=np.complex128)
        out[index_map, np.arange(dim)] = 1.0
        return out
    if isinstance(g, CNot):
        u, controls, target = X_MATRIX, ((g.control, True),), g.target
    else:
        u, controls, target = g.u, g.controls, g.target
    pos, neg = _control_masks(controls)
    tbit = 1 << target
    out = np.eye(dim, dtype=np.complex128)
    for i in range(dim):
        if i & tbit or (i & pos) != pos or (i & neg) != 0:
            continue
        j = i | tbit
        out[i, i] = u[0, 0]
        out[i, j] = u[0, 1]
        out[j, i] = u[1, 0]
        out[j, j] = u[1, 1]
    return out


def to_matrix(c: Circuit) -> Matrix:
    out = np.eye(1 << c.width, dtype=np.complex128)
    for g in c.gates:
        out = gate_matrix(g, c.width) @ out
    return out


def apply_to_state(c: Circuit, state: np.ndarray) -> np.ndarray:
    """Run the circuit on a state vector of length 2**width."""
    state = np.asarray(state, dtype=np.complex128)
    if state.shape != (1 << c.width,):
        raise ValueError(
            f"state has shape {state.shape}, expected ({1 << c.width},)")
    for g in c.gates:
        if isinstance(g, QubitPerm):
            state = _kernels.apply_perm(state, _perm_index_map(g.sigma))
            continue
        if isinstance(g, Local):
            u, pos, neg, target = g.u, 0, 0, g.target
        elif isinstance(g, CNot):
            u, target = X_MATRIX, g.target
            pos, neg = 1 << g.control, 0
        else:
            u, target = g.u, g.target
            pos, neg = _control_masks(g.controls)
        state = _kernels.apply_2x2(state, u, 1 << target, pos, neg)
    return state


def _transpositions(sigma: tuple[int, ...]) -> list[tuple[int, int]]:
    """Temporal swap sequence realizing sigma (earliest swap first)."""
    swaps: list[tuple[int, int]] = []
    seen = [False] * len(sigma)
    for start in range(len(sigma)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        nxt = sigma[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = sigma[nxt]
        # cycle (c0 c1 ... ck-1) = (c0 c1)(c1 c2)...(ck-2 ck-1), rightmost first
        for a, b in zip(reversed(cycle[:-1]), reversed(cycle[1:])):
            swaps.append((a, b))
    return swaps


def controlled(c: Circuit) -> Circuit:
    """Circuit for I (+) U with a fresh control on the new top qubit."""
    ctrl = c.width
    gates: list[Gate] = []
    for g in c.gates:
        if isinstance(g, Local):
            gates.append(MultiControlled(g.u, ((ctrl, True),), g.target))
        elif isinstance(g, CNot):
            gates.append(MultiControlled(
                X_MATRIX, ((ctrl, True), (g.control, True)), g.target))
        elif isinstance(g, MultiControlled):
            gates.append(MultiControlled(
                g.u, g.controls + ((ctrl, True),), g.target))
        else:
            # swap(a, b) = three alternating CNOTs, each picking up the control
            for a, b in _transpositions(g.sigma):
                for ctl, tgt in ((a, b), (b, a), (a, b)):
                    gates.append(MultiControlled(
                        X_MATRIX, ((ctrl, True), (ctl, True)), tgt))
    return Circuit(c.width + 1, tuple(gates))


def embed(c: Circuit, width: int) -> Circuit:
    """Reinterpret the circuit on a wider register, upper qubits idle."""
    if width < c.width:
        raise ValueError("target width smaller than circuit width")
    gates = tuple(
        QubitPerm(g.sigma + tuple(range(c.width, width)))
        if isinstance(g, QubitPerm) else g
        for g in c.gates)
    return Circuit(width, gates)


@dataclass(frozen=True)
class CostModel:
    """Weights per gate kind.

    A multi-controlled gate with k controls on an m-qubit circuit costs
    w(1) = 1, w(k) = k for 2 <= k < m - 1, and w(m-1) = m**2; the jump
    reflects that a full-register control needs either an ancilla or a
    quadratic cascade.  A qubit permutation costs 3 per transposition.
    """

    local: float = 1.0
    cnot: float = 1.0
    transposition: float = 3.0

    def multi_controlled(self, k: int, width: int) -> float:
        if k == 1:
            return 1.0
        if k == width - 1:
            return float(width * width)
        return float(k)


DEFAULT_COST = CostModel()


def gate_cost(g: Gate, width: int, model: CostModel = DEFAULT_COST) -> float:
    if isinstance(g, Local):
        return model.local
    if isinstance(g, CNot):
        return model.cnot
    if isinstance(g, MultiControlled):
        return model.multi_controlled(len(g.controls), width)
    return model.transposition * len(_transpositions(g.sigma))


def cost(c: Circuit, model: CostModel = DEFAULT_COST) -> float:
    return sum(gate_cost(g, c.width, model) for g in c.gates)

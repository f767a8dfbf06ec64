"""Benchmark: numba kernels vs the pure numpy path.

Applies the full dihedral transform circuit to a random state vector
with both backends.  GROUPQFT_PURE_NUMPY only switches the dispatch in
groupqft._kernels, so here we call the backend functions directly.

Usage: python benchmarks/bench_kernels.py [n_max]
"""

import sys
import time

import numpy as np

from groupqft import Family, GroupSpec, qft_circuit
from groupqft._kernels import (
    HAS_NUMBA,
    apply_2x2_numba,
    apply_2x2_numpy,
    apply_perm_numba,
    apply_perm_numpy,
)
from groupqft.circuit import (
    CNot,
    Local,
    QubitPerm,
    X_MATRIX,
    _control_masks,
    _perm_index_map,
)


def run(circuit, state, apply_2x2, apply_perm):
    for g in circuit.gates:
        if isinstance(g, QubitPerm):
            state = apply_perm(state, _perm_index_map(g.sigma))
        elif isinstance(g, Local):
            state = apply_2x2(state, g.u, 1 << g.target, 0, 0)
        elif isinstance(g, CNot):
            state = apply_2x2(state, X_MATRIX, 1 << g.target, 1 << g.control, 0)
        else:
            pos, neg = _control_masks(g.controls)
            state = apply_2x2(state, g.u, 1 << g.target, pos, neg)
    return state


def time_backend(circuit, state, apply_2x2, apply_perm, repeats=5):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = run(circuit, state, apply_2x2, apply_perm)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 16
    rng = np.random.default_rng(7)
    print(f"{'n':>3} {'width':>5} {'dim':>8} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for n in range(8, n_max + 1, 2):
        c = qft_circuit(GroupSpec(Family.DIHEDRAL, n))
        dim = 1 << c.width
        state = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        state /= np.linalg.norm(state)
        t_np, out_np = time_backend(c, state, apply_2x2_numpy, apply_perm_numpy)
        if HAS_NUMBA:
            # first call pays compilation; time_backend keeps the best of 5
            t_nb, out_nb = time_backend(c, state, apply_2x2_numba, apply_perm_numba)
            agree = np.max(np.abs(out_np - out_nb))
            assert agree < 1e-12, agree
            print(f"{n:3d} {c.width:5d} {dim:8d} {t_np:10.4f} {t_nb:10.4f} "
                  f"{t_np / t_nb:7.2f}x")
        else:
            print(f"{n:3d} {c.width:5d} {dim:8d} {t_np:10.4f} {'-':>10} {'-':>8}")
    if not HAS_NUMBA:
        print("numba not installed; only the numpy path was timed")
    return 0


if __name__ == "__main__":
    sys.exit(main())

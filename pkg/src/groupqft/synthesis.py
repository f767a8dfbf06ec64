"""Fourier transform assembly for the supported group families.

For the non-abelian families the transform on C[G] is built from the
one-step recursion over the index-2 normal subgroup <x>:

    B = (I_2 (x) A P M) . D . (DFT_2 (x) I_{2^n}) . C

where A = DFT_{2^n} diagonalizes the regular representation of <x>, P
reorders its characters so that y-conjugate pairs sit next to each other
(extendable ones first), M equalizes conjugate summands (here always the
identity, every summand has degree 1), D is the twiddle I (+) rho_bar(y),
and C flips signs so equivalent summands of the result come out equal.

The abelian base case returns B = DFT_{2^n} directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import Family, GroupSpec, cyclic_irreps, extendable_indices, induce
from .linalg import Matrix, dft, direct_sum, is_unitary, kron, perm_matrix

__all__ = [
    "DecompositionResult",
    "reorder_sequence",
    "reorder_permutation",
    "equalizing_conjugator",
    "twiddle",
    "equalizer",
    "assemble",
]


@dataclass(frozen=True, eq=False)
class DecompositionResult:
    """Transform matrix b together with the factors that produced it.

    Recomputing (I_2 (x) a p m) d (dft(2) (x) I) c reproduces b exactly up
    to rounding; for the cyclic family the factors degenerate to
    b = a = DFT_{2^n} with p = m = d = c = I.

    irrep_census lists (degree, count) pairs; extendables holds the
    character indices of <x> fixed by y-conjugation (empty for cyclic).
    sequence records which character of <x> each reordered position holds.
    """

    b: Matrix
    a: Matrix
    p: Matrix
    m: Matrix
    d: Matrix
    c: Matrix
    irrep_census: tuple[tuple[int, int], ...]
    extendables: frozenset[int]
    sequence: tuple[int, ...]


def reorder_sequence(G: GroupSpec) -> tuple[int, ...]:
    """Target character order: position k of the reordered direct sum
    holds rho_{seq[k]}.

    Extendable characters come first, then each y-conjugate pair (i, i*r)
    adjacently.  The concrete order is chosen so the permutation has a
    cheap circuit:

      dihedral/quaternion: 0, 2^(n-1), 1, -1, 2, -2, ...   (decimation)
      qp: swap of the lowest and highest index bits
      qd: the dihedral order pulled back through v -> v + 2^(n-2)*(v odd),
          which conjugates y-conjugation into plain negation
    """
    if G.is_abelian:
        raise ValueError("nothing to reorder for the cyclic family")
    m = G.cyclic_order
    half = m // 2
    if G.family in (Family.DIHEDRAL, Family.QUATERNION):
        seq = [0, half]
        for k in range(1, half):
            seq += [k, m - k]
        return tuple(seq)
    if G.family is Family.QP:
        top = G.n - 1
        out = []
        for j in range(m):
            low, high = j & 1, (j >> top) & 1
            s = (j & ~(1 | (1 << top))) | high | (low << top)
            out.append(s)
        return tuple(out)
    # qd
    quarter = m // 4
    base = reorder_sequence(GroupSpec(Family.DIHEDRAL, G.n))
    return tuple((v - quarter) % m if v & 1 else v for v in base)


def reorder_permutation(G: GroupSpec) -> Matrix:
    """Permutation matrix P with (A P)^-1 phi_N(x) (A P) reordered per
    reorder_sequence."""
    return perm_matrix(reorder_sequence(G))


def equalizing_conjugator(G: GroupSpec) -> Matrix:
    """M of the recursion.  Equal conjugate summands of degree 1 are
    already identical matrices, so M is the identity; the degree
    assumption is asserted rather than trusted."""
    if G.is_abelian:
        raise ValueError("no conjugate summands for the cyclic family")
    irreps = cyclic_irreps(G.n)
    if any(rho.degree != 1 for rho in irreps):
        raise AssertionError("expected only degree-1 summands")
    return np.eye(G.cyclic_order, dtype=np.complex128)


def _layout(G: GroupSpec) -> list[tuple[int, int]]:
    """(position, character) walk of the reordered sum: one entry per
    summand, extendables of width 1 and conjugate pairs of width 2."""
    seq = reorder_sequence(G)
    ext = extendable_indices(G)
    out = []
    pos = 0
    while pos < len(seq):
        i = seq[pos]
        out.append((pos, i))
        pos += 1 if i in ext else 2
    return out


def twiddle(G: GroupSpec) -> Matrix:
    """D = rho_bar(1) (+) rho_bar(y) in the reordered layout.

    Extendable characters contribute the extension scalar epsilon with
    epsilon^2 = rho_i(y^2); rho_i(y^2) = 1 for every family here (y^2 is
    either trivial or x^(2^(n-1)) evaluated at an even character), so
    epsilon = 1 throughout.  Conjugate pairs contribute the y-image of the
    induced representation, [[0, 1], [rho_i(y^2), 0]].
    """
    m = G.cyclic_order
    ext = extendable_indices(G)
    irreps = cyclic_irreps(G.n)
    transversal = (G.identity(), G.y())
    blocks = []
    for pos, i in _layout(G):
        if i in ext:
            eps_sq = irreps[i].evaluate(
                G.multiply(G.y(), G.y()))[0, 0]
            if abs(eps_sq - 1.0) > 1e-12:
                raise AssertionError(
                    f"rho_{i}(y^2) = {eps_sq}, expected 1")
            blocks.append(np.eye(1, dtype=np.complex128))
        else:
            blocks.append(induce(irreps[i], G, transversal).images["y"])
    block1 = direct_sum(blocks)
    return direct_sum([np.eye(m, dtype=np.complex128), block1])


def equalizer(G: GroupSpec) -> Matrix:
    """C: identity except a -1 on the second coordinate of every conjugate
    pair in the lambda_1 half, which maps lambda_1 . (rho_i induced) back
    to the induced representation itself."""
    m = G.cyclic_order
    ext = extendable_indices(G)
    diag = np.ones(2 * m, dtype=np.complex128)
    for pos, i in _layout(G):
        if i not in ext:
            diag[m + pos + 1] = -1.0
    return np.diag(diag)


def assemble(G: GroupSpec) -> DecompositionResult:
    """Build the full transform for G.

    Returns a DecompositionResult whose b satisfies: conjugating the right
    regular representation of G by b is block-diagonal with the census
    pattern, equivalent summands equal.
    """
    m = G.cyclic_order
    if G.is_abelian:
        if G.n < 1:
            raise ValueError("the synthesis entry point needs n >= 1")
        b = dft(m)
        eye = np.eye(m, dtype=np.complex128)
        return DecompositionResult(
            b=b, a=b, p=eye, m=eye, d=eye, c=eye,
            irrep_census=((1, m),),
            extendables=frozenset(),
            sequence=tuple(range(m)),
        )
    a = dft(m)
    p = reorder_permutation(G)
    mm = equalizing_conjugator(G)
    d = twiddle(G)
    c = equalizer(G)
    b = kron(np.eye(2), a @ p @ mm) @ d @ kron(dft(2), np.eye(m)) @ c
    if not is_unitary(b, 1e-10):
        raise AssertionError("assembled transform failed the unitarity check")
    ext = extendable_indices(G)
    n_pairs = (m - len(ext)) // 2
    return DecompositionResult(
        b=b, a=a, p=p, m=mm, d=d, c=c,
        irrep_census=((1, 2 * len(ext)), (2, n_pairs)),
        extendables=ext,
        sequence=reorder_sequence(G),
    )

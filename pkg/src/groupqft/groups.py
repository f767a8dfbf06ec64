"""The five group families and their representation-theoretic plumbing.

Groups of order 2^(n+1) containing the cyclic Z_{2^n} = <x> as a normal
subgroup of index 2, presented as <x, y | x^(2^n) = 1, y^2 = x^q,
y^-1 x y = x^r>:

    dihedral     r = -1,          q = 0
    quaternion   r = -1,          q = 2^(n-1)
    qp           r = 2^(n-1) + 1, q = 0
    qd           r = 2^(n-1) - 1, q = 0

plus the abelian base case Z_{2^n} = <x> itself.  Every element has the
normal form x^a y^b with 0 <= a < 2^n and b in {0, 1}.  All four values of
r satisfy r^2 = 1 mod 2^n, which the multiplication below relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .linalg import Matrix

__all__ = [
    "Family",
    "GroupElement",
    "GroupSpec",
    "Representation",
    "regular_representation",
    "cyclic_irreps",
    "inner_conjugate",
    "induce",
    "extendable_indices",
]


class Family(Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    QUATERNION = "quaternion"
    QP = "qp"
    QD = "qd"


@dataclass(frozen=True)
class GroupElement:
    """Normal form x^a y^b."""

    a: int
    b: int


@dataclass(frozen=True)
class GroupSpec:
    family: Family
    n: int

    def __post_init__(self) -> None:
        # n = 0 is the trivial group, admitted only so it can serve as an
        # induction domain; the synthesis entry points start at n = 1.
        least = 0 if self.family is Family.CYCLIC else 3
        if self.n < least:
            raise ValueError(
                f"{self.family.value} needs n >= {least}, got {self.n}")

    @property
    def cyclic_order(self) -> int:
        """Order 2^n of the normal subgroup <x>."""
        return 1 << self.n

    @property
    def order(self) -> int:
        return self.cyclic_order if self.is_abelian else 2 * self.cyclic_order

    @property
    def is_abelian(self) -> bool:
        return self.family is Family.CYCLIC

    @property
    def conj_exponent(self) -> int:
        """r with y^-1 x y = x^r."""
        half = self.cyclic_order // 2
        if self.family is Family.CYCLIC:
            raise ValueError("cyclic group has no conjugating generator")
        if self.family in (Family.DIHEDRAL, Family.QUATERNION):
            return self.cyclic_order - 1
        return half + 1 if self.family is Family.QP else half - 1

    @property
    def y_square_exponent(self) -> int:
        """q with y^2 = x^q (2^(n-1) for the quaternion family, else 0)."""
        if self.family is Family.QUATERNION:
            return self.cyclic_order // 2
        return 0

    def element(self, a: int, b: int = 0) -> GroupElement:
        if b not in (0, 1) or (self.is_abelian and b != 0):
            raise ValueError(f"invalid y-exponent {b}")
        return GroupElement(a % self.cyclic_order, b)

    def identity(self) -> GroupElement:
        return GroupElement(0, 0)

    def x(self) -> GroupElement:
        return GroupElement(1, 0)

    def y(self) -> GroupElement:
        if self.is_abelian:
            raise ValueError("cyclic group has no generator y")
        return GroupElement(0, 1)

    def generators(self) -> tuple[GroupElement, ...]:
        return (self.x(),) if self.is_abelian else (self.x(), self.y())

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """(x^a1 y^b1)(x^a2 y^b2) in normal form.

        Moving x^a2 through y uses y x = x^r y (valid because r^2 = 1), and
        y^2 collapses to x^q.
        """
        m = self.cyclic_order
        if g.b == 0:
            return GroupElement((g.a + h.a) % m, h.b)
        a = (g.a + h.a * self.conj_exponent) % m
        if h.b == 1:
            return GroupElement((a + self.y_square_exponent) % m, 0)
        return GroupElement(a, 1)

    def inverse(self, g: GroupElement) -> GroupElement:
        m = self.cyclic_order
        if g.b == 0:
            return GroupElement(-g.a % m, 0)
        r, q = self.conj_exponent, self.y_square_exponent
        return GroupElement((q - g.a * r) % m, 1)

    def conjugate(self, g: GroupElement, t: GroupElement) -> GroupElement:
        """t g t^-1."""
        return self.multiply(self.multiply(t, g), self.inverse(t))

    def all_elements(self) -> tuple[GroupElement, ...]:
        """Fixed enumeration order: x^0..x^(2^n - 1), then their y-coset."""
        m = self.cyclic_order
        out = [GroupElement(a, 0) for a in range(m)]
        if not self.is_abelian:
            out += [GroupElement(a, 1) for a in range(m)]
        return tuple(out)


@dataclass(frozen=True, eq=False)
class Representation:
    """Matrix representation given by its generator images.

    ``images`` maps "x" (and "y" for the non-abelian families) to square
    complex matrices; arbitrary elements are evaluated through the normal
    form, rho(x^a y^b) = rho(x)^a rho(y)^b.
    """

    group: GroupSpec
    degree: int
    images: Mapping[str, Matrix]

    def __post_init__(self) -> None:
        for name, m in self.images.items():
            m = np.asarray(m)
            if m.shape != (self.degree, self.degree):
                raise ValueError(
                    f"image of {name} has shape {m.shape}, expected "
                    f"({self.degree}, {self.degree})")

    def evaluate(self, g: GroupElement) -> Matrix:
        out = np.linalg.matrix_power(np.asarray(self.images["x"]), g.a)
        if g.b:
            out = out @ np.asarray(self.images["y"])
        return out.astype(np.complex128)

    def relation_defect(self) -> float:
        """Max entrywise violation of the defining relators.

        Checks rho(x)^(2^n) = 1 and, when a y image is present,
        rho(y)^2 = rho(x^q) and rho(y)^-1 rho(x) rho(y) = rho(x^r).
        """
        G = self.group
        eye = np.eye(self.degree)
        rx = np.asarray(self.images["x"])
        defect = np.max(np.abs(
            np.linalg.matrix_power(rx, G.cyclic_order) - eye))
        if "y" in self.images:
            ry = np.asarray(self.images["y"])
            defect = max(defect, np.max(np.abs(
                ry @ ry - np.linalg.matrix_power(rx, G.y_square_exponent))))
            defect = max(defect, np.max(np.abs(
                rx @ ry - ry @ np.linalg.matrix_power(rx, G.conj_exponent))))
        return float(defect)


def regular_representation(G: GroupSpec) -> Representation:
    """Right regular representation in the all_elements basis.

    phi(g)[u, v] = 1 iff L[u] g = L[v]; with the perm_matrix convention
    this makes phi a homomorphism, phi(g) phi(h) = phi(g h).
    """
    L = G.all_elements()
    index = {h: i for i, h in enumerate(L)}

    def image(g: GroupElement) -> Matrix:
        m = np.zeros((len(L), len(L)), dtype=np.complex128)
        for u, h in enumerate(L):
            m[u, index[G.multiply(h, g)]] = 1.0
        return m

    images = {"x": image(G.x())}
    if not G.is_abelian:
        images["y"] = image(G.y())
    return Representation(group=G, degree=len(L), images=images)


def cyclic_irreps(n: int) -> list[Representation]:
    """The 2^n characters rho_i of Z_{2^n}, rho_i(x) = omega^i.

    omega = exp(+2 pi i / 2^n), matching the dft sign convention.
    """
    N = GroupSpec(Family.CYCLIC, n)
    omega = np.exp(2j * np.pi / N.cyclic_order)
    return [
        Representation(group=N, degree=1,
                       images={"x": np.array([[omega ** i]])})
        for i in range(N.cyclic_order)
    ]


def inner_conjugate(rho: Representation, ambient: GroupSpec,
                    t: GroupElement) -> Representation:
    """rho^t with rho^t(g) = rho(t g t^-1), conjugation taken in ambient.

    rho may live on the cyclic normal subgroup or on ambient itself; for
    the former, normality keeps t x t^-1 inside the subgroup.
    """
    step = ambient.cyclic_order // rho.group.cyclic_order
    images: dict[str, Matrix] = {}
    for name in rho.images:
        g = ambient.element(step, 0) if name == "x" else ambient.y()
        c = ambient.conjugate(g, t)
        images[name] = _evaluate_embedded(rho, ambient, c)
    return Representation(group=rho.group, degree=rho.degree, images=images)


def _evaluate_embedded(rho: Representation, ambient: GroupSpec,
                       g: GroupElement) -> Matrix:
    """Evaluate rho at an ambient element that must lie in rho's domain.

    The domain Z_{2^m} embeds in ambient's <x> as the powers of
    x^(2^(n-m)); membership requires b = 0 and divisibility.
    """
    if rho.group.family is not Family.CYCLIC or rho.group.order == ambient.order:
        return rho.evaluate(g)
    step = ambient.cyclic_order // rho.group.cyclic_order
    if g.b != 0 or g.a % step != 0:
        raise ValueError(f"element x^{g.a} y^{g.b} outside the domain subgroup")
    return rho.evaluate(GroupElement(g.a // step, 0))


def _in_subgroup(rho: Representation, ambient: GroupSpec,
                 g: GroupElement) -> bool:
    if rho.group.family is not Family.CYCLIC or rho.group.order == ambient.order:
        return True
    step = ambient.cyclic_order // rho.group.cyclic_order
    return g.b == 0 and g.a % step == 0


def induce(rho: Representation, G: GroupSpec,
           T: Sequence[GroupElement]) -> Representation:
    """Induction rho up to G along the right transversal T.

    The image of g is the |T| x |T| block matrix with block (i, j) equal to
    rho(t_i g t_j^-1) when that product lies in the subgroup and 0
    otherwise.  With T = (1, y) and a degree-1 rho_i this gives
    x -> diag(rho_i(x), rho_i(x^r)) and y -> [[0, 1], [rho_i(y^2), 0]].
    """
    p = len(T)
    if p * rho.group.order != G.order:
        raise ValueError(
            f"transversal length {p} does not match index "
            f"{G.order // rho.group.order}")
    cosets = set()
    for t in T:
        # canonical coset tag: the set N t as a frozenset of normal forms
        coset = frozenset(
            G.multiply(h, t)
            for h in G.all_elements()
            if _in_subgroup(rho, G, h))
        cosets.add(coset)
    if len(cosets) != p:
        raise ValueError("T is not a transversal: cosets collide")

    d = rho.degree

    def image(g: GroupElement) -> Matrix:
        out = np.zeros((p * d, p * d), dtype=np.complex128)
        for i, ti in enumerate(T):
            for j, tj in enumerate(T):
                w = G.multiply(G.multiply(ti, g), G.inverse(tj))
                if _in_subgroup(rho, G, w):
                    out[i * d:(i + 1) * d, j * d:(j + 1) * d] = \
                        _evaluate_embedded(rho, G, w)
        return out

    images = {"x": image(G.x())}
    if not G.is_abelian:
        images["y"] = image(G.y())
    return Representation(group=G, degree=p * d, images=images)


def extendable_indices(G: GroupSpec) -> frozenset[int]:
    """Indices i with rho_i invariant under conjugation by y, i r = i mod 2^n.

    Dihedral, quaternion and qd share {0, 2^(n-1)}; for qp every even i
    extends.
    """
    if G.is_abelian:
        raise ValueError("extendability is about the non-abelian families")
    m = G.cyclic_order
    r = G.conj_exponent
    return frozenset(i for i in range(m) if (i * r) % m == i)

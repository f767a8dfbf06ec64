from __future__ import annotations

import numpy as np
import pytest

from groupqft.groups import (
    Family,
    GroupElement,
    GroupSpec,
    Representation,
    cyclic_irreps,
    extendable_indices,
    induce,
    inner_conjugate,
    regular_representation,
)
from groupqft.linalg import dft

NONABELIAN = [Family.DIHEDRAL, Family.QUATERNION, Family.QP, Family.QD]


def test_spec_validation():
    with pytest.raises(ValueError):
        GroupSpec(Family.DIHEDRAL, 2)
    with pytest.raises(ValueError):
        GroupSpec(Family.CYCLIC, -1)
    with pytest.raises(ValueError):
        GroupSpec(Family.CYCLIC, 3).y()
    with pytest.raises(ValueError):
        GroupSpec(Family.CYCLIC, 3).element(1, 1)


def test_orders_and_exponents():
    G = GroupSpec(Family.QUATERNION, 3)
    assert G.cyclic_order == 8 and G.order == 16
    assert G.conj_exponent == 7 and G.y_square_exponent == 4
    assert GroupSpec(Family.QP, 3).conj_exponent == 5
    assert GroupSpec(Family.QD, 4).conj_exponent == 7
    assert GroupSpec(Family.CYCLIC, 5).order == 32


def test_multiplication_examples():
    D = GroupSpec(Family.DIHEDRAL, 3)
    xy = D.multiply(D.x(), D.y())
    assert xy == GroupElement(1, 1)
    # (x y) x = x y x = x x^-1 y = y
    assert D.multiply(xy, D.x()) == GroupElement(0, 1)

    Q = GroupSpec(Family.QUATERNION, 3)
    assert Q.multiply(Q.y(), Q.y()) == GroupElement(4, 0)

    QP = GroupSpec(Family.QP, 3)
    yxy = QP.multiply(QP.multiply(QP.y(), QP.x()), QP.y())
    assert yxy == GroupElement(5, 0)


@pytest.mark.parametrize("family", [Family.CYCLIC] + NONABELIAN)
def test_group_axioms_exhaustive_n3(family):
    G = GroupSpec(family, 3)
    elems = G.all_elements()
    e = G.identity()
    for g in elems:
        assert G.multiply(g, e) == g and G.multiply(e, g) == g
        assert G.multiply(g, G.inverse(g)) == e
        assert G.multiply(G.inverse(g), g) == e
    for g in elems:
        for h in elems:
            gh = G.multiply(g, h)
            assert gh in elems
            for k in elems[:4]:  # full triple loop lives in the acceptance suite
                assert G.multiply(gh, k) == G.multiply(g, G.multiply(h, k))


@pytest.mark.parametrize("family", [Family.DIHEDRAL, Family.QP, Family.QD])
@pytest.mark.parametrize("n", [3, 4])
def test_split_families_act_affinely(family, n):
    # for q = 0 the map x^a y^b -> (p -> r^b p + a) is a faithful action
    G = GroupSpec(family, n)
    m = G.cyclic_order
    r = G.conj_exponent

    def act(g, p):
        return (p * pow(r, g.b, m) + g.a) % m

    for g in G.all_elements():
        for h in G.all_elements():
            gh = G.multiply(g, h)
            for p in (0, 1, 5):
                assert act(gh, p) == act(g, act(h, p))


def test_defining_relations():
    for family in NONABELIAN:
        G = GroupSpec(family, 4)
        m = G.cyclic_order
        x, y = G.x(), G.y()
        pw = G.identity()
        for _ in range(m):
            pw = G.multiply(pw, x)
        assert pw == G.identity()
        assert G.multiply(y, y) == GroupElement(G.y_square_exponent, 0)
        conj = G.multiply(G.multiply(G.inverse(y), x), y)
        assert conj == GroupElement(G.conj_exponent % m, 0)


def test_all_elements_ordering():
    C = GroupSpec(Family.CYCLIC, 2)
    assert C.all_elements() == tuple(GroupElement(a, 0) for a in range(4))
    D = GroupSpec(Family.DIHEDRAL, 3)
    elems = D.all_elements()
    assert len(elems) == 16
    assert elems[9] == GroupElement(1, 1)


@pytest.mark.parametrize("family", [Family.CYCLIC] + NONABELIAN)
def test_regular_representation_homomorphism(family):
    G = GroupSpec(family, 3)
    phi = regular_representation(G)
    assert np.array_equal(phi.evaluate(G.identity()), np.eye(G.order))
    elems = G.all_elements()
    for g in elems:
        for h in elems[::3]:
            lhs = phi.evaluate(g) @ phi.evaluate(h)
            assert np.array_equal(lhs, phi.evaluate(G.multiply(g, h)))


def test_regular_representation_x_order():
    phi = regular_representation(GroupSpec(Family.DIHEDRAL, 3))
    px = phi.images["x"]
    assert not np.array_equal(np.linalg.matrix_power(px, 4), np.eye(16))
    assert np.array_equal(np.linalg.matrix_power(px, 8), np.eye(16))


def test_cyclic_irreps_are_characters():
    irreps = cyclic_irreps(3)
    assert len(irreps) == 8
    assert np.allclose(irreps[0].images["x"], [[1.0]])
    assert abs(irreps[4].images["x"][0, 0] + 1.0) < 1e-15
    assert all(rho.relation_defect() < 1e-12 for rho in irreps)
    # DFT diagonalizes the regular representation of Z_8 in index order
    phi = regular_representation(GroupSpec(Family.CYCLIC, 3))
    a = dft(8)
    d = a.conj().T @ phi.images["x"] @ a
    omega = np.exp(2j * np.pi / 8)
    assert np.max(np.abs(d - np.diag(omega ** np.arange(8)))) < 1e-12


def test_quaternion_2dim_irrep_oracle():
    # classic U(2) irrep of Q_16: x -> diag(zeta, conj(zeta)), y -> [[0,1],[-1,0]]
    Q = GroupSpec(Family.QUATERNION, 3)
    zeta = np.exp(2j * np.pi / 8)
    rho = Representation(group=Q, degree=2, images={
        "x": np.diag([zeta, zeta.conjugate()]),
        "y": np.array([[0.0, 1.0], [-1.0, 0.0]]),
    })
    assert rho.relation_defect() < 1e-12


@pytest.mark.parametrize("family", NONABELIAN)
@pytest.mark.parametrize("n", [3, 4, 5])
def test_inner_conjugate_by_y_maps_i_to_ir(family, n):
    G = GroupSpec(family, n)
    m = G.cyclic_order
    r = G.conj_exponent
    irreps = cyclic_irreps(n)
    for i in (0, 1, 2, m // 2, m - 1):
        conj = inner_conjugate(irreps[i], G, G.y())
        expect = irreps[(i * r) % m]
        assert np.allclose(conj.images["x"], expect.images["x"], atol=1e-12)


def test_inner_conjugate_by_identity_is_noop():
    G = GroupSpec(Family.QD, 3)
    rho = cyclic_irreps(3)[5]
    conj = inner_conjugate(rho, G, G.identity())
    assert np.allclose(conj.images["x"], rho.images["x"])


def test_induced_representation_blocks():
    omega = np.exp(2j * np.pi / 8)
    D = GroupSpec(Family.DIHEDRAL, 3)
    T = (D.identity(), D.y())
    ind = induce(cyclic_irreps(3)[1], D, T)
    assert np.allclose(ind.images["x"], np.diag([omega, omega ** -1]))
    assert np.allclose(ind.images["y"], [[0, 1], [1, 0]])
    assert ind.relation_defect() < 1e-12

    Q = GroupSpec(Family.QUATERNION, 3)
    T = (Q.identity(), Q.y())
    # rho_i(y^2) = omega^(4i): -1 on odd i, +1 on even i
    assert np.allclose(induce(cyclic_irreps(3)[1], Q, T).images["y"],
                       [[0, 1], [-1, 0]])
    assert np.allclose(induce(cyclic_irreps(3)[2], Q, T).images["y"],
                       [[0, 1], [1, 0]])


@pytest.mark.parametrize("family", NONABELIAN)
def test_induced_representations_satisfy_relations(family):
    G = GroupSpec(family, 4)
    T = (G.identity(), G.y())
    for i in (1, 3, 6):
        assert induce(cyclic_irreps(4)[i], G, T).relation_defect() < 1e-12


def test_induce_rejects_non_transversal():
    D = GroupSpec(Family.DIHEDRAL, 3)
    with pytest.raises(ValueError):
        induce(cyclic_irreps(3)[1], D, (D.identity(), D.x()))
    with pytest.raises(ValueError):
        induce(cyclic_irreps(3)[1], D, (D.identity(),))


def test_inducing_trivial_rep_along_all_elements_gives_regular_rep():
    G = GroupSpec(Family.DIHEDRAL, 3)
    trivial = cyclic_irreps(0)[0]
    ind = induce(trivial, G, G.all_elements())
    phi = regular_representation(G)
    assert np.array_equal(ind.images["x"], phi.images["x"])
    assert np.array_equal(ind.images["y"], phi.images["y"])


def test_extendable_indices_per_family():
    assert extendable_indices(GroupSpec(Family.DIHEDRAL, 3)) == {0, 4}
    assert extendable_indices(GroupSpec(Family.QUATERNION, 3)) == {0, 4}
    assert extendable_indices(GroupSpec(Family.QD, 4)) == {0, 8}
    assert extendable_indices(GroupSpec(Family.QP, 3)) == {0, 2, 4, 6}
    assert len(extendable_indices(GroupSpec(Family.QP, 5))) == 16
    with pytest.raises(ValueError):
        extendable_indices(GroupSpec(Family.CYCLIC, 3))

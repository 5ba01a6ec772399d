"""Truncations: dimensions, Cartan identity, endomorphism rings, layers."""

import pytest

from arcalg.algebra import (
    build_truncation,
    cartan_from_decomposition,
    cartan_matrix,
    check_associativity,
    decomposition_matrix,
    endo_ring,
    kac_layers,
)
from arcalg.arcs import cup_diagram, half_degree, weights_below
from arcalg.surgery import multiply, multiply_elements
from arcalg.weights import Weight, defect

CRITERION_WINDOWS = [(1, 1, 0, 2), (2, 1, 0, 1), (2, 2, 0, 0)]


def test_smallest_truncation_dimension():
    t = build_truncation(1, 1, 0, 0)
    assert len(t.lambda_all) == 4
    assert len(t.lambda_core) == 3
    assert t.dimension == 4


def test_gl11_quiver_dimensions():
    t = build_truncation(1, 1, 0, 4)  # window width >= 5
    lams = [Weight.make(1, 1, {i: "v"}) for i in range(0, 5)]
    for i, li in enumerate(lams):
        for j, lj in enumerate(lams):
            dim = len(t.hom_basis(li, lj))
            assert dim == {0: 2, 1: 1}.get(abs(i - j), 0)


def _arrow(t, src, dst):
    """The unique degree-1 basis vector with lower weight src and upper
    weight dst."""
    (v,) = [b for b in t.hom_basis(src, dst) if b.degree == 1]
    return v


def test_gl11_quiver_relations():
    t = build_truncation(1, 1, 0, 4)
    lam = [Weight.make(1, 1, {i: "v"}) for i in range(0, 5)]
    a = {i: _arrow(t, lam[i], lam[i + 1]) for i in range(4)}
    b = {i: _arrow(t, lam[i + 1], lam[i]) for i in range(4)}
    for i in range(1, 4):
        lhs = multiply(a[i], b[i])
        rhs = multiply(b[i - 1], a[i - 1])
        assert lhs.canonical_terms() == rhs.canonical_terms()
        assert lhs.canonical_terms()  # the degree-2 loop is nonzero
    for i in range(3):
        assert not multiply(a[i], a[i + 1]).canonical_terms()
        assert not multiply(b[i + 1], b[i]).canonical_terms()
    # degree equals path length
    for i in range(4):
        assert a[i].degree == 1 and b[i].degree == 1
        two_step = multiply(a[i], b[i])
        for v, _ in two_step.canonical_terms():
            assert v.degree == 2


@pytest.mark.parametrize("m,n,p,q", CRITERION_WINDOWS)
def test_cartan_equals_dtd(m, n, p, q):
    t = build_truncation(m, n, p, q)
    for graded in (True, False):
        _, _, c1 = cartan_matrix(t, graded)
        _, _, c2 = cartan_from_decomposition(t, graded)
        assert [[str(x) for x in r] for r in c1] == \
               [[str(x) for x in r] for r in c2]


def test_decomposition_entries():
    t = build_truncation(1, 1, 0, 1)
    rows, cols, d = decomposition_matrix(t, graded=True)
    for i, lam in enumerate(rows):
        for j, mu in enumerate(cols):
            poly = d[i][j]
            if mu == lam:
                assert str(poly) == "1"
            expect = half_degree(cup_diagram(mu).cups, lam) \
                if mu in weights_below(lam) else None
            if expect is None:
                assert poly(1) == 0
            else:
                assert poly(1) == 1


@pytest.mark.parametrize("m,n,p,q", CRITERION_WINDOWS)
def test_endo_rings(m, n, p, q):
    t = build_truncation(m, n, p, q)
    for lam in t.lambda_core:
        rep = endo_ring(t, lam)
        r = rep["defect"]
        assert r == defect(lam) <= 3
        assert rep["dimension"] == 2 ** r
        assert rep["commutative"]
        assert rep["generators_square_to_zero"]
        assert len(rep["generators"]) == r
        assert all(g.degree == 2 for g in rep["generators"])


def test_kac_layers_partition():
    lam = Weight.make(2, 2, {2: "v", 4: "v"})
    layers = kac_layers(lam)
    flattened = [w for ws in layers.values() for w in ws]
    assert sorted(flattened, key=Weight.sort_key) == \
        sorted(weights_below(lam), key=Weight.sort_key)
    assert list(layers[0]) == [lam]
    for k, ws in layers.items():
        for w in ws:
            assert half_degree(cup_diagram(w).cups, lam) == k


@pytest.mark.parametrize("m,n,p,q", CRITERION_WINDOWS)
def test_associativity_exhaustive(m, n, p, q):
    t = build_truncation(m, n, p, q)
    rep = check_associativity(t, mode="exhaustive")
    assert rep["pass"]
    assert rep["closure"]
    assert rep["identity"]
    assert rep["diagnostic_counter"] == 0

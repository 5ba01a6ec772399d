"""Translation operators, basis changes, crystals, stretched diagrams."""

import pytest

from arcalg.functors import (
    EscapeOfWindowError,
    GrothendieckVector,
    apply_E,
    apply_F,
    change_basis,
    check_theorem_dec,
    crystal_edges,
    enumerate_stretched,
    minimal_window,
    path_to_ground,
    serre_check,
    theorem_dec_vector,
    verify_path,
)
from arcalg.weights import Weight, enumerate_window, lambda_ground

WINDOWS = [(1, 1, 0, 2), (2, 1, 0, 1), (2, 2, 0, 0)]


def _v(w):
    return GrothendieckVector.of("V", w)


def test_apply_f_single_patterns():
    # cap pattern (x, o) splits into the two vee orientations
    g = lambda_ground(0, 0, 1, 1)  # x at 0, o at 1
    out = apply_F(0, _v(g))
    assert out.entries == {
        Weight.make(1, 1, {0: "v"}): 1,
        Weight.make(1, 1, {1: "v"}): 1,
    }
    # (v, ^) closes into (o, x)
    out2 = apply_F(0, _v(Weight.make(1, 1, {0: "v"})))
    assert out2.entries == {Weight.make(1, 1, {0: "o", 1: "x"}): 1}
    # unmatched pattern acts by zero
    assert apply_F(5, _v(g)).is_zero()


def test_apply_e_mirrors_f():
    lam = Weight.make(1, 1, {0: "o", 1: "x"})
    out = apply_E(0, _v(lam))
    assert out.entries == {
        Weight.make(1, 1, {0: "v"}): 1,
        Weight.make(1, 1, {1: "v"}): 1,
    }


@pytest.mark.parametrize("m,n,p,q", WINDOWS)
def test_change_basis_roundtrips(m, n, p, q):
    # single P classes expand finitely in V and L; single V classes
    # expand finitely in L; those roundtrips must be exact
    for lam in enumerate_window(p, q, m, n):
        p_cls = GrothendieckVector.of("P", lam)
        for mid in ("V", "L"):
            w = change_basis(change_basis(p_cls, mid), "P")
            assert w.entries == p_cls.entries
        v_cls = GrothendieckVector.of("V", lam)
        w = change_basis(change_basis(v_cls, "L"), "V")
        assert w.entries == v_cls.entries


def test_change_basis_infinite_expansion_errors():
    # a positive-defect standard class is an infinite alternating sum of
    # projective classes: no finite answer exists
    v = GrothendieckVector.of("V", Weight.make(1, 1, {0: "v"}))
    with pytest.raises(ValueError):
        change_basis(v, "P")


def test_change_basis_window_guard():
    lam = Weight.make(1, 1, {0: "v"})
    p = GrothendieckVector.of("P", lam)
    # expanding the projective class needs the weight above the cup,
    # which escapes a window that ends at position 0
    with pytest.raises(EscapeOfWindowError):
        change_basis(p, "V", window=(-1, -1))
    change_basis(p, "V", window=(0, 0))  # wide enough: fine


def test_crystal_edges_six_patterns():
    edges = crystal_edges(Weight.make(1, 1, {0: "v"}))
    assert (0, Weight.make(1, 1, {0: "o", 1: "x"})) in edges
    edges2 = crystal_edges(Weight.make(1, 1, {0: "x", 1: "o"}))
    assert (0, Weight.make(1, 1, {0: "v"})) in edges2


@pytest.mark.parametrize("m,n,p,q", WINDOWS)
def test_paths_to_ground(m, n, p, q):
    for lam in enumerate_window(p, q, m, n, "core"):
        p0, q0, path, r = path_to_ground(lam, (p, q))
        assert (p0, q0) == (p, q)
        assert verify_path(lam, p0, q0, path, r)


def test_path_minimal_window():
    lam = Weight.make(2, 2, {2: "v", 4: "v"})
    p0, q0 = minimal_window(lam)
    _, _, path, r = path_to_ground(lam)
    assert verify_path(lam, p0, q0, path, r)


def test_stretched_totals():
    assert enumerate_stretched(0, 0, 1, 1, 0)[1] == 1
    assert enumerate_stretched(0, 0, 1, 1, 1)[1] == 2
    assert enumerate_stretched(0, 0, 2, 2, 1)[1] == 2
    assert enumerate_stretched(0, 0, 2, 2, 2)[1] == 8


def test_stretched_dims_match_composites():
    for d in range(5):
        assert check_theorem_dec(0, 1, 2, 1, d)


def test_composites_vanish_beyond_bound():
    # (m+n)(q-p) + 2mn = 7 for (2,1), q-p = 1
    assert theorem_dec_vector(0, 1, 2, 1, 8).is_zero()
    assert enumerate_stretched(0, 1, 2, 1, 8)[1] == 0


@pytest.mark.parametrize("m,n,p,q", WINDOWS)
def test_serre_relations(m, n, p, q):
    rep = serre_check(p, q, m, n)
    assert rep["pass"]

"""Cup/cap diagrams, orientations, degrees, basis vectors."""

import itertools

import pytest

from arcalg.arcs import (
    OrientationError,
    cap_diagram,
    cup_diagram,
    degree,
    idempotent,
    make_basis_vector,
    subset_lower,
    weights_above,
    weights_below,
)
from arcalg.weights import Weight, block_of, block_weights, enumerate_window


def _valid_matchings(w, lo, hi):
    """Brute force: all non-crossing v-^ matchings covering every v,
    with no unmatched ^ ray trapped under an arc."""
    vees = [i for i in range(lo, hi + 1) if w.label(i) == "v"]
    ups = [i for i in range(lo, hi + 1) if w.label(i) == "^"]
    out = []
    for partners in itertools.permutations(ups, len(vees)):
        arcs = sorted((min(v, u), max(v, u))
                      for v, u in zip(vees, partners))
        if any(w.label(i) != "v" or w.label(j) != "^" for i, j in arcs):
            continue
        # non-crossing
        if any(a[0] < b[0] < a[1] < b[1]
               for a, b in itertools.combinations(arcs, 2)):
            continue
        # no free ^ trapped inside an arc
        matched = {x for arc in arcs for x in arc}
        if any(i < u < j for u in ups if u not in matched
               for i, j in arcs):
            continue
        out.append(tuple(arcs))
    return sorted(set(out))


def test_matching_is_unique_and_matches_oracle():
    for w in enumerate_window(0, 2, 1, 1) + enumerate_window(0, 1, 2, 1):
        lo = min((i for i, _ in w.entries), default=0) - 3
        hi = max((i for i, _ in w.entries), default=0) + 3
        oracle = _valid_matchings(w, lo, hi)
        cups = cup_diagram(w).cups
        # arcs never need to reach outside support +- defect
        assert len(oracle) == 1
        assert oracle[0] == tuple(sorted(cups))


def test_cup_example_2_2():
    w = Weight.make(2, 2, {2: "v", 4: "v"})
    assert cup_diagram(w).cups == ((2, 3), (4, 5))
    assert cap_diagram(w).caps == ((2, 3), (4, 5))


def test_idempotent_degree_zero():
    for w in enumerate_window(0, 2, 1, 1, "core"):
        assert idempotent(w).degree == 0


def test_quiver_generator_degrees():
    # neighbouring one-vee weights: the mixed vectors have degree 1,
    # the loop at the lower weight has degree 2
    lam0 = Weight.make(1, 1, {0: "v"})
    lam1 = Weight.make(1, 1, {1: "v"})
    a = make_basis_vector(cup_diagram(lam0), lam1, cap_diagram(lam1))
    b = make_basis_vector(cup_diagram(lam1), lam1, cap_diagram(lam0))
    c = make_basis_vector(cup_diagram(lam0), lam1, cap_diagram(lam0))
    assert a.degree == 1
    assert b.degree == 1
    assert c.degree == 2


def test_make_basis_vector_validates_orientation():
    lam0 = Weight.make(1, 1, {0: "v"})
    lam2 = Weight.make(1, 1, {2: "v"})
    with pytest.raises(OrientationError):
        make_basis_vector(cup_diagram(lam0), lam2, cap_diagram(lam0))


def test_weights_above_counts():
    w = Weight.make(2, 2, {2: "v", 4: "v"})
    above = weights_above(w)
    assert len(above) == 4  # 2^defect
    assert w in above


def test_weights_below_exact():
    for w in (enumerate_window(0, 2, 1, 1) + enumerate_window(0, 1, 2, 1)
              + [Weight.make(2, 2, {2: "v", 4: "v"})]):
        below = weights_below(w)
        blk = block_of(w)
        support = [i for i, _ in w.entries] or [0]
        pad = 2 * blk.defect + len(blk.crosses) + len(blk.circles) + 1
        lo, hi = min(support) - pad, max(support) + pad
        brute = [mu for mu in block_weights(blk, lo, hi)
                 if subset_lower(mu, w)]
        assert sorted(below, key=Weight.sort_key) == brute
        assert w in below


def test_gl11_subset_count():
    # one-vee weights: exactly the weight itself and its left neighbour
    w = Weight.make(1, 1, {3: "v"})
    below = weights_below(w)
    assert len(below) == 2
    assert set(below) == {w, Weight.make(1, 1, {2: "v"})}

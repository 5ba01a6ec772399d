"""Weight diagrams: dictionary, blocks, Bruhat order, windows."""

import random

import pytest

from arcalg.weights import (
    GlWeight,
    InvalidWeightError,
    Weight,
    block_of,
    block_weights,
    bruhat_leq,
    defect,
    enumerate_window,
    from_gl_weight,
    height,
    in_core_window,
    in_window,
    is_kostant,
    lambda_ground,
    to_gl_weight,
    window_interval,
)


def test_dictionary_example_2_1():
    w = from_gl_weight(GlWeight((0, 0, -3), (2, 1)))
    assert dict(w.entries) == {-1: "x", 0: "x", 2: "o"}
    assert to_gl_weight(w).coeffs == (0, 0, -3)


def test_dictionary_counts():
    w = from_gl_weight(GlWeight((2, 0, 0, -2), (2, 2)))
    labs = [lab for _, lab in w.entries]
    m, n = w.rank
    assert labs.count("x") + labs.count("v") == m
    assert labs.count("o") + labs.count("v") == n


def _random_dominant(rng, m, n):
    while True:
        a = sorted((rng.randint(-6, 6) for _ in range(m)), reverse=True)
        b = sorted((rng.randint(-6, 6) for _ in range(n)), reverse=True)
        try:
            return GlWeight(tuple(a + b), (m, n))
        except InvalidWeightError:
            continue


def test_dictionary_roundtrip_random():
    rng = random.Random(7)
    for _ in range(1000):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        gl = _random_dominant(rng, m, n)
        w = from_gl_weight(gl)
        assert to_gl_weight(w).coeffs == gl.coeffs
        labs = [lab for _, lab in w.entries]
        assert labs.count("x") + labs.count("v") == m
        assert labs.count("o") + labs.count("v") == n


def test_rejects_non_dominant():
    with pytest.raises(InvalidWeightError):
        GlWeight((0, 1, 1), (2, 1))  # first part must weakly decrease


def _swap_closure(a, hi):
    """All weights reachable by moving one v rightwards past a ^ inside
    (-inf, hi]."""
    seen = {a}
    frontier = [a]
    while frontier:
        w = frontier.pop()
        vees = [p for p, lab in w.entries if lab == "v"]
        for i in vees:
            for j in range(i + 1, hi + 1):
                if w.label(j) != "^":
                    continue
                labels = {p: lab for p, lab in w.entries if p != i}
                labels[j] = "v"
                w2 = Weight.make(w.rank[0], w.rank[1], labels)
                if w2 not in seen:
                    seen.add(w2)
                    frontier.append(w2)
    return seen


def test_bruhat_matches_swap_closure():
    # blocks of defect up to 3 in the window [-4, 4]
    for block_labels in ({}, {0: "x"}, {-2: "x", 1: "o"}):
        for r in (1, 2, 3):
            m = r + sum(1 for lab in block_labels.values() if lab == "x")
            n = r + sum(1 for lab in block_labels.values() if lab == "o")
            free = [i for i in range(-4, 5) if i not in block_labels]
            import itertools
            weights = []
            for vs in itertools.combinations(free, r):
                labels = dict(block_labels)
                labels.update({i: "v" for i in vs})
                weights.append(Weight.make(m, n, labels))
            for a in weights:
                reach = _swap_closure(a, 4)
                for b in weights:
                    assert bruhat_leq(a, b) == (b in reach)


def test_block_and_height():
    w = Weight.make(2, 1, {-1: "x", 0: "x", 2: "o"})
    b = block_of(w)
    assert b.crosses == (-1, 0) and b.circles == (2,)
    assert b.defect == 0 == defect(w)
    assert height(w) == (-1 + 0) - 2


def test_ground_weight():
    g = lambda_ground(0, 1, 2, 1)
    assert dict(g.entries) == {-1: "x", 0: "x", 2: "o"}
    assert to_gl_weight(g).coeffs == (0, 0, -3)
    assert defect(g) == 0
    for (p, q, m, n) in [(0, 0, 1, 1), (0, 3, 2, 2), (-2, 1, 3, 1)]:
        g = lambda_ground(p, q, m, n)
        assert defect(g) == 0
        assert in_window(g, p, q) and in_core_window(g, p, q)
        crosses = [i for i, lab in g.entries if lab == "x"]
        circles = [i for i, lab in g.entries if lab == "o"]
        assert crosses == list(range(p - m + 1, p + 1))
        assert circles == list(range(q + 1, q + n + 1))


def test_window_enumeration_counts():
    # principal (1,1) window with p = q: four weights, three of them core
    all_w = enumerate_window(0, 0, 1, 1, "all")
    core = enumerate_window(0, 0, 1, 1, "core")
    assert len(all_w) == 4
    assert len(core) == 3
    assert set(core) <= set(all_w)
    lo, hi = window_interval(0, 0, 1, 1)
    assert (lo, hi) == (0, 1)
    for w in all_w:
        assert all(lo <= i <= hi for i, _ in w.entries)


def test_core_window_suffix_condition():
    w = Weight.make(1, 1, {1: "v"})  # vee at the right edge of [0, 1]
    assert in_window(w, 0, 0)
    assert not in_core_window(w, 0, 0)


def test_kostant():
    for w in enumerate_window(0, 3, 1, 1, "all"):
        assert is_kostant(w)
    # adjacent vees trap no up arrow
    assert is_kostant(Weight.make(2, 2, {0: "v", 1: "v"}))
    # v ^ v: an up arrow strictly between two down arrows fails
    assert not is_kostant(Weight.make(2, 2, {0: "v", 2: "v"}))
    # an x between the vees does not count as a trapped up arrow
    assert is_kostant(Weight.make(3, 2, {0: "v", 1: "x", 2: "v"}))


def test_block_weights_enumeration():
    b = block_of(Weight.make(1, 1, {0: "v"}))
    ws = block_weights(b, -1, 2)
    assert len(ws) == 4  # one vee placed anywhere in [-1, 2]
    assert all(block_of(w) == b for w in ws)

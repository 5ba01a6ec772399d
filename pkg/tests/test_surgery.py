"""Surgery multiplication: worked product, grading, order independence."""

from arcalg.arcs import (
    CapDiagram,
    CupDiagram,
    idempotent,
    make_basis_vector,
)
from arcalg.surgery import multiply, reset_diagnostics, unlisted_count
from arcalg.weights import Weight, block_of
from arcalg.algebra import build_truncation


def _worked_vectors():
    w = Weight.make(2, 2, {2: "v", 4: "v"})
    blk = block_of(w)
    x = make_basis_vector(CupDiagram(((2, 3), (4, 5)), blk), w,
                          CapDiagram(((2, 5), (3, 4)), blk))
    y = make_basis_vector(CupDiagram(((2, 5), (3, 4)), blk), w,
                          CapDiagram(((1, 2), (4, 5)), blk))
    return x, y


def test_worked_product():
    x, y = _worked_vectors()
    trace = []
    prod = multiply(x, y, trace=trace)
    terms = prod.canonical_terms()
    assert len(terms) == 1
    v, c = terms[0]
    assert c == 1
    assert v.lower.cups == ((2, 3), (4, 5))
    assert dict(v.weight.entries) == {2: "v", 5: "v"}
    assert v.upper.caps == ((1, 2), (4, 5))
    # two surgeries: a merge then a split
    assert trace == ["merge:1*y->y", "split:y->x*y"]


def test_grading_additive():
    x, y = _worked_vectors()
    prod = multiply(x, y)
    for v, _ in prod.canonical_terms():
        assert v.degree == x.degree + y.degree


def test_incomposable_is_zero():
    x, _ = _worked_vectors()
    assert not multiply(x, x).canonical_terms()  # caps of x != mirror of cups


def test_idempotents_unital():
    t = build_truncation(1, 1, 0, 2)
    for mu in t.lambda_core:
        e = idempotent(mu)
        for nu in t.lambda_core:
            for v in t.hom_basis(mu, nu):
                assert multiply(e, v).canonical_terms() == [(v, 1)]
                assert multiply(v, idempotent(nu)).canonical_terms() == [(v, 1)]


def test_order_independence_and_grading_exhaustive():
    t = build_truncation(1, 1, 0, 2)
    reset_diagnostics()
    for i in range(len(t.basis)):
        for j in range(len(t.basis)):
            x, y = t.basis[i], t.basis[j]
            lr = multiply(x, y, order="lr")
            rl = multiply(x, y, order="rl")
            assert lr.canonical_terms() == rl.canonical_terms()
            for v, _ in lr.canonical_terms():
                assert v.degree == x.degree + y.degree
    assert unlisted_count() == 0

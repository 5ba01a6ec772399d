"""Finite truncations of the arc algebra over a (p, q) window.

The truncation carries every oriented circle diagram (mu_, lam, nu^)
with lam in the full window set and mu, nu in the core window set (the
weights whose cups stay inside the window); the sum of the core
idempotents is a two-sided identity on this span.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Tuple

from .laurent import Laurent
from .weights import Weight, block_of, enumerate_window
from .arcs import (
    AlgebraElement,
    BasisVector,
    CapDiagram,
    CupDiagram,
    arc_orientations,
    cap_diagram,
    cup_diagram,
    half_degree,
    idempotent,
    make_basis_vector,
    subset_lower,
    weights_below,
)
from . import surgery


class Truncation:
    """Basis-enumerated subalgebra of the arc algebra for one window."""

    def __init__(self, m: int, n: int, p: int, q: int):
        self.params = (m, n, p, q)
        self.lambda_all: List[Weight] = enumerate_window(p, q, m, n, "all")
        self.lambda_core: List[Weight] = enumerate_window(p, q, m, n, "core")
        core = set(self.lambda_core)
        basis: List[BasisVector] = []
        for lam in self.lambda_all:
            lowers = [mu for mu in self.lambda_core if subset_lower(mu, lam)]
            for mu, nu in itertools.product(lowers, lowers):
                basis.append(make_basis_vector(
                    cup_diagram(mu), lam, cap_diagram(nu)))
        basis.sort(key=BasisVector.sort_key)
        self.basis = basis
        self.index: Dict[BasisVector, int] = {v: k for k, v in enumerate(basis)}
        self.idempotents: Dict[Weight, int] = {
            lam: self.index[idempotent(lam)] for lam in self.lambda_core
        }
        self._products: Dict[Tuple[int, int], AlgebraElement] = {}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def product(self, i: int, j: int) -> AlgebraElement:
        key = (i, j)
        if key not in self._products:
            self._products[key] = surgery.multiply(self.basis[i], self.basis[j])
        return self._products[key]

    def hom_basis(self, mu: Weight, nu: Weight) -> List[BasisVector]:
        """Basis of e_mu K e_nu: lower diagram of mu, upper of nu."""
        low, up = cup_diagram(mu), cap_diagram(nu)
        return [v for v in self.basis
                if v.lower == low and v.upper == up]


def build_truncation(m: int, n: int, p: int, q: int) -> Truncation:
    return Truncation(m, n, p, q)


def _q_pow_or_one(e: int, graded: bool) -> Laurent:
    return Laurent.q_power(e) if graded else Laurent.one()


def decomposition_matrix(t: Truncation, graded: bool = True):
    """Rows are standard classes [V(lam)], columns simple classes [L(mu)],
    both over the full window set; entry q^{deg(mu_ lam)} when mu is a
    lower subset of lam."""
    rows = t.lambda_all
    cols = t.lambda_all
    entries = []
    for lam in rows:
        row = []
        for mu in cols:
            if subset_lower(mu, lam):
                e = half_degree(cup_diagram(mu).cups, lam)
                row.append(_q_pow_or_one(e, graded))
            else:
                row.append(Laurent.zero())
        entries.append(row)
    return rows, cols, entries


def cartan_matrix(t: Truncation, graded: bool = True):
    """C[mu][nu] = graded dimension of e_mu t e_nu, rows and columns over
    the core window set."""
    rows = t.lambda_core
    entries = []
    for mu in rows:
        row = []
        for nu in rows:
            total = Laurent.zero()
            for v in t.hom_basis(mu, nu):
                total = total + _q_pow_or_one(v.degree, graded)
            row.append(total)
        entries.append(row)
    return rows, rows, entries


def cartan_from_decomposition(t: Truncation, graded: bool = True):
    """D^T D with columns restricted to the core set; must equal
    cartan_matrix (each entry counts middles nu with lam_ nu mu^ oriented,
    weighted by q^degree)."""
    rows, cols, D = decomposition_matrix(t, graded)
    core = t.lambda_core
    col_of = {mu: j for j, mu in enumerate(cols)}
    entries = []
    for mu in core:
        row = []
        jm = col_of[mu]
        for nu in core:
            jn = col_of[nu]
            total = Laurent.zero()
            for i in range(len(rows)):
                total = total + D[i][jm] * D[i][jn]
            row.append(total)
        entries.append(row)
    return core, core, entries


def endo_ring(t: Truncation, lam: Weight) -> Dict[str, object]:
    """Multiplication report for e_lam t e_lam.

    The ring is spanned by the 2^r orientations of lam's own arcs; the
    degree-2 elements with a single clockwise arc generate it, and each
    such generator squares to zero.
    """
    if lam not in t.idempotents:
        raise ValueError("weight is outside the core window set")
    low, up = cup_diagram(lam), cap_diagram(lam)
    cups = low.cups
    r = len(cups)
    vecs = [make_basis_vector(low, nu, up) for nu in arc_orientations(lam)]
    vecs.sort(key=BasisVector.sort_key)

    def gen(k: int) -> BasisVector:
        # orientation with exactly arc k clockwise ('v' at its right end)
        labels = {pos: l for pos, l in lam.entries if l != "v"}
        for idx, (i, j) in enumerate(cups):
            labels[j if idx == k else i] = "v"
        nu = Weight.make(lam.rank[0], lam.rank[1], labels)
        return make_basis_vector(low, nu, up)

    gens = [gen(k) for k in range(r)]
    table: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    commutative = True
    squares_zero = True
    index = {v: i for i, v in enumerate(vecs)}
    for i, j in itertools.product(range(len(vecs)), repeat=2):
        prod = surgery.multiply(vecs[i], vecs[j])
        table[(i, j)] = sorted(
            (index[v], c) for v, c in prod.terms.items())
    for i, j in itertools.product(range(len(vecs)), repeat=2):
        if table[(i, j)] != table[(j, i)]:
            commutative = False
    for g in gens:
        if not surgery.multiply(g, g).is_zero():
            squares_zero = False
    return {
        "weight": lam,
        "dimension": len(vecs),
        "defect": r,
        "commutative": commutative,
        "generators": gens,
        "generators_square_to_zero": squares_zero,
        "basis": vecs,
        "table": table,
    }


def kac_layers(lam: Weight) -> Dict[int, List[Weight]]:
    """Composition factors of the standard module at lam, graded by the
    number of clockwise cups of mu's diagram under lam's labels."""
    layers: Dict[int, List[Weight]] = {}
    for mu in weights_below(lam):
        k = half_degree(cup_diagram(mu).cups, lam)
        layers.setdefault(k, []).append(mu)
    for k in layers:
        layers[k].sort(key=Weight.sort_key)
    return layers


def check_associativity(t: Truncation, mode: str = "exhaustive",
                        sample: int = 1000, seed: int = 0) -> Dict[str, object]:
    """Verify (xy)z = x(yz), closure in the truncation basis, and the
    locally-unital identity; report the first counterexample if any."""
    import random

    surgery.reset_diagnostics()
    n = len(t.basis)
    if mode == "exhaustive":
        triples = itertools.product(range(n), repeat=3)
    elif mode == "sampled":
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(sample))
    else:
        raise ValueError("mode must be 'exhaustive' or 'sampled'")

    max_coeff = 0
    closure_ok = True
    for i, j, k in triples:
        xy = t.product(i, j)
        for v, c in xy.terms.items():
            if v not in t.index:
                closure_ok = False
            max_coeff = max(max_coeff, abs(c))
        lhs = surgery.multiply_elements(xy, AlgebraElement.of(t.basis[k]))
        rhs = surgery.multiply_elements(
            AlgebraElement.of(t.basis[i]), t.product(j, k))
        if lhs != rhs:
            return {"pass": False,
                    "counterexample": (t.basis[i], t.basis[j], t.basis[k]),
                    "diagnostic_counter": surgery.unlisted_count()}
    unit_ok = True
    ident = AlgebraElement.zero()
    for lam in t.lambda_core:
        ident.add_term(t.basis[t.idempotents[lam]], 1)
    for i in range(n):
        x = AlgebraElement.of(t.basis[i])
        if (surgery.multiply_elements(ident, x) != x
                or surgery.multiply_elements(x, ident) != x):
            unit_ok = False
    return {"pass": closure_ok and unit_ok,
            "closure": closure_ok,
            "identity": unit_ok,
            "counterexample": None,
            "max_structure_constant": max_coeff,
            "diagnostic_counter": surgery.unlisted_count()}

"""Cup and cap diagrams, oriented circle diagrams, and the Koszul degree.

A cup diagram sits below the number line: each down arrow 'v' of a
weight is joined to the nearest available '^' to its right (x/o
vertices are transparent), remaining '^' vertices carry implicit rays.
Cap diagrams are mirror images above the line.

Orientation convention: an arc whose endpoints read v (left), ^ (right)
is anticlockwise (degree 0); ^ (left), v (right) is clockwise
(degree 1).  This is forced by requiring the idempotents (lam, lam, lam)
to sit in degree 0 while the rank-(1|1) loop has degree 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .weights import (
    UP,
    VEE,
    Block,
    Weight,
    block_of,
    defect,
)

Arc = Tuple[int, int]


class OrientationError(ValueError):
    """A composite diagram fails the orientation bullets."""


def _check_arcs(arcs: Tuple[Arc, ...], block: Block) -> None:
    taken: Set[int] = set()
    for i, j in arcs:
        if i >= j:
            raise OrientationError(f"arc ({i},{j}) not left-to-right")
        for e in (i, j):
            if e in taken:
                raise OrientationError(f"vertex {e} on two arcs")
            if block.label(e) != ".":
                raise OrientationError(f"arc endpoint {e} on a x/o vertex")
            taken.add(e)
    for (i, j) in arcs:
        for (k, l) in arcs:
            if i < k < j < l:
                raise OrientationError(f"arcs ({i},{j}) and ({k},{l}) cross")
    if len(arcs) != block.defect:
        raise OrientationError("arc count differs from block defect")


@dataclass(frozen=True)
class CupDiagram:
    cups: Tuple[Arc, ...]  # sorted by left endpoint
    block: Block

    def validate(self) -> None:
        _check_arcs(self.cups, self.block)

    def endpoints(self) -> Set[int]:
        return {e for arc in self.cups for e in arc}

    def mirror(self) -> "CapDiagram":
        return CapDiagram(self.cups, self.block)

    def sort_key(self):
        return (self.block.sort_key(), self.cups)


@dataclass(frozen=True)
class CapDiagram:
    caps: Tuple[Arc, ...]
    block: Block

    def validate(self) -> None:
        _check_arcs(self.caps, self.block)

    def endpoints(self) -> Set[int]:
        return {e for arc in self.caps for e in arc}

    def mirror(self) -> "CupDiagram":
        return CupDiagram(self.caps, self.block)

    def sort_key(self):
        return (self.block.sort_key(), self.caps)


def cup_diagram(w: Weight) -> CupDiagram:
    """Match each 'v' to the nearest available '^' to its right."""
    support = w.support()
    cups: List[Arc] = []
    stack: List[int] = []
    if support:
        lo, hi = min(support), max(support)
        for pos in range(lo, hi + 1):
            lab = w.label(pos)
            if lab == VEE:
                stack.append(pos)
            elif lab == UP and stack:
                cups.append((stack.pop(), pos))
        pos = hi
        while stack:  # implicit up arrows continue to the right
            pos += 1
            cups.append((stack.pop(), pos))
    cups.sort()
    d = CupDiagram(tuple(cups), block_of(w))
    d.validate()
    return d


def cap_diagram(w: Weight) -> CapDiagram:
    return cup_diagram(w).mirror()


def _orients(arcs: Iterable[Arc], w: Weight) -> bool:
    """Each arc carries exactly one 'v' of w (the other endpoint '^')."""
    for i, j in arcs:
        li, lj = w.label(i), w.label(j)
        if {li, lj} != {VEE, UP}:
            return False
    return True


def subset_lower(mu: Weight, lam: Weight) -> bool:
    """mu subset lam: lam's labels orient the cup diagram of mu."""
    if block_of(mu) != block_of(lam):
        return False
    return _orients(cup_diagram(mu).cups, lam)


def subset_upper(mu: Weight, lam: Weight) -> bool:
    """mu superset lam: mu's labels orient the cap diagram of lam."""
    if block_of(mu) != block_of(lam):
        return False
    return _orients(cap_diagram(lam).caps, mu)


def arc_orientations(w: Weight) -> List[Weight]:
    """All weights obtained by orienting each arc of w's cup diagram,
    i.e. exactly {nu : w subset-lower-orients nu} = {nu : nu >= w visible
    on the diagram}.  2^defect weights."""
    cups = cup_diagram(w).cups
    base = {pos: lab for pos, lab in w.entries if lab != VEE}
    outs: List[Weight] = []
    for mask in range(1 << len(cups)):
        labels = dict(base)
        for k, (i, j) in enumerate(cups):
            labels[(j if mask >> k & 1 else i)] = VEE
        outs.append(Weight.make(w.rank[0], w.rank[1], labels))
    outs.sort(key=Weight.sort_key)
    return outs


def weights_above(lam: Weight) -> List[Weight]:
    """{mu : subset_upper(mu, lam)} — orientations of lam's cap diagram."""
    return arc_orientations(lam)


def weights_below(lam: Weight) -> List[Weight]:
    """{mu : subset_lower(mu, lam)} — exhaustive and exact.

    Enumerates every planar matching whose cups each carry one 'v' and
    one '^' of lam with no ray trapped inside an arc, then reads off the
    weight with 'v' at each left endpoint.  The search window is padded
    so that no admissible arc can escape it.
    """
    block = block_of(lam)
    r = block.defect
    if r == 0:
        return [lam]
    support = lam.support()
    pad = 2 * r + len(block.crosses) + len(block.circles) + 1
    lo, hi = min(support) - pad, max(support) + pad
    pts = [pos for pos in range(lo, hi + 1) if block.label(pos) == "."]

    results: Set[Weight] = set()

    def fill(points: List[int], allow_rays: bool, acc: List[Arc]):
        """Tile `points` with nested arcs; rays only when allowed."""
        if not points:
            yield list(acc)
            return
        first = points[0]
        if allow_rays and lam.label(first) == UP:
            yield from fill(points[1:], True, acc)
        for k in range(1, len(points), 2):
            j = points[k]
            labs = {lam.label(first), lam.label(j)}
            if labs != {VEE, UP}:
                continue
            acc.append((first, j))
            for inner in fill(points[1:k], False, acc):
                yield from fill(points[k + 1:], allow_rays, inner)
            acc.pop()

    for arcs in fill(pts, True, []):
        labels = {pos: lab for pos, lab in lam.entries if lab == "x" or lab == "o"}
        labels.update({i: VEE for i, _ in arcs})
        mu = Weight.make(lam.rank[0], lam.rank[1], labels)
        if subset_lower(mu, lam):
            results.add(mu)
    return sorted(results, key=Weight.sort_key)


def count_middles(lam: Weight, mu: Weight) -> int:
    """#{nu : the composite (cup diagram of lam, nu, cap diagram of mu)
    is consistently oriented}."""
    return sum(1 for nu in arc_orientations(lam) if subset_lower(mu, nu))


@dataclass(frozen=True)
class BasisVector:
    """Oriented circle diagram (a, nu, b): cup diagram, weight, cap diagram."""

    lower: CupDiagram
    weight: Weight
    upper: CapDiagram

    def sort_key(self):
        return (self.weight.sort_key(), self.lower.cups, self.upper.caps)

    @property
    def degree(self) -> int:
        return degree(self)

    def __repr__(self) -> str:
        return (f"BasisVector(cups={list(self.lower.cups)}, "
                f"weight={self.weight!r}, caps={list(self.upper.caps)})")


def make_basis_vector(a: CupDiagram, nu: Weight, b: CapDiagram) -> BasisVector:
    """Validating constructor for oriented circle diagrams."""
    a.validate()
    b.validate()
    blk = block_of(nu)
    if a.block != blk or b.block != blk:
        raise OrientationError("cup diagram, weight and cap diagram disagree on block")
    for arcs in (a.cups, b.caps):
        for i, j in arcs:
            if {nu.label(i), nu.label(j)} != {VEE, UP}:
                raise OrientationError(f"arc ({i},{j}) not oriented by the weight")
    covered_low = a.endpoints()
    covered_up = b.endpoints()
    for pos in nu.vees:
        if pos not in covered_low or pos not in covered_up:
            raise OrientationError(f"ray at vertex {pos} carries 'v'")
    return BasisVector(a, nu, b)


def idempotent(lam: Weight) -> BasisVector:
    return make_basis_vector(cup_diagram(lam), lam, cap_diagram(lam))


def half_degree(arcs: Iterable[Arc], w: Weight) -> int:
    """Number of clockwise arcs: left endpoint '^' under w."""
    return sum(1 for i, _ in arcs if w.label(i) == UP)


def degree(v: BasisVector) -> int:
    return half_degree(v.lower.cups, v.weight) + half_degree(v.upper.caps, v.weight)


class AlgebraElement:
    """Finite integer combination of basis vectors."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[BasisVector, int]] = None):
        self.terms: Dict[BasisVector, int] = {}
        if terms:
            for vec, c in terms.items():
                if c:
                    self.terms[vec] = c

    @staticmethod
    def zero() -> "AlgebraElement":
        return AlgebraElement()

    @staticmethod
    def of(vec: BasisVector, coeff: int = 1) -> "AlgebraElement":
        return AlgebraElement({vec: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, vec: BasisVector, coeff: int) -> None:
        c = self.terms.get(vec, 0) + coeff
        if c:
            self.terms[vec] = c
        else:
            self.terms.pop(vec, None)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = AlgebraElement(dict(self.terms))
        for vec, c in other.terms.items():
            out.add_term(vec, c)
        return out

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = AlgebraElement(dict(self.terms))
        for vec, c in other.terms.items():
            out.add_term(vec, -c)
        return out

    def __mul__(self, scalar: int) -> "AlgebraElement":
        return AlgebraElement({vec: c * scalar for vec, c in self.terms.items()})

    __rmul__ = __mul__

    def canonical_terms(self) -> List[Tuple[BasisVector, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.canonical_terms()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{vec!r}" for vec, c in self.canonical_terms())

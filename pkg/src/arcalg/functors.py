"""Grothendieck-group operators, crystal combinatorics, and stretched
cap diagrams.

Translation operators F_i / E_i act on formal sums of standard classes
[V(lam)] by relabelling vertices i, i+1; basis changes between simple,
standard and projective classes go through the subset relations of the
arcs module.  Stretched diagrams stack d elementary block matchings and
count consistent orientations whose bottom-touching components are all
anticlockwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .weights import (
    CIRCLE,
    CROSS,
    UP,
    VEE,
    Block,
    Weight,
    block_of,
    height,
    in_core_window,
    in_window,
    lambda_ground,
    window_interval,
)
from .arcs import arc_orientations, weights_above, weights_below


class EscapeOfWindowError(ValueError):
    """A basis change needed a weight outside the working window."""


class GrothendieckVector:
    """Finitely supported integer combination of classes in one basis."""

    __slots__ = ("kind", "entries")

    def __init__(self, kind: str, entries: Optional[Dict[Weight, int]] = None):
        if kind not in ("L", "V", "P"):
            raise ValueError("basis kind must be 'L', 'V' or 'P'")
        self.kind = kind
        self.entries: Dict[Weight, int] = {}
        if entries:
            for w, c in entries.items():
                if c:
                    self.entries[w] = c

    @staticmethod
    def of(kind: str, w: Weight, coeff: int = 1) -> "GrothendieckVector":
        return GrothendieckVector(kind, {w: coeff})

    def add(self, w: Weight, c: int) -> None:
        c0 = self.entries.get(w, 0) + c
        if c0:
            self.entries[w] = c0
        else:
            self.entries.pop(w, None)

    def __add__(self, other: "GrothendieckVector") -> "GrothendieckVector":
        if self.kind != other.kind:
            raise ValueError("basis kinds differ")
        out = GrothendieckVector(self.kind, dict(self.entries))
        for w, c in other.entries.items():
            out.add(w, c)
        return out

    def __sub__(self, other: "GrothendieckVector") -> "GrothendieckVector":
        return self + (other * -1)

    def __mul__(self, scalar: int) -> "GrothendieckVector":
        return GrothendieckVector(
            self.kind, {w: c * scalar for w, c in self.entries.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.entries

    def canonical_items(self) -> List[Tuple[Weight, int]]:
        return sorted(self.entries.items(), key=lambda t: t[0].sort_key())

    def __eq__(self, other) -> bool:
        return (isinstance(other, GrothendieckVector)
                and self.kind == other.kind and self.entries == other.entries)

    def __hash__(self):
        return hash((self.kind, tuple(self.canonical_items())))

    def __repr__(self) -> str:
        if not self.entries:
            return f"0 ({self.kind}-basis)"
        return " + ".join(f"{c}*[{self.kind}({w!r})]"
                          for w, c in self.canonical_items())


# ---------------------------------------------------------------------------
# block matchings

CUP = "cup"
CAP = "cap"
RIGHT_SHIFT = "right_shift"
LEFT_SHIFT = "left_shift"


def admissible(block: Block, i: int) -> Optional[Tuple[str, Block]]:
    """Elementary matching of the block diagram at vertices (i, i+1),
    if any: cup (.,.)->(o,x), cap (x,o)->(.,.), right shift (.,o)->(o,.),
    left shift (x,.)->(.,x)."""
    pat = block.pattern(i)
    xs, os_ = set(block.crosses), set(block.circles)
    if pat == (".", ".") and block.defect >= 1:
        return CUP, Block(tuple(sorted(xs | {i + 1})),
                          tuple(sorted(os_ | {i})),
                          block.defect - 1, block.rank)
    if pat == ("x", "o"):
        return CAP, Block(tuple(sorted(xs - {i})),
                          tuple(sorted(os_ - {i + 1})),
                          block.defect + 1, block.rank)
    if pat == (".", "o"):
        return RIGHT_SHIFT, Block(block.crosses,
                                  tuple(sorted((os_ - {i + 1}) | {i})),
                                  block.defect, block.rank)
    if pat == ("x", "."):
        return LEFT_SHIFT, Block(tuple(sorted((xs - {i}) | {i + 1})),
                                 block.circles, block.defect, block.rank)
    return None


# ---------------------------------------------------------------------------
# F_i / E_i on the standard basis

_F_TABLE: Dict[Tuple[str, str], List[Tuple[str, str]]] = {
    (VEE, CIRCLE): [(CIRCLE, VEE)],
    (UP, CIRCLE): [(CIRCLE, UP)],
    (CROSS, VEE): [(VEE, CROSS)],
    (CROSS, UP): [(UP, CROSS)],
    (CROSS, CIRCLE): [(UP, VEE), (VEE, UP)],
    (VEE, UP): [(CIRCLE, CROSS)],
    (UP, VEE): [(CIRCLE, CROSS)],
}

_E_TABLE: Dict[Tuple[str, str], List[Tuple[str, str]]] = {}
for _src, _tgts in _F_TABLE.items():
    _swap = {CROSS: CIRCLE, CIRCLE: CROSS}
    _key = (_swap.get(_src[0], _src[0]), _swap.get(_src[1], _src[1]))
    _E_TABLE[_key] = [(_swap.get(a, a), _swap.get(b, b)) for a, b in _tgts]


def _apply_table(table, i: int, v: GrothendieckVector) -> GrothendieckVector:
    if v.kind != "V":
        raise ValueError("translation operators act on the standard basis")
    out = GrothendieckVector("V")
    for w, c in v.entries.items():
        for a, b in table.get(w.pattern(i), ()):
            out.add(w.relabel({i: a, i + 1: b}), c)
    return out


def apply_F(i: int, v: GrothendieckVector) -> GrothendieckVector:
    return _apply_table(_F_TABLE, i, v)


def apply_E(i: int, v: GrothendieckVector) -> GrothendieckVector:
    return _apply_table(_E_TABLE, i, v)


# ---------------------------------------------------------------------------
# basis changes

def _vee_key(w: Weight) -> int:
    return sum(w.vees)


def _expand_P(lam: Weight) -> Dict[Weight, int]:
    """[P(lam)] in the standard basis: sum over orientations of lam's caps."""
    return {mu: 1 for mu in weights_above(lam)}


def _expand_V(lam: Weight) -> Dict[Weight, int]:
    """[V(lam)] in the simple basis: sum over lower subsets."""
    return {mu: 1 for mu in weights_below(lam)}


_INVERT_STEP_LIMIT = 10_000


def _invert(entries: Dict[Weight, int], expand, pick_min: bool) -> Dict[Weight, int]:
    """Back-substitute against a unitriangular expansion.  `expand(lam)`
    contains lam with coefficient 1; all other weights have strictly
    larger (pick_min) or smaller (not pick_min) vee-position sum.

    Single standard or simple classes of positive defect have infinite
    alternating expansions here; inputs are assumed to have finite ones
    and a step limit turns divergence into an error instead of a hang."""
    work = dict(entries)
    result: Dict[Weight, int] = {}
    steps = 0
    while work:
        steps += 1
        if steps > _INVERT_STEP_LIMIT:
            raise ValueError(
                "expansion does not terminate; the class has no finite "
                "expression in the requested basis")
        chooser = min if pick_min else max
        lam = chooser(work, key=lambda w: (_vee_key(w), w.sort_key()))
        c = work.pop(lam)
        if not c:
            continue
        result[lam] = c
        for mu, k in expand(lam).items():
            if mu == lam:
                continue
            c0 = work.get(mu, 0) - c * k
            if c0:
                work[mu] = c0
            else:
                work.pop(mu, None)
    return {w: c for w, c in result.items() if c}


def change_basis(v: GrothendieckVector, to: str,
                 window: Optional[Tuple[int, int]] = None) -> GrothendieckVector:
    """Re-express a class vector in another of the bases L, V, P.

    When `window` = (p, q) is supplied, every weight appearing in the
    result must lie in the window set, else EscapeOfWindowError.
    """
    if to not in ("L", "V", "P"):
        raise ValueError("target basis must be 'L', 'V' or 'P'")
    entries = dict(v.entries)
    kind = v.kind
    # route through V
    if kind == "P" and to != "P":
        acc: Dict[Weight, int] = {}
        for lam, c in entries.items():
            for mu, k in _expand_P(lam).items():
                acc[mu] = acc.get(mu, 0) + c * k
        entries, kind = {w: c for w, c in acc.items() if c}, "V"
    elif kind == "L" and to != "L":
        entries, kind = _invert(entries, _expand_V, pick_min=False), "V"
    if kind == "V" and to == "L":
        acc = {}
        for lam, c in entries.items():
            for mu, k in _expand_V(lam).items():
                acc[mu] = acc.get(mu, 0) + c * k
        entries, kind = {w: c for w, c in acc.items() if c}, "L"
    elif kind == "V" and to == "P":
        entries, kind = _invert(entries, _expand_P, pick_min=True), "P"
    out = GrothendieckVector(to, entries)
    if window is not None:
        p, q = window
        for w in out.entries:
            if not in_window(w, p, q):
                raise EscapeOfWindowError(f"{w!r} escapes window ({p},{q})")
    return out


# ---------------------------------------------------------------------------
# crystal graph

_CRYSTAL: Dict[Tuple[str, str], Tuple[str, str]] = {
    (VEE, CIRCLE): (CIRCLE, VEE),
    (UP, CIRCLE): (CIRCLE, UP),
    (CROSS, VEE): (VEE, CROSS),
    (CROSS, UP): (UP, CROSS),
    (CROSS, CIRCLE): (VEE, UP),
    (VEE, UP): (CIRCLE, CROSS),
}

_CRYSTAL_REV: Dict[Tuple[str, str], Tuple[str, str]] = {
    tgt: src for src, tgt in _CRYSTAL.items()
}


def crystal_edges(lam: Weight) -> List[Tuple[int, Weight]]:
    """Outgoing coloured edges of the crystal graph at lam."""
    support = lam.support()
    if not support:
        return []
    out: List[Tuple[int, Weight]] = []
    for i in range(min(support) - 1, max(support) + 1):
        tgt = _CRYSTAL.get(lam.pattern(i))
        if tgt is not None:
            out.append((i, lam.relabel({i: tgt[0], i + 1: tgt[1]})))
    return out


def minimal_window(lam: Weight) -> Tuple[int, int]:
    """Smallest-width, then leftmost, (p, q) with lam in the core set."""
    m, n = lam.rank
    support = lam.support()
    if not support:
        raise ValueError("weight has empty support")
    lo, hi = min(support), max(support)
    for width in itertools.count(0):
        for p in range(hi - n - width, lo + m):
            if in_core_window(lam, p, p + width):
                return p, p + width
    raise AssertionError("unreachable")


def path_to_ground(lam: Weight,
                   window: Optional[Tuple[int, int]] = None
                   ) -> Tuple[int, int, Tuple[int, ...], int]:
    """Crystal path from the ground-state weight of a window up to lam.

    Returns (p, q, (i_1..i_d), r) where the path follows colours i_1..i_d
    from lambda_ground(p, q) to lam and r counts the circle-creating
    steps (the ones landing through a vee-up -> circle-cross edge).
    Descends greedily from lam, at each step undoing the smallest-colour
    edge whose predecessor stays in the core window set (falling back to
    the full window set).
    """
    m, n = lam.rank
    if window is None:
        p, q = minimal_window(lam)
    else:
        p, q = window
        if not in_core_window(lam, p, q):
            raise ValueError("weight not in the core window set")
    ground = lambda_ground(p, q, m, n)
    lo, hi = window_interval(p, q, m, n)
    cur = lam
    path: List[int] = []
    r = 0
    while cur != ground:
        step = None
        fallback = None
        for i in range(lo, hi):
            src = _CRYSTAL_REV.get(cur.pattern(i))
            if src is None:
                continue
            pred = cur.relabel({i: src[0], i + 1: src[1]})
            if in_core_window(pred, p, q):
                step = (i, pred)
                break
            if fallback is None and in_window(pred, p, q):
                fallback = (i, pred)
        if step is None:
            step = fallback
        if step is None:
            raise AssertionError(f"greedy descent stuck at {cur!r}")
        i, pred = step
        if cur.pattern(i) == (CIRCLE, CROSS):
            r += 1
        path.append(i)
        cur = pred
    path.reverse()
    return p, q, tuple(path), r


def verify_path(lam: Weight, p: int, q: int,
                path: Sequence[int], r: int) -> bool:
    """Check that composing F along the path sends the ground-state
    standard class to 2^r times the projective class of lam."""
    m, n = lam.rank
    v = GrothendieckVector.of("V", lambda_ground(p, q, m, n))
    for i in path:
        v = apply_F(i, v)
    target = GrothendieckVector("V", {mu: 2 ** r for mu in weights_above(lam)})
    return v == target


# ---------------------------------------------------------------------------
# stretched cap diagrams

@dataclass(frozen=True)
class StretchedDiagram:
    colours: Tuple[int, ...]
    kinds: Tuple[str, ...]
    weights: Tuple[Weight, ...]  # gamma_0 .. gamma_d


def _admissible_sequences(p: int, q: int, m: int, n: int, d: int):
    """All (colours, kinds, blocks) chains of length d from the ground
    block, with colours drawn from the window's colour interval."""
    lo, hi = window_interval(p, q, m, n)
    colours = range(lo, hi)  # i and i+1 both inside the interval
    start = block_of(lambda_ground(p, q, m, n))

    def rec(block, cs, ks):
        if len(cs) == d:
            yield tuple(cs), tuple(ks)
            return
        for i in colours:
            step = admissible(block, i)
            if step is None:
                continue
            kind, nxt = step
            cs.append(i)
            ks.append(kind)
            yield from rec(nxt, cs, ks)
            cs.pop()
            ks.pop()

    yield from rec(start, [], [])


def _weight_steps(gamma: Weight, kind: str, i: int) -> List[Weight]:
    """Possible next-level weights under one elementary matching."""
    pat = gamma.pattern(i)
    if kind == CUP:
        if pat in ((VEE, UP), (UP, VEE)):
            return [gamma.relabel({i: CIRCLE, i + 1: CROSS})]
        return []
    if kind == CAP:
        if pat == (CROSS, CIRCLE):
            return [gamma.relabel({i: VEE, i + 1: UP}),
                    gamma.relabel({i: UP, i + 1: VEE})]
        return []
    if kind == RIGHT_SHIFT:
        if pat[1] == CIRCLE and pat[0] in (VEE, UP):
            return [gamma.relabel({i: CIRCLE, i + 1: pat[0]})]
        return []
    if kind == LEFT_SHIFT:
        if pat[0] == CROSS and pat[1] in (VEE, UP):
            return [gamma.relabel({i: pat[1], i + 1: CROSS})]
        return []
    raise ValueError(f"unknown matching kind {kind!r}")


class _UnionFind:
    def __init__(self):
        self.parent: Dict[Tuple[int, int], Tuple[int, int]] = {}

    def find(self, a):
        p = self.parent.setdefault(a, a)
        if p != a:
            p = self.find(p)
            self.parent[a] = p
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _all_caps_anticlockwise(diag: StretchedDiagram, lo: int, hi: int) -> bool:
    """A component whose two endpoints both sit on the bottom line is a
    generalised cap; it is anticlockwise when its left bottom vertex
    carries a vee."""
    d = len(diag.colours)
    uf = _UnionFind()
    for r in range(1, d + 1):
        i, kind = diag.colours[r - 1], diag.kinds[r - 1]
        gamma, delta = diag.weights[r - 1], diag.weights[r]
        skip_top: Set[int] = set()
        if kind == CUP:
            uf.union((r - 1, i), (r - 1, i + 1))
            skip_top |= {i, i + 1}
        elif kind == CAP:
            uf.union((r, i), (r, i + 1))
        elif kind == RIGHT_SHIFT:
            uf.union((r - 1, i), (r, i + 1))
            skip_top.add(i)
        elif kind == LEFT_SHIFT:
            uf.union((r - 1, i + 1), (r, i))
            skip_top.add(i + 1)
        blk_top = block_of(gamma)
        for pos in range(lo, hi + 1):
            if pos in skip_top or blk_top.label(pos) != ".":
                continue
            uf.union((r - 1, pos), (r, pos))
    bottoms: Dict[Tuple[int, int], List[int]] = {}
    bottom_weight = diag.weights[d]
    blk = block_of(bottom_weight)
    for pos in range(lo, hi + 1):
        if blk.label(pos) != ".":
            continue
        root = uf.find((d, pos))
        bottoms.setdefault(root, []).append(pos)
    for verts in bottoms.values():
        if len(verts) == 2:
            if bottom_weight.label(min(verts)) != VEE:
                return False
        elif len(verts) > 2:
            raise AssertionError("component meets the bottom line thrice")
    return True


def enumerate_stretched(p: int, q: int, m: int, n: int, d: int
                        ) -> Tuple[Dict[Weight, int], int]:
    """Count oriented stretched cap diagrams of height d over the window.

    Returns ({lam: dim(lam)}, total), where dim(lam) counts diagrams
    ending at lam with all generalised caps anticlockwise and total is
    the stretched circle-diagram count
    sum_{lam,mu} dim(lam) dim(mu) #{nu : lam_ nu mu^ oriented}.
    """
    from .arcs import count_middles, subset_lower

    lo, hi = window_interval(p, q, m, n)
    ground = lambda_ground(p, q, m, n)
    dims: Dict[Weight, int] = {}
    for colours, kinds in _admissible_sequences(p, q, m, n, d):
        chains: List[List[Weight]] = [[ground]]
        for r in range(d):
            nxt = []
            for chain in chains:
                for delta in _weight_steps(chain[-1], kinds[r], colours[r]):
                    nxt.append(chain + [delta])
            chains = nxt
        for chain in chains:
            diag = StretchedDiagram(colours, kinds, tuple(chain))
            if _all_caps_anticlockwise(diag, lo, hi):
                lam = chain[-1]
                dims[lam] = dims.get(lam, 0) + 1
    total = 0
    for lam, a in dims.items():
        for mu, b in dims.items():
            total += a * b * count_middles(lam, mu)
    return dims, total


def theorem_dec_vector(p: int, q: int, m: int, n: int, d: int
                       ) -> GrothendieckVector:
    """d-fold application of the colour-summed translation operator to
    the ground-state standard class, in the standard basis."""
    lo, hi = window_interval(p, q, m, n)
    v = GrothendieckVector.of("V", lambda_ground(p, q, m, n))
    for _ in range(d):
        acc = GrothendieckVector("V")
        for i in range(lo, hi):
            acc = acc + apply_F(i, v)
        v = acc
    return v


def check_theorem_dec(p: int, q: int, m: int, n: int, d: int) -> bool:
    """The operator-side multiplicity vector equals the stretched count,
    compared exactly in the standard basis."""
    lhs = theorem_dec_vector(p, q, m, n, d)
    dims, _ = enumerate_stretched(p, q, m, n, d)
    rhs = GrothendieckVector("V")
    for lam, k in dims.items():
        for mu in weights_above(lam):
            rhs.add(mu, k)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Serre relations

def _op_F(i):
    return lambda v: apply_F(i, v)


def _op_E(i):
    return lambda v: apply_E(i, v)


def serre_check(p: int, q: int, m: int, n: int) -> Dict[str, object]:
    """Verify the standard symmetric-Kac-Moody relations of the E/F
    operators on the span of the window's standard classes."""
    from .weights import enumerate_window

    lo, hi = window_interval(p, q, m, n)
    colours = list(range(lo, hi))
    span = [GrothendieckVector.of("V", w)
            for w in enumerate_window(p, q, m, n, "all")]
    failures: List[str] = []

    def commutes(A, B):
        return all(A(B(v)) == B(A(v)) for v in span)

    for i, j in itertools.combinations(colours, 2):
        if abs(i - j) > 1:
            if not commutes(_op_F(i), _op_F(j)):
                failures.append(f"[F_{i},F_{j}] != 0")
            if not commutes(_op_E(i), _op_E(j)):
                failures.append(f"[E_{i},E_{j}] != 0")
    for i in colours:
        for j in colours:
            if abs(i - j) != 1:
                continue
            for op, name in ((_op_F, "F"), (_op_E, "E")):
                A, B = op(i), op(j)
                for v in span:
                    lhs = (A(A(B(v))) - 2 * A(B(A(v)))) + B(A(A(v)))
                    if not lhs.is_zero():
                        failures.append(f"cubic relation fails for {name} at ({i},{j})")
                        break
    for i in colours:
        for j in colours:
            if i != j and not commutes(_op_E(i), _op_F(j)):
                failures.append(f"[E_{i},F_{j}] != 0")
    diagonal = True
    diag_entries: Dict[Tuple[int, Weight], int] = {}
    for i in colours:
        for v in span:
            w = next(iter(v.entries))
            out = apply_E(i, apply_F(i, v)) - apply_F(i, apply_E(i, v))
            if out.is_zero():
                diag_entries[(i, w)] = 0
            elif set(out.entries) == {w}:
                diag_entries[(i, w)] = out.entries[w]
            else:
                diagonal = False
                failures.append(f"[E_{i},F_{i}] not diagonal at {w!r}")
    return {"pass": not failures, "failures": failures,
            "diagonal": diagonal, "cartan_diagonal": diag_entries}

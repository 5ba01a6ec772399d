"""Weight diagrams for GL(m|n) blocks.

A weight is an integer number line with finitely many vertices labelled
'v' (down arrow), 'x' (cross) or 'o' (circle); every unlisted vertex
carries an implicit up arrow '^'.  A valid rank-(m,n) weight has
count(x) + count(v) = m and count(o) + count(v) = n.

The dictionary between dominant GL(m|n) weights and these diagrams uses
the symmetric form (eps_r, eps_s) = (-1)^{bar r} delta_{rs} and
rho = sum_{r<=m} (1-r) eps_r + sum_{s<=n} (m-s) eps_{m+s}.  Writing
a = {(lam+rho, eps_r)}_{r<=m} and b = {(lam+rho, eps_{m+s})}_{s<=n},
the diagram of lam has 'v' on a&b, 'x' on a-b, 'o' on b-a and '^'
elsewhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

VEE = "v"
CROSS = "x"
CIRCLE = "o"
UP = "^"  # implicit label; never stored

_LABELS = (VEE, CROSS, CIRCLE)


class InvalidWeightError(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    """Sparse weight diagram: only non-'^' vertices are stored."""

    entries: Tuple[Tuple[int, str], ...]  # sorted by position
    rank: Tuple[int, int]

    @staticmethod
    def make(m: int, n: int, labels: Mapping[int, str]) -> "Weight":
        entries = tuple(sorted((int(p), lab) for p, lab in labels.items()))
        w = Weight(entries, (m, n))
        w.validate()
        return w

    def validate(self) -> None:
        m, n = self.rank
        if m < 0 or n < 0:
            raise InvalidWeightError("rank components must be non-negative")
        seen = set()
        counts = {VEE: 0, CROSS: 0, CIRCLE: 0}
        for pos, lab in self.entries:
            if lab not in _LABELS:
                raise InvalidWeightError(f"unknown label {lab!r} at {pos}")
            if pos in seen:
                raise InvalidWeightError(f"duplicate vertex {pos}")
            seen.add(pos)
            counts[lab] += 1
        if counts[CROSS] + counts[VEE] != m:
            raise InvalidWeightError("count(x) + count(v) != m")
        if counts[CIRCLE] + counts[VEE] != n:
            raise InvalidWeightError("count(o) + count(v) != n")

    # -- views ---------------------------------------------------------

    @property
    def labels(self) -> Dict[int, str]:
        return dict(self.entries)

    def label(self, pos: int) -> str:
        for p, lab in self.entries:
            if p == pos:
                return lab
        return UP

    def positions(self, lab: str) -> Tuple[int, ...]:
        return tuple(p for p, l in self.entries if l == lab)

    @property
    def vees(self) -> Tuple[int, ...]:
        return self.positions(VEE)

    @property
    def crosses(self) -> Tuple[int, ...]:
        return self.positions(CROSS)

    @property
    def circles(self) -> Tuple[int, ...]:
        return self.positions(CIRCLE)

    def support(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def sort_key(self):
        return (self.rank, self.entries)

    def relabel(self, changes: Mapping[int, str]) -> "Weight":
        """New weight with the given vertices overwritten ('^' deletes)."""
        labs = self.labels
        for pos, lab in changes.items():
            if lab == UP:
                labs.pop(pos, None)
            else:
                labs[pos] = lab
        return Weight.make(self.rank[0], self.rank[1], labs)

    def pattern(self, i: int) -> Tuple[str, str]:
        """Labels at vertices (i, i+1)."""
        return (self.label(i), self.label(i + 1))

    def __repr__(self) -> str:
        body = " ".join(f"{lab}@{pos}" for pos, lab in self.entries) or "empty"
        return f"Weight({body}; m={self.rank[0]}, n={self.rank[1]})"


@dataclass(frozen=True)
class Block:
    """Block of weights: x/o positions plus the defect (atypicality)."""

    crosses: Tuple[int, ...]
    circles: Tuple[int, ...]
    defect: int
    rank: Tuple[int, int]

    def __post_init__(self):
        if set(self.crosses) & set(self.circles):
            raise InvalidWeightError("crosses and circles overlap")
        m, n = self.rank
        if len(self.crosses) + self.defect != m or len(self.circles) + self.defect != n:
            raise InvalidWeightError("block counts incompatible with rank")

    def label(self, pos: int) -> str:
        if pos in self.crosses:
            return CROSS
        if pos in self.circles:
            return CIRCLE
        return "."  # a dot: vertex free to carry v or ^

    def pattern(self, i: int) -> Tuple[str, str]:
        return (self.label(i), self.label(i + 1))

    def sort_key(self):
        return (self.rank, self.crosses, self.circles, self.defect)


@dataclass(frozen=True)
class GlWeight:
    """Dominant integral weight of GL(m|n) as coefficients on eps_1..eps_{m+n}."""

    coeffs: Tuple[int, ...]
    rank: Tuple[int, int]

    def __post_init__(self):
        m, n = self.rank
        if len(self.coeffs) != m + n:
            raise InvalidWeightError("coefficient count != m+n")
        a = [self.coeffs[r - 1] + 1 - r for r in range(1, m + 1)]
        b = [-(self.coeffs[m + s - 1] + m - s) for s in range(1, n + 1)]
        if any(a[k] <= a[k + 1] for k in range(len(a) - 1)):
            raise InvalidWeightError("dominance fails on the even part")
        if any(b[k] >= b[k + 1] for k in range(len(b) - 1)):
            raise InvalidWeightError("dominance fails on the odd part")


def from_gl_weight(w: GlWeight) -> Weight:
    """Apply the weight dictionary to a dominant GL(m|n) weight."""
    m, n = w.rank
    a = {w.coeffs[r - 1] + 1 - r for r in range(1, m + 1)}
    b = {-(w.coeffs[m + s - 1] + m - s) for s in range(1, n + 1)}
    labels: Dict[int, str] = {}
    for pos in a & b:
        labels[pos] = VEE
    for pos in a - b:
        labels[pos] = CROSS
    for pos in b - a:
        labels[pos] = CIRCLE
    return Weight.make(m, n, labels)


def to_gl_weight(w: Weight) -> GlWeight:
    """Invert the weight dictionary."""
    m, n = w.rank
    a = sorted(set(w.vees) | set(w.crosses), reverse=True)
    b = sorted(set(w.vees) | set(w.circles))
    coeffs = [a[r - 1] + r - 1 for r in range(1, m + 1)]
    coeffs += [-b[s - 1] - m + s for s in range(1, n + 1)]
    return GlWeight(tuple(coeffs), (m, n))


def block_of(w: Weight) -> Block:
    return Block(w.crosses, w.circles, len(w.vees), w.rank)


def defect(w: Weight) -> int:
    return len(w.vees)


def bruhat_leq(a: Weight, b: Weight) -> bool:
    """a <= b iff b is reachable from a by moving v's rightwards past ^'s.

    Prefix-count criterion: at every vertex i the number of v's of a at
    positions <= i dominates that of b.  Returns False across blocks.
    """
    if block_of(a) != block_of(b):
        return False
    va, vb = sorted(a.vees), sorted(b.vees)
    checkpoints = sorted(set(va) | set(vb))
    ia = ib = 0
    for point in checkpoints:
        while ia < len(va) and va[ia] <= point:
            ia += 1
        while ib < len(vb) and vb[ib] <= point:
            ib += 1
        if ia < ib:
            return False
    return True


def height(w: Weight) -> int:
    return sum(w.crosses) - sum(w.circles)


def lambda_ground(p: int, q: int, m: int, n: int) -> Weight:
    """Defect-zero ground-state weight: x on p-m+1..p, o on q+1..q+n."""
    if p > q:
        raise InvalidWeightError("ground weight requires p <= q")
    labels: Dict[int, str] = {}
    for pos in range(p - m + 1, p + 1):
        labels[pos] = CROSS
    for pos in range(q + 1, q + n + 1):
        labels[pos] = CIRCLE
    return Weight.make(m, n, labels)


def window_interval(p: int, q: int, m: int, n: int) -> Tuple[int, int]:
    """The closed vertex interval I+ = [p-m+1, q+n] of the (p,q) window."""
    return (p - m + 1, q + n)


def in_window(w: Weight, p: int, q: int) -> bool:
    """All non-'^' vertices inside I+ (membership in the window Lambda set)."""
    m, n = w.rank
    lo, hi = window_interval(p, q, m, n)
    return all(lo <= pos <= hi for pos in w.support())


def in_core_window(w: Weight, p: int, q: int) -> bool:
    """Window membership plus the suffix condition: for every j in I+,
    among vertices j..q+n the up arrows dominate the down arrows."""
    if not in_window(w, p, q):
        return False
    m, n = w.rank
    lo, hi = window_interval(p, q, m, n)
    for j in range(lo, hi + 1):
        span = hi - j + 1
        labelled = sum(1 for pos in w.support() if j <= pos <= hi)
        ups = span - labelled
        downs = sum(1 for pos in w.vees if j <= pos <= hi)
        if ups < downs:
            return False
    return True


def enumerate_window(p: int, q: int, m: int, n: int,
                     restrict: str = "all") -> List[Weight]:
    """All weights with non-'^' structure inside I+; restrict='core' keeps
    only those satisfying the suffix condition (cups stay in the window)."""
    if p > q:
        raise InvalidWeightError("window requires p <= q")
    if restrict not in ("all", "core"):
        raise ValueError("restrict must be 'all' or 'core'")
    lo, hi = window_interval(p, q, m, n)
    slots = list(range(lo, hi + 1))
    out: List[Weight] = []
    for t in range(0, min(m, n) + 1):
        for vset in itertools.combinations(slots, t):
            rest1 = [s for s in slots if s not in vset]
            for xset in itertools.combinations(rest1, m - t):
                rest2 = [s for s in rest1 if s not in xset]
                for oset in itertools.combinations(rest2, n - t):
                    labels = {s: VEE for s in vset}
                    labels.update({s: CROSS for s in xset})
                    labels.update({s: CIRCLE for s in oset})
                    w = Weight.make(m, n, labels)
                    if restrict == "core" and not in_core_window(w, p, q):
                        continue
                    out.append(w)
    out.sort(key=Weight.sort_key)
    return out


def is_kostant(w: Weight) -> bool:
    """True iff no implicit up arrow sits strictly between two down arrows."""
    vees = sorted(w.vees)
    for left, right in zip(vees, vees[1:]):
        for pos in range(left + 1, right):
            if w.label(pos) == UP:
                return False
    return True


def block_weights(block: Block, lo: int, hi: int) -> List[Weight]:
    """All weights of the block whose v's lie in [lo, hi] (helper for
    enumeration-style oracles)."""
    free = [pos for pos in range(lo, hi + 1)
            if pos not in block.crosses and pos not in block.circles]
    out = []
    for vset in itertools.combinations(free, block.defect):
        labels = {pos: CROSS for pos in block.crosses}
        labels.update({pos: CIRCLE for pos in block.circles})
        labels.update({pos: VEE for pos in vset})
        out.append(Weight.make(block.rank[0], block.rank[1], labels))
    out.sort(key=Weight.sort_key)
    return out

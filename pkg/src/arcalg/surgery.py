"""Multiplication of oriented circle diagrams by iterated surgery.

The product (a lam b)(c mu d) is zero unless the two vectors share a
block and b, c occupy mirror positions.  Otherwise the first diagram is
glued under the second, and every mirror cap/cup pair in the middle is
replaced in turn by two vertical segments.  Each replacement either
merges two components or splits one; components are valued as
anticlockwise circles (1), clockwise circles (x) or lines (y) and the
working sum evolves by

    merge: 1*1 -> 1   1*x -> x   x*x -> 0   1*y -> y   x*y -> 0   y*y -> 0
    split: 1 -> 1*x + x*1        x -> x*x   y -> x*y (clockwise circle)

Anything not covered by these rules evaluates to 0 and increments a
diagnostic counter (`unlisted_count`), which stays at zero on every
valid input.

Components are tracked as walks on a two-line node graph: node (0, k)
is vertex k of the bottom number line, (1, k) of the top.  Each node
has one connection below the line and one above; rays are dead ends.
A traversal crossing a number line upward reads '^', downward 'v';
a circle is anticlockwise when its leftmost vertex is crossed downward.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Set, Tuple

from .weights import UP, VEE, Weight, block_of
from .arcs import AlgebraElement, BasisVector, make_basis_vector

Node = Tuple[int, int]  # (line, position); line 0 = bottom, 1 = top
RAY = ("RAY",)

_unlisted = 0


def unlisted_count() -> int:
    return _unlisted


def reset_diagnostics() -> None:
    global _unlisted
    _unlisted = 0


class _InconsistentOrientation(RuntimeError):
    """Internal invariant violation: a component cannot be oriented."""


def _build_connections(a_cups, d_caps, mid_pairs, verticals, positions):
    """conn[node] = {'below': (node', side') or RAY, 'above': ...}."""
    conn: Dict[Node, Dict[str, object]] = {
        (line, k): {} for line in (0, 1) for k in positions
    }

    def link(n1: Node, s1: str, n2: Node, s2: str):
        conn[n1][s1] = (n2, s2)
        conn[n2][s2] = (n1, s1)

    for i, j in a_cups:
        link((0, i), "below", (0, j), "below")
    for i, j in d_caps:
        link((1, i), "above", (1, j), "above")
    for i, j in mid_pairs:
        link((0, i), "above", (0, j), "above")  # cap of the lower diagram
        link((1, i), "below", (1, j), "below")  # cup of the upper diagram
    for k in verticals:
        link((0, k), "above", (1, k), "below")
    for node, sides in conn.items():
        for side in ("below", "above"):
            sides.setdefault(side, RAY)
    return conn


def _component(conn, start: Node) -> Set[Node]:
    seen = {start}
    stack = [start]
    while stack:
        node = stack.pop()
        for side in ("below", "above"):
            nxt = conn[node][side]
            if nxt is not RAY and nxt[0] not in seen:
                seen.add(nxt[0])
                stack.append(nxt[0])
    return seen


def _has_ray(conn, comp: Set[Node]) -> bool:
    return any(conn[node][side] is RAY
               for node in comp for side in ("below", "above"))


def _value(conn, comp: Set[Node], bot, top) -> str:
    if _has_ray(conn, comp):
        return "y"
    line, pos = min(comp, key=lambda nd: (nd[1], nd[0]))
    label = bot[pos] if line == 0 else top[pos]
    return "1" if label == VEE else "x"


def _directions(conn, comp: Set[Node]) -> Dict[Node, str]:
    """Crossing direction per node for one coherent traversal."""
    ray_starts = [node for node in comp if conn[node]["below"] is RAY]
    dirs: Dict[Node, str] = {}
    if ray_starts:
        bottom_rays = [n for n in ray_starts if n[0] == 0]
        if not bottom_rays:
            raise _InconsistentOrientation("open component without a bottom ray")
        cur = bottom_rays[0]
        dirs[cur] = "up"  # entering from the ray below
        side = "above"
        while True:
            step = conn[cur][side]
            if step is RAY:
                break
            cur, arrived = step
            dirs[cur] = "up" if arrived == "below" else "down"
            side = "above" if arrived == "below" else "below"
        return dirs
    start = next(iter(comp))
    cur, side = start, "below"
    while True:
        nxt, arrived = conn[cur][side]
        dirs[nxt] = "up" if arrived == "below" else "down"
        side = "above" if arrived == "below" else "below"
        cur = nxt
        if cur == start:
            return dirs


def _relabel(conn, comp: Set[Node], value: str, bot, top) -> None:
    dirs = _directions(conn, comp)
    if value in ("1", "x"):
        leftmost = min(comp, key=lambda nd: (nd[1], nd[0]))
        want = "down" if value == "1" else "up"
        if dirs[leftmost] != want:
            dirs = {node: ("up" if d == "down" else "down")
                    for node, d in dirs.items()}
    for (line, pos), d in dirs.items():
        label = VEE if d == "down" else UP
        (bot if line == 0 else top)[pos] = label


def multiply(x: BasisVector, y: BasisVector,
             order: str = "lr",
             trace: Optional[List[str]] = None) -> AlgebraElement:
    """Product of two basis vectors as a formal integer combination.

    `order` selects the middle-pair processing order ('lr' leftmost
    first, 'rl' rightmost first); the result is order independent.
    `trace`, when given a list, receives one entry per surgery step of
    each live diagram, e.g. "merge:1*y->y".
    """
    global _unlisted
    if block_of(x.weight) != block_of(y.weight):
        return AlgebraElement.zero()
    if set(x.upper.caps) != set(y.lower.cups):
        return AlgebraElement.zero()

    pairs = sorted(x.upper.caps)
    if order == "rl":
        pairs = pairs[::-1]
    elif order != "lr":
        raise ValueError("order must be 'lr' or 'rl'")

    positions = sorted({e for arc in x.lower.cups for e in arc}
                       | {e for arc in x.upper.caps for e in arc}
                       | {e for arc in y.upper.caps for e in arc})
    a_cups, d_caps = x.lower.cups, y.upper.caps

    verticals = set(positions) - {e for arc in pairs for e in arc}
    bot0 = {k: x.weight.label(k) for k in positions}
    top0 = {k: y.weight.label(k) for k in positions}
    # states keyed by the (bottom, top) label tuples for coalescing
    states: Dict[Tuple, Tuple[int, Dict[int, str], Dict[int, str]]] = {}

    def key_of(bot, top):
        return (tuple(sorted(bot.items())), tuple(sorted(top.items())))

    states[key_of(bot0, top0)] = (1, bot0, top0)

    for idx, (i, j) in enumerate(pairs):
        live_pairs = pairs[idx:]
        next_pairs = pairs[idx + 1:]
        conn_before = _build_connections(a_cups, d_caps, live_pairs,
                                         verticals, positions)
        new_verticals = verticals | {i, j}
        conn_after = _build_connections(a_cups, d_caps, next_pairs,
                                        new_verticals, positions)
        comp_cap = _component(conn_before, (0, i))
        comp_cup = _component(conn_before, (1, i))
        new_states: Dict[Tuple, Tuple[int, Dict[int, str], Dict[int, str]]] = {}

        def emit(coeff, bot, top):
            k = key_of(bot, top)
            if k in new_states:
                c0, b0, t0 = new_states[k]
                new_states[k] = (c0 + coeff, b0, t0)
            else:
                new_states[k] = (coeff, bot, top)

        for coeff, bot, top in states.values():
            if comp_cap != comp_cup:  # merge
                v1 = _value(conn_before, comp_cap, bot, top)
                v2 = _value(conn_before, comp_cup, bot, top)
                pair = "".join(sorted((v1, v2)))
                result = {"11": "1", "1x": "x", "1y": "y"}.get(pair)
                if trace is not None:
                    trace.append(f"merge:{v1}*{v2}->{result or '0'}")
                if result is None:
                    continue
                merged = _component(conn_after, (0, i))
                nb, nt = dict(bot), dict(top)
                _relabel(conn_after, merged, result, nb, nt)
                emit(coeff, nb, nt)
            else:  # split
                val = _value(conn_before, comp_cap, bot, top)
                piece1 = _component(conn_after, (0, i))
                piece2 = _component(conn_after, (0, j))
                if piece1 == piece2:
                    _unlisted += 1
                    if trace is not None:
                        trace.append(f"split:{val}->unlisted")
                    continue
                ray1 = _has_ray(conn_after, piece1)
                ray2 = _has_ray(conn_after, piece2)
                if val == "1":
                    if ray1 or ray2:
                        _unlisted += 1
                        if trace is not None:
                            trace.append("split:1->unlisted")
                        continue
                    if trace is not None:
                        trace.append("split:1->1*x+x*1")
                    for va, vb in (("1", "x"), ("x", "1")):
                        nb, nt = dict(bot), dict(top)
                        _relabel(conn_after, piece1, va, nb, nt)
                        _relabel(conn_after, piece2, vb, nb, nt)
                        emit(coeff, nb, nt)
                elif val == "x":
                    if ray1 or ray2:
                        _unlisted += 1
                        if trace is not None:
                            trace.append("split:x->unlisted")
                        continue
                    if trace is not None:
                        trace.append("split:x->x*x")
                    nb, nt = dict(bot), dict(top)
                    _relabel(conn_after, piece1, "x", nb, nt)
                    _relabel(conn_after, piece2, "x", nb, nt)
                    emit(coeff, nb, nt)
                else:  # val == "y"
                    if ray1 and ray2:  # a line splitting into two lines
                        _unlisted += 1
                        if trace is not None:
                            trace.append("split:y->unlisted")
                        continue
                    circle, line = (piece2, piece1) if ray1 else (piece1, piece2)
                    if trace is not None:
                        trace.append("split:y->x*y")
                    nb, nt = dict(bot), dict(top)
                    _relabel(conn_after, circle, "x", nb, nt)
                    _relabel(conn_after, line, "y", nb, nt)
                    emit(coeff, nb, nt)

        verticals = new_verticals
        states = {k: v for k, v in new_states.items() if v[0] != 0}

    out = AlgebraElement.zero()
    for coeff, bot, top in states.values():
        if bot != top:
            raise _InconsistentOrientation("middle lines disagree after collapse")
        labels = {pos: lab for pos, lab in bot.items() if lab != UP}
        for pos in x.weight.crosses:
            labels[pos] = "x"
        for pos in x.weight.circles:
            labels[pos] = "o"
        nu = Weight.make(x.weight.rank[0], x.weight.rank[1], labels)
        vec = make_basis_vector(x.lower, nu, y.upper)
        out.add_term(vec, coeff)
    return out


def multiply_elements(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    out = AlgebraElement.zero()
    for vx, cx in a.terms.items():
        for vy, cy in b.terms.items():
            prod = multiply(vx, vy)
            for vec, c in prod.terms.items():
                out.add_term(vec, cx * cy * c)
    return out

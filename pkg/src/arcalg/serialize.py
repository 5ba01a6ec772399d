"""JSON / CSV / DOT / ASCII encodings.

All encoders sort keys canonically (ascending vertex position, weight
sort order) so identical inputs always serialize to identical bytes.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Sequence, Tuple

from .laurent import Laurent
from .weights import Block, Weight, block_of
from .arcs import (
    AlgebraElement,
    BasisVector,
    CapDiagram,
    CupDiagram,
    make_basis_vector,
)


# -- weights ----------------------------------------------------------------

def weight_to_json(w: Weight) -> Dict:
    return {"m": w.rank[0], "n": w.rank[1],
            "labels": {str(pos): lab for pos, lab in w.entries}}


def weight_from_json(data: Mapping) -> Weight:
    return Weight.make(int(data["m"]), int(data["n"]),
                       {int(pos): lab for pos, lab in data["labels"].items()})


def block_to_json(b: Block) -> Dict:
    return {"m": b.rank[0], "n": b.rank[1],
            "crosses": list(b.crosses), "circles": list(b.circles),
            "defect": b.defect}


# -- diagrams ---------------------------------------------------------------

def cups_to_json(d: CupDiagram) -> Dict:
    return {"cups": [list(a) for a in d.cups],
            "block": block_to_json(d.block)}


def caps_to_json(d: CapDiagram) -> Dict:
    return {"caps": [list(a) for a in d.caps],
            "block": block_to_json(d.block)}


def vector_to_json(v: BasisVector) -> Dict:
    return {"lower": cups_to_json(v.lower),
            "weight": weight_to_json(v.weight),
            "upper": caps_to_json(v.upper),
            "degree": v.degree}


def vector_from_json(data: Mapping) -> BasisVector:
    w = weight_from_json(data["weight"])
    blk = block_of(w)
    lower = CupDiagram(tuple(sorted(tuple(a) for a in data["lower"]["cups"])),
                       blk)
    upper = CapDiagram(tuple(sorted(tuple(a) for a in data["upper"]["caps"])),
                       blk)
    return make_basis_vector(lower, w, upper)


def element_to_json(el: AlgebraElement) -> Dict:
    return {"terms": [{"coeff": c, "vector": vector_to_json(v)}
                      for v, c in el.canonical_terms()]}


# -- matrices ---------------------------------------------------------------

def matrix_to_json(rows: Sequence[Weight], cols: Sequence[Weight],
                   entries: Sequence[Sequence[Laurent]]) -> Dict:
    return {"rows": [weight_to_json(w) for w in rows],
            "cols": [weight_to_json(w) for w in cols],
            "entries": [[poly.to_json() for poly in row] for row in entries]}


def matrix_to_csv(rows: Sequence[Weight], cols: Sequence[Weight],
                  entries: Sequence[Sequence[Laurent]]) -> str:
    def tag(w: Weight) -> str:
        return "".join(f"{lab}{pos}" for pos, lab in w.entries) or "empty"

    lines = ["," + ",".join(tag(w) for w in cols)]
    for w, row in zip(rows, entries):
        lines.append(tag(w) + "," + ",".join(str(poly(1)) for poly in row))
    return "\n".join(lines) + "\n"


# -- crystal graph ----------------------------------------------------------

def crystal_to_dot(weights: Sequence[Weight]) -> str:
    from .functors import crystal_edges

    def tag(w: Weight) -> str:
        return "".join(f"{lab}{pos}" for pos, lab in w.entries) or "empty"

    nodes = sorted(weights, key=Weight.sort_key)
    allowed = set(nodes)
    lines = ["digraph crystal {"]
    for w in nodes:
        lines.append(f'  "{tag(w)}";')
    for w in nodes:
        for i, w2 in crystal_edges(w):
            if w2 in allowed:
                lines.append(f'  "{tag(w)}" -> "{tag(w2)}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- ASCII rendering ---------------------------------------------------------

def render_ascii(v: BasisVector) -> str:
    """Three rows: caps above, vertex labels, cups below."""
    positions = set(v.weight.support())
    positions |= v.lower.endpoints() | v.upper.endpoints()
    if not positions:
        return "\n\n\n"
    lo, hi = min(positions), max(positions)

    def arcs_row(arcs: Sequence[Tuple[int, int]]) -> str:
        chars = []
        for pos in range(lo, hi + 1):
            ch = " "
            for i, j in arcs:
                if pos == i:
                    ch = "("
                elif pos == j:
                    ch = ")"
                elif i < pos < j and ch == " ":
                    ch = "-"
            chars.append(ch)
        return "".join(chars).rstrip()

    labels = "".join(v.weight.label(pos) for pos in range(lo, hi + 1))
    return "\n".join([arcs_row(v.upper.caps), labels,
                      arcs_row(v.lower.cups)])

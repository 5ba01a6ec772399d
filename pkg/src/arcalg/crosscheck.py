"""Cross-validation between the diagram calculus and the tensor oracle.

The bridge identity: the simultaneous generalised eigenspace of the
Hecke generators at an integer tuple has the same vector-space
dimension as the corresponding composite of translation operators
applied to the ground-state standard class, with each standard class
weighted by the dimension of its module (2^{mn} times the Weyl
dimension of the underlying even highest-weight module).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, Tuple

from .weights import Weight, lambda_ground, to_gl_weight, window_interval
from .functors import GrothendieckVector, apply_F
from . import tensor_oracle


def _weyl_dim(coeffs, k: int) -> int:
    """Dimension of the irreducible GL(k) module with a weakly
    decreasing integer highest weight."""
    out = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            out *= Fraction(coeffs[i] - coeffs[j] + j - i, j - i)
    assert out.denominator == 1
    return int(out)


def kac_dimension(w: Weight) -> int:
    """Vector-space dimension of the standard module indexed by w."""
    m, n = w.rank
    gl = to_gl_weight(w)
    even = _weyl_dim(gl.coeffs[:m], m) * _weyl_dim(gl.coeffs[m:], n)
    return 2 ** (m * n) * even


def diagram_dims(m: int, n: int, p: int, q: int, d: int
                 ) -> Dict[Tuple[int, ...], int]:
    """Predicted dimension of each translation composite of the
    ground-state standard module, keyed by the colour sequence; zero
    composites are omitted."""
    lo, hi = window_interval(p, q, m, n)
    colours = range(lo, hi)
    out: Dict[Tuple[int, ...], int] = {}
    for seq in product(colours, repeat=d):
        v = GrothendieckVector.of("V", lambda_ground(p, q, m, n))
        for i in seq:
            v = apply_F(i, v)
            if v.is_zero():
                break
        if v.is_zero():
            continue
        out[seq] = sum(c * kac_dimension(lam) for lam, c in v.entries.items())
    return out


def check_two_sided(m: int, n: int, p: int, q: int, d: int) -> Dict[str, object]:
    """Eigenspace dimensions from the oracle against the diagram-side
    prediction, compared over colour sequences inside the window (the
    oracle also sees eigenvalues outside it, where translation leaves
    the window); the oracle's full decomposition must still exhaust the
    tensor space."""
    oracle = tensor_oracle.weight_decomposition(m, n, p, q, d)
    diagram = diagram_dims(m, n, p, q, d)
    lo, hi = window_interval(p, q, m, n)
    in_win = {key: dim for key, dim in oracle.items()
              if all(lo <= i < hi for i in key)}
    total = 2 ** (m * n) * (m + n) ** d
    return {
        "pass": in_win == diagram and sum(oracle.values()) == total,
        "oracle": in_win,
        "oracle_full": oracle,
        "diagram": diagram,
        "total_dimension_ok": sum(oracle.values()) == total,
    }

"""Integer-coefficient Laurent polynomials in one grading variable q.

Kept deliberately small: the graded matrices only ever need addition,
multiplication, specialization at q=1, and a stable string/JSON form.
Exponents may be negative although every polynomial produced by this
package lives in non-negative degrees.
"""

from __future__ import annotations

from typing import Dict, Iterator, Mapping, Tuple


class Laurent:
    """Immutable Laurent polynomial with int coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    clean[int(e)] = int(c)
        self._coeffs: Dict[int, int] = clean

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def const(c: int) -> "Laurent":
        return Laurent({0: c})

    @staticmethod
    def q_power(e: int, c: int = 1) -> "Laurent":
        return Laurent({e: c})

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def coeff(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    def __sub__(self, other: "Laurent") -> "Laurent":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) - c
        return Laurent(out)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, int):
            return Laurent({e: c * other for e, c in self._coeffs.items()})
        out: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __call__(self, value: int = 1) -> int:
        """Specialize q to an integer value (default q=1)."""
        return sum(c * value**e for e, c in self._coeffs.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return isinstance(other, Laurent) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def to_json(self) -> Dict[str, int]:
        return {str(e): c for e, c in sorted(self._coeffs.items())}

    @staticmethod
    def from_json(data: Mapping[str, int]) -> "Laurent":
        return Laurent({int(e): int(c) for e, c in data.items()})

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items()):
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else str(c) + "*")
                parts.append(f"{head}q^{e}" if e != 1 else f"{head}q")
        return " + ".join(parts).replace("+ -", "- ")

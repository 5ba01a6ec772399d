"""Exact model of the induced module tensored with d copies of the
natural module, with its superalgebra action and the degenerate affine
Hecke operators — independent of all diagram code.

Basis keys are pairs (S, word): S is a sorted tuple of odd pairs (r, s)
with r > m >= s selecting which odd negative generators hit the highest
weight vector, and word lists the d natural-module letters.  All signs
are normalised to the lexicographic order of S on insertion, and all
arithmetic is integer.

The polynomial generator x_s acts by the quadratic Casimir-type tensor
sum_{a,b} (-1)^{par(b)} e_{a,b} (x) e_{b,a} with its first leg spread
over factors 0..s-1 and its second leg on factor s.  The transposition
s_r is the signed flip of word letters r, r+1.
"""

from __future__ import annotations

import itertools
from math import ceil
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg

OddPair = Tuple[int, int]
Key = Tuple[Tuple[OddPair, ...], Tuple[int, ...]]
Vec = Dict[Key, int]

STATE_LIMIT = 10 ** 6


def _add(vec: Vec, key: Key, c: int) -> None:
    c0 = vec.get(key, 0) + c
    if c0:
        vec[key] = c0
    else:
        vec.pop(key, None)


class TensorSpace:
    """V(ground weight of window p..q) tensor d copies of the natural
    module for GL(m|n); dimension 2^{mn} (m+n)^d."""

    def __init__(self, m: int, n: int, p: int, q: int, d: int):
        if p > q:
            raise ValueError("requires p <= q")
        size = 2 ** (m * n) * (m + n) ** d
        if size > STATE_LIMIT:
            raise ValueError(f"state space {size} exceeds limit {STATE_LIMIT}")
        self.m, self.n, self.p, self.q, self.d = m, n, p, q, d
        pairs = [(r, s) for r in range(m + 1, m + n + 1)
                 for s in range(1, m + 1)]
        subsets: List[Tuple[OddPair, ...]] = []
        for k in range(len(pairs) + 1):
            subsets.extend(itertools.combinations(pairs, k))
        words = list(itertools.product(range(1, m + n + 1), repeat=d))
        self.basis: List[Key] = [(S, w) for S in subsets for w in words]
        self.index: Dict[Key, int] = {k: i for i, k in enumerate(self.basis)}
        self._e_cache: Dict[Tuple[int, int, Tuple[OddPair, ...]],
                            Dict[Tuple[OddPair, ...], int]] = {}

    # -- parities -------------------------------------------------------

    def bar(self, i: int) -> int:
        return 0 if i <= self.m else 1

    def factor_parities(self, key: Key) -> List[int]:
        S, word = key
        head = (len(S) + self.n * (self.q + self.m)) % 2
        return [head] + [self.bar(i) for i in word]

    # -- action on the induced factor ------------------------------------

    def _insert(self, f: OddPair, S: Tuple[OddPair, ...]
                ) -> Optional[Tuple[Tuple[OddPair, ...], int]]:
        if f in S:
            return None  # odd generators square to zero
        before = sum(1 for g in S if g < f)
        out = tuple(sorted(S + (f,)))
        return out, -1 if before % 2 else 1

    def e_on_induced(self, a: int, b: int, S: Tuple[OddPair, ...]
                     ) -> Dict[Tuple[OddPair, ...], int]:
        """e_{a,b} applied to the canonical monomial vector v_S."""
        key = (a, b, S)
        cached = self._e_cache.get(key)
        if cached is not None:
            return cached
        m, n = self.m, self.n
        res: Dict[Tuple[OddPair, ...], int] = {}

        def acc(d: Dict[Tuple[OddPair, ...], int], mult: int) -> None:
            for k, v in d.items():
                c = res.get(k, 0) + v * mult
                if c:
                    res[k] = c
                else:
                    res.pop(k, None)

        if not S:
            if a == b:
                res[()] = self.p if a <= m else -(self.q + m)
            elif a > m >= b:
                res[((a, b),)] = 1
        else:
            f, rest = S[0], S[1:]
            r0, s0 = f
            pe = (self.bar(a) + self.bar(b)) % 2
            # supercommutator with the leading generator
            if b == r0:
                acc(self.e_on_induced(a, s0, rest), 1)
            if s0 == a:
                acc(self.e_on_induced(r0, b, rest), -(-1) ** pe)
            # push past it
            sign = (-1) ** pe
            for S2, c2 in self.e_on_induced(a, b, rest).items():
                ins = self._insert(f, S2)
                if ins is not None:
                    acc({ins[0]: ins[1]}, sign * c2)
        self._e_cache[key] = res
        return res

    # -- superalgebra derivation across all factors ----------------------

    def act_e(self, a: int, b: int, vec: Vec) -> Vec:
        mn = self.m + self.n
        if not (1 <= a <= mn and 1 <= b <= mn):
            raise ValueError("matrix-unit index out of range")
        pe = (self.bar(a) + self.bar(b)) % 2
        out: Vec = {}
        for (S, word), c in vec.items():
            pars = self.factor_parities((S, word))
            pre = list(itertools.accumulate([0] + pars))
            for S2, c2 in self.e_on_induced(a, b, S).items():
                _add(out, (S2, word), c * c2)
            for k in range(1, self.d + 1):
                if word[k - 1] == b:
                    sign = -1 if (pe * pre[k]) % 2 else 1
                    w2 = word[:k - 1] + (a,) + word[k:]
                    _add(out, (S, w2), c * sign)
        return out

    # -- Hecke operators --------------------------------------------------

    def act_x(self, s: int, vec: Vec) -> Vec:
        if not 1 <= s <= self.d:
            raise ValueError("x index out of range")
        mn = self.m + self.n
        out: Vec = {}
        for (S, word), c in vec.items():
            pars = self.factor_parities((S, word))
            pre = list(itertools.accumulate([0] + pars))
            a = word[s - 1]
            for b in range(1, mn + 1):
                py = (self.bar(a) + self.bar(b)) % 2
                base = c
                if self.bar(b):
                    base = -base
                if (py * pre[s]) % 2:
                    base = -base
                word2 = word[:s - 1] + (b,) + word[s:]
                for S2, c2 in self.e_on_induced(a, b, S).items():
                    _add(out, (S2, word2), base * c2)
                for t in range(1, s):
                    if word[t - 1] == b:
                        sx = -1 if (py * pre[t]) % 2 else 1
                        w3 = word2[:t - 1] + (a,) + word2[t:]
                        _add(out, (S, w3), base * sx)
        return out

    def act_s(self, r: int, vec: Vec) -> Vec:
        if not 1 <= r <= self.d - 1:
            raise ValueError("transposition index out of range")
        out: Vec = {}
        for (S, word), c in vec.items():
            i, j = word[r - 1], word[r]
            sign = -1 if self.bar(i) and self.bar(j) else 1
            w2 = word[:r - 1] + (j, i) + word[r + 1:]
            _add(out, (S, w2), c * sign)
        return out

    def act_perm(self, perm: Sequence[int], vec: Vec) -> Vec:
        """Right action of a permutation given in one-line notation
        (perm[k] = image of position k+1), via adjacent transpositions."""
        word = list(perm)
        for r in self._reduced_word(word):
            vec = self.act_s(r, vec)
        return vec

    @staticmethod
    def _reduced_word(perm: List[int]) -> List[int]:
        p = list(perm)
        out = []
        for i in range(len(p)):
            for j in range(len(p) - 1 - i):
                if p[j] > p[j + 1]:
                    p[j], p[j + 1] = p[j + 1], p[j]
                    out.append(j + 1)
        return out

    # -- matrices ---------------------------------------------------------

    def matrix_of(self, op) -> linalg.Matrix:
        k = len(self.basis)
        mat = []
        for key in self.basis:
            img = op({key: 1})
            row = [0] * k
            for key2, c in img.items():
                row[self.index[key2]] = c
            mat.append(row)
        return mat

    def matrix_of_x(self, s: int) -> linalg.Matrix:
        return self.matrix_of(lambda v: self.act_x(s, v))


# ---------------------------------------------------------------------------
# closed formula for x_s on pure word vectors (independent re-derivation)

def litlem_formula(space: TensorSpace, word: Tuple[int, ...], s: int) -> Vec:
    """x_s on the vector with empty odd part, from the explicit swap and
    creation sums; used to cross-check the spread-tensor implementation."""
    m, n, p, q, d = space.m, space.n, space.p, space.q, space.d
    bar = space.bar
    out: Vec = {}
    a = word[s - 1]
    diag = p if a <= m else q + m
    _add(out, ((), word), diag)
    for r in range(1, s):
        sign = bar(word[r - 1]) * bar(a)
        sign += sum((bar(word[r - 1]) + bar(a)) * bar(word[t - 1])
                    for t in range(r + 1, s))
        w2 = list(word)
        w2[r - 1], w2[s - 1] = w2[s - 1], w2[r - 1]
        _add(out, ((), tuple(w2)), -1 if sign % 2 else 1)
    if a > m:
        eps = n * (q + m) + sum(bar(word[t - 1]) for t in range(1, s))
        for j in range(1, m + 1):
            w2 = word[:s - 1] + (j,) + word[s:]
            _add(out, (((a, j),), w2), -1 if eps % 2 else 1)
    return out


# ---------------------------------------------------------------------------
# relation suites

def check_hecke_relations(m: int, n: int, p: int, q: int, d: int
                          ) -> Dict[str, object]:
    """Degenerate affine Hecke relations, the level-two cyclotomic
    relation on x_1, and (for d small enough) linear independence of the
    2^d d! operators x^sigma w, all on the full monomial basis."""
    space = TensorSpace(m, n, p, q, d)
    failures: List[str] = []
    basis_vecs = [{key: 1} for key in space.basis]

    def eq(u: Vec, v: Vec) -> bool:
        return u == v

    for vec in basis_vecs:
        for r in range(1, d):
            if not eq(space.act_s(r, space.act_s(r, vec)), vec):
                failures.append(f"s_{r}^2 != 1")
        for r in range(1, d - 1):
            lhs = space.act_s(r, space.act_s(r + 1, space.act_s(r, vec)))
            rhs = space.act_s(r + 1, space.act_s(r, space.act_s(r + 1, vec)))
            if not eq(lhs, rhs):
                failures.append(f"braid relation fails at {r}")
        for r in range(1, d):
            for s in range(1, d + 1):
                if s in (r, r + 1):
                    continue
                if not eq(space.act_x(s, space.act_s(r, vec)),
                          space.act_s(r, space.act_x(s, vec))):
                    failures.append(f"s_{r} x_{s} != x_{s} s_{r}")
        for r in range(1, d):
            lhs = space.act_x(r + 1, space.act_s(r, vec))
            rhs = space.act_s(r, space.act_x(r, vec))
            for key, c in vec.items():
                _add(rhs, key, c)
            if not eq(lhs, rhs):
                failures.append(f"s_{r} x_{r+1} != x_{r} s_{r} + 1")
        for s in range(1, d + 1):
            for t in range(s + 1, d + 1):
                if not eq(space.act_x(t, space.act_x(s, vec)),
                          space.act_x(s, space.act_x(t, vec))):
                    failures.append(f"x_{s} x_{t} != x_{t} x_{s}")
        if d >= 1:
            w1 = space.act_x(1, vec)
            w2 = space.act_x(1, w1)
            res: Vec = dict(w2)
            for key, c in w1.items():
                _add(res, key, -(p + q) * c)
            for key, c in vec.items():
                _add(res, key, p * q * c)
            if res:
                failures.append("(x_1 - p)(x_1 - q) != 0")
        if failures:
            break

    indep = None
    if d <= min(m, n) and d >= 1:
        rows = []
        for sigma in itertools.product((0, 1), repeat=d):
            for perm in itertools.permutations(range(1, d + 1)):
                flat: List[int] = []
                for vec in basis_vecs:
                    img = dict(vec)
                    for s, e in enumerate(sigma, start=1):
                        if e:
                            img = space.act_x(s, img)
                    img = space.act_perm(list(perm), img)
                    row = [0] * len(space.basis)
                    for key, c in img.items():
                        row[space.index[key]] = c
                    flat.extend(row)
                rows.append(flat)
        indep = linalg.rank(rows) == len(rows)
        if not indep:
            failures.append("operators x^sigma w are dependent")

    # deduplicate failure messages
    seen: List[str] = []
    for f in failures:
        if f not in seen:
            seen.append(f)
    return {"pass": not seen,
            "failures": seen,
            "dimension": len(space.basis),
            "highest_weight_module_dim": 2 ** (m * n),
            "independent_operator_count":
                (2 ** d * _factorial(d)) if indep else None}


def _factorial(d: int) -> int:
    out = 1
    for k in range(2, d + 1):
        out *= k
    return out


# ---------------------------------------------------------------------------
# simultaneous generalized eigenspaces

def weight_decomposition(m: int, n: int, p: int, q: int, d: int
                         ) -> Dict[Tuple[int, ...], int]:
    """Dimensions of the simultaneous generalised eigenspaces of
    x_1..x_d, keyed by the integer eigenvalue tuple; zero entries are
    omitted and the dimensions always sum to the full space."""
    space = TensorSpace(m, n, p, q, d)
    k = len(space.basis)
    if d == 0:
        return {(): k}
    colour_lo, colour_hi = p - m + 1, q + n - 1

    # the operators commute, so each simultaneous space is the
    # intersection of one global generalised eigenspace per operator;
    # this keeps every elimination over the integers
    def candidates(s: int, a: linalg.Matrix) -> List[int]:
        if s == 1:
            return sorted({p, q})
        base = list(range(colour_lo, colour_hi + 1))
        radius = ceil(max((sum(abs(x) for x in row) for row in a), default=0))
        extra = [c for c in range(-radius, radius + 1) if c not in base]
        return base + extra

    per_op: List[Dict[int, linalg.Matrix]] = []
    for s in range(1, d + 1):
        a = space.matrix_of_x(s)
        spaces: Dict[int, linalg.Matrix] = {}
        found = 0
        for c in candidates(s, a):
            if found == k:
                break
            es = linalg.iterated_left_kernel(a, c)
            if es:
                spaces[c] = es
                found += len(es)
        if found != k:
            raise AssertionError("eigenspaces do not exhaust the space")
        per_op.append(spaces)

    results: Dict[Tuple[int, ...], int] = {}

    def rec(sub: linalg.Matrix, level: int, prefix: Tuple[int, ...]) -> None:
        if not sub:
            return
        if level > d:
            results[prefix] = len(sub)
            return
        for c, es in per_op[level - 1].items():
            rec(linalg.intersect_rowspaces(sub, es), level + 1, prefix + (c,))

    rec([[1 if i == j else 0 for j in range(k)] for i in range(k)], 1, ())
    if sum(results.values()) != k:
        raise AssertionError("simultaneous eigenspaces do not exhaust")
    return results


# ---------------------------------------------------------------------------
# Casimir scalar bookkeeping

def _form(u: Sequence[int], v: Sequence[int], m: int, n: int):
    return (sum(u[r] * v[r] for r in range(m))
            - sum(u[r] * v[r] for r in range(m, m + n)))


def casimir_check(m: int, n: int, coeffs: Sequence[int], r: int
                  ) -> Dict[str, object]:
    """Check the shifted-Casimir eigenvalue identity
    (c_{lam+eps_r} - c_lam - (m-n)) / 2 = (lam+rho, eps_r) - (1-(-1)^par(r))/2
    for an arbitrary integral weight lam and 1 <= r <= m+n."""
    from fractions import Fraction

    if len(coeffs) != m + n or not 1 <= r <= m + n:
        raise ValueError("bad rank or index")
    rho = [1 - t for t in range(1, m + 1)] + [m - s for s in range(1, n + 1)]
    delta = [1] * m + [-1] * n

    def casimir(lam: Sequence[int]) -> int:
        shifted = [lam[t] + 2 * rho[t] + (m - n - 1) * delta[t]
                   for t in range(m + n)]
        return _form(shifted, lam, m, n)

    lam = list(coeffs)
    lam_up = list(coeffs)
    lam_up[r - 1] += 1
    lhs = Fraction(casimir(lam_up) - casimir(lam) - (m - n), 2)
    par = 0 if r <= m else 1
    rhs = (_form([lam[t] + rho[t] for t in range(m + n)],
                 [1 if t == r - 1 else 0 for t in range(m + n)], m, n)
           - Fraction(1 - (-1) ** par, 2))
    return {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs}

"""Tensor-space oracle: operator identities and exact decompositions."""

import itertools

import pytest

from arcalg.tensor_oracle import (
    TensorSpace,
    casimir_check,
    check_hecke_relations,
    litlem_formula,
    weight_decomposition,
)


def _spaces():
    return [TensorSpace(1, 1, 0, 1, 2), TensorSpace(2, 1, 0, 0, 2),
            TensorSpace(1, 2, 0, 1, 2)]


def test_closed_formula_matches_operator():
    # x_s on every pure word vector, for both word positions
    for space in _spaces():
        mn = space.m + space.n
        for word in itertools.product(range(1, mn + 1), repeat=2):
            for s in (1, 2):
                got = space.act_x(s, {((), word): 1})
                want = litlem_formula(space, word, s)
                assert got == want, (space.m, space.n, word, s)


def test_transposition_involution():
    for space in _spaces():
        for key in space.basis:
            twice = space.act_s(1, space.act_s(1, {key: 1}))
            assert twice == {key: 1}


def test_action_is_superalgebra_module():
    # supercommutator [e_ab, e_cd] = delta e_ad -+ delta e_cb on vectors
    space = TensorSpace(1, 1, 0, 1, 1)
    mn = space.m + space.n
    for a, b, c, d in itertools.product(range(1, mn + 1), repeat=4):
        pe = (space.bar(a) + space.bar(b)) % 2
        pf = (space.bar(c) + space.bar(d)) % 2
        sign = -1 if pe and pf else 1
        for key in space.basis:
            vec = {key: 1}
            lhs = {}
            for k2, v in space.act_e(a, b, space.act_e(c, d, vec)).items():
                lhs[k2] = lhs.get(k2, 0) + v
            for k2, v in space.act_e(c, d, space.act_e(a, b, vec)).items():
                lhs[k2] = lhs.get(k2, 0) - sign * v
            rhs = {}
            if b == c:
                for k2, v in space.act_e(a, d, vec).items():
                    rhs[k2] = rhs.get(k2, 0) + v
            if d == a:
                for k2, v in space.act_e(c, b, vec).items():
                    rhs[k2] = rhs.get(k2, 0) - sign * v
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            assert lhs == rhs, (a, b, c, d, key)


def test_x_operators_commute():
    for space in _spaces():
        for key in space.basis:
            v12 = space.act_x(1, space.act_x(2, {key: 1}))
            v21 = space.act_x(2, space.act_x(1, {key: 1}))
            assert v12 == v21


@pytest.mark.parametrize("m,n,d", [(1, 1, 1), (1, 1, 2), (2, 2, 2)])
@pytest.mark.parametrize("p,q", [(0, 0), (0, 1)])
def test_hecke_relations(m, n, p, q, d):
    rep = check_hecke_relations(m, n, p, q, d)
    assert rep["pass"], rep["failures"]
    assert rep["highest_weight_module_dim"] == 2 ** (m * n)
    if d <= min(m, n):
        import math
        assert rep["independent_operator_count"] == 2 ** d * math.factorial(d)


def test_weight_decomposition_exhausts():
    dims = weight_decomposition(1, 1, 0, 1, 2)
    assert sum(dims.values()) == 2 * 3 ** 0 * 2 ** 2  # 2^{mn} (m+n)^d
    assert all(dim > 0 for dim in dims.values())


def test_casimir_identity():
    cases = [((3, 1, 0), (2, 1)), ((0, 0), (1, 1)), ((5, 2, -1, -4), (2, 2))]
    for coeffs, (m, n) in cases:
        for r in range(1, m + n + 1):
            rep = casimir_check(m, n, coeffs, r)
            assert rep["equal"], (coeffs, m, n, r, rep)


def test_casimir_flipped_sign_fails():
    # the identity's parity term enters with a minus sign; flipping it
    # breaks every odd direction
    rep = casimir_check(2, 1, (3, 1, 0), 3)
    assert rep["equal"]
    flipped_rhs = rep["rhs"] + 2  # "+(1-(-1)^bar)/2" instead of minus
    assert rep["lhs"] != flipped_rhs


def test_rejects_oversized_state_space():
    with pytest.raises(ValueError):
        TensorSpace(3, 3, 0, 0, 6)

from itertools import product

import pytest

import braidhom as bh
from braidhom.bimodules import (
    monoid_bimodule,
    trivial_ring_algebra,
    verify_bimodule_algebra,
)

from conftest import c2_trivial_factorization, small_catalog


def test_trivial_bimodule_everywhere():
    for name, bs in small_catalog():
        M = bh.trivial_bimodule(bs, 2)
        assert bh.verify_bimodule(bs, M).holds, name


def test_trivial_degree_one_differential_vanishes():
    mm = bh.minmax_braiding(2)
    cx = bh.braided_chain_complex(mm, bh.trivial_bimodule(mm), 1)
    assert cx.diffs[1].is_zero()


def brute_right_law(bs, M):
    for x, y in product(range(bs.size), repeat=2):
        a, b = bs.pair(x, y)
        if M.right[y] * M.right[x] != M.right[b] * M.right[a]:
            return False
    return True


def brute_left_law(bs, M):
    for x, y in product(range(bs.size), repeat=2):
        a, b = bs.pair(x, y)
        if M.left[x] * M.left[y] != M.left[a] * M.left[b]:
            return False
    return True


def test_adjoint_modules_satisfy_their_laws():
    # adjoint structures are plain (X, sigma)-modules; the pseudo-unit law
    # does not apply to them
    for name, bs in small_catalog() + [("flip:3", bh.flip_braiding(3))]:
        right = bh.adjoint_right_module(bs)
        left = bh.adjoint_left_module(bs)
        assert bh.verify_bimodule(bs, right, unit_law=False).holds, name
        assert bh.verify_bimodule(bs, left, unit_law=False).holds, name
        assert brute_right_law(bs, right), name
        assert brute_left_law(bs, left), name


def test_adjoint_over_puibs_breaks_unit_law():
    bs = c2_trivial_factorization().braiding
    left = bh.adjoint_left_module(bs)
    rep = bh.verify_bimodule(bs, left)
    assert not rep.holds and "pseudo-unit" in rep.detail


def test_adjoint_combination_report_matches_brute_force():
    for name, bs in small_catalog():
        right, left, report = bh.adjoint_bimodule(bs)
        commute = all(
            left.left[x] * right.right[y] == right.right[y] * left.left[x]
            for x in range(bs.size)
            for y in range(bs.size)
        )
        assert report.holds == commute, name


def test_adjoint_combination_verdicts():
    # over the flip both actions are trivial and combine; over the identity
    # braiding they are constant projections and do not
    _, _, report = bh.adjoint_bimodule(bh.flip_braiding(3))
    assert report.holds
    _, _, report = bh.adjoint_bimodule(bh.identity_braiding(3))
    assert not report.holds


def test_adjoint_action_values():
    mm = bh.minmax_braiding(3)
    right = bh.adjoint_right_module(mm)
    # e_x . y = e_{x'} with (y', x') = sigma(x, y)
    for x, y in product(range(3), repeat=2):
        col = right.right[y].column(x)
        assert col[mm.pair(x, y)[1]] == 1 and sum(map(abs, col)) == 1


def test_monoid_bimodule_regular():
    c2 = bh.cyclic_group(2)
    alg = monoid_bimodule(c2)
    assert verify_bimodule_algebra_over_monoid(alg, c2)
    one = bh.FiniteMonoid([[0]])
    tiny = monoid_bimodule(one)
    assert tiny.rank == 1 and tiny.left[0] == bh.IntMatrix.identity(1)


def verify_bimodule_algebra_over_monoid(alg, g):
    basis = [tuple(1 if t == i else 0 for t in range(alg.rank)) for i in range(alg.rank)]
    for i, j in product(range(g.size), repeat=2):
        prod = alg.multiply(basis[i], basis[j])
        assert prod == basis[g.mul(i, j)]
    return True


def test_monoid_bimodule_with_embedding():
    fact = c2_trivial_factorization()
    bs = fact.braiding
    alg = monoid_bimodule(fact.monoid, bs=bs, embedding=list(fact.elements))
    assert bh.verify_bimodule(bs, alg).holds
    assert verify_bimodule_algebra(bs, alg).holds
    # rank equals the monoid size (here the reduced structure monoid of C2)
    assert alg.rank == 2


def test_monoid_bimodule_embedding_violation():
    c2 = bh.cyclic_group(2)
    maxmax = bh.size2_family("maxmax")
    # sigma(0,1) = (1,1) but 0+1 != 1+1 in C2
    with pytest.raises(ValueError, match="defining relation"):
        monoid_bimodule(c2, bs=maxmax, embedding=[0, 1])


def test_trivial_ring_algebra():
    mm = bh.minmax_braiding(2)
    alg = trivial_ring_algebra(mm)
    assert verify_bimodule_algebra(mm, alg).holds
    assert alg.multiply((2,), (3,)) == (6,)


def test_pseudo_unit_law_enforced():
    fact = c2_trivial_factorization()
    bs = fact.braiding
    assert bh.verify_bimodule(bs, bh.trivial_bimodule(bs)).holds
    # an action where the pseudo-unit acts by -1 violates the unit law
    bad = bh.Bimodule(
        bs.size,
        1,
        left=[bh.IntMatrix.from_rows([[-1]]), bh.IntMatrix.identity(1)],
        right=[bh.IntMatrix.identity(1), bh.IntMatrix.identity(1)],
    )
    rep = bh.verify_bimodule(bs, bad)
    assert not rep.holds and "pseudo-unit" in rep.detail


def test_bimodule_json_roundtrip():
    mm = bh.minmax_braiding(2)
    right, left, _ = bh.adjoint_bimodule(mm)
    data = right.to_json()
    again = bh.Bimodule.from_json(data, mm.size)
    assert again.right == right.right and again.left is None

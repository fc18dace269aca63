from itertools import product
from math import comb, gcd

import pytest

import braidhom as bh
from braidhom.catalog import canonical_form

from conftest import full_catalog, product_factorization, s3_with_order_elements


def test_constructors_pass_axiom_checks():
    for name, bs in full_catalog():
        assert bh.check_ybe(bs).holds, name
        assert bh.check_idempotent(bs).holds, name


def test_identity_braiding():
    one = bh.identity_braiding(1)
    assert one.size == 1 and one.pair(0, 0) == (0, 0)
    assert bh.check_pseudo_unit(one, 0).holds
    free = bh.identity_braiding(3)
    # every word is normal; the structure monoid is free
    for w in product(range(3), repeat=4):
        assert bh.is_normal(free, w)
        assert bh.normal_form(free, w) == w
    with pytest.raises(bh.BraidedSetError):
        bh.identity_braiding(0)


def test_minmax_braiding():
    assert bh.minmax_braiding(1) == bh.identity_braiding(1)
    mm2 = bh.minmax_braiding(2)
    assert mm2 == bh.size2_family("minmax")
    mm3 = bh.minmax_braiding(3)
    import itertools

    for w in itertools.permutations(range(3)):
        assert bh.normal_form(mm3, w) == (0, 1, 2)


def test_lattice_braidings():
    chain = bh.lattice_braiding(bh.chain_lattice(3))
    assert chain == bh.minmax_braiding(3)
    divisors = bh.lattice_braiding(bh.divisor_lattice(12))
    assert bh.check_ybe(divisors).holds
    boolean = bh.lattice_braiding(bh.boolean_lattice(2))
    assert bh.check_idempotent(boolean).holds
    # gcd/lcm table cross-check
    lat = bh.divisor_lattice(12)
    for a in lat.labels:
        for b in lat.labels:
            i, j = lat.labels.index(a), lat.labels.index(b)
            assert lat.labels[lat.meet[i][j]] == gcd(a, b)
            assert lat.labels[lat.join[i][j]] == a * b // gcd(a, b)


def test_lattice_axioms_violation_named():
    # the diamond M3 is a lattice but not distributive
    n = 5
    bot, a, b, c, top = range(5)
    meet = [[bot] * n for _ in range(n)]
    join = [[top] * n for _ in range(n)]
    for x in range(n):
        meet[x][x] = join[x][x] = x
        meet[bot][x] = meet[x][bot] = bot
        meet[top][x] = meet[x][top] = x
        join[bot][x] = join[x][bot] = x
        join[top][x] = join[x][top] = top
    with pytest.raises(bh.BraidedSetError, match="distributivity"):
        bh.FiniteLattice(n, meet, join)


def test_trivial_factorization_is_multiplication_braiding():
    c2 = bh.cyclic_group(2)
    fact = bh.trivial_factorization(c2)
    bs = fact.braiding
    for x in range(2):
        for y in range(2):
            g1, g2 = fact.elements[x], fact.elements[y]
            a, b = bs.pair(x, y)
            assert fact.elements[a] == c2.unit
            assert fact.elements[b] == c2.mul(g1, g2)


def test_s3_factorization_is_puibs():
    g, c, t = s3_with_order_elements()
    fact = bh.exact_factorization(g, [g.unit, c, g.mul(c, c)], [g.unit, t])
    bs = fact.braiding
    assert bs.size == 4
    assert bs.is_ybe() and bs.is_idempotent()
    assert bh.check_pseudo_unit(bs, bs.pseudo_unit).holds


def test_direct_product_factorization_swaps():
    fact = product_factorization(2, 3)
    bs = fact.braiding
    e = bs.pseudo_unit
    ks = [x for x in range(bs.size) if x != e and fact.elements[x] in fact.K]
    hs = [x for x in range(bs.size) if x != e and fact.elements[x] in fact.H]
    for k in ks:
        for h in hs:
            assert bs.pair(k, h) == (h, k)


def test_factorization_errors():
    c2 = bh.cyclic_group(2)
    with pytest.raises(bh.BraidedSetError, match="not unique"):
        bh.exact_factorization(c2, [0, 1], [0, 1])
    with pytest.raises(bh.BraidedSetError, match="not surjective"):
        bh.exact_factorization(c2, [0], [0])
    with pytest.raises(bh.BraidedSetError, match="submonoid"):
        bh.exact_factorization(bh.cyclic_group(4), [0, 1], [0])


def test_size2_family():
    assert bh.size2_family("constant").pair(1, 1) == (0, 0)
    assert bh.size2_family("maxmax").pair(1, 0) == (1, 1)
    assert bh.size2_family("identity") == bh.identity_braiding(2)
    with pytest.raises(bh.BraidedSetError, match="unknown size-2 tag"):
        bh.size2_family("nope")
    assert len(bh.SIZE2_TAGS) == 16
    for tag in bh.SIZE2_TAGS:
        bs = bh.size2_family(tag)
        assert bh.check_ybe(bs).holds, tag
        assert bh.check_idempotent(bs).holds, tag


def test_size2_tags_pairwise_non_isomorphic():
    forms = {canonical_form(bh.size2_family(tag)) for tag in bh.SIZE2_TAGS}
    assert len(forms) == 16


def test_enumeration_sizes():
    rep = bh.enumerate_idempotent_braidings(1)
    assert rep.class_count == 1 and rep.raw_count == 1
    rep2 = bh.enumerate_idempotent_braidings(2)
    assert rep2.class_count == 16
    # raw count oracle: a class fixed by the relabeling contributes one
    # table, any other class two
    expected_raw = 0
    swap = (1, 0)
    for cls in rep2.classes:
        relabeled = [
            [tuple(swap[v] for v in cls.pair(swap[x], swap[y])) for y in range(2)]
            for x in range(2)
        ]
        expected_raw += 1 if bh.BraidedSet(relabeled) == cls else 2
    assert rep2.raw_count == expected_raw == sum(rep2.orbit_sizes)
    # the 16 classes are exactly the 16 tagged families
    assert {canonical_form(c) for c in rep2.classes} == {
        canonical_form(bh.size2_family(t)) for t in bh.SIZE2_TAGS
    }
    with pytest.raises(bh.BoundExceeded, match="enumeration bound exceeded"):
        bh.enumerate_idempotent_braidings(4)


def test_enumeration_n3():
    rep = bh.enumerate_idempotent_braidings(3)
    assert rep.raw_count == sum(rep.orbit_sizes)
    assert all(bh.check_ybe(c).holds and bh.check_idempotent(c).holds for c in rep.classes)
    forms = {canonical_form(c) for c in rep.classes}
    assert len(forms) == rep.class_count
    # every size-2 class extends to a size-3 table count at least as large
    assert rep.class_count >= 16


def test_braided_set_isomorphic():
    mm = bh.minmax_braiding(2)
    assert bh.braided_set_isomorphic(mm, mm) == (0, 1)
    # relabeling minmax through the swap dualizes min and max
    maxmin = bh.BraidedSet([[(max(x, y), min(x, y)) for y in range(2)] for x in range(2)])
    assert bh.braided_set_isomorphic(mm, maxmin) == (1, 0)
    # maxmax relabeled is min-min-like but still isomorphic to itself only
    assert bh.braided_set_isomorphic(bh.size2_family("constant"), bh.identity_braiding(2)) is None
    assert bh.braided_set_isomorphic(mm, bh.minmax_braiding(3)) is None
    # an explicitly relabeled copy is isomorphic via the swap
    bs = bh.size2_family("constant")
    swap = (1, 0)
    relabeled = bh.BraidedSet(
        [
            [tuple(swap[v] for v in bs.pair(swap[x], swap[y])) for y in range(2)]
            for x in range(2)
        ]
    )
    assert bh.braided_set_isomorphic(bs, relabeled) == (1, 0)


def test_binomial_counts_for_minmax_critical_words():
    for n in (2, 3, 4):
        mm = bh.minmax_braiding(n)
        for k in range(6):
            words = bh.critical_basis(mm, k)
            assert len(words) == comb(n, k)
            assert all(all(w[i] > w[i + 1] for i in range(k - 1)) for w in words)

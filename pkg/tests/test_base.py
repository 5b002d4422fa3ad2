"""Poset bases, Weyl group bases, bigrassmannian permutations, and
feedback-free generic recognition."""

from itertools import combinations
from math import comb

import pytest

from schubcells import perms
from schubcells.base import (
    embedding_minimality_check,
    FinitePoset,
    base_weights,
    bigrassmannian_typeA,
    bruhat_poset,
    generic_recognize_from_base,
    minimality_check,
    poset_base,
    poset_base_indices,
    supremum,
    weyl_base,
)
from schubcells.patterns import generic_pattern
from schubcells.plucker import subset_of
from schubcells.weyl import weyl_group

RANK4_GROUPS = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "G2", "D4")


def chain_poset(k):
    return FinitePoset.from_leq(list(range(k)), lambda a, b: a <= b)


def boolean_lattice(m):
    elems = [frozenset(s) for r in range(m + 1) for s in combinations(range(m), r)]
    return FinitePoset.from_leq(elems, lambda a, b: a <= b)


def brute_force_base(P):
    """Independent oracle: literal definition, searching all subsets of the
    strict lower set of each element."""
    n = len(P)
    out = []
    for a in range(n):
        lower = [x for x in range(n) if x != a and P.leq_idx(x, a)]
        expressible = False
        for r in range(len(lower) + 1):
            for Q in combinations(lower, r):
                from schubcells.base import supremum_idx

                if supremum_idx(P, Q) == a:
                    expressible = True
                    break
            if expressible:
                break
        if not expressible:
            out.append(a)
    return out


# ----- FinitePoset ----------------------------------------------------------------


def test_poset_validation():
    with pytest.raises(ValueError):
        FinitePoset(["a", "b"], [0b11, 0b11])  # antisymmetry violated
    with pytest.raises(ValueError):
        FinitePoset(["a", "b"], [0b01, 0b10])  # antichain: two minima
    with pytest.raises(ValueError):
        FinitePoset.from_leq([0, 1], lambda a, b: a == b)  # two minima
    with pytest.raises(ValueError):
        # 0 < 1 < 2 without 0 < 2: not transitive
        FinitePoset([0, 1, 2], [0b011, 0b110, 0b100])


def test_supremum():
    P = boolean_lattice(2)
    atoms = [x for x in P.elements if len(x) == 1]
    assert supremum(P, atoms) == frozenset({0, 1})
    assert supremum(P, [atoms[0]]) == atoms[0]
    assert supremum(P, []) == frozenset()
    g = weyl_group("A2")
    B = bruhat_poset(g)
    assert supremum(B, []) == g.identity
    assert supremum(B, [g.simple(1), g.simple(2)]) is None


def test_poset_base_chains_and_lattices():
    for k in (2, 3, 5, 7):
        P = chain_poset(k)
        assert poset_base(P) == list(range(1, k))
        assert poset_base_indices(P) == brute_force_base(P)
    for m in (2, 3):
        P = boolean_lattice(m)
        got = poset_base(P)
        assert sorted(map(sorted, got)) == [[i] for i in range(m)]
        assert poset_base_indices(P) == brute_force_base(P)


def test_poset_base_small_weyl_vs_brute_force():
    for spec in ("A2", "B2"):
        g = weyl_group(spec)
        P = bruhat_poset(g)
        assert poset_base_indices(P) == brute_force_base(P)


def test_poset_base_S3():
    g = weyl_group("A2")
    got = {g.one_line(b.element) for b in weyl_base(g)}
    assert got == {(2, 1, 3), (1, 3, 2), (2, 3, 1), (3, 1, 2)}


def test_base_embedding_property():
    # a <= b iff base-lower-set(a) is contained in base-lower-set(b)
    posets = [chain_poset(6), boolean_lattice(3)]
    posets += [bruhat_poset(weyl_group(s)) for s in ("A2", "A3", "B2", "B3", "G2", "D4")]
    for P in posets:
        base = poset_base_indices(P)
        sigs = []
        for x in range(len(P)):
            sigs.append(frozenset(b for b in base if P.leq_idx(b, x)))
        for a in range(len(P)):
            for b in range(len(P)):
                assert P.leq_idx(a, b) == (sigs[a] <= sigs[b])


# ----- Weyl bases --------------------------------------------------------------------


def test_weyl_base_counts_typeA():
    for n in (3, 4, 5):
        g = weyl_group("A", n - 1)
        assert len(weyl_base(g)) == comb(n + 1, 3)


def test_weyl_base_frozen_sizes():
    # frozen outputs of the definitional computation
    assert len(weyl_base(weyl_group("B2"))) == 6
    assert len(weyl_base(weyl_group("B3"))) == 19
    assert len(weyl_base(weyl_group("G2"))) == 10
    assert len(weyl_base(weyl_group("D4"))) == 29


@pytest.mark.parametrize("spec", RANK4_GROUPS)
def test_weyl_base_unique_descents(spec):
    g = weyl_group(spec)
    for b in weyl_base(g):
        assert g.left_descents(b.element) == frozenset({b.left_descent})
        assert g.right_descents(b.element) == frozenset({b.right_descent})


def test_bigrassmannian_typeA():
    rows = bigrassmannian_typeA(3)
    assert len(rows) == comb(4, 3) == 4
    by_triple = {t: (p, s) for t, p, s in rows}
    assert by_triple[(0, 1, 2)] == ((2, 1, 3), frozenset({2}))
    assert {s for _, _, s in rows} == {
        frozenset({2}),
        frozenset({3}),
        frozenset({1, 3}),
        frozenset({2, 3}),
    }
    for n in (2, 3, 4, 5, 6):
        g = weyl_group("A", n - 1)
        got = {g.one_line(b.element) for b in weyl_base(g)}
        assert got == {p for _, p, s in bigrassmannian_typeA(n)}
        # the coordinate subset is the prefix at the unique descent
        for t, p, s in bigrassmannian_typeA(n):
            d = [i for i in range(1, n) if p[i - 1] > p[i]]
            assert len(d) == 1
            assert perms.prefix_set(p, d[0]) == s


def test_base_weights():
    g = weyl_group("A2")
    got = {frozenset(subset_of(pw)) for pw in base_weights(g)}
    assert got == {
        frozenset({2}),
        frozenset({3}),
        frozenset({1, 3}),
        frozenset({2, 3}),
    }
    for spec in ("A3", "B3", "G2"):
        gg = weyl_group(spec)
        weights = base_weights(gg)
        assert len(set(weights)) == len(weyl_base(gg))
    assert len(base_weights(weyl_group("A3"))) == 10


# ----- generic recognition from the base ------------------------------------------------


@pytest.mark.parametrize("spec", ("A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"))
def test_generic_recognize_from_base_inverts(spec):
    g = weyl_group(spec)
    bw = base_weights(g)
    for w in g.elements():
        pat = generic_pattern(g, w)
        bits = {pw: pat.bit(pw) for pw in bw}
        assert generic_recognize_from_base(g, bits) == w


def test_generic_recognize_all_ones_and_none():
    g = weyl_group("A2")
    bw = base_weights(g)
    assert generic_recognize_from_base(g, {pw: 1 for pw in bw}) == g.longest_element()
    by_subset = {frozenset(subset_of(pw)): pw for pw in bw}
    bits = {
        by_subset[frozenset({2})]: 1,
        by_subset[frozenset({3})]: 0,
        by_subset[frozenset({1, 3})]: 1,
        by_subset[frozenset({2, 3})]: 0,
    }
    assert generic_recognize_from_base(g, bits) is None
    with pytest.raises(ValueError):
        generic_recognize_from_base(g, {})


def test_minimality():
    assert minimality_check(weyl_group("A1"))
    assert minimality_check(weyl_group("A2"))
    assert minimality_check(weyl_group("A3"))
    # mere separation survives a deletion already in B2; the order-embedding
    # property is what the base is minimal for
    assert not minimality_check(weyl_group("B2"))
    for spec in ("A2", "A3", "B2", "B3", "G2", "D4"):
        assert embedding_minimality_check(weyl_group(spec))

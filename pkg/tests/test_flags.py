"""Exact flags: minors, coordinate flags, generic cell points, pattern
extraction, parsing."""

import json
import random
from fractions import Fraction
from itertools import combinations

import pytest

from schubcells import perms
from schubcells.flags import (
    flag_from_columns,
    coordinate_flag,
    flag_from_rows,
    load_flag,
    parse_flag_csv,
    parse_flag_json,
    pattern_json,
    plucker_coordinate,
    proper_subsets,
    random_cell_point,
    subset_pattern,
    type_a_group,
    vanishing_pattern,
)
from schubcells.patterns import check_acceptable, generic_pattern


def brute_minor(rows, I):
    """Independent oracle: cofactor-expansion determinant of the submatrix."""
    I = sorted(I)
    k = len(I)
    sub = [[rows[r - 1][c] for c in range(k)] for r in I]

    def det(m):
        if len(m) == 1:
            return m[0][0]
        total = Fraction(0)
        for j in range(len(m)):
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det(minor)
        return total

    return det(sub)


def random_rational_matrix(rng, n):
    while True:
        rows = [
            [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
            for _ in range(n)
        ]
        try:
            return flag_from_rows(rows)
        except ValueError:
            continue


def test_identity_minors():
    for n in (2, 3, 4, 5):
        x = coordinate_flag(perms.identity(n))
        for i in range(1, n):
            assert plucker_coordinate(x, range(1, i + 1)) == 1


def test_minor_against_cofactor_oracle():
    rng = random.Random(12)
    for n in (2, 3, 4, 5):
        x = random_rational_matrix(rng, n)
        for I in proper_subsets(n):
            assert x.minor(I) == brute_minor(x.matrix, I)


def test_coordinate_flag_structure():
    assert coordinate_flag((1, 2, 3)).matrix == flag_from_rows(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    ).matrix
    x = coordinate_flag((3, 2, 1))
    cols = [tuple(row[j] for row in x.matrix) for j in range(3)]
    assert cols == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_permutation_support_lemma():
    # p_I does not vanish at the coordinate flag of w iff I = w([1, |I|])
    for n in range(2, 7):
        for w in perms.all_perms(n):
            x = coordinate_flag(w)
            for I in proper_subsets(n):
                assert (x.minor(I) != 0) == (I == perms.prefix_set(w, len(I)))


def test_pattern_of_pi_213():
    x = coordinate_flag((2, 1, 3))
    pat = subset_pattern(x)
    nonzero = {I for I, b in pat.items() if b}
    assert nonzero == {frozenset({2}), frozenset({1, 2})}


def test_three_term_relation():
    rng = random.Random(7)
    for _ in range(25):
        x = random_rational_matrix(rng, 3)
        p = lambda I: x.minor(frozenset(I))
        assert p({1}) * p({2, 3}) - p({2}) * p({1, 3}) + p({3}) * p({1, 2}) == 0


def test_nondegeneracy_and_acceptability_random_flags():
    rng = random.Random(99)
    for n in (2, 3, 4, 5, 6):
        for _ in range(4):
            x = random_rational_matrix(rng, n)
            pat = subset_pattern(x)
            for i in range(1, n):
                assert any(pat[frozenset(I)] for I in combinations(range(1, n + 1), i))
            report = check_acceptable(vanishing_pattern(x))
            assert report.accepted


def test_acceptability_all_pi_flags():
    for n in (2, 3, 4, 5):
        g = type_a_group(n)
        for w in perms.all_perms(n):
            report = check_acceptable(vanishing_pattern(coordinate_flag(w), g))
            assert report.accepted
            assert g.one_line(report.witness) == w


def test_random_cell_point_pattern_is_generic():
    for n in (2, 3, 4):
        g = type_a_group(n)
        for w in perms.all_perms(n):
            x = random_cell_point(w, seed=hash(w) & 0xFFFF)
            assert vanishing_pattern(x, g) == generic_pattern(g, g.from_one_line(w))


def test_random_cell_point_identity():
    x = random_cell_point((1, 2, 3), seed=0)
    pat = subset_pattern(x)
    for I, bit in pat.items():
        assert bit == (1 if sorted(I) == list(range(1, len(I) + 1)) else 0)


def test_random_cell_point_deterministic():
    a = random_cell_point((2, 3, 1), seed=5)
    b = random_cell_point((2, 3, 1), seed=5)
    assert a.matrix == b.matrix


def test_explicit_small_flag_is_acceptable():
    # columns (1,1,0), (0,0,1), (1,0,0): exact minors give an acceptable
    # pattern with witness 231
    x = flag_from_columns([(1, 1, 0), (0, 0, 1), (1, 0, 0)])
    pat = subset_pattern(x)
    assert pat == {
        frozenset({1}): 1,
        frozenset({2}): 1,
        frozenset({3}): 0,
        frozenset({1, 2}): 0,
        frozenset({1, 3}): 1,
        frozenset({2, 3}): 1,
    }
    report = check_acceptable(vanishing_pattern(x))
    assert report.accepted
    assert type_a_group(3).one_line(report.witness) == (2, 3, 1)


def test_flag_validation():
    with pytest.raises(ValueError):
        flag_from_rows([[1, 0], [2, 0]])
    with pytest.raises(ValueError):
        flag_from_rows([[1, 0, 0], [0, 1, 0]])
    x = coordinate_flag((1, 2, 3))
    with pytest.raises(ValueError):
        plucker_coordinate(x, {1, 2, 3})
    with pytest.raises(ValueError):
        plucker_coordinate(x, {0})
    with pytest.raises(ValueError):
        plucker_coordinate(x, set())


def test_parsing_round_trip(tmp_path):
    x = parse_flag_json('[["1/2", 1, 0], [0, "3", 1], [1, 0, "2/5"]]')
    assert x.matrix[0][0] == Fraction(1, 2)
    assert x.matrix[2][2] == Fraction(2, 5)
    y = parse_flag_csv("1/2,1,0\n0,3,1\n1,0,2/5\n")
    assert x.matrix == y.matrix
    p = tmp_path / "flag.json"
    p.write_text('[["1","0"],["0","1"]]')
    z = load_flag(str(p))
    assert z.n == 2
    c = tmp_path / "flag.csv"
    c.write_text("1,0\n0,1\n")
    assert load_flag(str(c)).matrix == z.matrix
    data = json.loads(pattern_json(z))
    assert data == {"1": 1, "2": 0}

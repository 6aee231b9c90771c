from __future__ import annotations

import random
from fractions import Fraction

import pytest

from parabolica import (
    InvalidTypeError,
    SimpleLieType,
    Weight,
    build_root_system,
    fundamental_weight,
    positive_root_count,
)
from parabolica.rootsys import cartan_matrix

from conftest import cached_system

ALL_TYPES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(3, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_positive_root_counts(name):
    rs = cached_system(name)
    assert len(rs.positive_roots) == positive_root_count(rs.lie_type)


def test_cartan_matrix_a3(a3):
    assert a3.cartan == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
    roots = {r for r in a3.positive_roots}
    assert roots == {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1)}


def test_cartan_matrix_b3(b3):
    assert b3.cartan == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))


def test_cartan_matrix_d4(d4):
    assert d4.cartan == (
        (2, -1, 0, 0),
        (-1, 2, -1, -1),
        (0, -1, 2, 0),
        (0, -1, 0, 2),
    )
    assert len(d4.positive_roots) == 12


def test_rank_one():
    a1 = cached_system("A1")
    assert a1.cartan == ((2,),)
    assert a1.positive_roots == ((1,),)


@pytest.mark.parametrize(
    "name, expected",
    [("B2", 4), ("G2", 6), ("F4", 24), ("C3", 9)],
)
def test_non_simply_laced_counts(name, expected):
    assert len(cached_system(name).positive_roots) == expected


@pytest.mark.parametrize("name", ALL_TYPES)
def test_symmetrizers(name):
    rs = cached_system(name)
    n = rs.rank
    d, e = rs.symmetrizers, rs.root_norms
    for i in range(n):
        for j in range(n):
            assert d[i] * rs.cartan[i][j] == d[j] * rs.cartan[j][i]
            assert rs.cartan[i][j] * e[j] == rs.cartan[j][i] * e[i]
    assert all(x >= 1 for x in d) and all(x >= 1 for x in e)


def test_pairing_fundamental_vs_simple():
    for name in ("A4", "B3", "C3", "D4", "F4", "G2"):
        rs = cached_system(name)
        for i in range(rs.rank):
            for j in range(rs.rank):
                value = rs.pairing(fundamental_weight(rs.rank, i), rs.simple_root(j))
                assert value == (1 if i == j else 0)


def test_pairing_examples(a3, b3):
    # non-simple root in the simply laced case: the coroot of a1+a2+a3 is
    # the plain sum of simple coroots, so pairing with w2 picks out m2 = 1
    assert a3.pairing(fundamental_weight(3, 1), (1, 1, 1)) == 1
    assert b3.pairing(fundamental_weight(3, 0), (1, 0, 0)) == 1
    assert a3.pairing(Weight.of(0, 4, 0), (0, 1, 0)) == 4


def test_pairing_short_roots_use_coroots(b3):
    # (1,1,1) is the short root; its coroot doubles against long fw vectors
    assert b3.pairing(fundamental_weight(3, 0), (1, 1, 1)) == 2
    assert b3.pairing(fundamental_weight(3, 2), (1, 1, 1)) == 1


def test_root_as_weight_rows(a3):
    for i in range(3):
        assert a3.root_as_weight(a3.simple_root(i)).coords == a3.cartan[i]
    assert a3.root_as_weight((1, 1, 1)).coords == (1, 0, 1)
    a1 = cached_system("A1")
    assert a1.root_as_weight((1,)).coords == (2,)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_positive_root_sum_is_twice_weyl_vector(name):
    rs = cached_system(name)
    total = Weight.zero(rs.rank)
    for root in rs.positive_roots:
        total = total + rs.root_as_weight(root)
    assert total == 2 * rs.weyl_vector()


def test_weyl_vector(a3, b3):
    assert a3.weyl_vector().coords == (1, 1, 1)
    assert b3.weyl_vector().coords == (1, 1, 1)


@pytest.mark.parametrize("name", ["A3", "B4", "C3", "D5", "F4", "G2", "E6"])
def test_pairing_times_norm_identity(name):
    """pairing(l, b) * (b, b) == 2 (l, b), both sides via independent routes."""
    rs = cached_system(name)
    rng = random.Random(20240817)
    gram = [
        [rs.cartan[i][j] * rs.root_norms[j] for j in range(rs.rank)] for i in range(rs.rank)
    ]
    for _ in range(25):
        weight = Weight.of(*(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rs.rank)))
        root = rng.choice(rs.positive_roots)
        lhs = rs.pairing(weight, root) * rs.root_norm_sq(root)
        in_simple = rs.weight_in_simple_roots(weight)
        rhs = 2 * sum(
            in_simple[i] * root[j] * gram[i][j] for i in range(rs.rank) for j in range(rs.rank)
        )
        assert lhs == rhs


@pytest.mark.parametrize("name", ["B3", "C4", "F4", "G2"])
def test_coroot_coefficients_are_integers(name):
    rs = cached_system(name)
    for root in rs.positive_roots:
        assert all(c.denominator == 1 for c in rs.coroot_coefficients(root))


def test_positive_roots_sorted_by_height(b3):
    heights = [sum(r) for r in b3.positive_roots]
    assert heights == sorted(heights)
    assert b3.positive_roots == tuple(sorted(b3.positive_roots, key=lambda r: (sum(r), r)))


@pytest.mark.parametrize(
    "bad",
    ["B1", "C1", "D2", "E5", "E9", "F5", "G3", "H3", "A0", "xyz"],
)
def test_invalid_types(bad):
    with pytest.raises(InvalidTypeError):
        build_root_system(bad)


def test_parser_case_insensitive():
    assert SimpleLieType.from_string("b3") == SimpleLieType("B", 3)
    assert SimpleLieType.from_string(" e8 ") == SimpleLieType("E", 8)
    assert str(SimpleLieType.from_string("g2")) == "G2"


def test_d3_equals_a3_count():
    assert len(cached_system("D3").positive_roots) == 6


def test_to_dict_shape(b3):
    dump = b3.to_dict()
    assert set(dump) == {"type", "cartan", "positive_roots"}
    assert dump["type"] == "B3"
    assert dump["cartan"] == [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]
    assert [1, 2, 2] in dump["positive_roots"]


def test_cartan_matrix_determinants_positive():
    from parabolica import linalg

    for name in ALL_TYPES:
        assert linalg.det(cartan_matrix(SimpleLieType.from_string(name))) > 0


def test_weight_arithmetic():
    w = Weight.of(1, "-1/2")
    assert (-w).coords == (Fraction(-1), Fraction(1, 2))
    assert (w + w).coords == (2, -1)
    assert (3 * w).coords == (3, Fraction(-3, 2))
    assert (w / 2).coords == (Fraction(1, 2), Fraction(-1, 4))
    assert not w.is_integral and (w + w).is_integral
    assert Weight.zero(2).is_zero
    assert w.restricted([0]).coords == (1, 0)

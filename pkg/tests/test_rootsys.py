import random
from fractions import Fraction as Q

import pytest

from wonderful import linalg
from wonderful.rootsys import Weight, chart_coordinates, root_system, sub_system

ALL_SMALL = [("A", n) for n in range(1, 7)] + \
    [("B", n) for n in range(2, 7)] + \
    [("C", n) for n in range(2, 7)] + \
    [("D", n) for n in range(3, 7)] + \
    [("E", 6), ("F", 4), ("G", 2)]

COUNTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
          "D": lambda n: n * (n - 1), "E": lambda n: 36, "F": lambda n: 24, "G": lambda n: 6}


@pytest.mark.parametrize("family,rank", ALL_SMALL)
def test_positive_root_count(family, rank):
    rs = root_system(family, rank)
    assert len(rs.positive_roots) == COUNTS[family](rank)


def test_invalid_types_rejected():
    for family, rank in (("B", 1), ("D", 2), ("E", 5), ("F", 3), ("G", 3), ("H", 2)):
        with pytest.raises(ValueError):
            root_system(family, rank)


def test_cartan_goldens():
    assert root_system("G", 2).cartan == ((2, -3), (-1, 2))
    assert root_system("B", 2).cartan == ((2, -1), (-2, 2))
    assert root_system("C", 2).cartan == ((2, -2), (-1, 2))
    c3 = root_system("C", 3).cartan
    assert c3 == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    # rows pair against the coroot: the -2 sits in the short root's row
    f4 = root_system("F", 4).cartan
    assert f4 == ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))


@pytest.mark.parametrize("family,rank", ALL_SMALL)
def test_fundamental_weights_solve_cartan_system(family, rank):
    rs = root_system(family, rank)
    # independent oracle: omega_i must satisfy <omega_i, alpha_j^vee> = delta_ij,
    # i.e. the coordinate matrix is the inverse transpose of the Cartan matrix
    inv = linalg.inverse([[Q(c) for c in row] for row in rs.cartan])
    for i, om in enumerate(rs.fundamental_weights):
        assert list(om.coords) == [inv[k][i] for k in range(rank)]
        for j in range(1, rank + 1):
            assert rs.pairing(om, j) == (1 if j == i + 1 else 0)


def test_g2_positive_roots_match_case_table():
    rs = root_system("G", 2)
    got = {tuple(map(int, r.coords)) for r in rs.positive_roots}
    assert got == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


def test_b2_contains_both_mixed_roots():
    rs = root_system("B", 2)
    got = {tuple(map(int, r.coords)) for r in rs.positive_roots}
    assert (1, 1) in got and (1, 2) in got and len(got) == 4


@pytest.mark.parametrize("family,rank", ALL_SMALL)
def test_w0_involution_on_random_vectors(family, rank):
    rs = root_system(family, rank)
    rng = random.Random(20240000 + rank)
    for _ in range(50):
        v = Weight([Q(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rank)])
        assert rs.w0(rs.w0(v)) == v


@pytest.mark.parametrize("family,rank", ALL_SMALL)
def test_w0_sends_positive_to_negative(family, rank):
    rs = root_system(family, rank)
    for r in rs.positive_roots:
        assert (-rs.w0(r)) in set(rs.positive_roots)


def test_w0_weight_identities():
    b3 = root_system("B", 3)
    om1, _, om3 = b3.fundamental_weights
    assert b3.w0(om1) - om1 == Weight([-2, -2, -2])
    assert b3.w0(om3) - om3 == Weight([-1, -2, -3])
    c3 = root_system("C", 3)
    assert c3.w0(c3.fundamental_weights[0]) - c3.fundamental_weights[0] == Weight([-2, -2, -1])
    assert c3.w0(c3.fundamental_weights[1]) - c3.fundamental_weights[1] == Weight([-2, -4, -2])
    g2 = root_system("G", 2)
    assert g2.w0(g2.fundamental_weights[0]) - g2.fundamental_weights[0] == Weight([-4, -2])
    assert g2.w0(g2.fundamental_weights[1]) - g2.fundamental_weights[1] == Weight([-6, -4])


def test_a1_fundamental_weight():
    rs = root_system("A", 1)
    assert rs.fundamental_weights[0] == Weight([Q(1, 2)])


def test_bn_first_fundamental_weight_is_sum_of_simples():
    for n in range(2, 6):
        rs = root_system("B", n)
        assert rs.fundamental_weights[0] == Weight([1] * n)


def test_sub_system():
    b3 = root_system("B", 3)
    assert sub_system(b3, set()) == frozenset()
    sub = sub_system(b3, {2, 3})
    assert len(sub) == 4  # a rank-two orthogonal subsystem
    assert all(r.support() <= {2, 3} for r in sub)
    g2 = root_system("G", 2)
    assert sub_system(g2, {1}) == {g2.simple_root(1)}


def test_chart_coordinates():
    b2 = root_system("B", 2)
    assert len(chart_coordinates(b2, set())) == 4
    g2 = root_system("G", 2)
    chart = chart_coordinates(g2, set())
    assert {tuple(map(int, r.coords)) for r in chart} == \
        {(3, 1), (0, 1), (3, 2), (1, 1), (2, 1), (1, 0)}
    heights = [r.height() for r in chart]
    assert heights == sorted(heights)
    b3 = root_system("B", 3)
    assert len(chart_coordinates(b3, {2})) == 8

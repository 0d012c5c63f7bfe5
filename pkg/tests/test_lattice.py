"""Primitive lattice point counting tests."""

import math
from fractions import Fraction as F

import pytest

from conjdensity.lattice import (DilatableRegion, asymptotic_table,
                                 primitive_point_count,
                                 primitive_point_count_mobius)
from conjdensity.zeta import zeta


def test_unit_cube_examples():
    sq = DilatableRegion.cube(2)
    assert primitive_point_count(sq, 1) == 8
    assert primitive_point_count(sq, 2) == 16


def test_ball_examples():
    # radius 1/2 contains no nonzero integer point; radius 1 the four axis points
    assert primitive_point_count(DilatableRegion.ball(2, F(1, 2)), 1) == 0
    assert primitive_point_count(DilatableRegion.ball(2, 1), 1) == 4
    # radius 2: the four axis unit points and the four diagonal unit points
    assert primitive_point_count(DilatableRegion.ball(2, 1), 2) == 8


def test_brute_force_cross_check_ball():
    # independent brute force over the bounding square, exact norm test
    region = DilatableRegion.ball(2, F(3, 2))
    for q in (1, 2, 3, 5):
        r2 = (F(3, 2) * q) ** 2
        brute = 0
        bound = math.floor(F(3, 2) * q)
        for x in range(-bound, bound + 1):
            for y in range(-bound, bound + 1):
                if x * x + y * y <= r2 and math.gcd(abs(x), abs(y)) == 1:
                    brute += 1
        assert primitive_point_count(region, q) == brute


def test_scaling_invariance():
    # the count depends only on the dilated set q * A
    assert primitive_point_count(DilatableRegion.cube(2, 2), 3) == \
        primitive_point_count(DilatableRegion.cube(2, 1), 6)
    assert primitive_point_count(DilatableRegion.ball(2, 1), 4) == \
        primitive_point_count(DilatableRegion.ball(2, 2), 2)
    assert primitive_point_count(DilatableRegion.ball(3, F(1, 2)), 10) == \
        primitive_point_count(DilatableRegion.ball(3, 5), 1)


def test_asymmetric_box():
    region = DilatableRegion.box([(F(-1, 2), F(3, 2)), (F(1, 3), F(5, 2))])
    for q in (1, 2, 5, 9):
        brute = 0
        for x in range(-q, 2 * q + 1):
            for y in range(0, 3 * q + 1):
                if (F(-1, 2) * q <= x <= F(3, 2) * q
                        and F(1, 3) * q <= y <= F(5, 2) * q
                        and math.gcd(abs(x), abs(y)) == 1):
                    brute += 1
        assert primitive_point_count(region, q) == brute


def test_mobius_oracle_equals_direct():
    cube2, cube3 = DilatableRegion.cube(2), DilatableRegion.cube(3)
    ball2 = DilatableRegion.ball(2, F(3, 2))
    box = DilatableRegion.box([(F(-1, 2), F(3, 2)), (F(1, 3), F(5, 2))])
    for q in list(range(1, 21)) + [57, 100]:
        assert primitive_point_count(cube2, q) == primitive_point_count_mobius(cube2, q)
    for q in list(range(1, 9)) + [20]:
        assert primitive_point_count(cube3, q) == primitive_point_count_mobius(cube3, q)
    for q in (1, 2, 3, 7, 15):
        assert primitive_point_count(ball2, q) == primitive_point_count_mobius(ball2, q)
        assert primitive_point_count(box, q) == primitive_point_count_mobius(box, q)


def test_worker_invariance():
    cube3 = DilatableRegion.cube(3)
    assert primitive_point_count(cube3, 30, workers=1) == \
        primitive_point_count(cube3, 30, workers=4)


def test_asymptotic_table():
    rows = asymptotic_table(DilatableRegion.cube(2), [10, 100, 400])
    assert [r.q for r in rows] == [10, 100, 400]
    assert rows[-1].prediction == pytest.approx(4 * 400**2 / zeta(2))
    assert abs(rows[-1].ratio - 1) < 0.01
    # degenerate single-Q table: one row, no convergence claim
    single = asymptotic_table(DilatableRegion.ball(2, 1), [1])
    assert len(single) == 1 and single[0].count == 4


def test_zeta_values():
    assert zeta(2) == pytest.approx(math.pi**2 / 6, abs=1e-12)
    assert zeta(3) == pytest.approx(1.202056903159594, abs=1e-12)
    assert zeta(4) == pytest.approx(math.pi**4 / 90, abs=1e-12)
    with pytest.raises(ValueError):
        zeta(1)


def test_region_validation():
    with pytest.raises(ValueError):
        DilatableRegion.ball(1, 1)
    with pytest.raises(ValueError):
        DilatableRegion.box([(0, 1)])
    with pytest.raises(ValueError):
        DilatableRegion.box([(1, 1), (0, 1)])
    with pytest.raises(ValueError):
        primitive_point_count(DilatableRegion.cube(2), 0)


def test_volumes():
    assert DilatableRegion.cube(2).volume() == pytest.approx(4.0)
    assert DilatableRegion.ball(2, 1).volume() == pytest.approx(math.pi)
    assert DilatableRegion.ball(3, 2).volume() == pytest.approx(4 / 3 * math.pi * 8)

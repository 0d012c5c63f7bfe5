"""Acceptance suite: one test per criterion, one printed PASS line each.

Every tolerance is fixed here, straight from the working contract; Monte
Carlo checks run on pinned seeds, so each test is fully deterministic.
"""

import math
import random
from fractions import Fraction as F

import pytest

from conjdensity.boxes import Box
from conjdensity.counting import (EnumerationTask, count_conjugate_tuples,
                                  count_reducible, enumerate_prime_polynomials)
from conjdensity.density import (band_density, cofactor_in_unit_cube,
                                 density_mc, integrate_density,
                                 top_order_density)
from conjdensity.intpoly import poly_from_roots
from conjdensity.lattice import (DilatableRegion, primitive_point_count,
                                 primitive_point_count_mobius)
from conjdensity.randpoly import expected_tuple_count
from conjdensity.rng import uniform_block
from conjdensity.zeta import zeta

BAND_INTEGRAL = 37 / 288  # exact integral of the one-point band form over [-1/4, 1/4]
GRID = (20, 40, 60, 80, 100)
#: allowed backtracking of |ratio - 1| between consecutive grid points
CONVERGENCE_SLACK = 0.005


def report(name: str, detail: str) -> None:
    print(f"PASS {name}: {detail}")


def prefactor(n: int, q: int) -> float:
    return (2 * q) ** (n + 1) / (2 * zeta(n + 1))


def random_point(n: int, seed: int, lo=-2.0, hi=2.0) -> list:
    """Deterministic test point with distinct coordinates."""
    while True:
        u = uniform_block(seed, 0, n)
        xs = [lo + (hi - lo) * float(v) for v in u]
        if len(set(xs)) == n:
            return xs
        seed += 1


def test_01_theorem_convergence_k1():
    box = Box.of((F(-1, 4), F(1, 4)))
    gaps = []
    for q in GRID:
        phi = count_conjugate_tuples(EnumerationTask(2, q, 1, box)).tuple_count
        ratio = phi * 2 * zeta(3) / (2 * q) ** 3 / BAND_INTEGRAL
        gaps.append(abs(ratio - 1))
    assert gaps[-1] <= 0.10, f"Q=100 ratio off by {gaps[-1]:.3f}"
    for a, b in zip(gaps, gaps[1:]):
        assert b <= a + CONVERGENCE_SLACK, f"convergence backtracked: {gaps}"
    report("criterion 1",
           f"k=1 ratio gaps over Q grid {[round(g, 4) for g in gaps]}, "
           f"final {gaps[-1]:.4f} <= 0.10, nonincreasing")


def test_02_theorem_convergence_k2():
    box = Box.cube(-2, 2, 2)
    integral = integrate_density(2, 2, box, 1_000_000, seed=2026)
    gaps = []
    for q in GRID:
        phi = count_conjugate_tuples(EnumerationTask(2, q, 2, box)).tuple_count
        pred = prefactor(2, q) * integral.value
        sigma = prefactor(2, q) * integral.std_error
        gap = abs(phi - pred)
        gaps.append(abs(phi / pred - 1))
        if q == 100:
            assert gap <= max(0.10 * pred, 3 * sigma), \
                f"Q=100: |{phi} - {pred:.0f}| exceeds tolerance"
    for a, b in zip(gaps, gaps[1:]):
        assert b <= a + CONVERGENCE_SLACK
    report("criterion 2",
           f"k=2 ratio gaps {[round(g, 4) for g in gaps]}, Q=100 within 10%")


def test_03_exhaustive_micro_oracles():
    phi2 = count_conjugate_tuples(
        EnumerationTask(2, 1, 2, Box.cube(-10, 10, 2))).tuple_count
    phi1 = count_conjugate_tuples(
        EnumerationTask(2, 1, 1, Box.cube(-10, 10, 1))).tuple_count
    red = count_reducible(2, 1)
    stream = {p.coeffs for p in enumerate_prime_polynomials(2, 1)}
    expected_stream = {(-1, 1), (0, 1), (1, 1), (-1, 1, 1), (-1, -1, 1),
                       (1, 0, 1), (1, 1, 1), (1, -1, 1)}
    assert phi2 == 4
    assert phi1 == 7
    assert red == 8
    assert stream == expected_stream
    report("criterion 3",
           "phi_2(1)=4, phi_1(1)=7, reducible(2,1)=8, prime stream = 8 listed")


def test_04_closed_form_vs_mc_density():
    checks = 0
    worst = 0.0

    def against(closed: float, est) -> None:
        nonlocal checks, worst
        assert est.std_error > 0
        dev = abs(est.value - closed) / est.std_error
        worst = max(worst, dev)
        assert dev <= 3.0, f"{dev:.2f} sigma"
        checks += 1

    assert top_order_density(2, [1, -1]) == F(1, 6)
    against(1 / 6, density_mc(2, [1.0, -1.0], 1_000_000, seed=41))

    for i in range(10):  # n = k = 2
        x = random_point(2, seed=1000 + i)
        closed = float(top_order_density(2, x))
        against(closed, density_mc(2, x, 1_000_000, seed=50 + i))
    for i in range(10):  # n = k = 3
        x = random_point(3, seed=2000 + i)
        closed = float(top_order_density(3, x))
        against(closed, density_mc(3, x, 1_000_000, seed=70 + i))
    for i in range(10):  # k = 1 inside the band, n alternating 2 and 3
        n = 2 if i % 2 == 0 else 3
        x = random_point(1, seed=3000 + i, lo=-0.29, hi=0.29)
        closed = float(band_density(n, x[0]))
        against(closed, density_mc(n, x, 1_000_000, seed=90 + i))

    report("criterion 4",
           f"{checks} closed-vs-MC checks at 1e6 samples, worst {worst:.2f} sigma")


def test_05_oracle_equivalence():
    box1 = Box.of((F(-1, 4), F(1, 4)))
    oracle = expected_tuple_count(2, 1, box1, 1_000_000, seed=11)
    dev_o = abs(oracle.value - BAND_INTEGRAL) / oracle.std_error
    assert dev_o <= 3.0, f"oracle {dev_o:.2f} sigma from band integral"
    dens = integrate_density(2, 1, box1, 1_000_000, seed=12)
    dev_d = abs(dens.value - BAND_INTEGRAL) / dens.std_error
    assert dev_d <= 3.0, f"density {dev_d:.2f} sigma from band integral"

    devs = []
    for n, k in ((2, 2), (3, 2), (3, 3)):
        box = Box.cube(-2, 2, k)
        o = expected_tuple_count(n, k, box, 200_000, seed=13)
        d = integrate_density(n, k, box, 1_000_000, seed=14)
        comb = math.hypot(o.std_error, d.std_error)
        dev = abs(o.value - d.value) / comb
        devs.append(round(dev, 2))
        assert dev <= 3.0, f"(n,k)=({n},{k}): {dev:.2f} combined sigma"
    report("criterion 5",
           f"band target: oracle {dev_o:.2f}s, density {dev_d:.2f}s; "
           f"(2,2),(3,2),(3,3) deviations {devs} combined sigma")


def test_06_proposition_suite():
    rng = random.Random(606)
    # exact invariances of the closed forms on rational points
    for _ in range(100):
        n = rng.choice([2, 3])
        xs = [F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
        base = top_order_density(n, xs)
        perm = list(xs)
        rng.shuffle(perm)
        assert top_order_density(n, perm) == base
        assert top_order_density(n, [-x for x in xs]) == base
        if all(x != 0 for x in xs) and len(set(xs)) == n:
            prod = F(1)
            for x in xs:
                prod *= x * x
            assert top_order_density(n, [1 / x for x in xs]) == base * prod
    # MC inversion at 10 random points (law: rho(1/x) = rho(x) * prod x_i^2)
    worst = 0.0
    for i in range(10):
        n, k = (3, 2) if i % 2 == 0 else (2, 2)
        while True:
            x = random_point(k, seed=4000 + i, lo=-2.0, hi=2.0)
            if all(abs(v) > 0.3 for v in x) and len({1 / v for v in x}) == k:
                break
        a = density_mc(n, [1 / v for v in x], 400_000, seed=100 + i)
        b = density_mc(n, x, 400_000, seed=200 + i)
        prod = math.prod(v * v for v in x)
        comb = math.hypot(a.std_error, b.std_error * prod)
        dev = abs(a.value - b.value * prod) / comb
        worst = max(worst, dev)
        assert dev <= 3.0, f"inversion at {x}: {dev:.2f} sigma"
    report("criterion 6",
           f"permutation/sign/inversion exact on closed forms; "
           f"MC inversion worst {worst:.2f} sigma over 10 points")


def test_07_lattice_lemma():
    sq = DilatableRegion.cube(2)
    count = primitive_point_count(sq, 1000)
    density = count / 4_000_000
    target = 6 / math.pi**2
    assert abs(density / target - 1) <= 0.005
    # Mobius inclusion-exclusion oracle: exact equality with direct counting
    for q in list(range(1, 41)) + [100, 157, 200]:
        assert primitive_point_count(sq, q) == primitive_point_count_mobius(sq, q)
    cube3 = DilatableRegion.cube(3)
    for q in list(range(1, 11)) + [50, 100, 200]:
        assert primitive_point_count(cube3, q) == primitive_point_count_mobius(cube3, q)
    ball = DilatableRegion.ball(2, F(3, 2))
    for q in (1, 2, 3, 5, 8, 13, 21):
        assert primitive_point_count(ball, q) == primitive_point_count_mobius(ball, q)
    report("criterion 7",
           f"coprime density at Q=1000: {density:.5f} vs 6/pi^2 {target:.5f} "
           f"(0.5%); Mobius oracle exact on d=2 and d=3 grids up to Q=200")


def test_08_reducible_boundedness():
    ratios2 = [count_reducible(2, q) / (q * q * math.log(q))
               for q in range(10, 201, 10)]
    med2 = sorted(ratios2)[len(ratios2) // 2]
    assert all(med2 / 3 <= r <= 3 * med2 for r in ratios2), ratios2
    ratios3 = [count_reducible(3, q) / q**3 for q in (8, 12, 16, 20, 24, 28)]
    med3 = sorted(ratios3)[len(ratios3) // 2]
    assert all(med3 / 3 <= r <= 3 * med3 for r in ratios3), ratios3
    report("criterion 8",
           f"R(2,Q)/(Q^2 lnQ) spread {min(ratios2)/med2:.2f}..{max(ratios2)/med2:.2f} "
           f"of median; R(3,Q)/Q^3 spread {min(ratios3)/med3:.2f}..{max(ratios3)/med3:.2f}")


def test_09_membership_identity():
    rng = random.Random(12345)
    inside = outside = 0
    for _ in range(100_000):
        n = rng.choice([2, 3, 4])
        k = rng.randint(1, n)
        xs = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(k)]
        w = n - k + 1
        scale = 1 + max(abs(x) for x in xs) ** k
        ts = [F(rng.randint(-8, 8), 8) / (1 if rng.random() < 0.5 else scale)
              for _ in range(w)]
        got = cofactor_in_unit_cube(xs, ts)
        # independent route: expand T(z) * prod(z - x_i), bound coefficients
        base = poly_from_roots(xs)
        coeffs = [F(0)] * (n + 1)
        for j, t in enumerate(ts):
            for i, c in enumerate(base):
                coeffs[i + j] += t * c
        want = all(-1 <= c <= 1 for c in coeffs)
        assert got == want, (xs, ts)
        inside += got
        outside += not got
    assert inside > 5_000 and outside > 5_000
    report("criterion 9",
           f"membership == product-coefficient bound on 100000 exact rational "
           f"pairs ({inside} inside, {outside} outside)")


def test_10_worker_determinism():
    box2 = Box.cube(-2, 2, 2)
    outs = [integrate_density(2, 2, box2, 200_000, seed=77, workers=w)
            for w in (1, 4, 16)]
    assert len({(o.value, o.std_error) for o in outs}) == 1
    outs = [density_mc(3, [0.2, -0.4], 200_000, seed=78, workers=w)
            for w in (1, 4, 16)]
    assert len({(o.value, o.std_error) for o in outs}) == 1
    outs = [expected_tuple_count(2, 2, box2, 100_000, seed=79, workers=w)
            for w in (1, 4, 16)]
    assert len({(o.value, o.std_error) for o in outs}) == 1
    counts = [count_conjugate_tuples(EnumerationTask(2, 50, 1, Box.of((F(-1, 4), F(1, 4)))),
                                     workers=w) for w in (1, 4, 16)]
    assert len({c.tuple_count for c in counts}) == 1
    assert all(c.histogram == counts[0].histogram for c in counts)
    report("criterion 10",
           "MC estimates and exact counts bit-identical across 1, 4, 16 workers")

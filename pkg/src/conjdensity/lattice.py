"""Primitive (coprime-coordinate) lattice point counting in dilated regions.

Counts integer points of Q*A whose coordinates have gcd 1 (the all-zero
point has gcd 0 and never counts), and tabulates the counts against the
Vol(A) * Q^d / zeta(d) prediction.  Regions are boxes with rational bounds
or origin-centred Euclidean balls with rational radius; membership tests on
integer points are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .parallel import map_chunks
from .zeta import zeta

_SLAB = 16  # first-coordinate values per parallel work item


@dataclass(frozen=True)
class DilatableRegion:
    """Bounded region of R^d with exact membership on rational points."""

    kind: str  # "box" | "ball"
    dimension: int
    bounds: tuple[tuple[Fraction, Fraction], ...] | None = None
    radius: Fraction | None = None

    @staticmethod
    def box(bounds: Sequence[tuple]) -> "DilatableRegion":
        bs = tuple((Fraction(lo), Fraction(hi)) for lo, hi in bounds)
        if len(bs) < 2:
            raise ValueError("dimension must be >= 2")
        for lo, hi in bs:
            if lo >= hi:
                raise ValueError("box must have nonzero volume")
        return DilatableRegion("box", len(bs), bounds=bs)

    @staticmethod
    def cube(d: int, half_side: Fraction | int = 1) -> "DilatableRegion":
        h = Fraction(half_side)
        return DilatableRegion.box([(-h, h)] * d)

    @staticmethod
    def ball(d: int, radius) -> "DilatableRegion":
        r = Fraction(radius)
        if d < 2 or r <= 0:
            raise ValueError("need d >= 2 and radius > 0")
        return DilatableRegion("ball", d, radius=r)

    def volume(self) -> float:
        if self.kind == "box":
            v = Fraction(1)
            for lo, hi in self.bounds:
                v *= hi - lo
            return float(v)
        r = float(self.radius)
        d = self.dimension
        return math.pi ** (d / 2) / math.gamma(d / 2 + 1) * r**d


def _box_axis_ranges(region: DilatableRegion, q: int) -> list[tuple[int, int]]:
    """Per-axis integer ranges [lo, hi] of the dilation q * region."""
    out = []
    for lo, hi in region.bounds:
        out.append((math.ceil(lo * q), math.floor(hi * q)))
    return out


def primitive_point_count(region: DilatableRegion, q: int, workers: int = 1) -> int:
    """Exact count of integer points in q * region with coprime coordinates."""
    if q < 1:
        raise ValueError("need q >= 1")
    if region.kind == "box":
        ranges = _box_axis_ranges(region, q)
        if any(lo > hi for lo, hi in ranges):
            return 0
        axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in ranges]
        inside = None
    else:
        r2num = (region.radius * q) ** 2  # Fraction
        bound = math.floor(region.radius * q)
        axes = [np.arange(-bound, bound + 1, dtype=np.int64)] * region.dimension
        # norm-squared comparison cleared to integers: |x|^2 * den <= num
        inside = (r2num.numerator, r2num.denominator)

    first, rest = axes[0], axes[1:]
    shape = tuple(len(a) for a in rest)
    grids = np.meshgrid(*rest, indexing="ij") if rest else []
    rest_gcd = np.zeros(shape, dtype=np.int64)
    for g in grids:
        rest_gcd = np.gcd(rest_gcd, np.abs(g))
    if inside is not None:
        rest_norm2 = sum(g * g for g in grids)

    def do_slab(si: int) -> int:
        lo = si * _SLAB
        vals = first[lo:lo + _SLAB]
        total = 0
        for x in vals:
            g = np.gcd(np.int64(abs(int(x))), rest_gcd)
            if inside is None:
                total += int(np.count_nonzero(g == 1))
            else:
                num, den = inside
                ok = (int(x) * int(x) + rest_norm2) * den <= num
                total += int(np.count_nonzero((g == 1) & ok))
        return total

    n_slabs = (len(first) + _SLAB - 1) // _SLAB
    return sum(map_chunks(do_slab, n_slabs, workers))


def _mobius_sieve(limit: int) -> np.ndarray:
    mu = np.ones(limit + 1, dtype=np.int64)
    primes_mask = np.ones(limit + 1, dtype=bool)
    for p in range(2, limit + 1):
        if primes_mask[p]:
            primes_mask[2 * p::p] = False
            mu[p::p] *= -1
            sq = p * p
            if sq <= limit:
                mu[sq::sq] = 0
    mu[0] = 0
    return mu


def _all_points_in_dilation(region: DilatableRegion, q: int, j: int) -> int:
    """Integer points y (including the origin) with j*y in q*region."""
    if region.kind == "box":
        total = 1
        for lo, hi in region.bounds:
            n_axis = math.floor(hi * q / j) - math.ceil(lo * q / j) + 1
            if n_axis <= 0:
                return 0
            total *= n_axis
        return total
    rad = region.radius * q / j
    bound = math.floor(rad)
    axes = [np.arange(-bound, bound + 1, dtype=np.int64)] * region.dimension
    grids = np.meshgrid(*axes, indexing="ij")
    norm2 = sum(g * g for g in grids)
    num, den = (rad * rad).numerator, (rad * rad).denominator
    return int(np.count_nonzero(norm2 * den <= num))


def primitive_point_count_mobius(region: DilatableRegion, q: int) -> int:
    """Independent oracle: Mobius inclusion-exclusion over dilation factors.

    lambda*(qA) = sum_j mu(j) * (#{y : j y in qA} - [0 in qA]); the origin is
    subtracted from every term since it is never primitive.
    """
    if region.kind == "box":
        reach = max(max(abs(lo), abs(hi)) for lo, hi in region.bounds)
        origin_inside = all(lo <= 0 <= hi for lo, hi in region.bounds)
    else:
        reach = region.radius
        origin_inside = True
    j_max = math.floor(reach * q)
    if j_max < 1:
        return 0
    mu = _mobius_sieve(j_max)
    total = 0
    origin = 1 if origin_inside else 0
    for j in range(1, j_max + 1):
        m = int(mu[j])
        if m == 0:
            continue
        total += m * (_all_points_in_dilation(region, q, j) - origin)
    return total


@dataclass(frozen=True)
class LatticeRow:
    q: int
    count: int
    prediction: float
    ratio: float
    residual: float


def asymptotic_table(region: DilatableRegion, q_list: Sequence[int],
                     workers: int = 1) -> list[LatticeRow]:
    """Per-Q table comparing exact primitive counts with the density
    prediction Vol(A) Q^d / zeta(d); the residual column normalizes the gap
    by Q^(d-1) log Q (log factor only in dimension 2, 1 at Q = 1)."""
    d = region.dimension
    vol = region.volume()
    z = zeta(d)
    rows = []
    for q in q_list:
        count = primitive_point_count(region, q, workers)
        pred = vol * q**d / z
        ratio = count / pred if pred else math.inf
        log_term = math.log(q) if (d == 2 and q > 1) else 1.0
        residual = abs(count - pred) / (q ** (d - 1) * log_term)
        rows.append(LatticeRow(q, count, pred, ratio, residual))
    return rows

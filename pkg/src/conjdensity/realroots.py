"""Exact real-root counting, isolation, and refinement via Sturm sequences.

All decisions (root counts, membership of a root in a closed rational box)
are made with exact rational arithmetic; floats never influence a count.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .boxes import Box
from .intpoly import IntPolynomial, content_and_primitive, poly_divmod


@dataclass(frozen=True)
class IsolatingInterval:
    """Closed rational interval holding exactly one real root of some
    polynomial; lo == hi marks an exact rational root."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def overlaps(self, other: "IsolatingInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


@dataclass(frozen=True)
class AlgebraicNumber:
    """A real algebraic number: prime minimal polynomial plus an isolating
    interval.  Equal iff same minpoly and overlapping intervals."""

    minpoly: IntPolynomial
    interval: IsolatingInterval

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return self.minpoly == other.minpoly and self.interval.overlaps(other.interval)

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def approx(self, digits: int = 12) -> float:
        a = refine(self, Fraction(1, 10**digits))
        return float((a.interval.lo + a.interval.hi) / 2)


def _frac_coeffs(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return a


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p with repeated factors removed: primitive p / gcd(p, p'), leading
    coefficient made positive."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree <= 1:
        _, pp = content_and_primitive(p)
        return pp if pp.leading > 0 else -pp
    g = _poly_gcd(_frac_coeffs(p), _frac_coeffs(p.derivative()))
    q, r = poly_divmod(_frac_coeffs(p), g)
    assert not r
    lcm = 1
    for c in q:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ip = IntPolynomial(int(c * lcm) for c in q)
    _, ip = content_and_primitive(ip)
    return ip if ip.leading > 0 else -ip


class _SturmChain:
    """Canonical Sturm chain of a squarefree polynomial; counts distinct
    real roots in half-open intervals (a, b]."""

    def __init__(self, p: IntPolynomial):
        f0 = _frac_coeffs(p)
        f1 = _frac_coeffs(p.derivative())
        chain = [f0, f1]
        while chain[-1]:
            _, r = poly_divmod(chain[-2], chain[-1])
            chain.append([-c for c in r])
        chain.pop()  # drop the zero tail
        self.chain = chain
        self.poly = p

    def variations(self, x: Fraction) -> int:
        signs = []
        for coeffs in self.chain:
            v = _eval(coeffs, x)
            if v:
                signs.append(1 if v > 0 else -1)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a: Fraction, b: Fraction) -> int:
        """Distinct real roots in (a, b]."""
        if a >= b:
            raise ValueError("need a < b")
        return self.variations(a) - self.variations(b)


def sturm_count(p: IntPolynomial, a, b) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    The chain is built on the squarefree part, so multiple roots are counted
    once and reducible inputs are handled.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError("need a < b")
    if p.degree == 0:
        return 0
    return _SturmChain(squarefree_part(p)).count(a, b)


def cauchy_root_bound(p: IntPolynomial) -> Fraction:
    """M with all real roots of p strictly inside (-M, M)."""
    if p.is_zero or p.degree < 1:
        raise ValueError("need degree >= 1")
    lead = abs(p.leading)
    rest = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return Fraction(1) + Fraction(rest, lead)


def isolate_real_roots(p: IntPolynomial) -> list[IsolatingInterval]:
    """Pairwise-disjoint isolating intervals, one per distinct real root of
    p, sorted ascending.  Works on the squarefree part internally."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    sf = squarefree_part(p)
    if sf.degree < 1:
        return []
    chain = _SturmChain(sf)
    bound = cauchy_root_bound(sf)
    out: list[IsolatingInterval] = []
    _isolate(chain, sf, -bound, bound, chain.count(-bound, bound), out)
    # neighbouring bisection cells can share an endpoint; refine until the
    # closed intervals are pairwise disjoint
    for i in range(1, len(out)):
        while out[i].lo <= out[i - 1].hi:
            prev, cur = out[i - 1], out[i]
            if prev.width >= cur.width and not prev.is_exact:
                out[i - 1] = _refine_interval(sf, prev, prev.width / 2)
            else:
                out[i] = _refine_interval(sf, cur, cur.width / 2)
    return out


def _isolate(chain: _SturmChain, sf: IntPolynomial, a: Fraction, b: Fraction,
             count: int, out: list[IsolatingInterval]) -> None:
    """Recursive bisection over half-open cells (a, b] with a known count."""
    if count == 0:
        return
    if count == 1:
        out.append(_single_root_interval(chain, sf, a, b))
        return
    mid = (a + b) / 2
    left = chain.count(a, mid)
    _isolate(chain, sf, a, mid, left, out)
    _isolate(chain, sf, mid, b, count - left, out)


def _single_root_interval(chain: _SturmChain, sf: IntPolynomial,
                          a: Fraction, b: Fraction) -> IsolatingInterval:
    """Closed isolating interval for the unique root in (a, b]; endpoint
    values of sf are nonzero unless the interval is a point."""
    while True:
        if sf(b) == 0:
            return IsolatingInterval(b, b)
        if sf(a) != 0:
            return IsolatingInterval(a, b)
        # a is itself a root of sf (of a neighbouring cell); shrink past it.
        mid = (a + b) / 2
        if sf(mid) == 0:
            return IsolatingInterval(mid, mid)
        if chain.count(mid, b) == 1:
            a = mid
        else:
            b = mid


def _rational_root_in(p: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction | None:
    """A rational root of p inside [lo, hi], if any (divisor candidates)."""
    if p.coeffs[0] == 0:
        return Fraction(0) if lo <= 0 <= hi else None
    a0, an = abs(p.coeffs[0]), abs(p.coeffs[-1])
    for v in range(1, an + 1):
        if an % v:
            continue
        for u in range(1, a0 + 1):
            if a0 % u or math.gcd(u, v) > 1:
                continue
            for cand in (Fraction(u, v), Fraction(-u, v)):
                if lo <= cand <= hi and p(cand) == 0:
                    return cand
    return None


def refine(alg: AlgebraicNumber, width) -> AlgebraicNumber:
    """Same root, isolating interval of width <= width (exact bisection;
    rational roots collapse to exact points)."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    iv = alg.interval
    if not iv.is_exact:
        r = _rational_root_in(alg.minpoly, iv.lo, iv.hi)
        if r is not None:
            return AlgebraicNumber(alg.minpoly, IsolatingInterval(r, r))
    iv = _refine_interval(alg.minpoly, iv, width)
    return AlgebraicNumber(alg.minpoly, iv)


def _refine_interval(p: IntPolynomial, iv: IsolatingInterval,
                     width: Fraction) -> IsolatingInterval:
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    if p(lo) == 0:
        return IsolatingInterval(lo, lo)
    if p(hi) == 0:
        return IsolatingInterval(hi, hi)
    sign_lo = 1 if p(lo) > 0 else -1
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            return IsolatingInterval(mid, mid)
        if (1 if v > 0 else -1) == sign_lo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi)


def real_roots_of(p: IntPolynomial) -> list[AlgebraicNumber]:
    """Roots of a prime polynomial p as AlgebraicNumbers, ascending."""
    return [AlgebraicNumber(p, iv) for iv in isolate_real_roots(p)]


def _root_in_interval(sf: IntPolynomial, iv: IsolatingInterval,
                      lo: Fraction, hi: Fraction) -> tuple[bool, IsolatingInterval]:
    """Exact decision whether the root isolated by iv lies in closed [lo, hi].

    Returns the (possibly refined) interval alongside the verdict so callers
    can reuse the refinement across box coordinates.
    """
    a, b = iv.lo, iv.hi
    if a == b:
        return (lo <= a <= hi), iv
    # Root exactly at a box endpoint: detectable since sf has one root in iv.
    if sf(lo) == 0 and a <= lo <= b:
        return True, IsolatingInterval(lo, lo)
    if sf(hi) == 0 and a <= hi <= b:
        return True, IsolatingInterval(hi, hi)
    cur = iv
    while True:
        if cur.lo >= lo and cur.hi <= hi:
            return True, cur
        if cur.hi < lo or cur.lo > hi:
            return False, cur
        cur = _refine_interval(sf, cur, cur.width / 2)


def count_k_tuples(p: IntPolynomial, k: int, box: Box) -> int:
    """Number of ordered k-tuples of distinct real roots of p lying in the
    closed box (coordinate i of the tuple in interval i of the box)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > max(p.degree, 0):
        raise ValueError("k exceeds the polynomial degree")
    if box.dimension != k:
        raise ValueError("box dimension must equal k")
    sf = squarefree_part(p)
    ivs = isolate_real_roots(sf)
    if len(ivs) < k:
        return 0
    # membership[r][j]: root r lies in box interval j (exact decisions).
    membership = []
    for iv in ivs:
        row = []
        cur = iv
        for lo, hi in box.intervals:
            inside, cur = _root_in_interval(sf, cur, lo, hi)
            row.append(inside)
        membership.append(row)
    total = 0
    for perm in itertools.permutations(range(len(ivs)), k):
        if all(membership[r][j] for j, r in enumerate(perm)):
            total += 1
    return total

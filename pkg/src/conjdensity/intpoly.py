"""Exact integer-polynomial arithmetic.

Polynomials are dense coefficient tuples, low degree first, over arbitrary-
precision integers.  This module owns the notions the rest of the package
is built on: naive height, content/primitive part, irreducibility over Q,
prime-polynomial normalization (irreducible + primitive + positive leading
coefficient), and elementary symmetric polynomials of a point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

#: Degree marker of the zero polynomial (distinct from every true degree).
ZERO_DEGREE = -1


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[i] is the coefficient of x**i."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        """Exact Horner evaluation; result type follows the argument type."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def height(p: IntPolynomial) -> int:
    """Naive height: max |coefficient|; 0 exactly for the zero polynomial."""
    return max((abs(c) for c in p.coeffs), default=0)


def content_and_primitive(p: IntPolynomial) -> tuple[int, IntPolynomial]:
    """(content, primitive part); sign convention of p is preserved."""
    if p.is_zero:
        raise ValueError("undefined content: zero polynomial")
    g = 0
    for c in p.coeffs:
        g = math.gcd(g, abs(c))
    return g, IntPolynomial(c // g for c in p.coeffs)


def _divisors(m: int) -> list[int]:
    """Positive divisors of |m|, m != 0."""
    m = abs(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _has_rational_root(p: IntPolynomial) -> bool:
    """Exact rational-root test; assumes constant coefficient nonzero."""
    a0, an = p.coeffs[0], p.coeffs[-1]
    d = p.degree
    for v in _divisors(an):
        for u in _divisors(a0):
            if math.gcd(u, v) > 1:
                continue
            # p(u/v) scaled by v**d, for both signs of u.
            s_pos = sum(c * u**j * v ** (d - j) for j, c in enumerate(p.coeffs))
            if s_pos == 0:
                return True
            s_neg = sum(c * (-u) ** j * v ** (d - j) for j, c in enumerate(p.coeffs))
            if s_neg == 0:
                return True
    return False


def poly_divmod(num: Sequence[Fraction], den: Sequence[Fraction]):
    """Quotient and remainder of dense Fraction coefficient lists."""
    num = list(num)
    dd = len(den) - 1
    while den and den[-1] == 0:
        den = den[:-1]
        dd -= 1
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - dd, 0)
    lead = den[-1]
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        if c:
            q[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    while num and num[-1] == 0:
        num.pop()
    return q, num


def _exact_quotient(p: IntPolynomial, g: IntPolynomial) -> IntPolynomial | None:
    """p / g if g divides p in Q[x], else None."""
    q, r = poly_divmod([Fraction(c) for c in p.coeffs], [Fraction(c) for c in g.coeffs])
    if r:
        return None
    if any(c.denominator != 1 for c in q):
        # Divides over Q but not over Z; still a valid degree split for the
        # irreducibility question, so report the rational quotient cleared.
        lcm = 1
        for c in q:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        return IntPolynomial(int(c * lcm) for c in q)
    return IntPolynomial(int(c) for c in q)


def _kronecker_has_factor(p: IntPolynomial, m: int) -> bool:
    """Search for a degree-m divisor by evaluation/interpolation.

    Evaluates p at m+1 small integers; a degree-m factor's values divide the
    polynomial's values, so interpolating every divisor combination and trial
    dividing is exhaustive.  Assumes integer roots were already screened out
    (all evaluation values nonzero).
    """
    points = [0]
    step = 1
    while len(points) < m + 1:
        points.append(step)
        if len(points) < m + 1:
            points.append(-step)
        step += 1
    values = [p(e) for e in points]
    assert all(values), "integer roots must be screened before factor search"

    divisor_lists = []
    for i, v in enumerate(values):
        ds = _divisors(v)
        if i == 0:
            divisor_lists.append(ds)  # WLOG g(points[0]) > 0: -g also divides
        else:
            divisor_lists.append([d for a in ds for d in (a, -a)])

    for combo in itertools.product(*divisor_lists):
        g = _lagrange_integer(points, combo, m)
        if g is None or g.degree != m:
            continue
        if _exact_quotient(p, g) is not None:
            return True
    return False


def _lagrange_integer(points: Sequence[int], values: Sequence[int], m: int) -> IntPolynomial | None:
    """Interpolating polynomial through (points, values) if it has integer
    coefficients and degree <= m, else None."""
    coeffs = [Fraction(0)] * (m + 1)
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(points):
            if j == i:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for t, b in enumerate(basis):
                new[t] -= xj * b
                new[t + 1] += b
            basis = new
        scale = Fraction(yi, denom)
        for t, b in enumerate(basis):
            coeffs[t] += scale * b
    if any(c.denominator != 1 for c in coeffs):
        return None
    return IntPolynomial(int(c) for c in coeffs)


def is_irreducible_over_q(p: IntPolynomial) -> bool:
    """True iff p admits no factorization into two integer polynomials of
    degree >= 1 (constant factors do not count)."""
    d = p.degree
    if d < 1:
        raise ValueError("degree zero has no irreducibility status")
    if d == 1:
        return True
    _, pp = content_and_primitive(p)
    if pp.coeffs[0] == 0:
        return False  # x divides
    if d == 2:
        a0, a1, a2 = pp.coeffs
        disc = a1 * a1 - 4 * a2 * a0
        if disc < 0:
            return True
        r = math.isqrt(disc)
        return r * r != disc
    if _has_rational_root(pp):
        return False
    if d == 3:
        return True
    for m in range(2, d // 2 + 1):
        if _kronecker_has_factor(pp, m):
            return False
    return True


def normalize_to_prime(p: IntPolynomial) -> IntPolynomial | None:
    """Prime-polynomial associate of p (content removed, leading coefficient
    made positive), or None if the primitive part is not irreducible of
    degree >= 1."""
    if p.is_zero or p.degree < 1:
        return None
    _, pp = content_and_primitive(p)
    if pp.leading < 0:
        pp = -pp
    if not is_irreducible_over_q(pp):
        return None
    return pp


@dataclass(frozen=True)
class SymmetricProfile:
    """Elementary symmetric polynomial values sigma_0..sigma_k of a point,
    with the out-of-range convention sigma_i = 0."""

    values: tuple

    def sigma(self, i: int):
        if 0 <= i < len(self.values):
            return self.values[i]
        return self.values[0] * 0  # typed zero (Fraction or float)

    @property
    def order(self) -> int:
        return len(self.values) - 1


def elementary_symmetric(xs: Sequence) -> SymmetricProfile:
    """SymmetricProfile of the point xs, computed by the product recurrence
    e_j <- e_j + x * e_{j-1}; exact when given Fractions or ints."""
    k = len(xs)
    if k < 1:
        raise ValueError("need at least one coordinate")
    xs = [Fraction(x) if isinstance(x, int) else x for x in xs]
    one = xs[0] ** 0  # 1 in the coordinate type
    es = [one] + [one * 0] * k
    for i, x in enumerate(xs, start=1):
        for j in range(i, 0, -1):
            es[j] = es[j] + x * es[j - 1]
    return SymmetricProfile(tuple(es))


def poly_from_roots(xs: Sequence) -> list:
    """Coefficients (low to high) of prod (z - x_i), via the symmetric
    profile: the z^m coefficient is (-1)^(k-m) sigma_{k-m}."""
    k = len(xs)
    prof = elementary_symmetric(xs)
    return [(-1) ** (k - m) * prof.sigma(k - m) for m in range(k + 1)]

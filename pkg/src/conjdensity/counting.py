"""Streaming enumeration of prime polynomials and exact tuple counts.

Counts the ordered k-tuples of distinct real conjugate algebraic numbers of
degree <= n and height <= Q inside a closed rational box, by summing exact
per-polynomial root-tuple counts over the prime polynomials of the height
cube.  A vectorized int64 fast path handles n = 2 at large Q; it is exact
(all comparisons are integer comparisons) and is cross-checked against the
generic stream in the tests.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

import numpy as np

from .boxes import Box, root_proxy_box
from .intpoly import IntPolynomial, is_irreducible_over_q
from .parallel import map_chunks
from .realroots import count_k_tuples

_A2_CHUNK = 8  # leading-coefficient slice width for parallel fast-path work


@dataclass(frozen=True)
class EnumerationTask:
    """One exact counting job: degree bound n, height bound Q, tuple order k,
    and the closed box (None means the full-space proxy box)."""

    n: int
    q: int
    k: int
    box: Box | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("degree bound n must be >= 2")
        if not 1 <= self.k <= self.n:
            raise ValueError("need 1 <= k <= n")
        if self.q < 1:
            raise ValueError("height bound Q must be >= 1")
        if self.box is not None and self.box.dimension != self.k:
            raise ValueError("box dimension must equal k")

    def effective_box(self) -> Box:
        return self.box if self.box is not None else root_proxy_box(self.q, self.k)


@dataclass(frozen=True)
class CountResult:
    """Exact tuple count with its per-polynomial stratification."""

    n: int
    q: int
    k: int
    box: Box
    tuple_count: int
    histogram: dict[int, int]
    reducible: int
    elapsed_seconds: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "Q": self.q,
            "k": self.k,
            "box": self.box.as_strings(),
            "phi_k": self.tuple_count,
            "histogram": {str(m): c for m, c in sorted(self.histogram.items())},
            "reducible": self.reducible,
            "elapsed_seconds": self.elapsed_seconds,
        }


def enumerate_prime_polynomials(n: int, q: int) -> Iterator[IntPolynomial]:
    """Every prime polynomial of degree 1..n and height <= q, exactly once,
    ordered by (degree, coefficient tuple low-to-high lexicographic)."""
    if n < 1:
        raise ValueError("need n >= 1")
    if q < 1:
        return
    low = range(-q, q + 1)
    for d in range(1, n + 1):
        for coeffs in product(*([low] * d), range(1, q + 1)):
            g = 0
            for c in coeffs:
                g = math.gcd(g, abs(c))
            if g != 1:
                continue
            p = IntPolynomial(coeffs)
            if is_irreducible_over_q(p):
                yield p


def count_conjugate_tuples(task: EnumerationTask, workers: int = 1) -> CountResult:
    """Exact ordered-tuple count plus the m-stratification histogram and the
    reducible-polynomial count for the same cube."""
    start = time.perf_counter()
    box = task.effective_box()
    if task.n == 2 and _fast_path_ok(task.q, box):
        tuple_count, hist = _count_tuples_fast_n2(task.q, task.k, box, workers)
    else:
        tuple_count, hist = _count_tuples_generic(task.n, task.q, task.k, box)
    reducible, _ = _reducible_counts(task.n, task.q, workers)
    return CountResult(
        n=task.n, q=task.q, k=task.k, box=box,
        tuple_count=tuple_count, histogram=dict(hist), reducible=reducible,
        elapsed_seconds=time.perf_counter() - start,
    )


def count_reducible(n: int, q: int, workers: int = 1) -> int:
    """Polynomials in the height-q cube of degree >= 2 that split into two
    integer factors of degree >= 1.  Degree-1 never counts."""
    if n < 1 or q < 1:
        raise ValueError("need n >= 1 and q >= 1")
    if n == 1:
        return 0
    return _reducible_counts(n, q, workers)[0]


def reducible_breakdown(n: int, q: int, workers: int = 1) -> dict[str, int]:
    """Reducible count plus the imprimitive-but-irreducible count (degree
    >= 2, coefficient gcd > 1, yet no degree split), kept for auditability."""
    if n == 1:
        return {"reducible": 0, "imprimitive_irreducible": 0}
    red, imp = _reducible_counts(n, q, workers)
    return {"reducible": red, "imprimitive_irreducible": imp}


# ----------------------------------------------------------------- generic

def _count_tuples_generic(n: int, q: int, k: int, box: Box) -> tuple[int, Counter]:
    hist: Counter = Counter()
    total = 0
    for p in enumerate_prime_polynomials(n, q):
        m = count_k_tuples(p, k, box) if p.degree >= k else 0
        hist[m] += 1
        total += m
    return total, hist


def _reducible_counts(n: int, q: int, workers: int = 1) -> tuple[int, int]:
    """(reducible, imprimitive irreducible) over the degree >= 2 cube."""
    if n == 1 or q < 1:
        return 0, 0
    if q <= 3 or n > 3:
        return _reducible_generic(n, q)
    red2, imp2 = _reducible_fast_quadratics(q, workers)
    if n == 2:
        return red2, imp2
    red3, imp3 = _reducible_fast_cubics(q, workers)
    return red2 + red3, imp2 + imp3


def _reducible_generic(n: int, q: int) -> tuple[int, int]:
    low = range(-q, q + 1)
    reducible = 0
    imprimitive_irreducible = 0
    for d in range(2, n + 1):
        # positive leading coefficient, doubled: p <-> -p preserves both classes
        for coeffs in product(*([low] * d), range(1, q + 1)):
            p = IntPolynomial(coeffs)
            if is_irreducible_over_q(p):
                g = 0
                for c in coeffs:
                    g = math.gcd(g, abs(c))
                if g > 1:
                    imprimitive_irreducible += 2
            else:
                reducible += 2
    return reducible, imprimitive_irreducible


# ------------------------------------------------------------ n = 2 fast path

def _fast_path_ok(q: int, box: Box) -> bool:
    """int64 safety check for the vectorized exact comparisons."""
    limit = 1 << 62
    for lo, hi in box.intervals:
        for val in (lo, hi):
            num, den = abs(val.numerator), val.denominator
            if 5 * q * q * den * den >= limit:
                return False
            m = 2 * q * num + q * den
            if m * m >= limit:
                return False
    return True


def _quad_root_membership(a2: np.ndarray, a1: np.ndarray, disc: np.ndarray,
                          lo: Fraction, hi: Fraction) -> tuple[np.ndarray, np.ndarray]:
    """Exact membership of the two real roots (-a1 -+ sqrt(disc)) / (2 a2) in
    the closed interval [lo, hi], as boolean arrays (minus-root, plus-root).

    Only meaningful where disc > 0 and disc is not a perfect square; all
    comparisons are integer comparisons, so no rounding can flip a count.
    """
    ln, ld = np.int64(lo.numerator), np.int64(lo.denominator)
    hn, hd = np.int64(hi.numerator), np.int64(hi.denominator)
    m_lo = 2 * a2 * ln + a1 * ld
    m_hi = 2 * a2 * hn + a1 * hd
    d_lo = disc * ld * ld
    d_hi = disc * hd * hd
    ge_lo_plus = (m_lo <= 0) | (d_lo >= m_lo * m_lo)
    le_hi_plus = (m_hi >= 0) & (d_hi <= m_hi * m_hi)
    ge_lo_minus = (m_lo <= 0) & (d_lo <= m_lo * m_lo)
    le_hi_minus = (m_hi >= 0) | (d_hi >= m_hi * m_hi)
    return ge_lo_minus & le_hi_minus, ge_lo_plus & le_hi_plus


def _count_tuples_fast_n2(q: int, k: int, box: Box,
                          workers: int = 1) -> tuple[int, Counter]:
    coeff = np.arange(-q, q + 1, dtype=np.int64)
    a1 = coeff[:, None]
    a0 = coeff[None, :]

    def do_chunk(ci: int) -> tuple[int, np.ndarray]:
        a2_lo = 1 + ci * _A2_CHUNK
        a2_hi = min(a2_lo + _A2_CHUNK, q + 1)
        phi = 0
        hist = np.zeros(3, dtype=np.int64)
        for a2v in range(a2_lo, a2_hi):
            a2 = np.int64(a2v)
            prim = np.gcd(np.gcd(a2, np.abs(a1)), np.abs(a0)) == 1
            disc = a1 * a1 - 4 * a2 * a0
            pos = disc >= 0
            sq = np.rint(np.sqrt(np.where(pos, disc, 0).astype(np.float64))).astype(np.int64)
            perfect = pos & (sq * sq == disc)
            prime = prim & ~perfect
            two_real = prime & (disc > 0)
            if k == 1:
                in_minus, in_plus = _quad_root_membership(a2, a1, disc, *box.intervals[0])
                m = np.where(two_real, in_minus.astype(np.int64) + in_plus.astype(np.int64), 0)
            else:
                m1_minus, m1_plus = _quad_root_membership(a2, a1, disc, *box.intervals[0])
                m2_minus, m2_plus = _quad_root_membership(a2, a1, disc, *box.intervals[1])
                m = np.where(
                    two_real,
                    (m1_minus & m2_plus).astype(np.int64) + (m1_plus & m2_minus).astype(np.int64),
                    0,
                )
            m = np.where(prime, m, -1)  # -1 marks non-primes, dropped below
            phi += int(m[m > 0].sum())
            hist += np.bincount(m[m >= 0], minlength=3)[:3]
        return phi, hist

    n_chunks = (q + _A2_CHUNK - 1) // _A2_CHUNK
    parts = map_chunks(do_chunk, n_chunks, workers)
    phi = sum(p for p, _ in parts)
    hist_arr = np.zeros(3, dtype=np.int64)
    for _, h in parts:
        hist_arr += h

    # degree-1 primes: a1 in 1..q, |a0| <= q, gcd = 1; root -a0/a1
    lead = np.arange(1, q + 1, dtype=np.int64)[:, None]
    const = coeff[None, :]
    prim1 = np.gcd(lead, np.abs(const)) == 1
    if k == 1:
        lo, hi = box.intervals[0]
        ln, ld = np.int64(lo.numerator), np.int64(lo.denominator)
        hn, hd = np.int64(hi.numerator), np.int64(hi.denominator)
        inside = (-const * ld >= ln * lead) & (-const * hd <= hn * lead)
        m1 = int(np.count_nonzero(prim1 & inside))
        count1 = int(np.count_nonzero(prim1))
        hist_arr[1] += m1
        hist_arr[0] += count1 - m1
        phi += m1
    else:
        hist_arr[0] += int(np.count_nonzero(prim1))

    hist = Counter({m: int(c) for m, c in enumerate(hist_arr) if c})
    return phi, hist


def _reducible_fast_quadratics(q: int, workers: int = 1) -> tuple[int, int]:
    """Reducible and imprimitive-irreducible counts among true quadratics of
    height <= q (both leading signs)."""
    coeff = np.arange(-q, q + 1, dtype=np.int64)
    a1 = coeff[:, None]
    a0 = coeff[None, :]

    def do_chunk(ci: int) -> tuple[int, int]:
        a2_lo = 1 + ci * _A2_CHUNK
        a2_hi = min(a2_lo + _A2_CHUNK, q + 1)
        red = 0
        imp = 0
        for a2v in range(a2_lo, a2_hi):
            a2 = np.int64(a2v)
            disc = a1 * a1 - 4 * a2 * a0
            pos = disc >= 0
            sq = np.rint(np.sqrt(np.where(pos, disc, 0).astype(np.float64))).astype(np.int64)
            perfect = pos & (sq * sq == disc)
            red += int(np.count_nonzero(perfect))
            imprim = np.gcd(np.gcd(a2, np.abs(a1)), np.abs(a0)) > 1
            imp += int(np.count_nonzero(imprim & ~perfect))
        return red, imp

    n_chunks = (q + _A2_CHUNK - 1) // _A2_CHUNK
    parts = map_chunks(do_chunk, n_chunks, workers)
    return 2 * sum(r for r, _ in parts), 2 * sum(i for _, i in parts)


def _divisor_table(q: int) -> list[list[int]]:
    table: list[list[int]] = [[] for _ in range(q + 1)]
    for d in range(1, q + 1):
        for m in range(d, q + 1, d):
            table[m].append(d)
    return table


def _reducible_fast_cubics(q: int, workers: int = 1) -> tuple[int, int]:
    """Reducible / imprimitive-irreducible counts among true cubics of height
    <= q.  A cubic splits iff it has a rational root u/v with v | a3 and
    u | a0, so for each (a3, a0) the qualifying (a2, a1) pairs are marked by
    solving the root condition for a1."""
    size = 2 * q + 1
    a2_col = np.arange(-q, q + 1, dtype=np.int64)
    divisors = _divisor_table(q)

    def do_a3(a3m1: int) -> tuple[int, int]:
        a3 = a3m1 + 1
        red = 0
        imp = 0
        for a0 in range(-q, q + 1):
            if a0 == 0:
                red += size * size  # root 0 for every (a2, a1)
                continue
            mask = np.zeros((size, size), dtype=bool)
            for v in divisors[a3]:
                for ua in divisors[abs(a0)]:
                    if math.gcd(ua, v) != 1:
                        continue
                    if ua * a3 > v * (a3 + q):  # Cauchy: |u/v| <= 1 + q/a3
                        continue
                    for u in (ua, -ua):
                        den = u * v * v
                        num = -(a3 * u**3 + a2_col * (u * u * v) + a0 * v**3)
                        a1v = num // den
                        ok = (num % den == 0) & (np.abs(a1v) <= q)
                        rows = np.nonzero(ok)[0]
                        mask[rows, a1v[rows] + q] = True
            red += int(np.count_nonzero(mask))
            g0 = math.gcd(a3, abs(a0))
            if g0 > 1:
                gg = np.gcd(np.gcd(np.int64(g0), np.abs(a2_col[:, None])),
                            np.abs(a2_col[None, :]))
                imp += int(np.count_nonzero((gg > 1) & ~mask))
        return red, imp

    parts = map_chunks(do_a3, q, workers)
    return 2 * sum(r for r, _ in parts), 2 * sum(i for _, i in parts)

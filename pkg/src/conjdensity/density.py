"""Limiting correlation density of real conjugate algebraic numbers.

The k-point density at x = (x_1..x_k) for degree bound n is

    2^(-n-1) * prod_{i<j} |x_i - x_j| * Integral over the admissible
    cofactor coefficients t = (t_0..t_{n-k}) of prod_i |T(x_i)|,

where T(z) = sum t_j z^j and t is admissible exactly when the degree-n
polynomial T(z) * prod (z - x_i) has every coefficient in [-1, 1].  The
integral is evaluated by rejection Monte Carlo over a per-point bounding
box of that polytope; closed forms cover the one-point density on the
central band and the full-order case k = n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .boxes import Box
from .intpoly import elementary_symmetric
from .parallel import CHUNK, chunk_ranges, kahan_total, map_chunks
from .rng import derive_seed, uniform_block
from .zeta import zeta

_TAG_POINT = 0x64656E73
_TAG_INTEGRATE = 0x696E7467

#: relative inflation of the float bounding box, so rounding can never clip
#: the admissible polytope
_BOX_SAFETY = 1.0 + 1e-9

METHOD_BAND = "closed_form_k1_band"
METHOD_TOP = "closed_form_kn"
METHOD_MC = "mc_polytope"


@dataclass(frozen=True)
class DensityEstimate:
    """Density value with its Monte Carlo uncertainty (0 for closed forms)."""

    value: float
    std_error: float
    samples: int
    method: str


@dataclass(frozen=True)
class CofactorBox:
    """Axis bounds for the admissible cofactor coefficients at a point;
    contains the admissible polytope, every interval finite."""

    bounds: tuple[tuple[Fraction, Fraction], ...]

    @property
    def dimension(self) -> int:
        return len(self.bounds)

    def volume(self) -> Fraction:
        v = Fraction(1)
        for lo, hi in self.bounds:
            v *= hi - lo
        return v


def _exact(v) -> Fraction:
    # Fraction(float) is the exact binary value, so float callers still get
    # exact decisions.
    return v if isinstance(v, Fraction) else Fraction(v)


def cofactor_in_unit_cube(x: Sequence, t: Sequence) -> bool:
    """True iff the degree-n polynomial with roots x and cofactor
    coefficients t has all n+1 coefficients in [-1, 1] (n = len(x) +
    len(t) - 1).  Decided in exact rational arithmetic."""
    xs = [_exact(v) for v in x]
    ts = [_exact(v) for v in t]
    k = len(xs)
    n = k + len(ts) - 1
    prof = elementary_symmetric(xs)
    for i in range(n + 1):
        acc = Fraction(0)
        for j, tj in enumerate(ts):
            acc += (-1) ** j * prof.sigma(k - i + j) * tj
        if acc > 1 or acc < -1:
            return False
    return True


def _bounds_exact(n: int, abs_sigma: list[Fraction]) -> list[Fraction]:
    """Half-widths b_j with |t_j| <= b_j on the admissible polytope.

    Triangular back-substitution (constraint k+j has unit coefficient on
    t_j), then sweeps that re-tighten each b_j through every constraint."""
    k = len(abs_sigma) - 1
    w = n - k + 1
    b = [Fraction(1)] * w
    for j in range(w - 2, -1, -1):
        acc = Fraction(1)
        for m in range(1, min(w - j, k + 1)):  # sigma_m = 0 beyond m = k
            acc += abs_sigma[m] * b[j + m]
        b[j] = acc
    for _ in range(2):
        for i in range(n, -1, -1):
            js = [j for j in range(w) if 0 <= k - i + j <= k and abs_sigma[k - i + j] > 0]
            for j in js:
                c = abs_sigma[k - i + j]
                others = sum(abs_sigma[k - i + jj] * b[jj] for jj in js if jj != j)
                cand = (1 + others) / c
                if cand < b[j]:
                    b[j] = cand
    return b


def cofactor_bounding_box(n: int, x: Sequence) -> CofactorBox:
    """Box provably containing the admissible cofactor polytope at x."""
    xs = [_exact(v) for v in x]
    k = len(xs)
    if not 1 <= k <= n:
        raise ValueError("need 1 <= len(x) <= n")
    prof = elementary_symmetric(xs)
    abs_sigma = [abs(prof.sigma(i)) for i in range(k + 1)]
    b = _bounds_exact(n, abs_sigma)
    return CofactorBox(tuple((-bj, bj) for bj in b))


def band_density(n: int, x):
    """One-point density closed form on |x| <= 1 - 1/sqrt(2):
    (3 + sum_{m=1}^{n-1} (m+1)^2 x^(2m)) / 12.  Exact on rational input."""
    if n < 2:
        raise ValueError("need n >= 2")
    xf = _exact(x)
    a = abs(xf)
    if a > 1 or 2 * (1 - a) ** 2 < 1:
        raise ValueError("band formula inapplicable: |x| > 1 - 1/sqrt(2)")
    val = Fraction(3)
    for m in range(1, n):
        val += (m + 1) ** 2 * xf ** (2 * m)
    val /= 12
    return float(val) if isinstance(x, float) else val


def top_order_density(n: int, x: Sequence):
    """Closed form for tuple order equal to the degree bound (k = n):
    2^(-n)/(n+1) * max_i |sigma_i(x)|^(-(n+1)) * prod_{i<j} |x_i - x_j|.
    Exact on rational input; 0 when coordinates repeat."""
    xs = [_exact(v) for v in x]
    if len(xs) != n:
        raise ValueError("top-order form needs len(x) == n")
    vdm = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            vdm *= abs(xs[i] - xs[j])
    as_float = any(isinstance(v, float) for v in x)
    if vdm == 0:
        return 0.0 if as_float else Fraction(0)
    prof = elementary_symmetric(xs)
    peak = max(abs(prof.sigma(i)) for i in range(n + 1))
    val = Fraction(1, 2**n * (n + 1)) * peak ** (-(n + 1)) * vdm
    return float(val) if as_float else val


# ------------------------------------------------------------- MC kernels

def _esym_rows(xcols: np.ndarray) -> np.ndarray:
    """Elementary symmetric values row-wise: (m, k) -> (m, k+1)."""
    m, k = xcols.shape
    es = np.zeros((m, k + 1))
    es[:, 0] = 1.0
    for i in range(k):
        for j in range(min(i + 1, k), 0, -1):
            es[:, j] += xcols[:, i] * es[:, j - 1]
    return es


def _bounds_rows(n: int, abs_sigma: np.ndarray) -> np.ndarray:
    """Row-wise float twin of _bounds_exact: (m, k+1) -> (m, n-k+1)."""
    m, kp1 = abs_sigma.shape
    k = kp1 - 1
    w = n - k + 1
    b = np.ones((m, w))
    for j in range(w - 2, -1, -1):
        acc = np.ones(m)
        for mm in range(1, min(w - j, k + 1)):  # sigma_m = 0 beyond m = k
            acc += abs_sigma[:, mm] * b[:, j + mm]
        b[:, j] = acc
    for _ in range(2):
        for i in range(n, -1, -1):
            js = [j for j in range(w) if 0 <= k - i + j <= k]
            for j in js:
                c = abs_sigma[:, k - i + j]
                others = np.zeros(m)
                for jj in js:
                    if jj != j:
                        others += abs_sigma[:, k - i + jj] * b[:, jj]
                with np.errstate(divide="ignore", invalid="ignore"):
                    cand = (1.0 + others) / c
                b[:, j] = np.where(c > 0, np.minimum(b[:, j], cand), b[:, j])
    return b * _BOX_SAFETY


def _admissible_and_integrand(n: int, xcols: np.ndarray, tcols: np.ndarray,
                              sig: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(inside mask, prod_i |T(x_i)|) for row-wise samples."""
    m, k = xcols.shape
    w = tcols.shape[1]
    inside = np.ones(m, dtype=bool)
    for i in range(n + 1):
        acc = np.zeros(m)
        for j in range(w):
            idx = k - i + j
            if 0 <= idx <= k:
                term = sig[:, idx] * tcols[:, j]
                acc += term if j % 2 == 0 else -term
        inside &= np.abs(acc) <= 1.0
    integrand = np.ones(m)
    for c in range(k):
        xc = xcols[:, c]
        acc = tcols[:, w - 1].copy()
        for j in range(w - 2, -1, -1):
            acc = acc * xc + tcols[:, j]
        integrand *= np.abs(acc)
    return inside, integrand


def _vandermonde_rows(xcols: np.ndarray) -> np.ndarray:
    m, k = xcols.shape
    v = np.ones(m)
    for i in range(k):
        for j in range(i + 1, k):
            v *= np.abs(xcols[:, i] - xcols[:, j])
    return v


def _mc_reduce(chunks: list[tuple[float, float, int]], scale: float,
               method: str) -> DensityEstimate:
    total = kahan_total([c[0] for c in chunks])
    total_sq = kahan_total([c[1] for c in chunks])
    count = sum(c[2] for c in chunks)
    mean = total / count
    var = max(total_sq - total * total / count, 0.0) / (count - 1)
    return DensityEstimate(
        value=scale * mean,
        std_error=scale * math.sqrt(var / count),
        samples=count,
        method=method,
    )


def density_mc(n: int, x: Sequence, samples: int, seed: int,
               workers: int = 1) -> DensityEstimate:
    """Monte Carlo density at a fixed point: uniform cofactor samples in the
    bounding box, rejected samples contribute 0.  Reproducible per seed and
    bit-identical for any worker count."""
    if samples < 100:
        raise ValueError("insufficient samples")
    k = len(x)
    if not 1 <= k <= n:
        raise ValueError("need 1 <= len(x) <= n")
    xf = [float(v) for v in x]
    if len(set(xf)) != k:
        return DensityEstimate(0.0, 0.0, samples, METHOD_MC)

    box = cofactor_bounding_box(n, x)
    half = np.array([float(hi) for _, hi in box.bounds]) * _BOX_SAFETY
    vol_t = float(np.prod(2.0 * half))
    vdm = 1.0
    for i in range(k):
        for j in range(i + 1, k):
            vdm *= abs(xf[i] - xf[j])
    xrow = np.array(xf)[None, :]
    sig_row = _esym_rows(xrow)
    w = n - k + 1
    seed_eff = derive_seed(seed, _TAG_POINT)
    prefactor = 2.0 ** (-(n + 1)) * vdm * vol_t

    ranges = chunk_ranges(samples, CHUNK)

    def do_chunk(ci: int) -> tuple[float, float, int]:
        s0, s1 = ranges[ci]
        m = s1 - s0
        u = uniform_block(seed_eff, s0 * w, m * w).reshape(m, w)
        t = (2.0 * u - 1.0) * half[None, :]
        sig = np.broadcast_to(sig_row, (m, k + 1))
        xc = np.broadcast_to(xrow, (m, k))
        inside, integrand = _admissible_and_integrand(n, xc, t, sig)
        contrib = np.where(inside, prefactor * integrand, 0.0)
        return float(np.sum(contrib)), float(np.sum(contrib * contrib)), m

    parts = map_chunks(do_chunk, len(ranges), workers)
    return _mc_reduce(parts, 1.0, METHOD_MC)


def integrate_density(n: int, k: int, box: Box, samples: int, seed: int,
                      workers: int = 1) -> DensityEstimate:
    """Monte Carlo estimate of the density integral over a bounded box, with
    x and the cofactor coefficients sampled jointly in one stream."""
    if samples < 100:
        raise ValueError("insufficient samples")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if box.dimension != k:
        raise ValueError("box dimension must equal k")
    los, his = box.float_bounds()
    if not (np.all(np.isfinite(los)) and np.all(np.isfinite(his))):
        raise ValueError("unbounded box: use the root proxy box instead")
    span = his - los
    vol_x = float(box.volume)
    w = n - k + 1
    draws = n + 1  # k coordinates + w cofactor coefficients per sample
    seed_eff = derive_seed(seed, _TAG_INTEGRATE)
    base = 2.0 ** (-(n + 1))

    ranges = chunk_ranges(samples, CHUNK)

    def do_chunk(ci: int) -> tuple[float, float, int]:
        s0, s1 = ranges[ci]
        m = s1 - s0
        u = uniform_block(seed_eff, s0 * draws, m * draws).reshape(m, draws)
        xc = los[None, :] + span[None, :] * u[:, :k]
        sig = _esym_rows(xc)
        b = _bounds_rows(n, np.abs(sig))
        t = (2.0 * u[:, k:] - 1.0) * b
        inside, integrand = _admissible_and_integrand(n, xc, t, sig)
        vol_t = np.prod(2.0 * b, axis=1)
        contrib = np.where(
            inside, base * _vandermonde_rows(xc) * vol_t * integrand, 0.0)
        return float(np.sum(contrib)), float(np.sum(contrib * contrib)), m

    parts = map_chunks(do_chunk, len(ranges), workers)
    return _mc_reduce(parts, vol_x, METHOD_MC)


def predicted_count(n: int, k: int, q: int, box: Box, samples: int, seed: int,
                    workers: int = 1) -> float:
    """Theorem-scale prediction (2Q)^(n+1) / (2 zeta(n+1)) times the density
    integral over the box; 0 at Q = 0 (empty height class)."""
    if q == 0:
        return 0.0
    est = integrate_density(n, k, box, samples, seed, workers)
    return (2 * q) ** (n + 1) / (2 * zeta(n + 1)) * est.value

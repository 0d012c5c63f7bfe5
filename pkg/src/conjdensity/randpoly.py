"""Monte Carlo oracle: root-tuple statistics of random polynomials with
independent uniform [-1, 1] coefficients.

The expected number of ordered k-tuples of distinct real zeros in a box
equals the density integral over that box, which makes this module an
independent cross-check of the density MC: the two estimates share nothing
but the answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .boxes import Box
from .density import DensityEstimate
from .parallel import CHUNK, chunk_ranges, map_chunks
from .rng import derive_seed, uniform_block

_TAG_ORACLE = 0x6F72636C
_SUB_BATCH = 4096  # trials per vectorized mesh; integer sums keep results
                   # independent of this size

METHOD_ORACLE = "mc_root_counting"


@dataclass(frozen=True)
class RandomPolynomialSample:
    """One draw of the random polynomial: coefficients xi_0..xi_n plus the
    (seed, index) provenance that regenerates it."""

    coeffs: tuple[float, ...]
    seed: int
    index: int

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1


def sample_random_polynomial(n: int, seed: int, index: int) -> RandomPolynomialSample:
    """Deterministic sample: coefficient j comes from counter index*(n+1)+j."""
    u = uniform_block(derive_seed(seed, _TAG_ORACLE), index * (n + 1), n + 1)
    return RandomPolynomialSample(tuple(float(v) for v in 2.0 * u - 1.0), seed, index)


def _roots_in_hull(coeffs: np.ndarray, hull_lo: float, hull_hi: float,
                   mesh_cells: int, refine_tol: float):
    """Sign-change roots of each row polynomial inside per-trial hulls.

    Returns (trial_index, root_value) arrays.  The hull is the requested
    interval clipped to each trial's Cauchy bound 1 + max|xi_j| / |xi_n|.
    """
    m, w = coeffs.shape
    lead = np.abs(coeffs[:, -1])
    with np.errstate(divide="ignore"):
        cauchy = 1.0 + np.max(np.abs(coeffs[:, :-1]), axis=1) / np.where(lead > 0, lead, np.inf)
    lo = np.maximum(hull_lo, -cauchy)
    hi = np.minimum(hull_hi, cauchy)
    valid = lo < hi
    lo = np.where(valid, lo, 0.0)
    hi = np.where(valid, hi, 1.0)

    grid = np.linspace(0.0, 1.0, mesh_cells + 1)
    xs = lo[:, None] + (hi - lo)[:, None] * grid[None, :]
    p = np.broadcast_to(coeffs[:, -1][:, None], xs.shape).copy()
    for j in range(w - 2, -1, -1):
        p = p * xs + coeffs[:, j][:, None]
    pos = p > 0.0
    flips = (pos[:, 1:] != pos[:, :-1]) & valid[:, None]
    rows, cols = np.nonzero(flips)
    if rows.size == 0:
        return rows, np.empty(0)

    a = xs[rows, cols]
    b = xs[rows, cols + 1]
    sign_a = pos[rows, cols]
    cf = coeffs[rows]
    width = float(np.max(b - a))
    iters = min(60, max(1, int(math.ceil(math.log2(max(width, refine_tol) / refine_tol))) + 1))
    for _ in range(iters):
        mid = 0.5 * (a + b)
        pm = cf[:, -1].copy()
        for j in range(w - 2, -1, -1):
            pm = pm * mid + cf[:, j]
        pick_a = (pm > 0.0) == sign_a
        a = np.where(pick_a, mid, a)
        b = np.where(pick_a, b, mid)
    return rows, 0.5 * (a + b)


def _ordered_distinct_tuples(mem: list[np.ndarray], rows: np.ndarray,
                             m: int, k: int) -> np.ndarray:
    """Per-trial counts of ordered k-tuples of distinct roots with root j of
    the tuple in box interval j, from per-interval membership vectors."""

    def tally(weights: np.ndarray) -> np.ndarray:
        return np.bincount(rows, weights=weights, minlength=m)

    if k == 1:
        return np.rint(tally(mem[0])).astype(np.int64)
    if k == 2:
        s1, s2 = tally(mem[0]), tally(mem[1])
        s12 = tally(mem[0] * mem[1])
        return np.rint(s1 * s2 - s12).astype(np.int64)
    if k == 3:
        s1, s2, s3 = tally(mem[0]), tally(mem[1]), tally(mem[2])
        s12 = tally(mem[0] * mem[1])
        s13 = tally(mem[0] * mem[2])
        s23 = tally(mem[1] * mem[2])
        s123 = tally(mem[0] * mem[1] * mem[2])
        return np.rint(
            s1 * s2 * s3 - s12 * s3 - s13 * s2 - s23 * s1 + 2 * s123
        ).astype(np.int64)
    # small-k cases above cover the hot paths; fall back to direct counting
    out = np.zeros(m, dtype=np.int64)
    flags = np.stack(mem, axis=1).astype(bool)  # (roots, k)
    for trial in range(m):
        idx = np.nonzero(rows == trial)[0]
        if len(idx) < k:
            continue
        for perm in permutations(idx, k):
            if all(flags[r, j] for j, r in enumerate(perm)):
                out[trial] += 1
    return out


def _tuple_histogram(n: int, k: int, box: Box | None, trials: int, seed: int,
                     workers: int, mesh_cells: int, refine_tol: float) -> np.ndarray:
    """Histogram of per-trial ordered-tuple counts (index = count)."""
    if trials < 100:
        raise ValueError("insufficient trials")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if box is not None:
        if box.dimension != k:
            raise ValueError("box dimension must equal k")
        los, his = box.float_bounds()
        hull_lo, hull_hi = float(np.min(los)), float(np.max(his))
    else:
        los = his = None
        hull_lo, hull_hi = -np.inf, np.inf
    max_m = 1
    for i in range(k):
        max_m *= n - i
    seed_eff = derive_seed(seed, _TAG_ORACLE)
    w = n + 1
    ranges = chunk_ranges(trials, CHUNK)

    def do_chunk(ci: int) -> np.ndarray:
        s0, s1 = ranges[ci]
        hist = np.zeros(max_m + 1, dtype=np.int64)
        for b0 in range(s0, s1, _SUB_BATCH):
            b1 = min(b0 + _SUB_BATCH, s1)
            m = b1 - b0
            u = uniform_block(seed_eff, b0 * w, m * w).reshape(m, w)
            coeffs = 2.0 * u - 1.0
            rows, roots = _roots_in_hull(coeffs, hull_lo, hull_hi,
                                         mesh_cells, refine_tol)
            if box is None:
                mem = [np.ones(rows.shape[0])] * k
            else:
                mem = [((roots >= los[j]) & (roots <= his[j])).astype(np.float64)
                       for j in range(k)]
            counts = _ordered_distinct_tuples(mem, rows, m, k)
            hist += np.bincount(np.clip(counts, 0, max_m), minlength=max_m + 1)
        return hist

    parts = map_chunks(do_chunk, len(ranges), workers)
    total = np.zeros(max_m + 1, dtype=np.int64)
    for h in parts:
        total += h
    return total


def _moments(hist: np.ndarray) -> tuple[int, int, int]:
    ms = np.arange(len(hist), dtype=np.int64)
    t = int(hist.sum())
    s1 = int(np.sum(ms * hist))
    s2 = int(np.sum(ms * ms * hist))
    return t, s1, s2


def expected_tuple_count(n: int, k: int, box: Box | None, trials: int, seed: int,
                         workers: int = 1, mesh_cells: int = 512,
                         refine_tol: float = 1e-9) -> DensityEstimate:
    """Mean ordered-tuple count of distinct real zeros in the box over
    `trials` sampled polynomials (box=None: all real zeros, per-sample
    Cauchy proxy box)."""
    hist = _tuple_histogram(n, k, box, trials, seed, workers, mesh_cells, refine_tol)
    t, s1, s2 = _moments(hist)
    mean = s1 / t
    var = max(s2 - s1 * s1 / t, 0.0) / (t - 1)
    return DensityEstimate(mean, math.sqrt(var / t), t, METHOD_ORACLE)


def tuple_count_distribution(n: int, k: int, box: Box | None, trials: int,
                             seed: int, workers: int = 1, mesh_cells: int = 512,
                             refine_tol: float = 1e-9) -> dict[int, float]:
    """Empirical distribution of the per-trial tuple count N: map m -> P(N=m).
    Scaling by 2^(n+1) turns these into coefficient-cube cell volumes."""
    hist = _tuple_histogram(n, k, box, trials, seed, workers, mesh_cells, refine_tol)
    return {m: int(c) / trials for m, c in enumerate(hist) if c}


def coefficient_cell_volumes(distribution: dict[int, float], n: int) -> dict[int, float]:
    """Volume estimates 2^(n+1) * P(N=m) of the coefficient-cube cells on
    which the sampled polynomial has exactly m qualifying tuples."""
    return {m: 2 ** (n + 1) * p for m, p in distribution.items()}

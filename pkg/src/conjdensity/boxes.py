"""Axis-aligned boxes with exact rational endpoints.

Boxes are closed; a point on the boundary counts as inside.  The text format
used by the CLI and JSON reports is "a1,b1;a2,b2;..." where each endpoint is
an exact decimal or rational literal (e.g. -0.25 or -1/4); binary floats are
never accepted, which keeps the enumeration side exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class Box:
    """Product of closed rational intervals in R^k."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if not self.intervals:
            raise ValueError("box needs at least one interval")
        for lo, hi in self.intervals:
            if lo > hi:
                raise ValueError("box interval endpoints out of order")

    @staticmethod
    def of(*intervals) -> "Box":
        """Box.of((lo, hi), ...) with endpoints coercible to Fraction."""
        return Box(tuple((Fraction(lo), Fraction(hi)) for lo, hi in intervals))

    @staticmethod
    def cube(lo, hi, k: int) -> "Box":
        lo, hi = Fraction(lo), Fraction(hi)
        return Box(tuple((lo, hi) for _ in range(k)))

    @staticmethod
    def parse(text: str) -> "Box":
        """Parse "a1,b1;a2,b2;..." with exact decimal/rational endpoints."""
        intervals = []
        for part in text.strip().split(";"):
            pieces = part.split(",")
            if len(pieces) != 2:
                raise ValueError(f"malformed box interval: {part!r}")
            try:
                lo, hi = Fraction(pieces[0].strip()), Fraction(pieces[1].strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"malformed box endpoint in {part!r}") from exc
            intervals.append((lo, hi))
        return Box(tuple(intervals))

    @property
    def dimension(self) -> int:
        return len(self.intervals)

    @property
    def volume(self) -> Fraction:
        v = Fraction(1)
        for lo, hi in self.intervals:
            v *= hi - lo
        return v

    def contains(self, point: Sequence) -> bool:
        """Exact membership for a point of Fractions/ints."""
        if len(point) != self.dimension:
            raise ValueError("dimension mismatch")
        return all(lo <= x <= hi for x, (lo, hi) in zip(point, self.intervals))

    def float_bounds(self) -> tuple[np.ndarray, np.ndarray]:
        los = np.array([float(lo) for lo, _ in self.intervals])
        his = np.array([float(hi) for _, hi in self.intervals])
        return los, his

    def as_strings(self) -> list[list[str]]:
        """JSON-friendly exact rendering of the endpoints."""
        return [[str(lo), str(hi)] for lo, hi in self.intervals]

    def __str__(self) -> str:
        return ";".join(f"{lo},{hi}" for lo, hi in self.intervals)


def root_proxy_box(q: int, k: int) -> Box:
    """Box certain to contain every k-tuple of roots of height <= q integer
    polynomials (Cauchy bound: |root| <= 1 + q for positive leading
    coefficient); stands in for a full-space request."""
    return Box.cube(-(q + 1), q + 1, k)

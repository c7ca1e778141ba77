"""Exact sign-based planar predicates over integer coordinates.

All predicates run on Python integers only, so results are identical
across runs and platforms.  Conventions, fixed once for the whole
package:

* A sign is -1, 0 or +1.
* The positive side of the directed line a->b is the counterclockwise
  side (orient(a, b, p) == +1).
* Collinear triples and duplicate points among configuration vertices
  are hard errors, never perturbed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

#: Coordinates are capped so every orientation determinant fits a 64-bit
#: signed integer on platforms without big integers; it also keeps
#: fixtures and renders at a sane scale.
COORD_BOUND = 10**6

Sign = int


class Point(NamedTuple):
    x: int
    y: int


class DegeneracyError(ValueError):
    """Degenerate geometric input: coincident points, collinear triples,
    or a line given by a single point."""


@dataclass(frozen=True)
class GeneralPositionViolation:
    kind: str  # "duplicate" | "collinear"
    indices: tuple[int, ...]

    def describe(self) -> str:
        if self.kind == "duplicate":
            i, j = self.indices
            return f"points {i} and {j} coincide"
        return "points {}, {}, {} are collinear".format(*self.indices)


def orient(p, q, r) -> Sign:
    """Sign of the cross product (q-p) x (r-p).

    +1: counterclockwise turn, -1: clockwise, 0: collinear.
    """
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def side_of_line(a, b, p) -> Sign:
    """Which side of the line through a and b the point p lies on.

    +1 is the counterclockwise side, 0 means p is on the line.
    """
    if a[0] == b[0] and a[1] == b[1]:
        raise DegeneracyError("line requires two distinct points")
    return orient(a, b, p)


def segments_cross(a, b, c, d) -> bool:
    """True iff the open segments (a,b) and (c,d) intersect.

    Assumes general position: with no three collinear points, segments
    sharing an endpoint never cross and the test reduces to strict sign
    comparisons.
    """
    d1 = orient(a, b, c)
    d2 = orient(a, b, d)
    if d1 * d2 >= 0:
        return False
    d3 = orient(c, d, a)
    d4 = orient(c, d, b)
    return d3 * d4 < 0


def line_meets_open_segment(a, b, c, d) -> bool:
    """True iff the infinite line through a,b meets the open segment (c,d).

    An endpoint of [c,d] lying exactly on the line does not count.
    """
    s1 = side_of_line(a, b, c)
    s2 = side_of_line(a, b, d)
    return s1 * s2 < 0


def convex_hull_ccw(points: Sequence) -> list[int]:
    """Indices of the convex hull in counterclockwise order.

    The cycle starts at the lexicographically smallest point.  Under the
    general-position assumption every hull vertex is a corner; any zero
    turn encountered while building the chains raises DegeneracyError.
    """
    n = len(points)
    if n < 3:
        raise DegeneracyError("convex hull requires at least 3 points")
    order = sorted(range(n), key=lambda i: (points[i][0], points[i][1]))
    for a, b in zip(order, order[1:]):
        if tuple(points[a]) == tuple(points[b]):
            raise DegeneracyError(f"points {a} and {b} coincide")

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2:
                o = orient(points[out[-2]], points[out[-1]], points[i])
                if o == 0:
                    raise DegeneracyError(
                        f"points {out[-2]}, {out[-1]}, {i} are collinear"
                    )
                if o < 0:
                    out.pop()
                else:
                    break
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    return lower[:-1] + upper[:-1]


def find_general_position_violation(points: Sequence) -> GeneralPositionViolation | None:
    """Scan for a duplicate pair or collinear triple; None means all clear."""
    n = len(points)
    seen: dict[tuple, int] = {}
    for i in range(n):
        key = (points[i][0], points[i][1])
        if key in seen:
            return GeneralPositionViolation("duplicate", (seen[key], i))
        seen[key] = i
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient(points[i], points[j], points[k]) == 0:
                    return GeneralPositionViolation("collinear", (i, j, k))
    return None


def assert_general_position(points: Sequence) -> None:
    """Raise DegeneracyError naming an offending pair/triple, if any."""
    violation = find_general_position_violation(points)
    if violation is not None:
        raise DegeneracyError(violation.describe())

"""Triangle centers from trilinear/barycentric coordinates, plus the medial
and excentral derived triangles.

The registry is closed: exactly the centers the downstream family machinery
needs, each with an explicit trilinear or constructive definition so that
every one can be cross-checked against an independent construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateTriangle,
    IsoscelesDegeneracy,
    PointAtInfinity,
    UnsupportedCenter,
)
from .geom import Line, Point, Triangle, line_intersection, line_through, midpoint

SUPPORTED_CENTERS = frozenset({1, 3, 4, 5, 6, 7, 9, 10, 11, 40, 100, 1155})

# min |s_i - s_j| below this fraction of the perimeter counts as isosceles
# for the centers whose trilinears carry (s_i - s_j) denominators.
ISOSCELES_EPS = 1e-10


@dataclass(frozen=True)
class SideLengths:
    """Side lengths opposite vertices 1, 2, 3."""

    s1: float
    s2: float
    s3: float

    def __post_init__(self):
        s1, s2, s3 = self.s1, self.s2, self.s3
        if min(s1, s2, s3) <= 0.0 or s1 + s2 <= s3 or s2 + s3 <= s1 or s3 + s1 <= s2:
            raise DegenerateTriangle(f"side lengths violate triangle inequality: {s1}, {s2}, {s3}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.s1, self.s2, self.s3)


@dataclass(frozen=True)
class TrilinearTriple:
    """Homogeneous trilinears, stored with unit Euclidean norm and the first
    nonzero component positive."""

    f1: float
    f2: float
    f3: float

    def __post_init__(self):
        n = math.sqrt(self.f1 ** 2 + self.f2 ** 2 + self.f3 ** 2)
        if n == 0.0:
            raise ValueError("zero trilinear triple")
        f = [self.f1 / n, self.f2 / n, self.f3 / n]
        for x in f:
            if x != 0.0:
                if x < 0.0:
                    f = [-y for y in f]
                break
        object.__setattr__(self, "f1", f[0])
        object.__setattr__(self, "f2", f[1])
        object.__setattr__(self, "f3", f[2])

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.f1, self.f2, self.f3)


def side_lengths(t: Triangle) -> SideLengths:
    from .geom import distance

    p1, p2, p3 = t.v
    return SideLengths(distance(p2, p3), distance(p1, p3), distance(p1, p2))


def angles(t: Triangle) -> tuple[float, float, float]:
    """Interior angles at vertices 1, 2, 3 via the law of cosines."""
    s1, s2, s3 = side_lengths(t).as_tuple()

    def ang(a, b, c):
        return math.acos(max(-1.0, min(1.0, (b * b + c * c - a * a) / (2.0 * b * c))))

    return ang(s1, s2, s3), ang(s2, s3, s1), ang(s3, s1, s2)


def _barycentric_point(t: Triangle, w: tuple[float, float, float]) -> Point:
    total = w[0] + w[1] + w[2]
    scale = max(abs(w[0]), abs(w[1]), abs(w[2]))
    if abs(total) < 1e-14 * scale:
        raise PointAtInfinity(f"barycentric weights sum to zero: {w}")
    p1, p2, p3 = t.v
    x = (w[0] * p1.x + w[1] * p2.x + w[2] * p3.x) / total
    y = (w[0] * p1.y + w[1] * p2.y + w[2] * p3.y) / total
    return Point(x, y)


def trilinear_to_point(t: Triangle, f: TrilinearTriple | tuple[float, float, float]) -> Point:
    """Point whose barycentric weights are (f1 s1, f2 s2, f3 s3)."""
    if isinstance(f, TrilinearTriple):
        f = f.as_tuple()
    s = side_lengths(t).as_tuple()
    return _barycentric_point(t, (f[0] * s[0], f[1] * s[1], f[2] * s[2]))


def medial(t: Triangle) -> Triangle:
    """Triangle of the side midpoints (vertex i maps to the midpoint of the
    side opposite vertex i)."""
    p1, p2, p3 = t.v
    return Triangle((midpoint(p2, p3), midpoint(p1, p3), midpoint(p1, p2)))


def excentral(t: Triangle) -> Triangle:
    """Triangle of the three excenters (barycentrics (-s1 : s2 : s3) cyclic)."""
    s = side_lengths(t).as_tuple()
    ex = []
    for i in range(3):
        w = list(s)
        w[i] = -w[i]
        ex.append(_barycentric_point(t, tuple(w)))
    return Triangle(tuple(ex))


def _require_scalene(s: tuple[float, float, float], what: str) -> None:
    gap = min(abs(s[0] - s[1]), abs(s[1] - s[2]), abs(s[2] - s[0]))
    if gap < ISOSCELES_EPS * (s[0] + s[1] + s[2]):
        raise IsoscelesDegeneracy(f"{what} is ill-conditioned on isosceles input")


def antiorthic_axis_of(t: Triangle) -> Line:
    """Line through the intersections of corresponding reference and
    excentral side lines (the trilinear polar of the incenter)."""
    s = side_lengths(t).as_tuple()
    _require_scalene(s, "antiorthic axis construction")
    exc = excentral(t)
    pts = []
    for i in range(3):
        pts.append(line_intersection(t.side_line(i), exc.side_line(i)))
        if len(pts) == 2:
            break
    return line_through(pts[0], pts[1])


def center(t: Triangle, k: int) -> Point:
    """Cartesian location of a supported triangle center."""
    if k not in SUPPORTED_CENTERS:
        raise UnsupportedCenter(f"center X_{k} is not in the registry {sorted(SUPPORTED_CENTERS)}")
    s = side_lengths(t).as_tuple()

    if k == 1:
        return trilinear_to_point(t, (1.0, 1.0, 1.0))
    if k == 3:
        A, B, C = angles(t)
        return trilinear_to_point(t, (math.cos(A), math.cos(B), math.cos(C)))
    if k == 4:
        # Orthocenter = V1 + V2 + V3 - 2*circumcenter; avoids sec(A) blowing
        # up on right triangles.
        x3 = center(t, 3)
        p1, p2, p3 = t.v
        return Point(p1.x + p2.x + p3.x - 2 * x3.x, p1.y + p2.y + p3.y - 2 * x3.y)
    if k == 5:
        return midpoint(center(t, 3), center(t, 4))
    if k == 6:
        return trilinear_to_point(t, s)
    if k == 7:
        return _barycentric_point(t, (1.0 / (s[1] + s[2] - s[0]),
                                      1.0 / (s[2] + s[0] - s[1]),
                                      1.0 / (s[0] + s[1] - s[2])))
    if k == 9:
        return trilinear_to_point(t, (s[1] + s[2] - s[0],
                                      s[2] + s[0] - s[1],
                                      s[0] + s[1] - s[2]))
    if k == 10:
        return center(medial(t), 1)
    if k == 11:
        A, B, C = angles(t)
        f = (1.0 - math.cos(B - C), 1.0 - math.cos(C - A), 1.0 - math.cos(A - B))
        if max(f) < 1e-13:
            # Numerically equilateral: the triple vanishes identically and
            # the symmetric limit is the centroid like every other center.
            return trilinear_to_point(t, (1.0, 1.0, 1.0))
        return trilinear_to_point(t, f)
    if k == 40:
        x1, x3 = center(t, 1), center(t, 3)
        return Point(2 * x3.x - x1.x, 2 * x3.y - x1.y)
    if k == 100:
        _require_scalene(s, "X_100")
        return trilinear_to_point(t, (1.0 / (s[1] - s[2]),
                                      1.0 / (s[2] - s[0]),
                                      1.0 / (s[0] - s[1])))
    # k == 1155: intersection of line X1-X3 with the antiorthic axis.
    _require_scalene(s, "X_1155")
    return line_intersection(line_through(center(t, 1), center(t, 3)),
                             antiorthic_axis_of(t))

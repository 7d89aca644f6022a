"""Constructors for circumconics and inconics.

Circumconics through three vertices with a prescribed center are solved as
the null space of a 5x6 linear system (three incidences plus two
vanishing-gradient conditions).  Inconics come from the closed-form
coefficients of the origin-centered conic tangent to three given lines.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .centers import side_lengths
from .errors import (
    DegenerateConic,
    NotAHyperbola,
    ParallelTangents,
    PerspectorAtInfinity,
)
from .geom import (
    CanonicalConic,
    ConicMatrix,
    Line,
    Point,
    Triangle,
    canonicalize,
    line_through,
)

BarycentricFn = Callable[[float, float, float], float]


class InconicCoefficientWarning(UserWarning):
    """Closed-form D disagreed with the tangency-solved D; the solved value
    was used."""


@dataclass(frozen=True)
class InconicCoefficients:
    """Origin-centered conic A x^2 + 2B xy + C y^2 + D = 0."""

    A: float
    B: float
    C: float
    D: float

    def __post_init__(self):
        if max(abs(self.A), abs(self.B), abs(self.C)) == 0.0:
            raise ValueError("quadratic part of inconic vanishes")

    def to_conic(self) -> ConicMatrix:
        return ConicMatrix(np.array([[self.A, self.B, 0.0],
                                     [self.B, self.C, 0.0],
                                     [0.0, 0.0, self.D]]))


def _det3(rows: list[list[float]], skip: int) -> float:
    """Signed 3x3 minor of a 3x4 row system with one column removed,
    accumulated with compensated summation."""
    cols = [j for j in range(4) if j != skip]
    (a, b, c), (d, e, f), (g, h, i) = ([row[j] for j in cols] for row in rows)
    return math.fsum([a * e * i, -a * f * h, -b * d * i, b * f * g, c * d * h, -c * e * g])


def _centered_circumconic(t: Triangle, center: Point) -> tuple[float, float, float, float, float]:
    """Coefficients (A, B, C, F) of A u^2 + 2B uv + C v^2 + F = 0 through the
    vertices in the frame translated so the prescribed center is the origin,
    plus the constraint-system condition number.

    Centering first makes the two vanishing-gradient constraints structural
    (no linear terms survive), which shrinks the null-space problem to a
    3x4 system whose null vector is exactly its four signed minors.  That
    route loses far less precision than the raw five-constraint solve when
    the conic passes near a degenerate line pair.
    """
    rows = []
    for p in t.v:
        u, v = p.x - center.x, p.y - center.y
        rows.append([u * u, 2 * u * v, v * v, 1.0])
    sv = np.linalg.svd(np.array(rows), compute_uv=False)
    if sv[-1] < 1e-12 * sv[0]:
        raise DegenerateConic("centered circumconic is not unique for this center")
    cond = float(sv[0] / sv[-1])
    vec = (_det3(rows, 0), -_det3(rows, 1), _det3(rows, 2), -_det3(rows, 3))
    top = max(abs(x) for x in vec)
    if top == 0.0:
        raise DegenerateConic("centered circumconic constraints collapse")
    A, B, C, F = (x / top for x in vec)
    return A, B, C, F, cond


def circumconic_centered(t: Triangle, center: Point) -> ConicMatrix:
    """Unique conic through the three vertices with the given quadratic-form
    center (the null vector of three incidences in the center-origin frame)."""
    A, B, C, F, cond = _centered_circumconic(t, center)
    m0 = np.array([[A, B, 0.0], [B, C, 0.0], [0.0, 0.0, F]])
    shift = np.array([[1.0, 0.0, -center.x],
                      [0.0, 1.0, -center.y],
                      [0.0, 0.0, 1.0]])
    conic = ConicMatrix(shift.T @ m0 @ shift, cond=cond)
    sv = np.linalg.svd(conic.m, compute_uv=False)
    if sv[-1] < 1e-12 * sv[0]:
        raise DegenerateConic("centered circumconic degenerates for this center")
    return conic


def inconic_from_tangents(l1: Line, l2: Line, l3: Line) -> InconicCoefficients:
    """Coefficients of the origin-centered conic tangent to three lines.

    The closed form for D is sign-sensitive to the line normalization, so the
    result is checked against the tangency discriminant
    (AC - B^2) c_i^2 + (A b_i^2 - 2B a_i b_i + C a_i^2) D = 0 and the
    discriminant-solved D is preferred when they disagree.
    """
    a1, b1, c1 = l1.a, l1.b, l1.c
    a2, b2, c2 = l2.a, l2.b, l2.c
    a3, b3, c3 = l3.a, l3.b, l3.c
    d12 = a1 * b2 - a2 * b1
    d13 = a1 * b3 - a3 * b1
    d23 = a2 * b3 - a3 * b2
    if min(abs(d12), abs(d13), abs(d23)) < 1e-12:
        raise ParallelTangents(f"tangent lines are (nearly) parallel: deltas=({d12:.2e}, {d13:.2e}, {d23:.2e})")

    A = a2 * a3 * c1 * c1 * d23 - a1 * a3 * c2 * c2 * d13 + a1 * a2 * c3 * c3 * d12
    B = 0.5 * ((a2 * b3 + a3 * b2) * c1 * c1 * d23
               - (a1 * b3 + a3 * b1) * c2 * c2 * d13
               + (a1 * b2 + a2 * b1) * c3 * c3 * d12)
    C = b2 * b3 * c1 * c1 * d23 - b1 * b3 * c2 * c2 * d13 + b1 * b2 * c3 * c3 * d12
    D = (0.25 / (d12 * d13 * d23)
         * (d23 * c1 + d13 * c2 - d12 * c3)
         * (d23 * c1 - d13 * c2 - d12 * c3)
         * (d23 * c1 - d13 * c2 + d12 * c3)
         * (d23 * c1 + d13 * c2 + d12 * c3))

    det2 = A * C - B * B
    solved = []
    for (a, b, c) in ((a1, b1, c1), (a2, b2, c2), (a3, b3, c3)):
        denom = A * b * b - 2 * B * a * b + C * a * a
        if abs(denom) > 1e-300:
            solved.append(-det2 * c * c / denom)
    d_ref = sorted(solved)[len(solved) // 2]
    if abs(D - d_ref) > 1e-9 * max(abs(D), abs(d_ref)):
        warnings.warn(
            f"closed-form D={D:.6e} disagrees with tangency-solved D={d_ref:.6e}; using the solved value",
            InconicCoefficientWarning,
        )
        D = d_ref
    return InconicCoefficients(A, B, C, D)


def inconic_centered(t: Triangle, center: Point) -> ConicMatrix:
    """Conic with the given center tangent to the three side lines.

    The result is a hyperbola (not an error) when the center falls outside
    the ellipse regions of the medial-line arrangement; classification is
    left to ``canonicalize``.
    """
    shifted = [Point(p.x - center.x, p.y - center.y) for p in t.v]
    lines = [
        line_through(shifted[1], shifted[2]),
        line_through(shifted[0], shifted[2]),
        line_through(shifted[0], shifted[1]),
    ]
    co = inconic_from_tangents(*lines)
    m0 = co.to_conic().m
    # Congruence transform back to the original frame: x -> x - center.
    shift = np.array([[1.0, 0.0, -center.x],
                      [0.0, 1.0, -center.y],
                      [0.0, 0.0, 1.0]])
    return ConicMatrix(shift.T @ m0 @ shift)


def brianchon_point(t: Triangle, g: BarycentricFn) -> Point:
    """Perspector of the inconic selected by the product-form center
    function g.

    Convention: g is evaluated cyclically and the inconic's center is the
    point whose barycentrics are the cyclic *reciprocals* of g, so
    g = s2*s3 selects the incircle (center (s1 : s2 : s3)) and maps to the
    Gergonne point.  The perspector of the inconic centered at barycentrics
    (u1 : u2 : u3) is (1/(u2+u3-u1) : 1/(u3+u1-u2) : 1/(u1+u2-u3)).
    """
    s1, s2, s3 = side_lengths(t).as_tuple()
    gv = (g(s1, s2, s3), g(s2, s3, s1), g(s3, s1, s2))
    if min(abs(x) for x in gv) < 1e-300:
        raise PerspectorAtInfinity(f"center function vanishes: {gv}")
    u = [1.0 / x for x in gv]
    scale = max(abs(x) for x in u)
    w = []
    for i in range(3):
        denom = u[(i + 1) % 3] + u[(i + 2) % 3] - u[i]
        if abs(denom) < 1e-14 * scale:
            raise PerspectorAtInfinity(f"perspector denominator vanishes for coordinate {i + 1}")
        w.append(1.0 / denom)
    total = w[0] + w[1] + w[2]
    if abs(total) < 1e-14 * max(abs(x) for x in w):
        raise PerspectorAtInfinity("perspector weights sum to zero")
    p1, p2, p3 = t.v
    return Point((w[0] * p1.x + w[1] * p2.x + w[2] * p3.x) / total,
                 (w[0] * p1.y + w[1] * p2.y + w[2] * p3.y) / total)


def hyperbola_focal_length(t: Triangle, center: Point) -> float:
    """Distance between the foci (2c) of the centered circumconic, which
    must come out a hyperbola.

    Works on the center-origin coefficients directly: with semi-axes
    a^2 = |F/lam1| and b^2 = |F/lam2|, the focal distance is
    2c = 2 sqrt(|F| (|lam1| + |lam2|) / |lam1 lam2|).
    """
    A, B, C, F, _ = _centered_circumconic(t, center)
    tr = A + C
    disc = math.hypot(A - C, 2.0 * B)
    lam1 = 0.5 * (tr - disc)
    lam2 = 0.5 * (tr + disc)
    if lam1 * lam2 >= 0.0:
        kind = "ellipse" if lam1 * F < 0 else "empty conic"
        raise NotAHyperbola(f"centered circumconic is an {kind}")
    return 2.0 * math.sqrt(abs(F) * (abs(lam1) + abs(lam2)) / abs(lam1 * lam2))


def circumconic_canonical(t: Triangle, center: Point) -> CanonicalConic:
    """Convenience: canonicalized centered circumconic."""
    return canonicalize(circumconic_centered(t, center))


def inconic_canonical(t: Triangle, center: Point) -> CanonicalConic:
    """Convenience: canonicalized centered inconic."""
    return canonicalize(inconic_centered(t, center))

"""The poristic triangle family: a one-parameter family of triangles sharing
a fixed incircle and circumcircle.

Canonical frame (used by every function here): origin at the Bevan point
X40, circumcenter X3 = (d, 0), incenter X1 = (2d, 0), where
d = sqrt(R(R - 2r)) is Euler's distance.  Formulas quoted from other frames
are shifted into this one; each shift is noted where it happens.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import centers as _centers
from . import conics as _conics
from .errors import AxisAtInfinity, InvalidRatio
from .geom import Circle, ConicMatrix, Line, Point, Triangle

# Family members within 1e-6 of t = 0 or t = pi are isosceles enough to make
# the (s_i - s_j) trilinears unusable; sweeps skip them for X100-dependent
# quantities.
ISOSCELES_T_RADIUS = 1e-6


@dataclass(frozen=True)
class PoristicConfig:
    """Fixed circle pair (R, r) with Euler's relation d^2 = R(R - 2r)."""

    R: float
    r: float
    d: float
    rho: float

    def __post_init__(self):
        if not (self.R > 0 and 0 < self.rho <= 0.5):
            raise InvalidRatio(f"rho = {self.rho} outside (0, 1/2]")
        if abs(self.d * self.d - self.R * (self.R - 2 * self.r)) > 1e-14 * self.R * self.R:
            raise InvalidRatio("Euler relation d^2 = R(R - 2r) violated")

    @property
    def circumcircle(self) -> Circle:
        return Circle(Point(self.d, 0.0), self.R)

    @property
    def incircle(self) -> Circle:
        return Circle(Point(2 * self.d, 0.0), self.r)

    @property
    def excentral_circle(self) -> Circle:
        """Locus of the excenters: centered on X40 with radius 2R."""
        return Circle(Point(0.0, 0.0), 2 * self.R)


def config_from_rR(R: float, r: float) -> PoristicConfig:
    if not R > 0:
        raise InvalidRatio(f"R must be positive, got {R}")
    if not 0 < r <= R / 2:
        raise InvalidRatio(f"r = {r} outside (0, R/2] for R = {R}")
    d = math.sqrt(R * (R - 2 * r))
    return PoristicConfig(R, r, d, r / R)


def config_from_rho(rho: float, R: float = 1.0) -> PoristicConfig:
    return config_from_rR(R, rho * R)


@dataclass(frozen=True)
class FamilySample:
    """One family member at parameter t (tangency point on the incircle)."""

    t: float
    triangle: Triangle
    excentral: Triangle
    omega: float
    perimeter: float


def sample(cfg: PoristicConfig, t: float) -> FamilySample:
    """Vertices from the closed-form parametrization.

    The apex-like vertex (the one on the x-axis at t = 0) is stored first so
    the t = 0 sample is isosceles with s2 = s3; the stored order is
    counter-clockwise.
    """
    R, r, d = cfg.R, cfg.r, cfg.d
    ct, st = math.cos(t), math.sin(t)
    w = math.sqrt(R * R - (d * ct + r) ** 2)
    p1 = Point(ct * (d * ct + r) - w * st + d, (d * ct + r) * st + w * ct)
    p2 = Point(ct * (d * ct + r) + w * st + d, (d * ct + r) * st - w * ct)
    den = R * R - 2 * d * R * ct + d * d
    p3 = Point(R * (2 * d * R - (R * R + d * d) * ct) / den + d,
               R * (d * d - R * R) * st / den)
    tri = Triangle((p3, p2, p1))
    exc = _centers.excentral(tri)
    return FamilySample(t, tri, exc, w, tri.perimeter())


def perimeter_closed_form(cfg: PoristicConfig, t: float) -> float:
    R, d = cfg.R, cfg.d
    ct = math.cos(t)
    return ((3 * R * R - 4 * d * R * ct + d * d)
            * math.sqrt(3 * R * R + 2 * d * R * ct - d * d)
            / (R * math.sqrt(R * R - 2 * d * R * ct + d * d)))


def x9_closed_form(cfg: PoristicConfig, t: float) -> Point:
    """Mittenpunkt location; source formula lives in the X3-origin frame and
    is shifted by (+d, 0) into the canonical frame."""
    R, r, d = cfg.R, cfg.r, cfg.d
    ct, st = math.cos(t), math.sin(t)
    x = (d * (4 * d * ct * ct * (R * ct - d) - r * (3 * d * ct + R) - r * r)
         / ((4 * R + r) * (d * ct - R + r)))
    y = (4 * R * d * d * st * (R * R - (2 * R * ct - d) ** 2)
         / ((R * R + d * d - 2 * d * R * ct) * (9 * R * R - d * d)))
    return Point(x + d, y)


def theta_closed_form(cfg: PoristicConfig, t: float) -> float:
    """Angle of the circumbilliard's major axis against the x-axis,
    in (-pi/2, pi/2].

    tan(theta) = -(1 - cos t)(2R cos t + R - d) / ((R + d - 2R cos t) sin t),
    assembled with atan2 so the poles of tan are harmless.  Validated against
    the canonicalized circumbilliard axis over dense sweeps.
    """
    R, d = cfg.R, cfg.d
    ct, st = math.cos(t), math.sin(t)
    th = -math.atan2((1 - ct) * (2 * R * ct + R - d), (R + d - 2 * R * ct) * st)
    if th <= -math.pi / 2:
        th += math.pi
    elif th > math.pi / 2:
        th -= math.pi
    return th


def excentral_side_lines(cfg: PoristicConfig, t: float) -> tuple[Line, Line, Line]:
    """Closed-form side lines of the excentral triangle (the external
    bisectors of the family member at t)."""
    R, r, d = cfg.R, cfg.r, cfg.d
    ct, st = math.cos(t), math.sin(t)
    w = math.sqrt(R * R - (d * ct + r) ** 2)
    l1 = Line((d * st - w) * st - r * ct, -((d * ct + r) * st - w * ct), R * R - d * d)
    l2 = Line((d * st + w) * st - r * ct, -((d * ct + r) * st + w * ct), R * R - d * d)
    l3 = Line(R * ct - d, R * st, -2 * d * R * ct + R * R + d * d)
    return l1, l2, l3


def i3x_implicit_matrix(cfg: PoristicConfig, t: float) -> ConicMatrix:
    """Closed-form quadratic form of the excentral inconic centered on X40.

    Its canonical semi-axes are R + d and R - d for every t; the matrix is
    the independent oracle for the tangent-line construction of the same
    conic.
    """
    R, d = cfg.R, cfg.d
    ct, st = math.cos(t), math.sin(t)
    q = R * R - d * d
    xx = q * q - 8 * d * R * R * (R * ct - d) * st * st
    yy = q * q - 4 * d * R * ct * ((R * ct - d) ** 2 - R * R * st * st)
    xy = 4 * d * R * st * (2 * R * ct - R - d) * (2 * R * ct + R - d)
    const = -q * q * (R * R + d * d - 2 * d * R * ct)
    return ConicMatrix(np.array([[xx, 0.5 * xy, 0.0],
                                 [0.5 * xy, yy, 0.0],
                                 [0.0, 0.0, const]]))


def antiorthic_axis(cfg: PoristicConfig) -> Line:
    """Stationary antiorthic axis: the vertical line
    x = (3R^2 + d^2) / (2d) in the canonical frame (the familiar
    (3R^2 - d^2)/(2d) value is the same line seen from the X3 origin)."""
    R, d = cfg.R, cfg.d
    if d < 1e-12 * R:
        raise AxisAtInfinity("equilateral family: antiorthic axis at infinity")
    return Line(1.0, 0.0, -(3 * R * R + d * d) / (2 * d))


def weaver_circles(cfg: PoristicConfig) -> tuple[Circle, Circle]:
    """The two equal-power circles, both centered at (d - R, 0): the first
    shares its power against the antiorthic axis with the incircle, the
    second with the circumcircle (and with the excentral circle)."""
    R, d = cfg.R, cfg.d
    if d < 1e-12 * R:
        raise AxisAtInfinity("equilateral family: antiorthic axis at infinity")
    center = Point(d - R, 0.0)
    r_inc = ((d + R) / (2 * R)) * math.sqrt((3 * R - d) * (4 * R * R - R * d - d * d) / d)
    r_circ = math.sqrt((3 * R - d) * (d + R) * R / d)
    return Circle(center, r_inc), Circle(center, r_circ)


def mittenpunkt_locus_circle(cfg: PoristicConfig) -> Circle:
    """Circle traced by X9: center (d(3R^2 + d^2)/(9R^2 - d^2) + d, 0),
    radius 4Rd^2/(9R^2 - d^2)."""
    R, d = cfg.R, cfg.d
    if d < 1e-12 * R:
        raise AxisAtInfinity("equilateral family: X9 is stationary")
    den = 9 * R * R - d * d
    return Circle(Point(d * (3 * R * R + d * d) / den + d, 0.0), 4 * R * d * d / den)


#: Named conics of the family.  Suffix "x" means built on the excentral
#: triangle; the center column is the center seen from the reference
#: triangle (X5 of the excentral is X3 of the reference, X6 of the excentral
#: is X9 of the reference, X3 of the excentral is X40).
CONIC_TAGS = ("E1", "E9", "E10", "I9", "E3x", "E5x", "E6x", "I3x", "I5x")

_TAG_TABLE = {
    # tag: (use excentral triangle, circumconic?, reference center id)
    "E1": (False, True, 1),
    "E9": (False, True, 9),
    "E10": (False, True, 10),
    "I9": (False, False, 9),
    "E3x": (True, True, 40),
    "E5x": (True, True, 3),
    "E6x": (True, True, 9),
    "I3x": (True, False, 40),
    "I5x": (True, False, 3),
}


def named_conic(cfg: PoristicConfig, t: float, tag: str,
                s: FamilySample | None = None) -> ConicMatrix:
    """Build one of the family's named conics at parameter t."""
    if tag not in _TAG_TABLE:
        raise KeyError(f"unknown conic tag {tag!r}; valid: {CONIC_TAGS}")
    on_excentral, is_circum, center_id = _TAG_TABLE[tag]
    if s is None:
        s = sample(cfg, t)
    tri = s.excentral if on_excentral else s.triangle
    center = _centers.center(s.triangle, center_id)
    if is_circum:
        return _conics.circumconic_centered(tri, center)
    return _conics.inconic_centered(tri, center)


class FamilyAngleClass(Enum):
    ALL_ACUTE = "all_acute"
    CONTAINS_RIGHT = "contains_right"
    CONTAINS_OBTUSE = "contains_obtuse"


def obtuse_class(cfg: PoristicConfig) -> FamilyAngleClass:
    """Family-level classification: obtuse members exist iff d > r."""
    if abs(cfg.d - cfg.r) <= 1e-12 * cfg.R:
        return FamilyAngleClass.CONTAINS_RIGHT
    if cfg.d < cfg.r:
        return FamilyAngleClass.ALL_ACUTE
    return FamilyAngleClass.CONTAINS_OBTUSE


def is_obtuse(s: FamilySample) -> bool:
    """Largest-angle test by the sign of the vertex dot products."""
    v = s.triangle.v
    for i in range(3):
        a, b, c = v[i], v[(i + 1) % 3], v[(i + 2) % 3]
        if (b.x - a.x) * (c.x - a.x) + (b.y - a.y) * (c.y - a.y) < 0.0:
            return True
    return False

"""Exception types raised by the geometry kernel."""


class GeometryError(Exception):
    """Base class for all kernel errors."""


class DegenerateTriangle(GeometryError):
    """Triangle area is below the scale-free degeneracy threshold."""


class DegenerateConic(GeometryError):
    """Conic matrix has no usable canonical form (rank too low)."""


class NotCentral(GeometryError):
    """Conic is a parabola: the quadratic block is singular but the full
    matrix is not.  Central-conic machinery does not apply."""


class ParallelLines(GeometryError):
    """Two lines do not meet in an affine point."""


class ParallelTangents(GeometryError):
    """Inconic construction received (nearly) parallel tangent lines."""


class UnsupportedCenter(GeometryError):
    """Requested triangle-center index is outside the registry."""


class IsoscelesDegeneracy(GeometryError):
    """Center is ill-conditioned on (near-)isosceles input."""


class PointAtInfinity(GeometryError):
    """Homogeneous coordinates normalize to a direction, not a point."""


class PerspectorAtInfinity(GeometryError):
    """A perspector denominator sum vanished."""


class NotAHyperbola(GeometryError):
    """Focal-length query on a conic that is not a hyperbola."""


class InvalidRatio(GeometryError):
    """Inradius/circumradius pair violates 0 < r <= R/2."""


class AxisAtInfinity(GeometryError):
    """The requested line escapes to infinity in the d -> 0 limit."""


class CircularBilliard(GeometryError):
    """Billiard with equal semi-axes: the confocal caustic formulas degenerate."""


class UnknownQuantity(GeometryError):
    """Sweep quantity name not in the registry."""


class UnknownFigure(GeometryError):
    """Figure id not in the registry."""


class ConfigError(GeometryError):
    """Invalid lab configuration (maps to CLI exit code 2)."""

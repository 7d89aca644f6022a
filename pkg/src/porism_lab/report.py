"""Sweep and verification harness.

``run_verify`` evaluates every family invariant over a dense t-sweep and
reports one verdict row per quantity; ``run_sweep`` dumps raw per-sample
quantities.  A quantity is "invariant" when its relative spread over the
sweep stays below tolerance; residual-style quantities (which should be
numerically zero) pass when their maximum stays below tolerance; a few
quantities (perimeter, billiard-view inradius and circumradius) must be
detected as varying.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import billiard as _billiard
from . import centers as _centers
from . import conics as _conics
from . import poristic as _poristic
from .errors import ConfigError, IsoscelesDegeneracy, ParallelLines, UnknownQuantity
from .geom import (
    CanonicalConic,
    Point,
    Triangle,
    canonicalize,
    conic_eval,
    distance,
    foci,
    line_intersection,
    line_through,
    power_of_point,
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class LabConfig:
    """Configuration for sweeps, verification and figures."""

    R: float = 1.0
    r: float = 0.36266
    t_samples: int = 720
    tolerance: float = 1e-9
    angle_tolerance: float = 1e-8
    seed: int = 0
    output_dir: str = "."
    perturb: float = 0.0  # vertex perturbation injected into one sample

    def validated(self) -> "LabConfig":
        if self.t_samples < 3:
            raise ConfigError(f"t_samples must be >= 3, got {self.t_samples}")
        if not 0 < self.tolerance <= 1e-3:
            raise ConfigError(f"tolerance must be in (0, 1e-3], got {self.tolerance}")
        if not 0 < self.angle_tolerance <= 1e-3:
            raise ConfigError(f"angle tolerance must be in (0, 1e-3], got {self.angle_tolerance}")
        return self

    def poristic(self) -> _poristic.PoristicConfig:
        try:
            return _poristic.config_from_rR(self.R, self.r)
        except Exception as exc:
            raise ConfigError(str(exc)) from exc

    def as_dict(self) -> dict:
        return {
            "R": self.R,
            "r": self.r,
            "t_samples": self.t_samples,
            "tolerance": self.tolerance,
            "angle_tolerance": self.angle_tolerance,
            "seed": self.seed,
            "perturb": self.perturb,
        }


@dataclass
class SweepReport:
    """Aggregate of one swept quantity with its invariance verdict."""

    quantity: str
    samples: int
    min: float
    max: float
    mean: float
    spread_rel: float
    verdict: str            # "invariant" | "varying" | "skipped"
    tolerance: float
    check: str              # "spread" | "residual" | "varying"
    expected: float | None = None
    expected_verdict: str = "invariant"
    status: str = "pass"

    def as_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "samples": self.samples,
            "min": self.min,
            "max": self.max,
            "mean": self.mean,
            "spread_rel": self.spread_rel,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
            "check": self.check,
            "expected": self.expected,
            "expected_verdict": self.expected_verdict,
            "status": self.status,
        }


@dataclass
class VerifyResult:
    config: LabConfig
    reports: list[SweepReport]
    skipped: list[dict]
    max_condition: float
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = all(r.status == "pass" for r in self.reports)

    def as_dict(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "config": self.config.as_dict(),
            "passed": self.passed,
            "max_circumconic_condition": self.max_condition,
            "reports": [r.as_dict() for r in self.reports],
            "skipped": self.skipped,
        }


def _angle_gap(x: float, y: float, period: float) -> float:
    """Circular distance between two axis directions modulo period."""
    g = math.fmod(x - y, period)
    if g > period / 2:
        g -= period
    elif g < -period / 2:
        g += period
    return abs(g)


def _canonical(conic) -> CanonicalConic:
    return canonicalize(conic)


def _measure_sample(cfg: _poristic.PoristicConfig, t: float,
                    sigma: tuple[float, float, float, float],
                    perturb: float = 0.0,
                    want_hyperbolas: bool = True) -> tuple[dict, list, float, np.ndarray]:
    """All per-sample verification quantities.

    Returns (values, skips, max_condition, i5x_matrix); a skipped quantity
    appears in ``skips`` as (name, reason) and is absent from ``values``.
    """
    R, r, d = cfg.R, cfg.r, cfg.d
    s = _poristic.sample(cfg, t)
    if perturb != 0.0:
        v = list(s.triangle.v)
        v[0] = Point(v[0].x + perturb, v[0].y)
        tri = Triangle(tuple(v))
        s = _poristic.FamilySample(t, tri, _centers.excentral(tri), s.omega, tri.perimeter())
    tri = s.triangle
    exc = s.excentral

    values: dict[str, float] = {}
    skips: list[tuple[str, str]] = []
    max_cond = 0.0

    def put(name, val):
        values[name] = float(val)

    # --- Poncelet closure residuals.
    cc, ic = cfg.circumcircle, cfg.incircle
    put("circumcircle_residual",
        max(abs(distance(p, cc.center) - R) for p in tri.v))
    put("incircle_residual",
        max(abs(abs(tri.side_line(i).eval(ic.center)) - r) for i in range(3)))

    # --- Named conics and canonical forms.
    x9 = _centers.center(tri, 9)
    x1 = _centers.center(tri, 1)
    x3 = _centers.center(tri, 3)
    x40 = _centers.center(tri, 40)
    x10 = _centers.center(tri, 10)

    conic_e1 = _conics.circumconic_centered(tri, x1)
    conic_e9 = _conics.circumconic_centered(tri, x9)
    conic_e10 = _conics.circumconic_centered(tri, x10)
    conic_e5x = _conics.circumconic_centered(exc, x3)
    conic_e6x = _conics.circumconic_centered(exc, x9)
    conic_i3x = _conics.inconic_centered(exc, x40)
    conic_i5x = _conics.inconic_centered(exc, x3)
    conic_i9 = _conics.inconic_centered(tri, x9)
    for c in (conic_e1, conic_e9, conic_e10, conic_e5x, conic_e6x):
        if c.cond is not None:
            max_cond = max(max_cond, c.cond)

    can_e1 = _canonical(conic_e1)
    can_e9 = _canonical(conic_e9)
    can_e10 = _canonical(conic_e10)
    can_e5x = _canonical(conic_e5x)
    can_e6x = _canonical(conic_e6x)
    can_i3x = _canonical(conic_i3x)
    can_i5x = _canonical(conic_i5x)
    can_i9 = _canonical(conic_i9)

    put("perimeter", s.perimeter)
    put("omega", s.omega)
    put("x9_x", x9.x)
    put("x9_y", x9.y)
    put("theta", can_e9.angle)

    put("ratio_e1", can_e1.semi_major / can_e1.semi_minor)
    put("ratio_e9", can_e9.semi_major / can_e9.semi_minor)
    put("ratio_e10", can_e10.semi_major / can_e10.semi_minor)
    put("ratio_e5x", can_e5x.semi_major / can_e5x.semi_minor)
    put("ratio_e6x", can_e6x.semi_major / can_e6x.semi_minor)
    put("ratio_i3x", can_i3x.semi_major / can_i3x.semi_minor)
    put("ratio_i5x", can_i5x.semi_major / can_i5x.semi_minor)
    put("ratio_i9", can_i9.semi_major / can_i9.semi_minor)
    put("eta_e1", can_e1.semi_major)
    put("zeta_e1", can_e1.semi_minor)
    put("eta_i3x", can_i3x.semi_major)
    put("zeta_i3x", can_i3x.semi_minor)
    put("eta_i5x", can_i5x.semi_major)
    put("zeta_i5x", can_i5x.semi_minor)
    put("angle_e1", can_e1.angle)
    put("angle_e9", can_e9.angle)
    put("angle_i3x", can_i3x.angle)
    put("angle_e10", can_e10.angle)
    put("angle_e5x", can_e5x.angle)
    put("angle_e6x", can_e6x.angle)

    # --- Stationary excentral caustic.
    put("i5x_center_gap", distance(can_i5x.center, Point(d, 0.0)))
    f1, f2 = foci(can_i5x)
    gap_a = max(distance(f1, Point(0.0, 0.0)), distance(f2, Point(2 * d, 0.0)))
    gap_b = max(distance(f2, Point(0.0, 0.0)), distance(f1, Point(2 * d, 0.0)))
    put("i5x_foci_gap", min(gap_a, gap_b))

    # --- Closed forms vs constructive values.
    put("perimeter_closed_rel_err",
        abs(_poristic.perimeter_closed_form(cfg, t) - s.perimeter) / s.perimeter)
    put("x9_closed_gap", distance(_poristic.x9_closed_form(cfg, t), x9))
    put("theta_closed_gap",
        _angle_gap(_poristic.theta_closed_form(cfg, t), can_e9.angle, math.pi))
    locus = _poristic.mittenpunkt_locus_circle(cfg)
    put("x9_locus_gap", abs(distance(x9, locus.center) - locus.radius))

    # --- Weaver power identities (P0 = antiorthic axis on the x-axis).
    axis = _poristic.antiorthic_axis(cfg)
    p0 = Point(-axis.c / axis.a, 0.0)
    w_inc, w_circ = _poristic.weaver_circles(cfg)
    put("weaver_incircle_power_gap",
        abs(power_of_point(p0, w_inc) - power_of_point(p0, ic)))
    put("weaver_circumcircle_power_gap",
        abs(power_of_point(p0, w_circ) - power_of_point(p0, cc)))
    put("weaver_excentral_power_gap",
        abs(power_of_point(p0, w_circ) - power_of_point(p0, cfg.excentral_circle)))

    # --- Antiorthic axis from side-line intersections (degenerate at
    # t = 0, pi where an external bisector parallels its opposite side).
    pts = []
    for i in range(3):
        try:
            pts.append(line_intersection(tri.side_line(i), exc.side_line(i)))
        except ParallelLines:
            pass
    if len(pts) >= 2:
        put("antiorthic_axis_gap", max(abs(axis.eval(q)) for q in pts))
        constructed = line_through(pts[0], pts[1])
        put("antiorthic_intercept", -constructed.c / constructed.a)
    else:
        skips.append(("antiorthic_axis_gap", "isosceles member: bisector parallel to side"))
        skips.append(("antiorthic_intercept", "isosceles member: bisector parallel to side"))

    # --- Excentral-inconic dual route: tangent-line coefficients vs the
    # implicit closed form.
    lines = _poristic.excentral_side_lines(cfg, t)
    co = _conics.inconic_from_tangents(*lines)
    m_lemma = co.to_conic().m
    m_impl = _poristic.i3x_implicit_matrix(cfg, t).m
    put("i3x_implicit_gap",
        min(np.abs(m_lemma - m_impl).max(), np.abs(m_lemma + m_impl).max()))

    # --- X100 incidences (scalene members only; the family is isosceles at
    # t = 0 and pi, excluded with a fixed parameter radius).
    x100 = None
    if abs(math.remainder(t, math.pi)) < _poristic.ISOSCELES_T_RADIUS:
        for name in ("e1_x100_eval", "e9_x100_eval", "i3x_x100_eval"):
            skips.append((name, "isosceles member: X100 undefined"))
    else:
        try:
            x100 = _centers.center(tri, 100)
            put("e1_x100_eval", abs(conic_eval(conic_e1, x100)))
            put("e9_x100_eval", abs(conic_eval(conic_e9, x100)))
            put("i3x_x100_eval", abs(conic_eval(conic_i3x, x100)))
        except IsoscelesDegeneracy as exc_info:
            for name in ("e1_x100_eval", "e9_x100_eval", "i3x_x100_eval"):
                skips.append((name, str(exc_info)))

    # --- Similarity normalization onto the fixed billiard.
    a9, b9, _c9 = _billiard.cb_axes_normalized(cfg.rho)
    norm_tri = _billiard.normalize_sample(cfg, s)
    put("billiard_ellipse_residual",
        max(abs((p.x / a9) ** 2 + (p.y / b9) ** 2 - 1.0) for p in norm_tri.v))
    put("reflection_law_gap",
        _billiard.reflection_law_residual(norm_tri, a9, b9))
    # Inradius/circumradius of the normalized member, recomputed from its
    # geometry: both vary over the billiard-view family, their ratio does not.
    ns = _centers.side_lengths(norm_tri).as_tuple()
    n_area = norm_tri.signed_area
    r_norm = 2.0 * n_area / (ns[0] + ns[1] + ns[2])
    R_norm = ns[0] * ns[1] * ns[2] / (4.0 * n_area)
    put("r_billiard", r_norm)
    put("R_billiard", R_norm)
    put("rho_billiard", r_norm / R_norm)

    # --- Circumbilliard foci on the predicted circle.
    fc_center, fc_radius = _billiard.foci_locus_check(cfg)
    g1, g2 = foci(can_e9)
    put("cb_foci_circle_gap",
        max(abs(distance(g1, fc_center) - fc_radius),
            abs(distance(g2, fc_center) - fc_radius)))

    # --- Axis relations.
    put("e6x_e9_center_gap", distance(can_e6x.center, can_e9.center))
    put("e6x_e9_axis_gap", _angle_gap(can_e6x.angle, can_e9.angle, math.pi / 2))
    put("e1_i3x_axis_gap",
        abs(_angle_gap(can_e1.angle, can_i3x.angle, math.pi) - math.pi / 2))
    fam = [can_e9.angle, can_e10.angle, can_e5x.angle, can_e6x.angle, can_i3x.angle]
    put("parallel_axes_gap",
        max(_angle_gap(a, b, math.pi / 2) for i, a in enumerate(fam) for b in fam[i + 1:]))

    # --- Focal-length ratio of the two circumhyperbolas.
    if want_hyperbolas:
        if x100 is None:
            skips.append(("gamma_ratio", "isosceles-degenerate X100"))
        else:
            x11 = _centers.center(tri, 11)
            g_feu = _conics.hyperbola_focal_length(tri, x11)
            g_jer = _conics.hyperbola_focal_length(exc, x100)
            put("gamma_feuerbach", g_feu)
            put("gamma_jerabek", g_jer)
            put("gamma_ratio", g_jer / g_feu)

    # --- Similarity equivariance of the center registry (seeded transform).
    ang, scale, tx, ty = sigma
    ca, sa = math.cos(ang), math.sin(ang)

    def apply_sigma(p: Point) -> Point:
        return Point(scale * (ca * p.x - sa * p.y) + tx,
                     scale * (sa * p.x + ca * p.y) + ty)

    tri_sigma = Triangle(tuple(apply_sigma(p) for p in tri.v))
    gap = 0.0
    for k in (1, 9, 10, 11):
        direct = _centers.center(tri_sigma, k)
        mapped = apply_sigma(_centers.center(tri, k))
        gap = max(gap, distance(direct, mapped) / (scale * R))
    put("center_equivariance_gap", gap)

    return values, skips, max_cond, conic_i5x.m


def _row_defs(cfg: _poristic.PoristicConfig, lab: LabConfig) -> list[dict]:
    """Verification rows: (name, check kind, tolerance, expected value)."""
    R, r, d, rho = cfg.R, cfg.r, cfg.d, cfg.rho
    tol = lab.tolerance
    atol = lab.angle_tolerance
    rows: list[dict] = []

    def residual(name, tolerance):
        rows.append({"name": name, "check": "residual", "tol": tolerance})

    def invariant(name, expected=None, tolerance=tol):
        rows.append({"name": name, "check": "spread", "tol": tolerance, "expected": expected})

    def varying(name):
        rows.append({"name": name, "check": "varying", "tol": tol})

    residual("circumcircle_residual", 1e-10)
    residual("incircle_residual", 1e-10)
    residual("i5x_stationarity", 1e-10)
    residual("i5x_center_gap", tol)
    residual("i5x_foci_gap", tol)
    residual("antiorthic_axis_gap", tol)
    residual("weaver_incircle_power_gap", 1e-10)
    residual("weaver_circumcircle_power_gap", 1e-10)
    residual("weaver_excentral_power_gap", 1e-10)
    residual("perimeter_closed_rel_err", 1e-12)
    residual("x9_closed_gap", tol)
    residual("theta_closed_gap", atol)
    residual("x9_locus_gap", tol)
    residual("e1_x100_eval", tol)
    residual("e9_x100_eval", tol)
    residual("i3x_x100_eval", tol)
    residual("i3x_implicit_gap", tol)
    residual("billiard_ellipse_residual", 1e-8)
    residual("reflection_law_gap", atol)
    residual("cb_foci_circle_gap", tol)
    residual("e6x_e9_center_gap", tol)
    residual("e6x_e9_axis_gap", atol)
    residual("e1_i3x_axis_gap", atol)
    residual("parallel_axes_gap", atol)
    residual("center_equivariance_gap", tol)

    ratio_13 = (R + d) / (R - d)
    ratio_sqrt = math.sqrt((R + d) / (R - d))
    invariant("antiorthic_intercept", (3 * R * R + d * d) / (2 * d), tolerance=1e-10)
    invariant("ratio_i5x", 1.0 / math.sqrt(2.0 * rho))
    invariant("eta_i5x", R)
    invariant("zeta_i5x", math.sqrt(R * R - d * d))
    invariant("ratio_i3x", ratio_13)
    invariant("eta_i3x", R + d)
    invariant("zeta_i3x", R - d)
    invariant("ratio_e1", ratio_13)
    invariant("eta_e1", R + d)
    invariant("zeta_e1", R - d)
    invariant("ratio_e10", ratio_sqrt)
    invariant("ratio_e5x", ratio_sqrt)
    invariant("ratio_e6x",
              math.sqrt((R + d) * (3 * R + d) / ((3 * R - d) * (R - d))))
    invariant("ratio_e9",
              math.sqrt((R + d) * (3 * R - d) / ((R - d) * (3 * R + d))))
    invariant("ratio_i9")
    invariant("gamma_ratio", math.sqrt(2.0 / rho), tolerance=1e-7)
    invariant("rho_billiard", rho)

    varying("perimeter")
    varying("r_billiard")
    varying("R_billiard")
    return rows


def _sigma_stream(seed: int, n: int) -> list[tuple[float, float, float, float]]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        out.append((float(rng.uniform(0, 2 * math.pi)),
                    float(rng.uniform(0.5, 2.0)),
                    float(rng.uniform(-3, 3)),
                    float(rng.uniform(-3, 3))))
    return out


def run_verify(lab: LabConfig) -> VerifyResult:
    lab = lab.validated()
    cfg = lab.poristic()
    n = lab.t_samples
    ts = [2 * math.pi * k / n for k in range(n)]
    sigmas = _sigma_stream(lab.seed, n)
    perturb_at = n // 3

    series: dict[str, list[float]] = {}
    skipped: list[dict] = []
    max_cond = 0.0
    i5x_matrices = []
    for idx, t in enumerate(ts):
        eps = lab.perturb if idx == perturb_at else 0.0
        vals, skips, cond, i5x_m = _measure_sample(cfg, t, sigmas[idx], perturb=eps)
        max_cond = max(max_cond, cond)
        for name, val in vals.items():
            series.setdefault(name, []).append(val)
        for name, reason in skips:
            skipped.append({"t": t, "reason": f"{name}: {reason}"})
        i5x_matrices.append(i5x_m)

    # Stationarity of the excentral caustic: max-entry drift of the
    # normalized matrix against the first sample.
    ref = i5x_matrices[0]
    series["i5x_stationarity"] = [
        float(min(np.abs(m - ref).max(), np.abs(m + ref).max())) for m in i5x_matrices
    ]

    reports = []
    for spec in _row_defs(cfg, lab):
        name = spec["name"]
        vals = series.get(name, [])
        reports.append(_aggregate(name, vals, spec))
    return VerifyResult(lab, reports, skipped, max_cond)


def _aggregate(name: str, vals: list[float], spec: dict) -> SweepReport:
    tol = spec["tol"]
    check = spec["check"]
    expected = spec.get("expected")
    if not vals:
        return SweepReport(name, 0, math.nan, math.nan, math.nan, math.nan,
                           "skipped", tol, check, expected,
                           expected_verdict="invariant", status="fail")
    lo, hi = min(vals), max(vals)
    mean = sum(vals) / len(vals)
    spread = (hi - lo) / abs(mean) if mean != 0.0 else math.inf

    if check == "residual":
        worst = max(abs(v) for v in vals)
        verdict = "invariant" if worst < tol else "varying"
        status = "pass" if verdict == "invariant" else "fail"
        return SweepReport(name, len(vals), lo, hi, mean, spread, verdict,
                           tol, check, None, "invariant", status)

    if check == "varying":
        verdict = "invariant" if spread < tol else "varying"
        status = "pass" if verdict == "varying" else "fail"
        return SweepReport(name, len(vals), lo, hi, mean, spread, verdict,
                           tol, check, None, "varying", status)

    if expected is not None:
        # Every sample must sit within tol of the predicted constant; values
        # within tol of one constant have spread at most 2 tol, which is the
        # spread tolerance the verdict uses.
        dev_ok = max(abs(lo - expected), abs(hi - expected)) <= tol * max(1.0, abs(expected))
        verdict = "invariant" if spread < 2 * tol else "varying"
        ok = dev_ok and verdict == "invariant"
    else:
        verdict = "invariant" if spread < tol else "varying"
        ok = verdict == "invariant"
    return SweepReport(name, len(vals), lo, hi, mean, spread, verdict,
                       tol, check, expected, "invariant",
                       "pass" if ok else "fail")


# --- Raw sweeps ------------------------------------------------------------

#: Quantities exposed by ``porism-lab sweep``; all are keys produced by the
#: per-sample measurement pass.
SWEEP_QUANTITIES = (
    "perimeter", "omega", "x9_x", "x9_y", "theta",
    "eta_e1", "zeta_e1", "eta_i3x", "zeta_i3x", "eta_i5x", "zeta_i5x",
    "ratio_e1", "ratio_e9", "ratio_e10", "ratio_e5x", "ratio_e6x",
    "ratio_i3x", "ratio_i5x", "ratio_i9",
    "angle_e1", "angle_e9", "angle_i3x", "angle_e10", "angle_e5x", "angle_e6x",
    "gamma_feuerbach", "gamma_jerabek", "gamma_ratio",
    "antiorthic_intercept",
    "rho_billiard", "r_billiard", "R_billiard",
    "circumcircle_residual", "incircle_residual",
    "billiard_ellipse_residual", "reflection_law_gap",
)


def run_sweep(lab: LabConfig, quantities: list[str]) -> tuple[list[str], list[list], list[dict]]:
    """Per-sample values: returns (header, rows, skip log); a skipped cell
    is None."""
    lab = lab.validated()
    for q in quantities:
        if q not in SWEEP_QUANTITIES:
            raise UnknownQuantity(
                f"unknown quantity {q!r}; valid names: {', '.join(SWEEP_QUANTITIES)}")
    cfg = lab.poristic()
    n = lab.t_samples
    ts = [2 * math.pi * k / n for k in range(n)]
    sigmas = _sigma_stream(lab.seed, n)
    want_hyp = any(q.startswith("gamma") for q in quantities)

    header = ["t"] + list(quantities)
    rows = []
    skip_log: list[dict] = []
    for idx, t in enumerate(ts):
        vals, skips, _, _ = _measure_sample(cfg, t, sigmas[idx], want_hyperbolas=want_hyp)
        row: list = [t]
        skip_reasons = dict((name, reason) for name, reason in skips)
        for q in quantities:
            if q in vals:
                row.append(vals[q])
            else:
                row.append(None)
                skip_log.append({"t": t, "reason": f"{q}: {skip_reasons.get(q, 'not computed')}"})
        rows.append(row)
    return header, rows, skip_log


def format_csv(header: list[str], rows: list[list]) -> str:
    """CSV text with 17 significant digits and empty fields for skips."""
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for v in row:
            cells.append("" if v is None else f"{v:.17g}")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def verify_report_csv(result: VerifyResult) -> str:
    header = ["quantity", "samples", "min", "max", "mean", "spread_rel",
              "tolerance", "check", "expected", "verdict", "expected_verdict", "status"]
    lines = [",".join(header)]
    for r in result.reports:
        cells = [r.quantity, str(r.samples)]
        for v in (r.min, r.max, r.mean, r.spread_rel, r.tolerance):
            cells.append(f"{v:.17g}")
        cells.append(r.check)
        cells.append("" if r.expected is None else f"{r.expected:.17g}")
        cells.extend([r.verdict, r.expected_verdict, r.status])
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def verify_report_json(result: VerifyResult) -> str:
    return json.dumps(result.as_dict(), indent=2) + "\n"

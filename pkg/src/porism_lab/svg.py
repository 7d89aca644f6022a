"""Minimal deterministic SVG 1.1 writer.

Every coordinate is formatted with a fixed number of decimals so identical
scenes serialize to identical bytes; the y-axis is flipped so mathematical
coordinates render upright.
"""

from __future__ import annotations

import math


def _fmt(v: float) -> str:
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return f"{v:.4f}"


class SvgCanvas:
    """Collects shapes in math coordinates, then renders a self-contained
    SVG with a computed viewBox."""

    def __init__(self, scale: float = 120.0, pad: float = 0.35):
        self.scale = scale
        self.pad = pad
        self.elements: list[str] = []
        self._xs: list[float] = []
        self._ys: list[float] = []

    def _see(self, x: float, y: float) -> None:
        self._xs.append(x)
        self._ys.append(y)

    def _pt(self, x: float, y: float) -> tuple[float, float]:
        return x * self.scale, -y * self.scale

    def circle(self, cx, cy, r, stroke="#000000", width=1.5, dash=None, fill="none"):
        for dx, dy in ((-r, -r), (r, r)):
            self._see(cx + dx, cy + dy)
        x, y = self._pt(cx, cy)
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        self.elements.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r * self.scale)}" '
            f'fill="{fill}" stroke="{stroke}" stroke-width="{_fmt(width)}"{dash_attr}/>')

    def polyline(self, pts, stroke="#000000", width=1.5, dash=None, close=False):
        for x, y in pts:
            self._see(x, y)
        coords = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (self._pt(x, y) for x, y in pts))
        tag = "polygon" if close else "polyline"
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        self.elements.append(
            f'<{tag} points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="{_fmt(width)}"{dash_attr}/>')

    def dot(self, x, y, color="#000000", r=3.0):
        self._see(x, y)
        px, py = self._pt(x, y)
        self.elements.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(r)}" fill="{color}"/>')

    def label(self, x, y, text, color="#000000", size=14, dx=6.0, dy=-6.0):
        self._see(x, y)
        px, py = self._pt(x, y)
        self.elements.append(
            f'<text x="{_fmt(px + dx)}" y="{_fmt(py + dy)}" font-size="{size}" '
            f'font-family="sans-serif" fill="{color}">{text}</text>')

    def line(self, x1, y1, x2, y2, stroke="#000000", width=1.0, dash=None):
        self.polyline([(x1, y1), (x2, y2)], stroke=stroke, width=width, dash=dash)

    def render(self, title: str) -> str:
        if not self._xs:
            self._xs, self._ys = [0.0, 1.0], [0.0, 1.0]
        pad = self.pad * self.scale
        x0 = min(self._xs) * self.scale - pad
        x1 = max(self._xs) * self.scale + pad
        y0 = -max(self._ys) * self.scale - pad
        y1 = -min(self._ys) * self.scale + pad
        w, h = x1 - x0, y1 - y0
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}" '
            f'width="{_fmt(w)}" height="{_fmt(h)}">\n'
            f"<title>{title}</title>\n"
            f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_fmt(w)}" height="{_fmt(h)}" fill="#ffffff"/>\n'
        )
        return head + "\n".join(self.elements) + "\n</svg>\n"


def ellipse_polyline(cx: float, cy: float, a: float, b: float, angle: float,
                     n: int = 256) -> list[tuple[float, float]]:
    """Closed sampled outline of a rotated ellipse."""
    ca, sa = math.cos(angle), math.sin(angle)
    pts = []
    for k in range(n + 1):
        ph = 2 * math.pi * k / n
        u, v = a * math.cos(ph), b * math.sin(ph)
        pts.append((cx + ca * u - sa * v, cy + sa * u + ca * v))
    return pts


def hyperbola_polylines(cx: float, cy: float, a: float, b: float, angle: float,
                        reach: float = 2.0, n: int = 256) -> list[list[tuple[float, float]]]:
    """Both branches of a rotated hyperbola, parametrized by cosh/sinh up to
    |u| = reach."""
    ca, sa = math.cos(angle), math.sin(angle)
    branches = []
    for sign in (1.0, -1.0):
        pts = []
        for k in range(n + 1):
            u = -reach + 2 * reach * k / n
            x0, y0 = sign * a * math.cosh(u), b * math.sinh(u)
            pts.append((cx + ca * x0 - sa * y0, cy + sa * x0 + ca * y0))
        branches.append(pts)
    return branches

import math

import numpy as np
import pytest

from porism_lab.geom import Point, Triangle


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def random_triangle(rng, min_angle=0.15) -> Triangle:
    """Well-conditioned random triangle: three points on a random circle with
    pairwise angular separation at least min_angle."""
    while True:
        phis = np.sort(rng.uniform(0, 2 * math.pi, 3))
        gaps = np.diff(np.concatenate([phis, [phis[0] + 2 * math.pi]]))
        if gaps.min() > min_angle and gaps.max() < 2 * math.pi - 2 * min_angle:
            break
    cx, cy = rng.uniform(-5, 5, 2)
    rad = rng.uniform(0.5, 4.0)
    pts = tuple(Point(cx + rad * math.cos(p), cy + rad * math.sin(p)) for p in phis)
    return Triangle(pts)

"""Brute-force reference computations, independent of the library code."""

import math


def bezier(p0, c1, c2, p3, t):
    u = 1 - t
    return tuple(u**3 * a + 3 * u * u * t * b + 3 * u * t * t * c + t**3 * d for a, b, c, d in zip(p0, c1, c2, p3))


def dense_polyline(seg, n=20000):
    return [bezier(seg.p0, seg.c1, seg.c2, seg.p3, i / n) for i in range(n + 1)]


def cumulative(pts):
    out = [0.0]
    for a, b in zip(pts, pts[1:]):
        out.append(out[-1] + math.dist(a, b))
    return out


def speed(seg, t):
    u = 1 - t
    d = [
        3 * u * u * (b - a) + 6 * u * t * (c - b) + 3 * t * t * (e - c)
        for a, b, c, e in zip(seg.p0, seg.c1, seg.c2, seg.p3)
    ]
    return math.hypot(*d)


_GL5 = [
    (0.0, 128 / 225),
    (-math.sqrt(5 - 2 * math.sqrt(10 / 7)) / 3, (322 + 13 * math.sqrt(70)) / 900),
    (math.sqrt(5 - 2 * math.sqrt(10 / 7)) / 3, (322 + 13 * math.sqrt(70)) / 900),
    (-math.sqrt(5 + 2 * math.sqrt(10 / 7)) / 3, (322 - 13 * math.sqrt(70)) / 900),
    (math.sqrt(5 + 2 * math.sqrt(10 / 7)) / 3, (322 - 13 * math.sqrt(70)) / 900),
]


def arc_length(seg, pieces=256):
    """Composite 5-point Gauss-Legendre quadrature of the speed."""
    total = 0.0
    h = 1.0 / pieces
    for k in range(pieces):
        mid = (k + 0.5) * h
        total += sum(w * speed(seg, mid + 0.5 * h * x) for x, w in _GL5) * 0.5 * h
    return total


def arc_fraction_of_point(seg, q, n=4000):
    """Arc-length fraction of the dense sample closest to ``q``, and that distance."""
    pts = dense_polyline(seg, n)
    cum = cumulative(pts)
    i = min(range(len(pts)), key=lambda k: math.dist(pts[k], q))
    return cum[i] / cum[-1], math.dist(pts[i], q)


def point_at_fraction(seg, s, n=4000):
    pts = dense_polyline(seg, n)
    cum = cumulative(pts)
    target = s * cum[-1]
    for k in range(1, len(cum)):
        if cum[k] >= target:
            f = (target - cum[k - 1]) / (cum[k] - cum[k - 1])
            a, b = pts[k - 1], pts[k]
            return (a[0] + f * (b[0] - a[0]), a[1] + f * (b[1] - a[1]))
    return pts[-1]


def triangle_centroid(pts):
    return (sum(p[0] for p in pts) / 3, sum(p[1] for p in pts) / 3)


def max_lateral_deviation(pts, a, b):
    """Largest distance of ``pts`` from the straight line through a and b."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    n = math.hypot(dx, dy)
    return max(abs((p[0] - a[0]) * dy - (p[1] - a[1]) * dx) / n for p in pts)

"""Exact rational geometry kernel.

Points are tuples of ``fractions.Fraction``; every predicate is exact and
deterministic.  No floating point, no tolerances, no rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Point2 = tuple  # (x, y)
Point3 = tuple  # (x, y, z)
Segment3 = tuple  # (Point3, Point3)
Triangle3 = tuple  # (Point3, Point3, Point3)

DISJOINT = "disjoint"
SHARED_ENDPOINT = "shared-endpoint"
IMPROPER = "improper"

_ZERO3 = (0, 0, 0)


def binding_points(n: int, retry: int = 0) -> list:
    """n distinct rational points on the unit circle, angularly ordered by index.

    Point k uses the tangent-half-angle parameter t = k - (n+1)/2 mapped through
    t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)), so all coordinates are rational and the
    angular order equals index order.

    ``retry`` > 0 applies the deterministic escape schedule used when three
    chords meet at one interior point.  The perturbation must be nonlinear in k:
    affine reparametrizations act projectively on the circle and provably leave
    every chord concurrence intact, so a uniform (or linear-in-k) shift can
    never resolve one.  Squared-index weights break all concurrences seen in
    practice; cubed weights are a second independent family for stubborn cases.
    """
    if n < 2:
        raise ValueError(f"need at least 2 binding points, got {n}")
    if retry < 0:
        raise ValueError("retry counter must be nonnegative")
    pts = []
    for k in range(1, n + 1):
        t = Fraction(2 * k - (n + 1), 2)
        if retry:
            weight = k * k if retry <= 32 else k * k * k
            t += Fraction(weight, 100 + retry)
        den = 1 + t * t
        pts.append(((1 - t * t) / den, 2 * t / den))
    return pts


def orient2d(a, b, c) -> int:
    """Sign of the signed area of triangle abc: +1 ccw, -1 cw, 0 collinear."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def _sub3(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot3(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _lerp3(p, q, t):
    return (
        p[0] + t * (q[0] - p[0]),
        p[1] + t * (q[1] - p[1]),
        p[2] + t * (q[2] - p[2]),
    )


def seg3_relation(s1: Segment3, s2: Segment3) -> str:
    """Classify the contact of two 3D segments.

    Returns ``shared-endpoint`` only when the segments meet in exactly one
    point and that point is an endpoint of both; any other contact (interior
    crossing, T-contact, collinear overlap) is ``improper``.
    """
    a, b = s1
    c, d = s2
    if a == b or c == d:
        raise ValueError("degenerate segment")
    w1 = _sub3(b, a)
    w2 = _sub3(d, c)
    r = _sub3(c, a)
    n = _cross3(w1, w2)
    if n != _ZERO3:
        if _dot3(r, n) != 0:
            return DISJOINT  # skew lines
        nn = _dot3(n, n)
        s = _dot3(_cross3(r, w2), n) / nn
        u = _dot3(_cross3(r, w1), n) / nn
        if 0 <= s <= 1 and 0 <= u <= 1:
            if (s == 0 or s == 1) and (u == 0 or u == 1):
                return SHARED_ENDPOINT
            return IMPROPER
        return DISJOINT
    # parallel lines
    if _cross3(r, w1) != _ZERO3:
        return DISJOINT
    # collinear: reduce to 1D parameter overlap along w1
    ww = _dot3(w1, w1)
    tc = _dot3(r, w1) / ww
    td = _dot3(_sub3(d, a), w1) / ww
    lo = max(min(tc, td), Fraction(0))
    hi = min(max(tc, td), Fraction(1))
    if lo > hi:
        return DISJOINT
    if lo == hi:
        # single contact point; on collinear segments it is a boundary point
        # of both parameter intervals, hence an endpoint of both segments
        return SHARED_ENDPOINT
    return IMPROPER


def _drop_axis(normal):
    """Indices of two coordinates giving an exact bijection on the plane."""
    if normal[2] != 0:
        return 0, 1
    if normal[1] != 0:
        return 0, 2
    return 1, 2


def _orient_val(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def seg_triangle_intersection(t: Triangle3, s: Segment3):
    """Exact intersection of a segment with a closed triangle.

    Returns None, ("point", p) or ("segment", p, q).
    """
    a, b, c = t
    nrm = _cross3(_sub3(b, a), _sub3(c, a))
    if nrm == _ZERO3:
        raise ValueError("degenerate triangle")
    p, q = s
    if p == q:
        raise ValueError("degenerate segment")
    h0 = _dot3(nrm, _sub3(p, a))
    h1 = _dot3(nrm, _sub3(q, a))
    if (h0 > 0 and h1 > 0) or (h0 < 0 and h1 < 0):
        return None
    ax = _drop_axis(nrm)
    a2 = (a[ax[0]], a[ax[1]])
    b2 = (b[ax[0]], b[ax[1]])
    c2 = (c[ax[0]], c[ax[1]])
    if _orient_val(a2, b2, c2) < 0:
        b2, c2 = c2, b2
    if h0 == 0 and h1 == 0:
        # coplanar: clip the segment's parameter interval by the three edges
        p2 = (p[ax[0]], p[ax[1]])
        q2 = (q[ax[0]], q[ax[1]])
        lo, hi = Fraction(0), Fraction(1)
        for u, v in ((a2, b2), (b2, c2), (c2, a2)):
            f0 = _orient_val(u, v, p2)
            f1 = _orient_val(u, v, q2)
            if f0 < 0 and f1 < 0:
                return None
            if f0 >= 0 and f1 >= 0:
                continue
            tstar = Fraction(f0, f0 - f1)
            if f0 < 0:
                lo = max(lo, tstar)
            else:
                hi = min(hi, tstar)
            if lo > hi:
                return None
        pl = _lerp3(p, q, lo)
        if lo == hi:
            return ("point", pl)
        return ("segment", pl, _lerp3(p, q, hi))
    tau = Fraction(h0, h0 - h1)
    x = _lerp3(p, q, tau)
    x2 = (x[ax[0]], x[ax[1]])
    if (
        _orient_val(a2, b2, x2) >= 0
        and _orient_val(b2, c2, x2) >= 0
        and _orient_val(c2, a2, x2) >= 0
    ):
        return ("point", x)
    return None


def triangle_pierced(t: Triangle3, s: Segment3, ignore=frozenset()) -> bool:
    """True iff s meets the closed triangle anywhere outside ``ignore``.

    ``ignore`` is a set of exact points (attachment points of the polygon);
    contact at those alone does not count.  Any positive-length contact counts
    regardless of ignore, since a segment minus finitely many points is
    nonempty.
    """
    hit = seg_triangle_intersection(t, s)
    if hit is None:
        return False
    if hit[0] == "point":
        return hit[1] not in ignore
    return True


def point_on_segment3(p: Point3, s: Segment3) -> bool:
    """True iff p lies on the closed segment s (exact)."""
    a, b = s
    w = _sub3(b, a)
    if _cross3(_sub3(p, a), w) != _ZERO3:
        return False
    d = _dot3(_sub3(p, a), w)
    return 0 <= d <= _dot3(w, w)


@dataclass(frozen=True)
class EmbeddingReport:
    """Verdict of polygon_embedded; failures name offending edge index pairs."""

    ok: bool
    failures: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def polygon_embedded(vertices: Sequence) -> EmbeddingReport:
    """Exact embeddedness check for a closed polygon given by its vertex cycle.

    Consecutive edges must meet exactly at their shared vertex; all other pairs
    must be disjoint.  Collinear continuation at a vertex is allowed (it is a
    shared-endpoint contact); doubling back or overlap is not.
    """
    m = len(vertices)
    if m < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got {m}")
    for i in range(m):
        if vertices[i] == vertices[(i + 1) % m]:
            raise ValueError(f"repeated consecutive vertices at index {i}")
    edges = [(vertices[i], vertices[(i + 1) % m]) for i in range(m)]
    failures = []
    for i in range(m):
        for j in range(i + 1, m):
            rel = seg3_relation(edges[i], edges[j])
            consecutive = j == i + 1 or (i == 0 and j == m - 1)
            want = SHARED_ENDPOINT if consecutive else DISJOINT
            if rel != want:
                failures.append((i, j, rel))
    return EmbeddingReport(not failures, tuple(failures))


def seg2_line_intersection(s1, s2) -> Optional[tuple]:
    """Intersection of the supporting lines of two 2D segments.

    Returns (s, u, point) with the point at parameter s along s1 and u along
    s2, or None when the lines are parallel.  Callers check the parameter
    ranges themselves.
    """
    (a, b), (c, d) = s1, s2
    ab = (b[0] - a[0], b[1] - a[1])
    cd = (d[0] - c[0], d[1] - c[1])
    den = ab[0] * cd[1] - ab[1] * cd[0]
    if den == 0:
        return None
    r = (c[0] - a[0], c[1] - a[1])
    s = Fraction(r[0] * cd[1] - r[1] * cd[0], den)
    u = Fraction(r[0] * ab[1] - r[1] * ab[0], den)
    return s, u, (a[0] + s * ab[0], a[1] + s * ab[1])

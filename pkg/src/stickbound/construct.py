"""Building short stick realizations from arc presentations.

The pipeline starts with the 2n-stick realization that places chord i as a
horizontal stick at height i and joins consecutive chords by verticals at the
shared binding points.  Re-lifting the horizontals to carefully chosen integer
heights makes one right triangle per type-II/III chord empty of the rest of
the polygon, so its two legs can be replaced by the hypotenuse (one stick
saved each).  A final certified move replaces the five-stick path through the
top chord by three sticks.  Every replacement is justified by exact
geometric certificates, never by construction alone.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import invariants
from .arcpres import (
    ArcPresentation,
    ChordType,
    chord_walk,
    classify,
    crossing_pairs,
    diagram,
    layout,
    normalize,
    require_valid,
)
from .errors import InternalVerificationError, InvalidArcPresentation
from .geom import (
    Point3,
    _cross3,
    _dot3,
    _sub3,
    polygon_embedded,
    seg2_line_intersection,
    seg_triangle_intersection,
    point_on_segment3,
    triangle_pierced,
)

DEFAULT_MAX_L = 1 << 16

ROLE_H = "horizontal"
ROLE_V = "vertical"
ROLE_HYP = "hypotenuse"
ROLE_EXT = "extension"
ROLE_CONN = "connector"


@dataclass(frozen=True)
class StickKnot:
    """Closed polygon in 3-space: vertex cycle plus a role tag per edge.

    Edge i runs from vertices[i] to vertices[(i+1) % len]; roles[i] names how
    that edge arose (horizontal / vertical / hypotenuse / extension /
    connector).
    """

    vertices: tuple
    roles: tuple

    def edges(self):
        m = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % m]) for i in range(m)]


def stick_count(knot: StickKnot) -> int:
    """Number of maximal straight runs of the polygon (collinear runs merge)."""
    v = knot.vertices
    m = len(v)
    count = 0
    for i in range(m):
        d1 = _sub3(v[i], v[i - 1])
        d2 = _sub3(v[(i + 1) % m], v[i])
        if _cross3(d1, d2) != (0, 0, 0) or _dot3(d1, d2) < 0:
            count += 1
    return count


@dataclass(frozen=True)
class HeightRecord:
    """Why chord i received its height.

    For type-II/III chords: the anchor chord j (the larger smaller-index
    neighbor), the apex binding point shared with it, and the exact crossing
    constraints (k, t_k) that were binding candidates (chords k < i crossing
    chord i at fraction t_k from the apex with z_k > z_j).
    """

    chord: int
    ctype: ChordType
    anchor: Optional[int]
    apex: Optional[int]
    constraints: tuple


@dataclass(frozen=True)
class HeightAssignment:
    z: tuple  # z[i-1] is the height of chord i
    records: tuple


def _anchor_and_apex(ap, uses, i):
    """Anchor chord (largest smaller neighbor) and shared apex point of chord i."""
    best = None
    for p in ap.chords[i - 1]:
        u, v = uses[p]
        j = (v if u == i - 1 else u) + 1
        if j < i and (best is None or j > best[0]):
            best = (j, p)
    return best


def _crossings_by_chord(ap, pts):
    """For each chord i: list of (other chord k, crossing point)."""
    segs = {
        i + 1: (pts[a - 1], pts[b - 1]) for i, (a, b) in enumerate(ap.chords)
    }
    out = {i: [] for i in range(1, ap.n + 1)}
    for i, j in crossing_pairs(ap):
        hit = seg2_line_intersection(segs[i], segs[j])
        if hit is None:
            raise InternalVerificationError("crossing chords turned parallel")
        out[i].append((j, hit[2]))
        out[j].append((i, hit[2]))
    return out, segs


def _fraction_along(seg, point):
    """Parameter t with point = P + t*(Q - P) for point on the segment's line."""
    (p, q) = seg
    if q[0] != p[0]:
        return (point[0] - p[0]) / (q[0] - p[0])
    return (point[1] - p[1]) / (q[1] - p[1])


def _assign_heights(ap: ArcPresentation, pts) -> HeightAssignment:
    types, _ = classify(ap)
    uses = {}
    for idx, (a, b) in enumerate(ap.chords):
        uses.setdefault(a, []).append(idx)
        uses.setdefault(b, []).append(idx)
    crossings, segs = _crossings_by_chord(ap, pts)
    n = ap.n
    z = [0] * (n + 1)
    z[1], z[2] = 1, 2
    records = [HeightRecord(1, types[0], None, None, ())]
    if types[1] is ChordType.I:
        records.append(HeightRecord(2, types[1], None, None, ()))
    else:
        j, p = _anchor_and_apex(ap, uses, 2)
        records.append(HeightRecord(2, types[1], j, p, ()))
    for i in range(3, n + 1):
        if types[i - 1] is ChordType.I:
            z[i] = z[i - 1] + 1
            records.append(HeightRecord(i, types[i - 1], None, None, ()))
            continue
        j, apex = _anchor_and_apex(ap, uses, i)
        a, b = ap.chords[i - 1]
        far = b if apex == a else a
        oriented = (pts[apex - 1], pts[far - 1])
        constraints = []
        worst = None
        for k, point in crossings[i]:
            if k >= i or k == j:
                continue
            if z[k] <= z[j]:
                continue
            t = _fraction_along(oriented, point)
            if not 0 < t < 1:
                raise InternalVerificationError(
                    f"crossing of chords {i},{k} off the open chord"
                )
            constraints.append((k, t))
            val = z[j] + Fraction(z[k] - z[j]) / t
            if worst is None or val > worst:
                worst = val
        cand = z[i - 1] + 1
        if worst is not None:
            cand = max(cand, 1 + math.floor(worst))
        z[i] = cand
        records.append(
            HeightRecord(i, types[i - 1], j, apex, tuple(sorted(constraints)))
        )
    return HeightAssignment(tuple(z[1:]), tuple(records))


def assign_heights(ap: ArcPresentation) -> HeightAssignment:
    """Monotone integer heights making every reduction triangle empty.

    z_1 = 1, z_2 = 2; a type-I chord sits one above its predecessor; a
    type-II/III chord sits high enough that the triangle spanned by its
    horizontal stick and the vertical to its anchor clears every earlier
    horizontal crossing it (strictly below the hypotenuse).
    """
    require_valid(ap)
    if ap.n < 3:
        raise InvalidArcPresentation("height assignment needs at least 3 chords")
    pts, _ = layout(ap)
    return _assign_heights(ap, pts)


def verify_heights(ap: ArcPresentation, ha: HeightAssignment, pts) -> None:
    """Independent exact recheck of the height assignment's guarantees.

    Checks strict monotonicity and, for every type-II/III chord i with anchor
    j and apex P, that every chord k < i crossing chord i at fraction t from P
    satisfies z_k < z_j + t*(z_i - z_j) strictly.  Raises on any violation.
    """
    types, _ = classify(ap)
    z = ha.z
    if list(z) != sorted(set(z)):
        raise InternalVerificationError("heights are not strictly increasing")
    if z[0] != 1 or z[1] != 2:
        raise InternalVerificationError("heights must start 1, 2")
    uses = {}
    for idx, (a, b) in enumerate(ap.chords):
        uses.setdefault(a, []).append(idx)
        uses.setdefault(b, []).append(idx)
    crossings, segs = _crossings_by_chord(ap, pts)
    for i in range(3, ap.n + 1):
        if types[i - 1] is ChordType.I:
            continue
        j, apex = _anchor_and_apex(ap, uses, i)
        rec = ha.records[i - 1]
        if rec.anchor != j or rec.apex != apex:
            raise InternalVerificationError(f"anchor record mismatch at chord {i}")
        a, b = ap.chords[i - 1]
        far = b if apex == a else a
        oriented = (pts[apex - 1], pts[far - 1])
        for k, point in crossings[i]:
            if k >= i:
                continue
            t = _fraction_along(oriented, point)
            if not z[k - 1] < z[j - 1] + t * (z[i - 1] - z[j - 1]):
                raise InternalVerificationError(
                    f"chord {k} touches or pierces the triangle of chord {i}"
                )


def _polygon(ap: ArcPresentation, z, pts) -> StickKnot:
    walk = chord_walk(ap)
    vertices = []
    roles = []
    for c, entry, exit_pt in walk:
        h = z[c]
        pe, px = pts[entry - 1], pts[exit_pt - 1]
        vertices.append((pe[0], pe[1], Fraction(h)))
        roles.append(ROLE_H)
        vertices.append((px[0], px[1], Fraction(h)))
        roles.append(ROLE_V)
    return StickKnot(tuple(vertices), tuple(roles))


def build_k1(ap: ArcPresentation) -> StickKnot:
    """The 2n-stick realization with chord i lifted flat to height i."""
    require_valid(ap)
    pts, _ = layout(ap)
    return _polygon(ap, list(range(1, ap.n + 1)), pts)


def build_k2(ap: ArcPresentation, ha: Optional[HeightAssignment] = None) -> StickKnot:
    """The 2n-stick realization lifted to the reduction-ready heights."""
    require_valid(ap)
    if ap.n < 3:
        raise InvalidArcPresentation("need at least 3 chords")
    pts, _ = layout(ap)
    if ha is None:
        ha = _assign_heights(ap, pts)
    return _polygon(ap, list(ha.z), pts)


@dataclass(frozen=True)
class TriangleInfo:
    chord: int
    anchor: int
    apex: int  # binding point label shared with the anchor
    far: int  # the chord's other binding point label
    triangle: tuple  # (A, B, C) = (apex low corner, right-angle corner, far corner)


def reduction_triangles(ap: ArcPresentation, ha: HeightAssignment, pts) -> list:
    """The right triangle attached to every type-II/III chord (including n)."""
    out = []
    for rec in ha.records:
        if rec.ctype is ChordType.I:
            continue
        i, j = rec.chord, rec.anchor
        a, b = ap.chords[i - 1]
        far = b if rec.apex == a else a
        p, q = pts[rec.apex - 1], pts[far - 1]
        zi, zj = Fraction(ha.z[i - 1]), Fraction(ha.z[j - 1])
        tri = ((p[0], p[1], zj), (p[0], p[1], zi), (q[0], q[1], zi))
        out.append(TriangleInfo(i, j, rec.apex, far, tri))
    return out


def _triangle_clear(knot: StickKnot, info: TriangleInfo):
    """First stick meeting the closed triangle beyond its own legs, if any.

    The two legs (vertical to the anchor, horizontal of the chord) are
    skipped; contact exactly at the lower apex corner or the far corner is
    allowed, since the polygon is attached there.
    """
    a, b, c = info.triangle
    legs = ({a, b}, {b, c})
    allowed = frozenset((a, c))
    for p, q in knot.edges():
        if {p, q} in legs:
            continue
        if triangle_pierced(info.triangle, (p, q), allowed):
            return (p, q)
    return None


def sweep_triangles(knot: StickKnot, triangles) -> list:
    """All (triangle, offending stick) pairs; empty means every triangle clear."""
    bad = []
    for info in triangles:
        hit = _triangle_clear(knot, info)
        if hit is not None:
            bad.append((info, hit))
    return bad


@dataclass(frozen=True)
class ReductionStep:
    chord: int
    anchor: int
    removed_vertex: tuple
    new_edge: tuple


@dataclass
class ReductionTrace:
    ap: ArcPresentation
    ha: HeightAssignment
    pts: list
    steps: tuple = ()


def triangle_reductions(ap: ArcPresentation, k2: StickKnot, ha=None, pts=None):
    """Replace both legs by the hypotenuse for chords 2..n-1 of type II/III.

    Processes chords in increasing order.  Before each replacement the
    triangle is re-verified empty against the current polygon; a pierced
    triangle means the height assignment is broken and raises.
    Returns (knot, trace).
    """
    require_valid(ap)
    if pts is None:
        pts, _ = layout(ap)
    if ha is None:
        ha = _assign_heights(ap, pts)
    knot = k2
    steps = []
    for info in reduction_triangles(ap, ha, pts):
        if info.chord >= ap.n or info.chord < 2:
            continue
        hit = _triangle_clear(knot, info)
        if hit is not None:
            raise InternalVerificationError(
                f"triangle of chord {info.chord} pierced by stick {hit}"
            )
        a, b, c = info.triangle
        verts = list(knot.vertices)
        roles = list(knot.roles)
        idx = verts.index(b)
        m = len(verts)
        prev_v, next_v = verts[idx - 1], verts[(idx + 1) % m]
        if {prev_v, next_v} != {a, c}:
            raise InternalVerificationError(
                f"polygon structure near chord {info.chord} unexpected"
            )
        if idx == 0:
            verts = verts[1:] + verts[:1]
            roles = roles[1:] + roles[:1]
            idx = verts.index(b)
        del verts[idx]
        roles[idx - 1] = ROLE_HYP
        del roles[idx]
        knot = StickKnot(tuple(verts), tuple(roles))
        steps.append(ReductionStep(info.chord, info.anchor, b, (a, c)))
    return knot, ReductionTrace(ap, ha, list(pts), tuple(steps))


def _tri_edges(t):
    return ((t[0], t[1]), (t[1], t[2]), (t[2], t[0]))


def _within_shared(inter, shared) -> bool:
    """Is an exact intersection result contained in the allowed shared simplex?"""
    if inter is None:
        return True
    if not shared:
        return False
    if len(shared) == 1:
        return inter[0] == "point" and inter[1] == shared[0]
    seg = (shared[0], shared[1])
    if inter[0] == "point":
        return point_on_segment3(inter[1], seg)
    return point_on_segment3(inter[1], seg) and point_on_segment3(inter[2], seg)


def _surface_clean(tris, shared_map) -> bool:
    """Pairwise triangle contact limited to the declared shared simplices."""
    for (x, y), shared in shared_map.items():
        tx, ty = tris[x], tris[y]
        for e in _tri_edges(tx):
            if not _within_shared(seg_triangle_intersection(ty, e), shared):
                return False
        for e in _tri_edges(ty):
            if not _within_shared(seg_triangle_intersection(tx, e), shared):
                return False
    return True


def _nondegenerate(tri) -> bool:
    return _cross3(_sub3(tri[1], tri[0]), _sub3(tri[2], tri[0])) != (0, 0, 0)


def top_reduction(knot: StickKnot, trace: ReductionTrace):
    """Replace the five-stick path through the top chord by three sticks.

    The two sticks feeding the top chord's verticals are extended collinearly
    beyond their junctions by L times their own length and joined by one
    connector stick.  L is searched by doubling (4, 8, ..., 2^16 by default;
    env STICKBOUND_MAX_L overrides the cap).  A candidate is accepted only if
    the new polygon is embedded and a triangulated spanning surface between
    the old and new arcs is pierced by no stationary stick; otherwise the move
    is skipped and the polygon returned unchanged.

    Returns (knot, status, L) with status "applied" or "skipped:<reason>".
    """
    n = trace.ap.n
    zn = Fraction(trace.ha.z[n - 1])
    verts = list(knot.vertices)
    roles = list(knot.roles)
    m = len(verts)
    top_idx = None
    for i in range(m):
        if roles[i] == ROLE_H and verts[i][2] == zn and verts[(i + 1) % m][2] == zn:
            top_idx = i
            break
    if top_idx is None:
        raise InternalVerificationError("top horizontal stick not found")
    rot_v = verts[(top_idx - 1) % m :] + verts[: (top_idx - 1) % m]
    rot_r = roles[(top_idx - 1) % m :] + roles[: (top_idx - 1) % m]
    j_a, top_a, top_b, j_b, f_b = rot_v[0], rot_v[1], rot_v[2], rot_v[3], rot_v[4]
    f_a = rot_v[-1]
    if rot_r[0] != ROLE_V or rot_r[2] != ROLE_V:
        raise InternalVerificationError("top chord is not flanked by verticals")
    cap = int(os.environ.get("STICKBOUND_MAX_L", DEFAULT_MAX_L))
    reason = f"no-certified-connector-up-to-L={cap}"
    length = 4
    while length <= cap:
        d_a = _sub3(j_a, f_a)
        d_b = _sub3(j_b, f_b)
        t_a = (j_a[0] + length * d_a[0], j_a[1] + length * d_a[1], j_a[2] + length * d_a[2])
        t_b = (j_b[0] + length * d_b[0], j_b[1] + length * d_b[1], j_b[2] + length * d_b[2])
        cand_v = [t_a, t_b] + rot_v[4:]
        cand_r = [ROLE_CONN, ROLE_EXT] + rot_r[4:-1] + [ROLE_EXT]
        ok, why = _certify_top(
            rot_v, cand_v, j_a, top_a, top_b, j_b, t_a, t_b, f_a, f_b
        )
        if ok:
            return StickKnot(tuple(cand_v), tuple(cand_r)), "applied", length
        reason = why
        length *= 2
    return knot, f"skipped:{reason}", None


def _disk_avoids(tris, rim, sticks):
    """No stationary stick meets any disk triangle illegally.

    A stick may touch a triangle only at a point that is its own endpoint, a
    corner of the triangle, and a rim vertex of the disk (the polygon's
    pinned joints); everywhere else the closed triangles must be clear.
    """
    for e in sticks:
        for tri in tris:
            ig = frozenset(p for p in e if p in tri and p in rim)
            if triangle_pierced(tri, e, ig):
                return False
    return True


def _disk_sound(tris, shared_map) -> bool:
    return all(_nondegenerate(tri) for tri in tris) and _surface_clean(
        tris, shared_map
    )


def _certify_top(rot_v, cand_v, j_a, top_a, top_b, j_b, t_a, t_b, f_a, f_b):
    """Exact certificate for one candidate top reduction.

    Requires the new polygon to be embedded, plus some certified spanning
    disk between the old path (vertical, top stick, vertical) and the new one
    (extension, connector, extension) pierced by nothing stationary.  Four
    disk shapes are tried: the one-step ruled surface with either diagonal of
    its middle quad, and two two-step variants that swing one side at a time
    through a certified-embedded intermediate polygon (these survive the
    configurations where the two extension rays cross in the shadow, since
    the lower extension passes under the other side's swing triangle).
    """
    emb = polygon_embedded(cand_v)
    if not emb.ok:
        return False, f"result-not-embedded:{emb.failures[0]}"
    m = len(rot_v)
    chain = [(rot_v[i], rot_v[i + 1]) for i in range(4, m - 1)]  # f_b .. f_a
    e_a = (f_a, j_a)
    e_b = (j_b, f_b)
    v_a = (j_a, top_a)
    v_b = (top_b, j_b)
    ext_a = (j_a, t_a)
    ext_b = (t_b, j_b)
    s1 = (j_a, top_a, t_a)
    s2 = (j_b, top_b, t_b)
    hex_rim = frozenset((j_a, top_a, top_b, j_b, t_b, t_a))
    one_step_sticks = chain + [e_a, e_b]

    ruled_a = (
        (s1, s2, (top_a, top_b, t_b), (top_a, t_b, t_a)),
        {
            (0, 1): (),
            (0, 2): (top_a,),
            (0, 3): (top_a, t_a),
            (1, 2): (top_b, t_b),
            (1, 3): (t_b,),
            (2, 3): (top_a, t_b),
        },
    )
    ruled_b = (
        (s1, s2, (top_a, top_b, t_a), (top_b, t_b, t_a)),
        {
            (0, 1): (),
            (0, 2): (top_a, t_a),
            (0, 3): (t_a,),
            (1, 2): (top_b,),
            (1, 3): (top_b, t_b),
            (2, 3): (top_b, t_a),
        },
    )
    reason = "no-clean-spanning-disk"
    for tris, shared_map in (ruled_a, ruled_b):
        if not _disk_sound(tris, shared_map):
            reason = "self-intersecting-spanning-surface"
            continue
        if _disk_avoids(tris, hex_rim, one_step_sticks):
            return True, ""
        reason = "stationary-stick-meets-spanning-surface"

    # Two-step variants.  b-first: swing the top stick and vertical b onto
    # T_b, then vertical a and the interim stick onto T_a; a-first mirrors.
    for first in ("b", "a"):
        if first == "b":
            interim = list(rot_v)
            interim[2] = t_b  # path becomes j_a, top_a, t_b, j_b
            disks1 = (
                (s2, (top_a, top_b, t_b)),
                {(0, 1): (top_b, t_b)},
                frozenset((top_a, top_b, j_b, t_b)),
                chain + [e_a, e_b, v_a],
            )
            disks2 = (
                (s1, (top_a, t_b, t_a)),
                {(0, 1): (top_a, t_a)},
                frozenset((j_a, top_a, t_b, t_a)),
                chain + [e_a, e_b, ext_b],
            )
        else:
            interim = list(rot_v)
            interim[1] = t_a  # path becomes j_a, t_a, top_b, j_b
            disks1 = (
                (s1, (top_a, top_b, t_a)),
                {(0, 1): (top_a, t_a)},
                frozenset((j_a, top_a, top_b, t_a)),
                chain + [e_a, e_b, v_b],
            )
            disks2 = (
                (s2, (top_b, t_b, t_a)),
                {(0, 1): (top_b, t_b)},
                frozenset((top_b, j_b, t_b, t_a)),
                chain + [e_a, e_b, ext_a],
            )
        if not polygon_embedded(interim).ok:
            reason = "interim-polygon-not-embedded"
            continue
        good = True
        for tris, shared_map, rim, sticks in (disks1, disks2):
            if not _disk_sound(tris, shared_map):
                reason = "self-intersecting-spanning-surface"
                good = False
                break
            if not _disk_avoids(tris, rim, sticks):
                reason = "stationary-stick-meets-spanning-surface"
                good = False
                break
        if good:
            return True, ""
    return False, reason


@dataclass(frozen=True)
class Certificate:
    """Machine-checked record of one full build."""

    n: int
    shift: int
    beta: tuple
    heights: tuple
    layout_retry: int
    sticks_k1: int
    sticks_k2: int
    sticks_final: int
    reduced_chords: tuple
    top_reduction: str
    top_length: Optional[int]
    bound: Fraction
    bound_satisfied: bool
    embedded_k2: bool
    embedded_final: bool
    invariants_match: Optional[bool]
    determinant: Optional[int]
    determinant_out: Optional[int]
    alexander_in: str
    alexander_out: str


def build_full(ap: ArcPresentation, top: bool = True, check_invariants: bool = True):
    """Normalize, lift, reduce, certify; returns (StickKnot, Certificate).

    The invariant check compares the exact diagram of the input presentation
    with a generic projection of the output polygon (determinant and
    normalized Alexander polynomial); a mismatch is reported, not repaired.
    """
    require_valid(ap)
    if ap.n < 3:
        raise InvalidArcPresentation("full build needs at least 3 chords")
    norm, shift = normalize(ap)
    pts, retry = layout(norm)
    ha = _assign_heights(norm, pts)
    verify_heights(norm, ha, pts)
    _, beta = classify(norm)
    n = norm.n
    k2 = _polygon(norm, list(ha.z), pts)
    emb2 = polygon_embedded(k2.vertices)
    if not emb2.ok:
        raise InternalVerificationError(f"lifted polygon not embedded: {emb2.failures}")
    bad = sweep_triangles(k2, reduction_triangles(norm, ha, pts))
    if bad:
        info, hit = bad[0]
        raise InternalVerificationError(
            f"triangle of chord {info.chord} not empty in lifted polygon: {hit}"
        )
    reduced, trace = triangle_reductions(norm, k2, ha, pts)
    expected_reduced = 2 * n - (beta.beta2 + beta.beta3 - 1)
    if len(reduced.vertices) != expected_reduced:
        raise InternalVerificationError(
            f"reduction accounting: {len(reduced.vertices)} != {expected_reduced}"
        )
    if top:
        final, status, top_len = top_reduction(reduced, trace)
    else:
        final, status, top_len = reduced, "skipped:disabled", None
    embf = polygon_embedded(final.vertices)
    if not embf.ok:
        raise InternalVerificationError(f"final polygon not embedded: {embf.failures}")
    sticks = stick_count(final)
    expected = n + beta.beta1 - 1 if status == "applied" else n + beta.beta1 + 1
    if sticks != expected:
        raise InternalVerificationError(
            f"stick accounting: counted {sticks}, expected {expected}"
        )
    bound = Fraction(3 * (n - 1), 2)
    cert_inv = (None, None, None, "", "")
    if check_invariants:
        d_in = diagram(ap)
        d_out = invariants.project(final)
        rep = invariants.match(d_in, d_out)
        cert_inv = (rep.ok, rep.det1, rep.det2, str(rep.alex1), str(rep.alex2))
    cert = Certificate(
        n=n,
        shift=shift,
        beta=beta.as_tuple(),
        heights=ha.z,
        layout_retry=retry,
        sticks_k1=2 * n,
        sticks_k2=len(k2.vertices),
        sticks_final=sticks,
        reduced_chords=tuple(s.chord for s in trace.steps),
        top_reduction=status,
        top_length=top_len,
        bound=bound,
        bound_satisfied=sticks <= bound,
        embedded_k2=emb2.ok,
        embedded_final=embf.ok,
        invariants_match=cert_inv[0],
        determinant=cert_inv[1],
        determinant_out=cert_inv[2],
        alexander_in=cert_inv[3],
        alexander_out=cert_inv[4],
    )
    return final, cert


def polygon_json(cert: Certificate, knot: StickKnot) -> dict:
    """The documented JSON shape for one build result."""
    return {
        "n": cert.n,
        "shift": cert.shift,
        "beta": list(cert.beta),
        "sticks": cert.sticks_final,
        "bound_num": "3(n-1)",
        "bound": str(cert.bound),
        "bound_satisfied": cert.bound_satisfied,
        "top_reduction": cert.top_reduction,
        "vertices": [[str(c) for c in v] for v in knot.vertices],
        "edge_roles": list(knot.roles),
        "invariants_match": cert.invariants_match,
        "determinant": cert.determinant,
    }


def knot_from_json(d: dict) -> StickKnot:
    verts = tuple(tuple(Fraction(c) for c in v) for v in d["vertices"])
    roles = tuple(d.get("edge_roles", ["?"] * len(verts)))
    return StickKnot(verts, roles)


def obj_export(knot: StickKnot) -> str:
    """Wavefront OBJ polyline (12 significant digits, presentation only)."""
    lines = []
    for v in knot.vertices:
        lines.append("v " + " ".join(f"{float(c):.12g}" for c in v))
    m = len(knot.vertices)
    lines.append("l " + " ".join(str(i) for i in range(1, m + 1)) + " 1")
    return "\n".join(lines) + "\n"

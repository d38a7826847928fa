"""Arc presentations of knots.

An arc presentation with n chords places n binding points on the unit circle
and joins them by n straight chords, each binding point shared by exactly two
chords, so that the chords close up into a single cycle.  Chord index doubles
as height: at every crossing the chord with the smaller index passes under.

This module owns the combinatorics (validation, crossing pairs, chord types),
the moves (cyclic shift, top destabilization), the text format, random
generation, and the exact planar diagram of a presentation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import InternalVerificationError, InvalidArcPresentation
from .geom import binding_points, orient2d, seg2_line_intersection

MAX_LAYOUT_RETRIES = 64


@dataclass(frozen=True)
class ArcPresentation:
    """n chords as unordered label pairs; chords[i] is the chord of index i+1."""

    chords: tuple

    def __post_init__(self):
        norm = tuple(tuple(sorted(pair)) for pair in self.chords)
        object.__setattr__(self, "chords", norm)

    @property
    def n(self) -> int:
        return len(self.chords)


class ChordType(Enum):
    I = "I"  # both neighbor chords have greater index
    II = "II"  # one greater, one smaller
    III = "III"  # both smaller


@dataclass(frozen=True)
class BetaCounts:
    beta1: int
    beta2: int
    beta3: int

    def as_tuple(self):
        return (self.beta1, self.beta2, self.beta3)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    errors: tuple = ()

    def __bool__(self):
        return self.ok


def validate(ap: ArcPresentation) -> ValidationReport:
    """Structural validity: label use, nondegenerate chords, single cycle."""
    errors = []
    n = ap.n
    if n < 2:
        return ValidationReport(False, (f"need at least 2 chords, got {n}",))
    for idx, (a, b) in enumerate(ap.chords, start=1):
        if not (1 <= a <= n and 1 <= b <= n):
            errors.append(f"chord {idx} uses label outside 1..{n}: {{{a},{b}}}")
        if a == b:
            errors.append(f"chord {idx} is degenerate: both endpoints at {a}")
    if errors:
        return ValidationReport(False, tuple(errors))
    uses = {p: [] for p in range(1, n + 1)}
    for idx, (a, b) in enumerate(ap.chords):
        uses[a].append(idx)
        uses[b].append(idx)
    for p in range(1, n + 1):
        if len(uses[p]) != 2:
            errors.append(f"binding point {p} used {len(uses[p])} times, expected 2")
    if errors:
        return ValidationReport(False, tuple(errors))
    # walk the chord-adjacency multigraph; valid iff one cycle through all n
    cur, entry = 0, ap.chords[0][0]
    steps = 0
    while True:
        a, b = ap.chords[cur]
        exit_pt = b if entry == a else a
        u, v = uses[exit_pt]
        cur, entry = (v if u == cur else u), exit_pt
        steps += 1
        if cur == 0:
            break
        if steps > n:
            break
    if steps != n:
        errors.append(
            f"chord-adjacency graph is not a single {n}-cycle (closed after {steps})"
        )
    return ValidationReport(not errors, tuple(errors))


def require_valid(ap: ArcPresentation) -> None:
    rep = validate(ap)
    if not rep.ok:
        raise InvalidArcPresentation("; ".join(rep.errors))


def _point_uses(ap):
    uses = {}
    for idx, (a, b) in enumerate(ap.chords):
        uses.setdefault(a, []).append(idx)
        uses.setdefault(b, []).append(idx)
    return uses


def neighbors(ap: ArcPresentation, i: int) -> tuple:
    """1-based indices of the two chords adjacent to chord i (1-based)."""
    uses = _point_uses(ap)
    a, b = ap.chords[i - 1]
    out = []
    for p in (a, b):
        u, v = uses[p]
        out.append((v if u == i - 1 else u) + 1)
    return tuple(out)


def crossing_pairs(ap: ArcPresentation) -> list:
    """Sorted list of 1-based chord index pairs whose endpoints interleave."""
    require_valid(ap)
    n = ap.n
    out = []
    for i in range(n):
        a, b = ap.chords[i]  # a < b
        for j in range(i + 1, n):
            c, d = ap.chords[j]
            if a in (c, d) or b in (c, d):
                continue
            if (a < c < b) != (a < d < b):
                out.append((i + 1, j + 1))
    return out


def classify(ap: ArcPresentation):
    """Per-chord types and the (beta1, beta2, beta3) census; needs n >= 3."""
    require_valid(ap)
    if ap.n < 3:
        raise InvalidArcPresentation("chord types need at least 3 chords")
    uses = _point_uses(ap)
    types = []
    for i in range(1, ap.n + 1):
        nb = []
        for p in ap.chords[i - 1]:
            u, v = uses[p]
            nb.append((v if u == i - 1 else u) + 1)
        lesser = sum(1 for j in nb if j < i)
        types.append((ChordType.I, ChordType.II, ChordType.III)[lesser])
    beta = BetaCounts(
        sum(1 for t in types if t is ChordType.I),
        sum(1 for t in types if t is ChordType.II),
        sum(1 for t in types if t is ChordType.III),
    )
    return tuple(types), beta


def cyclic_shift(ap: ArcPresentation, k: int) -> ArcPresentation:
    """Relabel chord indices so that old chord 1+k becomes new chord 1."""
    n = ap.n
    k %= n
    return ArcPresentation(tuple(ap.chords[(i + k) % n] for i in range(n)))


def normalize(ap: ArcPresentation):
    """Cyclic shift minimizing beta1; ties broken by smallest shift k >= 0."""
    require_valid(ap)
    if ap.n < 3:
        raise InvalidArcPresentation("normalization needs at least 3 chords")
    best = None
    for k in range(ap.n):
        cand = cyclic_shift(ap, k)
        _, beta = classify(cand)
        key = (beta.beta1, k)
        if best is None or key < best[0]:
            best = (key, cand)
    (b1, k), cand = best
    return cand, k


def destabilize_top(ap: ArcPresentation) -> Optional[ArcPresentation]:
    """Merge chords n-1 and n into one top chord when chord n-1 is type II.

    Returns the destabilized presentation (n-1 chords, binding points
    relabeled to stay 1..n-1 in circular order), or None when the move does
    not apply or would create a degenerate chord.
    """
    require_valid(ap)
    n = ap.n
    if n < 3:
        raise InvalidArcPresentation("destabilization needs at least 3 chords")
    types, _ = classify(ap)
    if types[n - 2] is not ChordType.II:
        return None
    top = set(ap.chords[n - 1])
    sub = set(ap.chords[n - 2])
    shared = top & sub
    if len(shared) != 1:
        return None  # doubled pair: merging would close a 2-cycle on itself
    s = shared.pop()
    p = (sub - {s}).pop()
    q = (top - {s}).pop()
    if p == q:
        return None

    def relabel(x):
        return x - 1 if x > s else x

    chords = [tuple(sorted((relabel(a), relabel(b)))) for a, b in ap.chords[: n - 2]]
    chords.append(tuple(sorted((relabel(p), relabel(q)))))
    return ArcPresentation(tuple(chords))


def simplify(ap: ArcPresentation):
    """Destabilize from the top until no merge applies; returns (ap, steps)."""
    steps = 0
    while ap.n >= 3:
        nxt = destabilize_top(ap)
        if nxt is None:
            break
        ap = nxt
        steps += 1
    return ap, steps


def chord_walk(ap: ArcPresentation) -> list:
    """Traversal of the chord cycle as (chord index 0-based, entry, exit).

    Starts at chord 1 entering through its smaller-labeled binding point; each
    subsequent chord is entered through the point it shares with the previous
    one.  The exit of the last chord is the entry of the first.
    """
    require_valid(ap)
    uses = _point_uses(ap)
    walk = []
    cur, entry = 0, ap.chords[0][0]
    for _ in range(ap.n):
        a, b = ap.chords[cur]
        exit_pt = b if entry == a else a
        walk.append((cur, entry, exit_pt))
        u, v = uses[exit_pt]
        cur, entry = (v if u == cur else u), exit_pt
    if (cur, entry) != (0, ap.chords[0][0]):
        raise InternalVerificationError("chord walk did not close")
    return walk


def layout(ap: ArcPresentation):
    """Generic circle layout for ap: binding points with no chord concurrence.

    Tries the canonical layout first, then the deterministic perturbation
    schedule, and fails loudly if 64 retries cannot separate a concurrence.
    """
    require_valid(ap)
    pairs = crossing_pairs(ap)
    for retry in range(MAX_LAYOUT_RETRIES + 1):
        pts = binding_points(ap.n, retry)
        seen = {}
        ok = True
        for i, j in pairs:
            seg_i = (pts[ap.chords[i - 1][0] - 1], pts[ap.chords[i - 1][1] - 1])
            seg_j = (pts[ap.chords[j - 1][0] - 1], pts[ap.chords[j - 1][1] - 1])
            hit = seg2_line_intersection(seg_i, seg_j)
            if hit is None:
                ok = False  # crossing chords turned parallel: not generic
                break
            _, _, point = hit
            if point in seen:
                ok = False
                break
            seen[point] = (i, j)
        if ok:
            return pts, retry
    raise InternalVerificationError(
        f"no generic layout within {MAX_LAYOUT_RETRIES} perturbation retries"
    )


@dataclass(frozen=True)
class Crossing:
    """One transversal crossing of a planar diagram.

    ``over``/``under`` index the two strands (1-based chords for diagrams of
    arc presentations, 0-based polygon edges for projections); ``sign`` is the
    orientation sign of (over direction, under direction); ``point`` is the
    exact 2D crossing point; the params locate it along each oriented strand.
    """

    over: int
    under: int
    sign: int
    point: tuple
    param_over: Fraction
    param_under: Fraction


@dataclass(frozen=True)
class Diagram:
    """Planar knot diagram: crossings plus the cyclic Gauss traversal.

    ``gauss`` lists (crossing id, is_over) in traversal order; ``arcs`` gives
    the over-arc id at each traversal position (an arc ends just after each
    under visit).
    """

    crossings: tuple
    gauss: tuple
    arcs: tuple = field(default=())

    def __post_init__(self):
        n_under = sum(1 for _, over in self.gauss if not over)
        if len(self.gauss) != 2 * len(self.crossings) or n_under != len(self.crossings):
            raise InvalidArcPresentation(
                "gauss sequence must visit every crossing once over, once under"
            )
        if not self.arcs:
            object.__setattr__(self, "arcs", _arc_ids(self.gauss))


def _arc_ids(gauss) -> tuple:
    c = sum(1 for _, over in gauss if not over)
    if c == 0:
        return ()
    ids = []
    a = 0
    for _, over in gauss:
        ids.append(a % c)
        if not over:
            a += 1
    return tuple(ids)


def diagram(ap: ArcPresentation) -> Diagram:
    """Exact planar diagram of ap; the smaller chord index goes under."""
    pts, _ = layout(ap)
    walk = chord_walk(ap)
    oriented = {}
    for cur, entry, exit_pt in walk:
        oriented[cur + 1] = (pts[entry - 1], pts[exit_pt - 1])
    crossings = []
    for i, j in crossing_pairs(ap):
        si, sj = oriented[i], oriented[j]
        s, u, point = seg2_line_intersection(si, sj)
        if not (0 < s < 1 and 0 < u < 1):
            raise InternalVerificationError(
                f"interleaved chords {i},{j} failed to cross properly"
            )
        d_over = (sj[1][0] - sj[0][0], sj[1][1] - sj[0][1])
        d_under = (si[1][0] - si[0][0], si[1][1] - si[0][1])
        sign = orient2d((0, 0), d_over, d_under)
        crossings.append(
            Crossing(
                over=j, under=i, sign=sign, point=point, param_over=u, param_under=s
            )
        )
    by_chord = {}
    for cid, c in enumerate(crossings):
        by_chord.setdefault(c.under, []).append((c.param_under, cid, False))
        by_chord.setdefault(c.over, []).append((c.param_over, cid, True))
    gauss = []
    for cur, _, _ in walk:
        for _, cid, is_over in sorted(by_chord.get(cur + 1, [])):
            gauss.append((cid, is_over))
    return Diagram(tuple(crossings), tuple(gauss))


def random_presentation(n: int, seed: int) -> ArcPresentation:
    """Uniform-over-retries random valid presentation with n chords.

    Shuffles the multiset of binding-point slots (each point twice) into n
    chords and rejects until the single-cycle invariant holds.  Deterministic
    for fixed (n, seed).
    """
    if n < 2:
        raise InvalidArcPresentation(f"need n >= 2, got {n}")
    rng = random.Random(seed)
    slots = [p for p in range(1, n + 1) for _ in range(2)]
    for _ in range(1_000_000):
        rng.shuffle(slots)
        ap = ArcPresentation(tuple((slots[2 * i], slots[2 * i + 1]) for i in range(n)))
        if validate(ap).ok:
            return ap
    raise InternalVerificationError(f"rejection sampling stalled for n={n}")


def parse(text: str) -> ArcPresentation:
    """Parse the chord-list text format.

    Lines starting with '#' and blank lines are skipped.  The first data line
    is n; exactly n lines "a b" follow, chord index given by order (1 = lowest,
    always under).  Raises InvalidArcPresentation with a line number on any
    malformed input.
    """
    n = None
    chords = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise InvalidArcPresentation(
                    f"expected chord count on first data line (line {lineno})"
                )
            try:
                n = int(tokens[0])
            except ValueError:
                raise InvalidArcPresentation(
                    f"chord count is not an integer: {tokens[0]!r} (line {lineno})"
                ) from None
            if n < 2:
                raise InvalidArcPresentation(f"need at least 2 chords (line {lineno})")
            continue
        if len(chords) == n:
            raise InvalidArcPresentation(
                f"expected {n} chords, found extra data (line {lineno})"
            )
        if len(tokens) != 2:
            raise InvalidArcPresentation(
                f"malformed chord line, expected 'a b' (line {lineno})"
            )
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InvalidArcPresentation(
                f"chord labels are not integers (line {lineno})"
            ) from None
        if not (1 <= a <= n and 1 <= b <= n):
            raise InvalidArcPresentation(
                f"label outside 1..{n} on line {lineno}: {a} {b}"
            )
        chords.append((a, b))
    if n is None:
        raise InvalidArcPresentation("empty input: no chord count found")
    if len(chords) != n:
        raise InvalidArcPresentation(
            f"expected {n} chords, got {len(chords)} (line {lineno + 1})"
        )
    return ArcPresentation(tuple(chords))


def serialize(ap: ArcPresentation) -> str:
    """Canonical text: chord count, then one 'a b' line per chord (a < b)."""
    lines = [str(ap.n)]
    lines.extend(f"{a} {b}" for a, b in ap.chords)
    return "\n".join(lines) + "\n"

"""Lift, reduce, certify: the geometric pipeline from chords to few sticks."""

import dataclasses
import json
from fractions import Fraction

import pytest

from stickbound.arcpres import classify, layout, normalize, random_presentation
from stickbound.construct import (
    StickKnot,
    assign_heights,
    build_full,
    build_k1,
    build_k2,
    knot_from_json,
    obj_export,
    polygon_json,
    reduction_triangles,
    stick_count,
    top_reduction,
    triangle_reductions,
    verify_heights,
)
from stickbound.errors import InternalVerificationError, InvalidArcPresentation
from stickbound.geom import polygon_embedded


def test_assign_heights_constraints(ap5):
    ha = assign_heights(ap5)
    z = ha.z
    assert len(z) == ap5.n
    assert z[0] == 1 and z[1] == 2
    assert all(z[i] < z[i + 1] for i in range(len(z) - 1))
    pts, _ = layout(ap5)
    verify_heights(ap5, ha, pts)  # independent recheck must accept


def test_verify_heights_rejects_nonmonotone(ap5):
    ha = assign_heights(ap5)
    pts, _ = layout(ap5)
    bad = dataclasses.replace(ha, z=ha.z[:-1] + (ha.z[-2],))
    with pytest.raises(InternalVerificationError):
        verify_heights(ap5, bad, pts)


def test_verify_heights_rejects_squashed_clearance(ap5):
    # chord 4 must clear the chords crossing it; pulling it down to the bare
    # monotone minimum has to be caught by the visibility recheck
    ha = assign_heights(ap5)
    pts, _ = layout(ap5)
    z = list(ha.z)
    assert z[3] > z[2] + 1, "fixture should actually need clearance"
    z[3] = z[2] + 1
    with pytest.raises(InternalVerificationError):
        verify_heights(ap5, dataclasses.replace(ha, z=tuple(z)), pts)


def test_build_k1_counts_and_embedding():
    for seed in (0, 5, 11):
        n = 4 + seed % 7
        ap = random_presentation(n, seed)
        k1 = build_k1(ap)
        assert len(k1.vertices) == 2 * n
        assert stick_count(k1) == 2 * n
        assert polygon_embedded(k1.vertices).ok
        assert set(k1.roles) == {"horizontal", "vertical"}


def test_build_k2_keeps_count(ap5):
    k2 = build_k2(ap5)
    assert stick_count(k2) == 2 * ap5.n
    assert polygon_embedded(k2.vertices).ok


def test_reduction_triangle_shape(ap5):
    ha = assign_heights(ap5)
    pts, _ = layout(ap5)
    infos = reduction_triangles(ap5, ha, pts)
    assert infos, "trefoil has type II/III chords"
    for info in infos:
        a, b, c = info.triangle
        assert a[0] == b[0] and a[1] == b[1]  # vertical leg over the apex
        assert b[2] == c[2]  # horizontal leg at the lifted height
        assert a[2] == ha.z[info.anchor - 1]
        assert b[2] == ha.z[info.chord - 1]


def test_triangle_reductions_accounting():
    for seed in (3, 8, 21):
        n = 5 + seed % 6
        ap, _ = normalize(random_presentation(n, seed))
        _, beta = classify(ap)
        k2 = build_k2(ap)
        reduced, trace = triangle_reductions(ap, k2)
        assert stick_count(reduced) == 2 * n - (beta.beta2 + beta.beta3 - 1)
        assert polygon_embedded(reduced.vertices).ok
        assert len(trace.steps) == beta.beta2 + beta.beta3 - 1
        assert reduced.roles.count("hypotenuse") == len(trace.steps)
        chords = [s.chord for s in trace.steps]
        assert chords == sorted(chords)
        assert all(2 <= c <= n - 1 for c in chords)


def test_top_reduction_trefoil(ap5):
    ap, _ = normalize(ap5)
    k2 = build_k2(ap)
    reduced, trace = triangle_reductions(ap, k2)
    final, status, length = top_reduction(reduced, trace)
    assert status == "applied"
    assert length >= 4
    assert stick_count(final) == 6
    assert final.roles.count("connector") == 1
    assert final.roles.count("extension") == 2
    assert polygon_embedded(final.vertices).ok


def test_top_reduction_respects_length_cap(ap5, monkeypatch):
    monkeypatch.setenv("STICKBOUND_MAX_L", "2")
    ap, _ = normalize(ap5)
    k2 = build_k2(ap)
    reduced, trace = triangle_reductions(ap, k2)
    final, status, length = top_reduction(reduced, trace)
    assert status == "skipped:no-certified-connector-up-to-L=2"
    assert length is None
    assert final is reduced


def test_build_full_trefoil_certificate(ap5):
    knot, cert = build_full(ap5)
    assert cert.n == 5
    assert cert.beta == (2, 1, 2)
    assert cert.sticks_k1 == cert.sticks_k2 == 10
    assert cert.sticks_final == 6
    assert cert.bound == Fraction(6)
    assert cert.bound_satisfied
    assert cert.embedded_k2 and cert.embedded_final
    assert cert.top_reduction == "applied"
    assert cert.reduced_chords == (3, 4)
    assert cert.determinant == 3 == cert.determinant_out
    assert cert.alexander_in == "t^2 - t + 1" == cert.alexander_out
    assert cert.invariants_match


def test_build_full_without_top_move(ap5):
    knot, cert = build_full(ap5, top=False)
    assert cert.top_reduction == "skipped:disabled"
    assert cert.sticks_final == cert.n + cert.beta[0] + 1 == 8
    assert not cert.bound_satisfied
    assert cert.invariants_match


def test_build_full_figure_eight(ap6_fig8):
    knot, cert = build_full(ap6_fig8)
    assert cert.determinant == 5
    assert cert.alexander_in == "t^2 - 3*t + 1"
    assert cert.invariants_match
    assert cert.sticks_final <= Fraction(3 * (cert.n - 1), 2)


def test_build_full_survives_layout_retry(concurrence9):
    knot, cert = build_full(concurrence9)
    assert cert.layout_retry >= 1
    assert cert.embedded_final
    assert cert.invariants_match


def test_build_full_deterministic(ap6_fig8):
    k1, c1 = build_full(ap6_fig8)
    k2, c2 = build_full(ap6_fig8)
    assert k1.vertices == k2.vertices
    assert c1 == c2


def test_build_full_rejects_tiny_or_invalid():
    from stickbound.arcpres import ArcPresentation

    with pytest.raises(InvalidArcPresentation):
        build_full(ArcPresentation([(1, 2), (1, 2)]))
    with pytest.raises(InvalidArcPresentation):
        build_full(ArcPresentation([(1, 2), (2, 3), (1, 3), (1, 3)]))


def test_stick_count_merges_collinear_runs():
    verts = ((0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0))
    knot = StickKnot(verts, ("a",) * 5)
    assert stick_count(knot) == 4


def test_polygon_json_schema(ap5):
    knot, cert = build_full(ap5)
    doc = polygon_json(cert, knot)
    assert list(doc) == [
        "n",
        "shift",
        "beta",
        "sticks",
        "bound_num",
        "bound",
        "bound_satisfied",
        "top_reduction",
        "vertices",
        "edge_roles",
        "invariants_match",
        "determinant",
    ]
    assert doc["bound_num"] == "3(n-1)"
    assert doc["bound"] == "6"
    assert doc["sticks"] == 6
    for vertex in doc["vertices"]:
        assert all(isinstance(c, str) for c in vertex)
        Fraction(vertex[0])  # parses exactly
    json.dumps(doc)  # serializable as-is


def test_knot_from_json_roundtrip(ap5):
    knot, cert = build_full(ap5)
    again = knot_from_json(polygon_json(cert, knot))
    assert again.vertices == knot.vertices
    assert again.roles == knot.roles


def test_obj_export_polyline(ap3):
    knot, _ = build_full(ap3)
    text = obj_export(knot)
    lines = text.strip().splitlines()
    m = len(knot.vertices)
    assert len(lines) == m + 1
    assert all(line.startswith("v ") for line in lines[:m])
    assert lines[m] == "l " + " ".join(str(i) for i in range(1, m + 1)) + " 1"

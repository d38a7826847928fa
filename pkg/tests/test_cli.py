import json

import pytest

from stickbound import cli
from stickbound.arcpres import serialize

TREFOIL = "5\n1 4\n3 5\n2 4\n1 3\n2 5\n"
UNKNOT3 = "3\n1 2\n2 3\n1 3\n"


@pytest.fixture
def trefoil_arc(tmp_path):
    p = tmp_path / "trefoil.arc"
    p.write_text(TREFOIL)
    return p


@pytest.fixture
def unknot_arc(tmp_path):
    p = tmp_path / "unknot3.arc"
    p.write_text(UNKNOT3)
    return p


def test_build_writes_json_and_obj(trefoil_arc, tmp_path):
    out = tmp_path / "out.json"
    obj = tmp_path / "out.obj"
    rc = cli.main(["build", str(trefoil_arc), "--out", str(out), "--obj", str(obj)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["sticks"] == 6
    assert doc["bound_satisfied"] is True
    assert doc["determinant"] == 3
    assert obj.read_text().startswith("v ")


def test_build_stdout_and_determinism(trefoil_arc, capsys):
    assert cli.main(["build", str(trefoil_arc)]) == 0
    first = capsys.readouterr().out
    assert cli.main(["build", str(trefoil_arc)]) == 0
    assert capsys.readouterr().out == first


def test_build_no_top_reduction(unknot_arc, capsys):
    rc = cli.main(["build", str(unknot_arc), "--no-top-reduction"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["top_reduction"] == "skipped:disabled"
    assert doc["sticks"] == doc["n"] + doc["beta"][0] + 1


def test_build_malformed_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.arc"
    bad.write_text("5\n1 4\n3 5\nbogus\n1 3\n2 5\n")
    assert cli.main(["build", str(bad)]) == 1
    assert "line 4" in capsys.readouterr().err


def test_build_missing_file_exits_1(tmp_path):
    assert cli.main(["build", str(tmp_path / "absent.arc")]) == 1


def test_verify_accepts_own_output(trefoil_arc, tmp_path):
    out = tmp_path / "t.json"
    assert cli.main(["build", str(trefoil_arc), "--out", str(out)]) == 0
    assert cli.main(["verify", str(trefoil_arc), str(out)]) == 0


def test_verify_wrong_knot_exits_3(trefoil_arc, unknot_arc, tmp_path, capsys):
    out = tmp_path / "u.json"
    assert cli.main(["build", str(unknot_arc), "--out", str(out)]) == 0
    rc = cli.main(["verify", str(trefoil_arc), str(out)])
    assert rc == 3
    assert "mismatch" in capsys.readouterr().err


def test_verify_tampered_polygon_exits_2(trefoil_arc, tmp_path):
    out = tmp_path / "t.json"
    assert cli.main(["build", str(trefoil_arc), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    doc["vertices"][2] = doc["vertices"][4]  # collapse two joints
    out.write_text(json.dumps(doc))
    assert cli.main(["verify", str(trefoil_arc), str(out)]) == 2


def test_verify_tampered_stick_claim_exits_2(trefoil_arc, tmp_path):
    out = tmp_path / "t.json"
    assert cli.main(["build", str(trefoil_arc), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    doc["sticks"] = 5
    out.write_text(json.dumps(doc))
    assert cli.main(["verify", str(trefoil_arc), str(out)]) == 2


def test_verify_garbage_json_exits_1(trefoil_arc, tmp_path):
    bad = tmp_path / "g.json"
    bad.write_text("{not json")
    assert cli.main(["verify", str(trefoil_arc), str(bad)]) == 1


def test_simplify_reduces_stabilized_unknot(tmp_path, capsys):
    arc = tmp_path / "u4.arc"
    arc.write_text("4\n1 2\n2 3\n3 4\n1 4\n")
    assert cli.main(["simplify", str(arc)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "# destabilized 2 time(s)"
    assert out.splitlines()[1] == "2"  # unknot bottoms out at the doubled pair


def test_random_reproducible(tmp_path):
    d1, d2 = tmp_path / "a", tmp_path / "b"
    for d in (d1, d2):
        rc = cli.main(["random", "--n", "8", "--seed", "42", "--count", "10", "--out", str(d)])
        assert rc == 0
    names = sorted(p.name for p in d1.iterdir())
    assert names == [f"{i:03d}.arc" for i in range(10)]
    for name in names:
        assert (d1 / name).read_text() == (d2 / name).read_text()


def test_batch_over_files(tmp_path):
    gen = tmp_path / "gen"
    assert cli.main(["random", "--n", "7", "--seed", "5", "--count", "4", "--out", str(gen)]) == 0
    csv_path = tmp_path / "rows.csv"
    arcs = sorted(str(p) for p in gen.iterdir())
    assert cli.main(["batch", *arcs, "--csv", str(csv_path)]) == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == (
        "id,n,beta1,beta2,beta3,shift,sticks,bound,bound_satisfied,"
        "top_reduction,embedded,invariants_match,determinant,seed"
    )
    assert len(lines) == 5
    for row in lines[1:]:
        fields = row.split(",")
        assert fields[1] == "7"
        assert fields[8] == "true"  # bound_satisfied
        assert fields[11] == "true"  # invariants_match


def test_batch_generates_inline(capsys):
    assert cli.main(["batch", "--count", "3", "--n", "6", "--seed", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert lines[1].startswith("000,6,")


def test_batch_without_inputs_errors(capsys):
    assert cli.main(["batch"]) == 1


def test_bounds_table(capsys):
    assert cli.main(["bounds", "--cmin", "3", "--cmax", "6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
    row3 = lines[1].split()
    assert row3[0] == "3"
    assert row3[3] == "6"  # negami upper
    assert row3[5] == "6"  # stick upper
    row4 = lines[2].split()
    assert row4[5] == "15/2"


def test_bounds_flag_changes_arc_column(capsys):
    assert cli.main(["bounds", "--cmin", "3", "--cmax", "3", "--nonalternating-prime"]) == 0
    row = capsys.readouterr().out.splitlines()[1].split()
    assert row[4] == "4"
    assert row[5] == "9/2"


def test_serialize_matches_cli_random_content(tmp_path):
    d = tmp_path / "r"
    assert cli.main(["random", "--n", "5", "--seed", "1", "--count", "1", "--out", str(d)]) == 0
    text = (d / "000.arc").read_text()
    from stickbound.arcpres import parse

    ap = parse(text)
    assert serialize(ap) in text

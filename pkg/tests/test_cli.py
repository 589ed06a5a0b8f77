import json

import pytest

from masseylink.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_lk_hopf(capsys):
    code, doc = _run(capsys, "lk", "--fixture", "hopf_pos")
    assert code == 0
    assert doc["lk"] == [[0, 1], [1, 0]]
    assert doc["schema_version"] == 1


def test_lk_inline_pd(capsys):
    code, doc = _run(capsys, "lk", "--pd", "X(1,3,2,4), X(3,1,4,2)")
    assert code == 0
    assert doc["lk"] == [[0, 1], [1, 0]]


def test_massey3_borromean(capsys):
    code, doc = _run(capsys, "massey3", "--order", "1,2,3", "--fixture", "borromean")
    assert code == 0
    assert doc["value"] == 1
    assert doc["term_first"] == 1
    assert doc["term_second"] == 0


def test_massey3_undefined_exit_code(capsys):
    code, doc = _run(capsys, "massey3", "--order", "1,2,3", "--fixture", "hopf_split")
    assert code == 2
    assert doc is None  # no partial JSON on failure


def test_malformed_input_exit_code(capsys):
    code, doc = _run(capsys, "lk", "--pd", "not a code")
    assert code == 1
    assert doc is None


def test_milnor(capsys):
    code, doc = _run(capsys, "milnor", "--indices", "1,2,3", "--fixture", "brunn_3")
    assert code == 0
    assert abs(doc["value"]) == 3


def test_seifert_hopf(capsys):
    code, doc = _run(capsys, "seifert", "--fixture", "hopf_pos")
    assert code == 0
    assert doc["circles"] == 2 and doc["bands"] == 2
    assert doc["nesting_depths"] == [0, 1]
    assert all(p["euler"] == 1 for p in doc["per_component"])


def test_trace_output_schema(capsys):
    code, doc = _run(capsys, "trace", "--pair", "2,3", "--fixture", "borromean")
    assert code == 0
    assert doc["pair"] == [2, 3]
    assert doc["loops"]
    kinds = {p["kind"] for loop in doc["loops"] for p in loop["pieces"]}
    assert kinds <= {"along", "interior", "circle"}
    labels = [p["label"] for p in doc["pierce_points"]]
    assert sum(labels) == 0


def test_massey4_unlink(capsys):
    code, doc = _run(capsys, "massey4", "--order", "1,2,3,4", "--fixture", "unlink4")
    assert code == 0
    assert doc["status"] == "computed" and doc["value"] == 0


def test_chains_verify(capsys):
    code, doc = _run(capsys, "chains-verify", "--complex", "torus9", "--cases", "20")
    assert code == 0
    assert doc["pass"] is True


def test_byte_identical_output(capsys):
    main(["massey3", "--order", "1,2,3", "--fixture", "borromean"])
    out1 = capsys.readouterr().out
    main(["massey3", "--order", "1,2,3", "--fixture", "borromean"])
    out2 = capsys.readouterr().out
    assert out1 == out2


def test_dump_geometry_and_trace(tmp_path, capsys):
    geo = tmp_path / "geo.json"
    tr = tmp_path / "trace.json"
    code, doc = _run(
        capsys,
        "massey3", "--order", "1,2,3", "--fixture", "borromean",
        "--dump-geometry", str(geo), "--dump-trace", str(tr),
    )
    assert code == 0
    gdoc = json.loads(geo.read_text())
    assert gdoc["schema_version"] == 1
    assert len(gdoc["curves"]) == 3 and len(gdoc["surfaces"]) == 3
    tdoc = json.loads(tr.read_text())
    assert len(tdoc["traces"]) == 2


def test_fixture_root_override(tmp_path, capsys, monkeypatch):
    (tmp_path / "mine.json").write_text(
        json.dumps({"components": 1, "crossings": [], "comment": "test"})
    )
    monkeypatch.setenv("MASSEYLINK_FIXTURES", str(tmp_path))
    code, doc = _run(capsys, "lk", "--fixture", "mine")
    assert code == 0
    assert doc["lk"] == [[0]]
    code, _ = _run(capsys, "lk", "--fixture", "borromean")
    assert code == 1  # bundled names are hidden behind the override

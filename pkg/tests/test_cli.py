import json

import pytest

from glspace.cli import main
from glspace.corpus import hex_lambda
from glspace.polyfile import emit


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_gl_positive(capsys):
    code, out, _ = run(capsys, "check-gl", "fixture:hex_tilde")
    assert code == 0 and "GL: yes; 6/6 facets plump" in out
    assert "sha256 " in out


def test_check_gl_witness(capsys, tmp_path):
    path = tmp_path / "hex_lambda_3_4.poly"
    path.write_text(emit(hex_lambda("3/4")))
    code, out, _ = run(capsys, "check-gl", str(path))
    assert code == 1
    assert "vertex (1,0): dist 1 ≠ 2/3" in out
    assert "(1/3,1)" in out


def test_check_glr(capsys):
    code, out, _ = run(capsys, "check-glr", "fixture:hex_tilde")
    assert code == 1
    assert "extreme dual point (1,1/2) has coordinate outside {0,±1}" in out
    code, out, _ = run(capsys, "check-glm", "fixture:cube3")
    assert code == 0 and "GLM: yes" in out


def test_check_glm_audit(capsys):
    code, out, _ = run(capsys, "check-glm", "fixture:hex_tilde", "--audit")
    assert code == 1 and "full procedure agrees" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify-2d", "fixture:hex_lambda(1)")
    assert code == 0 and "AffineRegularHexagon; basis (1,0), (0,1)" in out
    code, out, _ = run(capsys, "classify-2d", "fixture:oct_rational")
    assert code == 1 and "NotGL" in out


def test_json_matches_text(capsys):
    _, text, _ = run(capsys, "check-gl", "fixture:hex_lambda(3/5)")
    code, out, _ = run(capsys, "check-gl", "fixture:hex_lambda(3/5)", "--format", "json")
    data = json.loads(out)
    assert code == 1 and data["gl"] is False and data["plump"] == 2
    assert data["input_sha256"] in text
    for w in data["witnesses"]:
        assert f"dist {w['distance']} ≠ {w['bound']}" in text


def test_deterministic_output(capsys):
    first = run(capsys, "check-gl", "fixture:oct_rational", "--format", "json")
    second = run(capsys, "check-gl", "fixture:oct_rational", "--format", "json", "--parallel")
    assert first == second


def test_gen_then_check_round_trip(capsys, tmp_path):
    out_path = tmp_path / "p.poly"
    code, _, _ = run(capsys, "gen", "polygon", "--seed", "5", "--pairs", "3", "-o", str(out_path))
    assert code == 0
    code, out, _ = run(capsys, "check-gl", str(out_path))
    assert code in (0, 1)
    code, out, _ = run(capsys, "gen", "fixture", "--name", "square")
    assert "polytope\ndim 2\nvrep" in out


def test_build_sum_and_check(capsys, tmp_path):
    out_path = tmp_path / "s.poly"
    code, out, _ = run(capsys, "build-sum", "fixture:square", "fixture:hex_tilde",
                       "fixture:hex_tilde", "-o", str(out_path))
    assert code == 0 and "12 facets" in out
    code, out, _ = run(capsys, "check-gl", str(out_path))
    assert code == 0 and "12/12" in out


def test_audit(capsys):
    code, out, _ = run(capsys, "audit", "fixture:hex_tilde")
    assert code == 0 and "6 passed" in out and "segment census: 1, 1, 1" in out


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", "fixture:square", "--point", "1,0", "--facet", "1")
    assert code == 0 and "= 1 at" in out


@pytest.mark.parametrize("argv", [
    ("check-gl", "fixture:nope"),
    ("check-gl", "/nonexistent/file.poly"),
    ("check-gl", "fixture:cube3", "--max-dim", "2"),
    ("distance", "fixture:square", "--point", "1,x", "--facet", "0"),
    ("distance", "fixture:square", "--point", "1,0", "--facet", "9"),
    ("check-glm", "fixture:hex_lambda(1)"),
    ("classify-2d", "fixture:cube3"),
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_parse_error_line(capsys, tmp_path):
    path = tmp_path / "bad.poly"
    path.write_text("polytope\ndim 2\nvrep\n1 0 0\nend\n")
    code, _, err = run(capsys, "check-gl", str(path))
    assert code == 2 and "line 4" in err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check-gl"])
    assert exc.value.code == 2


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "check-gl", "fixture:square")
    assert "time" not in out
    _, out, _ = run(capsys, "check-gl", "fixture:square", "--timing")
    assert "time " in out

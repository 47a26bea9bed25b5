import json

from khbound.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kh_unknot(capsys):
    code, out, _err = run_cli(capsys, "kh", "--pd", "[]", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["strong_bound"] == -1
    assert data["weak_bound"] == -1


def test_kh_left_trefoil_by_name(capsys):
    code, out, _err = run_cli(capsys, "kh", "--name", "3_1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["strong_bound"] == -6


def test_kh_braid_with_negative_letters(capsys):
    code, out, _err = run_cli(capsys, "kh", "--braid", "-1,-2,-1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["crossings"] == 3


def test_alt_tb_six_three(capsys):
    code, out, _err = run_cli(capsys, "alt-tb", "--name", "6_3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["alt_tb"] == -4
    assert data["alt_tb_via_crossings"] == -4
    assert data["front_tb"] == -4
    assert data["certificates"]["admissible"] is True
    assert data["certificates"]["formula_equals_strong_bound"] is True


def test_alt_tb_mirror_trefoil(capsys):
    code, out, _err = run_cli(capsys, "alt-tb", "--name", "3_1", "--json")
    assert code == 0
    assert json.loads(out)["alt_tb"] == -6


def test_alt_tb_rejects_nonalternating(capsys):
    code, _out, err = run_cli(capsys, "alt-tb", "--name", "m9_42", "--json")
    assert code == 1
    assert "alternating" in err


def test_front_command(capsys, tmp_path):
    front = {"arcs": [[[0, 0], [2, 1], [4, 0]], [[0, 0], [2, -1], [4, 0]]]}
    path = tmp_path / "lips.json"
    path.write_text(json.dumps(front))
    code, out, _err = run_cli(capsys, "front", "--front", str(path), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["tb"] == -1
    assert data["admissible"] is True
    assert data["strong_bound"] == -1
    assert data["inequality_holds"] is True


def test_front_command_invalid_front(capsys, tmp_path):
    front = {"arcs": [[[0, 0], [0, 1]]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(front))
    code, _out, err = run_cli(capsys, "front", "--front", str(path), "--json")
    assert code == 1
    assert "vertical" in err


def test_deterministic_output(capsys):
    _code, out1, _ = run_cli(capsys, "kh", "--name", "4_1", "--json")
    _code, out2, _ = run_cli(capsys, "kh", "--name", "4_1", "--json")
    assert out1 == out2


def test_svg_output(capsys, tmp_path):
    svg = tmp_path / "front.svg"
    code, out, _err = run_cli(
        capsys, "alt-tb", "--name", "4_1", "--json", "--svg", str(svg)
    )
    assert code == 0
    assert svg.exists()
    assert svg.stat().st_size > 0
    assert json.loads(out)["svg"] == str(svg)


def test_mondrian_svg_render(tmp_path):
    from khbound.mondrian import EnhancedCycle, mondrian_enhanced_cycle
    from khbound.render import render_mondrian

    m = mondrian_enhanced_cycle(EnhancedCycle(4, ((1, 3),)))
    path = tmp_path / "mondrian.svg"
    render_mondrian(m, str(path))
    assert path.stat().st_size > 0

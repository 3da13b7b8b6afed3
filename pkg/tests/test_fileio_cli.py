import shutil

import pytest
from click.testing import CliRunner

from digitop.cli import main
from digitop.core import diamond
from digitop.fileio import (ParseError, parse_grid, parse_image, parse_loop,
                            parse_map, parse_witness, serialize_grid,
                            serialize_image, serialize_loop, serialize_map,
                            serialize_witness)
from digitop.fixtures import (diamond_image, fixture_path, generator_fixture,
                              map_f)
from digitop.homotopy import reparam_homotopy
from digitop.oracle import equivalent_bounded
from digitop.paths import constant_loop, make_path
from digitop.svg import render_image_svg


def test_image_round_trip_is_byte_identical():
    text = serialize_image(diamond())
    assert serialize_image(parse_image(text)) == text


def test_loop_and_grid_round_trips(tmp_path):
    img = tmp_path / "d.img"
    img.write_text(serialize_image(diamond()))
    loop_text = serialize_loop(generator_fixture(), "d.img")
    loop = parse_loop(loop_text, tmp_path)
    assert serialize_loop(loop, "d.img") == loop_text
    grid = reparam_homotopy(loop, 2)
    grid_text = serialize_grid(grid, "d.img")
    assert serialize_grid(parse_grid(grid_text, tmp_path), "d.img") == grid_text


def test_map_round_trip():
    f = map_f()
    text = serialize_map(f, "SD2.img", "C.img")
    assert serialize_map(parse_map(text), "SD2.img", "C.img") == text


def test_witness_round_trip(tmp_path):
    d = diamond()
    img = tmp_path / "d.img"
    img.write_text(serialize_image(d))
    a = make_path(d, tuple(generator_fixture().steps[:2])
                  + (d.basepoint,))
    w = equivalent_bounded(a, constant_loop(d, a.length), max_steps=4000)
    assert w is not None
    text = serialize_witness(w, "d.img")
    again = parse_witness(text, tmp_path)
    assert serialize_witness(again, "d.img") == text


def test_parse_errors_are_reported():
    with pytest.raises(ParseError):
        parse_image("points only\n0,0\n")
    with pytest.raises(ParseError):
        parse_image("dim=2\n0,0\n0\n")
    with pytest.raises(ParseError):
        parse_map("domain=missing.img\ncodomain=missing.img\n")


def test_fixture_dir_env_override(tmp_path, monkeypatch):
    target = tmp_path / "D.img"
    shutil.copy(fixture_path("D.img"), target)
    monkeypatch.setenv("DIGITOP_FIXTURES", str(tmp_path))
    loop_file = tmp_path / "g.loop"
    loop_file.write_text(serialize_loop(generator_fixture(), "D.img"))
    runner = CliRunner()
    result = runner.invoke(main, ["winding", str(loop_file)])
    assert result.exit_code == 0
    assert "h = 1" in result.output


def run_cli(args):
    return CliRunner().invoke(main, args)


def test_cli_check_map_exit_codes(tmp_path):
    ok = run_cli(["check-map", str(fixture_path("f.map"))])
    assert ok.exit_code == 0 and "continuous" in ok.output
    broken = tmp_path / "broken.map"
    text = fixture_path("g.map").read_text().replace("-> 0,1", "-> 0,-1", 1)
    broken.write_text(text)
    shutil.copy(fixture_path("C.img"), tmp_path / "C.img")
    shutil.copy(fixture_path("D.img"), tmp_path / "D.img")
    bad = run_cli(["check-map", str(broken)])
    assert bad.exit_code == 1
    assert run_cli(["check-map", str(tmp_path / "missing.map")]).exit_code == 2


def test_cli_subdivide_cover_verify(tmp_path):
    shutil.copy(fixture_path("D.img"), tmp_path / "D.img")
    loop_file = tmp_path / "gen.loop"
    loop_file.write_text(serialize_loop(generator_fixture(), "D.img"))
    assert run_cli(["subdivide", str(tmp_path / "D.img"), "3"]).exit_code == 0
    assert (tmp_path / "D.sub3.img").exists()
    assert run_cli(["cover", str(loop_file), "3"]).exit_code == 0
    sub_loop = tmp_path / "sub.loop"
    sub_loop.write_text("image=D.sub3.img\n4,1\n3,2\n4,1\n")
    assert run_cli(["cover-homotopy", str(sub_loop), "3"]).exit_code == 0
    verified = run_cli(["verify-grid", str(tmp_path / "sub.coverhom3.grid")])
    assert verified.exit_code == 0 and "of-based-loops" in verified.output


def test_cli_verify_grid_failure_exits_one(tmp_path):
    shutil.copy(fixture_path("D.img"), tmp_path / "D.img")
    bad = tmp_path / "bad.grid"
    bad.write_text("image=D.img\nwidth=2\nheight=1\nkind=of-based-loops\n"
                   "1,0;0,1;1,0\n1,0;0,-1;1,0\n")
    result = run_cli(["verify-grid", str(bad)])
    assert result.exit_code == 1 and "joint continuity" in result.output


def test_cli_equiv_and_witness(tmp_path):
    shutil.copy(fixture_path("D.img"), tmp_path / "D.img")
    dip = tmp_path / "dip.loop"
    dip.write_text("image=D.img\n1,0\n0,1\n1,0\n0,-1\n1,0\n")
    const = tmp_path / "const.loop"
    const.write_text("image=D.img\n" + "1,0\n" * 5)
    out = tmp_path / "w.wit"
    result = run_cli(["equiv", str(dip), str(const), "--out", str(out)])
    assert result.exit_code == 0 and "equivalent" in result.output
    assert out.exists()
    gen = tmp_path / "gen.loop"
    gen.write_text(serialize_loop(generator_fixture(), "D.img"))
    sep = run_cli(["equiv", str(gen), str(const), "--budget", "500"])
    assert sep.exit_code == 1 and "separated" in sep.output


def test_cli_pi1_and_dc_example(tmp_path):
    shutil.copy(fixture_path("D.img"), tmp_path / "D.img")
    result = run_cli(["pi1", str(tmp_path / "D.img"),
                      "--max-len", "4", "--budget", "3000"])
    assert result.exit_code == 0 and "h=1" in result.output
    assert run_cli(["dc-example"]).exit_code == 0


def test_cli_render_counts(tmp_path):
    svg = render_image_svg(diamond_image())
    assert svg.count("<circle") == 4
    assert svg.count('stroke="#555555"') == 4
    shutil.copy(fixture_path("C.img"), tmp_path / "C.img")
    result = run_cli(["render", str(tmp_path / "C.img")])
    assert result.exit_code == 0
    assert result.output.count("<circle") == 8


def test_cli_render_is_deterministic(tmp_path):
    shutil.copy(fixture_path("D.img"), tmp_path / "D.img")
    a = run_cli(["render", str(tmp_path / "D.img")]).output
    b = run_cli(["render", str(tmp_path / "D.img")]).output
    assert a == b


def test_cli_suite_filter():
    result = run_cli(["verify-paper-suite", "--only", "graph-product"])
    assert result.exit_code == 0 and "graph-product-contrast" in result.output
    assert run_cli(["verify-paper-suite", "--only", "nothing-matches"]).exit_code == 2

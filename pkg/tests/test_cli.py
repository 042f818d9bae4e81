import json

import pytest

from simplexcolor.cli import main
from simplexcolor.generators import GeneratorSpec, generate
from simplexcolor.model import load, save
from simplexcolor.render import RenderOptions, render_svg


def run(*argv):
    return main(list(argv))


@pytest.fixture
def fan_file(tmp_path):
    path = str(tmp_path / "fan.json")
    assert run("generate", "--kind", "fan", "--dim", "2", "--size", "3", "-o", path) == 0
    return path


class TestGenerate:
    def test_fan(self, fan_file):
        c = load(fan_file)
        assert c.dimension == 2
        assert len(c.simplices) == 3

    def test_freudenthal_4d_cells(self, tmp_path):
        path = str(tmp_path / "f4.json")
        assert run("generate", "--kind", "freudenthal", "--dim", "4",
                   "--cells", "2", "-o", path) == 0
        assert len(load(path).simplices) == 384  # 2^4 * 4!

    def test_high_dimensional_fan(self, tmp_path):
        path = str(tmp_path / "f7.json")
        assert run("generate", "--kind", "fan", "--dim", "7", "--size", "3",
                   "-o", path) == 0
        assert load(path).dimension == 7

    def test_bad_kind_dimension_pair(self, tmp_path):
        path = str(tmp_path / "x.json")
        assert run("generate", "--kind", "tri-tiling", "--dim", "3",
                   "--size", "2", "-o", path) == 2


class TestColorVerify:
    def test_fan_three_colors(self, fan_file, tmp_path, capsys):
        col_path = str(tmp_path / "fan.colors.json")
        assert run("color", fan_file, "-o", col_path) == 0
        out = capsys.readouterr().out
        assert "3 colors" in out
        data = json.loads(open(col_path).read())
        assert sorted(set(data["colors"])) == [0, 1, 2]
        cert = json.loads(open(col_path + ".cert.json").read())
        assert cert["method"] == "combinatorial"
        assert len(cert["steps"]) == 3

    def test_geometric_method(self, fan_file, tmp_path):
        col_path = str(tmp_path / "fan.colors.json")
        assert run("color", fan_file, "--method", "geometric", "-o", col_path) == 0
        assert run("verify", fan_file, col_path) == 0

    def test_path_two_colors(self, tmp_path, capsys):
        path = str(tmp_path / "p.json")
        run("generate", "--kind", "path", "--dim", "2", "--size", "5", "-o", path)
        col_path = str(tmp_path / "p.colors.json")
        assert run("color", path, "-o", col_path) == 0
        assert "2 colors" in capsys.readouterr().out

    def test_boundary_abstract_exit_3(self, tmp_path, capsys):
        path = str(tmp_path / "b.json")
        run("generate", "--kind", "boundary-abstract", "--dim", "2", "-o", path)
        col_path = str(tmp_path / "b.colors.json")
        assert run("color", path, "-o", col_path) == 3
        assert "4 simplices" in capsys.readouterr().err

    def test_verify_bad_coloring_exit_4(self, fan_file, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"colors": [0, 0, 0]}')
        assert run("verify", fan_file, str(bad)) == 4
        assert "conflict" in capsys.readouterr().err

    def test_missing_file_exit_2(self, tmp_path):
        assert run("color", str(tmp_path / "void.json"), "-o", str(tmp_path / "o")) == 2

    def test_color_then_verify_generator_outputs(self, tmp_path):
        cases = [
            ("fan", "2", "6"), ("closed-fan", "2", "5"), ("tri-tiling", "2", "3"),
            ("delaunay2d", "2", "25"), ("freudenthal", "3", "2"), ("path", "3", "6"),
        ]
        for kind, dim, size in cases:
            cpath = str(tmp_path / f"{kind}.json")
            col = str(tmp_path / f"{kind}.colors.json")
            assert run("generate", "--kind", kind, "--dim", dim,
                       "--size", size, "-o", cpath) == 0
            assert run("color", cpath, "-o", col) == 0
            assert run("verify", cpath, col) == 0


class TestAnalyze:
    def test_fan_report(self, fan_file, capsys):
        assert run("analyze", fan_file) == 0
        out = capsys.readouterr().out
        assert "max dual degree: 2" in out
        assert "K_4: absent" in out
        assert "K_3 cliques: 1" in out
        assert "halfspace ok: True" in out

    def test_fan_json_report(self, fan_file, capsys):
        assert run("analyze", fan_file, "--json") == 0
        info = json.loads(capsys.readouterr().out)
        assert info["max_degree"] == 2
        assert info["forbidden_clique"] is None
        assert info["max_clique_reports"][0]["vertex_count_ok"] is True

    def test_abstract_boundary_has_forbidden_clique(self, tmp_path, capsys):
        path = str(tmp_path / "b.json")
        run("generate", "--kind", "boundary-abstract", "--dim", "2", "-o", path)
        capsys.readouterr()
        assert run("analyze", path, "--json") == 0
        info = json.loads(capsys.readouterr().out)
        assert info["forbidden_clique"] == [0, 1, 2, 3]

    def test_freudenthal_2d_no_k4(self, tmp_path, capsys):
        path = str(tmp_path / "f.json")
        run("generate", "--kind", "freudenthal", "--dim", "2", "--size", "3", "-o", path)
        capsys.readouterr()
        assert run("analyze", path, "--json") == 0
        info = json.loads(capsys.readouterr().out)
        assert info["forbidden_clique"] is None


class TestChromatic:
    def test_fan(self, fan_file, capsys):
        assert run("chromatic", fan_file) == 0
        assert "3" in capsys.readouterr().out

    def test_limit_refusal(self, tmp_path):
        path = str(tmp_path / "big.json")
        run("generate", "--kind", "path", "--dim", "2", "--size", "50", "-o", path)
        assert run("chromatic", path) == 2
        assert run("chromatic", path, "--limit", "50") == 0


class TestRender:
    def test_fan_svg(self, fan_file, tmp_path, capsys):
        col_path = str(tmp_path / "c.json")
        run("color", fan_file, "-o", col_path)
        svg_path = str(tmp_path / "fan.svg")
        assert run("render", fan_file, "--coloring", col_path, "-o", svg_path) == 0
        svg = open(svg_path).read()
        assert svg.count("<polygon") == 3
        fills = {ln.split('fill="')[1].split('"')[0] for ln in svg.splitlines()
                 if "<polygon" in ln}
        assert len(fills) == 3

    def test_show_dual_overlay(self, fan_file, tmp_path):
        svg_path = str(tmp_path / "fan.svg")
        assert run("render", fan_file, "-o", svg_path, "--show-dual") == 0
        svg = open(svg_path).read()
        assert svg.count("<circle") == 3
        assert svg.count("<line") == 3

    def test_3d_input_exit_2(self, tmp_path):
        path = str(tmp_path / "t.json")
        run("generate", "--kind", "freudenthal", "--dim", "3", "--size", "1", "-o", path)
        assert run("render", path, "-o", str(tmp_path / "t.svg")) == 2

    def test_byte_determinism(self, tmp_path):
        c = generate(GeneratorSpec("tri-tiling", 2, 3))
        src = str(tmp_path / "t.json")
        save(c, src)
        out1, out2 = str(tmp_path / "a.svg"), str(tmp_path / "b.svg")
        assert run("render", src, "-o", out1, "--show-dual") == 0
        assert run("render", src, "-o", out2, "--show-dual") == 0
        assert open(out1, "rb").read() == open(out2, "rb").read()

    def test_palette_too_small(self, fan_file, tmp_path):
        col_path = str(tmp_path / "c.json")
        run("color", fan_file, "-o", col_path)
        assert run("render", fan_file, "--coloring", col_path,
                   "--palette", "#111111,#222222", "-o", str(tmp_path / "x.svg")) == 2


def test_render_options_pure_function():
    c = generate(GeneratorSpec("fan", 2, 4))
    a = render_svg(c, None, RenderOptions(show_dual=True))
    b = render_svg(c, None, RenderOptions(show_dual=True))
    assert a == b

import hashlib
from pathlib import Path

import pytest
from PIL import Image

from wavebound_plots import FigureKind, PlotJob, SchemaError, render
from wavebound_plots.cli import main

DATA = Path(__file__).parent / "data"

JOBS = {
    "beta_curves": [DATA / "beta_curves.csv"],
    "stability_limit": [DATA / "stability1d.csv"],
    "profile": [DATA / "profile.csv"],
    "heatmap": [DATA / "stability2d_beta_1.25.pgm"],
    "area_bars": [DATA / "areas.csv"],
}

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def digest(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


@pytest.mark.parametrize("kind", sorted(JOBS))
def test_render_all_kinds(kind, tmp_path):
    inputs = JOBS[kind]
    before = [digest(p) for p in inputs]
    out = tmp_path / f"{kind}.png"
    written = render(PlotJob(FigureKind(kind), tuple(inputs), out))
    assert written == out
    assert out.stat().st_size > 0
    assert out.read_bytes().startswith(PNG_MAGIC)
    # rendering must never touch its inputs
    assert [digest(p) for p in inputs] == before


@pytest.mark.parametrize("kind", sorted(JOBS))
def test_rerender_is_byte_identical(kind, tmp_path):
    first = tmp_path / "first.png"
    second = tmp_path / "second.png"
    render(PlotJob(FigureKind(kind), tuple(JOBS[kind]), first))
    render(PlotJob(FigureKind(kind), tuple(JOBS[kind]), second))
    assert first.read_bytes() == second.read_bytes()


def test_heatmap_dimensions_equal_map_grid(tmp_path):
    pgm = DATA / "stability2d_beta_1.25.pgm"
    tokens = pgm.read_text().split()
    width, height = int(tokens[1]), int(tokens[2])
    out = tmp_path / "map.png"
    render(PlotJob(FigureKind.HEATMAP, (pgm,), out))
    with Image.open(out) as image:
        assert image.size == (width, height)


def test_profile_accepts_multiple_runs(tmp_path):
    out = tmp_path / "overlay.png"
    render(PlotJob(FigureKind.PROFILE, (DATA / "profile.csv", DATA / "profile.csv"), out))
    assert out.read_bytes().startswith(PNG_MAGIC)


def test_single_input_kinds_reject_extras(tmp_path):
    with pytest.raises(SchemaError):
        PlotJob(
            FigureKind.HEATMAP,
            (DATA / "stability2d_beta_1.25.pgm", DATA / "stability2d_beta_1.5.pgm"),
            tmp_path / "o.png",
        )
    with pytest.raises(SchemaError):
        PlotJob(FigureKind.AREA_BARS, (), tmp_path / "o.png")


class TestSchemaErrors:
    def test_empty_csv(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        with pytest.raises(SchemaError):
            render(PlotJob(FigureKind.BETA_CURVES, (empty,), tmp_path / "o.png"))

    def test_header_only_csv(self, tmp_path):
        header_only = tmp_path / "header.csv"
        header_only.write_text("beta,area_fraction\n")
        with pytest.raises(SchemaError):
            render(PlotJob(FigureKind.AREA_BARS, (header_only,), tmp_path / "o.png"))

    def test_wrong_columns(self, tmp_path):
        wrong = tmp_path / "wrong.csv"
        wrong.write_text("a,b\n1,2\n")
        with pytest.raises(SchemaError):
            render(PlotJob(FigureKind.PROFILE, (wrong,), tmp_path / "o.png"))

    def test_non_numeric_cell(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("beta,area_fraction\n1.25,much\n")
        with pytest.raises(SchemaError):
            render(PlotJob(FigureKind.AREA_BARS, (bad,), tmp_path / "o.png"))

    def test_truncated_pgm(self, tmp_path):
        bad = tmp_path / "bad.pgm"
        bad.write_text("P2\n4 4\n255\n0 255 0\n")
        with pytest.raises(SchemaError):
            render(PlotJob(FigureKind.HEATMAP, (bad,), tmp_path / "o.png"))

    def test_not_a_pgm(self, tmp_path):
        bad = tmp_path / "bad.pgm"
        bad.write_text("P5 binary header\n")
        with pytest.raises(SchemaError):
            render(PlotJob(FigureKind.HEATMAP, (bad,), tmp_path / "o.png"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(SchemaError):
            render(
                PlotJob(FigureKind.BETA_CURVES, (tmp_path / "nope.csv",), tmp_path / "o.png")
            )

    def test_stability_limit_needs_branches(self, tmp_path):
        csp = tmp_path / "limits.csv"
        csp.write_text("kind,param,c_lim_analytic,c_lim_numeric\nupwind,,1,1\n")
        with pytest.raises(SchemaError):
            render(PlotJob(FigureKind.STABILITY_LIMIT, (csp,), tmp_path / "o.png"))


class TestCli:
    def test_renders_via_cli(self, tmp_path):
        out = tmp_path / "curves.png"
        code = main(["beta_curves", str(DATA / "beta_curves.csv"), "-o", str(out)])
        assert code == 0
        assert out.exists()

    def test_schema_error_exit_code(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        code = main(["area_bars", str(empty), "-o", str(tmp_path / "o.png")])
        assert code == 2

    def test_unknown_kind_rejected(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(["waterfall", str(DATA / "areas.csv"), "-o", str(tmp_path / "o.png")])
        assert excinfo.value.code == 2

import hashlib

import matplotlib.pyplot as plt
import pytest

from bpfigs import DataError, FigureSpec, build_figure, render

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@pytest.fixture(autouse=True)
def _close_figures():
    yield
    plt.close("all")


def _spec(paths, kind, out, **kw):
    if not isinstance(paths, (list, tuple)):
        paths = [paths]
    return FigureSpec(csvs=tuple(str(p) for p in paths), kind=kind,
                      out=str(out), **kw)


def _series(fig):
    """Labeled data lines of the single Axes, keyed by label."""
    (ax,) = fig.axes
    return {ln.get_label(): ln for ln in ax.get_lines()
            if not ln.get_label().startswith("_")}


def _sha(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


# -- byte stability -------------------------------------------------------------


@pytest.mark.parametrize("ext", ["png", "svg"])
def test_error_rate_byte_stable(fixtures, tmp_path, ext):
    paths = [tmp_path / f"fig{i}.{ext}" for i in (1, 2)]
    for p in paths:
        render(_spec(fixtures / "sweep_two_configs.csv", "error_rate", p))
    a, b = (p.read_bytes() for p in paths)
    assert a == b
    if ext == "png":
        assert a.startswith(PNG_MAGIC)


def test_trace_byte_stable(fixtures, tmp_path):
    paths = [tmp_path / f"t{i}.png" for i in (1, 2)]
    for p in paths:
        render(_spec(fixtures / "trace_five_qubit.csv", "trace", p))
    assert _sha(paths[0]) == _sha(paths[1])


def test_avg_iter_byte_stable(fixtures, tmp_path):
    paths = [tmp_path / f"a{i}.png" for i in (1, 2)]
    for p in paths:
        render(_spec(fixtures / "sweep_256_32.csv", "avg_iter", p))
    assert _sha(paths[0]) == _sha(paths[1])


# -- error_rate -----------------------------------------------------------------


def test_single_point_marker_with_bar(fixtures, tmp_path):
    fig = build_figure(_spec(fixtures / "sweep_single_point.csv",
                             "error_rate", tmp_path / "one.png"))
    series = _series(fig)
    assert list(series) == ["bp4 serial"]
    line = series["bp4 serial"]
    assert len(line.get_xdata()) == 1
    # values straight out of the file: 20 failures / 256 trials at eps 0.1
    assert line.get_xdata()[0] == 0.1
    assert line.get_ydata()[0] == 20 / 256
    (bars,) = fig.axes[0].collections
    (segment,) = bars.get_segments()
    assert segment[0][1] == float("0.05114064057")
    assert segment[1][1] == float("0.1175832383")


def test_two_config_fixture_gives_two_series(fixtures, tmp_path):
    fig = build_figure(_spec(fixtures / "sweep_two_configs.csv",
                             "error_rate", tmp_path / "two.png"))
    series = _series(fig)
    assert sorted(series) == ["bp4 parallel", "bp4 serial"]
    for line in series.values():
        assert list(line.get_xdata()) == [0.05, 0.1]
    legend_texts = [t.get_text() for t in fig.axes[0].get_legend().get_texts()]
    assert sorted(legend_texts) == ["bp4 parallel", "bp4 serial"]


def test_default_scales_are_loglog(fixtures, tmp_path):
    fig = build_figure(_spec(fixtures / "sweep_two_configs.csv",
                             "error_rate", tmp_path / "s.png"))
    ax = fig.axes[0]
    assert ax.get_xscale() == "log" and ax.get_yscale() == "log"


def test_normalized_curves_sit_below_baseline(fixtures, tmp_path):
    # the committed [[256,32]] sweep: both normalized configs beat plain
    # serial BP at the low-epsilon end of the grid
    fig = build_figure(_spec(fixtures / "sweep_256_32.csv",
                             "error_rate", tmp_path / "sweep.png"))
    series = _series(fig)
    assert sorted(series) == ["bp4 serial", "bp4 serial alpha_c=1.5",
                              "bp4 serial alpha_v=2"]
    base = series["bp4 serial"].get_ydata()
    for label in ("bp4 serial alpha_c=1.5", "bp4 serial alpha_v=2"):
        mod = series[label].get_ydata()
        assert mod[0] < base[0] and mod[1] < base[1]


def test_custom_group_keys_and_title(fixtures, tmp_path):
    fig = build_figure(_spec(fixtures / "sweep_two_configs.csv", "error_rate",
                             tmp_path / "g.png", group_keys=("code_id",),
                             title="five qubit"))
    assert list(_series(fig)) == ["code_id=five_qubit"]
    assert fig.axes[0].get_title() == "five qubit"


def test_unknown_group_key_is_missing_column(fixtures, tmp_path):
    with pytest.raises(DataError, match="missing columns"):
        build_figure(_spec(fixtures / "sweep_two_configs.csv", "error_rate",
                           tmp_path / "g.png", group_keys=("flavour",)))


# -- avg_iter -------------------------------------------------------------------


def test_avg_iter_plots_column_verbatim(fixtures, tmp_path):
    fig = build_figure(_spec(fixtures / "sweep_256_32.csv", "avg_iter",
                             tmp_path / "ai.png"))
    series = _series(fig)
    line = series["bp4 serial"]
    assert line.get_xdata()[0] == 0.008
    assert line.get_ydata()[0] == float("1.887939453")
    assert fig.axes[0].get_yscale() == "linear"


# -- trace ----------------------------------------------------------------------


def test_trace_four_lines_per_qubit(fixtures, tmp_path):
    fig = build_figure(_spec(fixtures / "trace_five_qubit.csv", "trace",
                             tmp_path / "tr.png"))
    series = _series(fig)
    assert len(series) == 20  # 5 qubits x I,X,Y,Z
    assert {lbl.split()[0] for lbl in series} == {f"q{i}" for i in range(5)}
    assert "q3 Y" in series
    for line in series.values():
        assert list(line.get_xdata()) == [1, 2, 3, 4, 5, 6, 7, 8]
        assert all(0.0 <= y <= 1.0 for y in line.get_ydata())
    # the hit qubit oscillates: Y posterior alternates high/low
    y3 = series["q3 Y"].get_ydata()
    assert y3[0] > 0.8 and y3[1] < 0.1 and y3[2] > 0.8


def test_render_returns_path_and_writes(fixtures, tmp_path):
    out = tmp_path / "out.png"
    got = render(_spec(fixtures / "trace_five_qubit.csv", "trace", out))
    assert got == str(out)
    assert out.read_bytes().startswith(PNG_MAGIC)

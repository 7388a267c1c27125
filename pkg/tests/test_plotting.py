from projpaths import demo_graph
from projpaths.cli import bench_rows
from projpaths.plotting import plot_bench


def test_plot_bench_writes_png(tmp_path):
    rows = bench_rows([("demo", demo_graph())], repeat=1)
    paths = plot_bench(rows, tmp_path / "figs", stem="demo")
    assert [p.rsplit("/", 1)[1] for p in paths] == ["demo-counters.png", "demo-timing.png"]
    for p in paths:
        with open(p, "rb") as fh:
            assert fh.read(8) == b"\x89PNG\r\n\x1a\n"


def test_plot_bench_no_rows(tmp_path):
    assert plot_bench([], tmp_path / "none") == []
    assert not (tmp_path / "none").exists()

import math

from grasscode import kernels
from grasscode.bench import BenchReport, format_report, kernel_comparison, loglog_slope, scaling


def test_loglog_slope_of_power_law():
    xs = [2, 4, 8, 16]
    assert math.isclose(loglog_slope(xs, [3 * x ** 1.5 for x in xs]), 1.5)


def test_small_scaling_table_and_report():
    rows, slopes = scaling(grid=[(6, 3), (8, 4)], samples=5)
    assert {r.scheme for r in rows} == {"extended", "ferrers", "hybrid"}
    assert all(r.encode_us > 0 and r.decode_us > 0 for r in rows)
    assert "extended cold encode" in slopes
    kernel = kernel_comparison(codewords=20, candidates=5)
    assert set(kernel) == set(kernels.backends())
    text = format_report(BenchReport(rows, slopes, kernel))
    assert "log-log slope" in text
    assert f"active backend: {kernels.BACKEND}" in text

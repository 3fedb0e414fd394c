import importlib.util
from pathlib import Path

import pytest

from regsem import rewrite

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernel.py"


@pytest.fixture(scope="module")
def bench():
    spec = importlib.util.spec_from_file_location("bench_kernel", BENCH)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_benchmark_runs(bench, capsys):
    bench.main(["--words", "200", "--maxlen", "8", "--members", "lz2,b2"])
    out = capsys.readouterr().out
    assert "lz2" in out and "normal_form" in out


def test_backend_selected():
    assert rewrite.KERNEL_BACKEND in ("cython", "python")

import functools

import pytest

from regsem import corpus
from regsem.rewrite import RewriteSystem

try:
    from regsem._kernel import Kernel as CyKernel
except ImportError:
    CyKernel = None
from regsem._kernel_py import Kernel as PyKernel

ACCEPTANCE = pytest.StashKey[dict]()


@functools.lru_cache(maxsize=None)
def system(name, **kw):
    return RewriteSystem(corpus.load(name), **kw)


@pytest.fixture(scope="session", params=["python", "cython"])
def kernel_cls(request):
    if request.param == "cython":
        if CyKernel is None:
            pytest.skip("compiled kernel not built")
        return CyKernel
    return PyKernel


def pytest_configure(config):
    config.stash[ACCEPTANCE] = {}


@pytest.fixture
def accept(request):
    store = request.config.stash[ACCEPTANCE]

    def record(cid, title, ok, detail=""):
        store[cid] = (title, ok, detail)
        print(f"[{'PASS' if ok else 'FAIL'}] {cid} {title}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(ACCEPTANCE, {})
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(store, key=lambda c: int(c[1:])):
        title, ok, detail = store[cid]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {cid} {title}: {detail}")

import random
from array import array

import pytest
from hypothesis import given, settings, strategies as st

from grasscode import _pykernels, kernels
from grasscode.encoders import decode, get_params

BACKENDS = kernels.backends()


def test_compiled_backend_present():
    """The extension is expected in a normal install; the pure twin always is."""
    assert "python" in BACKENDS
    if "cython" not in BACKENDS:
        pytest.skip("compiled extension not built")


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_gf2_rank_basic(name):
    impl = BACKENDS[name]
    assert impl.gf2_rank([]) == 0
    assert impl.gf2_rank([0b101, 0b011, 0b110]) == 2
    assert impl.gf2_rank([1 << 63, 1, 0]) == 2


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 2 ** 64 - 1), max_size=20))
def test_rank_agrees_across_backends(rows):
    ranks = {impl.gf2_rank(rows) for impl in BACKENDS.values()}
    assert len(ranks) == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(8, 4), (12, 5), (40, 7), (64, 3)]), st.integers(0, 2 ** 32), st.data())
def test_first_conflict_agrees_across_backends(nk, seed, data):
    n, k = nk
    p = get_params(n, k, 2)
    rng = random.Random(seed)
    code = array("Q")
    for _ in range(rng.randrange(0, 40)):
        code.extend(decode(rng.randrange(p.total), p, "extended").bitmasks())
    cand = array("Q", decode(rng.randrange(p.total), p, "extended").bitmasks())
    need = data.draw(st.integers(k, 2 * k + 1))
    ncode = len(code) // k
    start = data.draw(st.integers(0, ncode))
    stop = data.draw(st.integers(-1, ncode))
    results = {impl.first_conflict(code, cand, k, need, start, stop) for impl in BACKENDS.values()}
    assert len(results) == 1


def test_first_conflict_semantics():
    p = get_params(4, 2, 2)
    a = decode(0, p, "extended").bitmasks()
    b = decode(34, p, "extended").bitmasks()
    code = array("Q", a + b)
    for impl in BACKENDS.values():
        assert impl.first_conflict(code, array("Q", a), 2, 3) == 0
        assert impl.first_conflict(code, array("Q", a), 2, 3, start=1) == -1
        assert impl.first_conflict(code, array("Q", b), 2, 3, stop=1) == -1


def test_pure_env_switch(monkeypatch):
    import importlib

    monkeypatch.setenv("GRASSCODE_PURE", "1")
    try:
        reloaded = importlib.reload(kernels)
        assert reloaded.BACKEND == "python"
        assert reloaded.first_conflict is _pykernels.first_conflict
    finally:
        monkeypatch.delenv("GRASSCODE_PURE")
        importlib.reload(kernels)

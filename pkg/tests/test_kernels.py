import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from cigonality import _pykernels, kernels

_ckernels = pytest.importorskip("cigonality._ckernels")


def _base_primes(limit):
    flags = _pykernels.sieve_segment(0, limit + 1, [])
    return [i for i, f in enumerate(flags) if f]


BASE = _base_primes(2000)


def test_backend_selected():
    assert kernels.BACKEND == "cython"


def test_pure_python_env_override():
    code = "import cigonality.kernels as k; print(k.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"CIGONALITY_PURE_PYTHON": "1", "PYTHONPATH": ":".join(sys.path)},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


@settings(max_examples=60)
@given(st.integers(0, 3_000_000), st.integers(0, 5000))
def test_sieve_parity(lo, size):
    hi = lo + size
    assert bytes(_ckernels.sieve_segment(lo, hi, BASE)) == bytes(_pykernels.sieve_segment(lo, hi, BASE))


@given(st.binary(max_size=500).map(lambda b: bytearray(x & 1 for x in b)), st.integers(0, 10**6))
def test_accumulate_parity(flags, offset):
    assert list(_ckernels.accumulate_counts(flags, offset)) == _pykernels.accumulate_counts(flags, offset)


def test_last_deficit_parity():
    flags = _pykernels.sieve_segment(0, 20001, BASE)
    pi = _pykernels.accumulate_counts(flags, 0)
    for n in (1, 2, 5, 17, 100, 400):
        assert _ckernels.last_deficit(pi, n, 20000) == _pykernels.last_deficit(pi, n, 20000)


@given(st.lists(st.integers(1, 40), max_size=5))
def test_box_counts_parity(degrees):
    assert list(_ckernels.box_counts(degrees)) == _pykernels.box_counts(degrees)


@settings(max_examples=150)
@given(
    st.integers(2, 4), st.integers(1, 30), st.integers(1, 30), st.integers(2, 6),
    st.integers(1, 40), st.integers(0, 200),
)
def test_codim2_scan_parity(n, a, b, s, k_lo, width):
    args = (n, a, b, s, k_lo, k_lo + width)
    assert tuple(_ckernels.codim2_scan(*args)) == tuple(_pykernels.codim2_scan(*args))


def test_wrappers_route_big_inputs_to_python():
    big = [2**20, 2**21, 2**22]
    assert kernels.box_counts(big)[:3] == [1, 3, 6]

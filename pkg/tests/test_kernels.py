import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quandlecolor import kernels
from quandlecolor.presentation import (
    Presentation,
    Relation,
    _assignment_block,
    chart_T,
    chart_T0,
    count_colorings,
    is_coloring,
    pack_relations,
)
from quandlecolor.quandle import make_q_n
from strategies import braid_words, quandles

BACKENDS = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])


@st.composite
def presentations(draw):
    rank = draw(st.integers(2, 5))
    rels = draw(st.lists(
        st.tuples(braid_words(rank=rank, max_len=15), st.integers(1, rank), st.integers(1, rank)),
        max_size=5))
    return Presentation(rank, tuple(Relation(w, a, b) for w, a, b in rels))


@pytest.mark.parametrize("backend", BACKENDS)
@settings(max_examples=80)
@given(p=presentations(), q=quandles(max_order=4))
def test_mask_agrees_with_reference_route(backend, p, q):
    block = _assignment_block(0, q.order ** p.rank, q.order, p.rank)
    mask = kernels.get_kernel(backend)(block, *pack_relations(p), q.op, q.inv)
    expected = [is_coloring(p, tuple(int(v) + 1 for v in row), q) for row in block]
    assert mask.tolist() == expected


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("p", [chart_T0(), chart_T(5), chart_T(12)], ids=lambda p: p.name)
def test_backends_agree_on_charts(p):
    q = make_q_n(6)
    assert count_colorings(p, q, backend="numba") == count_colorings(p, q, backend="numpy")


def test_empty_block_and_no_relations():
    for backend in BACKENDS:
        kern = kernels.get_kernel(backend)
        q = make_q_n(3)
        empty = np.zeros((0, 4), dtype=np.int64)
        assert kern(empty, *pack_relations(chart_T0()), q.op, q.inv).shape == (0,)
        block = _assignment_block(0, 81, 3, 4)
        assert kern(block, *pack_relations(Presentation(4)), q.op, q.inv).all()


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_kernel("fortran")


def test_assignment_block_is_lexicographic():
    block = _assignment_block(0, 27, 3, 3)
    assert [tuple(r) for r in block] == sorted(tuple(r) for r in block)
    assert block[5].tolist() == [0, 1, 2]
    assert _assignment_block(5, 7, 3, 3).tolist() == [[0, 1, 2], [0, 2, 0]]


def _backend_in_subprocess(flag):
    env = dict(os.environ)
    env.pop(kernels.ENV_FLAG, None)
    if flag is not None:
        env[kernels.ENV_FLAG] = flag
    out = subprocess.run([sys.executable, "-c", "from quandlecolor import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_env_flag_selects_numpy():
    assert _backend_in_subprocess("1") == "numpy"
    if kernels.HAVE_NUMBA:
        assert _backend_in_subprocess(None) == "numba"
        assert _backend_in_subprocess("0") == "numba"


def test_benchmark_script_runs():
    script = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_backends.py"
    out = subprocess.run([sys.executable, str(script), "--repeat", "1"],
                         capture_output=True, text=True, timeout=300)
    assert out.returncode == 0, out.stderr
    assert out.stdout.splitlines()[0].startswith("chart")

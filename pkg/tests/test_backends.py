import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blowup import _linalg_py, linalg
from blowup.invariants import compute_invariants
from blowup.selftest import spec_of

try:
    from blowup import _linalg_ext
except ImportError:  # extension not built
    _linalg_ext = None

needs_ext = pytest.mark.skipif(_linalg_ext is None, reason="compiled backend not built")

entries = st.fractions(min_value=-50, max_value=50, max_denominator=20)
vectors = st.dictionaries(st.integers(0, 11), entries, max_size=6)
big = st.fractions(min_value=-(10**40), max_value=10**40, max_denominator=10**25)


def dense_rank(rows, width):
    m = [[Fraction(r.get(c, 0)) for c in range(width)] for r in rows]
    rank = 0
    for col in range(width):
        piv = next((t for t in range(rank, len(m)) if m[t][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for t in range(len(m)):
            if t != rank and m[t][col]:
                f = m[t][col] / m[rank][col]
                m[t] = [a - f * b for a, b in zip(m[t], m[rank])]
        rank += 1
    return rank


@given(st.lists(vectors, max_size=14))
def test_python_rank_matches_dense(vs):
    assert _linalg_py.rank(vs) == dense_rank(vs, 12)


@given(st.lists(vectors, max_size=14))
def test_kernel_vectors_are_relations(vs):
    for rel in _linalg_py.kernel(vs):
        total = {}
        for t, c in rel.items():
            for col, v in vs[t].items():
                total[col] = total.get(col, 0) + c * v
        assert not any(total.values())
    assert len(_linalg_py.kernel(vs)) == len(vs) - dense_rank(vs, 12)


@given(st.lists(vectors, min_size=1, max_size=10), vectors)
def test_express_reconstructs(vs, target):
    tr = _linalg_py.TrackedReducer()
    for v in vs:
        tr.push(v)
    coeffs = tr.express(target)
    in_span = dense_rank(vs + [target], 12) == dense_rank(vs, 12)
    assert (coeffs is not None) == in_span
    if coeffs is not None:
        total = {}
        for t, c in coeffs.items():
            for col, v in vs[t].items():
                total[col] = total.get(col, 0) + c * v
        assert {k: v for k, v in total.items() if v} == {k: v for k, v in target.items() if v}


@needs_ext
@settings(max_examples=200)
@given(st.lists(vectors, max_size=14), vectors)
def test_backends_agree(vs, probe):
    assert _linalg_ext.kernel(vs) == _linalg_py.kernel(vs)
    assert _linalg_ext.echelon_basis(vs) == _linalg_py.echelon_basis(vs)
    rx, rp = _linalg_ext.Reducer(), _linalg_py.Reducer()
    for v in vs:
        assert rx.add(v) == rp.add(v)
    assert rx.pivots == rp.pivots and rx.rank == rp.rank == len(rx)
    assert rx.reduce(probe) == rp.reduce(probe)
    assert rx.contains(probe) == rp.contains(probe)
    tx, tp = _linalg_ext.TrackedReducer(), _linalg_py.TrackedReducer()
    for v in vs:
        assert tx.push(v) == tp.push(v)
    assert tx.count == tp.count
    assert tx.express(probe) == tp.express(probe)


@needs_ext
@given(st.lists(st.dictionaries(st.integers(0, 5), big, max_size=4), max_size=6))
def test_backends_agree_on_big_rationals(vs):
    assert _linalg_ext.echelon_basis(vs) == _linalg_py.echelon_basis(vs)


@pytest.mark.parametrize("backend", [_linalg_py, _linalg_ext])
def test_rejects_floats(backend):
    if backend is None:
        pytest.skip("compiled backend not built")
    with pytest.raises(TypeError):
        backend.Reducer().add({0: 0.5})


@needs_ext
def test_pipeline_agrees_across_backends():
    rows = [(3, "e4+e5"), (3, "e10"), (2, "e3"), (4, "e1+e20")]
    results = {}
    for name in linalg.available_backends():
        with linalg.use_backend(name):
            assert linalg.BACKEND == name
            results[name] = [compute_invariants(spec_of(j, t)).triple for j, t in rows]
    assert results["gmp"] == results["python"]


def test_use_backend_restores():
    before = linalg.BACKEND
    with linalg.use_backend("python"):
        assert linalg.Reducer is _linalg_py.Reducer
    assert linalg.BACKEND == before
    with pytest.raises(ValueError):
        with linalg.use_backend("fortran"):
            pass


def test_environment_forces_fallback():
    env = dict(os.environ, BLOWUP_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from blowup import linalg; print(linalg.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "python"

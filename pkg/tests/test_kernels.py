"""Both kernel implementations must agree bit-for-bit on every input."""

import numpy as np
import pytest

from rotaperm import _kernels
from rotaperm.family import family_from_coeffs, named_family
from rotaperm.field import FieldCtx
from rotaperm.lift import ext_new
from rotaperm.permcheck import family_images

needs_numba = pytest.mark.skipif(
    _kernels.BACKEND != "numba", reason="numba backend unavailable"
)


@needs_numba
def test_scan_parity_on_permutation():
    ctx = FieldCtx(5)
    packed = family_images(ctx, named_family("T4"))
    space = 1 << 15
    assert tuple(_kernels.scan_bijection_numba(packed, space)) == \
        tuple(_kernels.scan_bijection_numpy(packed, space)) == (True, -1, -1)


@needs_numba
def test_scan_parity_on_collision():
    ctx = FieldCtx(3)
    packed = family_images(ctx, family_from_coeffs("00000001"))
    got_nb = tuple(_kernels.scan_bijection_numba(packed, 512))
    got_np = tuple(_kernels.scan_bijection_numpy(packed, 512))
    assert got_nb == got_np
    ok, at, first = got_nb
    assert not ok
    assert packed[at] == packed[first] and first < at


@needs_numba
def test_interp_parity_random_values():
    ext = ext_new(FieldCtx(3))
    ext._ensure_tables()
    rng = np.random.default_rng(21)
    logv = rng.integers(-1, ext.group, size=ext.group, dtype=np.int64)
    a = _kernels.interp_coeffs_numba(logv, ext._exp, ext.group)
    b = _kernels.interp_coeffs_numpy(logv, ext._exp, ext.group)
    assert np.array_equal(a, b)


@needs_numba
def test_eval_terms_parity_random_terms():
    ext = ext_new(FieldCtx(3))
    ext._ensure_tables()
    rng = np.random.default_rng(22)
    exps = rng.integers(0, ext.group + 1, size=17, dtype=np.int64)
    logcs = rng.integers(0, ext.group, size=17, dtype=np.int64)
    a = _kernels.eval_terms_numba(exps, logcs, ext._exp, ext.group)
    b = _kernels.eval_terms_numpy(exps, logcs, ext._exp, ext.group)
    assert np.array_equal(a, b)


def test_worker_count_env(monkeypatch):
    from rotaperm.search import worker_count
    monkeypatch.setenv("ROTAPERM_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("ROTAPERM_THREADS", "0")
    assert worker_count() >= 1
    monkeypatch.setenv("ROTAPERM_THREADS", "nonsense")
    assert worker_count() >= 1
    monkeypatch.delenv("ROTAPERM_THREADS")
    assert worker_count() >= 1

"""End-to-end smoke tests for the python bindings."""

import numpy as np
import pytest

import tfa


@pytest.fixture
def grid():
    return tfa.Grid(t0=-4.0, dt=1 / 32, n=256)


def test_grid_fields(grid):
    assert grid.n == 256
    assert grid.nyquist() == pytest.approx(16.0)
    assert grid.time(0) == pytest.approx(-4.0)


def test_tone_wigner_marginal(grid):
    f = tfa.gen_tone(grid, xi0=0.5)
    W = tfa.wigner(f, boundary="periodized")
    V = W.values
    assert V.shape == (256, 512)
    assert W.kind == "real"
    assert np.all(np.abs(V.imag) == 0.0)

    m = np.asarray(tfa.marginal_freq(W))
    assert m == pytest.approx(np.abs(np.asarray(f.samples)) ** 2, abs=1e-9)

    # unit-modulus tone: energy = n * dt
    assert tfa.total_energy(W) == pytest.approx(256 / 32, rel=1e-9)


def test_dft_roundtrip(grid):
    f = tfa.gen_bandlimited(grid, -2.0, 2.0, seed=5)
    x = np.asarray(f.samples)
    F = np.asarray(tfa.dft(x, grid.t0, grid.dt))
    back = np.asarray(tfa.idft(F, grid.t0, grid.dt))
    np.testing.assert_allclose(back, x, atol=1e-13)


def test_bandlimited_determinism(grid):
    a = np.asarray(tfa.gen_bandlimited(grid, -2.0, 2.0, seed=9).samples)
    b = np.asarray(tfa.gen_bandlimited(grid, -2.0, 2.0, seed=9).samples)
    assert a.tobytes() == b.tobytes()


def test_if_estimators_on_tone(grid):
    f = tfa.gen_tone(grid, xi0=0.25)
    pg = tfa.if_phase_gradient(f)
    mm = tfa.if_moment(f, boundary="periodized")
    assert np.asarray(pg.values)[np.asarray(pg.valid)] == pytest.approx(0.25, abs=1e-8)
    cmp = tfa.compare_if(pg, mm)
    assert cmp.n_compared == 256
    assert cmp.max_abs_err < 1e-8


def test_stft_shape_and_ridge(grid):
    f = tfa.gen_chirp(grid, rate=2.0, envelope_a=0.05)
    V = tfa.stft(f, window_a=2.0, oversample=2)
    assert V.values.shape == (256, 512)
    assert V.kind == "complex"


def test_signal_constructor_checks(grid):
    with pytest.raises(Exception):
        tfa.Signal(grid, np.zeros(100, dtype=complex))  # wrong length
    s = tfa.Signal(grid, np.asarray(tfa.gen_tone(grid, 1.0).samples))
    assert s.grid.n == 256


def test_classify_vcon_gaussian(grid):
    g = tfa.gen_gaussian(grid, a=1.0)
    rep = tfa.classify_vcon(g, window_a=2.0, slopes=[0.5, 1.0, 2.0, 4.0])
    assert [r["class"] for r in rep["records"]] == ["rapid"] * 4
    assert rep["critical_B"] is None
    assert rep["monotonic"] is True


def test_run_verification_subset():
    rep = tfa.run_verification(only="hudson")
    assert rep["all_pass"] is True
    assert [r["name"] for r in rep["identities"]] == ["hudson_gaussian", "hudson_two_tone"]


def test_cross_wigner_hermitian(grid):
    f = tfa.gen_bandlimited(grid, -2.0, 2.0, seed=1)
    h = tfa.gen_bandlimited(grid, -2.0, 2.0, seed=2)
    Wfh = tfa.cross_wigner(f, h).values
    Whf = tfa.cross_wigner(h, f).values
    assert np.max(np.abs(Wfh - np.conj(Whf))) < 1e-12 * np.max(np.abs(Wfh))

import math
import os
import subprocess

import pytest

import stieltjes as st


def test_rs_integral_t_dt2():
    r = st.rs_integral(lambda t: t, lambda t: t * t, 0.0, 1.0, rel_tol=1e-6)
    assert r["status"] == "Converged"
    assert abs(r["value"] - 2.0 / 3.0) < 1e-6
    assert r["levels"]


def test_pathological_diverges():
    g = st.zoo("pathological_example1")
    r = st.rs_integral(g, lambda t: t, 0.0, 1.0)
    assert r["status"] == "Diverged"


def test_zoo_and_catalog():
    names = [n for n, _, _ in st.catalog()]
    assert "cantor" in names and "step2pi" in names
    s = st.zoo("step2pi", ["0.5"])
    assert s.jumps() == [(0.5, pytest.approx(2 * math.pi))]
    assert s(1.0) == pytest.approx(2 * math.pi)
    assert st.cantor(20)(0.0) == 0.5
    with pytest.raises(ValueError):
        st.zoo("nope")


def test_kernels():
    a = st.analytic_kernel(0.2, 0.6, 1.0)
    assert a.real == pytest.approx(st.poisson(0.6, 0.8))
    assert a.imag == pytest.approx(st.conj_poisson(0.6, 0.8))
    with pytest.raises(ValueError):
        st.poisson(1.0, 0.1)


def test_step_transform_collapses():
    phi = st.zoo("step2pi", ["0.0"])
    u = st.transform(phi, "U", 0.5, 0.0)
    assert u["value"].real == pytest.approx(3.0, abs=1e-10)
    c = st.transform(phi, "C", 0.5, 1.0)
    expect = 1 / (1 - 0.5 * complex(math.cos(1.0), math.sin(1.0)))
    assert abs(c["value"] - expect) < 1e-10


def test_hilbert_and_singular_cauchy():
    h = st.hilbert(st.zoo("sin"), 0.7)
    assert h["value"] == pytest.approx(math.sin(0.7), abs=1e-4)
    assert st.corollary10_residual(st.zoo("sin"), 0.7) < 1e-3
    with pytest.raises(ValueError):
        st.hilbert(st.zoo("step2pi", ["1.0"]), 1.0)


def test_duality():
    assert st.duality_residual(st.zoo("sin"), 0.5, 0.3) < 1e-7


def test_cli_exit_code():
    cli = os.environ.get("STIELTJES_CLI")
    if not cli:
        pytest.skip("STIELTJES_CLI not set")
    p = subprocess.run([cli, "integrate", "--g", "poly:t", "--f", "poly:t2", "--a", "0", "--b", "1"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert "Converged" in p.stdout

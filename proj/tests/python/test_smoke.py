"""Smoke tests for the python bindings and the CLI binary."""

import math
import os
import subprocess
import sys

import pytest

sys.path.insert(0, os.environ.get("QTT_PY_DIR", ""))

qttsim = pytest.importorskip("qttsim")


def table_device(lam=4.0):
    return qttsim.make_device(qttsim.make_spec_relative(5.0, lam, 0.01))


def test_spec_and_hamiltonian():
    spec = qttsim.make_spec_relative(5.0, 4.0, 0.01)
    assert spec.omega1 == pytest.approx(1.0)
    assert spec.omega3 == pytest.approx(6.0)
    H = qttsim.build_hamiltonian(spec)
    assert H.shape == (6, 6)
    assert H[4, 2] == pytest.approx(spec.g)
    es = qttsim.eigensystem(H, spec)
    assert es.energies[5] == 0.0
    assert es.energies[1] == pytest.approx(spec.omega3 - spec.g)


def test_steady_state_conservation_and_gibbs():
    dev = table_device()
    bs = qttsim.BathSettings()
    rep = qttsim.evaluate_point(dev, bs, 0.5)
    assert rep.J_S == pytest.approx(1.413830738319739e-08, rel=1e-9)
    assert rep.J_S + rep.J_M + rep.J_D == pytest.approx(0.0, abs=1e-18)

    baths = qttsim.bath_specs(dev.spec, 1.0, 1.0, 1.0, 100.0, 1.0)
    rates = qttsim.golden_rule_rates(dev.channels, baths, 0.01 * dev.spec.g, dev.spec.g)
    ss = qttsim.steady_state(qttsim.build_rate_matrix(dev.channels, rates))
    z = sum(math.exp(-e) for e in dev.es.energies)
    for p, e in zip(ss.populations, dev.es.energies):
        assert p == pytest.approx(math.exp(-e) / z, abs=1e-10)


def test_switch_and_suppression():
    sw = qttsim.switch_characterize(table_device(), qttsim.BathSettings(), 0.25, 0.50)
    assert sw.contrast == pytest.approx(6.8240413, rel=1e-6)
    lhs, rhs, ok = qttsim.check_suppression(1.0, 1.0, 2.0, 5.0 / 7.0)
    assert rhs == pytest.approx(1.4)
    assert not ok


def test_circuit_path():
    params = qttsim.RawCircuitParams(
        C1=3.2, C2=1.5, C3=3.9, Cg1=0.08, Cg2=0.085, L2=0.32,
        EJ1=10.694872222853828, EJ3=14.0)
    dp = qttsim.derive_device_params(params)
    lv = qttsim.transmon_levels(dp)
    assert lv.omega1 + lv.omega2 == pytest.approx(lv.omega3, rel=1e-12)
    assert qttsim.dispersive_coupling(dp, lv) > 0.0


def test_run_sweep_csv():
    cfg = "[sweep]\nT_M_points = 5\nT_M_min = 0.3\nT_M_max = 0.7\nlambdas = 4.0\n"
    csv = qttsim.run_sweep_csv(cfg, workers=1)
    lines = csv.strip().split("\n")
    assert lines[0].startswith("lambda,T_M,J_S,J_M,J_D")
    assert len(lines) == 6


def test_cli_exit_codes(tmp_path):
    sim = os.environ.get("QTT_SIM_BIN")
    if not sim or not os.path.exists(sim):
        pytest.skip("sim binary not available")

    good = tmp_path / "good.conf"
    good.write_text("")
    assert subprocess.run([sim, "validate", "--config", str(good)],
                          capture_output=True).returncode == 0

    bad = tmp_path / "bad.conf"
    bad.write_text("[baths]\nT_D = -1\n")
    assert subprocess.run([sim, "validate", "--config", str(bad)],
                          capture_output=True).returncode == 2

    out = subprocess.run(
        [sim, "switch", "--config", str(good), "--t-off", "0.25", "--t-on", "0.5"],
        capture_output=True, text=True)
    assert out.returncode == 0
    assert "contrast" in out.stdout

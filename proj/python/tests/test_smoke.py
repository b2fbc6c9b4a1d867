import math

import pytest

import pdmscatter as pdm


def test_pure_dprime_value():
    s = pdm.amplitudes_pure_dprime(4.0 / 9.0)
    assert s.r.real == pytest.approx(-0.4235294117647059, abs=1e-15)
    assert s.t.real == pytest.approx(0.9058823529411765, abs=1e-15)
    assert s.k is None


def test_jump_coupling_and_reduction():
    profile = pdm.MassProfile.heaviside_mu(1.0)
    assert pdm.jump_coupling(profile) == pytest.approx(4.0 / 9.0)
    point = pdm.reduce_point_interaction(
        profile, pdm.preset("MM1_derived"), pdm.CouplingMode.Pipeline
    )
    assert point.delta_prime_coupling == pytest.approx(-1.0 / 9.0)


def test_obstruction_raises():
    profile = pdm.MassProfile.heaviside_mu(1.0)
    with pytest.raises(pdm.PdmError, match="DeltaSquaredObstruction"):
        pdm.reduce_point_interaction(profile, pdm.preset("ZhuKroemer"))


def test_delta2_free_roots():
    alphas = [p.alpha for p in pdm.solve_delta2_free_symmetric()]
    assert alphas == [-0.25, 0.25]
    assert pdm.coefficients(pdm.preset("MM")).G1 == 0.0


def test_unitarity_with_delta():
    for a in (-1.0, 0.5, 2.0):
        for u0 in (-1.5, 0.0, 1.0):
            s = pdm.amplitudes_with_delta(a, u0, 0.7)
            assert abs(s.unitarity_defect) < 1e-12


def test_bound_state():
    assert pdm.bound_state(1.0, 0.0) == pytest.approx(-0.5)
    assert pdm.bound_state(0.0, 1.0) is None


def test_xspace_sharp_step():
    cfg = pdm.SolverConfig()
    cfg.energy = 0.7
    cfg.segment_count = 200
    s = pdm.scatter_pdm_xspace(pdm.MassProfile.heaviside(1.0, 2.5, 4.0), cfg)
    assert abs(s.r) == pytest.approx(1.0 / 3.0, abs=1e-10)
    assert s.prob_t == pytest.approx(8.0 / 9.0, abs=1e-10)


def test_sweep_and_cli():
    text = pdm.sweep_mu_csv(0.0, 2.0, 5)
    lines = text.strip().split("\n")
    assert lines[0].startswith("mu,u0,")
    assert len(lines) == 6
    code, out, err = pdm.run_cli(["scatter", "analytic", "--mu", "1"])
    assert code == 0 and err == ""
    assert "R = -0.42352941176470588" in out
    code, _, _ = pdm.run_cli(["scatter", "analytic", "--mu", "-3"])
    assert code == 3
    assert math.isfinite(pdm.mass_at(pdm.MassProfile.heaviside_mu(2.0), 0.0))

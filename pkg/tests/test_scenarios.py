import numpy as np
import pytest

from twinqubit.lindblad import SimulationConfig
from twinqubit.scenarios import (
    BELL,
    SEPARABLE,
    SweepSpec,
    bell_state,
    builtin_scenarios,
    expand_sweep,
    initial_states,
    run_scenario,
    scenario_registry,
    separable_state,
)
from dataclasses import replace

# Reference parameter table, duplicated by hand so registry edits fail loudly:
# (epsilon, j_zz, j_xx, a_pulse, beta_pulse, gamma_amp, gamma_deph, g_pulse)
EXPECTED_PARAMS = {
    "fig1_top": (0.01, 0.5, 0.5, 1.0, 1.0, 0.01, 0.01, 0.01),
    "fig1_bottom": (5.0, 0.5, 0.5, 1.0, 1.0, 0.01, 0.01, 0.01),
    "fig2_top": (0.1, 0.01, 1.0, 1.0, 1.0, 0.01, 0.01, 0.01),
    "fig2_bottom": (0.1, 5.0, 1.0, 1.0, 1.0, 0.01, 0.01, 0.01),
    "fig3_top": (0.1, 1.0, 0.1, 1.0, 1.0, 0.01, 0.01, 0.01),
    "fig3_bottom": (0.1, 1.0, 1.0, 1.0, 1.0, 0.01, 0.01, 0.01),
    "fig4_top": (0.1, 1.0, 1.0, 1.0, 1.0, 0.01, 0.01, 0.01),
    "fig4_bottom": (0.1, 1.0, 1.0, 1.0, 1.0, 0.1, 0.01, 0.01),
    "fig5_top": (0.1, 1.0, 1.0, 1.0, 1.0, 0.01, 0.01, 0.01),
    "fig5_bottom": (0.1, 1.0, 1.0, 1.0, 1.0, 0.01, 0.1, 0.01),
    "fig6_top": (0.1, 0.5, 0.5, 0.01, 1.0, 0.01, 0.01, 0.01),
    "fig6_bottom": (0.1, 0.5, 0.5, 10.0, 1.0, 0.01, 0.01, 0.01),
    "fig7_top": (0.1, 0.5, 0.5, 5.0, 0.1, 0.01, 0.01, 0.01),
    "fig7_bottom": (0.1, 0.5, 0.5, 5.0, 5.0, 0.01, 0.01, 0.01),
    "fig8_top": (0.1, 1.0, 1.0, 1.0, 1.0, 0.01, 0.01, 0.01),
    "fig8_bottom": (0.1, 1.0, 1.0, 1.0, 1.0, 0.01, 0.01, 5.0),
}


def quick_sim():
    return SimulationConfig(t_max=1.0, dt=1e-2, sample_stride=10)


def test_bell_state_matrix():
    expected = np.zeros((4, 4), dtype=complex)
    for i in (0, 3):
        for j in (0, 3):
            expected[i, j] = 0.5
    state = bell_state()
    assert state.kind == BELL
    assert np.array_equal(state.matrix, expected)


def test_separable_state_matrix():
    state = separable_state()
    assert state.kind == SEPARABLE
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 0] = 1.0
    assert np.array_equal(state.matrix, expected)


def test_registry_has_sixteen_scenarios():
    scenarios = builtin_scenarios()
    assert len(scenarios) == 16
    assert sorted(s.name for s in scenarios) == sorted(EXPECTED_PARAMS)


def test_scenarios_match_reference_table():
    for s in builtin_scenarios():
        eps, j_zz, j_xx, a, beta, g_amp, g_deph, g = EXPECTED_PARAMS[s.name]
        assert s.system.epsilon0 == eps and s.system.epsilon1 == eps
        assert s.system.j_zz == j_zz
        assert s.system.j_xx == j_xx
        assert s.pulse.a_pulse == a
        assert s.pulse.beta_pulse == beta
        assert s.pulse.t0 == 15.0
        assert s.rates.gamma_amp == g_amp
        assert s.rates.gamma_deph == g_deph
        assert s.rates.g_pulse == g
        assert s.sim.t_max == 30.0
        assert s.sim.dt == 1e-3


def test_fig1_top_example():
    s = scenario_registry()["fig1_top"]
    assert (s.system.epsilon0, s.system.j_zz, s.system.j_xx) == (0.01, 0.5, 0.5)
    assert (s.rates.gamma_amp, s.rates.gamma_deph, s.rates.g_pulse) == (0.01, 0.01, 0.01)
    assert s.pulse.a_pulse == 1.0


def test_fig6_bottom_example():
    s = scenario_registry()["fig6_bottom"]
    assert s.pulse.a_pulse == 10.0
    assert (s.system.j_zz, s.system.j_xx) == (0.5, 0.5)
    assert s.system.epsilon0 == 0.1


def test_fig7_top_example():
    s = scenario_registry()["fig7_top"]
    assert s.pulse.beta_pulse == 0.1
    assert s.pulse.a_pulse == 5.0


def test_run_scenario_initial_samples():
    base = scenario_registry()["fig1_top"]
    quick = replace(base, sim=quick_sim())
    results = run_scenario(quick)
    assert set(results) == {BELL, SEPARABLE}
    bell_first = results[BELL][0]
    assert bell_first.t == 0.0
    assert bell_first.ng == pytest.approx(0.5, abs=1e-12)
    sep_first = results[SEPARABLE][0]
    assert sep_first.ng == pytest.approx(0.0, abs=1e-12)
    assert sep_first.u_approx == pytest.approx(2.0, abs=1e-12)


def test_run_scenario_is_deterministic():
    quick = replace(scenario_registry()["fig3_top"], sim=quick_sim())
    first = run_scenario(quick)
    second = run_scenario(quick)
    for kind in (BELL, SEPARABLE):
        assert first[kind] == second[kind]


def test_initial_states_both_kinds():
    kinds = [s.kind for s in initial_states()]
    assert kinds == [BELL, SEPARABLE]


def test_expand_sweep_reproduces_fig4_pair():
    registry = scenario_registry()
    spec = SweepSpec(base=registry["fig4_top"], axis="gamma_amp", values=(0.01, 0.1))
    expanded = expand_sweep(spec)
    assert [s.name for s in expanded] == ["fig4_top_gamma_amp_0.01", "fig4_top_gamma_amp_0.1"]
    assert expanded[0].rates == registry["fig4_top"].rates
    assert expanded[1].rates == registry["fig4_bottom"].rates
    assert expanded[1].system == registry["fig4_bottom"].system
    assert expanded[1].pulse == registry["fig4_bottom"].pulse


def test_expand_sweep_epsilon_reproduces_fig1_pair():
    registry = scenario_registry()
    spec = SweepSpec(base=registry["fig1_top"], axis="epsilon", values=(0.01, 5.0))
    expanded = expand_sweep(spec)
    assert expanded[0].system == registry["fig1_top"].system
    assert expanded[1].system == registry["fig1_bottom"].system


def test_expand_sweep_empty_values():
    spec = SweepSpec(base=scenario_registry()["fig1_top"], axis="j_xx", values=())
    assert expand_sweep(spec) == []


def test_expand_sweep_rejects_unknown_axis():
    spec = SweepSpec(base=scenario_registry()["fig1_top"], axis="flux", values=(1.0,))
    with pytest.raises(ValueError, match="unknown sweep axis"):
        expand_sweep(spec)


def test_expand_sweep_pulse_axis():
    spec = SweepSpec(base=scenario_registry()["fig7_top"], axis="beta_pulse", values=(0.1, 5.0))
    expanded = expand_sweep(spec)
    assert expanded[1].pulse.beta_pulse == 5.0
    assert expanded[1].pulse.a_pulse == 5.0

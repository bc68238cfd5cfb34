import math

import pytest

import afsa_wsn


def test_energy_model():
    assert afsa_wsn.tx_energy(4000, 100.0) == pytest.approx(4.2e-3, rel=1e-15)
    assert afsa_wsn.rx_energy(4000) == pytest.approx(2.0e-4, rel=1e-15)
    assert afsa_wsn.aggregation_energy(4000, 3) == pytest.approx(6.0e-5, rel=1e-15)
    with pytest.raises(ValueError):
        afsa_wsn.tx_energy(4000, -1.0)


def test_geometry_and_fitness():
    a, b = afsa_wsn.Position(0, 0), afsa_wsn.Position(3, 4)
    assert afsa_wsn.euclidean_distance(a, b) == 5.0
    nodes = [afsa_wsn.NodeState(i, afsa_wsn.Position(x, y), 1.0) for i, (x, y) in enumerate([(0, 0), (10, 0), (0, 10)])]
    expected = sum(min(math.dist((n.pos.x, n.pos.y), h) for h in [(0, 0), (10, 0)]) for n in nodes)
    assert afsa_wsn.fitness([0, 0, 10, 0], nodes) == pytest.approx(expected)
    plan = afsa_wsn.assign_members(nodes, [0, 1])
    assert plan.heads == [0, 1]
    assert plan.membership == {2: 0}
    assert afsa_wsn.cluster_count(100, 0.05) == 5
    assert afsa_wsn.cluster_count(9, 0.05) == 1


def test_config_round_trip_and_errors():
    cfg = afsa_wsn.parse_config('{"network": {"nodes_count": 30}}')
    assert cfg.network.nodes_count == 30
    assert cfg.network.base_station == afsa_wsn.Position(50, 175)
    assert '"nodes_count": 30' in cfg.to_json()
    with pytest.raises(afsa_wsn.ConfigError, match="cluster_fraction"):
        afsa_wsn.parse_config('{"network": {"cluster_fraction": 1.5}}')


def test_simulation_is_deterministic():
    cfg = afsa_wsn.parse_config('{"network": {"nodes_count": 30, "max_rounds": 40}}')
    a = afsa_wsn.run_simulation(cfg, "modified-afsa", seed=5)
    b = afsa_wsn.run_simulation(cfg, afsa_wsn.Algorithm.MODIFIED_AFSA, seed=5)
    assert a.rounds_csv() == b.rounds_csv()
    assert 1 <= len(a.rounds) <= 40
    energies = [r.total_energy for r in a.rounds]
    assert all(x > y for x, y in zip(energies, energies[1:]))
    with pytest.raises(ValueError, match="valid names"):
        afsa_wsn.run_simulation(cfg, "ica")


def test_experiment_summary():
    cfg = afsa_wsn.parse_config('{"network": {"nodes_count": 20, "max_rounds": 30}}')
    summary = afsa_wsn.run_experiment(cfg, ["leach", "pso"], repetitions=2, base_seed=1, jobs=2)
    assert [s.algorithm for s in summary.algorithms] == ["leach", "pso"]
    assert summary.summary_csv().startswith("algorithm,fnd_mean,fnd_std,lnd_mean,lnd_std\n")
    for s in summary.algorithms:
        assert len(s.energy_curve) == 31
        assert s.energy_curve[0] == pytest.approx(20 * cfg.network.initial_energy)

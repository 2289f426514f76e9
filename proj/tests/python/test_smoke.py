"""Smoke tests for the python bindings; the heavy checks live in the C++ suites."""

import math

import pytest

import phyta


def test_fuzzy_arithmetic_and_distance():
    a = phyta.TriangularFuzzy(8, 10, 12)
    b = phyta.TriangularFuzzy(4, 5, 6)
    assert a + b == phyta.TriangularFuzzy(12, 15, 18)
    assert a - b == phyta.TriangularFuzzy(2, 5, 8)
    assert a * b == phyta.TriangularFuzzy(32, 50, 72)
    assert a / b == phyta.TriangularFuzzy(8 / 6, 2, 3)
    d = phyta.dis_tri(phyta.TriangularFuzzy(8, 10, 12), phyta.TriangularFuzzy(4, 5, 6))
    assert d == pytest.approx(math.sqrt(152 / 6), rel=1e-12)
    assert phyta.dis_numeric(a, b, p=2.0, q=0.5, steps=10000) == pytest.approx(d, abs=1e-6)
    assert phyta.defuzzify_centroid(a) == pytest.approx(10.0)
    with pytest.raises(phyta.PhytaError):
        a / phyta.TriangularFuzzy(-1, 0, 1)


def test_network_and_fixtures():
    assert set(phyta.fixture_names()) == {"ramazani4", "ghatee13"}
    net = phyta.load_fixture("ramazani4")
    assert len(net.nodes) == 4
    assert len(net.links) == 6
    assert net.demands[0].q == 700.0
    again = phyta.network_from_json(phyta.network_to_json(net))
    assert [(l.i, l.j) for l in again.links] == [(l.i, l.j) for l in net.links]
    custom = phyta.Network(
        nodes=[1, 2, 3],
        links=[(1, 2, 4.0, 100.0), (2, 3, 5.0, 100.0)],
        demands=[(1, 3, 10.0)],
    )
    assert len(custom.links) == 2
    with pytest.raises(phyta.PhytaError):
        phyta.load_fixture("missing")


def test_fuzzy_assignment_runs():
    net = phyta.load_fixture("ramazani4")
    config = phyta.SolverConfig()
    config.max_iters = 50
    result = phyta.fue_run(net, config)
    assert len(result.flows) == 6
    assert sum(result.flows[i] for i in (0, 1, 4)) == pytest.approx(700.0)
    assert result.wardrop_gap < 0.10
    assert {tuple(p.nodes) for p in result.paths} == {(1, 2, 4), (1, 3, 4), (1, 4)}


def test_crisp_baseline_and_shortest_path():
    net = phyta.load_fixture("ramazani4")
    crisp = phyta.fw_solve(net, phyta.FWConfig())
    assert crisp.converged
    assert crisp.objective == pytest.approx(
        phyta.beckmann_objective(net, crisp.flows), rel=1e-12
    )
    path = phyta.shortest_path(net, [l.c0 for l in net.links], 1, 4)
    assert path.nodes == [1, 2, 4]

import numpy as np
import pytest
from sklearn.base import clone

from spinlogic import gates as G
from spinlogic.circuits import adder_io, compile_netlist, evaluate_netlist, full_adder, ripple_adder
from spinlogic.errors import ParameterError, RoleError
from spinlogic.poly import SpinPolynomial, evaluate, spectrum
from spinlogic.solver import AnnealConfig, SimulatedAnnealer, anneal, default_t_hi, read_wires


def to_int(bits):
    return sum(b << i for i, b in enumerate(bits))


def test_nand_single_restart():
    h = G.nand_family()
    wins = sum(anneal(h, -3, AnnealConfig(sweeps=1000, restarts=1, seed=s)).success
               for s in range(100))
    assert wins >= 99


@pytest.mark.parametrize("variant", ["all-nand", "standard"])
def test_full_adder_default_config(variant):
    c = compile_netlist(full_adder(variant))
    exact = spectrum(c.hamiltonian).ground_energy
    wins = 0
    for s in range(100):
        r = anneal(c.hamiltonian, exact, AnnealConfig(seed=s))
        assert r.best_energy >= exact
        wins += r.success
    assert wins >= 99


def test_seed_and_thread_determinism():
    c = compile_netlist(ripple_adder(2, "all-nand"))
    a = anneal(c.hamiltonian, None, AnnealConfig(sweeps=300, restarts=6, seed=7))
    b = anneal(c.hamiltonian, None, AnnealConfig(sweeps=300, restarts=6, seed=7, threads=3))
    assert a.best == b.best
    assert a.restart_energies == b.restart_energies
    d = anneal(c.hamiltonian, None, AnnealConfig(sweeps=300, restarts=6, seed=8))
    assert d.restart_energies != a.restart_energies or d.best != a.best


def test_best_never_above_visited():
    c = compile_netlist(ripple_adder(3, "standard"))
    r = anneal(c.hamiltonian, None, AnnealConfig(sweeps=200, restarts=4, seed=1), keep_trace=True)
    assert r.best_energy == min(r.restart_energies)
    for e, e0, trace in zip(r.restart_energies, r.initial_energies, r.traces):
        assert e <= e0 + 1e-9
        assert e <= trace.min() + 1e-9
    assert evaluate(c.hamiltonian, r.best) == r.best_energy


def test_clamped_addition_and_read_wires():
    n = 4
    a_w, b_w, s_w = adder_io(n)
    clamps = {**{w: (5 >> i) & 1 for i, w in enumerate(a_w)},
              **{w: (3 >> i) & 1 for i, w in enumerate(b_w)}}
    c = compile_netlist(ripple_adder(n, "all-nand").with_clamps(clamps))
    r = anneal(c.hamiltonian, c.ground_energy_expected, AnnealConfig(seed=0))
    assert r.success
    assert read_wires(r, c, s_w) == (0, 0, 0, 1, 0)
    assert read_wires(r, c, a_w) == (1, 0, 1, 0)
    with pytest.raises(RoleError):
        read_wires(r, c, ["nope"])


def test_xor_ancilla_readout():
    c = compile_netlist("INPUT x y\nOUTPUT z\nXOR x y -> z ANC a\nCLAMP x 0\nCLAMP y 0\n")
    r = anneal(c.hamiltonian, c.ground_energy_expected, AnnealConfig(sweeps=500, seed=3))
    assert r.success
    assert read_wires(r, c, ["z", "a"]) == (0, 1)


def test_carry_out_clamp_finds_overflow():
    n = 4
    net = ripple_adder(n, "all-nand")
    a_w, b_w, s_w = adder_io(n)
    c = compile_netlist(net.with_clamps({s_w[-1]: 1}))
    for seed in range(3):
        r = anneal(c.hamiltonian, c.ground_energy_expected, AnnealConfig(seed=seed))
        if not r.success:
            continue
        a, b = to_int(read_wires(r, c, a_w)), to_int(read_wires(r, c, b_w))
        assert a + b >= 16
        out = evaluate_netlist(net, {w: v for w, v in zip(a_w + b_w, read_wires(r, c, a_w + b_w))})
        assert tuple(out[w] for w in s_w) == read_wires(r, c, s_w)
        return
    pytest.fail("no successful run")


def test_default_temperature():
    c = compile_netlist(ripple_adder(4, "all-nand"))
    assert default_t_hi(c.hamiltonian) == 112


def test_config_validation():
    with pytest.raises(ParameterError):
        AnnealConfig(sweeps=0)
    with pytest.raises(ParameterError):
        AnnealConfig(t_lo=0)
    with pytest.raises(ParameterError):
        AnnealConfig(t_hi=0.01)
    assert AnnealConfig.from_dict({"seed": 4, "other": 1}).seed == 4


def test_empty_polynomial():
    r = anneal(SpinPolynomial.constant(2.0, 0), 2.0)
    assert r.success and r.best_energy == 2.0


def test_estimator_api():
    est = SimulatedAnnealer(sweeps=500, restarts=3, seed=2)
    assert est.get_params()["sweeps"] == 500
    twin = clone(est)
    assert twin.get_params() == est.get_params()
    c = compile_netlist(full_adder("standard").with_clamps({"A": 1, "B": 1, "Cin": 0}))
    est.fit(c)
    assert est.success_
    assert est.predict(["S", "Cout"]) == (0, 1)
    assert est.with_seed(9).seed == 9
    plain = SimulatedAnnealer(sweeps=200, restarts=2).fit(G.nand_family(), -3)
    assert plain.best_energy_ == -3
    with pytest.raises(RoleError):
        plain.predict(["x"])
    np.testing.assert_equal(plain.restart_energies_, plain.result_.restart_energies)

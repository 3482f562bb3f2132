import math

import pytest

import shorphase


def test_register_sizes():
    spec = shorphase.circuit_params(1591, 2)
    assert (spec.p, spec.n, spec.q, spec.width) == (11, 2, 2048, 13)
    with pytest.raises(ValueError):
        shorphase.circuit_params(16, 3)


def test_block_constants():
    assert shorphase.block_coefficient(11, 1591) == 457
    assert shorphase.quantize_phase(math.pi, 3) == 4
    assert shorphase.phase_of(2, 1591) == pytest.approx(2 * math.pi * 2 / 1591)


def test_circuit_text_round_trip():
    qft = shorphase.build_qft(4)
    assert shorphase.parse_circuit(qft.to_text()) == qft
    assert qft.stats()["gate_count"] == 4 + 6 + 2
    assert qft.inverse().inverse().approx_equal(qft)


def test_distributions_agree():
    spec = shorphase.circuit_params(15, 7)
    sim = shorphase.simulate_distribution(spec)
    ref = shorphase.analytic_distribution(spec)
    assert len(sim) == 32
    assert sum(sim) == pytest.approx(1.0)
    assert max(abs(x - y) for x, y in zip(sim, ref)) < 1e-10


def test_big_integers():
    N = 237504336099404000
    l = 59376084469856408
    assert shorphase.postprocess(l, 3, N) == {2, 80}
    assert shorphase.phase_to_l(0.2500000018736728, N) == l
    assert shorphase.gcd(518, 1591) == 37
    assert shorphase.modpow(2, 126, 1591) == 517


def test_oracle():
    assert shorphase.multiplicative_order(2, 1591) == 252
    assert shorphase.multiplicative_order(3, 9) is None
    _, divisors = shorphase.trial_factor(1591)
    assert divisors == [1, 37, 43, 1591]


def test_factor_injector():
    rep = shorphase.factor(1591, 2, backend="injector")
    assert rep["schema_version"] == 1
    assert rep["nontrivial_divisors"] == [37, 43]


def test_factor_simulated_is_deterministic():
    a = shorphase.factor(15, 2, shots=500, seed=3)
    b = shorphase.factor(15, 2, shots=500, seed=3)
    assert a == b
    assert set(a["nontrivial_divisors"]) <= {3, 5}


def test_resource_cap():
    with pytest.raises(shorphase.ResourceError):
        shorphase.factor(67108865, 2)

import json
import math

import numpy as np
import pytest

import jbmeans


def scalar(x):
    return jbmeans.Element(jbmeans.Algebra.real_symmetric(1), np.array([x]))


def test_algebras():
    assert jbmeans.Algebra.albert().dimension == 27
    assert jbmeans.Algebra.parse("herm3").dimension == 9
    assert jbmeans.Algebra.spin_factor(4).rank == 2
    with pytest.raises(ValueError):
        jbmeans.Algebra.parse("nonsense")


def test_scalar_means():
    assert jbmeans.geometric_mean(scalar(4), scalar(9), 0.5).coords[0] == pytest.approx(6.0)
    assert jbmeans.harmonic_mean(scalar(2), scalar(6), 0.5).coords[0] == pytest.approx(3.0)
    assert jbmeans.arithmetic_mean(scalar(2), scalar(6), 0.25).coords[0] == pytest.approx(3.0)


def test_albert_spectrum_and_means():
    alb = jbmeans.Algebra.albert()
    a = jbmeans.random_positive(alb, 0.5, 4.0, seed=1)
    b = jbmeans.random_positive(alb, 0.5, 4.0, seed=2)
    values, mults, idempotents = jbmeans.spectrum(a)
    assert sum(mults) == 3
    assert all(0.5 - 1e-10 <= v <= 4.0 + 1e-10 for v in values)
    rebuilt = sum((v * e for v, e in zip(values, idempotents)), jbmeans.Element.zero(alb))
    assert np.allclose(rebuilt.coords, a.coords, atol=1e-12)

    g = jbmeans.geometric_mean(a, b, 0.3)
    gi = jbmeans.geometric_mean_integral(a, b, 0.3)
    assert jbmeans.spectral_norm(g - gi) <= 1e-6 * jbmeans.spectral_norm(g)
    h = jbmeans.harmonic_mean(a, b, 0.3)
    m = jbmeans.arithmetic_mean(a, b, 0.3)
    assert jbmeans.loewner_leq(h, g)["holds"]
    assert jbmeans.loewner_leq(g, m)["holds"]


def test_domain_errors():
    with pytest.raises(jbmeans.SpectrumDomainError, match="-1"):
        jbmeans.geometric_mean(scalar(-1.0), scalar(2.0), 0.5)
    with pytest.raises(ValueError):
        jbmeans.Element(jbmeans.Algebra.albert(), np.zeros(3))


def test_json_round_trip():
    a = jbmeans.random_positive(jbmeans.Algebra.complex_hermitian(3), 0.1, 10.0, seed=5)
    back = jbmeans.Element.from_json(a.to_json())
    assert np.array_equal(back.coords, a.coords)
    assert json.loads(a.to_json())["kind"] == "complex_hermitian"


def test_integrals_and_probe():
    value, err = jbmeans.power_integral(4.0, 0.5)
    assert value == pytest.approx(2.0, rel=1e-8)
    assert jbmeans.log_integral(math.e)[0] == pytest.approx(1.0, rel=1e-8)
    probe = jbmeans.uniformity_probe("log", 1.0)
    assert probe["decays_monotonically"]
    assert len(probe["head"]) == 4


def test_small_verify_run():
    report = jbmeans.verify({"kinds": ["spin3"], "trials_per_check": 3, "integral_trials": 1})
    assert report["totals"]["fail"] == 0
    assert {c["check_id"] for c in report["checks"]} == set(jbmeans.check_ids())

import math

import pytest

import nevmaj


def test_geometry():
    assert nevmaj.pseudo_dist(0.5, -0.5) == pytest.approx(0.8, rel=1e-15)
    assert nevmaj.mobius(0.5, 0.25) == pytest.approx(0.25 / 0.875, rel=1e-15)
    q = nevmaj.whitney_index(0.9)
    assert (q.level, q.index) == (4, 0)
    assert nevmaj.whitney_index(0.1) is None
    lo, hi = nevmaj.privalov_shadow(0.5)
    assert hi - lo == pytest.approx(4 * math.asin(0.25), rel=1e-15)
    with pytest.raises(ValueError):
        nevmaj.pseudo_dist(1.0, 0.0)


def test_blaschke_and_harmonic():
    zs = nevmaj.ZeroSet([(0.5, 2), (0.9, 3)])
    assert nevmaj.blaschke_sum(zs) == pytest.approx(1.3)
    assert nevmaj.log_modulus(zs, 0) == pytest.approx(2 * math.log(0.5) + 3 * math.log(0.9))
    assert nevmaj.poisson_kernel(0.5, 0.0) == pytest.approx(3.0)
    assert nevmaj.h_square(nevmaj.WhitneySquare(5, 3), 0) == pytest.approx(2.0**-5)
    h = nevmaj.HarmonicFn.constant(2.0) + nevmaj.HarmonicFn.poisson_atom(0.0, 1.0)
    assert h(0.5) == pytest.approx(5.0)
    assert nevmaj.harnack_bounds(1 / 3, 0) == pytest.approx((0.5, 2.0))


def test_json_round_trip():
    zs = nevmaj.ZeroSet([(0.1 - 0.7j, 3)])
    back = nevmaj.ZeroSet.from_json(zs.to_json())
    assert back.zeros() == zs.zeros()
    with pytest.raises(ValueError):
        nevmaj.ZeroSet.from_json("{")


def test_min_mass():
    r = nevmaj.min_mass([(0.5, 1.0)])
    assert r["status"] == "optimal"
    assert r["mass"] == pytest.approx(1 / 3, rel=1e-12)
    assert nevmaj.min_mass([])["mass"] == 0.0


def test_majorant_diagnostic():
    zs = nevmaj.ZeroSet([(0.5, 1)])
    rec = nevmaj.majorant_diagnostic(zs, nevmaj.HarmonicFn.constant(math.log(2)), [3, 4, 5], per_square=8)
    masses = rec["masses"]
    assert all(b >= a * (1 - 1e-12) for a, b in zip(masses, masses[1:]))
    assert rec["classification"] == "bounded"
    assert nevmaj.classify([1.0, 2.0, 4.0]) == "growth"


def test_constructions():
    zeros, eta, radius = nevmaj.family_blaschke([0.5, -0.5], [3, 5])
    assert eta == pytest.approx(0.8)
    assert radius == pytest.approx(0.2)
    assert nevmaj.blaschke_sum(zeros) == pytest.approx(4.0)
    with pytest.raises(RuntimeError):
        nevmaj.thm5a_build(nevmaj.HarmonicFn.constant(1), nevmaj.HarmonicFn.constant(1), 5)

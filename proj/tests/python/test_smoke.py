import math

import pytest

import dual_smale as ds


def test_roots_quadratic():
    roots = ds.find_roots([-1, 0, 1])
    assert sorted(round(r.real, 12) for r, _ in roots) == [-1.0, 1.0]
    assert all(m == 1 for _, m in roots)


def test_metrics_g1():
    coeffs = ds.extremal_g1()
    m = ds.metrics(coeffs)
    for key in ("T", "S", "alpha", "lambda"):
        assert m[key] == pytest.approx(1 / 7 if key != "alpha" else 1.0, abs=1e-10)
    assert m["critical_points"][0]["multiplicity"] == 6


def test_extremal_exact():
    g2 = ds.extremal_metrics("g2")
    assert g2["S_squared"] == "43/1764"
    assert g2["T_squared"] == "1/49"
    with pytest.raises(ValueError):
        ds.extremal_metrics("g4")


def test_parse_errors():
    coeffs, exact = ds.parse_polynomial("0\n1\n1/7\n")
    assert exact and len(coeffs) == 3
    with pytest.raises(ds.InputParseError):
        ds.parse_polynomial("0\n1\nabc\n")


def test_objective_and_refine():
    assert ds.objective([0.0] * 5) == pytest.approx(1 / 49, rel=1e-14)
    t = math.pi / 3
    angles, value = ds.refine([t + 0.01] * 5)
    assert value == pytest.approx(1 / 49, abs=1e-14)
    assert all(abs(a - t) < 1e-6 for a in angles)


def test_grid_scan():
    r = ds.grid_scan(12)
    assert r["grid_min_value"] >= 1 / 49 - 1e-12
    s = ds.scan_and_refine(16)
    assert len(s["orbits"]) == 3


def test_certificate():
    assert ds.verify_identity()["residual_zero"]
    assert ds.verify_lemma(samples=50)["pass"]
    assert ds.verify_equality_cases(samples=50)["pass"]
    assert ds.numeric_oracles(samples=10)["pass"]


def test_sampling():
    assert ds.conjecture_sample_check(3, 100)["pass"]
    assert ds.disc_bound_sample_check(1000)["pass"]

import math

import pytest

import rieszfd


def test_analytic_n4_filter():
    g = rieszfd.build_filter(1.0, 4)
    assert g == pytest.approx([1 + 1 / 12, -1 / 24], abs=1e-12)


def test_classical_reduction():
    xs = [j / 8 for j in range(9)]
    samples = [x * (1 - x) for x in xs]
    out = rieszfd.apply_operator(2.0, 2, samples)
    assert out == pytest.approx([-2.0] * 7, abs=1e-10)


def test_poly_reference_frozen_value():
    v = rieszfd.poly_riesz_exact(6, 0.2, 0.5)
    assert v == pytest.approx(-0.000326157024034155994723274066878, rel=1e-12)


def test_cosine_reference_frozen_value():
    v = rieszfd.cosine_riesz_exact(11, 1.2, 0.3)
    assert v == pytest.approx(49.820032406715512052, rel=1e-8)


def test_stencil_matches_apply():
    k = rieszfd.build_stencil(0.7, 4, 11)
    assert len(k) == 10
    out = rieszfd.apply_operator(0.7, 4, [0.0] * 11)
    assert out == [0.0] * 9


def test_spectral_rate_near_zero():
    assert rieszfd.spectral_rate(1.3, 8, 0.05) == pytest.approx(8.0, abs=0.1)


def test_positivity_and_eigen_bound():
    dominant, margin = rieszfd.positivity_check(1.8, 12)
    assert dominant and margin > 0
    max_eig, bound, within = rieszfd.eigen_bound(1.3, 4, 21)
    assert within and max_eig <= bound


def test_experiment_anchor():
    rows = rieszfd.run_poly_experiment(6, 0.2, [4], levels=2)
    table = {(i, n): (e, r) for i, n, e, r in rows}
    assert table[(0, 4)][0] == pytest.approx(8.492e-07, rel=0.05)
    assert table[(1, 4)][1] is None


def test_validation_errors():
    with pytest.raises(ValueError):
        rieszfd.build_filter(1.0, 5)
    with pytest.raises(ValueError):
        rieszfd.poly_riesz_exact(6, 1.0, 0.5)


def test_gamma():
    assert rieszfd.gamma(6.0) == pytest.approx(120.0, rel=1e-13)
    assert rieszfd.gamma(2.9) == pytest.approx(1.82735508062403609687439212404, rel=1e-13)

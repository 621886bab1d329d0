import math

import pytest

import bergman


def test_eigenvalue_closed_form():
    assert bergman.eigenvalue(1.0, 1, 1) == pytest.approx(0.5)
    assert bergman.eigenvalue(0.5, 1, 0) == pytest.approx(1.0)


def test_multiplicity():
    assert bergman.multiplicity(2, 3) == 4
    assert bergman.multiplicity(1, 7) == 1


def test_singular_values_sorted():
    vals = bergman.singular_values(1.0, 2, 20)
    seq = [v for v, _ in vals]
    assert seq == sorted(seq, reverse=True)
    assert seq[0] == pytest.approx(1.0)


def test_trace_identity():
    converged, value = bergman.schatten_sum(0.5, 1, 1.0)
    assert converged
    assert value == pytest.approx(2.0, rel=1e-8)
    assert bergman.trace_formula(0.5, 1) == pytest.approx(2.0)


def test_schatten_macaev_boundary():
    v = bergman.schatten_macaev(1.0, 2, 1.0)
    assert not v["schatten"]
    assert v["macaev"]
    assert v["hausdorff_dim"] == pytest.approx(1.0)


def test_dixmier_trace():
    assert bergman.dixmier_trace(1.0, 1, 100000) == pytest.approx(1.0, abs=0.01)


def test_fr_series():
    assert bergman.fr_series(1.0, 0.0, 1.0, 1) == pytest.approx(4.0 / math.pi)


def test_berezin_closed():
    assert bergman.berezin_closed(0.5, 1, 0.6) == pytest.approx(0.64**1.5)


def test_compactness_verdicts():
    v = bergman.compactness("5/2", 1, "inf", "1", "kplus")
    assert v == {"compact": "yes", "bounded": "yes", "rule": "Theorem 1 (5b)"}
    v = bergman.compactness("3", 1, "2", "2")
    assert v["compact"] == "no"
    assert v["rule"] == "Cor kcor"


def test_supercritical_raises():
    with pytest.raises(bergman.BergmanError):
        bergman.singular_values(2.5, 1, 3)


def test_nystrom_eigenvalues():
    eigs = bergman.nystrom_eigenvalues(1.0, 1, radial=4, angular=128)
    assert eigs[0] == pytest.approx(1.0, abs=1e-4)
    assert eigs[1] == pytest.approx(0.5, abs=1e-4)


def test_run_suite_classify():
    ok, checks = bergman.run_suite("classify")
    assert ok
    assert all(c["pass"] for c in checks)

from fractions import Fraction

import pytest

import weakforms as wf


def test_dimensions():
    assert wf.genus(11) == 1
    assert wf.lambda_p(11) == 10
    assert wf.lambda_p(37) == 114
    assert wf.dim_M(17, 6) == 8
    assert wf.dim_S(11, 2) == 1


def test_trace_and_hurwitz():
    assert wf.hurwitz(3) == Fraction(1, 3)
    assert wf.hurwitz(4) == Fraction(1, 2)
    traces = [wf.trace_tn(11, 2, n) for n in range(1, 6)]
    assert traces == [1, -2, -1, 2, 1]
    assert all(isinstance(t, Fraction) for t in traces)


def test_gap_sets():
    g = wf.gap_sets(23, 12)
    assert g["miss_M"] == [21]
    assert g["miss_S"] == [21, 22]


def test_weak_basis():
    b = wf.weak_basis(11, 0, "M", 4, 20)
    assert b.index_set() == [0, 2, 3, 4]
    assert len(b) == 4
    assert b.has(2) and not b.has(1)
    lo, coeffs = b.element(0)
    assert lo == 0 and coeffs[0] == 1
    assert all(isinstance(c, Fraction) for c in coeffs)
    assert wf.index_set_predicted(11, 0, "M", 0, 4) == [0, 2, 3, 4]


def test_checks():
    d = wf.duality_check(11, 0, box=12)
    assert d["pass"] and d["checked"] > 0 and not d["violations"]
    g = wf.genfun_check(17, 4, 5, 5, "g")
    assert g["pass"]


def test_run_document():
    doc = wf.run("dims", 17, k_range=(2, 16))
    assert list(doc) == ["command", "config", "results", "pass"]
    assert doc["pass"] is True
    doc = wf.run("trace", 11, k=2, count=3)
    assert [r["trace"] for r in doc["results"]["rows"]] == ["1", "-2", "-1"]


def test_errors():
    with pytest.raises(wf.UsageError):
        wf.run("dims", 9)
    with pytest.raises(ValueError):
        wf.weak_basis(11, 0, "X", 4, 20)
    assert not wf.run("duality", 13, k=0)["pass"]

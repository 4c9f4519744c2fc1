"""Smoke tests for the python bindings; the deep checks live in the C++ suites."""

import pytest

import gwalk


def test_construct_and_predicates():
    g = gwalk.construct("coclique(hamming(3,3),2)")
    assert g.n == 54
    assert g.label == "coclique(hamming(3,3),2)"
    preds = gwalk.basic_predicates(g)
    assert preds["regular"] == 12
    assert preds["connected"]


def test_graph6_round_trip():
    k4 = gwalk.parse_graph6("C~")
    assert k4.n == 4
    assert k4.edge_count() == 6
    assert gwalk.to_graph6(k4) == "C~"


def test_spectrum_strings():
    assert (
        gwalk.spectrum_string(gwalk.construct("hamming(3,3)"))
        == "{[6]^1, [3]^6, [0]^12, [-3]^8}"
    )
    assert gwalk.char_poly_string(gwalk.construct("cycle(3)")) == "x^3 - 3*x - 2"
    values = gwalk.spectrum(gwalk.construct("cycle(5)"))
    assert values[0] == ("2", 1, pytest.approx(2.0))
    assert values[1][1] == 2  # multiplicity of (-1+sqrt 5)/2


def test_pst_and_analyze():
    c4 = gwalk.construct("cycle(4)")
    assert sorted(gwalk.pst_at_time(c4, 2)) == [(0, 2), (1, 3), (2, 0), (3, 1)]
    report = gwalk.analyze(c4)
    assert report["periodic"] is True
    assert {(p["x"], p["y"], p["tau"]) for p in report["pst"]} == {
        (0, 2, 2),
        (1, 3, 2),
        (2, 0, 2),
        (3, 1, 2),
    }

    h33 = gwalk.analyze(gwalk.construct("hamming(3,3)"))
    assert h33["pst"] == []
    assert h33["checked_times"] == [6, 12]


def test_classification():
    assert gwalk.classify_swr(gwalk.construct("hamming(3,3)"))["tag"] == "genuine"
    assert gwalk.classify_swr(gwalk.construct("cycle(7)"))["tag"] == "not-swr"
    assert gwalk.srg_recognize(gwalk.construct("cycle(5)")) == (5, 2, 0, 1)
    assert gwalk.srg_recognize(gwalk.construct("cycle(6)")) is None


def test_tables():
    rows = gwalk.enumerate_tables(20)
    assert len(rows) == 58
    assert rows[0]["spectrum"] == "{[4]^1, [2]^1, [0]^3, [-2]^3}"
    assert [r["n"] for r in gwalk.feasible_rows(6)] == [27, 81]


def test_filter_and_support():
    petersen = gwalk.parse_graph6("IsP@PGXD_")
    verdict = gwalk.algebraic_integer_filter(petersen)
    assert not verdict["passes"]
    assert verdict["failing"] == "1/3"
    assert gwalk.eigenvalue_support(gwalk.construct("complete(4)"), 0) == ["1", "-1/3"]
    c4 = gwalk.construct("cycle(4)")
    assert gwalk.pst_via_conditions(c4, 0, 2, 2)["transfers"]
    assert not gwalk.pst_via_conditions(c4, 0, 1, 2)["transfers"]


def test_errors():
    with pytest.raises(ValueError):
        gwalk.construct("cycle(")
    with pytest.raises(ValueError):
        gwalk.analyze(gwalk.construct("complete_multipartite(2,3)"))

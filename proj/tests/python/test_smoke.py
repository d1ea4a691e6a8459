import pytest

import mainspectra as ms


def test_signature_of_p4():
    g = ms.Graph.from_graph6("CL")
    sig = ms.two_main_signature(g)
    assert (sig["a"], sig["b"]) == (1, 1)
    assert ms.count_main_eigenvalues(g) == 2


def test_witness_and_feasibility():
    assert ms.is_feasible(2, 0)
    assert not ms.is_feasible(0, 1)
    w = ms.witness(2, 0)
    assert w["graph"].order == 7
    with pytest.raises(ValueError):
        ms.witness(0, 1)


def test_enumerate_small():
    recs = ms.enumerate(4, min_n=4)
    assert len(recs) == 3
    assert len(ms.enumerate(7, a=2, b=0)) == 1


def test_graph_roundtrip():
    g = ms.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.graph6() == "CL" or ms.canonical_key(g) == "CL"
    assert ms.Graph.from_graph6(g.graph6()) == g
    with pytest.raises(ms.MainspectraError):
        ms.Graph.from_graph6("C~~")


def test_verify_claim():
    rep = ms.verify_claim("g11", max_n=6)
    assert rep["pass"]
    assert "g13" in ms.claim_ids()

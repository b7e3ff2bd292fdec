import pytest

import rainbowconn as rb


def cycle(n):
    return rb.Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph6_round_trip():
    g = cycle(6)
    assert rb.graph6_decode(g.graph6()) == g
    assert g.order == 6 and g.size == 6


def test_rc_of_small_graphs():
    assert rb.rc(cycle(6))[0] == 3
    path = rb.Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert rb.rc(path)[0] == 4
    assert len(rb.bridges(path)) == 4


def test_witness_verifies():
    g = cycle(7)
    k, colors = rb.rc(g)
    assert k == 4
    assert rb.is_rainbow_connected(g, colors)["rainbow_connected"]
    assert not rb.is_rainbow_connected(g, [1] * 7)["rainbow_connected"]


def test_construction_and_bounds():
    g, colors = rb.build_gdn(13, 4)
    assert g.size == 16 == rb.hub_upper(13, 4)
    assert max(colors) <= 4
    assert rb.is_rainbow_connected(g, colors)["rainbow_connected"]
    report = rb.bounds(20, 4)
    assert report["schema"] == 1


def test_tnd_and_enumeration():
    assert rb.tnd(6, 3)["t"] == 6
    assert len(rb.connected_graphs(5)) == 21


def test_errors():
    with pytest.raises(rb.InputError):
        rb.graph6_decode("\x01")
    disconnected = rb.Graph(3)
    with pytest.raises(rb.InputError):
        rb.rc(disconnected)
    with pytest.raises(rb.BudgetExceeded):
        rb.rc(cycle(9), budget=1)

"""Smoke tests for the Python bindings.

Deep coverage lives in the C++ suites; these checks only confirm that the
bindings round-trip data faithfully and agree with the documented behaviour on
a handful of small graphs.
"""

import math

import pytest

import lineinv


def path(n):
    return lineinv.Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return lineinv.Graph(n, [(i, (i + 1) % n) for i in range(n)])


CLAW = lineinv.Graph(4, [(0, 1), (0, 2), (0, 3)])


def test_graph_accessors():
    g = lineinv.Graph(4, [(2, 1), (0, 1)])
    assert g.vertex_count() == 4
    assert g.edge_count() == 2
    assert g.edges() == [(0, 1), (1, 2)]  # sorted, smaller endpoint first
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert g.neighbors(1) == [0, 2]
    assert not g.connected()
    assert g.components() == [[0, 1, 2], [3]]
    assert g == lineinv.Graph(4, [(0, 1), (1, 2)])


def test_serialization_round_trip():
    g = cycle(5)
    text = lineinv.serialize_edge_list(g)
    assert text.startswith("5 5\n")
    assert lineinv.parse_edge_list(text) == g


def test_errors_carry_the_library_exception():
    with pytest.raises(lineinv.Error, match="SelfLoop"):
        lineinv.Graph(2, [(1, 1)])
    with pytest.raises(lineinv.Error, match="VertexOutOfRange"):
        lineinv.add_edge(path(3), 0, 7)


def test_line_graph_and_root_round_trip():
    g = cycle(6)
    h, edge_map = lineinv.line_graph(g)
    assert h.vertex_count() == g.edge_count()
    assert edge_map == g.edges()
    roots = lineinv.root(h)
    assert len(roots) == 1
    assert lineinv.isomorphic(roots[0], g)


def test_triangle_preimage_is_ambiguous():
    triangle = cycle(3)
    roots = lineinv.root(triangle)
    assert len(roots) == 2
    assert roots[0] == CLAW  # the 3-star is listed first
    assert lineinv.isomorphic(roots[1], triangle)


def test_recognition():
    assert lineinv.is_line_graph(path(3))
    assert not lineinv.is_line_graph(CLAW)
    assert lineinv.contains_induced_claw(CLAW) == [0, 1, 2, 3]
    assert lineinv.contains_induced_claw(path(3)) is None
    assert lineinv.triangle_closing_sites(path(3)) == [[0, 1, 2]]


def test_minimum_flip_repair_of_the_claw():
    sol = lineinv.solve_enumeration(CLAW)
    assert sol.objective == 1
    assert sol.flips == [lineinv.Flip(0, 1, False)]  # removals are preferred
    assert lineinv.is_line_graph(sol.h_hat)
    assert lineinv.apply_flips(CLAW, sol.flips) == sol.h_hat
    ok, diag = lineinv.verify_solution(CLAW, sol)
    assert ok, diag
    # Three single removals and three single additions repair the claw.
    assert len(lineinv.all_minimal_flip_sets(CLAW)) == 6


def test_both_engines_return_the_same_flip_set():
    g = lineinv.Graph(6, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
    h, _ = lineinv.line_graph(g)
    h_tilde = lineinv.add_edge(h, 0, 3)
    enum = lineinv.solve_enumeration(h_tilde)
    bnb = lineinv.solve_branch_and_bound(h_tilde, time_limit_s=30.0)
    assert bnb.proved_optimal
    assert bnb.engine == "branch_and_bound"
    assert enum.objective == bnb.objective
    assert enum.flips == bnb.flips


def test_case_labels():
    h = cycle(6)
    h_tilde = lineinv.add_edge(h, 0, 3)
    sol = lineinv.solve_enumeration(h_tilde)
    added = [lineinv.Flip(0, 3, True)]
    assert lineinv.classify_case(h, h_tilde, sol, added) == ("II", False)
    assert lineinv.classify_mechanism(path(5), path(5)) == "Undetermined"


def test_spectral_values():
    assert abs(lineinv.spectral_radius(cycle(6)) - 2.0) < 1e-8
    assert abs(lineinv.spectral_radius(CLAW) - math.sqrt(3.0)) < 1e-8
    assert lineinv.is_smith(path(4))
    k4 = lineinv.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert not lineinv.is_smith(k4)

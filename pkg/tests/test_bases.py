"""Circuits, Graver bases, walk binomials and universal basis reports."""

import pytest

from diagminors.bases import (BasisReport, circuits, degree_stats,
                              graph_circuits, graver, is_primitive, ugb,
                              walk_binomial)
from diagminors.binomials import (Binomial, Monomial, buchberger,
                                  natural_order, normal_form, parse_binomial,
                                  parse_monomial, var_sort_key)
from diagminors.constructions import prism
from diagminors.encoding import build_AG, generators_PG, incidence_config
from diagminors.graphs import ClosedWalk, Graph, enumerate_cycles
from diagminors import fixtures


def _parse_set(strings):
    return frozenset(parse_binomial(s) for s in strings)


def test_circuits_single_edge():
    cfg = build_AG(fixtures.k2())
    f12 = parse_binomial("x11*x22 - x12*x21")
    assert circuits(cfg) == [f12]
    assert graver(cfg) == [f12]


def test_circuits_of_example_graph():
    cfg = build_AG(fixtures.five_vertex_example())
    got = circuits(cfg)
    assert len(got) == 36
    assert frozenset(got) == _parse_set(fixtures.EXAMPLE_CIRCUITS)
    assert parse_binomial("x44*x35*x53 - x55*x34*x43") in set(got)
    # bipartite graph: every monomial of every circuit is squarefree
    for b in got:
        assert b.plus.is_squarefree and b.minus.is_squarefree


def test_graver_prism_incidence():
    cfg = incidence_config(prism(fixtures.triangle_pendant()))
    got = graver(cfg)
    assert frozenset(got) == _parse_set(fixtures.PRISM_GRAVER)
    witness = parse_binomial(fixtures.PRISM_GRAVER_WITNESS)
    assert witness.degree == 5
    assert is_primitive(witness, cfg)
    assert witness not in set(circuits(cfg))


def test_graver_equals_circuits_when_bipartite():
    for g in (fixtures.path(4), fixtures.star(4), fixtures.cycle(4)):
        cfg = build_AG(g)
        assert frozenset(graver(cfg)) == frozenset(circuits(cfg))


def test_is_primitive():
    cfg = build_AG(fixtures.k2())
    # constructor normalization turns x11^2*x22 - x11*x12*x21 into f_12
    b = Binomial(parse_monomial("x11^2*x22"), parse_monomial("x11*x12*x21"))
    assert is_primitive(b, cfg)
    with pytest.raises(ValueError):
        is_primitive(parse_binomial("x11 - x22"), cfg)


def test_walk_binomial_square():
    h = prism(fixtures.k2())
    b = walk_binomial(ClosedWalk((1, 2, 5, 4)), h)
    assert b == parse_binomial("x11*x22 - x12*x21")
    # starting point and direction only flip the sign, never the binomial
    assert walk_binomial(ClosedWalk((5, 4, 1, 2)), h) == b
    assert walk_binomial(ClosedWalk((4, 5, 2, 1)), h) == b


def test_walk_binomial_long_walks():
    h = prism(fixtures.path(5))
    b = walk_binomial(ClosedWalk((1, 2, 3, 4, 5, 11, 10, 9, 8, 7)), h)
    assert b == parse_binomial("x12*x34*x55*x43*x21 - x23*x45*x54*x32*x11")
    h = prism(fixtures.star(4))
    b = walk_binomial(ClosedWalk((2, 1, 3, 8, 6, 7)), h)
    assert b == parse_binomial("x12*x21*x33 - x22*x31*x13")
    # a doubled rung contributes a squared variable
    h = prism(fixtures.triangle())
    b = walk_binomial(ClosedWalk((1, 2, 3, 1, 5, 6, 7, 5)), h)
    assert b == parse_binomial("x12*x21*x13*x31 - x11^2*x23*x32")


def test_walk_binomial_errors():
    with pytest.raises(ValueError):
        walk_binomial(ClosedWalk((1, 2, 3)), fixtures.triangle())
    with pytest.raises(ValueError):
        walk_binomial(ClosedWalk((1, 2, 3, 4)), fixtures.path(3))


def test_graph_circuits_triangle_prism():
    got = graph_circuits(prism(fixtures.triangle()))
    assert len(got) == 9
    assert frozenset(got) == _parse_set(fixtures.TRIANGLE_UGB)
    doubled = _parse_set(("x12*x21*x13*x31 - x11^2*x23*x32",
                          "x12*x21*x23*x32 - x22^2*x13*x31",
                          "x13*x31*x23*x32 - x33^2*x12*x21"))
    assert doubled <= frozenset(got)


def test_graph_circuits_mobius_has_long_even_cycle():
    g = fixtures.cycle(4)
    h = mobius_host(g)
    b = parse_binomial("x12*x21*x34*x43 - x14*x41*x23*x32")
    assert b in set(graph_circuits(h))


def mobius_host(g):
    from diagminors.constructions import mobius
    return mobius(enumerate_cycles(g)[0], g)


def test_graph_circuits_bipartite_host_only_even_cycles():
    h = prism(fixtures.path(3))
    want = {walk_binomial(w, h) for w in enumerate_cycles(h.graph, "even")}
    assert set(graph_circuits(h)) == want


def test_graph_circuits_figure_eight():
    # two triangles sharing vertex 3; unnamed edges become y_1..y_6
    g = Graph((), [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    got = graph_circuits(g)
    want = Binomial(Monomial([("y_2", 1), ("y_3", 1), ("y_5", 1)]),
                    Monomial([("y_1", 1), ("y_4", 1), ("y_6", 1)]))
    assert got == [want]


def test_graph_circuits_needs_connected_host():
    with pytest.raises(ValueError):
        graph_circuits(Graph((), [(1, 2), (3, 4)]))


def test_ugb_exact_shapes():
    rep = ugb(fixtures.star(4))
    assert rep.status == "exact"
    assert frozenset(rep.elements) == _parse_set(fixtures.STAR4_UGB)
    rep = ugb(fixtures.path(5))
    assert rep.status == "exact"
    assert frozenset(rep.elements) == _parse_set(fixtures.PATH5_UGB)
    rep = ugb(fixtures.triangle())
    assert rep.status == "exact"
    assert frozenset(rep.elements) == _parse_set(fixtures.TRIANGLE_UGB)
    rep = ugb(fixtures.five_vertex_example())
    assert rep.status == "exact"
    assert frozenset(rep.elements) == _parse_set(fixtures.EXAMPLE_CIRCUITS)


def test_ugb_sandwich():
    g = fixtures.triangle_pendant()
    rep = ugb(g)
    assert rep.status == "sandwich"
    assert rep.elements == rep.lower
    assert frozenset(rep.lower) == frozenset(circuits(build_AG(g)))
    # P_G here equals the ideal of the prism host, so the upper bound is the
    # same 16-element Graver basis pinned for the incidence configuration
    assert frozenset(rep.upper) == _parse_set(fixtures.PRISM_GRAVER)
    assert (len(rep.lower), len(rep.upper)) == (15, 16)
    assert frozenset(rep.lower) < frozenset(rep.upper)


def test_ugb_mixed_components():
    g = Graph((), [(1, 2), (4, 5), (5, 6), (4, 6), (4, 7)])
    rep = ugb(g)
    assert rep.status == "sandwich"
    assert rep.count == 16
    assert (len(rep.lower), len(rep.upper)) == (16, 17)
    assert parse_binomial("x11*x22 - x12*x21") in set(rep.elements)


def test_ugb_decorated_cycle_stays_exact():
    g = fixtures.decorated_six_cycle()
    rep = ugb(g)
    assert rep.status == "exact"
    gens = generators_PG(g)
    assert set(gens) <= set(rep.elements)
    stats = degree_stats(rep, g)
    assert stats["bipartite_bound"] == 12
    assert stats["bound_respected"]


def test_ugb_contains_generators_and_lies_in_ideal():
    for g in (fixtures.path(4), fixtures.star(4), fixtures.cycle(4),
              fixtures.triangle(), fixtures.five_vertex_example()):
        rep = ugb(g)
        gens = generators_PG(g)
        assert set(gens) <= set(rep.elements)
        variables = sorted({v for b in gens for v in b.variables},
                           key=var_sort_key)
        order = natural_order(variables)
        gb = buchberger(gens, order)
        for b in rep.elements:
            assert normal_form(b, gb, order) == 0


def test_ugb_between_circuits_and_graver():
    for g in (fixtures.k2(), fixtures.path(4), fixtures.star(4),
              fixtures.cycle(4), fixtures.triangle()):
        cfg = build_AG(g)
        rep = ugb(g)
        assert frozenset(circuits(cfg)) <= frozenset(rep.elements)
        assert frozenset(rep.elements) <= frozenset(graver(cfg))


def test_degree_stats():
    rep = ugb(fixtures.path(5))
    assert degree_stats(rep, fixtures.path(5)) == {
        "count": 10, "max_degree": 5,
        "bipartite_bound": 5, "bound_respected": True}
    rep = ugb(fixtures.cycle(4))
    stats = degree_stats(rep, fixtures.cycle(4))
    assert stats["max_degree"] == 4 and stats["bipartite_bound"] == 4
    rep = ugb(fixtures.triangle())
    stats = degree_stats(rep, fixtures.triangle())
    assert "bipartite_bound" not in stats


def test_basis_report_type():
    f12 = parse_binomial("x11*x22 - x12*x21")
    rep = BasisReport([f12], "exact")
    assert rep.count == 1 and rep.max_degree == 2
    assert rep.as_dict() == {"status": "exact", "count": 1, "max_degree": 2,
                             "elements": ["x11*x22 - x12*x21"]}
    assert BasisReport([], "exact").max_degree == 0
    sand = BasisReport([f12], "sandwich", [f12], [f12, f12])
    assert sand.as_dict()["lower_count"] == 1
    with pytest.raises(ValueError):
        BasisReport([], "approximate")
    with pytest.raises(ValueError):
        BasisReport([], "sandwich")

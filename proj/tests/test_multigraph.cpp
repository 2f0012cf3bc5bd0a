#include <doctest.h>

#include "braidconf/json_io.hpp"
#include "braidconf/multigraph.hpp"

using namespace braidconf;

TEST_CASE("label ordering: letters first, digits by value, dotted componentwise") {
    CHECK(label_less("a", "1"));
    CHECK(label_less("a", "b"));
    CHECK(label_less("2", "10"));
    CHECK(!label_less("10", "2"));
    CHECK(label_less("3.1", "3.2"));
    CHECK(label_less("3", "3.1"));
    CHECK(label_less("2.9", "10.1"));
}

TEST_CASE("theta graphs have 2+m vertices, 2m edges, degrees (m,m,2,...)") {
    for (int m = 3; m <= 8; ++m) {
        Multigraph g = make_theta(m);
        CHECK(g.num_vertices() == 2 + m);
        CHECK(g.num_edges() == 2 * m);
        CHECK(g.degree(g.vertex("a")) == m);
        CHECK(g.degree(g.vertex("b")) == m);
        for (int j = 1; j <= m; ++j) CHECK(g.degree(g.vertex(std::to_string(j))) == 2);
        CHECK(g.is_connected());
        CHECK(g.is_simple());
    }
}

TEST_CASE("edge subdivision") {
    Multigraph tri;
    for (auto s : {"x", "y", "z"}) tri.add_vertex(s);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);

    Multigraph once = subdivide_edge(tri, 0, 1);
    CHECK(once.num_vertices() == 4);
    CHECK(once.num_edges() == 4);

    Multigraph theta3 = make_theta(3);
    int e = theta3.edge_between("a", "1");
    Multigraph twice = subdivide_edge(theta3, e, 2);
    CHECK(twice.num_vertices() == 7);
    CHECK(twice.num_edges() == 8);
    // fresh labels are deterministic
    CHECK(twice.find_vertex(theta3.edge_label(e) + ".1").has_value());
    CHECK(twice.find_vertex(theta3.edge_label(e) + ".2").has_value());

    CHECK_THROWS_AS(subdivide_edge(tri, 0, 0), invalid_parameter);
    CHECK_THROWS_AS(subdivide_edge(tri, 99, 1), not_found);
}

TEST_CASE("edges_disjoint on theta5") {
    Multigraph g = make_theta(5);
    int a1 = g.edge_between("a", "1"), b2 = g.edge_between("2", "b");
    int a2 = g.edge_between("a", "2"), b1 = g.edge_between("1", "b");
    CHECK(edges_disjoint(g, a1, b2));
    CHECK(!edges_disjoint(g, a1, a2));
    CHECK(!edges_disjoint(g, a1, b1));
    // symmetric, irreflexive
    CHECK(edges_disjoint(g, b2, a1));
    CHECK(!edges_disjoint(g, a1, a1));
}

TEST_CASE("girth") {
    Multigraph g = make_theta(5);
    std::vector<int> wit;
    auto gi = girth(g, &wit);
    REQUIRE(gi.has_value());
    CHECK(*gi == 4);
    CHECK(wit.size() == 4);

    Multigraph tree = make_tripod();
    CHECK(!girth(tree).has_value());

    Multigraph loop;
    loop.add_vertex("x");
    loop.add_edge(0, 0);
    CHECK(girth(loop) == 1);

    Multigraph par;
    par.add_vertex("x");
    par.add_vertex("y");
    par.add_edge(0, 1);
    par.add_edge(0, 1);
    CHECK(girth(par) == 2);
}

TEST_CASE("admissible subdivision") {
    SUBCASE("theta5 is already admissible for 3 strands") {
        Multigraph g = make_theta(5);
        CHECK(!admissibility_violation(g, 3).has_value());
        CHECK(same_labeled_graph(admissible_subdivision(g, 3), g));
    }
    SUBCASE("bare-strand theta gains one interior vertex per strand") {
        Multigraph bare;
        bare.add_vertex("a");
        bare.add_vertex("b");
        for (int i = 0; i < 3; ++i) bare.add_edge(0, 1);
        Multigraph g = admissible_subdivision(bare, 3);
        CHECK(g.num_vertices() == 5);
        CHECK(g.num_edges() == 6);
        CHECK(!admissibility_violation(g, 3).has_value());
    }
    SUBCASE("already-admissible graphs are fixed points") {
        Multigraph edge;
        edge.add_vertex("a");
        edge.add_vertex("b");
        edge.add_edge(0, 1);
        // a-b already satisfies |V| >= 2, paths >= 1 edge, no cycles
        Multigraph g2 = admissible_subdivision(edge, 2);
        CHECK(!admissibility_violation(g2, 2).has_value());
        CHECK(same_labeled_graph(admissible_subdivision(g2, 2), g2));
        // for 3 strands the edge must grow
        Multigraph g3 = admissible_subdivision(edge, 3);
        CHECK(g3.num_vertices() >= 3);
        CHECK(!admissibility_violation(g3, 3).has_value());
    }
    SUBCASE("self-loops and parallel edges are always eliminated") {
        Multigraph g;
        g.add_vertex("x");
        g.add_vertex("y");
        g.add_edge(0, 0);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        Multigraph h = admissible_subdivision(g, 1);
        CHECK(h.is_simple());
        CHECK(!admissibility_violation(h, 1).has_value());
    }
    SUBCASE("idempotence across the corpus") {
        for (int m = 3; m <= 6; ++m)
            for (int n = 2; n <= 4; ++n) {
                Multigraph g = admissible_subdivision(make_theta(m), n);
                CHECK(!admissibility_violation(g, n).has_value());
                CHECK(same_labeled_graph(admissible_subdivision(g, n), g));
                CHECK(g.num_vertices() >= make_theta(m).num_vertices());
            }
    }
    SUBCASE("disconnected input is rejected") {
        Multigraph g;
        g.add_vertex("x");
        g.add_vertex("y");
        CHECK_THROWS_AS(admissible_subdivision(g, 1), invalid_input);
    }
    SUBCASE("path-constant policy knob") {
        SubdivisionPolicy conservative;
        conservative.path_slack = 2; // n+1 instead of n-1
        Multigraph g = admissible_subdivision(make_theta(5), 3, conservative);
        CHECK(!admissibility_violation(g, 3, conservative).has_value());
        CHECK(g.num_vertices() > make_theta(5).num_vertices());
    }
}

TEST_CASE("graph JSON round trip and diagnostics") {
    Multigraph g = make_theta(3);
    Multigraph back = parse_graph(graph_to_json(g).dump());
    CHECK(same_labeled_graph(g, back));
    // edge ids follow file order
    CHECK(back.edge_label(0) == g.edge_label(0));

    CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","q"]]})"),
                         doctest::Contains("unknown vertex"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a"]})"),
                         doctest::Contains("edges"), parse_error);
    CHECK_THROWS_AS(parse_graph("not json"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"vertices":["a","a"],"edges":[]})"),
                         doctest::Contains("duplicate"), parse_error);

    Multigraph fix = load_graph(std::string(FIXTURE_DIR) + "/theta5.json");
    CHECK(fix.num_vertices() == 7);
    CHECK(fix.num_edges() == 10);
    CHECK(same_labeled_graph(fix, make_theta(5)));
}

#include <doctest.h>

#include <algorithm>
#include <functional>

#include "braidconf/cube_complex.hpp"
#include "braidconf/planarity.hpp"

using namespace braidconf;

namespace {

Multigraph cycle_graph(int n) {
    Multigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("c" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph complete_graph(int n) {
    Multigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("k" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Multigraph complete_bipartite(int a, int b) {
    Multigraph g;
    for (int i = 0; i < a; ++i) g.add_vertex("u" + std::to_string(i));
    for (int j = 0; j < b; ++j) g.add_vertex("v" + std::to_string(j));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Brute-force oracle: planar iff some rotation system passes face tracing.
bool planar_by_rotation_search(const Multigraph& g) {
    std::vector<std::vector<int>> nbs(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int e : g.incident_edges(v))
            nbs[v].push_back(g.edge(e)[0] == v ? g.edge(e)[1] : g.edge(e)[0]);
    RotationEmbedding emb;
    emb.graph = g;
    emb.rotation.assign(g.num_vertices(), {});
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == g.num_vertices()) return embedding_is_planar(emb);
        auto perm = nbs[v];
        std::sort(perm.begin() + (perm.empty() ? 0 : 1), perm.end());
        do {
            emb.rotation[v] = perm;
            if (rec(v + 1)) return true;
        } while (std::next_permutation(perm.begin() + (perm.empty() ? 0 : 1), perm.end()));
        return false;
    };
    return rec(0);
}

} // namespace

TEST_CASE("cyclic orders") {
    CyclicOrder a{{"1", "2", "3"}};
    CyclicOrder b{{"2", "3", "1"}};
    CyclicOrder c{{"3", "2", "1"}};
    CHECK(a.same_as(b));
    CHECK(!a.same_as(c));
    CHECK(a.opposite_of(c));
    CHECK(a.reversed().reversed().same_as(a));
    CHECK(a.reversed().same_as(c));
}

TEST_CASE("planar verdicts with certificates") {
    SUBCASE("C6: planar, 2 faces") {
        auto r = test_planar(cycle_graph(6));
        auto* emb = std::get_if<RotationEmbedding>(&r);
        REQUIRE(emb);
        CHECK(faces_of(*emb).size() == 2);
    }
    SUBCASE("Q3 via Conf3(theta5) link: planar, 6 faces") {
        CubeComplex X = CubeComplex::build(make_theta(5), 3);
        auto r = test_planar(X.vertex_link("ab1").graph());
        auto* emb = std::get_if<RotationEmbedding>(&r);
        REQUIRE(emb);
        CHECK(faces_of(*emb).size() == 6);
        for (const auto& f : faces_of(*emb)) CHECK(f.size() == 4);
    }
    SUBCASE("K5: verified K5 witness") {
        Multigraph k5 = complete_graph(5);
        auto r = test_planar(k5);
        auto* w = std::get_if<KuratowskiWitness>(&r);
        REQUIRE(w);
        CHECK(w->kind == KuratowskiWitness::Kind::K5);
        CHECK(verify_kuratowski(k5, *w));
    }
    SUBCASE("K33: verified K33 witness") {
        Multigraph k33 = complete_bipartite(3, 3);
        auto r = test_planar(k33);
        auto* w = std::get_if<KuratowskiWitness>(&r);
        REQUIRE(w);
        CHECK(w->kind == KuratowskiWitness::Kind::K33);
        CHECK(verify_kuratowski(k33, *w));
    }
    SUBCASE("subdivided K5 still yields a verified witness") {
        Multigraph g = complete_graph(5);
        g = subdivide_edge(g, 0, 2);
        g = subdivide_edge(g, 3, 1);
        auto r = test_planar(g);
        auto* w = std::get_if<KuratowskiWitness>(&r);
        REQUIRE(w);
        CHECK(verify_kuratowski(g, *w));
    }
    SUBCASE("K55 minus a perfect matching (theta6 pole link) is non-planar") {
        CubeComplex X = CubeComplex::build(make_theta(6), 3);
        Multigraph lk = X.vertex_link("ab1").graph();
        auto r = test_planar(lk);
        auto* w = std::get_if<KuratowskiWitness>(&r);
        REQUIRE(w);
        CHECK(w->kind == KuratowskiWitness::Kind::K33);
        CHECK(verify_kuratowski(lk, *w));
    }
}

TEST_CASE("witness verification is strict") {
    Multigraph k5 = complete_graph(5);
    auto r = test_planar(k5);
    KuratowskiWitness w = std::get<KuratowskiWitness>(r);
    KuratowskiWitness bad = w;
    bad.paths.pop_back();
    CHECK(!verify_kuratowski(k5, bad));
    bad = w;
    bad.kind = KuratowskiWitness::Kind::K33;
    CHECK(!verify_kuratowski(k5, bad));
    bad = w;
    bad.paths[0] = bad.paths[1]; // duplicate path, wrong pair coverage
    CHECK(!verify_kuratowski(k5, bad));
    bad = w;
    bad.paths[0].insert(bad.paths[0].begin() + 1, bad.branch_vertices[4]);
    CHECK(!verify_kuratowski(k5, bad)); // interior vertex is a branch vertex
}

TEST_CASE("verdicts match the brute-force rotation oracle") {
    std::vector<Multigraph> corpus = {cycle_graph(4),          complete_graph(4),
                                      complete_graph(5),       complete_bipartite(2, 3),
                                      complete_bipartite(3, 3), make_theta(4)};
    // theta5 strand links
    CubeComplex X = CubeComplex::build(make_theta(5), 3);
    corpus.push_back(X.vertex_link("a12").graph());
    corpus.push_back(X.vertex_link("123").graph());
    for (const auto& g : corpus) CHECK(is_planar(g) == planar_by_rotation_search(g));
}

TEST_CASE("face tracing covers each directed edge once") {
    auto r = test_planar(complete_graph(4));
    auto emb = std::get<RotationEmbedding>(r);
    size_t total = 0;
    for (const auto& f : faces_of(emb)) total += f.size();
    CHECK(total == 2u * emb.graph.num_edges());
}

TEST_CASE("cyclic_neighbors flips with the orientation flag") {
    auto emb = std::get<RotationEmbedding>(test_planar(complete_graph(4)));
    for (int v = 0; v < 4; ++v) {
        CyclicOrder cw = cyclic_neighbors(emb, emb.graph.label(v));
        CyclicOrder ccw = cyclic_neighbors(flipped(emb), emb.graph.label(v));
        CHECK(cw.opposite_of(ccw));
    }
    CHECK_THROWS_AS(cyclic_neighbors(emb, "nope"), not_found);
}

TEST_CASE("embedding enumeration") {
    SUBCASE("triangle: one rotation system, two orientations") {
        auto embs = enumerate_planar_embeddings(complete_graph(3), 100);
        CHECK(embs.size() == 2);
        CHECK(embs[0].clockwise != embs[1].clockwise);
    }
    SUBCASE("K4: two mirror rotation systems, two orientations") {
        auto embs = enumerate_planar_embeddings(complete_graph(4), 100);
        CHECK(embs.size() == 4);
        for (const auto& e : embs) CHECK(embedding_is_planar(e));
    }
    SUBCASE("K23: every embedding has 3 faces") {
        auto embs = enumerate_planar_embeddings(complete_bipartite(2, 3), 1000);
        CHECK(!embs.empty());
        for (const auto& e : embs) CHECK(faces_of(e).size() == 3);
    }
    SUBCASE("Q3: at least 2, all genus 0, deduplicated, deterministic") {
        CubeComplex X = CubeComplex::build(make_theta(5), 3);
        Multigraph q3 = X.vertex_link("ab1").graph();
        auto embs = enumerate_planar_embeddings(q3, 1000);
        CHECK(embs.size() >= 2);
        for (const auto& e : embs) CHECK(embedding_is_planar(e));
        for (size_t i = 0; i < embs.size(); ++i)
            for (size_t j = i + 1; j < embs.size(); ++j)
                CHECK(!(embs[i] == embs[j] && embs[i].clockwise == embs[j].clockwise));
        auto again = enumerate_planar_embeddings(q3, 1000);
        REQUIRE(again.size() == embs.size());
        for (size_t i = 0; i < embs.size(); ++i) CHECK(again[i] == embs[i]);
    }
    SUBCASE("cap truncates") {
        CHECK(enumerate_planar_embeddings(complete_graph(4), 2).size() == 2);
    }
    SUBCASE("non-planar input raises with a witness") {
        CHECK_THROWS_AS(enumerate_planar_embeddings(complete_graph(5), 10), nonplanar_error);
        try {
            enumerate_planar_embeddings(complete_graph(5), 10);
        } catch (const nonplanar_error& e) {
            CHECK(verify_kuratowski(complete_graph(5), e.witness));
        }
    }
}

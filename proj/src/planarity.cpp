#include "braidconf/planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace braidconf {

CyclicOrder CyclicOrder::reversed() const {
    CyclicOrder r = *this;
    std::reverse(r.items.begin(), r.items.end());
    return r;
}

CyclicOrder CyclicOrder::anchored() const {
    if (items.empty()) return *this;
    auto it = std::min_element(items.begin(), items.end(), label_less);
    CyclicOrder r;
    r.items.insert(r.items.end(), it, items.end());
    r.items.insert(r.items.end(), items.begin(), it);
    return r;
}

bool CyclicOrder::same_as(const CyclicOrder& o) const {
    if (items.size() != o.items.size()) return false;
    return anchored().items == o.anchored().items;
}

bool CyclicOrder::opposite_of(const CyclicOrder& o) const { return same_as(o.reversed()); }

bool RotationEmbedding::operator==(const RotationEmbedding& o) const {
    if (clockwise != o.clockwise || rotation.size() != o.rotation.size()) return false;
    auto anchor = [](const std::vector<int>& r) {
        if (r.empty()) return r;
        auto it = std::min_element(r.begin(), r.end());
        std::vector<int> out(it, r.end());
        out.insert(out.end(), r.begin(), it);
        return out;
    };
    for (size_t v = 0; v < rotation.size(); ++v)
        if (anchor(rotation[v]) != anchor(o.rotation[v])) return false;
    return true;
}

RotationEmbedding flipped(const RotationEmbedding& emb) {
    RotationEmbedding out = emb;
    out.clockwise = !out.clockwise;
    return out;
}

std::vector<std::vector<int>> faces_of(const RotationEmbedding& emb) {
    const auto& rot = emb.rotation;
    const int n = static_cast<int>(rot.size());
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> faces;
    // Next directed edge after u->v leaves v toward the successor of u in
    // the rotation at v. Genus is independent of the handedness flag.
    auto next = [&](int u, int v) {
        const auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), u);
        ++it;
        if (it == r.end()) it = r.begin();
        return *it;
    };
    for (int u = 0; u < n; ++u) {
        for (int v : rot[u]) {
            if (used.count({u, v})) continue;
            std::vector<int> walk;
            int a = u, b = v;
            do {
                walk.push_back(a);
                used.insert({a, b});
                int c = next(a, b);
                a = b;
                b = c;
            } while (!(a == u && b == v));
            faces.push_back(std::move(walk));
        }
    }
    // Isolated vertices bound one face each.
    for (int u = 0; u < n; ++u)
        if (rot[u].empty()) faces.push_back({u});
    return faces;
}

bool embedding_is_planar(const RotationEmbedding& emb) {
    const Multigraph& g = emb.graph;
    const int n = g.num_vertices();
    // Component ids.
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : emb.rotation[v])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<long long> V(ncomp, 0), E(ncomp, 0), F(ncomp, 0);
    for (int v = 0; v < n; ++v) {
        ++V[comp[v]];
        E[comp[v]] += static_cast<long long>(emb.rotation[v].size());
    }
    for (auto& e : E) e /= 2;
    for (const auto& face : faces_of(emb)) ++F[comp[face.front()]];
    for (int c = 0; c < ncomp; ++c)
        if (V[c] - E[c] + F[c] != 2) return false;
    return true;
}

CyclicOrder cyclic_neighbors(const RotationEmbedding& emb, const std::string& w) {
    int v = emb.graph.vertex(w);
    CyclicOrder order;
    for (int u : emb.rotation[v]) order.items.push_back(emb.graph.label(u));
    if (!emb.clockwise) std::reverse(order.items.begin(), order.items.end());
    return order;
}

namespace {

// Decompose a Kuratowski subgraph (given by its edges) into branch vertices
// and subdivision paths.
KuratowskiWitness decompose_kuratowski(const Multigraph& h,
                                       const std::set<std::pair<int, int>>& kedges) {
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : kedges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    KuratowskiWitness w;
    for (auto& [v, nb] : adj)
        if (nb.size() >= 3) w.branch_vertices.push_back(v);
    std::set<int> branch(w.branch_vertices.begin(), w.branch_vertices.end());
    std::set<std::pair<int, int>> used;
    for (int b : w.branch_vertices) {
        for (int start : adj[b]) {
            if (used.count({b, start})) continue;
            std::vector<int> path{b};
            int prev = b, cur = start;
            used.insert({b, start});
            while (!branch.count(cur)) {
                path.push_back(cur);
                auto& nb = adj[cur];
                int nxt = nb[0] == prev ? nb[1] : nb[0];
                used.insert({cur, nxt});
                prev = cur;
                cur = nxt;
            }
            used.insert({prev, cur});
            used.insert({cur, prev});
            path.push_back(cur);
            w.paths.push_back(std::move(path));
        }
    }
    if (w.branch_vertices.size() == 5) {
        w.kind = KuratowskiWitness::Kind::K5;
    } else {
        w.kind = KuratowskiWitness::Kind::K33;
        // Order the six branch vertices side by side: a side is an
        // independent set under path-adjacency.
        std::map<int, std::set<int>> link;
        for (const auto& p : w.paths) {
            link[p.front()].insert(p.back());
            link[p.back()].insert(p.front());
        }
        std::vector<int> side0, side1;
        int first = w.branch_vertices.front();
        for (int v : w.branch_vertices)
            (link[first].count(v) ? side1 : side0).push_back(v);
        w.branch_vertices = side0;
        w.branch_vertices.insert(w.branch_vertices.end(), side1.begin(), side1.end());
    }
    (void)h;
    return w;
}

} // namespace

bool verify_kuratowski(const Multigraph& h, const KuratowskiWitness& w) {
    const bool k5 = w.kind == KuratowskiWitness::Kind::K5;
    if (w.branch_vertices.size() != (k5 ? 5u : 6u)) return false;
    if (w.paths.size() != (k5 ? 10u : 9u)) return false;
    std::set<int> branch(w.branch_vertices.begin(), w.branch_vertices.end());
    if (branch.size() != w.branch_vertices.size()) return false;

    std::set<std::pair<int, int>> hedges;
    for (int e = 0; e < h.num_edges(); ++e) {
        std::pair<int, int> mm = std::minmax(h.edge(e)[0], h.edge(e)[1]);
        hedges.insert({mm.first, mm.second});
    }
    std::set<int> interior_seen;
    std::set<std::pair<int, int>> pairs;
    for (const auto& p : w.paths) {
        if (p.size() < 2) return false;
        if (!branch.count(p.front()) || !branch.count(p.back())) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            std::pair<int, int> mm = std::minmax(p[i], p[i + 1]);
            if (!hedges.count({mm.first, mm.second})) return false;
        }
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (branch.count(p[i])) return false;
            if (!interior_seen.insert(p[i]).second) return false; // paths must be internally disjoint
        }
        std::pair<int, int> mm = std::minmax(p.front(), p.back());
        if (mm.first == mm.second) return false;
        if (!pairs.insert({mm.first, mm.second}).second) return false;
    }
    if (k5) return pairs.size() == 10; // all C(5,2) pairs, distinct, so K5
    // K33: first three branch vertices vs last three.
    std::set<int> a(w.branch_vertices.begin(), w.branch_vertices.begin() + 3);
    for (const auto& [u, v] : pairs)
        if (a.count(u) == a.count(v)) return false;
    return pairs.size() == 9;
}

PlanarityResult test_planar(const Multigraph& h) {
    if (!h.is_simple()) throw invalid_input("planarity test expects a simple graph");
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>,
                              boost::property<boost::edge_index_t, int>>;
    BoostGraph bg(h.num_vertices());
    // Deterministic edge insertion order: canonical edge-label order.
    std::vector<int> eorder(h.num_edges());
    std::iota(eorder.begin(), eorder.end(), 0);
    std::sort(eorder.begin(), eorder.end(), [&](int a, int b) {
        return h.edge_label(a) < h.edge_label(b);
    });
    int eidx = 0;
    for (int e : eorder)
        boost::add_edge(h.edge(e)[0], h.edge(e)[1], eidx++, bg);

    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(boost::num_vertices(bg));
    std::vector<Edge> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(),
                                              boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    if (planar) {
        RotationEmbedding emb;
        emb.graph = h;
        emb.clockwise = true;
        emb.rotation.resize(h.num_vertices());
        for (int v = 0; v < h.num_vertices(); ++v)
            for (const Edge& e : embedding[v]) {
                int s = static_cast<int>(boost::source(e, bg));
                int t = static_cast<int>(boost::target(e, bg));
                emb.rotation[v].push_back(s == v ? t : s);
            }
        if (!embedding_is_planar(emb))
            throw std::logic_error("embedding failed the Euler face count");
        return emb;
    }
    std::set<std::pair<int, int>> kedges;
    for (const Edge& e : kuratowski) {
        std::pair<int, int> mm = std::minmax(static_cast<int>(boost::source(e, bg)),
                              static_cast<int>(boost::target(e, bg)));
        kedges.insert({mm.first, mm.second});
    }
    // The extracted edge set can carry a few spare edges; prune vertices of
    // degree < 2 and, if a branch count is off, fall back to a minimal
    // subgraph search by deleting removable edges.
    auto degrees = [&](const std::set<std::pair<int, int>>& es) {
        std::map<int, int> d;
        for (auto [u, v] : es) {
            ++d[u];
            ++d[v];
        }
        return d;
    };
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        auto d = degrees(kedges);
        for (auto it = kedges.begin(); it != kedges.end();) {
            if (d[it->first] < 2 || d[it->second] < 2) {
                it = kedges.erase(it);
                shrunk = true;
            } else {
                ++it;
            }
        }
    }
    KuratowskiWitness w = decompose_kuratowski(h, kedges);
    if (!verify_kuratowski(h, w))
        throw std::logic_error("extracted Kuratowski subgraph failed verification");
    return w;
}

bool is_planar(const Multigraph& h) {
    return std::holds_alternative<RotationEmbedding>(test_planar(h));
}

std::vector<RotationEmbedding> enumerate_planar_embeddings(const Multigraph& h, long long cap) {
    auto first = test_planar(h);
    if (auto* w = std::get_if<KuratowskiWitness>(&first))
        throw nonplanar_error("cannot enumerate embeddings of a non-planar graph", *w);

    // All rotation systems: per vertex, fix the smallest neighbor and
    // permute the rest; this walks each cyclic order exactly once.
    const int n = h.num_vertices();
    std::vector<std::vector<int>> base(n);
    for (int v = 0; v < n; ++v) {
        for (int e : h.incident_edges(v)) {
            int u = h.edge(e)[0] == v ? h.edge(e)[1] : h.edge(e)[0];
            base[v].push_back(u);
        }
        std::sort(base[v].begin(), base[v].end(),
                  [&](int a, int b) { return label_less(h.label(a), h.label(b)); });
    }
    std::vector<RotationEmbedding> out;
    RotationEmbedding emb;
    emb.graph = h;
    emb.rotation.assign(n, {});
    std::function<void(int)> assign = [&](int v) {
        if (static_cast<long long>(out.size()) >= cap) return;
        if (v == n) {
            if (!embedding_is_planar(emb)) return;
            for (bool cw : {true, false}) {
                if (static_cast<long long>(out.size()) >= cap) return;
                emb.clockwise = cw;
                out.push_back(emb);
            }
            return;
        }
        std::vector<int> rest(base[v].begin() + (base[v].empty() ? 0 : 1), base[v].end());
        std::sort(rest.begin(), rest.end());
        do {
            emb.rotation[v] = base[v].empty() ? std::vector<int>{} : std::vector<int>{base[v][0]};
            emb.rotation[v].insert(emb.rotation[v].end(), rest.begin(), rest.end());
            assign(v + 1);
            if (base[v].empty()) break;
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    assign(0);
    return out;
}

} // namespace braidconf

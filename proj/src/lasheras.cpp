#include "braidconf/lasheras.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>

namespace braidconf {

int XPrimeGraph::degree(int vpos) const {
    int d = 0;
    for (const auto& e : ends) d += (e[0] == vpos) + (e[1] == vpos);
    return d;
}

XPrimeGraph build_xprime(const CubeComplex& X) {
    if (X.dimension() > 2)
        throw invalid_input("the obstruction is defined for 2-dimensional complexes");
    XPrimeGraph xp; // empty when there are no squares at all
    std::vector<int> vpos(X.num_cells(0), -1);
    for (int e = 0; e < X.num_cells(1); ++e) {
        if (X.edge_face_count(e) < 3) continue;
        xp.edges.push_back(e);
        std::array<int, 2> ee;
        for (int side = 0; side < 2; ++side) {
            // A 1-cell has two 0-cell faces (the two endpoints of its moving
            // edge); faces() lists each twice with multiplicity one per
            // moving-edge slot, but k=1 means exactly two entries.
            int v = X.faces(1, e)[side];
            if (vpos[v] < 0) {
                vpos[v] = static_cast<int>(xp.vertices.size());
                xp.vertices.push_back(v);
                xp.vertex_labels.push_back(X.vertex_label(v));
            }
            ee[side] = vpos[v];
        }
        xp.ends.push_back(ee);
        xp.edge_labels.push_back(X.cell_label(1, e));
    }
    return xp;
}

int ObstructionProblem::find_vertex(const std::string& label) const {
    for (int i = 0; i < static_cast<int>(links.size()); ++i)
        if (links[i].vertex_label == label) return i;
    throw not_found("no link for vertex " + label);
}

ObstructionProblem extract_problem(const CubeComplex& X, const XPrimeGraph& xp) {
    ObstructionProblem p;
    std::vector<LinkComplex> lks;
    for (int v : xp.vertices) {
        LinkComplex lk = X.vertex_link(v);
        p.links.push_back({X.vertex_label(v), lk.graph()});
        lks.push_back(std::move(lk));
    }
    for (size_t i = 0; i < xp.edges.size(); ++i) {
        ObstructionEdge oe;
        oe.label = xp.edge_labels[i];
        for (int side = 0; side < 2; ++side) {
            int vpos = xp.ends[i][side];
            int other = xp.ends[i][1 - side];
            EdgeEnd& end = oe.end[side];
            end.vertex = vpos;
            end.link_vertex = xp.vertex_labels[other];
            const LinkComplex& lk = lks[vpos];
            int lv = -1;
            for (int j = 0; j < static_cast<int>(lk.vertices.size()); ++j)
                if (lk.vertices[j].config_label == end.link_vertex) lv = j;
            if (lv < 0) throw std::logic_error("edge direction missing from link");
            for (size_t le = 0; le < lk.edges.size(); ++le) {
                int a = lk.edges[le][0], b = lk.edges[le][1];
                if (a != lv && b != lv) continue;
                int nb = a == lv ? b : a;
                end.square_of_neighbor[lk.vertices[nb].config_label] = lk.edge_square[le];
            }
        }
        p.edges.push_back(std::move(oe));
    }
    return p;
}

bool Cochain::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

namespace {

CyclicOrder square_reading(const EdgeEnd& end, const RotationEmbedding& emb) {
    CyclicOrder nb = cyclic_neighbors(emb, end.link_vertex);
    CyclicOrder out;
    for (const std::string& item : nb.items) {
        auto it = end.square_of_neighbor.find(item);
        if (it == end.square_of_neighbor.end())
            throw invalid_input("link neighbor " + item + " has no square assigned");
        out.items.push_back(std::to_string(it->second));
    }
    if (out.items.size() != end.square_of_neighbor.size())
        throw invalid_input("embedding degree disagrees with the square count at " +
                            end.link_vertex);
    return out;
}

int omega_edge(const ObstructionEdge& e, const RotationEmbedding& emb0,
               const RotationEmbedding& emb1) {
    CyclicOrder r0 = square_reading(e.end[0], emb0);
    CyclicOrder r1 = square_reading(e.end[1], emb1);
    return r0.opposite_of(r1) ? 0 : 1;
}

const RotationEmbedding& embedding_at(const ObstructionProblem& p, const EmbeddingFamily& fam,
                                      int vertex) {
    auto it = fam.by_vertex.find(p.links[vertex].vertex_label);
    if (it == fam.by_vertex.end())
        throw invalid_input("family misses an embedding for vertex " +
                            p.links[vertex].vertex_label);
    return it->second;
}

} // namespace

CyclicOrder edge_square_order(const ObstructionProblem& p, const EmbeddingFamily& fam,
                              int e, int side) {
    const EdgeEnd& end = p.edges.at(e).end[side];
    return square_reading(end, embedding_at(p, fam, end.vertex));
}

Cochain omega(const ObstructionProblem& p, const EmbeddingFamily& fam) {
    for (const auto& lv : p.links) {
        auto it = fam.by_vertex.find(lv.vertex_label);
        if (it == fam.by_vertex.end())
            throw invalid_input("family misses an embedding for vertex " + lv.vertex_label);
        if (!same_labeled_graph(it->second.graph, lv.link))
            throw invalid_input("embedding at " + lv.vertex_label +
                                " is not an embedding of that link");
        if (!embedding_is_planar(it->second))
            throw invalid_input("embedding at " + lv.vertex_label + " has positive genus");
    }
    Cochain w;
    for (const auto& e : p.edges)
        w.values.push_back(omega_edge(e, embedding_at(p, fam, e.end[0].vertex),
                                      embedding_at(p, fam, e.end[1].vertex)));
    return w;
}

std::optional<std::vector<int>> coboundary_certificate(const ObstructionProblem& p,
                                                       const Cochain& w) {
    if (w.values.size() != p.edges.size())
        throw invalid_parameter("cochain length disagrees with the edge count");
    const int n = static_cast<int>(p.links.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n); // vertex -> (other, parity)
    for (size_t e = 0; e < p.edges.size(); ++e) {
        const auto& oe = p.edges[e];
        if (oe.is_loop()) {
            if (w.values[e] % 2 != 0) return std::nullopt; // delta(f) vanishes on loops
            continue;
        }
        adj[oe.end[0].vertex].push_back({oe.end[1].vertex, w.values[e] % 2});
        adj[oe.end[1].vertex].push_back({oe.end[0].vertex, w.values[e] % 2});
    }
    std::vector<int> f(n, -1);
    for (int s = 0; s < n; ++s) {
        if (f[s] != -1) continue;
        f[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, parity] : adj[v]) {
                int want = f[v] ^ parity;
                if (f[u] == -1) {
                    f[u] = want;
                    stack.push_back(u);
                } else if (f[u] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return f;
}

ObstructionReport verify_family(const ObstructionProblem& p, const EmbeddingFamily& fam) {
    ObstructionReport rep;
    for (const auto& e : p.edges) rep.edge_labels.push_back(e.label);
    rep.omega = omega(p, fam);
    rep.trivial = rep.omega.is_zero();
    rep.coboundary = coboundary_certificate(p, rep.omega);
    return rep;
}

SearchResult search_trivializing_family(const ObstructionProblem& p, const SearchOptions& opt) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start)
            .count();
    };
    SearchResult res;
    res.outcome = SearchResult::Outcome::Exhausted;

    const int n = static_cast<int>(p.links.size());
    std::vector<int> deg(n, 0);
    for (const auto& e : p.edges) {
        ++deg[e.end[0].vertex];
        ++deg[e.end[1].vertex];
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(opt.seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

    // Candidate embeddings per vertex; a non-planar link settles the search.
    std::vector<std::vector<RotationEmbedding>> cands(n);
    for (int v = 0; v < n; ++v) {
        try {
            cands[v] = enumerate_planar_embeddings(p.links[v].link, opt.max_embeddings_per_vertex);
        } catch (const nonplanar_error&) {
            res.elapsed_ms = elapsed_ms();
            return res;
        }
        if (cands[v].empty()) {
            res.elapsed_ms = elapsed_ms();
            return res;
        }
    }

    // Edges to check when the vertex at position k of `order` gets assigned:
    // those whose other end is already assigned (or equal, for loops).
    std::vector<int> pos_in_order(n);
    for (int k = 0; k < n; ++k) pos_in_order[order[k]] = k;
    std::vector<std::vector<int>> check_at(n);
    for (size_t e = 0; e < p.edges.size(); ++e) {
        int k = std::max(pos_in_order[p.edges[e].end[0].vertex],
                         pos_in_order[p.edges[e].end[1].vertex]);
        check_at[k].push_back(static_cast<int>(e));
    }

    std::vector<const RotationEmbedding*> chosen(n, nullptr);
    bool timed_out = false;
    std::function<bool(int)> assign = [&](int k) -> bool {
        if (k == n) return true;
        int v = order[k];
        for (const RotationEmbedding& emb : cands[v]) {
            if (elapsed_ms() > opt.budget_ms) {
                timed_out = true;
                return false;
            }
            ++res.nodes_visited;
            chosen[v] = &emb;
            bool ok = true;
            for (int e : check_at[k])
                if (omega_edge(p.edges[e], *chosen[p.edges[e].end[0].vertex],
                               *chosen[p.edges[e].end[1].vertex]) != 0) {
                    ok = false;
                    break;
                }
            if (ok && assign(k + 1)) return true;
            if (timed_out) return false;
        }
        chosen[v] = nullptr;
        return false;
    };

    if (assign(0)) {
        res.outcome = SearchResult::Outcome::Found;
        EmbeddingFamily fam;
        for (int v = 0; v < n; ++v) fam.by_vertex[p.links[v].vertex_label] = *chosen[v];
        res.family = std::move(fam);
    } else if (timed_out) {
        res.outcome = SearchResult::Outcome::Timeout;
    }
    res.elapsed_ms = elapsed_ms();
    return res;
}

} // namespace braidconf

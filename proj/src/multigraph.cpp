#include "braidconf/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace braidconf {

namespace {

bool numeric_label(const std::string& s) {
    return !s.empty() && std::isdigit(static_cast<unsigned char>(s[0]));
}

// Compare dotted numeric labels ("12", "3.1", "3.1.2") componentwise.
bool numeric_less(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        size_t ie = a.find('.', i), je = b.find('.', j);
        std::string ca = a.substr(i, (ie == std::string::npos ? a.size() : ie) - i);
        std::string cb = b.substr(j, (je == std::string::npos ? b.size() : je) - j);
        bool na = !ca.empty() && std::all_of(ca.begin(), ca.end(), [](unsigned char c) { return std::isdigit(c); });
        bool nb = !cb.empty() && std::all_of(cb.begin(), cb.end(), [](unsigned char c) { return std::isdigit(c); });
        if (na && nb) {
            long long va = std::stoll(ca), vb = std::stoll(cb);
            if (va != vb) return va < vb;
        } else if (ca != cb) {
            return ca < cb;
        }
        if (ie == std::string::npos && je == std::string::npos) return false;
        if (ie == std::string::npos) return true;
        if (je == std::string::npos) return false;
        i = ie + 1;
        j = je + 1;
    }
    return a.size() < b.size();
}

} // namespace

bool label_less(const std::string& a, const std::string& b) {
    bool na = numeric_label(a), nb = numeric_label(b);
    if (na != nb) return nb; // alphabetic labels first
    if (na) return numeric_less(a, b);
    return a < b;
}

int Multigraph::add_vertex(const std::string& label) {
    if (label.empty()) throw invalid_parameter("vertex label must be nonempty");
    if (find_vertex(label)) throw invalid_parameter("duplicate vertex label: " + label);
    labels_.push_back(label);
    incident_.emplace_back();
    return num_vertices() - 1;
}

int Multigraph::add_edge(int u, int v) {
    if (u < 0 || u >= num_vertices() || v < 0 || v >= num_vertices())
        throw invalid_parameter("edge endpoint out of range");
    int e = num_edges();
    edges_.push_back({u, v});
    incident_[u].push_back(e);
    if (v != u) incident_[v].push_back(e);
    return e;
}

std::optional<int> Multigraph::find_vertex(const std::string& label) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

int Multigraph::vertex(const std::string& label) const {
    if (auto v = find_vertex(label)) return *v;
    throw not_found("no vertex labeled " + label);
}

int Multigraph::edge_between(const std::string& u, const std::string& v) const {
    int iu = vertex(u), iv = vertex(v);
    for (int e : incident_[iu]) {
        auto [a, b] = edges_[e];
        if ((a == iu && b == iv) || (a == iv && b == iu)) return e;
    }
    throw not_found("no edge " + u + "-" + v);
}

bool Multigraph::has_self_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const auto& e) { return e[0] == e[1]; });
}

bool Multigraph::has_parallel_edges() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        std::pair<int, int> key = std::minmax(e[0], e[1]);
        if (!seen.insert(key).second) return true;
    }
    return false;
}

bool Multigraph::is_connected() const {
    if (num_vertices() == 0) return true;
    std::vector<bool> visited(num_vertices(), false);
    std::queue<int> q;
    q.push(0);
    visited[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : incident_[v]) {
            int w = edges_[e][0] == v ? edges_[e][1] : edges_[e][0];
            if (!visited[w]) {
                visited[w] = true;
                q.push(w);
            }
        }
    }
    return std::all_of(visited.begin(), visited.end(), [](bool b) { return b; });
}

std::string Multigraph::edge_label(int e) const {
    const auto& [u, v] = edges_.at(e);
    const std::string &lu = labels_[u], &lv = labels_[v];
    return label_less(lu, lv) ? lu + "-" + lv : lv + "-" + lu;
}

Multigraph make_theta(int m) {
    if (m < 3) throw invalid_parameter("theta graph needs m >= 3");
    Multigraph g;
    int a = g.add_vertex("a");
    int b = g.add_vertex("b");
    for (int j = 1; j <= m; ++j) {
        int v = g.add_vertex(std::to_string(j));
        g.add_edge(a, v);
        g.add_edge(v, b);
    }
    return g;
}

Multigraph make_tripod() {
    Multigraph g;
    int x = g.add_vertex("x");
    for (const char* leaf : {"a", "b", "c"}) g.add_edge(x, g.add_vertex(leaf));
    return g;
}

Multigraph subdivide_edge(const Multigraph& g, int e, int k) {
    if (e < 0 || e >= g.num_edges()) throw not_found("no edge with id " + std::to_string(e));
    if (k < 1) throw invalid_parameter("subdivision count must be >= 1");
    Multigraph out;
    for (const auto& l : g.labels()) out.add_vertex(l);
    std::vector<int> fresh;
    for (int i = 1; i <= k; ++i) {
        std::string label = g.edge_label(e) + "." + std::to_string(i);
        while (out.find_vertex(label)) label += "'"; // repeated subdivision of the same slot
        fresh.push_back(out.add_vertex(label));
    }
    auto [u, v] = g.edge(e);
    for (int i = 0; i < g.num_edges(); ++i) {
        if (i == e)
            out.add_edge(u, fresh[0]);
        else
            out.add_edge(g.edge(i)[0], g.edge(i)[1]);
    }
    for (int i = 0; i + 1 < k; ++i) out.add_edge(fresh[i], fresh[i + 1]);
    out.add_edge(fresh[k - 1], v);
    return out;
}

bool edges_disjoint(const Multigraph& g, int e1, int e2) {
    if (e1 < 0 || e1 >= g.num_edges() || e2 < 0 || e2 >= g.num_edges())
        throw not_found("edge id out of range");
    const auto& a = g.edge(e1);
    const auto& b = g.edge(e2);
    return a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
}

namespace {

struct CycleInfo {
    int length;
    int edge;                  // an edge on the cycle
    std::vector<int> vertices; // the cycle, in order
};

// A shortest embedded cycle, or nullopt for forests.
std::optional<CycleInfo> shortest_cycle(const Multigraph& g) {
    for (int e = 0; e < g.num_edges(); ++e)
        if (g.edge(e)[0] == g.edge(e)[1]) return CycleInfo{1, e, {g.edge(e)[0]}};
    {
        std::map<std::pair<int, int>, int> first;
        for (int e = 0; e < g.num_edges(); ++e) {
            std::pair<int, int> key = std::minmax(g.edge(e)[0], g.edge(e)[1]);
            auto [it, inserted] = first.insert({{key.first, key.second}, e});
            if (!inserted) return CycleInfo{2, e, {g.edge(e)[0], g.edge(e)[1]}};
        }
    }
    // Simple graph from here on: BFS from every root, a non-tree edge closes
    // a cycle through the two endpoints' tree paths (trimmed at their meet).
    std::optional<CycleInfo> best;
    const int n = g.num_vertices();
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), via_edge(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g.incident_edges(v)) {
                int w = g.edge(e)[0] == v ? g.edge(e)[1] : g.edge(e)[0];
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    via_edge[w] = e;
                    parent[w] = v;
                    q.push(w);
                } else if (e != via_edge[v] && e != via_edge[w]) {
                    std::vector<int> anc_v, anc_w;
                    for (int x = v; x != -1; x = parent[x]) anc_v.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) anc_w.push_back(x);
                    std::set<int> on_v(anc_v.begin(), anc_v.end());
                    int meet = -1;
                    std::vector<int> w_side; // w up to, excluding, the meet
                    for (int x : anc_w) {
                        if (on_v.count(x)) {
                            meet = x;
                            break;
                        }
                        w_side.push_back(x);
                    }
                    std::vector<int> cyc; // v ... meet ... w, closed by e
                    for (int x : anc_v) {
                        cyc.push_back(x);
                        if (x == meet) break;
                    }
                    cyc.insert(cyc.end(), w_side.rbegin(), w_side.rend());
                    int len = static_cast<int>(cyc.size());
                    if (!best || len < best->length) best = CycleInfo{len, e, std::move(cyc)};
                }
            }
        }
    }
    return best;
}

struct Segment {
    int start, end;       // essential endpoints (equal for a closed segment)
    std::vector<int> edges;
};

// Maximal paths whose interior vertices all have degree 2, between essential
// vertices (degree != 2). Pure deg-2 cycle components are not reported here;
// the girth condition covers them.
std::vector<Segment> essential_segments(const Multigraph& g) {
    std::vector<Segment> out;
    std::set<std::pair<int, int>> used; // (edge, start endpoint)
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 2) continue;
        for (int e0 : g.incident_edges(v)) {
            if (used.count({e0, v})) continue;
            Segment seg;
            seg.start = v;
            int cur = v, e = e0;
            while (true) {
                used.insert({e, cur});
                seg.edges.push_back(e);
                int next = g.edge(e)[0] == cur ? g.edge(e)[1] : g.edge(e)[0];
                if (g.edge(e)[0] == g.edge(e)[1]) next = cur; // loop
                used.insert({e, next});
                cur = next;
                if (g.degree(cur) != 2) break;
                const auto& inc = g.incident_edges(cur);
                e = (inc[0] == e) ? inc[1] : inc[0];
            }
            seg.end = cur;
            out.push_back(std::move(seg));
        }
    }
    return out;
}

} // namespace

std::optional<int> girth(const Multigraph& g, std::vector<int>* witness) {
    auto sc = shortest_cycle(g);
    if (!sc) return std::nullopt;
    if (witness) *witness = sc->vertices;
    return sc->length;
}

std::optional<std::string> admissibility_violation(const Multigraph& g, int n,
                                                   const SubdivisionPolicy& policy) {
    if (g.has_self_loop()) return "graph has a self-loop";
    if (g.has_parallel_edges()) return "graph has parallel edges";
    if (g.num_vertices() < policy.min_vertices(n))
        return "graph has " + std::to_string(g.num_vertices()) + " vertices, needs >= " +
               std::to_string(policy.min_vertices(n));
    for (const auto& seg : essential_segments(g)) {
        if (seg.start == seg.end) continue; // a cycle; girth condition below
        if (static_cast<int>(seg.edges.size()) < policy.path_min_edges(n))
            return "path between essential vertices " + g.label(seg.start) + " and " +
                   g.label(seg.end) + " has " + std::to_string(seg.edges.size()) +
                   " edges, needs >= " + std::to_string(policy.path_min_edges(n));
    }
    if (auto gr = girth(g)) {
        if (*gr < policy.cycle_min_edges(n))
            return "embedded cycle of length " + std::to_string(*gr) + ", needs >= " +
                   std::to_string(policy.cycle_min_edges(n));
    }
    return std::nullopt;
}

Multigraph admissible_subdivision(const Multigraph& g, int n,
                                  const SubdivisionPolicy& policy) {
    if (n < 1) throw invalid_parameter("strand count must be >= 1");
    if (!g.is_connected()) throw invalid_input("admissible subdivision requires a connected graph");
    Multigraph cur = g;
    // Each subdivision only lengthens paths and cycles, so a fixed sweep
    // order terminates; the outer loop re-checks until stable.
    for (bool changed = true; changed;) {
        changed = false;
        for (int e = 0; e < cur.num_edges(); ++e)
            if (cur.edge(e)[0] == cur.edge(e)[1]) {
                cur = subdivide_edge(cur, e, 1);
                changed = true;
                break;
            }
        if (changed) continue;
        {
            std::set<std::pair<int, int>> seen;
            for (int e = 0; e < cur.num_edges() && !changed; ++e) {
                std::pair<int, int> mm = std::minmax(cur.edge(e)[0], cur.edge(e)[1]);
                if (!seen.insert({mm.first, mm.second}).second) {
                    cur = subdivide_edge(cur, e, 1);
                    changed = true;
                }
            }
        }
        if (changed) continue;
        for (const auto& seg : essential_segments(cur)) {
            if (seg.start == seg.end) continue;
            int need = policy.path_min_edges(n) - static_cast<int>(seg.edges.size());
            if (need > 0) {
                cur = subdivide_edge(cur, seg.edges.front(), need);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        while (true) {
            auto sc = shortest_cycle(cur);
            if (!sc || sc->length >= policy.cycle_min_edges(n)) break;
            cur = subdivide_edge(cur, sc->edge, policy.cycle_min_edges(n) - sc->length);
            changed = true;
        }
        if (changed) continue;
        while (cur.num_vertices() < policy.min_vertices(n)) {
            if (cur.num_edges() == 0)
                throw invalid_input("graph cannot be subdivided to " +
                                    std::to_string(policy.min_vertices(n)) + " vertices");
            cur = subdivide_edge(cur, 0, policy.min_vertices(n) - cur.num_vertices());
            changed = true;
        }
    }
    return cur;
}

bool same_labeled_graph(const Multigraph& a, const Multigraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::set<std::string> la(a.labels().begin(), a.labels().end());
    std::set<std::string> lb(b.labels().begin(), b.labels().end());
    if (la != lb) return false;
    std::multiset<std::pair<std::string, std::string>> ea, eb;
    for (int e = 0; e < a.num_edges(); ++e) {
        auto p = std::make_pair(a.label(a.edge(e)[0]), a.label(a.edge(e)[1]));
        if (p.second < p.first) std::swap(p.first, p.second);
        ea.insert(p);
    }
    for (int e = 0; e < b.num_edges(); ++e) {
        auto p = std::make_pair(b.label(b.edge(e)[0]), b.label(b.edge(e)[1]));
        if (p.second < p.first) std::swap(p.first, p.second);
        eb.insert(p);
    }
    return ea == eb;
}

} // namespace braidconf

#include "braidconf/cube_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "braidconf/errors.hpp"

namespace braidconf {

std::string config_label(const Multigraph& g, std::vector<int> vertices) {
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (int v : vertices) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end(), label_less);
    bool compact = std::all_of(labels.begin(), labels.end(),
                               [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i && !compact) out += ",";
        out += labels[i];
    }
    return out;
}

namespace {

// Rank permutations putting vertex/edge ids into canonical label order.
std::vector<int> vertex_ranks(const Multigraph& g) {
    std::vector<int> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return label_less(g.label(a), g.label(b)); });
    std::vector<int> rank(g.num_vertices());
    for (int i = 0; i < (int)order.size(); ++i) rank[order[i]] = i;
    return rank;
}

std::vector<int> edge_ranks(const Multigraph& g) {
    std::vector<int> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto la = g.edge_label(a), lb = g.edge_label(b);
        return la != lb ? la < lb : a < b;
    });
    std::vector<int> rank(g.num_edges());
    for (int i = 0; i < (int)order.size(); ++i) rank[order[i]] = i;
    return rank;
}

struct Canon {
    std::vector<int> vrank, erank;
    void canonicalize(Cell& c) const {
        std::sort(c.moving.begin(), c.moving.end(),
                  [&](int a, int b) { return erank[a] < erank[b]; });
        std::sort(c.parked.begin(), c.parked.end(),
                  [&](int a, int b) { return vrank[a] < vrank[b]; });
    }
    bool cell_less(const Cell& a, const Cell& b) const {
        auto key = [&](const Cell& c) {
            std::pair<std::vector<int>, std::vector<int>> k;
            for (int e : c.moving) k.first.push_back(erank[e]);
            for (int v : c.parked) k.second.push_back(vrank[v]);
            return k;
        };
        return key(a) < key(b);
    }
};

} // namespace

std::optional<int> CubeComplex::find_cell(int dim, const Cell& c) const {
    if (dim < 0 || dim > dimension()) return std::nullopt;
    Cell key = c;
    Canon canon{vertex_ranks(graph_), edge_ranks(graph_)};
    canon.canonicalize(key);
    auto it = index_[dim].find(key);
    if (it == index_[dim].end()) return std::nullopt;
    return it->second;
}

std::optional<int> CubeComplex::find_vertex_cell(const std::vector<std::string>& occupied) const {
    Cell c;
    for (const auto& l : occupied) {
        auto v = graph_.find_vertex(l);
        if (!v) return std::nullopt;
        c.parked.push_back(*v);
    }
    return find_cell(0, c);
}

void CubeComplex::index_cells() {
    // Trim trailing empty dimensions.
    while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();

    Canon canon{vertex_ranks(graph_), edge_ranks(graph_)};
    for (auto& layer : cells_) {
        for (auto& c : layer) canon.canonicalize(c);
        std::sort(layer.begin(), layer.end(),
                  [&](const Cell& a, const Cell& b) { return canon.cell_less(a, b); });
    }
    index_.assign(cells_.size(), {});
    for (int d = 0; d <= dimension(); ++d)
        for (int i = 0; i < num_cells(d); ++i) index_[d][cells_[d][i]] = i;

    faces_.assign(cells_.size(), {});
    cofaces_.assign(cells_.size(), {});
    for (int d = 0; d <= dimension(); ++d) {
        faces_[d].resize(num_cells(d));
        cofaces_[d].resize(num_cells(d));
    }
    for (int d = 1; d <= dimension(); ++d) {
        for (int i = 0; i < num_cells(d); ++i) {
            const Cell& c = cells_[d][i];
            for (int e : c.moving) {
                for (int endpoint : graph_.edge(e)) {
                    Cell f;
                    for (int e2 : c.moving)
                        if (e2 != e) f.moving.push_back(e2);
                    f.parked = c.parked;
                    f.parked.push_back(endpoint);
                    canon.canonicalize(f);
                    auto it = index_[d - 1].find(f);
                    if (it == index_[d - 1].end())
                        throw invalid_input("cell list not closed under faces at " +
                                            cell_label(d, i));
                    faces_[d][i].push_back(it->second);
                    cofaces_[d - 1][it->second].push_back(i);
                }
            }
        }
    }
}

CubeComplex CubeComplex::build(const Multigraph& g, int n, bool force,
                               const SubdivisionPolicy& policy) {
    if (n < 1) throw invalid_parameter("strand count must be >= 1");
    if (auto violation = admissibility_violation(g, n, policy); violation && !force)
        throw invalid_input("graph not admissible for " + std::to_string(n) +
                            " strands: " + *violation);

    CubeComplex X;
    X.graph_ = g;
    X.strands_ = n;
    X.cells_.assign(n + 1, {});

    const int E = g.num_edges();
    std::vector<bool> blocked(g.num_vertices());
    // Choose k pairwise disjoint moving edges, then n-k parked vertices off
    // those edges.
    std::vector<int> moving;
    std::function<void(int)> choose_edges = [&](int start) {
        int k = static_cast<int>(moving.size());
        if (k <= n) {
            std::vector<int> free_vertices;
            for (int v = 0; v < g.num_vertices(); ++v)
                if (!blocked[v]) free_vertices.push_back(v);
            int need = n - k;
            if (need <= static_cast<int>(free_vertices.size())) {
                std::vector<int> parked;
                std::function<void(int)> choose_parked = [&](int s) {
                    if (static_cast<int>(parked.size()) == need) {
                        X.cells_[k].push_back(Cell{moving, parked});
                        return;
                    }
                    for (int i = s; i < (int)free_vertices.size(); ++i) {
                        parked.push_back(free_vertices[i]);
                        choose_parked(i + 1);
                        parked.pop_back();
                    }
                };
                choose_parked(0);
            }
        }
        if (k == n) return;
        for (int e = start; e < E; ++e) {
            bool ok = true;
            for (int m : moving)
                if (!edges_disjoint(g, m, e)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            moving.push_back(e);
            for (int v : g.edge(e)) blocked[v] = true;
            choose_edges(e + 1);
            moving.pop_back();
            for (int v : g.edge(e)) blocked[v] = false;
        }
    };
    choose_edges(0);
    X.index_cells();
    return X;
}

CubeComplex CubeComplex::from_cells(const Multigraph& g, int n, std::vector<Cell> cells) {
    CubeComplex X;
    X.graph_ = g;
    X.strands_ = n;
    int maxdim = 0;
    for (const auto& c : cells) {
        if (static_cast<int>(c.moving.size() + c.parked.size()) != n)
            throw invalid_input("cell does not have " + std::to_string(n) + " strands");
        for (size_t i = 0; i < c.moving.size(); ++i)
            for (size_t j = i + 1; j < c.moving.size(); ++j)
                if (!edges_disjoint(g, c.moving[i], c.moving[j]))
                    throw invalid_input("moving edges not pairwise disjoint");
        for (int v : c.parked)
            for (int e : c.moving)
                if (g.edge(e)[0] == v || g.edge(e)[1] == v)
                    throw invalid_input("parked vertex lies on a moving edge");
        maxdim = std::max(maxdim, c.dimension());
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    X.cells_.assign(maxdim + 1, {});
    for (auto& c : cells) X.cells_[c.dimension()].push_back(std::move(c));
    X.index_cells();
    return X;
}

std::string CubeComplex::vertex_label(int idx) const {
    return config_label(graph_, cells_.at(0).at(idx).parked);
}

std::string CubeComplex::cell_label(int dim, int idx) const {
    const Cell& c = cells_.at(dim).at(idx);
    std::string out = "{";
    for (size_t i = 0; i < c.moving.size(); ++i)
        out += (i ? "," : "") + graph_.edge_label(c.moving[i]);
    out += "|";
    out += config_label(graph_, c.parked);
    out += "}";
    return out;
}

FVector CubeComplex::f_vector() const {
    FVector f;
    if (cells_.empty()) {
        f.counts.assign(strands_ + 1, 0);
        return f;
    }
    for (const auto& layer : cells_) f.counts.push_back(static_cast<long long>(layer.size()));
    return f;
}

long long CubeComplex::euler_characteristic() const {
    long long chi = 0;
    int sign = 1;
    for (long long c : f_vector().counts) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

LinkComplex CubeComplex::vertex_link(int vertex_idx) const {
    if (vertex_idx < 0 || vertex_idx >= num_cells(0))
        throw not_found("no 0-cell with index " + std::to_string(vertex_idx));
    const Cell& v = cells_[0][vertex_idx];
    std::set<int> occupied(v.parked.begin(), v.parked.end());

    LinkComplex lk;
    lk.base = vertex_idx;
    std::map<int, int> by_edge; // graph edge -> link vertex index
    for (int e1 : cofaces_[0][vertex_idx]) {
        const Cell& c = cells_[1][e1];
        int dir = c.moving[0];
        int moved = occupied.count(graph_.edge(dir)[0]) ? graph_.edge(dir)[0] : graph_.edge(dir)[1];
        int target = graph_.edge(dir)[0] == moved ? graph_.edge(dir)[1] : graph_.edge(dir)[0];
        std::vector<int> neighbor;
        for (int u : occupied)
            neighbor.push_back(u == moved ? target : u);
        by_edge[dir] = static_cast<int>(lk.vertices.size());
        lk.vertices.push_back({dir, moved, config_label(graph_, neighbor)});
    }
    // Squares (and cubes) at v give link edges (and triangles).
    std::set<int> squares, cubes;
    for (int e1 : cofaces_[0][vertex_idx]) {
        for (int s : cofaces_[1][e1]) {
            const Cell& sq = cells_[2][s];
            bool corner = std::includes(occupied.begin(), occupied.end(),
                                        sq.parked.begin(), sq.parked.end());
            for (int m : sq.moving)
                corner = corner && (occupied.count(graph_.edge(m)[0]) ||
                                    occupied.count(graph_.edge(m)[1]));
            if (corner) squares.insert(s);
        }
    }
    for (int s : squares) {
        const Cell& sq = cells_[2][s];
        lk.edges.push_back({by_edge.at(sq.moving[0]), by_edge.at(sq.moving[1])});
        lk.edge_square.push_back(s);
        if (dimension() >= 3)
            for (int c3 : cofaces_[2][s]) cubes.insert(c3);
    }
    for (int c3 : cubes) {
        const Cell& cu = cells_[3][c3];
        bool corner = std::includes(occupied.begin(), occupied.end(),
                                    cu.parked.begin(), cu.parked.end());
        for (int m : cu.moving)
            corner = corner && (occupied.count(graph_.edge(m)[0]) ||
                                occupied.count(graph_.edge(m)[1]));
        if (corner)
            lk.triangles.push_back({by_edge.at(cu.moving[0]), by_edge.at(cu.moving[1]),
                                    by_edge.at(cu.moving[2])});
    }
    return lk;
}

LinkComplex CubeComplex::vertex_link(const std::string& label) const {
    for (int i = 0; i < num_cells(0); ++i)
        if (vertex_label(i) == label) return vertex_link(i);
    throw not_found("no 0-cell labeled " + label);
}

Multigraph LinkComplex::graph() const {
    Multigraph g;
    for (const auto& v : vertices) g.add_vertex(v.config_label);
    for (const auto& e : edges) g.add_edge(e[0], e[1]);
    return g;
}

int CubeComplex::edge_face_count(int edge_idx) const {
    if (edge_idx < 0 || edge_idx >= num_cells(1))
        throw not_found("no 1-cell with index " + std::to_string(edge_idx));
    return static_cast<int>(cofaces_[1][edge_idx].size());
}

bool CubeComplex::connected() const {
    int n0 = num_cells(0);
    if (n0 == 0) return true;
    std::vector<bool> seen(n0, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : cofaces_[0][v])
            for (int w : faces_[1][e])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    q.push(w);
                }
    }
    return count == n0;
}

bool CubeComplex::is_single_cycle() const {
    if (dimension() != 1 || num_cells(0) == 0) return false;
    if (num_cells(0) != num_cells(1)) return false;
    for (int v = 0; v < num_cells(0); ++v)
        if (static_cast<int>(cofaces_[0][v].size()) != 2) return false;
    return connected();
}

std::vector<LinkReport> CubeComplex::check_links() const {
    std::vector<LinkReport> out;
    Canon canon{vertex_ranks(graph_), edge_ranks(graph_)};
    for (int v = 0; v < num_cells(0); ++v) {
        LinkComplex lk = vertex_link(v);
        LinkReport r;
        r.vertex = vertex_label(v);
        int nl = static_cast<int>(lk.vertices.size());
        std::vector<std::vector<bool>> adj(nl, std::vector<bool>(nl, false));
        std::vector<std::vector<int>> nbrs(nl);
        for (const auto& e : lk.edges) {
            adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
            nbrs[e[0]].push_back(e[1]);
            nbrs[e[1]].push_back(e[0]);
        }
        // Flag condition: every clique of the link 1-skeleton spans a cube
        // at v. Checked for cliques of size 3..strands (larger cliques are
        // impossible without their sub-cliques failing first).
        std::set<int> occupied(cells_[0][v].parked.begin(), cells_[0][v].parked.end());
        std::function<bool(std::vector<int>&, int)> cliques_ok = [&](std::vector<int>& clique,
                                                                     int start) -> bool {
            if (clique.size() >= 3) {
                Cell c;
                for (int lv : clique) c.moving.push_back(lk.vertices[lv].edge);
                std::set<int> covered;
                for (int lv : clique) covered.insert(lk.vertices[lv].moved_vertex);
                for (int u : occupied)
                    if (!covered.count(u)) c.parked.push_back(u);
                if (!find_cell(static_cast<int>(clique.size()), c)) return false;
            }
            if (static_cast<int>(clique.size()) == strands_) return true;
            for (int w = start; w < nl; ++w) {
                bool ext = std::all_of(clique.begin(), clique.end(),
                                       [&](int u) { return adj[u][w]; });
                if (!ext) continue;
                clique.push_back(w);
                bool ok = cliques_ok(clique, w + 1);
                clique.pop_back();
                if (!ok) return false;
            }
            return true;
        };
        std::vector<int> clique;
        for (int a = 0; a < nl && r.flag; ++a) {
            clique = {a};
            for (int b = a + 1; b < nl && r.flag; ++b) {
                if (!adj[a][b]) continue;
                clique = {a, b};
                if (!cliques_ok(clique, b + 1)) r.flag = false;
            }
        }

        Multigraph lg = lk.graph();
        r.connected = nl <= 1 || lg.is_connected();
        r.min_girth = girth(lg).value_or(0);
        // Articulation points via DFS low-link.
        r.has_cut_vertex = false;
        {
            std::vector<int> disc(nl, -1), low(nl, 0);
            int timer = 0;
            std::function<void(int, int)> dfs = [&](int u, int parent) {
                disc[u] = low[u] = timer++;
                int children = 0;
                for (int w : nbrs[u]) {
                    if (w == parent) {
                        parent = -2; // consume one parent edge (multi-edge safe)
                        continue;
                    }
                    if (disc[w] == -1) {
                        ++children;
                        dfs(w, u);
                        low[u] = std::min(low[u], low[w]);
                        if (parent != u && disc[u] != 0 && low[w] >= disc[u])
                            r.has_cut_vertex = true;
                    } else {
                        low[u] = std::min(low[u], disc[w]);
                    }
                }
                if (disc[u] == 0 && children > 1) r.has_cut_vertex = true;
            };
            for (int u = 0; u < nl; ++u)
                if (disc[u] == -1) {
                    timer = 0;
                    dfs(u, -1);
                }
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace braidconf

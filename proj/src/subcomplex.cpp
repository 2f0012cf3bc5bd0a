#include "braidconf/subcomplex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace braidconf {

namespace {

Multigraph induced_graph(const Multigraph& g, const std::set<int>& keep) {
    Multigraph h;
    std::map<int, int> remap;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (keep.count(v)) remap[v] = h.add_vertex(g.label(v));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (keep.count(u) && keep.count(v)) h.add_edge(remap[u], remap[v]);
    }
    return h;
}

SubcomplexInclusion make_inclusion(const CubeComplex& ambient,
                                   const std::vector<std::string>& subgraph_vertices,
                                   const SubdivisionPolicy& policy) {
    const Multigraph& g = ambient.graph();
    std::set<int> keep;
    for (const std::string& label : subgraph_vertices) keep.insert(g.vertex(label));

    Multigraph h = induced_graph(g, keep);
    if (!h.is_connected())
        throw invalid_input("vertex subset induces a disconnected subgraph");
    if (auto bad = admissibility_violation(h, ambient.strands(), policy))
        throw invalid_input("induced subgraph not admissible: " + *bad);

    std::vector<Cell> cells;
    for (int d = 0; d <= ambient.dimension(); ++d)
        for (const Cell& c : ambient.cells(d)) {
            bool inside = std::all_of(c.parked.begin(), c.parked.end(),
                                      [&](int v) { return keep.count(v) > 0; }) &&
                          std::all_of(c.moving.begin(), c.moving.end(), [&](int e) {
                              return keep.count(g.edge(e)[0]) && keep.count(g.edge(e)[1]);
                          });
            if (inside) cells.push_back(c);
        }

    SubcomplexInclusion inc;
    inc.ambient = ambient;
    inc.sub = CubeComplex::from_cells(g, ambient.strands(), std::move(cells));
    inc.cell_map.resize(inc.sub.dimension() + 1);
    for (int d = 0; d <= inc.sub.dimension(); ++d)
        for (int i = 0; i < inc.sub.num_cells(d); ++i) {
            auto idx = ambient.find_cell(d, inc.sub.cell(d, i));
            if (!idx) throw std::logic_error("sub-cell missing from the ambient complex");
            inc.cell_map[d].push_back(*idx);
        }
    return inc;
}

} // namespace

SubcomplexInclusion induced_subcomplex(const Multigraph& g,
                                       const std::vector<std::string>& subgraph_vertices, int n,
                                       const SubdivisionPolicy& policy) {
    return make_inclusion(CubeComplex::build(g, n, false, policy), subgraph_vertices, policy);
}

SubcomplexInclusion induced_subcomplex(const CubeComplex& ambient,
                                       const std::vector<std::string>& subgraph_vertices,
                                       const SubdivisionPolicy& policy) {
    return make_inclusion(ambient, subgraph_vertices, policy);
}

FullnessReport check_full_links(const SubcomplexInclusion& inc) {
    FullnessReport rep;
    for (int v = 0; v < inc.sub.num_cells(0); ++v) {
        LinkComplex sub_lk = inc.sub.vertex_link(v);
        LinkComplex amb_lk = inc.ambient.vertex_link(inc.cell_map[0][v]);

        // Link vertices are identified by their direction (edge, moved vertex).
        auto key = [](const LinkVertex& lv) { return std::pair{lv.edge, lv.moved_vertex}; };
        std::map<std::pair<int, int>, int> in_sub;
        for (int i = 0; i < static_cast<int>(sub_lk.vertices.size()); ++i)
            in_sub[key(sub_lk.vertices[i])] = i;
        std::vector<int> amb_to_sub(amb_lk.vertices.size(), -1);
        for (int i = 0; i < static_cast<int>(amb_lk.vertices.size()); ++i) {
            auto it = in_sub.find(key(amb_lk.vertices[i]));
            if (it != in_sub.end()) amb_to_sub[i] = it->second;
        }

        std::set<std::vector<int>> sub_simplices;
        for (const auto& e : sub_lk.edges) {
            std::vector<int> s{e[0], e[1]};
            std::sort(s.begin(), s.end());
            sub_simplices.insert(s);
        }
        for (const auto& t : sub_lk.triangles) {
            std::vector<int> s{t[0], t[1], t[2]};
            std::sort(s.begin(), s.end());
            sub_simplices.insert(s);
        }

        auto report = [&](const std::vector<int>& amb_simplex) {
            FullnessWitness w;
            w.vertex = inc.sub.vertex_label(v);
            for (int i : amb_simplex) w.simplex.push_back(amb_lk.vertices[i].config_label);
            rep.witnesses.push_back(std::move(w));
            rep.full = false;
        };
        auto check = [&](std::vector<int> amb_simplex) {
            std::vector<int> s;
            for (int i : amb_simplex) {
                if (amb_to_sub[i] < 0) return;
                s.push_back(amb_to_sub[i]);
            }
            std::sort(s.begin(), s.end());
            if (!sub_simplices.count(s)) report(amb_simplex);
        };
        for (const auto& e : amb_lk.edges) check({e[0], e[1]});
        for (const auto& t : amb_lk.triangles) check({t[0], t[1], t[2]});
    }
    return rep;
}

CubeComplex pairwise_intersection(const SubcomplexInclusion& a, const SubcomplexInclusion& b) {
    if (!same_labeled_graph(a.ambient.graph(), b.ambient.graph()) ||
        a.ambient.strands() != b.ambient.strands())
        throw invalid_parameter("intersection requires inclusions into the same complex");
    std::vector<Cell> common;
    for (int d = 0; d <= a.sub.dimension(); ++d)
        for (const Cell& c : a.sub.cells(d))
            if (d <= b.sub.dimension() && b.sub.find_cell(d, c)) common.push_back(c);
    return CubeComplex::from_cells(a.ambient.graph(), a.ambient.strands(), std::move(common));
}

} // namespace braidconf

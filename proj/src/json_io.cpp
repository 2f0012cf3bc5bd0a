#include "braidconf/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace braidconf {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    out << text;
}

namespace {

json parse_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(what + ": " + e.what());
    }
}

const json& field(const json& j, const std::string& key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(ctx + ": missing field \"" + key + "\"");
    return *it;
}

} // namespace

Multigraph parse_graph(const std::string& text) {
    json j = parse_text(text, "graph");
    Multigraph g;
    for (const auto& v : field(j, "vertices", "graph")) {
        if (!v.is_string()) throw parse_error("graph: vertices must be strings");
        if (g.find_vertex(v.get<std::string>()))
            throw parse_error("graph: duplicate vertex \"" + v.get<std::string>() + "\"");
        g.add_vertex(v.get<std::string>());
    }
    int line = 0;
    for (const auto& e : field(j, "edges", "graph")) {
        ++line;
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw parse_error("graph: edge " + std::to_string(line - 1) +
                              " must be a pair of vertex labels");
        auto u = g.find_vertex(e[0].get<std::string>());
        auto v = g.find_vertex(e[1].get<std::string>());
        if (!u || !v)
            throw parse_error("graph: edge " + std::to_string(line - 1) +
                              " references an unknown vertex");
        g.add_edge(*u, *v);
    }
    return g;
}

Multigraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

json graph_to_json(const Multigraph& g) {
    json j;
    j["vertices"] = g.labels();
    j["edges"] = json::array();
    for (int e = 0; e < g.num_edges(); ++e)
        j["edges"].push_back({g.label(g.edge(e)[0]), g.label(g.edge(e)[1])});
    return j;
}

json complex_to_json(const CubeComplex& X) {
    json j;
    j["strands"] = X.strands();
    j["graph"] = graph_to_json(X.graph());
    j["cells"] = json::object();
    for (int d = 0; d <= X.dimension(); ++d) {
        json arr = json::array();
        for (const Cell& c : X.cells(d)) {
            json cell;
            cell["moving"] = c.moving;
            cell["parked"] = json::array();
            for (int v : c.parked) cell["parked"].push_back(X.graph().label(v));
            arr.push_back(std::move(cell));
        }
        j["cells"][std::to_string(d)] = std::move(arr);
    }
    return j;
}

json homology_to_json(const HomologySummary& h, Coeff coeff) {
    json j;
    j["coeff"] = coeff == Coeff::Z ? "Z" : coeff == Coeff::Q ? "Q" : "Z2";
    j["H"] = json::array();
    for (const auto& g : h.groups) {
        json grp;
        grp["rank"] = g.rank;
        grp["torsion"] = json::array();
        for (const bigint& t : g.torsion) grp["torsion"].push_back(t.convert_to<long long>());
        j["H"].push_back(std::move(grp));
    }
    return j;
}

RotationEmbedding embedding_from_json(const json& j, const Multigraph& link) {
    RotationEmbedding emb;
    emb.graph = link;
    const std::string orient = field(j, "orientation", "embedding").get<std::string>();
    if (orient != "cw" && orient != "ccw")
        throw parse_error("embedding: orientation must be \"cw\" or \"ccw\"");
    emb.clockwise = orient == "cw";
    emb.rotation.assign(link.num_vertices(), {});
    const json& rot = field(j, "rotation", "embedding");
    for (auto it = rot.begin(); it != rot.end(); ++it) {
        auto v = link.find_vertex(it.key());
        if (!v) throw parse_error("embedding: unknown link vertex \"" + it.key() + "\"");
        for (const auto& nb : it.value()) {
            auto u = link.find_vertex(nb.get<std::string>());
            if (!u)
                throw parse_error("embedding: unknown neighbor \"" + nb.get<std::string>() +
                                  "\" at " + it.key());
            emb.rotation[*v].push_back(*u);
        }
    }
    // Stored rotation reads clockwise; normalize ccw input.
    if (!emb.clockwise) {
        for (auto& r : emb.rotation) std::reverse(r.begin(), r.end());
        emb.clockwise = true;
    }
    for (int v = 0; v < link.num_vertices(); ++v) {
        if (static_cast<int>(emb.rotation[v].size()) != link.degree(v))
            throw parse_error("embedding: rotation at " + link.label(v) +
                              " does not list each neighbor once");
        auto sorted = emb.rotation[v];
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect;
        for (int e : link.incident_edges(v))
            expect.push_back(link.edge(e)[0] == v ? link.edge(e)[1] : link.edge(e)[0]);
        std::sort(expect.begin(), expect.end());
        if (sorted != expect)
            throw parse_error("embedding: rotation at " + link.label(v) +
                              " does not match its neighbors");
    }
    return emb;
}

json embedding_to_json(const RotationEmbedding& emb) {
    json j;
    j["orientation"] = emb.clockwise ? "cw" : "ccw";
    json rot = json::object();
    std::vector<int> order(emb.graph.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return label_less(emb.graph.label(a), emb.graph.label(b));
    });
    for (int v : order) {
        json arr = json::array();
        for (int u : emb.rotation[v]) arr.push_back(emb.graph.label(u));
        rot[emb.graph.label(v)] = std::move(arr);
    }
    j["rotation"] = std::move(rot);
    return j;
}

EmbeddingFamily family_from_json(const json& j, const ObstructionProblem& p) {
    const json& fams = field(j, "families", "family");
    EmbeddingFamily out;
    for (const auto& lv : p.links) {
        auto it = fams.find(lv.vertex_label);
        if (it == fams.end())
            throw parse_error("family: missing embedding for vertex " + lv.vertex_label);
        out.by_vertex[lv.vertex_label] = embedding_from_json(*it, lv.link);
    }
    return out;
}

json family_to_json(const EmbeddingFamily& fam) {
    json fams = json::object();
    for (const auto& [label, emb] : fam.by_vertex) fams[label] = embedding_to_json(emb);
    return json{{"families", std::move(fams)}};
}

json obstruction_report_to_json(const ObstructionReport& rep) {
    json j;
    j["edges"] = json::array();
    for (size_t i = 0; i < rep.edge_labels.size(); ++i)
        j["edges"].push_back({{"edge", rep.edge_labels[i]}, {"omega", rep.omega.values[i]}});
    j["zero"] = rep.trivial;
    j["coboundary"] = rep.coboundary.has_value();
    if (rep.coboundary)
        j["coboundary_flips"] = *rep.coboundary;
    else
        j["coboundary_flips"] = nullptr;
    return j;
}

json fullness_report_to_json(const FullnessReport& rep) {
    json j;
    j["full"] = rep.full;
    j["witnesses"] = json::array();
    for (const auto& w : rep.witnesses)
        j["witnesses"].push_back({{"vertex", w.vertex}, {"simplex", w.simplex}});
    return j;
}

json kuratowski_to_json(const Multigraph& h, const KuratowskiWitness& w) {
    json j;
    j["kind"] = w.kind == KuratowskiWitness::Kind::K5 ? "K5" : "K33";
    j["branch_vertices"] = json::array();
    for (int v : w.branch_vertices) j["branch_vertices"].push_back(h.label(v));
    j["paths"] = json::array();
    for (const auto& p : w.paths) {
        json path = json::array();
        for (int v : p) path.push_back(h.label(v));
        j["paths"].push_back(std::move(path));
    }
    return j;
}

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

} // namespace

std::string dot_graph(const Multigraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    std::vector<int> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return label_less(g.label(a), g.label(b)); });
    for (int v : order) out << "  " << quote(g.label(v)) << ";\n";
    std::vector<std::string> lines;
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.edge(e)[0], v = g.edge(e)[1];
        if (label_less(g.label(v), g.label(u))) std::swap(u, v);
        lines.push_back("  " + quote(g.label(u)) + " -- " + quote(g.label(v)) + ";\n");
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) out << l;
    out << "}\n";
    return out.str();
}

std::string dot_skeleton(const CubeComplex& X) {
    Multigraph sk;
    for (int v = 0; v < X.num_cells(0); ++v) sk.add_vertex(X.vertex_label(v));
    for (int e = 0; e < X.num_cells(1); ++e)
        sk.add_edge(X.faces(1, e)[0], X.faces(1, e)[1]);
    return dot_graph(sk, "skeleton");
}

std::string dot_link(const CubeComplex& X, const LinkComplex& lk) {
    std::ostringstream out;
    out << "graph " << quote("Lk_" + X.vertex_label(lk.base)) << " {\n";
    std::vector<int> order(lk.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return label_less(lk.vertices[a].config_label, lk.vertices[b].config_label);
    });
    for (int i : order)
        out << "  " << quote(lk.vertices[i].config_label) << " [dir="
            << quote(X.graph().edge_label(lk.vertices[i].edge)) << "];\n";
    std::vector<std::string> lines;
    for (const auto& e : lk.edges) {
        std::string a = lk.vertices[e[0]].config_label, b = lk.vertices[e[1]].config_label;
        if (label_less(b, a)) std::swap(a, b);
        lines.push_back("  " + quote(a) + " -- " + quote(b) + ";\n");
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) out << l;
    out << "}\n";
    return out.str();
}

std::string dot_xprime(const XPrimeGraph& xp) {
    Multigraph g;
    for (const auto& label : xp.vertex_labels) g.add_vertex(label);
    for (const auto& e : xp.ends) g.add_edge(e[0], e[1]);
    return dot_graph(g, "xprime");
}

} // namespace braidconf

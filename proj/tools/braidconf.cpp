#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "braidconf/json_io.hpp"

using namespace braidconf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;    // analysis-negative verdict
constexpr int kExitPrecondition = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitUsage = 64;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_file(out_path, text + "\n");
}

void emit(const json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

// Optional memo of planarity verdicts keyed by the canonical DOT text.
std::optional<bool> cached_planarity(const Multigraph& g) {
    const char* dir = std::getenv("BRAIDCOMPLEX_CACHE_DIR");
    if (!dir) return std::nullopt;
    auto key = std::to_string(std::hash<std::string>{}(dot_graph(g)));
    std::filesystem::path p = std::filesystem::path(dir) / ("planar-" + key);
    std::error_code ec;
    if (!std::filesystem::exists(p, ec)) return std::nullopt;
    return read_file(p.string()) == "1";
}

void store_planarity(const Multigraph& g, bool planar) {
    const char* dir = std::getenv("BRAIDCOMPLEX_CACHE_DIR");
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    auto key = std::to_string(std::hash<std::string>{}(dot_graph(g)));
    std::filesystem::path p = std::filesystem::path(dir) / ("planar-" + key);
    write_file(p.string(), planar ? "1" : "0");
}

struct CommonArgs {
    std::string graph_path;
    int strands = 0;
};

CubeComplex build_complex(const CommonArgs& a, bool force = false) {
    return CubeComplex::build(load_graph(a.graph_path), a.strands, force);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"configuration-space cube complexes of graphs: build, analyze, verify"};
    app.require_subcommand(1);
    int exit_code = kExitOk;
    std::function<void()> action;

    // gen theta --m M [-o file]
    auto* gen = app.add_subcommand("gen", "generate standard graphs");
    gen->require_subcommand(1);
    auto* gen_theta = gen->add_subcommand("theta", "two poles joined by m strands");
    int theta_m = 0;
    std::string gen_out;
    gen_theta->add_option("--m", theta_m, "number of strands")->required();
    gen_theta->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen_theta->callback([&] {
        action = [&] { emit(graph_to_json(make_theta(theta_m)), gen_out); };
    });

    CommonArgs common;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--graph", common.graph_path, "graph JSON file")->required();
        cmd->add_option("--strands", common.strands, "number of strands")->required();
    };

    // build
    auto* build = app.add_subcommand("build", "build the configuration complex");
    bool build_stats = false, build_force = false;
    std::string build_out;
    add_common(build);
    build->add_flag("--stats", build_stats, "print f-vector and Euler characteristic only");
    build->add_flag("--force", build_force, "skip the admissibility gate");
    build->add_option("-o,--output", build_out, "output file (default stdout)");
    build->callback([&] {
        action = [&] {
            Multigraph g = load_graph(common.graph_path);
            CubeComplex X = CubeComplex::build(g, common.strands, build_force);
            json j;
            if (build_stats) {
                j["f"] = X.f_vector().counts;
                j["chi"] = X.euler_characteristic();
            } else {
                j = complex_to_json(X);
            }
            if (build_force)
                if (auto bad = admissibility_violation(g, common.strands))
                    j["warning"] = "graph not admissible: " + *bad;
            emit(j, build_out);
        };
    });

    // links
    auto* links = app.add_subcommand("links", "analyze vertex links");
    std::string links_vertex;
    bool links_planar = false;
    add_common(links);
    links->add_option("--vertex", links_vertex, "restrict to one 0-cell (config label)");
    links->add_flag("--check-planar", links_planar, "also test each link for planarity");
    links->callback([&] {
        action = [&] {
            CubeComplex X = build_complex(common);
            json arr = json::array();
            bool all_planar = true;
            for (const LinkReport& r : X.check_links()) {
                if (!links_vertex.empty() && r.vertex != links_vertex) continue;
                json lr{{"vertex", r.vertex},
                        {"flag", r.flag},
                        {"connected", r.connected},
                        {"has_cut_vertex", r.has_cut_vertex},
                        {"girth", r.min_girth}};
                if (links_planar) {
                    Multigraph lg = X.vertex_link(r.vertex).graph();
                    auto hit = cached_planarity(lg);
                    if (hit && *hit) {
                        lr["planar"] = true;
                    } else {
                        auto res = test_planar(lg);
                        bool planar = std::holds_alternative<RotationEmbedding>(res);
                        store_planarity(lg, planar);
                        lr["planar"] = planar;
                        if (!planar)
                            lr["kuratowski"] =
                                kuratowski_to_json(lg, std::get<KuratowskiWitness>(res));
                    }
                    if (!lr["planar"].get<bool>()) all_planar = false;
                }
                arr.push_back(std::move(lr));
            }
            if (!links_vertex.empty() && arr.empty())
                throw not_found("no 0-cell labeled " + links_vertex);
            emit(arr, "");
            if (links_planar && !all_planar) exit_code = kExitNegative;
        };
    });

    // homology
    auto* hom = app.add_subcommand("homology", "homology of the complex");
    std::string coeff_str = "z";
    add_common(hom);
    hom->add_option("--coeff", coeff_str, "coefficients: z, z2, or q")
        ->check(CLI::IsMember({"z", "z2", "q"}));
    hom->callback([&] {
        action = [&] {
            CubeComplex X = build_complex(common);
            if (coeff_str == "z") {
                emit(homology_to_json(integral_homology(X), Coeff::Z), "");
            } else {
                Coeff c = coeff_str == "q" ? Coeff::Q : Coeff::Z2;
                HomologySummary h;
                for (int b : betti_numbers(X, c)) h.groups.push_back({b, {}});
                emit(homology_to_json(h, c), "");
            }
        };
    });

    // lasheras {xprime, verify, search}
    auto* las = app.add_subcommand("lasheras", "thickening obstruction on X'");
    las->require_subcommand(1);
    std::string family_path, las_format = "json", las_out;
    unsigned las_seed = 0;
    long long budget_ms = 60000;
    int threads = 1;

    auto* xprime = las->add_subcommand("xprime", "the subgraph of 1-cells in >= 3 squares");
    add_common(xprime);
    xprime->add_option("--format", las_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    xprime->callback([&] {
        action = [&] {
            XPrimeGraph xp = build_xprime(build_complex(common));
            if (las_format == "dot") {
                emit(dot_xprime(xp), "");
                return;
            }
            json j{{"vertices", xp.vertex_labels}, {"edges", json::array()}};
            for (size_t i = 0; i < xp.edges.size(); ++i)
                j["edges"].push_back({xp.vertex_labels[xp.ends[i][0]],
                                      xp.vertex_labels[xp.ends[i][1]]});
            emit(j, "");
        };
    });

    auto* verify = las->add_subcommand("verify", "evaluate the cochain of a family");
    add_common(verify);
    verify->add_option("--family", family_path, "embedding family JSON")->required();
    verify->callback([&] {
        action = [&] {
            CubeComplex X = build_complex(common);
            ObstructionProblem p = extract_problem(X, build_xprime(X));
            EmbeddingFamily fam = family_from_json(json::parse(read_file(family_path)), p);
            ObstructionReport rep = verify_family(p, fam);
            emit(obstruction_report_to_json(rep), "");
            if (!rep.trivial) exit_code = kExitNegative;
        };
    });

    auto* search = las->add_subcommand("search", "search for a trivializing family");
    add_common(search);
    search->add_option("--seed", las_seed, "search seed");
    search->add_option("--budget-ms", budget_ms, "time budget in milliseconds");
    search->add_option("--threads", threads, "worker threads (only 1 supported)");
    search->add_option("-o,--output", las_out, "write the found family here");
    search->callback([&] {
        action = [&] {
            CubeComplex X = build_complex(common);
            ObstructionProblem p = extract_problem(X, build_xprime(X));
            SearchOptions opt;
            opt.seed = las_seed;
            opt.budget_ms = budget_ms;
            SearchResult res = search_trivializing_family(p, opt);
            json j{{"nodes_visited", res.nodes_visited}, {"elapsed_ms", res.elapsed_ms}};
            switch (res.outcome) {
            case SearchResult::Outcome::Found:
                j["outcome"] = "found";
                if (!las_out.empty()) emit(family_to_json(*res.family), las_out);
                break;
            case SearchResult::Outcome::Exhausted:
                j["outcome"] = "exhausted";
                exit_code = kExitNegative;
                break;
            case SearchResult::Outcome::Timeout:
                j["outcome"] = "timeout";
                exit_code = kExitTimeout;
                break;
            }
            emit(j, "");
        };
    });

    // sub check
    auto* sub = app.add_subcommand("sub", "configuration subcomplexes");
    sub->require_subcommand(1);
    auto* sub_check = sub->add_subcommand("check", "full-link test of an induced subcomplex");
    std::string ambient_path, sub_labels;
    int sub_strands = 0;
    sub_check->add_option("--ambient", ambient_path, "ambient graph JSON")->required();
    sub_check->add_option("--strands", sub_strands, "number of strands")->required();
    sub_check->add_option("--sub", sub_labels, "comma-separated vertex labels")->required();
    sub_check->callback([&] {
        action = [&] {
            std::vector<std::string> labels;
            for (size_t pos = 0; pos <= sub_labels.size();) {
                size_t comma = sub_labels.find(',', pos);
                if (comma == std::string::npos) comma = sub_labels.size();
                if (comma > pos) labels.push_back(sub_labels.substr(pos, comma - pos));
                pos = comma + 1;
            }
            auto inc = induced_subcomplex(load_graph(ambient_path), labels, sub_strands);
            FullnessReport rep = check_full_links(inc);
            emit(fullness_report_to_json(rep), "");
            if (!rep.full) exit_code = kExitNegative;
        };
    });

    // export {dot, json}
    auto* exp = app.add_subcommand("export", "emit a complex, link, or X' in DOT/JSON");
    exp->require_subcommand(1);
    std::string exp_what = "skeleton", exp_vertex, exp_out;
    bool exp_force = false;
    auto add_export = [&](const std::string& fmt) {
        auto* cmd = exp->add_subcommand(fmt, fmt + " output");
        add_common(cmd);
        cmd->add_option("--what", exp_what, "graph | skeleton | link | xprime | complex")
            ->check(CLI::IsMember({"graph", "skeleton", "link", "xprime", "complex"}));
        cmd->add_option("--vertex", exp_vertex, "0-cell label (for --what link)");
        cmd->add_flag("--force", exp_force, "build even if the graph is inadmissible");
        cmd->add_option("-o,--output", exp_out, "output file (default stdout)");
        cmd->callback([&, fmt] {
            action = [&, fmt] {
                Multigraph g = load_graph(common.graph_path);
                if (fmt == "dot") {
                    if (exp_what == "graph") {
                        emit(dot_graph(g), exp_out);
                        return;
                    }
                    CubeComplex X = CubeComplex::build(g, common.strands, exp_force);
                    if (exp_what == "skeleton" || exp_what == "complex")
                        emit(dot_skeleton(X), exp_out);
                    else if (exp_what == "xprime")
                        emit(dot_xprime(build_xprime(X)), exp_out);
                    else
                        emit(dot_link(X, X.vertex_link(exp_vertex)), exp_out);
                } else {
                    if (exp_what == "graph") {
                        emit(graph_to_json(g), exp_out);
                        return;
                    }
                    CubeComplex X = CubeComplex::build(g, common.strands, exp_force);
                    if (exp_what == "xprime") {
                        XPrimeGraph xp = build_xprime(X);
                        json j{{"vertices", xp.vertex_labels}, {"edges", json::array()}};
                        for (size_t i = 0; i < xp.edges.size(); ++i)
                            j["edges"].push_back({xp.vertex_labels[xp.ends[i][0]],
                                                  xp.vertex_labels[xp.ends[i][1]]});
                        emit(j, exp_out);
                    } else if (exp_what == "link") {
                        LinkComplex lk = X.vertex_link(exp_vertex);
                        json j{{"base", X.vertex_label(lk.base)},
                               {"vertices", json::array()},
                               {"edges", json::array()}};
                        for (const auto& lv : lk.vertices)
                            j["vertices"].push_back(
                                {{"label", lv.config_label},
                                 {"direction", X.graph().edge_label(lv.edge)}});
                        for (const auto& e : lk.edges)
                            j["edges"].push_back({lk.vertices[e[0]].config_label,
                                                  lk.vertices[e[1]].config_label});
                        emit(j, exp_out);
                    } else {
                        emit(complex_to_json(X), exp_out);
                    }
                }
            };
        });
    };
    add_export("dot");
    add_export("json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    try {
        action();
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return exit_code;
}

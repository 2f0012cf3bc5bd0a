#ifndef BRAIDCONF_JSON_IO_HPP
#define BRAIDCONF_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "braidconf/cube_complex.hpp"
#include "braidconf/homology.hpp"
#include "braidconf/lasheras.hpp"
#include "braidconf/subcomplex.hpp"

namespace braidconf {

using json = nlohmann::json;

/// Graph files: {"vertices": ["a","b","1",...], "edges": [["a","1"],...]}.
/// Edge order in the file defines the 0-based edge ids.
Multigraph parse_graph(const std::string& text);
Multigraph load_graph(const std::string& path);
json graph_to_json(const Multigraph& g);

/// {"strands": n, "graph": ..., "cells": {"0": [...], ...}} with cells as
/// {"moving": [edge ids], "parked": ["labels"]}.
json complex_to_json(const CubeComplex& X);

json homology_to_json(const HomologySummary& h, Coeff coeff);

/// {"orientation": "cw"|"ccw", "rotation": {"a12": ["b13","b14","b15"],...}};
/// neighbor lists are cyclic. The link graph supplies the vertex ids.
RotationEmbedding embedding_from_json(const json& j, const Multigraph& link);
json embedding_to_json(const RotationEmbedding& emb);

/// {"families": {"ab1": <embedding>, ...}}; every problem vertex must be
/// present. Link graphs are taken from the problem.
EmbeddingFamily family_from_json(const json& j, const ObstructionProblem& p);
json family_to_json(const EmbeddingFamily& fam);

json obstruction_report_to_json(const ObstructionReport& rep);
json fullness_report_to_json(const FullnessReport& rep);
json kuratowski_to_json(const Multigraph& h, const KuratowskiWitness& w);

/// DOT emission, canonically ordered and byte-stable across runs.
std::string dot_graph(const Multigraph& g, const std::string& name = "G");
std::string dot_skeleton(const CubeComplex& X);
/// Nodes carry both labelings: the neighbor-configuration name and the
/// direction edge of the base graph (attribute `dir`).
std::string dot_link(const CubeComplex& X, const LinkComplex& lk);
std::string dot_xprime(const XPrimeGraph& xp);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace braidconf

#endif

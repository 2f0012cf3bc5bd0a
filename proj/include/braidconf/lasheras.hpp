#ifndef BRAIDCONF_LASHERAS_HPP
#define BRAIDCONF_LASHERAS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidconf/cube_complex.hpp"
#include "braidconf/planarity.hpp"

namespace braidconf {

/// Subgraph X' of the 1-skeleton spanned by the 1-cells lying in at least
/// three 2-cells. Indices refer to cells of the ambient complex.
struct XPrimeGraph {
    std::vector<int> vertices;            // 0-cell indices, canonical order
    std::vector<int> edges;               // 1-cell indices, canonical order
    std::vector<std::array<int, 2>> ends; // per edge, positions into `vertices`
    std::vector<std::string> vertex_labels;
    std::vector<std::string> edge_labels;

    int degree(int vpos) const;
};

XPrimeGraph build_xprime(const CubeComplex& X);

/// One end of an obstruction edge: which link it lands in, which link vertex
/// is the direction of the edge there, and the bijection from that link
/// vertex's neighbors to the squares around the edge.
struct EdgeEnd {
    int vertex = -1;           // index into ObstructionProblem::links
    std::string link_vertex;
    std::map<std::string, int> square_of_neighbor;
};

struct ObstructionEdge {
    std::string label;
    EdgeEnd end[2]; // a loop has both ends at the same vertex
    bool is_loop() const { return end[0].vertex == end[1].vertex; }
};

struct LinkAtVertex {
    std::string vertex_label;
    Multigraph link;
};

/// Everything the obstruction cochain depends on, decoupled from the cube
/// complex so toy instances (e.g. with loop edges) can be built directly.
struct ObstructionProblem {
    std::vector<LinkAtVertex> links;
    std::vector<ObstructionEdge> edges;

    int find_vertex(const std::string& label) const; // not_found on miss
};

/// Problem instance of a 2-dimensional configuration complex: one link per
/// X' vertex, one obstruction edge per X' edge, squares indexed by their
/// 2-cell index.
ObstructionProblem extract_problem(const CubeComplex& X, const XPrimeGraph& xp);

/// Planar embedding chosen per X' vertex, keyed by vertex label.
struct EmbeddingFamily {
    std::map<std::string, RotationEmbedding> by_vertex;
};

/// Z/2 cochain on the edges of the problem.
struct Cochain {
    std::vector<int> values;
    bool is_zero() const;
};

/// Cyclic reading of the squares around edge e induced by the embedding at
/// the given end (0 or 1).
CyclicOrder edge_square_order(const ObstructionProblem& p, const EmbeddingFamily& fam,
                              int e, int side);

/// The obstruction cochain: omega(e) = 0 iff the two end readings of the
/// squares around e are opposite cyclic orders. Validates that each
/// embedding matches its link and has genus 0.
Cochain omega(const ObstructionProblem& p, const EmbeddingFamily& fam);

/// If w = delta(f) for some 0-cochain f, return one such f (per problem
/// vertex, values 0/1); reorienting the embeddings at supp(f) kills w.
std::optional<std::vector<int>> coboundary_certificate(const ObstructionProblem& p,
                                                       const Cochain& w);

struct ObstructionReport {
    std::vector<std::string> edge_labels;
    Cochain omega;
    bool trivial = false; // zero cochain
    std::optional<std::vector<int>> coboundary;
};

ObstructionReport verify_family(const ObstructionProblem& p, const EmbeddingFamily& fam);

struct SearchOptions {
    unsigned seed = 0;
    long long budget_ms = 60000;
    long long max_embeddings_per_vertex = 100000;
};

struct SearchResult {
    enum class Outcome { Found, Exhausted, Timeout } outcome;
    std::optional<EmbeddingFamily> family; // set when Found
    long long nodes_visited = 0;
    long long elapsed_ms = 0;
};

/// Backtracking search for a family with omega = 0. Vertices are assigned in
/// decreasing problem-degree order (ties shuffled by seed); a branch is cut
/// as soon as a fully-assigned edge reads omega = 1.
SearchResult search_trivializing_family(const ObstructionProblem& p, const SearchOptions& opt = {});

} // namespace braidconf

#endif

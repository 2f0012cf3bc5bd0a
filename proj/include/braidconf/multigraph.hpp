#ifndef BRAIDCONF_MULTIGRAPH_HPP
#define BRAIDCONF_MULTIGRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "braidconf/errors.hpp"

namespace braidconf {

/// Ordering used for all canonical label sorts: alphabetic labels before
/// numeric ones, numeric labels compared by value ("2" < "10"), dotted
/// subdivision labels ("3.1") compared componentwise.
bool label_less(const std::string& a, const std::string& b);

/// Finite undirected multigraph with labeled vertices. Vertices are indexed
/// by their position in `labels`; edges by their position in `edges`
/// (0-based, file order when parsed). Immutable by convention once built.
class Multigraph {
public:
    Multigraph() = default;

    int add_vertex(const std::string& label);
    int add_edge(int u, int v);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::array<int, 2>& edge(int e) const { return edges_.at(e); }
    const std::vector<std::array<int, 2>>& edges() const { return edges_; }
    const std::vector<int>& incident_edges(int v) const { return incident_.at(v); }

    int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }

    /// Vertex index by label, or not_found.
    int vertex(const std::string& label) const;
    std::optional<int> find_vertex(const std::string& label) const;

    /// First edge with the given endpoint labels, or not_found.
    int edge_between(const std::string& u, const std::string& v) const;

    bool has_self_loop() const;
    bool has_parallel_edges() const;
    bool is_connected() const;
    bool is_simple() const { return !has_self_loop() && !has_parallel_edges(); }

    /// "u-v" with endpoint labels in canonical order.
    std::string edge_label(int e) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::vector<int>> incident_;
};

/// Two poles a, b joined by m strands a-j-b, j = 1..m. This is the minimal
/// admissible subdivision of the m-strand theta graph for 3 strands.
Multigraph make_theta(int m);

/// Tripod: center x with leaves a, b, c.
Multigraph make_tripod();

/// Replace edge e by a path of k+1 edges through k fresh vertices labeled
/// "<e>.1" .. "<e>.k". Other cells untouched; the replacement path reuses
/// edge slot e for its first edge and appends the rest.
Multigraph subdivide_edge(const Multigraph& g, int e, int k);

/// Closed edges share no vertex.
bool edges_disjoint(const Multigraph& g, int e1, int e2);

struct SubdivisionPolicy {
    // Defaults follow the Prue--Scrimshaw refinement: paths between
    // essential vertices (degree != 2, leaves included) need >= n-1 edges,
    // embedded cycles >= n+1 edges, and the graph needs >= n vertices.
    int min_vertices(int n) const { return n; }
    int path_min_edges(int n) const { return n - 1 + path_slack; }
    int cycle_min_edges(int n) const { return n + 1; }
    int path_slack = 0; // set to 2 for the conservative n+1 path constant
};

/// Violated-condition description, or nullopt when g is admissible for n.
std::optional<std::string> admissibility_violation(const Multigraph& g, int n,
                                                   const SubdivisionPolicy& policy = {});

/// Minimal subdivision of g that is admissible for n strands. Self-loops and
/// parallel edges are always eliminated. Idempotent on admissible graphs.
Multigraph admissible_subdivision(const Multigraph& g, int n,
                                  const SubdivisionPolicy& policy = {});

/// Label-preserving equality of vertex and edge sets (edge multiset, order
/// ignored).
bool same_labeled_graph(const Multigraph& a, const Multigraph& b);

/// Girth of the multigraph (self-loop = 1, parallel pair = 2), or nullopt
/// for forests. `witness` receives the vertex indices of one shortest cycle.
std::optional<int> girth(const Multigraph& g, std::vector<int>* witness = nullptr);

} // namespace braidconf

#endif

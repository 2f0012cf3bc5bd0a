#ifndef BRAIDCONF_CUBE_COMPLEX_HPP
#define BRAIDCONF_CUBE_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidconf/multigraph.hpp"

namespace braidconf {

/// A cell of Conf_n: k pairwise disjoint moving edges plus n-k parked
/// vertices off those edges. Both lists are kept sorted by canonical label
/// order; (moving, parked) is the canonical key.
struct Cell {
    std::vector<int> moving; // edge ids, sorted
    std::vector<int> parked; // vertex ids, sorted
    int dimension() const { return static_cast<int>(moving.size()); }
    bool operator==(const Cell&) const = default;
    bool operator<(const Cell& o) const {
        return moving != o.moving ? moving < o.moving : parked < o.parked;
    }
};

/// Global cell handle: (dimension, index within that dimension).
struct CellRef {
    int dim = -1;
    int idx = -1;
    bool operator==(const CellRef&) const = default;
    bool operator<(const CellRef& o) const {
        return dim != o.dim ? dim < o.dim : idx < o.idx;
    }
};

struct LinkVertex {
    int edge = -1;            // direction edge of the underlying graph
    int moved_vertex = -1;    // the occupied vertex the edge moves
    std::string config_label; // label of the neighboring 0-cell
};

/// Link of a 0-cell. Vertices are direction edges; a j-simplex is a set of
/// j+1 pairwise disjoint direction edges whose cube exists in the complex.
/// For 2-dimensional complexes this is a graph.
struct LinkComplex {
    int base = -1; // 0-cell index
    std::vector<LinkVertex> vertices;
    std::vector<std::array<int, 2>> edges;          // pairs of link-vertex indices
    std::vector<std::array<int, 3>> triangles;      // only when 3-cubes exist
    std::vector<int> edge_square;                   // 2-cell index per link edge

    /// The link as a labeled simple graph (labels = neighbor configurations).
    Multigraph graph() const;
};

struct FVector {
    std::vector<long long> counts;
    bool operator==(const FVector&) const = default;
};

struct LinkReport {
    std::string vertex;
    bool flag = true;
    bool connected = true;
    bool has_cut_vertex = false;
    int min_girth = 0; // 0 when the link is a forest
};

class CubeComplex {
public:
    /// Empty complex; populate through build or from_cells.
    CubeComplex() = default;

    /// Unordered discrete configuration space Conf_n(g). Rejects graphs that
    /// are not admissible for n unless force is set.
    static CubeComplex build(const Multigraph& g, int n, bool force = false,
                             const SubdivisionPolicy& policy = {});

    /// Complex from an explicit cell list over g (closure under faces is
    /// checked). Used for subcomplexes and intersections.
    static CubeComplex from_cells(const Multigraph& g, int n, std::vector<Cell> cells);

    const Multigraph& graph() const { return graph_; }
    int strands() const { return strands_; }
    int dimension() const { return static_cast<int>(cells_.size()) - 1; }

    int num_cells(int dim) const {
        return dim >= 0 && dim <= dimension() ? static_cast<int>(cells_[dim].size()) : 0;
    }
    const Cell& cell(int dim, int idx) const { return cells_.at(dim).at(idx); }
    const std::vector<Cell>& cells(int dim) const { return cells_.at(dim); }

    /// Index of a cell by canonical key, if present.
    std::optional<int> find_cell(int dim, const Cell& c) const;
    std::optional<int> find_vertex_cell(const std::vector<std::string>& occupied) const;

    /// Codimension-1 faces (2k entries per k-cell) and cofaces.
    const std::vector<int>& faces(int dim, int idx) const { return faces_.at(dim).at(idx); }
    const std::vector<int>& cofaces(int dim, int idx) const { return cofaces_.at(dim).at(idx); }

    /// Sorted occupied-vertex label string of a 0-cell (e.g. "ab1").
    std::string vertex_label(int idx) const;
    std::string cell_label(int dim, int idx) const;

    FVector f_vector() const;
    long long euler_characteristic() const;

    LinkComplex vertex_link(int vertex_idx) const;
    LinkComplex vertex_link(const std::string& label) const;

    /// Number of 2-cells containing the given 1-cell.
    int edge_face_count(int edge_idx) const;

    std::vector<LinkReport> check_links() const;

    /// True iff the complex is a nonempty connected 1-complex forming one cycle.
    bool is_single_cycle() const;

    bool connected() const;

private:
    void index_cells();

    Multigraph graph_;
    int strands_ = 0;
    std::vector<std::vector<Cell>> cells_;              // by dimension
    std::vector<std::vector<std::vector<int>>> faces_;  // [dim][idx] -> face indices in dim-1
    std::vector<std::vector<std::vector<int>>> cofaces_;
    std::vector<std::map<Cell, int>> index_;
};

/// Occupied-vertex config label: sorted labels, concatenated when all are
/// single characters, comma-joined otherwise.
std::string config_label(const Multigraph& g, std::vector<int> vertices);

} // namespace braidconf

#endif

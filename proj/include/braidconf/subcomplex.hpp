#ifndef BRAIDCONF_SUBCOMPLEX_HPP
#define BRAIDCONF_SUBCOMPLEX_HPP

#include <string>
#include <vector>

#include "braidconf/cube_complex.hpp"

namespace braidconf {

/// Configuration subcomplex induced by a vertex subset of the underlying
/// graph. `sub` is built over the ambient graph (same vertex and edge ids),
/// so sub-cells are ambient cells; cell_map records their ambient indices.
struct SubcomplexInclusion {
    CubeComplex ambient;
    CubeComplex sub;
    std::vector<std::vector<int>> cell_map; // [dim][sub idx] -> ambient idx
};

/// Inclusion Conf_n(induced subgraph) into Conf_n(g). The subset must induce
/// a connected subgraph admissible for n; violations are reported by name.
SubcomplexInclusion induced_subcomplex(const Multigraph& g,
                                       const std::vector<std::string>& subgraph_vertices, int n,
                                       const SubdivisionPolicy& policy = {});

/// Same, reusing an already-built ambient complex.
SubcomplexInclusion induced_subcomplex(const CubeComplex& ambient,
                                       const std::vector<std::string>& subgraph_vertices,
                                       const SubdivisionPolicy& policy = {});

struct FullnessWitness {
    std::string vertex;               // sub 0-cell where fullness fails
    std::vector<std::string> simplex; // ambient link simplex missing from the sub link
};

struct FullnessReport {
    bool full = true;
    std::vector<FullnessWitness> witnesses;
};

/// Local convexity test: at every sub-vertex, each ambient link simplex
/// spanned by sub-link vertices must lie in the sub link. For CAT(0) cube
/// complexes this certifies a pi_1-injective, locally convex inclusion.
FullnessReport check_full_links(const SubcomplexInclusion& inc);

/// Cells common to both images, as a complex over the shared ambient graph.
CubeComplex pairwise_intersection(const SubcomplexInclusion& a, const SubcomplexInclusion& b);

} // namespace braidconf

#endif

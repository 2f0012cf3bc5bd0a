#ifndef BRAIDCONF_HOMOLOGY_HPP
#define BRAIDCONF_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "braidconf/cube_complex.hpp"

namespace braidconf {

using bigint = boost::multiprecision::cpp_int;

enum class Coeff { Z2, Q, Z };

/// Boundary matrix from k-cells (columns) to (k-1)-cells (rows). Signs come
/// from the lexicographic order of the moving edges: the i-th moving edge
/// contributes (-1)^i (upper endpoint face - lower endpoint face), endpoints
/// ordered by label.
struct BoundaryMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<bigint>> entries; // dense, row-major

    bigint& at(int r, int c) { return entries[r][c]; }
    const bigint& at(int r, int c) const { return entries[r][c]; }
};

/// All boundary matrices of X; verifies del^2 = 0.
std::vector<BoundaryMatrix> boundary_matrices(const CubeComplex& X);

/// Exact rank over GF(2) / over Q (fraction-free elimination).
int rank_gf2(const BoundaryMatrix& m);
int rank_q(const BoundaryMatrix& m);

/// Homology ranks b_0..b_dim over the chosen field.
std::vector<int> betti_numbers(const CubeComplex& X, Coeff coeff);

struct HomologyGroup {
    int rank = 0;
    std::vector<bigint> torsion; // invariant factors > 1
};

struct HomologySummary {
    std::vector<HomologyGroup> groups; // degree 0..dim
};

/// Integral homology via Smith normal form.
HomologySummary integral_homology(const CubeComplex& X);

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries,
/// each dividing the next).
std::vector<bigint> smith_normal_form(BoundaryMatrix m);

struct SurfaceClassification {
    bool is_closed_surface = false;
    bool orientable = false;
    int genus = 0;
    std::string witness; // set when not a surface
};

/// Closed-surface recognition: every vertex link a single cycle of length
/// >= 3, cross-checked against the homology criterion.
SurfaceClassification classify_surface(const CubeComplex& X);

} // namespace braidconf

#endif

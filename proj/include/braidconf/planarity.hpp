#ifndef BRAIDCONF_PLANARITY_HPP
#define BRAIDCONF_PLANARITY_HPP

#include <string>
#include <variant>
#include <vector>

#include "braidconf/multigraph.hpp"

namespace braidconf {

/// Sequence considered up to rotation; reversal is an involution.
struct CyclicOrder {
    std::vector<std::string> items;

    CyclicOrder reversed() const;
    /// Rotate so the lexicographically smallest item is first.
    CyclicOrder anchored() const;
    bool same_as(const CyclicOrder& o) const;     // rotation-invariant equality
    bool opposite_of(const CyclicOrder& o) const; // equal to o reversed
};

/// Combinatorial planar embedding: per-vertex cyclic order of neighbors plus
/// a global handedness flag. The stored rotation is read as the clockwise
/// order when `clockwise` is true; flipping the flag reverses every reading.
struct RotationEmbedding {
    Multigraph graph;
    bool clockwise = true;
    std::vector<std::vector<int>> rotation; // [vertex] -> neighbor ids, cyclic

    bool operator==(const RotationEmbedding& o) const;
};

struct KuratowskiWitness {
    enum class Kind { K5, K33 } kind;
    std::vector<int> branch_vertices;    // 5, or 6 with the first 3 one side
    std::vector<std::vector<int>> paths; // vertex sequences incl. endpoints
};

using PlanarityResult = std::variant<RotationEmbedding, KuratowskiWitness>;

/// Thrown where a planar input is required; carries the witness.
struct nonplanar_error : invalid_input {
    nonplanar_error(std::string what, KuratowskiWitness w)
        : invalid_input(std::move(what)), witness(std::move(w)) {}
    KuratowskiWitness witness;
};

/// Sound and complete planarity decision with certificate: a genus-0
/// rotation system, or a verified K5/K33 subdivision.
PlanarityResult test_planar(const Multigraph& h);

bool is_planar(const Multigraph& h);

/// Facial walks of the embedding, each a closed directed vertex sequence
/// (first vertex not repeated at the end).
std::vector<std::vector<int>> faces_of(const RotationEmbedding& emb);

/// Genus-0 check: V - E + F = 2 per connected component.
bool embedding_is_planar(const RotationEmbedding& emb);

/// Neighbors of w in the order induced by the rotation and the handedness
/// flag; flipping the flag reverses the order.
CyclicOrder cyclic_neighbors(const RotationEmbedding& emb, const std::string& w);

/// All genus-0 rotation systems of h (deduplicated, both handedness flags),
/// at most cap of them, in deterministic order. Throws nonplanar_error on
/// non-planar input.
std::vector<RotationEmbedding> enumerate_planar_embeddings(const Multigraph& h, long long cap);

/// Structural check that the witness is a K5/K33 subdivision inside h.
bool verify_kuratowski(const Multigraph& h, const KuratowskiWitness& w);

RotationEmbedding flipped(const RotationEmbedding& emb);

} // namespace braidconf

#endif

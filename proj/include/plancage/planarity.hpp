#ifndef PLANCAGE_PLANARITY_HPP
#define PLANCAGE_PLANARITY_HPP

#include <optional>
#include <vector>

#include "plancage/graph.hpp"

namespace plancage {

/// Combinatorial embedding: a cyclic neighbor order per vertex. Facial walks
/// are traced by the rule "the edge after arriving at v from u is the
/// successor of u in the rotation of v".
struct PlanarEmbedding {
    SimpleGraph host;
    std::vector<std::vector<int>> rotation;
};

/// Planarity test with embedding extraction (face insertion per biconnected
/// block, blocks spliced at cut vertices). Returns std::nullopt for
/// non-planar input; no Kuratowski witness is produced.
std::optional<PlanarEmbedding> test_planarity(const SimpleGraph& g);

/// Verdict-only variant; skips rotation assembly.
bool is_planar(const SimpleGraph& g);
bool is_planar_masks(int n, const uint64_t* adj);

/// Allocation-free verdict on raw adjacency rows (search hot path).
bool is_planar_fast(int n, const uint64_t* adj);

/// Facial walks of an embedding of a connected host, each walk listing its
/// vertices in traversal order (walk length == edge count; the edgeless
/// single vertex yields one empty walk). Throws std::invalid_argument on a
/// disconnected host: Euler bookkeeping is per component, so callers embed
/// per component. Throws std::logic_error if the rotation system is not a
/// genus-zero embedding.
std::vector<std::vector<int>> faces(const PlanarEmbedding& e);

/// Outerplanarity via planarity of the graph plus one apex vertex adjacent
/// to everything (requires n <= 63).
bool is_outerplanar(const SimpleGraph& g);

}  // namespace plancage

#endif

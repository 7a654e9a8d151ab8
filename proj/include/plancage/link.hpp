#ifndef PLANCAGE_LINK_HPP
#define PLANCAGE_LINK_HPP

#include <utility>
#include <vector>

#include "plancage/graph.hpp"
#include "plancage/planarity.hpp"

namespace plancage {

/// Induced subgraph on all vertices of the faces incident to x, excluding x
/// itself, relabeled along ascending original ids. Host must be connected.
SimpleGraph link(const SimpleGraph& g, const PlanarEmbedding& e, int x);

/// Decomposition of an outerplanar link into cycle pieces (2-connected
/// blocks on >= 3 vertices) and tree pieces (maximal unions of bridge edges,
/// plus isolated vertices), with the piece intersection graph.
struct LinkDecomposition {
    SimpleGraph link;
    std::vector<std::vector<int>> cycles;  // vertex sets, ascending
    std::vector<std::vector<int>> trees;
    SimpleGraph intersection;  // nodes: cycles first, then trees
    int cycle_count = 0;       // == cycles.size()
    int tree_count = 0;
    int component_count = 0;   // components of the link itself
    int ends = 0;              // leaves of the intersection forest; an
                               // isolated node counts as one end
};

LinkDecomposition decompose_link(const SimpleGraph& l);

bool is_forest(const SimpleGraph& g);

/// Degree pattern of a planar graph on m+1 vertices with maximum degree m.
enum class DegreeTrichotomy { four_and_m3, three_and_m4, at_most_two };

DegreeTrichotomy degree_trichotomy(const SimpleGraph& g, int m);

/// Two non-adjacent vertices of degree exactly 2 in an outerplanar graph of
/// order >= 4 and minimum degree >= 2 (lexicographically first such pair).
std::pair<int, int> outerplanar_degree2_pair(const SimpleGraph& g);

}  // namespace plancage

#endif

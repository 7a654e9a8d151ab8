#ifndef PLANCAGE_GRAPH_HPP
#define PLANCAGE_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plancage {

// Hard cap for all graphs handled by this library. Adjacency rows are single
// 64-bit masks, and the canonicalization/search paths rely on that.
inline constexpr int kMaxVertices = 64;

/// Labeled simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitmask per vertex, so neighbor iteration is
/// always ascending and every derived output is reproducible. Values are
/// cheap to copy and safe to share read-only across threads; all operations
/// on them are pure functions.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    /// Builds a graph from an edge list. Duplicate pairs collapse; loops and
    /// out-of-range endpoints throw std::invalid_argument.
    static SimpleGraph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
    static SimpleGraph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);     // intended for construction only
    void remove_edge(int u, int v);

    int degree(int v) const;
    uint64_t neighbors_mask(int v) const;
    std::vector<int> neighbors(int v) const;   // ascending
    std::vector<std::pair<int, int>> edges() const;  // lexicographic, u < v

    const std::vector<uint64_t>& rows() const { return adj_; }

    bool operator==(const SimpleGraph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<uint64_t> adj_;
};

/// degree -> number of vertices with that degree
using DegreeProfile = std::map<int, int>;

DegreeProfile degree_profile(const SimpleGraph& g);

/// Length of a shortest cycle; std::nullopt for forests. Exact, via BFS from
/// every vertex.
std::optional<int> girth(const SimpleGraph& g);

/// True iff every degree is r or m and both occur. Requires r < m.
bool is_biregular(const SimpleGraph& g, int r, int m);

bool is_regular(const SimpleGraph& g, int k);

bool is_connected(const SimpleGraph& g);

/// Reachability partition; vertex lists ascending, components ordered by
/// smallest member. The empty graph has no components.
std::vector<std::vector<int>> components(const SimpleGraph& g);

/// BFS distances from src; -1 where unreachable.
std::vector<int> bfs_distances(const SimpleGraph& g, int src);

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices);

/// Applies a relabeling: vertex v of g becomes perm[v].
SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm);

}  // namespace plancage

#endif

#include "plancage/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace plancage {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range [0, 64]");
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

SimpleGraph SimpleGraph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
    SimpleGraph g(n);
    for (auto [u, v] : pairs) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edges are not allowed");
    adj_[u] |= uint64_t{1} << v;
    adj_[v] |= uint64_t{1} << u;
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(uint64_t{1} << v);
    adj_[v] &= ~(uint64_t{1} << u);
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

uint64_t SimpleGraph::neighbors_mask(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(std::popcount(adj_[v])));
    for (uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        uint64_t higher = (u + 1 < 64) ? adj_[u] >> (u + 1) << (u + 1) : 0;
        for (uint64_t m = higher; m; m &= m - 1) out.emplace_back(u, std::countr_zero(m));
    }
    return out;
}

DegreeProfile degree_profile(const SimpleGraph& g) {
    DegreeProfile profile;
    for (int v = 0; v < g.order(); ++v) ++profile[g.degree(v)];
    return profile;
}

std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
    std::vector<int> dist(static_cast<size_t>(g.order()), -1);
    dist[src] = 0;
    uint64_t seen = uint64_t{1} << src;
    uint64_t frontier = seen;
    int d = 0;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t m = frontier; m; m &= m - 1) next |= g.neighbors_mask(std::countr_zero(m));
        next &= ~seen;
        ++d;
        for (uint64_t m = next; m; m &= m - 1) dist[std::countr_zero(m)] = d;
        seen |= next;
        frontier = next;
    }
    return dist;
}

std::optional<int> girth(const SimpleGraph& g) {
    // Shortest cycle through an edge (u,w) discovered from root s has length
    // dist(u)+dist(w)+1; the minimum of the BFS estimates over all roots is
    // exact because a root on a shortest cycle attains it.
    const int n = g.order();
    int best = kMaxVertices + 1;
    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<int> parent(static_cast<size_t>(n));
    std::vector<int> queue(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[u] >= best) break;
            for (uint64_t m = g.neighbors_mask(u); m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best > kMaxVertices) return std::nullopt;
    return best;
}

bool is_biregular(const SimpleGraph& g, int r, int m) {
    if (r >= m) throw std::invalid_argument("is_biregular requires r < m");
    bool saw_r = false, saw_m = false;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == r)
            saw_r = true;
        else if (d == m)
            saw_m = true;
        else
            return false;
    }
    return saw_r && saw_m;
}

bool is_regular(const SimpleGraph& g, int k) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

bool is_connected(const SimpleGraph& g) {
    const int n = g.order();
    if (n == 0) return true;
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t m = frontier; m; m &= m - 1) next |= g.neighbors_mask(std::countr_zero(m));
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return std::popcount(seen) == n;
}

std::vector<std::vector<int>> components(const SimpleGraph& g) {
    std::vector<std::vector<int>> out;
    uint64_t unseen = (g.order() == 64) ? ~uint64_t{0} : (uint64_t{1} << g.order()) - 1;
    while (unseen) {
        int s = std::countr_zero(unseen);
        uint64_t comp = uint64_t{1} << s, frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t m = frontier; m; m &= m - 1)
                next |= g.neighbors_mask(std::countr_zero(m));
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        std::vector<int> verts;
        for (uint64_t m = comp; m; m &= m - 1) verts.push_back(std::countr_zero(m));
        out.push_back(std::move(verts));
        unseen &= ~comp;
    }
    return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices) {
    SimpleGraph sub(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return sub;
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size mismatch");
    SimpleGraph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace plancage

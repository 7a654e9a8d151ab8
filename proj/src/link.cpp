#include "plancage/link.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace plancage {

SimpleGraph link(const SimpleGraph& g, const PlanarEmbedding& e, int x) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("link: vertex out of range");
    if (e.host != g) throw std::invalid_argument("link: embedding does not match host");
    uint64_t verts = 0;
    for (const auto& walk : faces(e)) {
        bool incident = false;
        uint64_t mask = 0;
        for (int v : walk) {
            mask |= uint64_t{1} << v;
            incident |= (v == x);
        }
        if (incident) verts |= mask;
    }
    verts &= ~(uint64_t{1} << x);
    std::vector<int> ids;
    for (uint64_t m = verts; m; m &= m - 1) ids.push_back(std::countr_zero(m));
    return induced_subgraph(g, ids);
}

bool is_forest(const SimpleGraph& g) {
    return g.edge_count() == g.order() - static_cast<int>(components(g).size());
}

namespace {

// 2-connected blocks as vertex sets (>= 3 vertices) and bridge edges.
struct Blocks {
    std::vector<std::vector<int>> cycles;
    std::vector<std::pair<int, int>> bridges;
};

Blocks split_blocks(const SimpleGraph& g) {
    const int n = g.order();
    Blocks out;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;
    struct Frame {
        int v;
        uint64_t rest;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> st;
        disc[root] = low[root] = timer++;
        st.push_back({root, g.neighbors_mask(root)});
        while (!st.empty()) {
            auto& fr = st.back();
            if (!fr.rest) {
                int v = fr.v;
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        std::vector<std::pair<int, int>> block;
                        std::pair<int, int> edge;
                        do {
                            edge = estack.back();
                            estack.pop_back();
                            block.push_back(edge);
                        } while (!(edge.first == p && edge.second == v));
                        if (block.size() == 1) {
                            out.bridges.push_back(block[0]);
                        } else {
                            uint64_t mask = 0;
                            for (auto [a, b] : block)
                                mask |= (uint64_t{1} << a) | (uint64_t{1} << b);
                            std::vector<int> verts;
                            for (uint64_t m = mask; m; m &= m - 1)
                                verts.push_back(std::countr_zero(m));
                            out.cycles.push_back(std::move(verts));
                        }
                    }
                }
                continue;
            }
            int v = fr.v;
            int w = std::countr_zero(fr.rest);
            fr.rest &= fr.rest - 1;
            if (disc[w] < 0) {
                parent[w] = v;
                estack.emplace_back(v, w);
                disc[w] = low[w] = timer++;
                st.push_back({w, g.neighbors_mask(w)});
            } else if (w != parent[v] && disc[w] < disc[v]) {
                estack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
    return out;
}

}  // namespace

LinkDecomposition decompose_link(const SimpleGraph& l) {
    if (!is_outerplanar(l)) throw std::invalid_argument("decompose_link: input not outerplanar");
    LinkDecomposition d;
    d.link = l;

    Blocks blocks = split_blocks(l);
    d.cycles = std::move(blocks.cycles);

    // trees: connected unions of bridge edges, plus isolated vertices
    const int n = l.order();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> bridge_adj(static_cast<size_t>(n));
    for (auto [u, v] : blocks.bridges) {
        bridge_adj[u].push_back(v);
        bridge_adj[v].push_back(u);
    }
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0 || bridge_adj[s].empty()) continue;
        std::vector<int> stack{s}, verts;
        comp[s] = static_cast<int>(d.trees.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (int w : bridge_adj[u])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        d.trees.push_back(std::move(verts));
    }
    for (int v = 0; v < n; ++v) {
        bool covered = !bridge_adj[v].empty();
        for (const auto& c : d.cycles)
            covered = covered || std::binary_search(c.begin(), c.end(), v);
        if (!covered) d.trees.push_back({v});
    }

    d.cycle_count = static_cast<int>(d.cycles.size());
    d.tree_count = static_cast<int>(d.trees.size());
    d.component_count = static_cast<int>(components(l).size());

    // intersection graph: cycle-cycle and cycle-tree shared vertices only
    const int k = d.cycle_count, kp = d.tree_count;
    SimpleGraph inter(k + kp);
    std::vector<uint64_t> masks;
    for (const auto& c : d.cycles) {
        uint64_t m = 0;
        for (int v : c) m |= uint64_t{1} << v;
        masks.push_back(m);
    }
    for (const auto& t : d.trees) {
        uint64_t m = 0;
        for (int v : t) m |= uint64_t{1} << v;
        masks.push_back(m);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k + kp; ++j)
            if (masks[i] & masks[j]) inter.add_edge(i, j);
    d.intersection = inter;

    for (const auto& piece : components(inter)) {
        if (piece.size() == 1) {
            d.ends += 1;
        } else {
            for (int node : piece) d.ends += (inter.degree(node) == 1);
        }
    }
    return d;
}

DegreeTrichotomy degree_trichotomy(const SimpleGraph& g, int m) {
    if (m < 3) throw std::invalid_argument("degree_trichotomy needs m >= 3");
    if (g.order() != m + 1) throw std::invalid_argument("degree_trichotomy needs order m+1");
    int maxdeg = 0, count = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        maxdeg = std::max(maxdeg, d);
        count += (d == m);
    }
    if (maxdeg != m) throw std::invalid_argument("degree_trichotomy needs max degree == m");
    if (!is_planar(g)) throw std::invalid_argument("degree_trichotomy needs a planar graph");
    if (count >= 4) {
        if (m == 3 && count == 4) return DegreeTrichotomy::four_and_m3;
        throw std::logic_error("degree_trichotomy: impossible degree-m count for a planar graph");
    }
    if (count == 3) {
        if (m == 4) return DegreeTrichotomy::three_and_m4;
        throw std::logic_error("degree_trichotomy: three vertices of degree m != 4");
    }
    return DegreeTrichotomy::at_most_two;
}

std::pair<int, int> outerplanar_degree2_pair(const SimpleGraph& g) {
    const int n = g.order();
    if (n < 4) throw std::invalid_argument("outerplanar_degree2_pair needs order >= 4");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2)
            throw std::invalid_argument("outerplanar_degree2_pair needs min degree >= 2");
    if (!is_outerplanar(g)) throw std::invalid_argument("outerplanar_degree2_pair needs outerplanar input");
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != 2) continue;
        for (int v = u + 1; v < n; ++v)
            if (g.degree(v) == 2 && !g.has_edge(u, v)) return {u, v};
    }
    throw std::logic_error("outerplanar_degree2_pair: no valid pair found");
}

}  // namespace plancage

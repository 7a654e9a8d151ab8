#include "plancage/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace plancage {

namespace {

constexpr int kSigStride = kMaxVertices + 2;

struct Canonizer {
    int n = 0;
    const uint64_t* adj = nullptr;
    int stride = kSigStride;  // 2 + max degree, padded to 8 bytes

    std::string best;                       // lexicographically smallest leaf
    std::array<int, kMaxVertices> best_pos{};  // vertex -> canonical position of best
    std::vector<std::array<int8_t, kMaxVertices>> gens;  // discovered automorphisms

    std::array<int8_t, kMaxVertices> prefix{};
    int prefix_len = 0;

    // scratch
    std::array<uint8_t, kMaxVertices * kSigStride> sig{};
    std::array<int, kMaxVertices> idx{};

    int refine(std::array<uint8_t, kMaxVertices>& cell, int ncells) {
        const int w = stride;
        while (ncells < n) {
            for (int v = 0; v < n; ++v) {
                uint8_t* row = sig.data() + v * w;
                row[0] = cell[v];
                int len = 2;
                for (uint64_t m = adj[v]; m; m &= m - 1)
                    row[len++] = cell[std::countr_zero(m)];
                row[1] = static_cast<uint8_t>(len - 2);
                std::sort(row + 2, row + len);
                std::memset(row + len, 0xFF, static_cast<size_t>(w - len));
            }
            for (int v = 0; v < n; ++v) idx[v] = v;
            std::sort(idx.begin(), idx.begin() + n, [&](int a, int b) {
                return std::memcmp(sig.data() + a * w, sig.data() + b * w, w) < 0;
            });
            int k = 0;
            cell[idx[0]] = 0;
            for (int i = 1; i < n; ++i) {
                if (std::memcmp(sig.data() + idx[i] * w, sig.data() + idx[i - 1] * w, w) != 0)
                    ++k;
                cell[idx[i]] = static_cast<uint8_t>(k);
            }
            if (k + 1 == ncells) break;
            ncells = k + 1;
        }
        return ncells;
    }

    void leaf_bytes(const std::array<uint8_t, kMaxVertices>& cell, std::string& out) const {
        // cell[] is discrete: cell[v] is the canonical position of v
        std::array<int, kMaxVertices> order{};
        for (int v = 0; v < n; ++v) order[cell[v]] = v;
        out.clear();
        out.push_back(static_cast<char>(n));
        int acc = 0, nbits = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | static_cast<int>((adj[order[i]] >> order[j]) & 1);
                if (++nbits == 8) {
                    out.push_back(static_cast<char>(acc));
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
    }

    void handle_leaf(const std::array<uint8_t, kMaxVertices>& cell) {
        std::string bytes;
        leaf_bytes(cell, bytes);
        if (best.empty() || bytes < best) {
            best = std::move(bytes);
            for (int v = 0; v < n; ++v) best_pos[v] = cell[v];
        } else if (bytes == best) {
            // Both labelings produce the same labeled graph, so mapping the
            // best leaf's vertex at each position to this leaf's vertex there
            // is an automorphism.
            std::array<int8_t, kMaxVertices> by_pos{};
            for (int v = 0; v < n; ++v) by_pos[cell[v]] = static_cast<int8_t>(v);
            std::array<int8_t, kMaxVertices> gamma{};
            for (int v = 0; v < n; ++v) gamma[v] = by_pos[best_pos[v]];
            gens.push_back(gamma);
        }
    }

    void node(std::array<uint8_t, kMaxVertices> cell, int ncells) {
        ncells = refine(cell, ncells);
        if (ncells == n) {
            handle_leaf(cell);
            return;
        }
        int target = -1;
        for (int c = 0; c < ncells && target < 0; ++c) {
            int count = 0;
            for (int v = 0; v < n; ++v) count += (cell[v] == c);
            if (count >= 2) target = c;
        }
        std::array<int, kMaxVertices> parent{};
        std::array<int8_t, kMaxVertices> explored{};
        int nexplored = 0;
        size_t gens_seen = SIZE_MAX;
        for (int v = 0; v < n; ++v) {
            if (cell[v] != target) continue;
            if (nexplored > 0) {
                if (gens_seen != gens.size()) {
                    // orbits of the subgroup fixing the current prefix pointwise
                    for (int u = 0; u < n; ++u) parent[u] = u;
                    auto find = [&](int u) {
                        while (parent[u] != u) u = parent[u] = parent[parent[u]];
                        return u;
                    };
                    for (const auto& g : gens) {
                        bool fixes = true;
                        for (int p = 0; p < prefix_len && fixes; ++p)
                            fixes = (g[prefix[p]] == prefix[p]);
                        if (!fixes) continue;
                        for (int u = 0; u < n; ++u) {
                            int a = find(u), b = find(g[u]);
                            if (a != b) parent[a] = b;
                        }
                    }
                    gens_seen = gens.size();
                }
                auto find = [&](int u) {
                    while (parent[u] != u) u = parent[u] = parent[parent[u]];
                    return u;
                };
                bool pruned = false;
                for (int i = 0; i < nexplored && !pruned; ++i)
                    pruned = (find(explored[i]) == find(v));
                if (pruned) continue;
            }
            // individualize v: it precedes its former cellmates
            std::array<uint8_t, kMaxVertices> child = cell;
            for (int u = 0; u < n; ++u) {
                int c = child[u] * 2 + ((child[u] == target && u != v) ? 1 : 0);
                child[u] = static_cast<uint8_t>(c);
            }
            normalize(child);
            prefix[prefix_len++] = static_cast<int8_t>(v);
            node(child, ncells + 1);
            --prefix_len;
            explored[nexplored++] = static_cast<int8_t>(v);
        }
    }

    void normalize(std::array<uint8_t, kMaxVertices>& cell) {
        std::array<int, 2 * kMaxVertices> rank;
        rank.fill(-1);
        for (int v = 0; v < n; ++v) rank[cell[v]] = 0;
        int k = 0;
        for (int c = 0; c < 2 * kMaxVertices; ++c)
            if (rank[c] == 0) rank[c] = k++;
        for (int v = 0; v < n; ++v) cell[v] = static_cast<uint8_t>(rank[cell[v]]);
    }

    void run(std::string& out) {
        if (n == 0) {
            out.assign(1, '\0');
            return;
        }
        int maxdeg = 0;
        for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, std::popcount(adj[v]));
        stride = std::min(kSigStride, (2 + maxdeg + 7) & ~7);
        std::array<uint8_t, kMaxVertices> cell{};
        node(cell, 1);
        out = best;
    }
};

}  // namespace

void canonical_bytes(int n, const uint64_t* adj, std::string& out) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("canonical_form: size cap exceeded");
    Canonizer c;
    c.n = n;
    c.adj = adj;
    c.run(out);
}

CanonicalForm canonical_form(const SimpleGraph& g) {
    CanonicalForm form;
    canonical_bytes(g.order(), g.rows().data(), form.bytes);
    return form;
}

SimpleGraph graph_from_canonical_bytes(const std::string& bytes) {
    if (bytes.empty()) throw std::invalid_argument("empty canonical form");
    const int n = static_cast<unsigned char>(bytes[0]);
    if (n > kMaxVertices) throw std::invalid_argument("canonical form size byte out of range");
    const int nbits = n * (n - 1) / 2;
    if (bytes.size() != 1 + static_cast<size_t>((nbits + 7) / 8))
        throw std::invalid_argument("canonical form length mismatch");
    SimpleGraph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(bytes[1 + bit / 8]);
            if ((byte >> (7 - bit % 8)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

SimpleGraph from_canonical_form(const CanonicalForm& form) {
    return graph_from_canonical_bytes(form.bytes);
}

}  // namespace plancage

#include "plancage/planarity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace plancage {

namespace {

int popcount(uint64_t m) { return std::popcount(m); }

struct Face {
    std::vector<int> walk;  // vertex cycle; consecutive pairs (cyclically) are edges
    uint64_t mask = 0;
};

void set_mask(Face& f) {
    f.mask = 0;
    for (int v : f.walk) f.mask |= uint64_t{1} << v;
}

// Face insertion on one 2-connected block (local vertex ids). Returns the
// facial cycles of an embedding, or nullopt if the block is non-planar.
std::optional<std::vector<Face>> dmp_embed(int n, const std::vector<uint64_t>& adj) {
    int total_edges = 0;
    for (int v = 0; v < n; ++v) total_edges += popcount(adj[v]);
    total_edges /= 2;
    if (n >= 3 && total_edges > 3 * n - 6) return std::nullopt;

    // initial cycle via a DFS back edge
    std::vector<int> cyc;
    {
        std::vector<int> par(n, -2), order;
        std::vector<std::pair<int, uint64_t>> st;
        par[0] = -1;
        st.emplace_back(0, adj[0]);
        std::vector<int8_t> onpath(n, 0);
        onpath[0] = 1;
        while (!st.empty() && cyc.empty()) {
            auto& [u, rest] = st.back();
            if (!rest) {
                onpath[u] = 0;
                st.pop_back();
                continue;
            }
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            if (par[w] == -2) {
                par[w] = u;
                onpath[w] = 1;
                st.emplace_back(w, adj[w]);
            } else if (w != par[u] && onpath[w]) {
                // back edge u -> w: cycle is w .. u along the DFS path
                for (int x = u; x != w; x = par[x]) cyc.push_back(x);
                cyc.push_back(w);
            }
        }
    }
    if (cyc.empty()) throw std::logic_error("face insertion: block without a cycle");

    std::vector<uint64_t> emb(n, 0);
    uint64_t evm = 0;
    auto add_emb_edge = [&](int a, int b) {
        emb[a] |= uint64_t{1} << b;
        emb[b] |= uint64_t{1} << a;
    };
    for (size_t i = 0; i < cyc.size(); ++i) add_emb_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    for (int v : cyc) evm |= uint64_t{1} << v;

    std::vector<Face> faces;
    faces.push_back({cyc, 0});
    faces.push_back({std::vector<int>(cyc.rbegin(), cyc.rend()), 0});
    set_mask(faces[0]);
    set_mask(faces[1]);

    int remaining = total_edges - static_cast<int>(cyc.size());
    const uint64_t all = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

    while (remaining > 0) {
        // Fragments: unembedded chords between embedded vertices, and
        // components of the unembedded vertices with their attachments.
        struct Fragment {
            uint64_t attach = 0;
            uint64_t comp = 0;  // 0 for a chord
            int u = -1, v = -1;
            int admissible = 0;
            int first_face = -1;
        };
        std::vector<Fragment> frags;
        for (int u = 0; u < n; ++u) {
            if (!((evm >> u) & 1)) continue;
            uint64_t chords = adj[u] & ~emb[u] & evm;
            chords &= ~((uint64_t{1} << (u + 1)) - 1);  // v > u
            for (uint64_t m = chords; m; m &= m - 1) {
                int v = std::countr_zero(m);
                Fragment f;
                f.u = u;
                f.v = v;
                f.attach = (uint64_t{1} << u) | (uint64_t{1} << v);
                frags.push_back(f);
            }
        }
        uint64_t unseen = all & ~evm;
        while (unseen) {
            int s = std::countr_zero(unseen);
            uint64_t comp = uint64_t{1} << s, frontier = comp;
            while (frontier) {
                uint64_t next = 0;
                for (uint64_t m = frontier; m; m &= m - 1)
                    next |= adj[std::countr_zero(m)];
                next &= ~evm & ~comp;
                comp |= next;
                frontier = next;
            }
            uint64_t attach = 0;
            for (uint64_t m = comp; m; m &= m - 1) attach |= adj[std::countr_zero(m)];
            attach &= evm;
            Fragment f;
            f.comp = comp;
            f.attach = attach;
            frags.push_back(f);
            unseen &= ~comp;
        }

        int chosen = -1;
        for (size_t i = 0; i < frags.size(); ++i) {
            auto& f = frags[i];
            f.admissible = 0;
            f.first_face = -1;
            for (size_t fi = 0; fi < faces.size(); ++fi) {
                if ((faces[fi].mask & f.attach) == f.attach) {
                    if (f.first_face < 0) f.first_face = static_cast<int>(fi);
                    ++f.admissible;
                }
            }
            if (f.admissible == 0) return std::nullopt;
            if (chosen < 0 || f.admissible < frags[chosen].admissible)
                chosen = static_cast<int>(i);
        }

        const Fragment& f = frags[chosen];
        int a, b;
        std::vector<int> interior;
        if (!f.comp) {
            a = f.u;
            b = f.v;
        } else {
            a = std::countr_zero(f.attach);
            uint64_t rest = f.attach & (f.attach - 1);
            b = std::countr_zero(rest);
            // path through the component from a neighbor of a to a neighbor of b
            uint64_t starts = adj[a] & f.comp;
            std::vector<int> par(n, -2);
            std::vector<int> queue;
            for (uint64_t m = starts; m; m &= m - 1) {
                int w = std::countr_zero(m);
                par[w] = -1;
                queue.push_back(w);
            }
            int hit = -1;
            for (size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
                int u = queue[qi];
                if ((adj[u] >> b) & 1) {
                    hit = u;
                    break;
                }
                for (uint64_t m = adj[u] & f.comp; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    if (par[w] == -2) {
                        par[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if (hit < 0) throw std::logic_error("face insertion: fragment path not found");
            for (int x = hit; x != -1; x = par[x]) interior.push_back(x);
            std::reverse(interior.begin(), interior.end());  // a-side first
        }

        Face& old = faces[f.first_face];
        const auto& walk = old.walk;
        const int len = static_cast<int>(walk.size());
        int pa = -1, pb = -1;
        for (int i = 0; i < len; ++i) {
            if (walk[i] == a) pa = i;
            if (walk[i] == b) pb = i;
        }
        if (pa < 0 || pb < 0) throw std::logic_error("face insertion: attachment missing");
        Face f1, f2;
        for (int i = pa;; i = (i + 1) % len) {
            f1.walk.push_back(walk[i]);
            if (i == pb) break;
        }
        for (auto it = interior.rbegin(); it != interior.rend(); ++it) f1.walk.push_back(*it);
        for (int i = pb;; i = (i + 1) % len) {
            f2.walk.push_back(walk[i]);
            if (i == pa) break;
        }
        for (int x : interior) f2.walk.push_back(x);
        set_mask(f1);
        set_mask(f2);

        int prev = a;
        for (int x : interior) {
            add_emb_edge(prev, x);
            evm |= uint64_t{1} << x;
            prev = x;
        }
        add_emb_edge(prev, b);
        remaining -= static_cast<int>(interior.size()) + 1;

        faces[f.first_face] = std::move(f1);
        faces.push_back(std::move(f2));
    }
    return faces;
}

// Rotation successors of one embedded block, written into succ (global ids):
// succ[v][u] = w when some face traverses u -> v -> w.
void block_rotations(const std::vector<Face>& faces, const std::vector<int>& to_global,
                     std::map<int, std::map<int, int>>& succ) {
    // orient the face cycles coherently so every directed edge is used once
    const int nf = static_cast<int>(faces.size());
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_faces;
    for (int fi = 0; fi < nf; ++fi) {
        const auto& w = faces[fi].walk;
        const int len = static_cast<int>(w.size());
        for (int i = 0; i < len; ++i) {
            int u = w[i], v = w[(i + 1) % len];
            edge_faces[{std::min(u, v), std::max(u, v)}].emplace_back(fi, i);
        }
    }
    std::vector<int> orient(nf, 0);
    std::vector<int> todo{0};
    orient[0] = 1;
    while (!todo.empty()) {
        int fi = todo.back();
        todo.pop_back();
        const auto& w = faces[fi].walk;
        const int len = static_cast<int>(w.size());
        for (int i = 0; i < len; ++i) {
            int u = w[i], v = w[(i + 1) % len];
            // oriented traversal of this edge by face fi
            int du = orient[fi] > 0 ? u : v;
            int dv = orient[fi] > 0 ? v : u;
            for (auto [gi, gpos] : edge_faces[{std::min(u, v), std::max(u, v)}]) {
                if (gi == fi) continue;
                const auto& gw = faces[gi].walk;
                int gu = gw[gpos], gv = gw[(gpos + 1) % gw.size()];
                // face gi must traverse dv -> du
                int need = (gu == dv && gv == du) ? 1 : -1;
                if (orient[gi] == 0) {
                    orient[gi] = need;
                    todo.push_back(gi);
                } else if (orient[gi] != need) {
                    throw std::logic_error("face orientation conflict");
                }
            }
        }
    }
    for (int fi = 0; fi < nf; ++fi) {
        const auto& w = faces[fi].walk;
        const int len = static_cast<int>(w.size());
        for (int i = 0; i < len; ++i) {
            int u, v, x;
            if (orient[fi] > 0) {
                u = w[i];
                v = w[(i + 1) % len];
                x = w[(i + 2) % len];
            } else {
                u = w[(i + 2) % len];
                v = w[(i + 1) % len];
                x = w[i];
            }
            succ[to_global[v]][to_global[u]] = to_global[x];
        }
    }
}

struct BlockDecomposition {
    std::vector<std::vector<std::pair<int, int>>> blocks;  // edge lists
};

BlockDecomposition biconnected_blocks(const SimpleGraph& g) {
    const int n = g.order();
    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    // iterative DFS
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
                        // everything above the tree edge (p, v) is one block
                        std::vector<std::pair<int, int>> block;
                        std::pair<int, int> e;
                        do {
                            e = estack.back();
                            estack.pop_back();
                            block.push_back(e);
                        } while (!(e.first == p && e.second == v));
                        out.blocks.push_back(std::move(block));
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

struct EmbedResult {
    bool planar = false;
    std::vector<std::vector<int>> rotation;
};

EmbedResult embed_graph(const SimpleGraph& g, bool want_rotation) {
    const int n = g.order();
    EmbedResult res;
    res.rotation.assign(static_cast<size_t>(n), {});

    auto blocks = biconnected_blocks(g);
    // succ[v]: incoming neighbor -> outgoing neighbor, merged across blocks
    std::vector<std::vector<std::vector<int>>> arcs(static_cast<size_t>(n));

    for (const auto& block : blocks.blocks) {
        if (block.size() == 1) {
            auto [u, v] = block[0];
            if (want_rotation) {
                arcs[u].push_back({v});
                arcs[v].push_back({u});
            }
            continue;
        }
        std::vector<int> verts;
        for (auto [u, v] : block) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> local(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        const int bn = static_cast<int>(verts.size());
        std::vector<uint64_t> badj(static_cast<size_t>(bn), 0);
        for (auto [u, v] : block) {
            badj[local[u]] |= uint64_t{1} << local[v];
            badj[local[v]] |= uint64_t{1} << local[u];
        }
        auto bfaces = dmp_embed(bn, badj);
        if (!bfaces) return res;
        if (want_rotation) {
            std::map<int, std::map<int, int>> succ;
            block_rotations(*bfaces, verts, succ);
            for (auto& [v, smap] : succ) {
                // linearize the cyclic successor map starting at the lowest neighbor
                std::vector<int> cyc;
                int start = smap.begin()->first;
                int u = start;
                do {
                    cyc.push_back(u);
                    u = smap.at(u);
                } while (u != start && cyc.size() <= smap.size());
                if (cyc.size() != smap.size())
                    throw std::logic_error("rotation successor map is not a single cycle");
                arcs[v].push_back(std::move(cyc));
            }
        }
    }
    if (want_rotation) {
        for (int v = 0; v < n; ++v) {
            for (auto& arc : arcs[v])
                for (int u : arc) res.rotation[v].push_back(u);
        }
    }
    res.planar = true;
    return res;
}

}  // namespace

std::optional<PlanarEmbedding> test_planarity(const SimpleGraph& g) {
    const int n = g.order();
    if (n >= 3 && g.edge_count() > 3 * n - 6) return std::nullopt;
    auto res = embed_graph(g, true);
    if (!res.planar) return std::nullopt;
    return PlanarEmbedding{g, std::move(res.rotation)};
}

bool is_planar(const SimpleGraph& g) {
    const int n = g.order();
    if (n >= 3 && g.edge_count() > 3 * n - 6) return false;
    return embed_graph(g, false).planar;
}

bool is_planar_masks(int n, const uint64_t* adj) {
    SimpleGraph g(n);
    int e = 0;
    for (int v = 0; v < n; ++v) e += popcount(adj[v]);
    e /= 2;
    if (n >= 3 && e > 3 * n - 6) return false;
    for (int u = 0; u < n; ++u)
        for (uint64_t m = adj[u] & ~((uint64_t{1} << (u + 1)) - 1); m; m &= m - 1)
            g.add_edge(u, std::countr_zero(m));
    return embed_graph(g, false).planar;
}

std::vector<std::vector<int>> faces(const PlanarEmbedding& e) {
    const SimpleGraph& g = e.host;
    const int n = g.order();
    if (!is_connected(g)) throw std::invalid_argument("faces: host must be connected");
    if (n == 0) throw std::invalid_argument("faces: empty host");
    const int m = g.edge_count();
    if (m == 0) return {{}};

    // succ[v][u] = neighbor after u in the rotation of v
    std::vector<std::array<int8_t, kMaxVertices>> succ(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        succ[v].fill(-1);
        const auto& rot = e.rotation[v];
        if (static_cast<int>(rot.size()) != g.degree(v))
            throw std::logic_error("faces: rotation size mismatch");
        uint64_t seen = 0;
        for (size_t i = 0; i < rot.size(); ++i) {
            int u = rot[i];
            if (!g.has_edge(u, v) || ((seen >> u) & 1))
                throw std::logic_error("faces: rotation is not a permutation of neighbors");
            seen |= uint64_t{1} << u;
            succ[v][u] = static_cast<int8_t>(rot[(i + 1) % rot.size()]);
        }
    }

    std::vector<std::vector<int8_t>> used(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) used[v].assign(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> walks;
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (used[u][v]) continue;
            std::vector<int> walk;
            int a = u, b = v;
            do {
                walk.push_back(a);
                used[a][b] = 1;
                int c = succ[b][a];
                a = b;
                b = c;
            } while (!(a == u && b == v));
            walks.push_back(std::move(walk));
        }
    }
    const int f = static_cast<int>(walks.size());
    if (n - m + f != 2)
        throw std::logic_error("faces: rotation system is not a plane embedding");
    return walks;
}

bool is_outerplanar(const SimpleGraph& g) {
    const int n = g.order();
    if (n + 1 > kMaxVertices) throw std::invalid_argument("is_outerplanar: needs n <= 63");
    if (n <= 3) return is_planar(g);
    SimpleGraph apexed(n + 1);
    for (auto [u, v] : g.edges()) apexed.add_edge(u, v);
    for (int v = 0; v < n; ++v) apexed.add_edge(n, v);
    return is_planar(apexed);
}

}  // namespace plancage

// Allocation-free planarity verdict used by the search hot path. Same face
// insertion algorithm as the embedding builder, on fixed-size scratch.
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>

#include "plancage/graph.hpp"
#include "plancage/planarity.hpp"

namespace plancage {

namespace {

constexpr int kMaxEdges = 3 * kMaxVertices - 6;
constexpr int kMaxFaces = 512;
constexpr int kWalkPool = 1 << 16;

struct FastScratch {
    // biconnected decomposition
    int disc[kMaxVertices];
    int low[kMaxVertices];
    int parent[kMaxVertices];
    uint64_t rest[kMaxVertices];
    int stack[kMaxVertices];
    int estack_u[kMaxEdges + kMaxVertices];
    int estack_v[kMaxEdges + kMaxVertices];
    // block-local
    uint64_t badj[kMaxVertices];
    int local[kMaxVertices];
    // faces as slices of a walk pool
    int16_t pool[kWalkPool];
    int face_off[kMaxFaces];
    int face_len[kMaxFaces];
    uint64_t face_mask[kMaxFaces];
    int pool_top = 0;
    int nfaces = 0;
    // face insertion state
    uint64_t emb[kMaxVertices];
    int par[kMaxVertices];
    int queue[kMaxVertices];
    int16_t path[kMaxVertices];
};

thread_local FastScratch tls;

// face insertion on one 2-connected block given by local adjacency rows;
// true iff planar
bool dmp_planar(int n, const uint64_t* adj, FastScratch& s) {
    int total_edges = 0;
    for (int v = 0; v < n; ++v) total_edges += std::popcount(adj[v]);
    total_edges /= 2;
    if (n >= 3 && total_edges > 3 * n - 6) return false;

    // initial cycle via DFS back edge
    int16_t cyc[kMaxVertices];
    int cyc_len = 0;
    {
        int par[kMaxVertices];
        uint64_t rest[kMaxVertices];
        int st[kMaxVertices];
        uint64_t onpath = 1;
        for (int v = 0; v < n; ++v) par[v] = -2;
        par[0] = -1;
        rest[0] = adj[0];
        st[0] = 0;
        int top = 0;
        while (top >= 0 && cyc_len == 0) {
            int u = st[top];
            if (!rest[top]) {
                onpath &= ~(uint64_t{1} << u);
                --top;
                continue;
            }
            int w = std::countr_zero(rest[top]);
            rest[top] &= rest[top] - 1;
            if (par[w] == -2) {
                par[w] = u;
                onpath |= uint64_t{1} << w;
                ++top;
                st[top] = w;
                rest[top] = adj[w];
            } else if (w != par[u] && ((onpath >> w) & 1)) {
                for (int x = u; x != w; x = par[x]) cyc[cyc_len++] = static_cast<int16_t>(x);
                cyc[cyc_len++] = static_cast<int16_t>(w);
            }
        }
        if (cyc_len == 0) throw std::logic_error("face insertion: block without a cycle");
    }

    s.pool_top = 0;
    s.nfaces = 0;
    auto push_face = [&s](const int16_t* walk, int len, uint64_t mask) {
        if (s.nfaces >= kMaxFaces || s.pool_top + len > kWalkPool)
            throw std::logic_error("face insertion: scratch overflow");
        s.face_off[s.nfaces] = s.pool_top;
        s.face_len[s.nfaces] = len;
        s.face_mask[s.nfaces] = mask;
        std::memcpy(s.pool + s.pool_top, walk, sizeof(int16_t) * static_cast<size_t>(len));
        s.pool_top += len;
        ++s.nfaces;
    };

    uint64_t evm = 0;
    for (int v = 0; v < n; ++v) s.emb[v] = 0;
    for (int i = 0; i < cyc_len; ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc_len];
        s.emb[a] |= uint64_t{1} << b;
        s.emb[b] |= uint64_t{1} << a;
        evm |= uint64_t{1} << a;
    }
    push_face(cyc, cyc_len, evm);
    {
        int16_t rev[kMaxVertices];
        for (int i = 0; i < cyc_len; ++i) rev[i] = cyc[cyc_len - 1 - i];
        push_face(rev, cyc_len, evm);
    }

    int remaining = total_edges - cyc_len;
    const uint64_t all = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

    while (remaining > 0) {
        // pick the fragment with the fewest admissible faces
        int best_adm = INT32_MAX;
        int best_face = -1;
        int best_u = -1, best_v = -1;
        uint64_t best_comp = 0;
        uint64_t best_attach = 0;

        auto consider = [&](uint64_t attach, uint64_t comp, int u, int v) -> bool {
            int adm = 0;
            int first = -1;
            for (int f = 0; f < s.nfaces; ++f) {
                if ((s.face_mask[f] & attach) == attach) {
                    if (first < 0) first = f;
                    if (++adm >= best_adm) break;
                }
            }
            if (adm == 0) return false;
            if (adm < best_adm) {
                best_adm = adm;
                best_face = first;
                best_u = u;
                best_v = v;
                best_comp = comp;
                best_attach = attach;
            }
            return true;
        };

        for (int u = 0; u < n; ++u) {
            if (!((evm >> u) & 1)) continue;
            const uint64_t below = (u + 1 < 64) ? (uint64_t{1} << (u + 1)) - 1 : ~uint64_t{0};
            uint64_t chords = adj[u] & ~s.emb[u] & evm & ~below;
            for (uint64_t m = chords; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (!consider((uint64_t{1} << u) | (uint64_t{1} << v), 0, u, v)) return false;
            }
        }
        uint64_t unseen = all & ~evm;
        while (unseen) {
            int start = std::countr_zero(unseen);
            uint64_t comp = uint64_t{1} << start, frontier = comp;
            while (frontier) {
                uint64_t next = 0;
                for (uint64_t m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
                next &= ~evm & ~comp;
                comp |= next;
                frontier = next;
            }
            uint64_t attach = 0;
            for (uint64_t m = comp; m; m &= m - 1) attach |= adj[std::countr_zero(m)];
            attach &= evm;
            if (!consider(attach, comp, -1, -1)) return false;
            unseen &= ~comp;
        }

        // build the path to insert
        int a, b, plen = 0;
        if (!best_comp) {
            a = best_u;
            b = best_v;
        } else {
            a = std::countr_zero(best_attach);
            b = std::countr_zero(best_attach & (best_attach - 1));
            for (int v = 0; v < n; ++v) s.par[v] = -2;
            int head = 0, tail = 0;
            for (uint64_t m = adj[a] & best_comp; m; m &= m - 1) {
                int w = std::countr_zero(m);
                s.par[w] = -1;
                s.queue[tail++] = w;
            }
            int hit = -1;
            while (head < tail && hit < 0) {
                int u = s.queue[head++];
                if ((adj[u] >> b) & 1) {
                    hit = u;
                    break;
                }
                for (uint64_t m = adj[u] & best_comp; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    if (s.par[w] == -2) {
                        s.par[w] = u;
                        s.queue[tail++] = w;
                    }
                }
            }
            if (hit < 0) throw std::logic_error("face insertion: fragment path not found");
            for (int x = hit; x != -1; x = s.par[x]) s.path[plen++] = static_cast<int16_t>(x);
            // path[] holds the interior from b-side to a-side
        }

        // split the chosen face at a and b
        const int off = s.face_off[best_face], len = s.face_len[best_face];
        int pa = -1, pb = -1;
        for (int i = 0; i < len; ++i) {
            int x = s.pool[off + i];
            if (x == a) pa = i;
            if (x == b) pb = i;
        }
        int16_t w1[2 * kMaxVertices], w2[2 * kMaxVertices];
        int l1 = 0, l2 = 0;
        uint64_t m1 = 0, m2 = 0;
        for (int i = pa;; i = (i + 1) % len) {
            w1[l1++] = s.pool[off + i];
            m1 |= uint64_t{1} << s.pool[off + i];
            if (i == pb) break;
        }
        for (int i = 0; i < plen; ++i) {  // interior reversed = a-side last
            w1[l1++] = s.path[i];
            m1 |= uint64_t{1} << s.path[i];
        }
        for (int i = pb;; i = (i + 1) % len) {
            w2[l2++] = s.pool[off + i];
            m2 |= uint64_t{1} << s.pool[off + i];
            if (i == pa) break;
        }
        for (int i = plen - 1; i >= 0; --i) {
            w2[l2++] = s.path[i];
            m2 |= uint64_t{1} << s.path[i];
        }

        int prev = a;
        for (int i = plen - 1; i >= 0; --i) {
            int x = s.path[i];
            s.emb[prev] |= uint64_t{1} << x;
            s.emb[x] |= uint64_t{1} << prev;
            evm |= uint64_t{1} << x;
            prev = x;
        }
        s.emb[prev] |= uint64_t{1} << b;
        s.emb[b] |= uint64_t{1} << prev;
        remaining -= plen + 1;

        // replace the split face in place when it fits, else append
        if (l1 <= len) {
            std::memcpy(s.pool + off, w1, sizeof(int16_t) * static_cast<size_t>(l1));
            s.face_len[best_face] = l1;
            s.face_mask[best_face] = m1;
        } else {
            // dead slot: a zero mask never matches a nonempty attachment set
            s.face_mask[best_face] = 0;
            s.face_len[best_face] = 0;
            push_face(w1, l1, m1);
        }
        push_face(w2, l2, m2);
    }
    return true;
}

}  // namespace

bool is_planar_fast(int n, const uint64_t* adj) {
    FastScratch& s = tls;
    int edge_total = 0;
    for (int v = 0; v < n; ++v) edge_total += std::popcount(adj[v]);
    edge_total /= 2;
    if (n >= 3 && edge_total > 3 * n - 6) return false;
    if (edge_total == 0) return true;

    // biconnected blocks via iterative DFS; each block tested in isolation
    for (int v = 0; v < n; ++v) s.disc[v] = -1;
    int timer = 0, etop = 0;
    for (int root = 0; root < n; ++root) {
        if (s.disc[root] >= 0) continue;
        int top = 0;
        s.stack[0] = root;
        s.rest[0] = adj[root];
        s.disc[root] = s.low[root] = timer++;
        s.parent[root] = -1;
        while (top >= 0) {
            int v = s.stack[top];
            if (!s.rest[top]) {
                --top;
                if (top >= 0) {
                    int p = s.stack[top];
                    if (s.low[v] < s.low[p]) s.low[p] = s.low[v];
                    if (s.low[v] >= s.disc[p]) {
                        // pop one block and test it
                        int bn = 0;
                        uint64_t bmask = 0;
                        int base = etop;
                        while (base > 0) {
                            int eu = s.estack_u[base - 1], ev = s.estack_v[base - 1];
                            --base;
                            bmask |= (uint64_t{1} << eu) | (uint64_t{1} << ev);
                            if (eu == p && ev == v) break;
                        }
                        if (etop - base > 1) {
                            for (uint64_t m = bmask; m; m &= m - 1)
                                s.local[std::countr_zero(m)] = bn++;
                            for (int i = 0; i < bn; ++i) s.badj[i] = 0;
                            for (int i = base; i < etop; ++i) {
                                int lu = s.local[s.estack_u[i]], lv = s.local[s.estack_v[i]];
                                s.badj[lu] |= uint64_t{1} << lv;
                                s.badj[lv] |= uint64_t{1} << lu;
                            }
                            if (!dmp_planar(bn, s.badj, s)) return false;
                        }
                        etop = base;
                    }
                }
                continue;
            }
            int w = std::countr_zero(s.rest[top]);
            s.rest[top] &= s.rest[top] - 1;
            if (s.disc[w] < 0) {
                s.parent[w] = v;
                s.estack_u[etop] = v;
                s.estack_v[etop] = w;
                ++etop;
                s.disc[w] = s.low[w] = timer++;
                ++top;
                s.stack[top] = w;
                s.rest[top] = adj[w];
            } else if (w != s.parent[v] && s.disc[w] < s.disc[v]) {
                s.estack_u[etop] = v;
                s.estack_v[etop] = w;
                ++etop;
                if (s.disc[w] < s.low[v]) s.low[v] = s.disc[w];
            }
        }
    }
    return true;
}

}  // namespace plancage

#include "plancage/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace plancage {
namespace families {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

SimpleGraph platonic(Platonic which) {
    switch (which) {
        case Platonic::tetrahedron:
            return SimpleGraph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        case Platonic::cube: {
            // vertices are 3-bit labels, edges flip one bit
            SimpleGraph g(8);
            for (int v = 0; v < 8; ++v)
                for (int b = 0; b < 3; ++b)
                    if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
            return g;
        }
        case Platonic::octahedron: {
            // K_{2,2,2}: i and i+3 are the non-adjacent antipodes
            SimpleGraph g(6);
            for (int u = 0; u < 6; ++u)
                for (int v = u + 1; v < 6; ++v)
                    if (v - u != 3) g.add_edge(u, v);
            return g;
        }
        case Platonic::dodecahedron: {
            // generalized Petersen construction: outer 10-cycle 0..9,
            // inner vertices 10..19 with skip-2 cycle, spokes i -- 10+i
            SimpleGraph g(20);
            for (int i = 0; i < 10; ++i) {
                g.add_edge(i, (i + 1) % 10);
                g.add_edge(10 + i, 10 + (i + 2) % 10);
                g.add_edge(i, 10 + i);
            }
            return g;
        }
        case Platonic::icosahedron: {
            SimpleGraph g(12);
            for (int i = 1; i <= 5; ++i) g.add_edge(0, i);
            for (int i = 6; i <= 10; ++i) g.add_edge(11, i);
            for (int i = 0; i < 5; ++i) {
                g.add_edge(1 + i, 1 + (i + 1) % 5);
                g.add_edge(6 + i, 6 + (i + 1) % 5);
            }
            // upper vertex i sits over the gap between two lower vertices
            for (int i = 0; i < 5; ++i) {
                g.add_edge(1 + i, 6 + i);
                g.add_edge(1 + i, 6 + (i + 4) % 5);
            }
            return g;
        }
    }
    throw std::invalid_argument("unknown platonic solid");
}

SimpleGraph platonic(std::string_view name) {
    if (name == "tetrahedron") return platonic(Platonic::tetrahedron);
    if (name == "cube") return platonic(Platonic::cube);
    if (name == "octahedron") return platonic(Platonic::octahedron);
    if (name == "dodecahedron") return platonic(Platonic::dodecahedron);
    if (name == "icosahedron") return platonic(Platonic::icosahedron);
    throw std::invalid_argument("unknown platonic solid: " + std::string(name));
}

SimpleGraph windmill(int l) {
    require(l >= 2, "windmill needs l >= 2");
    SimpleGraph g(2 * l + 1);
    for (int i = 0; i < l; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    return g;
}

SimpleGraph pinwheel(int a) {
    require(a >= 2, "pinwheel needs at least 2 apexes");
    SimpleGraph g(a + 2);
    g.add_edge(0, 1);
    for (int i = 2; i < a + 2; ++i) {
        g.add_edge(0, i);
        g.add_edge(1, i);
    }
    return g;
}

SimpleGraph wheel(int m) {
    require(m >= 3, "wheel needs rim >= 3");
    SimpleGraph g(m + 1);
    for (int i = 1; i <= m; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i == m ? 1 : i + 1);
    }
    return g;
}

SimpleGraph biwheel(int rim) {
    require(rim >= 3, "biwheel needs rim >= 3");
    SimpleGraph g(rim + 2);
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
        g.add_edge(i, rim + 1);
    }
    return g;
}

SimpleGraph double_windmill(int m) {
    require(m >= 5 && m % 2 == 1, "double_windmill needs odd m >= 5");
    SimpleGraph g(m + 1);
    g.add_edge(0, 1);
    for (int i = 0; i < (m - 1) / 2; ++i) {
        int a = 2 + 2 * i, b = 3 + 2 * i;
        g.add_edge(a, b);
        g.add_edge(a, 0);
        g.add_edge(a, 1);
        g.add_edge(b, 0);
        g.add_edge(b, 1);
    }
    return g;
}

SimpleGraph family_I(int m) {
    require(m >= 6, "family_I needs m >= 6");
    SimpleGraph g(2 * m + 2);
    const int hub_in = 0, hub_out = m + 1;
    auto inner = [](int i) { return 1 + i; };
    auto outer = [m](int i) { return m + 2 + i; };
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        g.add_edge(hub_in, inner(i));
        g.add_edge(hub_out, outer(i));
        g.add_edge(inner(i), inner(j));
        g.add_edge(outer(i), outer(j));
        g.add_edge(inner(i), outer(i));
        g.add_edge(inner(i), outer(j));
    }
    return g;
}

SimpleGraph family_D(int m) {
    require(m >= 4, "family_D needs m >= 4");
    SimpleGraph g(2 * m + 2);
    for (int i = 0; i < 2 * m; ++i) g.add_edge(i, (i + 1) % (2 * m));
    for (int j = 0; j < m; ++j) {
        g.add_edge(2 * m, 2 * j);
        g.add_edge(2 * m + 1, 2 * j + 1);
    }
    return g;
}

SimpleGraph gadget_F() {
    SimpleGraph g(9);
    for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
    g.add_edge(8, 0);
    g.add_edge(8, 2);
    g.add_edge(8, 4);
    return g;
}

SimpleGraph gadget_E4() {
    SimpleGraph g(8);
    for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
    g.add_edge(0, 4);
    return g;
}

namespace {

// Shared Z'_k assembly on an explicit edge set, so degree-2 vertices can be
// suppressed before the apex closes the construction.
struct ZChain {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    // per gadget: base offset and whether it is an F copy
    struct Gadget {
        int base;
        bool is_f;
    };
    std::vector<Gadget> gadgets;

    void add_edge(int u, int v) { edges.emplace_back(u, v); }

    // F copy: ring 0..7 at base, apex base+8 joined to ring 0,2,4
    int add_f() {
        int b = n;
        for (int i = 0; i < 8; ++i) add_edge(b + i, b + (i + 1) % 8);
        add_edge(b + 8, b + 0);
        add_edge(b + 8, b + 2);
        add_edge(b + 8, b + 4);
        gadgets.push_back({b, true});
        n += 9;
        return b;
    }

    // E4 copy: ring 0..7 at base with chord {0,4}
    int add_e4() {
        int b = n;
        for (int i = 0; i < 8; ++i) add_edge(b + i, b + (i + 1) % 8);
        add_edge(b + 0, b + 4);
        gadgets.push_back({b, false});
        n += 9 - 1;
        return b;
    }

    // length-2 path joining two gadget vertices through a fresh midpoint
    void add_link(int u, int v) {
        int mid = n++;
        add_edge(u, mid);
        add_edge(mid, v);
    }
};

ZChain build_z_chain(int k) {
    // chain: F -P- E4 -P- ... -P- E4 -P- F, k-2 middles, k-1 links.
    // F joins through its only even-labeled degree-2 ring vertex (6);
    // each E4 joins through its two (2 on the left, 6 on the right).
    ZChain z;
    int first_f = z.add_f();
    int prev_port = first_f + 6;
    for (int i = 0; i < k - 2; ++i) {
        int e4 = z.add_e4();
        z.add_link(prev_port, e4 + 2);
        prev_port = e4 + 6;
    }
    int last_f = z.add_f();
    z.add_link(prev_port, last_f + 6);
    return z;
}

SimpleGraph close_with_apex(const ZChain& z, const std::vector<int>& suppressed) {
    // suppression replaces a degree-2 vertex by an edge between its neighbors
    std::vector<int8_t> drop(static_cast<size_t>(z.n), 0);
    for (int v : suppressed) drop[v] = 1;
    std::vector<std::vector<int>> adj(static_cast<size_t>(z.n));
    for (auto [u, v] : z.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : z.edges)
        if (!drop[u] && !drop[v]) edges.emplace_back(u, v);
    for (int v : suppressed) {
        if (adj[v].size() != 2) throw std::logic_error("suppressing a non-degree-2 vertex");
        int a = adj[v][0], b = adj[v][1];
        if (drop[a] || drop[b]) throw std::logic_error("suppressing adjacent vertices");
        edges.emplace_back(a, b);
    }
    // compact labels, then add the apex joined to all degree-2 vertices
    std::vector<int> newid(static_cast<size_t>(z.n), -1);
    int n = 0;
    for (int v = 0; v < z.n; ++v)
        if (!drop[v]) newid[v] = n++;
    SimpleGraph g(n + 1);
    for (auto [u, v] : edges) g.add_edge(newid[u], newid[v]);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2) g.add_edge(n, v);
    return g;
}

}  // namespace

SimpleGraph family_Z(int k) {
    require(k >= 3, "family_Z needs k >= 3");
    return close_with_apex(build_z_chain(k), {});
}

SimpleGraph family_Z_general(int m) {
    require(m > 14, "family_Z_general needs m > 14");
    const int k = (m + 1 + 4) / 5;  // ceil((m+1)/5)
    const int excess = (5 * k - 1) - m;
    ZChain z = build_z_chain(k);
    // drop diametrically opposite ring vertices (1 then 5) from the trailing
    // E4 copies; each copy can lose both without creating a short cycle
    std::vector<int> suppressed;
    int left = excess;
    for (auto it = z.gadgets.rbegin(); it != z.gadgets.rend() && left > 0; ++it) {
        if (it->is_f) continue;
        suppressed.push_back(it->base + 1);
        if (--left > 0) {
            suppressed.push_back(it->base + 5);
            --left;
        }
    }
    if (left > 0) throw std::logic_error("family_Z_general: not enough removable vertices");
    return close_with_apex(z, suppressed);
}

SimpleGraph family_P(int m) {
    require(m >= 4, "family_P needs m >= 4");
    // hub 0; spokes v_i; double ring w; outer ring x; collectors y; apex z
    const int hub = 0;
    auto v = [](int i) { return 1 + i; };              // i in 0..m-1
    auto w = [m](int j) { return 1 + m + j; };         // j in 0..2m-1
    auto x = [m](int j) { return 1 + 3 * m + j; };     // j in 0..2m-1
    auto y = [m](int i) { return 1 + 5 * m + i; };     // i in 0..m-1
    const int apex = 6 * m + 1;
    SimpleGraph g(6 * m + 2);
    for (int i = 0; i < m; ++i) {
        g.add_edge(hub, v(i));
        g.add_edge(v(i), w(2 * i));
        g.add_edge(v(i), w(2 * i + 1));
        g.add_edge(w(2 * i + 1), w((2 * i + 2) % (2 * m)));
        g.add_edge(x(2 * i), x(2 * i + 1));
        g.add_edge(y(i), x(2 * i + 1));
        g.add_edge(y(i), x((2 * i + 2) % (2 * m)));
        g.add_edge(apex, y(i));
    }
    for (int j = 0; j < 2 * m; ++j) g.add_edge(w(j), x(j));
    return g;
}

SimpleGraph family_O(int m, int g) {
    require(m >= 3, "family_O needs m >= 3");
    require(g >= 3, "family_O needs g >= 3");
    const int len_long = (g + 1) / 2, len_short = g / 2;
    SimpleGraph out((m - 1) * (len_long - 1) + (len_short - 1) + 2);
    int next = 2;
    auto add_path = [&out, &next](int len) {
        int prev = 0;
        for (int i = 1; i < len; ++i) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, 1);
    };
    for (int p = 0; p < m - 1; ++p) add_path(len_long);
    add_path(len_short);
    return out;
}

SimpleGraph family_F_cycles(int m, int g) {
    require(m >= 4 && m % 2 == 0, "family_F_cycles needs even m >= 4");
    require(g >= 3, "family_F_cycles needs g >= 3");
    SimpleGraph out(m / 2 * (g - 1) + 1);
    int next = 1;
    for (int c = 0; c < m / 2; ++c) {
        int prev = 0;
        for (int i = 1; i < g; ++i) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, 0);
    }
    return out;
}

SimpleGraph k2m(int m) {
    require(m >= 3, "k2m needs m >= 3");
    SimpleGraph g(m + 2);
    for (int i = 2; i < m + 2; ++i) {
        g.add_edge(0, i);
        g.add_edge(1, i);
    }
    return g;
}

}  // namespace families
}  // namespace plancage

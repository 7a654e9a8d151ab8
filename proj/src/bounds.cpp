#include "plancage/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace plancage {

namespace {

long long ceil_div(long long a, long long b) {
    // b > 0
    return (a + b - 1) / b;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

CageParams CageParams::make_regular(int k, int g) {
    require(k >= 2, "regular prescription needs k >= 2");
    require(g >= 3, "girth must be >= 3");
    return CageParams{true, k, k, g};
}

CageParams CageParams::make_biregular(int r, int m, int g) {
    require(2 <= r && r < m, "biregular prescription needs 2 <= r < m");
    require(g >= 3, "girth must be >= 3");
    return CageParams{false, r, m, g};
}

std::string CageParams::to_string() const {
    if (regular) return "(" + std::to_string(r) + "," + std::to_string(g) + ")";
    return "({" + std::to_string(r) + "," + std::to_string(m) + "};" + std::to_string(g) + ")";
}

long long moore_biregular(int r, int m, int g) {
    require(2 <= r && r < m, "moore_biregular needs 2 <= r < m");
    require(g >= 3, "moore_biregular needs g >= 3");
    const int t = g / 2;
    long long total = 1;
    long long power = 1;  // (r-1)^i
    if (g % 2 == 1) {
        for (int i = 0; i <= t - 1; ++i, power *= (r - 1)) total += m * power;
    } else {
        for (int i = 0; i <= t - 2; ++i, power *= (r - 1)) total += m * power;
        total += power;  // (r-1)^(t-1)
    }
    return total;
}

long long chartrand_2m_exact(int m, int g) {
    require(m > 2, "chartrand_2m_exact needs m > 2");
    require(g >= 3, "chartrand_2m_exact needs g >= 3");
    long long num = (g % 2 == 0) ? static_cast<long long>(m) * (g - 2) + 4
                                 : static_cast<long long>(m) * (g - 1) + 2;
    if (num % 2 != 0) throw std::logic_error("chartrand_2m_exact: parity broken");
    return num / 2;
}

long long chartrand_girth4(int r, int m) {
    require(r < m, "chartrand_girth4 needs r < m");
    return static_cast<long long>(r) + m;
}

bool regular_feasible(int k, int g) {
    require(k >= 2 && g >= 3, "regular_feasible needs k >= 2 and g >= 3");
    if (k == 2) return true;
    return 2 * k - g * (k - 2) > 0;
}

long long regular_cage_order(int k, int g) {
    require(regular_feasible(k, g), "infeasible (k,g) pair");
    if (k == 2) return g;
    const int denom = 2 * k - g * (k - 2);
    return 4LL * g / denom;
}

bool biregular_feasible(int r, int m, int g) {
    if (!(2 <= r && r < m && g >= 3)) return false;
    return (r - 2) * (g - 2) < 4;
}

bool euler_degree_inequality(long long y, long long x, long long r, long long m, long long g) {
    return y * (r * (2 - g) + 2 * g) + x * (m * (2 - g) + 2 * g) - 4 * g >= 0;
}

long long general_lower_bound(int r, int m, int g) {
    require(biregular_feasible(r, m, g), "general_lower_bound needs a feasible triplet");
    const long long denom = static_cast<long long>(r) * (2 - g) + 2 * g;  // > 0 when feasible
    const long long num = static_cast<long long>(m) * (g - 2) + 2 * g;
    return 1 + ceil_div(num, denom);
}

long long girth4_refined_lower(long long m) {
    require(m >= 4, "girth4_refined_lower needs m >= 4");
    if (m <= 13) return 2 * m + 2;
    return ceil_div(9 * m + 19, 5);
}

long long link_lower_bound(long long m, long long k, long long c, long long ends) {
    require(m >= 0 && k >= 0 && c >= 0 && ends >= 0, "link_lower_bound needs nonnegative inputs");
    return 2 * m - k + c + ends + 1;
}

BoundReport planar_lower_bound(int r, int m, int g) {
    require(biregular_feasible(r, m, g), "planar_lower_bound needs a feasible triplet");
    BoundReport rep;
    rep.feasible = true;
    rep.provenance.push_back({moore_biregular(r, m, g), "moore_tree"});
    rep.provenance.push_back({general_lower_bound(r, m, g), "euler_degree_count"});
    if (r == 2) rep.provenance.push_back({chartrand_2m_exact(m, g), "two_degree_exact"});
    if (r == 3 && g == 4) rep.provenance.push_back({girth4_refined_lower(m), "link_refinement"});
    rep.lower = 0;
    for (const auto& s : rep.provenance) rep.lower = std::max(rep.lower, s.value);
    return rep;
}

BoundReport known_bounds_table(int r, int m, int g) {
    require(biregular_feasible(r, m, g), "known_bounds_table needs a feasible triplet");
    BoundReport rep = planar_lower_bound(r, m, g);

    auto add_upper = [&rep](long long value, const char* source) {
        rep.provenance.push_back({value, source});
        if (!rep.upper || value < *rep.upper) rep.upper = value;
    };
    auto lift_lower = [&rep](long long value, const char* source) {
        rep.provenance.push_back({value, source});
        rep.lower = std::max(rep.lower, value);
    };

    if (g == 3) {
        switch (r) {
            case 2:
                add_upper(m + 1, m % 2 == 0 ? "pinwheel/windmill" : "pinwheel");
                rep.exact = true;
                break;
            case 3:
                add_upper(m + 1, "wheel");
                rep.exact = true;
                break;
            case 4:
                // order m+1 is excluded by the outerplanarity/minor argument
                lift_lower(m + 2, "order_m_plus_1_excluded");
                add_upper(m + 2, "biwheel");
                rep.exact = true;
                break;
            case 5:
                if (m >= 6) add_upper(2LL * m + 2, "family_I");
                if (m >= 13) add_upper(static_cast<long long>(m) + 15, "family_A");
                if (m == 6 || m == 7) {
                    lift_lower(2LL * m + 2, "exhaustive_search");
                    rep.exact = true;
                }
                break;
        }
    } else if (g == 4) {
        if (r == 2) {
            add_upper(m + 2, "complete_bipartite");
            rep.exact = true;
        } else {  // r == 3
            if (m <= 13) {
                add_upper(2LL * m + 2, "family_D");
                rep.exact = true;
            } else {
                add_upper(static_cast<long long>(m) + 4 * ceil_div(m + 1, 5) + 3, "family_Z");
                rep.exact = (m % 5 == 4);  // m = 5k-1: the chained-gadget order is optimal
            }
        }
    } else if (g == 5) {
        if (r == 2) {
            add_upper(2LL * m + 1, m % 2 == 0 ? "family_O/family_F" : "family_O");
            rep.exact = true;
        } else {  // r == 3
            add_upper(6LL * m + 2, "family_P");
            if (m >= 6 && m % 2 == 0)
                add_upper(3LL * m + 2 * ((m - 6) / 4) + 21, "family_B_even");
            if (m >= 7 && m % 2 == 1)
                add_upper(3LL * m + 2 * ((m - 5) / 4) + 22, "family_B_odd");
        }
    } else {  // g >= 6, r == 2
        add_upper(chartrand_2m_exact(m, g),
                  (g % 2 == 1 && m % 2 == 0) ? "family_O/family_F" : "family_O");
        rep.exact = true;
    }
    if (rep.exact && rep.upper && *rep.upper != rep.lower)
        throw std::logic_error("known_bounds_table: exact row with lower != upper");
    return rep;
}

long long max_edges_planar_girth(int n, int g) {
    require(n >= 0 && g >= 3, "max_edges_planar_girth domain");
    if (n <= 2) return std::max(0, n - 1);
    if (n < g) return n - 1;  // too few vertices for any cycle of length >= g
    if (g == 3) return 3LL * n - 6;
    return std::max<long long>(n - 1, static_cast<long long>(g) * (n - 2) / (g - 2));
}

std::vector<int> feasible_degree_m_counts(int r, int m, int g, int n) {
    std::vector<int> out;
    if (!biregular_feasible(r, m, g)) return out;
    if (n < m + 1 || n < g) return out;
    const long long ecap = max_edges_planar_girth(n, g);
    for (int x = 1; x <= n - 1; ++x) {
        const long long y = n - x;
        const long long degsum = y * r + static_cast<long long>(x) * m;
        if (degsum % 2 != 0) continue;
        if (degsum / 2 > ecap) continue;
        if (!euler_degree_inequality(y, x, r, m, g)) continue;
        out.push_back(x);
    }
    return out;
}

}  // namespace plancage

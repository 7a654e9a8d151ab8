#ifndef PLANCAGE_BOUNDS_HPP
#define PLANCAGE_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "plancage/graph.hpp"

namespace plancage {

/// Degree/girth prescription: either k-regular or biregular with degrees
/// {r, m}, 2 <= r < m, together with a girth g >= 3.
struct CageParams {
    bool regular = false;
    int r = 0;  // == m == k for regular prescriptions
    int m = 0;
    int g = 0;

    static CageParams make_regular(int k, int g);
    static CageParams make_biregular(int r, int m, int g);
    std::string to_string() const;
    bool operator==(const CageParams&) const = default;
};

struct BoundSource {
    long long value;
    std::string source;
};

/// Feasibility verdict plus the best lower/upper bounds with one provenance
/// entry per contributing bound.
struct BoundReport {
    bool feasible = false;
    long long lower = 0;
    std::optional<long long> upper;
    bool exact = false;
    std::vector<BoundSource> provenance;
};

/// Moore-style tree-count lower bound for biregular cages (not only planar
/// ones). The summation index starts at i = 0; see the girth-3/4/5 rows it
/// has to reproduce.
long long moore_biregular(int r, int m, int g);

/// Exact order of {2,m}-degree cages: (m(g-2)+4)/2 for even g,
/// (m(g-1)+2)/2 for odd g. Exact integer arithmetic, parity asserted.
long long chartrand_2m_exact(int m, int g);

/// Exact order of girth-4 biregular cages: r + m.
long long chartrand_girth4(int r, int m);

/// k-regular planar feasibility: k = 2 is always feasible (cycles); for
/// k >= 3 the Euler inequality 2k - g(k-2) > 0 must hold.
bool regular_feasible(int k, int g);

/// Order of the k-regular planar cage: g for k = 2, else 4g/(2k - g(k-2)).
long long regular_cage_order(int k, int g);

/// Planar feasibility of biregular prescriptions, equivalent to
/// (r-2)(g-2) < 4 over the domain 2 <= r < m, g >= 3.
bool biregular_feasible(int r, int m, int g);

/// Euler/handshake inequality for planar graphs with y vertices of degree r
/// and x of degree m: y[r(2-g)+2g] + x[m(2-g)+2g] - 4g >= 0.
bool euler_degree_inequality(long long y, long long x, long long r, long long m, long long g);

/// ceil(1 + (m(g-2)+2g) / (r(2-g)+2g)), valid for feasible triplets.
long long general_lower_bound(int r, int m, int g);

/// Refined lower bound for planar ({3,m};4)-graphs from the link/intersection
/// analysis: 2m+2 for 4 <= m <= 13, ceil((9m+19)/5) for m >= 14.
long long girth4_refined_lower(long long m);

/// 2m - k + c + ends + 1.
long long link_lower_bound(long long m, long long k, long long c, long long ends);

/// Best lower bound for the planar cage order, with provenance.
BoundReport planar_lower_bound(int r, int m, int g);

/// Known lower/upper/exactness per the girth-3/4/5/>=6 tables.
BoundReport known_bounds_table(int r, int m, int g);

/// Largest edge count of a planar graph on n vertices with girth >= g
/// (forests allowed).
long long max_edges_planar_girth(int n, int g);

/// Feasible counts x of degree-m vertices on n vertices: handshake parity,
/// the Euler/degree inequality, and the planar edge cap must all hold, with
/// x >= 1 and y = n - x >= 1. Empty when no x survives.
std::vector<int> feasible_degree_m_counts(int r, int m, int g, int n);

}  // namespace plancage

#endif

#ifndef PLANCAGE_SEARCH_HPP
#define PLANCAGE_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plancage/bounds.hpp"
#include "plancage/graph.hpp"

namespace plancage {

struct SearchOptions {
    int threads = 1;
    std::string checkpoint_path;     // empty: no checkpointing
    bool allow_disconnected = false; // audit mode; default searches connected graphs
};

struct SearchStats {
    double elapsed_sec = 0.0;
    uint64_t classes_expanded = 0;   // parent classes across all levels
    uint64_t children_tested = 0;    // completed neighborhood choices
    uint64_t planarity_calls = 0;
    uint64_t children_accepted = 0;  // survivors of all prunes, pre-dedup
    int widest_level = 0;
    uint64_t widest_level_size = 0;
};

/// Exhaustiveness certificate: the full augmentation tree (modulo sound
/// prunes) was explored, and `graphs` lists one graph6 representative per
/// isomorphism class found, sorted. Deterministic for fixed query regardless
/// of thread count.
struct SearchOutcome {
    CageParams params;
    std::vector<int> orders_scanned;
    bool exhaustive = false;
    std::vector<std::string> graphs;  // graph6, sorted
    SearchStats stats;
};

/// All isomorphism classes on exactly n vertices that are planar, have girth
/// exactly params.g, and realize the degree prescription (both degrees
/// present for biregular queries). Connected graphs only unless
/// options.allow_disconnected is set.
SearchOutcome enumerate_order(const CageParams& params, int n, const SearchOptions& options = {});

/// Scans orders upward from the known lower bound (respecting parity/Euler
/// pruning) until a nonempty enumeration, or n_max.
SearchOutcome min_order(const CageParams& params, int n_max, const SearchOptions& options = {});

/// False iff no split x >= 1, y >= 1, x + y = n satisfies the handshake
/// parity, the Euler/degree inequality, and the planar girth edge cap.
bool parity_prune(int r, int m, int g, int n);

/// True iff enumeration at the expected graphs' common order returns exactly
/// their isomorphism classes.
bool verify_uniqueness(const CageParams& params, const std::vector<SimpleGraph>& expected,
                       const SearchOptions& options = {});

}  // namespace plancage

#endif

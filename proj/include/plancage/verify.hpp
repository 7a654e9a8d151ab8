#ifndef PLANCAGE_VERIFY_HPP
#define PLANCAGE_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "plancage/bounds.hpp"
#include "plancage/graph.hpp"

namespace plancage {

enum class CertStatus { meets_exact_cage_order, within_bounds, violates, infeasible_triplet };

/// Read-only certification of a graph against a degree/girth prescription.
/// Each check is reported individually; connectivity is only enforced for
/// the meets_exact_cage_order status.
struct Certificate {
    CageParams params;
    int order = 0;
    bool simple = true;
    bool connected = false;
    bool degrees_ok = false;
    bool girth_ok = false;
    bool planar_ok = false;
    CertStatus status = CertStatus::violates;
    std::string violated;  // first failed property, for violates
    long long lower = 0;
    std::optional<long long> upper;
    bool exact_known = false;

    /// Stable key:value text serialization.
    std::string to_text() const;
};

Certificate certify(const SimpleGraph& g, const CageParams& params);

/// One row of a regenerated bounds table.
struct TableRow {
    std::string label;       // e.g. "r=3" or "r=5, 8<=m<=13"
    std::string value;       // rendered bound or exact order formula result
    std::string graphs;      // realizing constructions, "-" when external
    bool full_list = false;
};

struct BoundsTable {
    std::string title;
    std::vector<TableRow> rows;
};

/// Regenerates the lower-bound table rows (for every valid m <= 20) and the
/// four girth tables from the calculators and family constructors, throwing
/// std::logic_error on any mismatch between computed and tabulated values.
std::vector<BoundsTable> reproduce_tables();

/// Renders one girth table ("3", "4", "5", or "6" for girth >= 6).
std::string render_table(int girth);

}  // namespace plancage

#endif

#ifndef PLANCAGE_DRAW_HPP
#define PLANCAGE_DRAW_HPP

#include <array>
#include <string>
#include <vector>

#include "plancage/graph.hpp"

namespace plancage {

struct Layout {
    std::vector<std::array<double, 2>> pos;  // unit-scale coordinates
};

/// Straight-line drawing from a combinatorial embedding: a largest face is
/// pinned to a convex polygon and every other vertex is relaxed to the
/// (weighted) average of its neighbors, with one auxiliary vertex per inner
/// face to keep sparse faces from collapsing. Deterministic. Throws
/// std::invalid_argument for non-planar or disconnected input.
Layout planar_layout(const SimpleGraph& g);

std::string to_svg(const SimpleGraph& g, const Layout& layout);

/// Number of properly crossing segment pairs (shared endpoints excluded),
/// with tolerance eps on unit-scale coordinates. Collinear overlap counts.
int count_proper_crossings(const SimpleGraph& g, const Layout& layout, double eps = 1e-9);

}  // namespace plancage

#endif

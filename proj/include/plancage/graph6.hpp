#ifndef PLANCAGE_GRAPH6_HPP
#define PLANCAGE_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "plancage/graph.hpp"

namespace plancage {

/// Thrown on malformed graph6 / edge-list input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// graph6 encoding for n <= 62 (single size byte n+63): upper-triangle bits
/// x(i,j) column by column (j = 1..n-1, i < j), zero-padded to a multiple of
/// six, each 6-bit group offset by 63.
std::string encode_graph6(const SimpleGraph& g);

/// Inverse of encode_graph6. Rejects bad headers, wrong length, bytes outside
/// [63,126] and nonzero padding bits.
SimpleGraph decode_graph6(std::string_view bytes);

/// Plain text edge list: first line "n", then one "u v" line per edge,
/// 0-indexed, lexicographically ascending with u < v.
std::string encode_edge_list(const SimpleGraph& g);
SimpleGraph decode_edge_list(std::string_view text);

/// Plain undirected DOT, one edge per line; isolated vertices get node lines.
std::string encode_dot(const SimpleGraph& g, std::string_view name = "G");

}  // namespace plancage

#endif

#ifndef PLANCAGE_CANONICAL_HPP
#define PLANCAGE_CANONICAL_HPP

#include <compare>
#include <string>

#include "plancage/graph.hpp"

namespace plancage {

/// Byte sequence identifying an isomorphism class: one size byte followed by
/// the packed upper-triangle bits of the canonically relabeled graph. Two
/// graphs yield equal forms iff they are isomorphic.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical labeling by iterated equitable refinement (degree, multiset of
/// neighbor cells) plus backtracking over cell orderings, pruned by the
/// automorphisms discovered along the way. Targets correctness at n <= 64,
/// not asymptotic optimality.
CanonicalForm canonical_form(const SimpleGraph& g);

/// Hot-path variant writing into a reusable buffer.
void canonical_bytes(int n, const uint64_t* adj, std::string& out);

/// Rebuilds the canonical representative encoded by a form.
SimpleGraph from_canonical_form(const CanonicalForm& form);
SimpleGraph graph_from_canonical_bytes(const std::string& bytes);

}  // namespace plancage

#endif

#pragma once

#include <optional>

#include "ftdesign/design.hpp"

namespace ftd
{

struct SearchOptions
{
  /// Maximum number of search-tree nodes; 0 means unlimited. Exceeding it throws
  /// ErrorCode::budget_exhausted.
  std::size_t node_limit = 0;
};

/// Full automorphism group (acting on points), found by individualization and refinement
/// on the point-block incidence graph. Repeated blocks are respected.
PermGroup automorphism_group(IncidenceStructure const &s, SearchOptions const &options = {});

/// A point bijection mapping the blocks of s1 onto those of s2 (with multiplicity), if any.
std::optional<Permutation> are_isomorphic(IncidenceStructure const &s1, IncidenceStructure const &s2,
                                          SearchOptions const &options = {});

/// Same as above, reusing a known automorphism group of s2 for pruning.
std::optional<Permutation> are_isomorphic(IncidenceStructure const &s1, IncidenceStructure const &s2,
                                          PermGroup const &aut2, SearchOptions const &options = {});

/// Whether p maps the block multiset of s1 onto that of s2.
bool is_isomorphism(IncidenceStructure const &s1, IncidenceStructure const &s2, Permutation const &p);

} // namespace ftd

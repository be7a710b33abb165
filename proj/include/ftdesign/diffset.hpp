#pragma once

#include <optional>

#include "ftdesign/design.hpp"

namespace ftd
{

/// A group acting regularly, with the element carrying the base point to each point.
struct RegularAction
{
  PermGroup group;
  Point base = 0;
  std::vector<Permutation> element_of;

  std::size_t degree() const
  { return group.degree(); }
};

/// Throws ErrorCode::invalid_argument unless g is regular.
RegularAction make_regular_action(PermGroup const &g, Point base = 0);

struct DifferenceReport
{
  bool is_difference_set = false;
  /// counts[p] = number of ordered pairs (i, j), i != j, with d_i d_j^-1 = element_of[p].
  std::vector<std::size_t> counts;
  /// First point whose count differs from lambda.
  std::optional<Point> deviant;
};

/// Points of d are identified with group elements through element_of.
DifferenceReport is_difference_set(RegularAction const &r, std::vector<Point> const &d, std::size_t lambda);

/// Blocks d^g for every element g of the group, multiplicity kept.
IncidenceStructure develop_difference_set(RegularAction const &r, std::vector<Point> const &d);

struct RegularSearch
{
  std::vector<RegularAction> found;
  /// True when the node budget ran out before the search finished.
  bool budget_exhausted = false;
  std::size_t nodes = 0;
};

/// Up to `limit` subgroups of g acting regularly. For prime-power degree the search runs
/// inside one Sylow subgroup, adding an element of the normalizer at each step; otherwise
/// it runs over all elements of g. Stops after `budget` extension attempts.
RegularSearch find_regular_subgroups(PermGroup const &g, std::size_t limit, std::size_t budget);

/// A Sylow p-subgroup of g. Exact for groups small enough to enumerate, otherwise grown
/// from random p-elements and possibly smaller than Sylow.
PermGroup sylow_subgroup(PermGroup const &g, unsigned p);

} // namespace ftd

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ftdesign/perm.hpp"

namespace ftd
{

/// A G-invariant partition of the point set into classes of equal size.
struct BlockSystem
{
  /// Classes sorted internally, ordered by their smallest point.
  std::vector<std::vector<Point>> classes;
  std::vector<std::size_t> class_of;

  std::size_t class_count() const
  { return classes.size(); }

  std::size_t class_size() const
  { return classes.empty() ? 0 : classes.front().size(); }

  /// Builds the class_of map and validates the partition.
  static BlockSystem from_classes(std::vector<std::vector<Point>> classes, std::size_t degree);

  friend bool operator==(BlockSystem const &a, BlockSystem const &b)
  { return a.classes == b.classes; }
};

/// A permutation group given by generators, with a stabilizer chain built
/// by the deterministic Schreier-Sims algorithm.
class PermGroup
{
public:
  struct Level
  {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> index;
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  /// Base points listed in base_prefix come first in the chain, in order.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::span<Point const> base_prefix = {});

  static PermGroup trivial(std::size_t degree)
  { return PermGroup(degree, {}); }

  std::size_t degree() const
  { return _degree; }

  std::vector<Permutation> const &generators() const
  { return _generators; }

  std::vector<Level> const &chain() const
  { return _chain; }

  std::vector<Point> base() const;

  BigInt order() const;

  bool contains(Permutation const &p) const;

  bool is_transitive() const;

  /// Visits every element exactly once; stop early by returning false.
  void for_each_element(std::function<bool(Permutation const &)> const &visit) const;

  /// Strong generators fixing the first `depth` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t depth) const;

private:
  void schreier_sims();
  void rebuild_orbit(Level &level) const;
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const;

  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::vector<Level> _chain;
};

/// Throws ErrorCode::invalid_argument on an empty list or mismatched degrees.
PermGroup group_from_generators(std::vector<Permutation> gens);

std::vector<Point> orbit(PermGroup const &g, Point p);

/// Orbit of a point under an arbitrary generator list.
std::vector<Point> orbit_of(std::span<Permutation const> gens, Point p, std::size_t degree);

std::vector<std::vector<Point>> orbits(PermGroup const &g);

/// Sorted orbit lengths of the stabilizer of point 0, including the fixed point.
std::vector<std::size_t> rank_and_subdegrees(PermGroup const &g);

/// Minimal non-trivial block systems; empty iff the group is primitive.
std::vector<BlockSystem> minimal_block_systems(PermGroup const &g);

/// Smallest block containing both points.
std::vector<Point> minimal_block(PermGroup const &g, Point a, Point b);

PermGroup point_stabilizer(PermGroup const &g, Point p);

/// Setwise stabilizer, found by backtracking over a chain whose base starts with s.
PermGroup set_stabilizer(PermGroup const &g, std::span<Point const> s);

bool is_regular(PermGroup const &g);

bool is_block_system_invariant(PermGroup const &g, BlockSystem const &sigma);

} // namespace ftd

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ftdesign/group.hpp"

namespace ftd
{

using Block = std::vector<Point>;

/// v points and a list of blocks; repeated blocks are kept as distinct blocks.
class IncidenceStructure
{
public:
  IncidenceStructure() = default;

  /// Sorts every block. Throws on empty blocks, repeated points or points >= v.
  IncidenceStructure(std::size_t v, std::vector<Block> blocks);

  std::size_t v() const
  { return _v; }

  std::size_t b() const
  { return _blocks.size(); }

  std::vector<Block> const &blocks() const
  { return _blocks; }

  Block const &block(std::size_t i) const
  { return _blocks[i]; }

  /// Indices of every block equal to `block` (which must be sorted).
  std::vector<std::size_t> const *find(Block const &block) const;

  /// Same v and the same multiset of blocks.
  friend bool operator==(IncidenceStructure const &a, IncidenceStructure const &b);

private:
  struct BlockKeyHash
  {
    std::size_t operator()(Block const &b) const;
  };

  std::size_t _v = 0;
  std::vector<Block> _blocks;
  std::unordered_map<Block, std::vector<std::size_t>, BlockKeyHash> _index;
};

struct DesignParams
{
  std::size_t v = 0, b = 0, k = 0, r = 0, lambda = 0;

  bool symmetric() const
  { return v == b; }

  friend bool operator==(DesignParams const &, DesignParams const &) = default;
};

/// Result of verify_design: parameters, or the first violated axiom with a witness.
struct DesignReport
{
  std::optional<DesignParams> params;
  std::string violation;

  explicit operator bool() const
  { return params.has_value(); }
};

DesignReport verify_design(IncidenceStructure const &s);

/// "2-(v,k,lambda) design, b=.., r=.., symmetric=true|false"
std::string describe(DesignParams const &p);

IncidenceStructure complement(IncidenceStructure const &s);

/// Orbit of `base` under g, blocks in sorted order.
IncidenceStructure develop(PermGroup const &g, Block base);

/// Induced permutation of block indices, or the index of a block whose image is not a block.
struct BlockAction
{
  std::vector<std::size_t> images;
  std::optional<std::size_t> witness;

  explicit operator bool() const
  { return !witness.has_value(); }
};

BlockAction induced_block_action(IncidenceStructure const &s, Permutation const &p);

bool is_automorphism(IncidenceStructure const &s, Permutation const &p);

/// Throws ErrorCode::not_an_automorphism if some generator does not preserve the blocks.
bool is_flag_transitive(IncidenceStructure const &s, PermGroup const &g);

/// Size of the orbit of the flag (first point of block 0, block 0).
std::size_t flag_orbit_size(IncidenceStructure const &s, PermGroup const &g);

/// Throws ErrorCode::invalid_argument if g is not transitive.
bool is_point_primitive(IncidenceStructure const &s, PermGroup const &g);

/// Apply a point relabeling to every block.
IncidenceStructure relabel(IncidenceStructure const &s, Permutation const &p);

} // namespace ftd

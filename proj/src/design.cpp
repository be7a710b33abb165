#include "ftdesign/design.hpp"

#include <algorithm>
#include <set>

#include "ftdesign/error.hpp"

namespace ftd
{

std::size_t IncidenceStructure::BlockKeyHash::operator()(Block const &b) const
{
  std::size_t h = 1469598103934665603ull;
  for (Point p : b) {
    h ^= p + 1;
    h *= 1099511628211ull;
  }
  return h;
}

IncidenceStructure::IncidenceStructure(std::size_t v, std::vector<Block> blocks)
: _v(v), _blocks(std::move(blocks))
{
  if (v > max_degree)
    fail(ErrorCode::invalid_argument, "too many points");
  for (std::size_t i = 0; i < _blocks.size(); ++i) {
    auto &blk = _blocks[i];
    if (blk.empty())
      fail(ErrorCode::invalid_argument, "block " + std::to_string(i + 1) + " is empty");
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      fail(ErrorCode::invalid_argument, "block " + std::to_string(i + 1) + " repeats a point");
    if (blk.back() >= v)
      fail(ErrorCode::invalid_argument, "block " + std::to_string(i + 1) + " has a point outside 1.." +
                                        std::to_string(v));
    _index[blk].push_back(i);
  }
}

std::vector<std::size_t> const *IncidenceStructure::find(Block const &block) const
{
  auto it = _index.find(block);
  return it == _index.end() ? nullptr : &it->second;
}

bool operator==(IncidenceStructure const &a, IncidenceStructure const &b)
{
  if (a._v != b._v || a._blocks.size() != b._blocks.size())
    return false;
  auto x = a._blocks;
  auto y = b._blocks;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

DesignReport verify_design(IncidenceStructure const &s)
{
  DesignReport report;
  auto const v = s.v();

  if (v < 2) {
    report.violation = "fewer than two points";
    return report;
  }
  if (s.b() == 0) {
    report.violation = "no blocks";
    return report;
  }

  std::size_t const k = s.block(0).size();
  for (std::size_t i = 0; i < s.b(); ++i) {
    if (s.block(i).size() != k) {
      report.violation = "block size not constant: block " + std::to_string(i + 1) + " has " +
                         std::to_string(s.block(i).size()) + " points, block 1 has " +
                         std::to_string(k);
      return report;
    }
  }
  if (k < 2) {
    report.violation = "block size " + std::to_string(k) + " is below 2";
    return report;
  }

  std::vector<std::size_t> replication(v, 0);
  std::vector<std::size_t> pairs(v * v, 0);
  for (auto const &blk : s.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) {
      ++replication[blk[i]];
      for (std::size_t j = i + 1; j < blk.size(); ++j)
        ++pairs[blk[i] * v + blk[j]];
    }
  }

  std::size_t const r = replication[0];
  for (Point p = 1; p < v; ++p) {
    if (replication[p] != r) {
      report.violation = "replication not constant: point " + std::to_string(p + 1) + " lies in " +
                         std::to_string(replication[p]) + " blocks, point 1 in " +
                         std::to_string(r);
      return report;
    }
  }

  std::size_t const lambda = pairs[0 * v + 1];
  for (Point x = 0; x < v; ++x) {
    for (Point y = x + 1; y < v; ++y) {
      if (pairs[x * v + y] != lambda) {
        report.violation = "pair count not constant: points {" + std::to_string(x + 1) + "," +
                           std::to_string(y + 1) + "} lie in " +
                           std::to_string(pairs[x * v + y]) + " blocks, {1,2} in " +
                           std::to_string(lambda);
        return report;
      }
    }
  }
  if (lambda == 0) {
    report.violation = "pair count is zero: points {1,2} share no block";
    return report;
  }

  report.params = DesignParams{v, s.b(), k, r, lambda};
  return report;
}

std::string describe(DesignParams const &p)
{
  return "2-(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda) + ") design, b=" + std::to_string(p.b) +
         ", r=" + std::to_string(p.r) + ", symmetric=" + (p.symmetric() ? "true" : "false");
}

IncidenceStructure complement(IncidenceStructure const &s)
{
  std::vector<Block> blocks;
  blocks.reserve(s.b());
  for (std::size_t i = 0; i < s.b(); ++i) {
    std::vector<bool> in(s.v(), false);
    for (Point p : s.block(i))
      in[p] = true;
    Block c;
    for (Point p = 0; p < s.v(); ++p) {
      if (!in[p])
        c.push_back(p);
    }
    if (c.size() < 2)
      fail(ErrorCode::invalid_argument, "complement of block " + std::to_string(i + 1) +
                                        " has fewer than two points");
    blocks.push_back(std::move(c));
  }
  return IncidenceStructure(s.v(), std::move(blocks));
}

IncidenceStructure develop(PermGroup const &g, Block base)
{
  if (base.empty())
    fail(ErrorCode::invalid_argument, "base block is empty");
  std::sort(base.begin(), base.end());
  for (Point p : base) {
    if (p >= g.degree())
      fail(ErrorCode::invalid_argument, "base block point out of range");
  }

  std::set<Block> seen{base};
  std::vector<Block> queue{base};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const &x : g.generators()) {
      auto img = image_of_set(queue[i], x);
      if (seen.insert(img).second)
        queue.push_back(std::move(img));
    }
  }
  return IncidenceStructure(g.degree(), {seen.begin(), seen.end()});
}

BlockAction induced_block_action(IncidenceStructure const &s, Permutation const &p)
{
  if (p.degree() != s.v())
    fail(ErrorCode::invalid_argument, "permutation degree differs from point count");

  BlockAction action;
  action.images.resize(s.b());
  std::unordered_map<Block const *, std::size_t> used;
  for (std::size_t i = 0; i < s.b(); ++i) {
    auto img = image_of_set(s.block(i), p);
    auto const *ids = s.find(img);
    if (ids == nullptr) {
      action.witness = i;
      return action;
    }
    auto &next = used[&s.block(ids->front())];
    if (next >= ids->size()) {
      action.witness = i;
      return action;
    }
    action.images[i] = (*ids)[next++];
  }
  return action;
}

bool is_automorphism(IncidenceStructure const &s, Permutation const &p)
{ return static_cast<bool>(induced_block_action(s, p)); }

std::size_t flag_orbit_size(IncidenceStructure const &s, PermGroup const &g)
{
  if (s.b() == 0)
    return 0;

  std::vector<BlockAction> actions;
  for (auto const &x : g.generators()) {
    auto act = induced_block_action(s, x);
    if (!act)
      fail(ErrorCode::not_an_automorphism,
           "generator " + x.to_cycles() + " maps block " + std::to_string(*act.witness + 1) +
           " outside the block set");
    actions.push_back(std::move(act));
  }

  auto const v = s.v();
  std::vector<bool> seen(s.b() * v, false);
  std::vector<std::pair<Point, std::size_t>> queue{{s.block(0).front(), 0}};
  seen[s.block(0).front()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [p, blk] = queue[i];
    for (std::size_t gi = 0; gi < actions.size(); ++gi) {
      Point q = g.generators()[gi][p];
      std::size_t c = actions[gi].images[blk];
      if (!seen[c * v + q]) {
        seen[c * v + q] = true;
        queue.emplace_back(q, c);
      }
    }
  }
  return queue.size();
}

bool is_flag_transitive(IncidenceStructure const &s, PermGroup const &g)
{
  std::size_t flags = 0;
  for (auto const &blk : s.blocks())
    flags += blk.size();
  return flag_orbit_size(s, g) == flags;
}

bool is_point_primitive(IncidenceStructure const &s, PermGroup const &g)
{
  if (g.degree() != s.v())
    fail(ErrorCode::invalid_argument, "group degree differs from point count");
  return minimal_block_systems(g).empty();
}

IncidenceStructure relabel(IncidenceStructure const &s, Permutation const &p)
{
  std::vector<Block> blocks;
  blocks.reserve(s.b());
  for (auto const &blk : s.blocks())
    blocks.push_back(image_of_set(blk, p));
  return IncidenceStructure(s.v(), std::move(blocks));
}

} // namespace ftd

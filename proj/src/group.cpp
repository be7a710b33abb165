#include "ftdesign/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ftdesign/error.hpp"

namespace ftd
{

BlockSystem BlockSystem::from_classes(std::vector<std::vector<Point>> classes, std::size_t degree)
{
  BlockSystem sys;
  for (auto &c : classes)
    std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());

  sys.class_of.assign(degree, degree);
  std::size_t size = classes.empty() ? 0 : classes.front().size();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].size() != size || size == 0)
      fail(ErrorCode::invalid_argument, "block system classes differ in size");
    for (Point p : classes[i]) {
      if (p >= degree || sys.class_of[p] != degree)
        fail(ErrorCode::invalid_argument, "block system classes overlap or leave the point range");
      sys.class_of[p] = i;
    }
  }
  if (size * classes.size() != degree)
    fail(ErrorCode::invalid_argument, "block system does not cover every point");
  sys.classes = std::move(classes);
  return sys;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::span<Point const> base_prefix)
: _degree(degree), _generators(std::move(generators))
{
  for (auto const &g : _generators) {
    if (g.degree() != degree)
      fail(ErrorCode::invalid_argument, "generator degree " + std::to_string(g.degree()) +
                                        " differs from group degree " + std::to_string(degree));
  }
  for (Point b : base_prefix) {
    if (b >= degree)
      fail(ErrorCode::invalid_argument, "base point out of range");
    Level level;
    level.base = b;
    _chain.push_back(std::move(level));
  }
  schreier_sims();
}

void PermGroup::rebuild_orbit(Level &level) const
{
  level.orbit.assign(1, level.base);
  level.index.assign(_degree, -1);
  level.index[level.base] = 0;
  level.transversal.assign(1, Permutation::identity(_degree));

  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point x = level.orbit[i];
    for (auto const &s : level.gens) {
      Point y = s[x];
      if (level.index[y] >= 0)
        continue;
      level.index[y] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(level.transversal[i] * s);
    }
  }

  level.inverse_transversal.clear();
  level.inverse_transversal.reserve(level.transversal.size());
  for (auto const &u : level.transversal)
    level.inverse_transversal.push_back(u.inverse());
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation h, std::size_t from) const
{
  for (std::size_t l = from; l < _chain.size(); ++l) {
    auto const &level = _chain[l];
    int idx = level.index[h[level.base]];
    if (idx < 0)
      return {std::move(h), l};
    h *= level.inverse_transversal[static_cast<std::size_t>(idx)];
  }
  return {std::move(h), _chain.size()};
}

void PermGroup::schreier_sims()
{
  std::vector<Permutation> strong;
  for (auto const &g : _generators) {
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end())
      strong.push_back(g);
  }

  auto fixes_base = [&](Permutation const &s, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l) {
      if (s[_chain[l].base] != _chain[l].base)
        return false;
    }
    return true;
  };

  for (auto const &s : strong) {
    if (fixes_base(s, _chain.size())) {
      Level level;
      level.base = s.first_moved();
      _chain.push_back(std::move(level));
    }
  }

  for (std::size_t l = 0; l < _chain.size(); ++l) {
    for (auto const &s : strong) {
      if (fixes_base(s, l))
        _chain[l].gens.push_back(s);
    }
    rebuild_orbit(_chain[l]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(_chain.size()) - 1;
  while (i >= 0) {
    auto li = static_cast<std::size_t>(i);
    bool extended = false;

    for (std::size_t pos = 0; pos < _chain[li].orbit.size() && !extended; ++pos) {
      for (std::size_t gi = 0; gi < _chain[li].gens.size(); ++gi) {
        auto const &level = _chain[li];
        auto const &s = level.gens[gi];
        Point img = s[level.orbit[pos]];
        auto target = static_cast<std::size_t>(level.index[img]);

        Permutation h = level.transversal[pos] * s;
        if (h == level.transversal[target])
          continue;
        h *= level.inverse_transversal[target];

        auto [residue, depth] = strip(std::move(h), li + 1);
        if (depth == _chain.size() && residue.is_identity())
          continue;

        if (depth == _chain.size()) {
          Level level_new;
          level_new.base = residue.first_moved();
          _chain.push_back(std::move(level_new));
        }
        for (std::size_t l = li + 1; l <= depth; ++l) {
          _chain[l].gens.push_back(residue);
          rebuild_orbit(_chain[l]);
        }
        i = static_cast<std::ptrdiff_t>(depth);
        extended = true;
        break;
      }
    }

    if (!extended)
      --i;
  }
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> out;
  for (auto const &level : _chain)
    out.push_back(level.base);
  return out;
}

BigInt PermGroup::order() const
{
  BigInt n = 1;
  for (auto const &level : _chain)
    n *= level.orbit.size();
  return n;
}

bool PermGroup::contains(Permutation const &p) const
{
  if (p.degree() != _degree)
    return false;
  auto [residue, depth] = strip(p, 0);
  return depth == _chain.size() && residue.is_identity();
}

bool PermGroup::is_transitive() const
{ return _degree == 0 || orbit(*this, 0).size() == _degree; }

void PermGroup::for_each_element(std::function<bool(Permutation const &)> const &visit) const
{
  // Every element is u_{k-1} ... u_1 u_0 with u_l from the level-l transversal.
  std::function<bool(std::size_t, Permutation const &)> rec =
    [&](std::size_t l, Permutation const &suffix) -> bool {
      if (l == _chain.size())
        return visit(suffix);
      for (auto const &u : _chain[l].transversal) {
        if (!rec(l + 1, u * suffix))
          return false;
      }
      return true;
    };
  rec(0, Permutation::identity(_degree));
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::size_t depth) const
{
  if (depth < _chain.size())
    return _chain[depth].gens;
  return {};
}

PermGroup group_from_generators(std::vector<Permutation> gens)
{
  if (gens.empty())
    fail(ErrorCode::invalid_argument, "generator list is empty");
  std::size_t degree = gens.front().degree();
  return PermGroup(degree, std::move(gens));
}

std::vector<Point> orbit_of(std::span<Permutation const> gens, Point p, std::size_t degree)
{
  std::vector<bool> seen(degree, false);
  std::vector<Point> out{p};
  seen[p] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto const &g : gens) {
      Point q = g[out[i]];
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> orbit(PermGroup const &g, Point p)
{
  if (p >= g.degree())
    fail(ErrorCode::invalid_argument, "point out of range");
  return orbit_of(g.generators(), p, g.degree());
}

std::vector<std::vector<Point>> orbits(PermGroup const &g)
{
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(g.degree(), false);
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p])
      continue;
    auto o = orbit(g, p);
    for (Point q : o)
      seen[q] = true;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<std::size_t> rank_and_subdegrees(PermGroup const &g)
{
  if (!g.is_transitive())
    fail(ErrorCode::invalid_argument, "subdegrees need a transitive group");
  auto stab = point_stabilizer(g, 0);
  std::vector<std::size_t> lengths;
  for (auto const &o : orbits(stab))
    lengths.push_back(o.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

namespace
{

struct UnionFind
{
  explicit UnionFind(std::size_t n)
  : parent(n)
  { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }

  std::vector<std::size_t> parent;
};

std::vector<std::vector<Point>> set_orbit(std::span<Permutation const> gens,
                                          std::vector<Point> const &start)
{
  std::set<std::vector<Point>> seen{start};
  std::vector<std::vector<Point>> out{start};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto const &g : gens) {
      auto img = image_of_set(out[i], g);
      if (seen.insert(img).second)
        out.push_back(std::move(img));
    }
  }
  return out;
}

} // namespace

std::vector<Point> minimal_block(PermGroup const &g, Point a, Point b)
{
  UnionFind uf(g.degree());
  std::deque<std::pair<Point, Point>> queue;
  if (uf.unite(a, b))
    queue.emplace_back(a, b);

  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (auto const &s : g.generators()) {
      if (uf.unite(s[x], s[y]))
        queue.emplace_back(s[x], s[y]);
    }
  }

  std::vector<Point> block;
  auto root = uf.find(a);
  for (Point p = 0; p < g.degree(); ++p) {
    if (uf.find(p) == root)
      block.push_back(p);
  }
  return block;
}

std::vector<BlockSystem> minimal_block_systems(PermGroup const &g)
{
  if (!g.is_transitive())
    fail(ErrorCode::invalid_argument, "block systems need a transitive group");

  std::set<std::vector<Point>> candidates;
  for (Point q = 1; q < g.degree(); ++q) {
    auto block = minimal_block(g, 0, q);
    if (block.size() < g.degree())
      candidates.insert(std::move(block));
  }

  std::vector<BlockSystem> out;
  for (auto const &block : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](auto const &other) {
      return other.size() < block.size() &&
             std::includes(block.begin(), block.end(), other.begin(), other.end());
    });
    if (minimal)
      out.push_back(BlockSystem::from_classes(set_orbit(g.generators(), block), g.degree()));
  }
  return out;
}

PermGroup point_stabilizer(PermGroup const &g, Point p)
{
  if (p >= g.degree())
    fail(ErrorCode::invalid_argument, "point out of range");
  Point prefix[] = {p};
  PermGroup rebased(g.degree(), g.generators(), prefix);
  return PermGroup(g.degree(), rebased.stabilizer_generators(1));
}

PermGroup set_stabilizer(PermGroup const &g, std::span<Point const> s)
{
  std::vector<Point> set(s.begin(), s.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (Point p : set) {
    if (p >= g.degree())
      fail(ErrorCode::invalid_argument, "point out of range");
  }

  std::vector<bool> in_set(g.degree(), false);
  for (Point p : set)
    in_set[p] = true;

  PermGroup rebased(g.degree(), g.generators(), set);
  auto const &chain = rebased.chain();
  std::size_t const depth = set.size();

  // Below the prefix every element fixes s pointwise.
  std::vector<Permutation> found = rebased.stabilizer_generators(depth);

  // Search for one element of G^(l) stabilizing s with suffix product P.
  std::function<bool(std::size_t, Permutation const &, Permutation &)> search =
    [&](std::size_t j, Permutation const &suffix, Permutation &out) -> bool {
      if (j == depth) {
        out = suffix;
        return true;
      }
      auto const &level = chain[j];
      for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
        if (!in_set[suffix[level.orbit[pos]]])
          continue;
        if (search(j + 1, level.transversal[pos] * suffix, out))
          return true;
      }
      return false;
    };

  for (std::size_t l = depth; l-- > 0;) {
    auto const &level = chain[l];
    auto reached = orbit_of(found, level.base, g.degree());
    std::vector<bool> in_orbit(g.degree(), false);
    for (Point p : reached)
      in_orbit[p] = true;

    std::vector<Point> candidates = level.orbit;
    std::sort(candidates.begin(), candidates.end());
    for (Point gamma : candidates) {
      if (!in_set[gamma] || in_orbit[gamma])
        continue;
      Permutation element;
      auto const &u = level.transversal[static_cast<std::size_t>(level.index[gamma])];
      if (!search(l + 1, u, element))
        continue;
      found.push_back(element);
      for (Point p : orbit_of(found, level.base, g.degree()))
        in_orbit[p] = true;
    }
  }

  return PermGroup(g.degree(), std::move(found));
}

bool is_regular(PermGroup const &g)
{ return g.is_transitive() && g.order() == g.degree(); }

bool is_block_system_invariant(PermGroup const &g, BlockSystem const &sigma)
{
  for (auto const &x : g.generators()) {
    for (auto const &cls : sigma.classes) {
      auto img = image_of_set(cls, x);
      auto const &target = sigma.classes[sigma.class_of[img.front()]];
      if (img != target)
        return false;
    }
  }
  return true;
}

} // namespace ftd

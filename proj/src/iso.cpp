#include "ftdesign/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

#include "ftdesign/error.hpp"

namespace ftd
{

namespace
{

std::uint64_t mix(std::uint64_t h, std::uint64_t x)
{
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

/// Incidence graph: vertices 0..v-1 are points, v.. are the distinct blocks.
struct IncidenceGraph
{
  std::size_t v = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::size_t> multiplicity;

  explicit IncidenceGraph(IncidenceStructure const &s)
  : v(s.v())
  {
    std::map<Block, std::size_t> distinct;
    for (auto const &blk : s.blocks())
      ++distinct[blk];
    adj.resize(v + distinct.size());
    int id = static_cast<int>(v);
    for (auto const &[blk, count] : distinct) {
      multiplicity.push_back(count);
      for (Point p : blk) {
        adj[id].push_back(static_cast<int>(p));
        adj[p].push_back(id);
      }
      ++id;
    }
  }

  std::size_t size() const
  { return adj.size(); }

  std::vector<std::size_t> multiplicity_profile() const
  {
    auto m = multiplicity;
    std::sort(m.begin(), m.end());
    return m;
  }
};

/// Ordered partition; a cell is identified by its first position.
struct Partition
{
  std::vector<int> elem;
  std::vector<int> pos;
  std::vector<int> cell;
  std::vector<int> end;
  std::size_t cells = 0;
  std::uint64_t hash = 0;

  int size(int c) const
  { return end[c] - c; }
};

class Refiner
{
public:
  explicit Refiner(IncidenceGraph const &g)
  : _g(g), _count(g.size(), 0), _queued(g.size(), 0)
  {}

  Partition initial()
  {
    auto const n = _g.size();
    Partition p;
    p.elem.resize(n);
    p.pos.resize(n);
    p.cell.resize(n);
    p.end.assign(n, 0);

    // points first, then blocks grouped by ascending multiplicity
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i)
      order[i] = static_cast<int>(i);
    auto key = [&](int x) -> std::size_t {
      return x < static_cast<int>(_g.v) ? 0 : _g.multiplicity[x - _g.v];
    };
    std::stable_sort(order.begin() + static_cast<long>(_g.v), order.end(),
                     [&](int a, int b) { return key(a) < key(b); });

    std::vector<int> starts;
    for (std::size_t i = 0; i < n; ++i) {
      p.elem[i] = order[i];
      p.pos[order[i]] = static_cast<int>(i);
      bool const fresh = i == 0 || i == _g.v || (i > _g.v && key(order[i]) != key(order[i - 1]));
      if (fresh)
        starts.push_back(static_cast<int>(i));
      p.cell[order[i]] = starts.back();
    }
    for (std::size_t c = 0; c < starts.size(); ++c) {
      p.end[starts[c]] = c + 1 < starts.size() ? starts[c + 1] : static_cast<int>(n);
      p.hash = mix(p.hash, static_cast<std::uint64_t>(p.size(starts[c])));
    }
    p.cells = starts.size();
    refine(p, starts);
    return p;
  }

  /// Split {x} off its cell and refine.
  void individualize(Partition &p, int x)
  {
    int const c = p.cell[x];
    p.hash = mix(p.hash, static_cast<std::uint64_t>(c) << 1 | 1);
    if (p.size(c) == 1)
      return;
    int const other = p.elem[c];
    std::swap(p.elem[c], p.elem[p.pos[x]]);
    std::swap(p.pos[x], p.pos[other]);
    int const rest = c + 1;
    p.end[rest] = p.end[c];
    p.end[c] = rest;
    for (int i = rest; i < p.end[rest]; ++i)
      p.cell[p.elem[i]] = rest;
    ++p.cells;
    refine(p, {c});
  }

private:
  void refine(Partition &p, std::vector<int> const &seed)
  {
    std::deque<int> queue;
    for (int c : seed) {
      queue.push_back(c);
      _queued[c] = 1;
    }
    std::vector<int> touched;
    std::vector<int> touched_cells;
    std::vector<std::pair<int, int>> scratch;

    while (!queue.empty()) {
      int const w = queue.front();
      queue.pop_front();
      _queued[w] = 0;

      touched.clear();
      for (int i = w; i < p.end[w]; ++i) {
        for (int u : _g.adj[p.elem[i]]) {
          if (_count[u]++ == 0)
            touched.push_back(u);
        }
      }
      touched_cells.clear();
      for (int u : touched)
        touched_cells.push_back(p.cell[u]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());

      for (int c : touched_cells) {
        int const e = p.end[c];
        scratch.clear();
        for (int i = c; i < e; ++i)
          scratch.emplace_back(_count[p.elem[i]], p.elem[i]);
        std::sort(scratch.begin(), scratch.end());
        if (scratch.front().first == scratch.back().first) {
          p.hash = mix(p.hash, static_cast<std::uint64_t>(scratch.front().first));
          continue;
        }
        p.hash = mix(p.hash, static_cast<std::uint64_t>(w) << 32 | static_cast<std::uint64_t>(c));
        bool const was_queued = _queued[c] != 0;
        int start = c;
        for (std::size_t j = 0; j < scratch.size(); ++j) {
          int const i = c + static_cast<int>(j);
          p.elem[i] = scratch[j].second;
          p.pos[scratch[j].second] = i;
          p.cell[scratch[j].second] = start;
          bool const last = j + 1 == scratch.size() || scratch[j + 1].first != scratch[j].first;
          if (last) {
            p.end[start] = i + 1;
            p.hash = mix(p.hash, static_cast<std::uint64_t>(scratch[j].first) << 32 |
                                 static_cast<std::uint64_t>(i + 1 - start));
            if (start != c || !was_queued) {
              if (!_queued[start]) {
                queue.push_back(start);
                _queued[start] = 1;
              }
            }
            if (start != c)
              ++p.cells;
            start = i + 1;
          }
        }
      }
      for (int u : touched)
        _count[u] = 0;
    }
    p.hash = mix(p.hash, p.cells);
  }

  IncidenceGraph const &_g;
  std::vector<int> _count;
  std::vector<char> _queued;
};

/// Smallest non-singleton point cell, lowest position on ties; -1 when points are discrete.
int target_cell(Partition const &p, std::size_t v)
{
  int best = -1;
  for (int c = 0; c < static_cast<int>(v); c = p.end[c]) {
    if (p.size(c) > 1 && (best < 0 || p.size(c) < p.size(best)))
      best = c;
  }
  return best;
}

std::vector<int> cell_members(Partition const &p, int c)
{
  std::vector<int> out(p.elem.begin() + c, p.elem.begin() + p.end[c]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Point map sending leaf `from` onto leaf `to` position by position.
Permutation leaf_map(Partition const &from, Partition const &to, std::size_t v)
{
  std::vector<Point> images(v);
  for (std::size_t i = 0; i < v; ++i)
    images[static_cast<std::size_t>(from.elem[i])] = static_cast<Point>(to.elem[i]);
  return Permutation(images);
}

struct FirstPath
{
  std::vector<Partition> nodes;
  std::vector<int> targets;
  std::vector<int> chosen;
  Partition leaf;
};

FirstPath first_path(Refiner &refiner, std::size_t v)
{
  FirstPath path;
  auto p = refiner.initial();
  for (int t = target_cell(p, v); t >= 0; t = target_cell(p, v)) {
    path.nodes.push_back(p);
    path.targets.push_back(t);
    int const x = cell_members(p, t).front();
    path.chosen.push_back(x);
    refiner.individualize(p, x);
  }
  path.nodes.push_back(p);
  path.leaf = p;
  return path;
}

class Budget
{
public:
  explicit Budget(std::size_t limit)
  : _limit(limit)
  {}

  void tick()
  {
    if (_limit != 0 && ++_nodes > _limit)
      fail(ErrorCode::budget_exhausted,
           "search exceeded the node limit of " + std::to_string(_limit));
  }

private:
  std::size_t _limit;
  std::size_t _nodes = 0;
};

/// Children of a node to explore: smallest vertex of each orbit of gens on the cell.
std::vector<int> orbit_representatives(std::vector<int> const &members,
                                       std::vector<Permutation> const &gens, std::size_t v)
{
  if (gens.empty())
    return members;
  std::vector<char> seen(v, 0);
  std::vector<int> reps;
  for (int x : members) {
    if (seen[x])
      continue;
    reps.push_back(x);
    for (Point y : orbit_of(gens, static_cast<Point>(x), v))
      seen[y] = 1;
  }
  return reps;
}

class AutomorphismSearch
{
public:
  AutomorphismSearch(IncidenceStructure const &s, SearchOptions const &options)
  : _s(s), _graph(s), _refiner(_graph), _budget(options.node_limit)
  {}

  std::vector<Permutation> run()
  {
    auto const v = _s.v();
    _path = first_path(_refiner, v);
    auto const depth = _path.targets.size();

    for (std::size_t d = depth; d-- > 0;) {
      int const beta = _path.chosen[d];
      std::vector<int> tried{beta};
      for (int gamma : cell_members(_path.nodes[d], _path.targets[d])) {
        if (gamma == beta)
          continue;
        auto const orb = orbit_of(_gens, static_cast<Point>(gamma), v);
        bool redundant = false;
        for (int t : tried)
          redundant = redundant || std::binary_search(orb.begin(), orb.end(), static_cast<Point>(t));
        if (redundant)
          continue;
        tried.push_back(gamma);

        _stack.assign(_path.chosen.begin(), _path.chosen.begin() + static_cast<long>(d));
        auto p = _path.nodes[d];
        if (auto found = descend(p, gamma, d))
          _gens.push_back(*found);
      }
    }
    return _gens;
  }

private:
  std::optional<Permutation> descend(Partition p, int x, std::size_t depth)
  {
    _budget.tick();
    _refiner.individualize(p, x);
    if (p.hash != _path.nodes[depth + 1].hash)
      return std::nullopt;
    _stack.push_back(x);
    auto result = explore(p, depth + 1);
    _stack.pop_back();
    return result;
  }

  std::optional<Permutation> explore(Partition const &p, std::size_t depth)
  {
    auto const v = _s.v();
    int const t = target_cell(p, v);
    if (t < 0) {
      auto candidate = leaf_map(_path.leaf, p, v);
      if (is_automorphism(_s, candidate))
        return candidate;
      return std::nullopt;
    }
    std::vector<Permutation> fixing;
    for (auto const &g : _gens) {
      bool fixes = true;
      for (int x : _stack)
        fixes = fixes && g[static_cast<Point>(x)] == static_cast<Point>(x);
      if (fixes)
        fixing.push_back(g);
    }
    for (int c : orbit_representatives(cell_members(p, t), fixing, v)) {
      if (auto found = descend(p, c, depth))
        return found;
    }
    return std::nullopt;
  }

  IncidenceStructure const &_s;
  IncidenceGraph _graph;
  Refiner _refiner;
  Budget _budget;
  FirstPath _path;
  std::vector<Permutation> _gens;
  std::vector<int> _stack;
};

class IsomorphismSearch
{
public:
  IsomorphismSearch(IncidenceStructure const &s1, IncidenceStructure const &s2, PermGroup const &aut2,
                    SearchOptions const &options)
  : _s1(s1), _s2(s2), _g1(s1), _g2(s2), _r1(_g1), _r2(_g2), _budget(options.node_limit)
  {
    _levels.push_back(aut2);
  }

  std::optional<Permutation> run()
  {
    if (_s1.v() != _s2.v() || _s1.b() != _s2.b() ||
        _g1.multiplicity_profile() != _g2.multiplicity_profile())
      return std::nullopt;
    _path = first_path(_r1, _s1.v());
    auto root = _r2.initial();
    if (root.hash != _path.nodes[0].hash)
      return std::nullopt;
    return explore(root, 0);
  }

private:
  std::optional<Permutation> explore(Partition const &p, std::size_t depth)
  {
    auto const v = _s2.v();
    int const t = target_cell(p, v);
    if (t < 0) {
      auto candidate = leaf_map(_path.leaf, p, v);
      if (is_isomorphism(_s1, _s2, candidate))
        return candidate;
      return std::nullopt;
    }
    auto const stab = _levels[depth].generators();
    for (int c : orbit_representatives(cell_members(p, t), stab, v)) {
      _budget.tick();
      auto child = p;
      _r2.individualize(child, c);
      if (child.hash != _path.nodes[depth + 1].hash)
        continue;
      Point const base[] = {static_cast<Point>(c)};
      PermGroup rebased(v, stab, base);
      _levels.erase(_levels.begin() + static_cast<long>(depth) + 1, _levels.end());
      _levels.emplace_back(v, rebased.stabilizer_generators(1));
      if (auto found = explore(child, depth + 1))
        return found;
    }
    return std::nullopt;
  }

  IncidenceStructure const &_s1, &_s2;
  IncidenceGraph _g1, _g2;
  Refiner _r1, _r2;
  Budget _budget;
  FirstPath _path;
  std::vector<PermGroup> _levels;
};

} // namespace

PermGroup automorphism_group(IncidenceStructure const &s, SearchOptions const &options)
{
  if (s.v() > 100)
    fail(ErrorCode::invalid_argument, "automorphism search supports at most 100 points");
  if (s.v() == 0)
    fail(ErrorCode::invalid_argument, "empty point set");
  AutomorphismSearch search(s, options);
  return PermGroup(s.v(), search.run());
}

std::optional<Permutation> are_isomorphic(IncidenceStructure const &s1, IncidenceStructure const &s2,
                                          PermGroup const &aut2, SearchOptions const &options)
{
  if (s1.v() != s2.v() || s1.b() != s2.b())
    return std::nullopt;
  if (s1.v() == 0)
    fail(ErrorCode::invalid_argument, "empty point set");
  IsomorphismSearch search(s1, s2, aut2, options);
  return search.run();
}

std::optional<Permutation> are_isomorphic(IncidenceStructure const &s1, IncidenceStructure const &s2,
                                          SearchOptions const &options)
{
  if (s1.v() != s2.v() || s1.b() != s2.b())
    return std::nullopt;
  return are_isomorphic(s1, s2, automorphism_group(s2, options), options);
}

bool is_isomorphism(IncidenceStructure const &s1, IncidenceStructure const &s2, Permutation const &p)
{
  if (s1.v() != s2.v() || p.degree() != s1.v())
    return false;
  return relabel(s1, p) == s2;
}

} // namespace ftd

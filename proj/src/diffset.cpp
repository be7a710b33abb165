#include "ftdesign/diffset.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "ftdesign/error.hpp"

namespace ftd
{

namespace
{

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

bool fixed_point_free(Permutation const &p)
{ return p.fixed_points() == 0; }

/// Smallest prime factor and whether n is a power of it.
std::pair<unsigned, bool> prime_power(std::size_t n)
{
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    while (n % p == 0)
      n /= p;
    return {static_cast<unsigned>(p), n == 1};
  }
  return {static_cast<unsigned>(n), true};
}

std::vector<Permutation> all_elements(PermGroup const &g)
{
  std::vector<Permutation> out;
  g.for_each_element([&](Permutation const &x) {
    out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Permutation power(Permutation const &x, std::uint64_t e)
{
  auto result = Permutation::identity(x.degree());
  auto base = x;
  for (; e > 0; e >>= 1) {
    if (e & 1)
      result *= base;
    base = base * base;
  }
  return result;
}

/// x^m where m strips the part of the order prime to p.
Permutation p_part(Permutation const &x, unsigned p)
{
  auto order = x.order();
  while (order % p == 0)
    order /= p;
  return power(x, order);
}

bool normalizes(PermGroup const &h, Permutation const &y)
{
  auto const yi = y.inverse();
  for (auto const &g : h.generators()) {
    if (!h.contains(yi * g * y))
      return false;
  }
  return true;
}

bool is_power_of(BigInt n, unsigned p)
{
  while (n > 1 && n % p == 0)
    n /= p;
  return n == 1;
}

class SubgroupSearch
{
public:
  SubgroupSearch(std::size_t degree, std::vector<Permutation> pool, std::optional<unsigned> prime,
                 std::size_t limit, std::size_t budget)
  : _n(degree), _pool(std::move(pool)), _prime(prime), _limit(limit), _budget(budget)
  {}

  RegularSearch run()
  {
    std::vector<Permutation> identity{Permutation::identity(_n)};
    try {
      if (_prime)
        extend_p(identity, _pool, {});
      else
        extend(identity, {});
    } catch (Exhausted const &) {
      _result.budget_exhausted = true;
    }
    return std::move(_result);
  }

private:
  struct Exhausted
  {};

  bool done() const
  { return _result.found.size() >= _limit; }

  void tick()
  {
    if (++_result.nodes > _budget)
      throw Exhausted{};
  }

  void record(std::vector<Permutation> const &gens)
  { _result.found.push_back(make_regular_action(PermGroup(_n, gens))); }

  void extend(std::vector<Permutation> const &h, std::vector<Permutation> const &gens)
  {
    if (h.size() == _n) {
      record(gens);
      return;
    }
    ElementSet members(h.begin(), h.end());
    for (auto const &x : _pool) {
      if (done())
        return;
      if (members.count(x))
        continue;
      tick();
      auto next = closure(h, x);
      if (!next || !_visited.insert(*next).second)
        continue;
      auto next_gens = gens;
      next_gens.push_back(x);
      extend(*next, next_gens);
    }
  }

  /// A p-group has a chief series, so a regular p-subgroup R is reached through subgroups
  /// H, normal in R, growing by index p. `admissible` holds the elements y outside H that
  /// normalize H with Hy fixed-point-free; R minus H lies inside it.
  void extend_p(std::vector<Permutation> const &h, std::vector<Permutation> const &admissible,
                std::vector<Permutation> const &gens)
  {
    if (h.size() == _n) {
      record(gens);
      return;
    }
    if (h.size() + admissible.size() < _n)
      return;
    unsigned const p = *_prime;
    ElementSet const members(h.begin(), h.end());
    ElementSet covered;
    for (auto const &x : admissible) {
      if (done())
        return;
      if (covered.count(x))
        continue;
      for (auto const &g : h)
        covered.insert(g * x);
      tick();
      if (!members.count(power(x, p)))
        continue;

      // cosets H x^i, i = 1 .. p-1
      std::vector<Permutation> next = h;
      std::vector<Permutation> powers;
      auto xi = Permutation::identity(_n);
      bool free = true;
      for (unsigned i = 1; i < p && free; ++i) {
        xi *= x;
        powers.push_back(xi);
        for (auto const &g : h) {
          auto y = g * xi;
          free = free && fixed_point_free(y);
          next.push_back(std::move(y));
        }
      }
      if (!free)
        continue;
      std::sort(next.begin(), next.end());
      if (!_visited.insert(next).second)
        continue;

      ElementSet const next_members(next.begin(), next.end());
      std::vector<Permutation> next_admissible;
      for (auto const &y : admissible) {
        if (next_members.count(y) || !next_members.count(y.inverse() * x * y))
          continue;
        bool ok = true;
        for (std::size_t i = 0; i < powers.size() && ok; ++i) {
          for (auto const &g : h) {
            if (!fixed_point_free(g * powers[i] * y)) {
              ok = false;
              break;
            }
          }
        }
        if (ok)
          next_admissible.push_back(y);
      }
      auto next_gens = gens;
      next_gens.push_back(x);
      extend_p(next, next_admissible, next_gens);
    }
  }

  /// Closure of H and x, abandoned once it outgrows n or fixes a point.
  std::optional<std::vector<Permutation>> closure(std::vector<Permutation> const &h,
                                                  Permutation const &x) const
  {
    std::vector<Permutation> gens;
    for (auto const &g : h) {
      if (!g.is_identity())
        gens.push_back(g);
    }
    gens.push_back(x);
    ElementSet seen{Permutation::identity(_n)};
    std::vector<Permutation> out{Permutation::identity(_n)};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto const &s : gens) {
        auto y = out[i] * s;
        if (seen.count(y))
          continue;
        if (!fixed_point_free(y) || out.size() >= _n)
          return std::nullopt;
        seen.insert(y);
        out.push_back(std::move(y));
      }
    }
    if (_n % out.size() != 0)
      return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t _n;
  std::vector<Permutation> _pool;
  std::optional<unsigned> _prime;
  std::size_t _limit, _budget;
  std::set<std::vector<Permutation>> _visited;
  RegularSearch _result;
};

constexpr std::size_t enumeration_limit = 1u << 18;

} // namespace

RegularAction make_regular_action(PermGroup const &g, Point base)
{
  auto const n = g.degree();
  if (base >= n)
    fail(ErrorCode::invalid_argument, "base point out of range");
  if (!is_regular(g))
    fail(ErrorCode::invalid_argument, "group does not act regularly");

  RegularAction r{g, base, std::vector<Permutation>(n)};
  std::vector<char> known(n, 0);
  std::vector<Point> queue{base};
  r.element_of[base] = Permutation::identity(n);
  known[base] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Point const p = queue[i];
    for (auto const &s : g.generators()) {
      Point const q = s[p];
      if (known[q])
        continue;
      known[q] = 1;
      r.element_of[q] = r.element_of[p] * s;
      queue.push_back(q);
    }
  }
  return r;
}

DifferenceReport is_difference_set(RegularAction const &r, std::vector<Point> const &d, std::size_t lambda)
{
  auto const n = r.degree();
  DifferenceReport report;
  report.counts.assign(n, 0);
  std::vector<Permutation> inverses;
  for (Point p : d) {
    if (p >= n)
      fail(ErrorCode::invalid_argument, "point " + std::to_string(p + 1) + " out of range");
    inverses.push_back(r.element_of[p].inverse());
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto const &di = r.element_of[d[i]];
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i != j)
        ++report.counts[(di * inverses[j])[r.base]];
    }
  }
  for (Point p = 0; p < n; ++p) {
    if (p != r.base && report.counts[p] != lambda) {
      report.deviant = p;
      break;
    }
  }
  report.is_difference_set = !report.deviant;
  return report;
}

IncidenceStructure develop_difference_set(RegularAction const &r, std::vector<Point> const &d)
{
  if (d.empty())
    fail(ErrorCode::invalid_argument, "empty base set");
  std::vector<Block> blocks;
  blocks.reserve(r.degree());
  for (auto const &g : r.element_of)
    blocks.push_back(image_of_set(d, g));
  return IncidenceStructure(r.degree(), std::move(blocks));
}

PermGroup sylow_subgroup(PermGroup const &g, unsigned p)
{
  auto const n = g.degree();
  BigInt target = 1;
  for (BigInt order = g.order(); order % p == 0; order /= p)
    target *= p;

  PermGroup sylow = PermGroup::trivial(n);
  auto try_add = [&](Permutation const &x) {
    auto y = p_part(x, p);
    if (y.is_identity() || sylow.contains(y) || !normalizes(sylow, y))
      return;
    auto gens = sylow.generators();
    gens.push_back(y);
    PermGroup bigger(n, std::move(gens));
    if (is_power_of(bigger.order(), p))
      sylow = std::move(bigger);
  };

  if (g.order() <= enumeration_limit) {
    auto const elements = all_elements(g);
    // repeated passes: a p-element normalizing a non-Sylow p-subgroup always exists
    for (bool changed = true; changed && sylow.order() < target;) {
      auto const before = sylow.order();
      for (auto const &x : elements) {
        try_add(x);
        if (sylow.order() == target)
          break;
      }
      changed = sylow.order() != before;
    }
    return sylow;
  }

  std::mt19937_64 rng(0x5eed);
  auto random_element = [&]() {
    auto x = Permutation::identity(n);
    for (auto const &level : g.chain()) {
      std::uniform_int_distribution<std::size_t> pick(0, level.transversal.size() - 1);
      x = level.transversal[pick(rng)] * x;
    }
    return x;
  };
  for (int attempt = 0; attempt < 20000 && sylow.order() < target; ++attempt)
    try_add(random_element());
  return sylow;
}

RegularSearch find_regular_subgroups(PermGroup const &g, std::size_t limit, std::size_t budget)
{
  auto const n = g.degree();
  if (!g.is_transitive())
    fail(ErrorCode::invalid_argument, "group is not transitive");
  if (limit == 0 || budget == 0)
    fail(ErrorCode::invalid_argument, "limit and budget must be positive");

  auto const [p, is_prime_power] = prime_power(n);
  std::optional<unsigned> prime;
  PermGroup const *space = &g;
  PermGroup sylow = PermGroup::trivial(n);
  if (n > 1 && is_prime_power) {
    sylow = sylow_subgroup(g, p);
    space = &sylow;
    prime = p;
  }
  if (space->order() > enumeration_limit)
    fail(ErrorCode::budget_exhausted, "search space of order " + space->order().str() +
                                      " is too large to enumerate");

  std::vector<Permutation> pool;
  space->for_each_element([&](Permutation const &x) {
    if (fixed_point_free(x) && n % x.order() == 0)
      pool.push_back(x);
    return true;
  });
  std::sort(pool.begin(), pool.end());

  if (n == 1) {
    RegularSearch trivial;
    trivial.found.push_back(make_regular_action(PermGroup::trivial(1)));
    return trivial;
  }
  return SubgroupSearch(n, std::move(pool), prime, limit, budget).run();
}

} // namespace ftd

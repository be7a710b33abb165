#include "oracles.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace oracle
{

PairCount pair_count(ftd::IncidenceStructure const &s)
{
  PairCount out;
  out.v = s.v();
  out.b = s.b();
  if (s.b() == 0 || s.v() < 2)
    return out;

  std::vector<std::vector<std::size_t>> together(s.v(), std::vector<std::size_t>(s.v(), 0));
  std::vector<std::size_t> replication(s.v(), 0);
  std::vector<std::size_t> sizes;
  for (auto const &blk : s.blocks()) {
    sizes.push_back(blk.size());
    for (auto p : blk) {
      ++replication[p];
      for (auto q : blk)
        ++together[p][q];
    }
  }

  bool ok = std::all_of(sizes.begin(), sizes.end(), [&](std::size_t k) { return k == sizes[0]; });
  ok = ok && std::all_of(replication.begin(), replication.end(), [&](std::size_t r) { return r == replication[0]; });
  std::size_t const lambda = together[0][1];
  for (std::size_t p = 0; p < s.v(); ++p) {
    for (std::size_t q = 0; q < s.v(); ++q) {
      if (p != q && together[p][q] != lambda)
        ok = false;
    }
  }
  // a 2-design here also needs 2 <= k < v and lambda > 0
  ok = ok && sizes[0] >= 2 && sizes[0] < s.v() && lambda > 0;
  out.is_design = ok;
  out.k = sizes[0];
  out.r = replication[0];
  out.lambda = lambda;
  return out;
}

std::optional<std::size_t> closure_size(std::vector<ftd::Permutation> const &gens, std::size_t degree,
                                        std::size_t cap)
{
  std::unordered_set<ftd::Permutation, ftd::PermutationHash> seen;
  std::vector<ftd::Permutation> frontier{ftd::Permutation::identity(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<ftd::Permutation> next;
    for (auto const &x : frontier) {
      for (auto const &g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::vector<ftd::Permutation> closure_elements(std::vector<ftd::Permutation> const &gens, std::size_t degree)
{
  std::unordered_set<ftd::Permutation, ftd::PermutationHash> seen;
  std::vector<ftd::Permutation> all{ftd::Permutation::identity(degree)};
  seen.insert(all.front());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto const &g : gens) {
      auto y = all[i] * g;
      if (seen.insert(y).second)
        all.push_back(std::move(y));
    }
  }
  return all;
}

namespace
{

std::vector<std::uint32_t> masks(ftd::IncidenceStructure const &s)
{
  std::vector<std::uint32_t> out;
  for (auto const &blk : s.blocks()) {
    std::uint32_t m = 0;
    for (auto p : blk)
      m |= 1u << p;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

bool exhaustive_isomorphic(ftd::IncidenceStructure const &a, ftd::IncidenceStructure const &b)
{
  if (a.v() > 10)
    throw std::invalid_argument("exhaustive isomorphism needs v <= 10");
  if (a.v() != b.v() || a.b() != b.b())
    return false;
  auto const ma = masks(a);
  auto const target = masks(b);
  std::vector<unsigned> image(a.v());
  std::iota(image.begin(), image.end(), 0u);
  std::vector<std::uint32_t> mapped(ma.size());
  do {
    for (std::size_t i = 0; i < ma.size(); ++i) {
      std::uint32_t m = 0;
      for (unsigned p = 0; p < a.v(); ++p) {
        if (ma[i] >> p & 1u)
          m |= 1u << image[p];
      }
      mapped[i] = m;
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target)
      return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

std::uint64_t gl_order(unsigned n, unsigned q)
{
  // prod_{i=0}^{n-1} (q^n - q^i)
  std::uint64_t qn = 1;
  for (unsigned i = 0; i < n; ++i)
    qn *= q;
  std::uint64_t order = 1, qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

Fraction fraction(long long a, long long b)
{
  auto const g = std::gcd(a, b);
  return {a / g, b / g};
}

ftd::Permutation random_permutation(std::size_t degree, std::mt19937_64 &rng)
{
  std::vector<ftd::Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return ftd::Permutation(images);
}

ftd::IncidenceStructure random_structure(std::size_t v, std::size_t b, std::size_t k, std::mt19937_64 &rng)
{
  std::vector<ftd::Point> points(v);
  std::iota(points.begin(), points.end(), 0u);
  std::vector<ftd::Block> blocks;
  for (std::size_t i = 0; i < b; ++i) {
    std::shuffle(points.begin(), points.end(), rng);
    ftd::Block blk(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(blk.begin(), blk.end());
    blocks.push_back(std::move(blk));
  }
  return ftd::IncidenceStructure(v, std::move(blocks));
}

namespace
{

ftd::IncidenceStructure perturbed(ftd::IncidenceStructure const &s)
{
  auto blocks = s.blocks();
  auto &blk = blocks.front();
  for (ftd::Point p = 0; p < s.v(); ++p) {
    if (!std::binary_search(blk.begin(), blk.end(), p)) {
      blk.back() = p;
      std::sort(blk.begin(), blk.end());
      break;
    }
  }
  return ftd::IncidenceStructure(s.v(), std::move(blocks));
}

} // namespace

std::vector<NamedDesign> small_design_corpus(std::size_t vmax)
{
  std::vector<NamedDesign> out;
  std::vector<ftd::CatalogEntry> entries;
  for (auto const &n : ftd::classical_names())
    entries.push_back(ftd::build_classical(n));
  for (auto &e : ftd::build_biplanes())
    entries.push_back(std::move(e));
  for (auto const &n : {"complete(4,2)", "complete(5,2)", "complete(7,3)", "complete(8,4)", "complete(10,3)"})
    entries.push_back(ftd::build_classical(n));

  for (auto const &e : entries) {
    if (e.design.v() > vmax)
      continue;
    out.push_back({e.name, e.design});
    out.push_back({e.name + " complement", ftd::complement(e.design)});
    out.push_back({e.name + " perturbed", perturbed(e.design)});
  }

  // two copies of the Fano plane: a 2-(7,3,2) design with repeated blocks
  auto const fano = ftd::build_classical("fano").design;
  auto doubled = fano.blocks();
  doubled.insert(doubled.end(), fano.blocks().begin(), fano.blocks().end());
  out.push_back({"fano twice", ftd::IncidenceStructure(7, doubled)});

  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 10; ++i) {
    std::size_t const v = 5 + rng() % 10;
    std::size_t const k = 2 + rng() % (v - 3);
    out.push_back({"random " + std::to_string(i), random_structure(v, v + rng() % 6, k, rng)});
  }
  return out;
}

std::vector<NamedGroup> group_corpus()
{
  using ftd::PermGroup;
  using ftd::parse_permutation;
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, std::size_t degree, std::vector<std::string> const &cycles) {
    std::vector<ftd::Permutation> gens;
    for (auto const &c : cycles)
      gens.push_back(parse_permutation(c, degree));
    out.push_back({std::move(name), PermGroup(degree, std::move(gens))});
  };
  add("S3", 3, {"(1,2)", "(1,2,3)"});
  add("S4", 4, {"(1,2)", "(1,2,3,4)"});
  add("S5", 5, {"(1,2)", "(1,2,3,4,5)"});
  add("A5", 5, {"(1,2,3)", "(1,2,3,4,5)"});
  add("C6", 6, {"(1,2,3,4,5,6)"});
  add("C3 twice", 6, {"(1,2,3)(4,5,6)"});
  add("D8 on 4", 4, {"(1,2,3,4)", "(1,3)"});
  add("S7", 7, {"(1,2)", "(1,2,3,4,5,6,7)"});
  add("M11", 11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"});

  for (auto const &n : ftd::classical_names()) {
    auto e = ftd::build_classical(n);
    if (e.group.order() <= 100000)
      out.push_back({n, std::move(e.group)});
  }
  out.push_back({"table 1 group", ftd::table1_group()});
  out.push_back({"S-(3) entry group", ftd::build_s_minus_3().group});

  std::mt19937_64 rng(7);
  for (int i = 0; i < 12; ++i) {
    std::size_t const degree = 4 + rng() % 5;
    out.push_back({"random " + std::to_string(i),
                   PermGroup(degree, {random_permutation(degree, rng), random_permutation(degree, rng)})});
  }
  return out;
}

std::string fnv1a_hex(std::string const &bytes)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace oracle

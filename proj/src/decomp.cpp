#include "ftdesign/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ftdesign/error.hpp"

namespace ftd
{

namespace
{

std::string block_name(std::size_t i)
{ return "block " + std::to_string(i + 1); }

std::string class_name(std::size_t c)
{ return "class " + std::to_string(c + 1); }

bool is_one_design(IncidenceStructure const &s)
{
  std::vector<std::size_t> r(s.v(), 0);
  for (auto const &blk : s.blocks()) {
    for (Point p : blk)
      ++r[p];
  }
  return std::all_of(r.begin(), r.end(), [&](std::size_t x) { return x == r.front() && x > 0; });
}

} // namespace

CZDecomposition decompose(IncidenceStructure const &s, PermGroup const &g, BlockSystem const &sigma)
{
  auto report = verify_design(s);
  if (!report)
    fail(ErrorCode::not_a_design, report.violation);
  if (g.degree() != s.v() || sigma.class_of.size() != s.v())
    fail(ErrorCode::invalid_argument, "group, partition and design disagree on the point count");
  if (sigma.class_count() < 2 || sigma.class_size() < 2)
    fail(ErrorCode::invalid_argument, "partition is trivial");
  if (!is_block_system_invariant(g, sigma))
    fail(ErrorCode::invalid_argument, "partition is not invariant under the group");
  if (!is_flag_transitive(s, g))
    fail(ErrorCode::invalid_argument, "group is not flag-transitive");

  CZDecomposition d;
  d.sigma = sigma;
  d.design = *report.params;
  d.v0 = sigma.class_size();
  d.v1 = sigma.class_count();

  auto const nclasses = sigma.class_count();

  // traces[c] = distinct nonempty traces on class c, with multiplicities
  std::vector<std::map<Block, std::size_t>> traces(nclasses);
  std::map<Block, std::size_t> footprints;
  for (std::size_t i = 0; i < s.b(); ++i) {
    std::vector<Block> split(nclasses);
    for (Point p : s.block(i))
      split[sigma.class_of[p]].push_back(p);

    Block footprint;
    for (std::size_t c = 0; c < nclasses; ++c) {
      auto const size = split[c].size();
      if (size == 0)
        continue;
      if (d.k0 == 0)
        d.k0 = size;
      if (size != d.k0)
        fail(ErrorCode::invalid_argument,
             block_name(i) + " meets " + class_name(c) + " in " + std::to_string(size) +
             " points, other traces have " + std::to_string(d.k0));
      footprint.push_back(static_cast<Point>(c));
      ++traces[c][split[c]];
    }
    ++footprints[footprint];
  }

  if (d.k0 < 2)
    fail(ErrorCode::invalid_argument, "blocks meet classes in single points");
  d.k1 = d.design.k / d.k0;

  d.trace_multiplicity = traces[0].begin()->second;
  for (std::size_t c = 0; c < nclasses; ++c) {
    for (auto const &[trace, count] : traces[c]) {
      if (count != d.trace_multiplicity)
        fail(ErrorCode::invalid_argument,
             "trace multiplicity on " + class_name(c) + " is " + std::to_string(count) +
             ", expected " + std::to_string(d.trace_multiplicity));
    }
  }

  d.mu = footprints.begin()->second;
  for (auto const &[fp, count] : footprints) {
    if (count != d.mu)
      fail(ErrorCode::invalid_argument, "footprint multiplicity " + std::to_string(count) +
                                        " differs from " + std::to_string(d.mu));
    if (fp.size() != d.k1)
      fail(ErrorCode::invalid_argument, "footprint size " + std::to_string(fp.size()) +
                                        " differs from k/k0 = " + std::to_string(d.k1));
  }

  // Traces on the image class under each generator are the images of the traces.
  for (auto const &x : g.generators()) {
    for (std::size_t c = 0; c < nclasses; ++c) {
      auto target = sigma.class_of[x[sigma.classes[c].front()]];
      std::set<Block> mapped;
      for (auto const &[trace, count] : traces[c])
        mapped.insert(image_of_set(trace, x));
      std::set<Block> expected;
      for (auto const &[trace, count] : traces[target])
        expected.insert(trace);
      if (mapped != expected)
        fail(ErrorCode::internal, "traces on " + class_name(c) + " do not map onto " +
                                  class_name(target) + " under " + x.to_cycles());
    }
  }

  auto const &delta = sigma.classes.front();
  std::vector<Point> local(s.v(), 0);
  for (std::size_t i = 0; i < delta.size(); ++i)
    local[delta[i]] = static_cast<Point>(i);
  std::vector<Block> d0_blocks;
  for (auto const &[trace, count] : traces[0]) {
    Block b;
    for (Point p : trace)
      b.push_back(local[p]);
    d0_blocks.push_back(std::move(b));
  }
  d.d0 = IncidenceStructure(d.v0, std::move(d0_blocks));

  std::vector<Block> d1_blocks;
  for (auto const &[fp, count] : footprints)
    d1_blocks.push_back(fp);
  d.d1 = IncidenceStructure(d.v1, std::move(d1_blocks));

  auto const v = d.design.v, k = d.design.k, lambda = d.design.lambda;

  if ((v - 1) * (d.k0 - 1) != (d.v0 - 1) * (k - 1))
    fail(ErrorCode::invalid_argument, "(v-1)(k0-1) = " + std::to_string((v - 1) * (d.k0 - 1)) +
                                      " but (v0-1)(k-1) = " + std::to_string((d.v0 - 1) * (k - 1)));
  if ((d.v1 - 1) * d.v0 * (d.k0 - 1) != (d.k1 - 1) * d.k0 * (d.v0 - 1))
    fail(ErrorCode::invalid_argument,
         "(v1-1)v0(k0-1) = " + std::to_string((d.v1 - 1) * d.v0 * (d.k0 - 1)) +
         " but (k1-1)k0(v0-1) = " + std::to_string((d.k1 - 1) * d.k0 * (d.v0 - 1)));
  if (d.design.b != d.d1.b() * d.mu)
    fail(ErrorCode::internal, "b differs from b1 * mu");

  if (auto r0 = verify_design(d.d0)) {
    d.d0_params = r0.params;
    d.lambda0 = r0.params->lambda;
    if (lambda % *d.lambda0 != 0)
      fail(ErrorCode::invalid_argument, "lambda0 = " + std::to_string(*d.lambda0) +
                                        " does not divide lambda = " + std::to_string(lambda));
    d.theta = lambda / *d.lambda0;
  }

  if (auto r1 = verify_design(d.d1)) {
    d.d1_params = r1.params;
    d.lambda1 = r1.params->lambda;
    if (lambda * d.v0 * d.v0 != *d.lambda1 * d.k0 * d.k0 * d.mu)
      fail(ErrorCode::invalid_argument,
           "lambda1 = " + std::to_string(*d.lambda1) + " differs from v0^2 lambda / (k0^2 mu)");
  }

  return d;
}

bool check_symmetric_consistency(CZDecomposition const &d, IncidenceStructure const &s)
{
  if (s.b() != d.d1.b() * d.mu)
    return false;
  bool const mu_symmetric = d.d1.b() * d.mu == s.v();
  return (s.v() == s.b()) == mu_symmetric;
}

std::optional<BoundsCase> bounds_case(CZDecomposition const &d)
{
  auto const v = d.design.v, k = d.design.k;
  std::optional<BoundsCase> found;
  int matches = 0;

  if (d.k0 == 2 && v == (d.v0 - 1) * (2 * d.k1 - 1) + 1) {
    found = BoundsCase::k0_is_two;
    ++matches;
  }
  if (d.k0 >= 3 && d.k0 + 2 <= d.v0 && d.d0_params) {
    found = BoundsCase::middle_with_2_design;
    ++matches;
  }
  if (d.k0 >= 3 && d.k0 + 1 == d.v0 && is_one_design(d.d0) && (v - 1) % (d.v0 - 1) == 0) {
    auto t = (v - 1) / (d.v0 - 1);
    if (t >= 2 && k == t * (d.v0 - 2) + 1) {
      found = BoundsCase::k0_is_v0_minus_1;
      ++matches;
    }
  }
  if (matches != 1)
    return std::nullopt;
  return found;
}

std::string format_row(CZDecomposition const &d)
{
  auto opt = [](std::optional<std::size_t> const &x) {
    return x ? std::to_string(*x) : std::string("-");
  };
  auto replication = [](IncidenceStructure const &s) {
    std::size_t r = 0;
    for (auto const &blk : s.blocks())
      r += blk.size();
    return s.v() == 0 ? 0 : r / s.v();
  };
  return std::to_string(d.v0) + " " + std::to_string(d.k0) + " " + opt(d.lambda0) + " " +
         std::to_string(replication(d.d0)) + " " + std::to_string(d.d0.b()) + " " + opt(d.theta) +
         " | " + std::to_string(d.v1) + " " + std::to_string(d.k1) + " " + opt(d.lambda1) + " " +
         std::to_string(replication(d.d1)) + " " + std::to_string(d.d1.b()) + " | " +
         std::to_string(d.mu);
}

} // namespace ftd

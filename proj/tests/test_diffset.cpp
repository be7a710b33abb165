#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ftdesign/catalog.hpp"
#include "ftdesign/design.hpp"
#include "ftdesign/diffset.hpp"
#include "ftdesign/error.hpp"
#include "ftdesign/iso.hpp"
#include "oracles.h"

using namespace ftd;

namespace
{

// Counts x - y over GF(2)^6 directly on the point integers, without the group.
std::vector<std::size_t> xor_differences(std::vector<Point> const &d)
{
  std::vector<std::size_t> count(64, 0);
  for (auto x : d) {
    for (auto y : d) {
      if (x != y)
        ++count[x ^ y];
    }
  }
  return count;
}

} // namespace

TEST_CASE("the elliptic quadric zero set is a (64,28,12) difference set")
{
  auto const d = elliptic_quadric_zeros();
  CHECK(d.size() == 28);
  auto const counts = xor_differences(d);
  for (std::size_t x = 1; x < 64; ++x)
    CHECK(counts[x] == 12);

  auto const r = make_regular_action(translation_group(6));
  auto const report = is_difference_set(r, d, 12);
  CHECK(report.is_difference_set);
  auto const dev = develop_difference_set(r, d);
  auto const p = verify_design(dev);
  REQUIRE(p);
  CHECK(*p.params == DesignParams{64, 64, 28, 28, 12});
}

TEST_CASE("the whole group counts every element k times")
{
  auto const r = make_regular_action(translation_group(3));
  std::vector<Point> all(8);
  std::iota(all.begin(), all.end(), 0u);
  auto const report = is_difference_set(r, all, 8);
  CHECK(report.is_difference_set);
  for (Point x = 1; x < 8; ++x)
    CHECK(report.counts[x] == 8);
  CHECK(is_difference_set(r, all, 7).is_difference_set == false);
}

TEST_CASE("a random 28-subset is not a difference set and the witness count is right")
{
  std::mt19937_64 rng(99);
  auto const r = make_regular_action(translation_group(6));
  std::vector<Point> pts(64);
  std::iota(pts.begin(), pts.end(), 0u);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Point> d(pts.begin(), pts.begin() + 28);
  std::sort(d.begin(), d.end());
  auto const report = is_difference_set(r, d, 12);
  REQUIRE(!report.is_difference_set);
  REQUIRE(report.deviant.has_value());
  auto const direct = xor_differences(d);
  // the translation carrying 0 to x is addition of x
  CHECK(report.counts[*report.deviant] == direct[*report.deviant]);
  CHECK(direct[*report.deviant] != 12);
}

TEST_CASE("a single point develops into a structure that is not a 2-design")
{
  auto const r = make_regular_action(translation_group(4));
  auto const dev = develop_difference_set(r, {0});
  CHECK(dev.b() == 16);
  CHECK(!verify_design(dev));
}

TEST_CASE("regular subgroups")
{
  auto const s3 = PermGroup(3, {parse_permutation("(1,2)", 3), parse_permutation("(1,2,3)", 3)});
  auto const found = find_regular_subgroups(s3, 5, 1000);
  REQUIRE(found.found.size() == 1);
  CHECK(found.found.front().group.order() == 3);

  auto const t = translation_group(6);
  auto const self = find_regular_subgroups(t, 1, 1000);
  REQUIRE(self.found.size() == 1);
  CHECK(self.found.front().group.order() == 64);
  for (auto const &x : t.generators())
    CHECK(self.found.front().group.contains(x));
}

TEST_CASE("Table 1 base blocks are difference sets in a regular subgroup of the group")
{
  auto const e = build_d64(1);
  auto const search = find_regular_subgroups(e.group, 1, 200000);
  REQUIRE(search.found.size() == 1);
  auto const &r = search.found.front();
  CHECK(is_regular(r.group));
  for (int h = 1; h <= 2; ++h) {
    auto const block = table1_base_block(h);
    CHECK(is_difference_set(r, block, 12).is_difference_set);
    auto const dev = develop_difference_set(r, block);
    CHECK(are_isomorphic(dev, build_d64(h).design).has_value());
    for (auto const &x : r.group.generators())
      CHECK(is_automorphism(dev, x));
  }
}

TEST_CASE("development is invariant under translating the base set")
{
  auto const r = make_regular_action(translation_group(6));
  auto const d = elliptic_quadric_zeros();
  auto const base = develop_difference_set(r, d);
  for (Point g : {1u, 17u, 63u}) {
    auto moved = image_of_set(d, r.element_of[g]);
    std::sort(moved.begin(), moved.end());
    CHECK(develop_difference_set(r, moved) == base);
  }
}

TEST_CASE("a tiny budget is reported, not hidden")
{
  auto const search = find_regular_subgroups(build_d64(1).group, 1, 3);
  CHECK(search.budget_exhausted);
  CHECK(search.found.empty());
}

TEST_CASE("non-regular groups are refused")
{
  CHECK_THROWS_AS(make_regular_action(build_d64(1).group), Error);
  CHECK_THROWS_AS(find_regular_subgroups(PermGroup(6, {parse_permutation("(1,2,3)(4,5,6)", 6)}), 1, 10), Error);
}

#include <doctest.h>

#include "ftdesign/catalog.hpp"
#include "ftdesign/design.hpp"
#include "ftdesign/error.hpp"
#include "ftdesign/geometry.hpp"
#include "oracles.h"

using namespace ftd;

namespace
{

DesignParams params_of(IncidenceStructure const &s)
{
  auto r = verify_design(s);
  REQUIRE(r);
  return *r.params;
}

PermGroup symmetric_group(std::size_t n)
{
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i)
    cycle += std::to_string(i) + (i < n ? "," : ")");
  return PermGroup(n, {parse_permutation("(1,2)", n), parse_permutation(cycle, n)});
}

} // namespace

TEST_CASE("verify_design examples")
{
  CHECK(params_of(build_classical("fano").design) == DesignParams{7, 7, 3, 3, 1});
  CHECK(params_of(build_d64(1).design) == DesignParams{64, 64, 28, 28, 12});
  CHECK(params_of(build_classical("complete(4,2)").design) == DesignParams{4, 6, 2, 3, 1});
  CHECK(describe({64, 64, 28, 28, 12}) == "2-(64,28,12) design, b=64, r=28, symmetric=true");
}

TEST_CASE("verify_design reports a witness")
{
  auto blocks = build_classical("fano").design.blocks();
  blocks[0] = {0, 1, 3};
  auto const r = verify_design(IncidenceStructure(7, blocks));
  CHECK(!r);
  CHECK(!r.violation.empty());
}

TEST_CASE("repeated blocks count with multiplicity")
{
  auto blocks = build_classical("fano").design.blocks();
  auto const copy = blocks;
  blocks.insert(blocks.end(), copy.begin(), copy.end());
  CHECK(params_of(IncidenceStructure(7, blocks)) == DesignParams{7, 14, 3, 6, 2});
}

TEST_CASE("complement")
{
  auto const pg5 = build_projective_design(5, 2, true).structure;
  CHECK(params_of(complement(pg5)) == DesignParams{63, 63, 32, 32, 16});
  auto const pg24 = build_projective_design(2, 4, false).structure;
  CHECK(params_of(complement(pg24)) == DesignParams{21, 21, 16, 16, 12});
  auto const fano = build_classical("fano").design;
  CHECK(complement(complement(fano)) == fano);
}

TEST_CASE("develop")
{
  CHECK(develop(table1_group(), table1_base_block(1)).b() == 64);
  CHECK(develop(PermGroup::trivial(4), {0, 1}).b() == 1);
  CHECK(develop(symmetric_group(4), {0, 1}).b() == 6);
}

TEST_CASE("induced block action")
{
  auto const complete = build_classical("complete(5,2)").design;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i)
    CHECK(induced_block_action(complete, oracle::random_permutation(5, rng)));

  auto const d1 = build_d64(1);
  CHECK(induced_block_action(d1.design, d1.group.generators().front()));

  auto const fano = build_classical("fano").design;
  auto const bad = induced_block_action(fano, parse_permutation("(1,2)", 7));
  REQUIRE(!bad);
  auto const &witness = fano.block(*bad.witness);
  auto img = image_of_set(witness, parse_permutation("(1,2)", 7));
  std::sort(img.begin(), img.end());
  CHECK(fano.find(img) == nullptr);
}

TEST_CASE("flag-transitivity")
{
  auto const d1 = build_d64(1);
  CHECK(is_flag_transitive(d1.design, d1.group));
  auto const fano = build_classical("fano");
  CHECK(fano.group.order() == 168);
  CHECK(is_flag_transitive(fano.design, fano.group));
  // some 7-cycle preserving the plane: find one in the full group
  Permutation cyc;
  fano.group.for_each_element([&](Permutation const &x) {
    if (x.order() == 7) {
      cyc = x;
      return false;
    }
    return true;
  });
  PermGroup const c7(7, {cyc});
  CHECK(flag_orbit_size(fano.design, c7) == 7);
  CHECK(!is_flag_transitive(fano.design, c7));
}

TEST_CASE("point-primitivity")
{
  auto const d1 = build_d64(1);
  CHECK(!is_point_primitive(d1.design, d1.group));
  auto const fano = build_classical("fano");
  CHECK(is_point_primitive(fano.design, fano.group));
  auto const k6 = build_classical("complete(6,3)");
  CHECK(params_of(k6.design) == DesignParams{6, 20, 3, 10, 4});
  CHECK(is_point_primitive(k6.design, k6.group));
}

TEST_CASE("verify_design agrees with pair counting")
{
  for (auto const &[name, s] : oracle::small_design_corpus(30)) {
    INFO(name);
    auto const mine = verify_design(s);
    auto const theirs = oracle::pair_count(s);
    REQUIRE(bool(mine) == theirs.is_design);
    if (mine) {
      CHECK(mine.params->k == theirs.k);
      CHECK(mine.params->r == theirs.r);
      CHECK(mine.params->lambda == theirs.lambda);
      CHECK(mine.params->b == theirs.b);
    }
  }
}

TEST_CASE("structures reject malformed blocks")
{
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 5}}), Error);
  CHECK_THROWS_AS(IncidenceStructure(3, {{}}), Error);
}

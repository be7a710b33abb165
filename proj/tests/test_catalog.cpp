#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ftdesign/catalog.hpp"
#include "ftdesign/decomp.hpp"
#include "ftdesign/enumerate.hpp"
#include "ftdesign/error.hpp"
#include "ftdesign/io.hpp"
#include "ftdesign/iso.hpp"
#include "oracles.h"

using namespace ftd;

namespace
{

// "g1 (..)..." and "B1 9,11,..." lines of the fixture file, keyed by their label.
std::vector<std::pair<std::string, std::string>> fixture_lines()
{
  std::istringstream in(oracle::read_file(FTD_DATA_DIR "/table1.txt"));
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    auto const space = line.find(' ');
    out.emplace_back(line.substr(0, space), line.substr(space + 1));
  }
  return out;
}

} // namespace

TEST_CASE("embedded Table 1 strings equal the fixture file")
{
  auto const lines = fixture_lines();
  REQUIRE(lines.size() == 11);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(lines[i].first == "g" + std::to_string(i + 1));
    CHECK(lines[i].second == table1::generators[i]);
  }
  CHECK(lines[9].first == "B1");
  CHECK(lines[9].second == table1::base_block_1);
  CHECK(lines[10].first == "B2");
  CHECK(lines[10].second == table1::base_block_2);
}

TEST_CASE("embedded Table 1 checksum is pinned")
{
  std::string joined;
  for (auto g : table1::generators)
    joined += std::string(g) + "\n";
  joined += std::string(table1::base_block_1) + "\n" + std::string(table1::base_block_2) + "\n";
  CHECK(oracle::fnv1a_hex(joined) == "792c915beb487213");
  CHECK(table1_checksum() == 0x792c915beb487213ULL);
}

TEST_CASE("base blocks have 28 points and are disjoint from each other")
{
  auto const b1 = table1_base_block(1), b2 = table1_base_block(2);
  CHECK(b1.size() == 28);
  CHECK(b2.size() == 28);
  std::vector<Point> common;
  std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(), std::back_inserter(common));
  CHECK(common.empty());
  CHECK_THROWS_AS(table1_base_block(3), Error);
}

TEST_CASE("D1 and D2")
{
  for (int h = 1; h <= 2; ++h) {
    auto const e = build_d64(h);
    auto const p = verify_design(e.design);
    REQUIRE(p);
    CHECK(*p.params == DesignParams{64, 64, 28, 28, 12});
    CHECK(e.group.order() == 43008);
    REQUIRE(e.system.has_value());
    CHECK(e.system->class_count() == 8);
    CHECK(run_claims(e).passed());
  }
  CHECK(!are_isomorphic(build_d64(1).design, build_d64(2).design));
}

TEST_CASE("S-(3)")
{
  auto const e = build_s_minus_3();
  CHECK(elliptic_quadric_zeros().size() == 28);
  auto const p = verify_design(e.design);
  REQUIRE(p);
  CHECK(*p.params == DesignParams{64, 64, 28, 28, 12});
  for (int h = 1; h <= 2; ++h)
    CHECK(!are_isomorphic(e.design, build_d64(h).design));
  CHECK(e.group.order() == 10752);
  CHECK(is_flag_transitive(e.design, e.group));
  CHECK(!is_point_primitive(e.design, e.group));
  auto const parabolic = s_minus_3_parabolic_group();
  CHECK(parabolic.order() == 688128);
  CHECK(is_flag_transitive(e.design, parabolic));
  CHECK(run_claims(e).passed());
}

TEST_CASE("classical entries")
{
  auto const fano = build_classical("fano");
  CHECK(*verify_design(fano.design).params == DesignParams{7, 7, 3, 3, 1});
  CHECK(fano.group.order() == 168);
  CHECK(is_flag_transitive(fano.design, fano.group));
  CHECK(*verify_design(build_classical("pg5_2_complement").design).params == DesignParams{63, 63, 32, 32, 16});
  CHECK(*verify_design(build_classical("complete(6,3)").design).params == DesignParams{6, 20, 3, 10, 4});
  CHECK_THROWS_AS(build_classical("pg7_2"), Error);
  CHECK_THROWS_AS(build_classical("complete(3,3)"), Error);
}

TEST_CASE("every catalog entry passes its claims")
{
  for (auto const &name : catalog_names()) {
    auto const report = run_claims(build_entry(name));
    INFO(report.to_text());
    CHECK(report.passed());
    CHECK(!report.results.empty());
  }
}

TEST_CASE("a corrupted entry fails its claims with a witness")
{
  auto e = build_classical("fano");
  auto blocks = e.design.blocks();
  blocks[0] = {0, 1, 3};
  e.design = IncidenceStructure(7, blocks);
  auto const report = run_claims(e);
  CHECK(!report.passed());
  REQUIRE(!report.results.empty());
  CHECK(!report.results.front().passed);
  CHECK(!report.results.front().detail.empty());
}

TEST_CASE("the three 2-(64,28,12) designs are pairwise non-isomorphic")
{
  std::vector<IncidenceStructure> const d = {build_d64(1).design, build_d64(2).design, build_s_minus_3().design};
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j)
      CHECK(!are_isomorphic(d[i], d[j]));
  }
}

TEST_CASE("imprimitive catalog decompositions land on Table 5 rows")
{
  auto const table5 = parse_symmetric_csv(oracle::read_file(FTD_TABLES_DIR "/table5.csv"));
  for (auto const &name : {"d64-1", "d64-2", "s-minus-3", "pg3_2_complement", "pg5_2_complement"}) {
    auto const e = build_entry(name);
    REQUIRE(e.system.has_value());
    auto const d = decompose(e.design, e.group, *e.system);
    bool const found = std::any_of(table5.begin(), table5.end(), [&](SymmetricRow const &r) {
      return r.v0 == static_cast<long long>(d.v0) && r.k0 == static_cast<long long>(d.k0) &&
             r.v1 == static_cast<long long>(d.v1) && r.k1 == static_cast<long long>(d.k1) &&
             r.mu == static_cast<long long>(d.mu) && r.lambda1 == static_cast<long long>(d.lambda1.value_or(0)) &&
             r.lambda0 == static_cast<long long>(d.lambda0.value_or(0));
    });
    INFO(name);
    CHECK(found);
  }
}

TEST_CASE("biplanes")
{
  auto const all = build_biplanes();
  REQUIRE(all.size() == 2);
  CHECK(!are_isomorphic(all[0].design, all[1].design));
  for (auto const &e : all) {
    CHECK(*verify_design(e.design).params == DesignParams{16, 16, 6, 6, 2});
    CHECK(is_flag_transitive(e.design, e.group));
  }
}

TEST_CASE("external parameter claims")
{
  auto const d = build_d64(1).design;
  auto const wrong = check_external_design(d, "45-12-3");
  CHECK(!wrong.passed());
  CHECK_THROWS_AS(check_external_design(d, "1-2-3"), Error);
  CHECK(external_claim_names().size() == 2);
}

TEST_CASE("design JSON round trip")
{
  auto const d = build_classical("ag2_3").design;
  auto const text = design_to_json(d);
  CHECK(design_from_json(text) == d);
  CHECK(text.rfind("{\"v\":9,\"blocks\":[[", 0) == 0);
  CHECK_THROWS_AS(design_from_json("{\"v\":3}"), Error);
  CHECK_THROWS_AS(design_from_json("{\"v\":3,\"blocks\":[[0]]}"), Error);
  CHECK_THROWS_AS(design_from_json("not json"), Error);
}

TEST_CASE("generator files round trip")
{
  auto const g = table1_group();
  auto const text = format_generators(64, g.generators());
  auto const back = parse_generators(text);
  CHECK(back == g.generators());
  CHECK(parse_generators("# comment\ndegree 3\n\n(1,2)\n").size() == 1);
  CHECK_THROWS_AS(parse_generators("(1,2)"), Error);
  CHECK(parse_point_set("{1, 2,3}", 5) == std::vector<Point>{0, 1, 2});
  CHECK_THROWS_AS(parse_point_set("1,1", 5), Error);
  CHECK_THROWS_AS(parse_point_set("6", 5), Error);
}

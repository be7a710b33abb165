// Acceptance run: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--known-failures 6,...]
// Exit status is 0 when the failing criteria are exactly the listed known ones.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "ftdesign/catalog.hpp"
#include "ftdesign/decomp.hpp"
#include "ftdesign/diffset.hpp"
#include "ftdesign/enumerate.hpp"
#include "ftdesign/iso.hpp"
#include "oracles.h"

using namespace ftd;

namespace
{

struct Outcome
{
  bool passed = true;
  std::string note;

  void require(bool condition, std::string const &what)
  {
    if (!condition) {
      note += (note.empty() ? "" : "; ") + what;
      passed = false;
    }
  }
};

std::set<int> failed;

void criterion(int number, char const *title, double limit_seconds, std::function<void(Outcome &)> const &body)
{
  Outcome o;
  auto const start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (std::exception const &e) {
    o.passed = false;
    o.note = std::string("exception: ") + e.what();
  }
  double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limit_seconds)
    o.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  if (!o.passed)
    failed.insert(number);
  std::cout << "criterion " << number << ": " << (o.passed ? "PASS" : "FAIL") << "  " << title << "  ["
            << std::fixed;
  std::cout.precision(3);
  std::cout << seconds << " s / " << limit_seconds << " s]";
  if (!o.note.empty())
    std::cout << "  " << o.note;
  std::cout << std::endl;
}

bool is_complete(IncidenceStructure const &s, std::size_t k)
{
  // every k-subset exactly once
  std::set<Block> seen(s.blocks().begin(), s.blocks().end());
  std::size_t expected = 1;
  for (std::size_t i = 0; i < k; ++i)
    expected = expected * (s.v() - i) / (i + 1);
  return seen.size() == s.b() && s.b() == expected &&
         std::all_of(s.blocks().begin(), s.blocks().end(), [&](Block const &b) { return b.size() == k; });
}

std::vector<ParamRow> golden(int table)
{
  return parse_param_csv(oracle::read_file(FTD_TABLES_DIR "/table" + std::to_string(table) + ".csv"), table);
}

template <class Row, class Same>
std::size_t unmatched(std::vector<Row> const &a, std::vector<Row> const &b, Same same)
{
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](Row const &r) {
    return std::none_of(b.begin(), b.end(), [&](Row const &s) { return same(r, s); });
  }));
}

std::vector<Point> random_subset(std::size_t v, std::size_t k, std::mt19937_64 &rng)
{
  std::vector<Point> pts(v);
  std::iota(pts.begin(), pts.end(), 0u);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Point> out(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

int main(int argc, char **argv)
{
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string const arg = argv[i];
    if (arg == "--known-failures" && i + 1 < argc) {
      std::istringstream in(argv[++i]);
      std::string item;
      while (std::getline(in, item, ','))
        known.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--known-failures n,m,...]\n";
      return 2;
    }
  }

  criterion(1, "group of Table 1 has order 43008", 5, [](Outcome &o) {
    auto const g = table1_group();
    o.require(g.order() == 43008, "order " + g.order().str());
  });

  criterion(2, "D1, D2: symmetric 2-(64,28,12), flag-transitive, 8x8 system, subdegrees 1,7,56", 10, [](Outcome &o) {
    auto const g = table1_group();
    o.require(rank_and_subdegrees(g) == std::vector<std::size_t>{1, 7, 56}, "subdegrees");
    auto const systems = minimal_block_systems(g);
    o.require(std::any_of(systems.begin(), systems.end(),
                          [](BlockSystem const &s) { return s.class_count() == 8 && s.class_size() == 8; }),
              "no 8x8 block system");
    for (int h = 1; h <= 2; ++h) {
      auto const d = develop(g, table1_base_block(h));
      auto const p = verify_design(d);
      o.require(p && *p.params == DesignParams{64, 64, 28, 28, 12}, "D" + std::to_string(h) + " parameters");
      o.require(is_flag_transitive(d, g), "D" + std::to_string(h) + " flag-transitivity");
      o.require(!is_point_primitive(d, g), "D" + std::to_string(h) + " primitivity");
    }
  });

  criterion(3, "Aut(D1), Aut(D2) have order 43008; D1 and D2 not isomorphic", 120, [](Outcome &o) {
    std::vector<PermGroup> auts;
    for (int h = 1; h <= 2; ++h) {
      auto const start = std::chrono::steady_clock::now();
      auto const d = build_d64(h).design;
      auts.push_back(automorphism_group(d));
      o.require(auts.back().order() == 43008, "|Aut(D" + std::to_string(h) + ")| = " + auts.back().order().str());
      if (h == 2)
        o.require(!are_isomorphic(build_d64(1).design, d, auts.back()), "found an isomorphism");
      double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      o.require(seconds < 60, "D" + std::to_string(h) + " took " + std::to_string(seconds) + " s");
    }
  });

  criterion(4, "S-(3): quadric difference set, 2-(64,28,12), |Aut| = 92897280, distinct from D1, D2", 300, [](Outcome &o) {
    auto const zeros = elliptic_quadric_zeros();
    auto const r = make_regular_action(translation_group(6));
    auto const report = is_difference_set(r, zeros, 12);
    std::size_t twelve = 0;
    for (std::size_t x = 1; x < 64; ++x)
      twelve += report.counts[x] == 12;
    o.require(report.is_difference_set && twelve == 63, "difference counts");
    auto const d = develop_difference_set(r, zeros);
    auto const p = verify_design(d);
    o.require(p && *p.params == DesignParams{64, 64, 28, 28, 12}, "parameters");
    auto const aut = automorphism_group(d);
    o.require(aut.order() == 92897280, "order " + aut.order().str());
    for (int h = 1; h <= 2; ++h)
      o.require(!are_isomorphic(build_d64(h).design, d, aut), "isomorphic to D" + std::to_string(h));
  });

  criterion(5, "decomposition of D1, D2: k0=4, k1=7, mu=8, D1 complete 2-(8,7,6)", 5, [](Outcome &o) {
    for (int h = 1; h <= 2; ++h) {
      auto const e = build_d64(h);
      auto const d = decompose(e.design, e.group, *e.system);
      long long const v = 64, k = 28, lambda = 12;
      long long const v0 = static_cast<long long>(d.v0), v1 = static_cast<long long>(d.v1);
      long long const k0 = static_cast<long long>(d.k0), k1 = static_cast<long long>(d.k1);
      long long const mu = static_cast<long long>(d.mu);
      o.require(k0 == 4 && k1 == 7 && mu == 8, "k0, k1, mu");
      o.require(is_complete(d.d1, 7) && d.d1.v() == 8, "quotient is not the complete 2-(8,7,6)");
      o.require(oracle::pair_count(d.d1).lambda == 6, "quotient lambda");
      o.require((v - 1) * (k0 - 1) == (v0 - 1) * (k - 1), "rel1");
      o.require((v1 - 1) * v0 * (k0 - 1) == (k1 - 1) * k0 * (v0 - 1), "rel2");
      o.require(d.lambda1 && static_cast<long long>(*d.lambda1) * k0 * k0 * mu == v0 * v0 * lambda &&
                  *d.lambda1 == 6,
                "lambda1 = v0^2 lambda / (k0^2 mu)");
      o.require(static_cast<long long>(d.d1.b()) * mu == 64, "b = b1 mu");
    }
  });

  criterion(6, "enumeration reproduces Tables 2, 3, 4 and the 16 rows of Table 5", 1, [](Outcome &o) {
    auto const k2 = enumerate_k0_eq_2();
    auto const kv = enumerate_k0_eq_v0_minus_1();
    auto const mid = enumerate_middle_k0();
    std::vector<ParamRow> ours = k2;
    ours.insert(ours.end(), kv.begin(), kv.end());
    ours.insert(ours.end(), mid.begin(), mid.end());
    std::vector<ParamRow> theirs;
    for (int t = 2; t <= 4; ++t) {
      auto const rows = golden(t);
      theirs.insert(theirs.end(), rows.begin(), rows.end());
    }
    auto const same = [](ParamRow const &a, ParamRow const &b) { return same_numbers(a, b); };
    auto const extra = unmatched(ours, theirs, same), absent = unmatched(theirs, ours, same);
    o.require(theirs.size() == 33 + 32 + 12, "fixture has " + std::to_string(theirs.size()) + " rows");
    o.require(extra == 0 && absent == 0, "Tables 2-4: " + std::to_string(extra) + " rows not printed, " +
                                           std::to_string(absent) + " printed rows not enumerated");

    auto const sym = symmetric_filter(enumerate_all());
    auto const table5 = parse_symmetric_csv(oracle::read_file(FTD_TABLES_DIR "/table5.csv"));
    auto const same5 = [](SymmetricRow const &a, SymmetricRow const &b) { return a.same_numbers(b); };
    auto const extra5 = unmatched(sym, table5, same5), absent5 = unmatched(table5, sym, same5);
    o.require(sym.size() == 16 && extra5 == 0 && absent5 == 0,
              "Table 5: " + std::to_string(sym.size()) + " symmetric rows, " + std::to_string(extra5) +
                " not printed, " + std::to_string(absent5) + " printed rows missing");
  });

  criterion(7, "every classical catalog entry passes its claims", 120, [](Outcome &o) {
    auto names = classical_names();
    for (auto const &n : names) {
      auto const report = run_claims(build_classical(n));
      o.require(report.passed(), n + " failed:\n" + report.to_text());
    }
    for (auto const &[n, v, k, l] : {std::tuple{"fano", 7u, 3u, 1u}, {"ag3_2_planes", 8u, 4u, 3u},
                                     {"ag2_4_lines", 16u, 4u, 1u}, {"pg5_2_complement", 63u, 32u, 16u}}) {
      auto const e = build_classical(n);
      auto const p = verify_design(e.design);
      o.require(p && p.params->v == v && p.params->k == k && p.params->lambda == l, std::string(n) + " parameters");
      o.require(is_flag_transitive(e.design, e.group), std::string(n) + " flag-transitivity");
    }
  });

  criterion(8, "a regular subgroup of Aut(D1) carries B1 as a (64,28,12) difference set developing to D1", 300,
            [](Outcome &o) {
              auto const d1 = build_d64(1).design;
              auto const aut = automorphism_group(d1);
              auto const search = find_regular_subgroups(aut, 1, 1000000);
              o.require(!search.found.empty(), "none found in " + std::to_string(search.nodes) + " nodes");
              for (auto const &r : search.found) {
                auto const b1 = table1_base_block(1);
                o.require(is_difference_set(r, b1, 12).is_difference_set, "B1 is not a difference set");
                o.require(are_isomorphic(develop_difference_set(r, b1), d1).has_value(), "development is not D1");
              }
            });

  criterion(9, "oracle suites: pair counts, exhaustive group orders, exhaustive isomorphism", 120, [](Outcome &o) {
    std::size_t designs = 0, groups = 0, iso = 0;
    for (auto const &[name, s] : oracle::small_design_corpus(30)) {
      auto const mine = verify_design(s);
      auto const theirs = oracle::pair_count(s);
      bool agree = bool(mine) == theirs.is_design;
      if (agree && mine)
        agree = mine.params->k == theirs.k && mine.params->r == theirs.r && mine.params->lambda == theirs.lambda;
      o.require(agree, "verify_design disagrees on " + name);
      ++designs;
    }
    for (auto const &[name, g] : oracle::group_corpus()) {
      auto const n = oracle::closure_size(g.generators(), g.degree(), 100000);
      o.require(n && g.order() == *n, "order disagrees on " + name);
      ++groups;
    }
    std::mt19937_64 rng(2718);
    for (auto const &[name, s] : oracle::small_design_corpus(10)) {
      if (s.v() > 10 || (s.v() == 10 && s.b() > 30))
        continue;
      auto const relabelled = relabel(s, oracle::random_permutation(s.v(), rng));
      auto const random = oracle::random_structure(s.v(), s.b(), s.block(0).size(), rng);
      for (auto const &t : {relabelled, random}) {
        o.require(are_isomorphic(s, t).has_value() == oracle::exhaustive_isomorphic(s, t),
                  "isomorphism disagrees on " + name);
        ++iso;
      }
    }
    o.note = std::to_string(designs) + " designs, " + std::to_string(groups) + " groups, " + std::to_string(iso) +
             " isomorphism pairs" + (o.note.empty() ? "" : "; " + o.note);
  });

  criterion(10, "randomized invariants over generated corpora", 60, [](Outcome &o) {
    std::mt19937_64 rng(161803);
    std::size_t cases = 0;
    std::vector<PermGroup> two_transitive;
    for (auto const &n : {"fano", "ag3_2_planes", "ag2_3", "pg2_3", "ag2_4_lines", "pg2_4"})
      two_transitive.push_back(build_classical(n).group);
    for (int t = 0; t < 600; ++t) {
      auto const &g = two_transitive[rng() % two_transitive.size()];
      auto const v = g.degree();
      auto const s = develop(g, random_subset(v, 2 + rng() % (v - 3), rng));
      auto const r = verify_design(s);
      o.require(bool(r), "development is not a 2-design");
      if (!r)
        continue;
      auto const &p = *r.params;
      o.require(p.v * p.r == p.b * p.k && p.lambda * (p.v - 1) == p.r * (p.k - 1) && p.k <= p.r, "Fisher identities");
      auto const c = complement(s);
      auto const rc = verify_design(c);
      o.require(rc && rc.params->k == p.v - p.k && rc.params->lambda == p.b - 2 * p.r + p.lambda,
                "complement parameters");
      o.require(complement(c) == s, "complement is not an involution");
      ++cases;
    }
    std::vector<CatalogEntry> const imprimitive = {build_d64(1), build_d64(2), build_s_minus_3(),
                                                   build_classical("pg3_2_complement"),
                                                   build_classical("pg5_2_complement")};
    for (int t = 0; t < 100; ++t) {
      auto const &e = imprimitive[t % imprimitive.size()];
      auto const v = e.design.v();
      auto const p = oracle::random_permutation(v, rng);
      std::vector<Permutation> gens;
      for (auto const &x : e.group.generators())
        gens.push_back(p.inverse() * x * p);
      std::vector<std::vector<Point>> classes;
      for (auto const &cls : e.system->classes)
        classes.push_back(image_of_set(cls, p));
      auto const d = decompose(relabel(e.design, p), PermGroup(v, gens), BlockSystem::from_classes(classes, v));
      long long const V = static_cast<long long>(v), K = static_cast<long long>(d.design.k);
      long long const v0 = static_cast<long long>(d.v0), v1 = static_cast<long long>(d.v1);
      long long const k0 = static_cast<long long>(d.k0), k1 = static_cast<long long>(d.k1);
      o.require((V - 1) * (k0 - 1) == (v0 - 1) * (K - 1), "rel1");
      o.require((v1 - 1) * v0 * (k0 - 1) == (k1 - 1) * k0 * (v0 - 1), "rel2");
      ++cases;
    }
    auto groups = oracle::group_corpus();
    for (int i = 0; i < 60; ++i) {
      std::size_t const degree = 3 + rng() % 12;
      groups.push_back({"random", PermGroup(degree, {oracle::random_permutation(degree, rng),
                                                     oracle::random_permutation(degree, rng)})});
    }
    for (auto const &[name, g] : groups) {
      for (int sample = 0; sample < 4; ++sample) {
        Point const p = static_cast<Point>(rng() % g.degree());
        o.require(g.order() == point_stabilizer(g, p).order() * orbit(g, p).size(), "orbit-stabilizer on " + name);
        ++cases;
      }
    }
    o.require(cases >= 1000, "only " + std::to_string(cases) + " cases");
    o.note = std::to_string(cases) + " cases" + (o.note.empty() ? "" : "; " + o.note);
  });

  std::cout << "failed: " << failed.size() << " of 10 criteria";
  if (!known.empty()) {
    std::cout << " (known failures:";
    for (int k : known)
      std::cout << ' ' << k;
    std::cout << ')';
  }
  std::cout << std::endl;
  return failed == known ? EXIT_SUCCESS : EXIT_FAILURE;
}

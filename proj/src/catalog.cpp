#include "ftdesign/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ftdesign/diffset.hpp"
#include "ftdesign/error.hpp"
#include "ftdesign/geometry.hpp"

namespace ftd
{

namespace
{

using Vec = std::vector<unsigned>;

constexpr std::size_t d64_points = 64;

BigInt factorial(std::size_t n)
{
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
  if (k > n)
    return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// Permutation of GF(2)^n induced by a map on coordinate vectors.
template <class Map>
Permutation vector_map(unsigned n, Map const &map)
{
  std::size_t const size = std::size_t(1) << n;
  std::vector<Point> images(size);
  for (std::size_t x = 0; x < size; ++x)
    images[x] = static_cast<Point>(encode_vector(map(decode_vector(x, n, 2)), 2));
  return Permutation(images);
}

/// Coordinates split as w = (x1, x3, x5) and u = (x2, x4, x6), so the polar form of the
/// quadric is w.u' + u.w'.
constexpr unsigned w_index[3] = {0, 2, 4};
constexpr unsigned u_index[3] = {1, 3, 5};

Vec row_times(Vec const &x, Matrix const &a)
{
  Vec y(3, 0);
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j)
      y[j] ^= x[i] & a[i][j];
  }
  return y;
}

/// B with A B^T = I over GF(2).
Matrix inverse_transpose(Matrix const &a)
{
  for (unsigned code = 0; code < 512; ++code) {
    Matrix b(3, Vec(3));
    for (unsigned i = 0; i < 9; ++i)
      b[i / 3][i % 3] = (code >> i) & 1u;
    bool ok = true;
    for (unsigned i = 0; i < 3 && ok; ++i) {
      for (unsigned j = 0; j < 3 && ok; ++j) {
        unsigned dot = 0;
        for (unsigned t = 0; t < 3; ++t)
          dot ^= a[i][t] & b[j][t];
        ok = dot == (i == j ? 1u : 0u);
      }
    }
    if (ok)
      return b;
  }
  fail(ErrorCode::internal, "singular matrix");
}

std::pair<Vec, Vec> split_wu(Vec const &x)
{
  Vec w(3), u(3);
  for (unsigned i = 0; i < 3; ++i) {
    w[i] = x[w_index[i]];
    u[i] = x[u_index[i]];
  }
  return {w, u};
}

Vec join_wu(Vec const &w, Vec const &u)
{
  Vec x(6);
  for (unsigned i = 0; i < 3; ++i) {
    x[w_index[i]] = w[i];
    x[u_index[i]] = u[i];
  }
  return x;
}

/// (w, u) -> (wA, u A^-T) for generators A of GL(3,2).
std::vector<Permutation> isotropic_levi_generators()
{
  std::vector<Permutation> gens;
  for (auto const &a : general_linear_generators(3, 2)) {
    auto const b = inverse_transpose(a);
    gens.push_back(vector_map(6, [&](Vec const &x) {
      auto [w, u] = split_wu(x);
      return join_wu(row_times(w, a), row_times(u, b));
    }));
  }
  return gens;
}

/// (w, u) -> (w + uS, u) for the symmetric basis matrices S.
std::vector<Permutation> isotropic_radical_generators()
{
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = i; j < 3; ++j) {
      Matrix s(3, Vec(3, 0));
      s[i][j] = s[j][i] = 1;
      gens.push_back(vector_map(6, [&](Vec const &x) {
        auto [w, u] = split_wu(x);
        auto shift = row_times(u, s);
        for (unsigned t = 0; t < 3; ++t)
          w[t] ^= shift[t];
        return join_wu(w, u);
      }));
    }
  }
  return gens;
}

/// Cosets of the isotropic space <e1, e3, e5>: classes indexed by the u coordinates.
BlockSystem isotropic_cosets()
{
  std::vector<std::vector<Point>> classes(8);
  for (std::size_t x = 0; x < d64_points; ++x) {
    auto [w, u] = split_wu(decode_vector(x, 6, 2));
    classes[encode_vector(u, 2)].push_back(static_cast<Point>(x));
  }
  return BlockSystem::from_classes(std::move(classes), d64_points);
}

std::vector<std::string> d64_rows()
{
  return {"8 4 3 7 14 4 | 8 7 6 7 8 | 8", "8 4 6 14 28 2 | 8 7 6 7 8 | 8",
          "8 4 12 28 56 1 | 8 7 6 7 8 | 8"};
}

std::vector<Point> parse_1based_list(std::string_view text)
{
  std::vector<Point> out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ','))
    out.push_back(static_cast<Point>(std::stoul(token) - 1));
  return out;
}

Permutation symmetric_generator(std::size_t v, bool cycle)
{
  std::vector<Point> images(v);
  for (std::size_t i = 0; i < v; ++i)
    images[i] = static_cast<Point>(cycle ? (i + 1) % v : i);
  if (!cycle)
    std::swap(images[0], images[1]);
  return Permutation(images);
}

CatalogEntry complete_design(std::size_t v, std::size_t k)
{
  if (v < 3 || v > 12 || k < 2 || k >= v)
    fail(ErrorCode::invalid_argument, "complete(v,k) needs 2 <= k < v <= 12");
  std::vector<Block> blocks;
  Block current;
  std::function<void(Point)> choose = [&](Point next) {
    if (current.size() == k) {
      blocks.push_back(current);
      return;
    }
    for (Point p = next; p < v; ++p) {
      current.push_back(p);
      choose(p + 1);
      current.pop_back();
    }
  };
  choose(0);

  CatalogEntry e{"complete(" + std::to_string(v) + "," + std::to_string(k) + ")",
                 IncidenceStructure(v, std::move(blocks)),
                 PermGroup(v, {symmetric_generator(v, false), symmetric_generator(v, true)}),
                 {},
                 std::nullopt};
  e.claims.v = v;
  e.claims.k = k;
  e.claims.lambda = binomial(v - 2, k - 2);
  e.claims.aut_order = factorial(v);
  e.claims.primitive = true;
  e.claims.subdegrees = std::vector<std::size_t>{1, v - 1};
  e.claims.source = "all k-subsets of a v-set under the symmetric group";
  return e;
}

CatalogEntry from_geometry(std::string name, GeometryDesign g, bool complemented)
{
  auto design = complemented ? complement(g.structure) : g.structure;
  return {std::move(name), std::move(design), std::move(g.group), {}, std::nullopt};
}

void set_params(CatalogEntry &e, std::size_t v, std::size_t k, std::size_t lambda)
{
  e.claims.v = v;
  e.claims.k = k;
  e.claims.lambda = lambda;
}

/// Blocks: every non-collinear triple of AG(2,3).
IncidenceStructure affine_triangles()
{
  auto lines = build_affine_design(2, 3, 1).structure;
  std::vector<Block> blocks;
  for (Point a = 0; a < 9; ++a) {
    for (Point b = a + 1; b < 9; ++b) {
      for (Point c = b + 1; c < 9; ++c) {
        Block t{a, b, c};
        if (!lines.find(t))
          blocks.push_back(t);
      }
    }
  }
  return IncidenceStructure(9, std::move(blocks));
}

/// Z_m1 x Z_m2 x ... acting on itself by translation; point = mixed-radix value.
PermGroup abelian_translations(std::vector<unsigned> const &moduli)
{
  std::size_t n = 1;
  for (unsigned m : moduli)
    n *= m;
  std::vector<Permutation> gens;
  std::size_t stride = n;
  for (unsigned m : moduli) {
    stride /= m;
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t const digit = (x / stride) % m;
      images[x] = static_cast<Point>(x - digit * stride + ((digit + 1) % m) * stride);
    }
    gens.emplace_back(images);
  }
  return PermGroup(n, std::move(gens));
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 0xcbf29ce484222325ULL)
{
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace

std::uint64_t table1_checksum()
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto g : table1::generators) {
    h = fnv1a(g, h);
    h = fnv1a("\n", h);
  }
  h = fnv1a(table1::base_block_1, h);
  h = fnv1a("\n", h);
  h = fnv1a(table1::base_block_2, h);
  return fnv1a("\n", h);
}

PermGroup table1_group()
{
  std::vector<Permutation> gens;
  for (auto g : table1::generators)
    gens.push_back(parse_permutation(g, d64_points));
  return PermGroup(d64_points, std::move(gens));
}

Block table1_base_block(int h)
{
  if (h != 1 && h != 2)
    fail(ErrorCode::invalid_argument, "base block index must be 1 or 2");
  return parse_1based_list(h == 1 ? table1::base_block_1 : table1::base_block_2);
}

CatalogEntry build_d64(int h)
{
  auto group = table1_group();
  auto design = develop(group, table1_base_block(h));
  std::optional<BlockSystem> system;
  for (auto &sys : minimal_block_systems(group)) {
    if (sys.class_size() == 8)
      system = std::move(sys);
  }
  CatalogEntry e{"d64-" + std::to_string(h), std::move(design), std::move(group), {}, std::move(system)};
  set_params(e, 64, 28, 12);
  e.claims.aut_order = BigInt(43008);
  e.claims.primitive = false;
  e.claims.subdegrees = std::vector<std::size_t>{1, 7, 56};
  e.claims.decomposition_rows = d64_rows();
  e.claims.source = "development of the embedded base block under the nine embedded generators";
  return e;
}

Block elliptic_quadric_zeros()
{
  Block zeros;
  for (std::size_t x = 0; x < d64_points; ++x) {
    auto const c = decode_vector(x, 6, 2);
    unsigned const q = (c[0] & c[1]) ^ (c[2] & c[3]) ^ c[4] ^ (c[4] & c[5]) ^ c[5];
    if (q == 0)
      zeros.push_back(static_cast<Point>(x));
  }
  return zeros;
}

PermGroup translation_group(unsigned n)
{
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < n; ++i) {
    gens.push_back(vector_map(n, [&](Vec x) {
      x[i] ^= 1u;
      return x;
    }));
  }
  return PermGroup(std::size_t(1) << n, std::move(gens));
}

PermGroup s_minus_3_parabolic_group()
{
  auto gens = translation_group(6).generators();
  for (auto &g : isotropic_levi_generators())
    gens.push_back(std::move(g));
  for (auto &g : isotropic_radical_generators())
    gens.push_back(std::move(g));
  return PermGroup(d64_points, std::move(gens));
}

CatalogEntry build_s_minus_3()
{
  auto const translations = make_regular_action(translation_group(6));
  auto design = develop_difference_set(translations, elliptic_quadric_zeros());

  // translations extended by the Levi factor GL(3,2) of the isotropic stabilizer
  auto gens = translation_group(6).generators();
  for (auto &g : isotropic_levi_generators())
    gens.push_back(std::move(g));

  CatalogEntry e{"s-minus-3", std::move(design), PermGroup(d64_points, std::move(gens)), {},
                 isotropic_cosets()};
  set_params(e, 64, 28, 12);
  e.claims.aut_order = BigInt(92897280);
  e.claims.primitive = false;
  e.claims.decomposition_rows = d64_rows();
  e.claims.source = "translates of the elliptic quadric in GF(2)^6";
  return e;
}

std::vector<std::string> classical_names()
{
  return {"fano",         "fano_complement", "ag2_3",        "ag2_3_complement", "ag2_3_triangles",
          "ag3_2_planes", "ag2_4_lines",     "pg2_3",        "pg2_3_complement", "pg2_4",
          "pg2_4_complement", "pg3_2_complement", "pg5_2_hyperplanes", "pg5_2_complement",
          "complete(6,3)"};
}

CatalogEntry build_classical(std::string_view name)
{
  std::string const n(name);
  if (n.rfind("complete(", 0) == 0 && n.back() == ')') {
    std::size_t v = 0, k = 0;
    char comma = 0;
    std::istringstream in(n.substr(9, n.size() - 10));
    if (!(in >> v >> comma >> k) || comma != ',' || !in.eof())
      fail(ErrorCode::invalid_argument, "malformed name " + n);
    return complete_design(v, k);
  }

  CatalogEntry e{"", {}, PermGroup::trivial(1), {}, std::nullopt};
  if (n == "fano" || n == "fano_complement") {
    bool const c = n != "fano";
    e = from_geometry(n, build_projective_design(2, 2, false), c);
    c ? set_params(e, 7, 4, 2) : set_params(e, 7, 3, 1);
    e.claims.aut_order = BigInt(168);
    e.claims.subdegrees = std::vector<std::size_t>{1, 6};
    e.claims.source = "lines of the projective plane of order 2 under PSL(3,2)";
  } else if (n == "ag2_3" || n == "ag2_3_complement") {
    bool const c = n != "ag2_3";
    e = from_geometry(n, build_affine_design(2, 3, 1), c);
    c ? set_params(e, 9, 6, 5) : set_params(e, 9, 3, 1);
    e.claims.aut_order = BigInt(432);
    e.claims.subdegrees = std::vector<std::size_t>{1, 8};
    e.claims.source = "lines of the affine plane of order 3 under AGL(2,3)";
  } else if (n == "ag2_3_triangles") {
    auto g = build_affine_design(2, 3, 1);
    e = {n, affine_triangles(), std::move(g.group), {}, std::nullopt};
    set_params(e, 9, 3, 6);
    e.claims.aut_order = BigInt(432);
    e.claims.source = "non-collinear triples of the affine plane of order 3";
  } else if (n == "ag3_2_planes") {
    e = from_geometry(n, build_affine_design(3, 2, 2), false);
    set_params(e, 8, 4, 3);
    e.claims.aut_order = BigInt(1344);
    e.claims.subdegrees = std::vector<std::size_t>{1, 7};
    e.claims.source = "planes of the affine space of dimension 3 over GF(2) under AGL(3,2)";
  } else if (n == "ag2_4_lines") {
    e = from_geometry(n, build_affine_design(2, 4, 1), false);
    set_params(e, 16, 4, 1);
    e.claims.aut_order = BigInt(5760);
    e.claims.subdegrees = std::vector<std::size_t>{1, 15};
    e.claims.source = "lines of the affine plane of order 4 under AGammaL(2,4)";
  } else if (n == "pg2_3" || n == "pg2_3_complement") {
    bool const c = n != "pg2_3";
    e = from_geometry(n, build_projective_design(2, 3, false), c);
    c ? set_params(e, 13, 9, 6) : set_params(e, 13, 4, 1);
    e.claims.aut_order = BigInt(5616);
    e.claims.subdegrees = std::vector<std::size_t>{1, 12};
    e.claims.source = "lines of the projective plane of order 3 under PGL(3,3)";
  } else if (n == "pg2_4" || n == "pg2_4_complement") {
    bool const c = n != "pg2_4";
    e = from_geometry(n, build_projective_design(2, 4, false), c);
    c ? set_params(e, 21, 16, 12) : set_params(e, 21, 5, 1);
    e.claims.aut_order = BigInt(120960);
    e.claims.subdegrees = std::vector<std::size_t>{1, 20};
    e.claims.source = "lines of the projective plane of order 4 under PGammaL(3,4)";
  } else if (n == "pg3_2_complement") {
    auto g = build_projective_design(3, 2, true);
    e = {n, complement(g.structure), gf4_semilinear_action(2), {}, gf4_spread(2)};
    set_params(e, 15, 8, 4);
    e.claims.aut_order = BigInt(20160);
    e.claims.primitive = false;
    e.claims.decomposition_rows = {"3 2 1 2 3 4 | 5 4 3 4 5 | 3"};
    e.claims.source = "complements of the planes of PG(3,2) under GammaL(2,4)";
  } else if (n == "pg5_2_hyperplanes") {
    e = from_geometry(n, build_projective_design(5, 2, true), false);
    set_params(e, 63, 31, 15);
    e.claims.aut_order = BigInt(20158709760ULL);
    e.claims.subdegrees = std::vector<std::size_t>{1, 62};
    e.claims.source = "hyperplanes of PG(5,2) under PGL(6,2)";
  } else if (n == "pg5_2_complement") {
    auto g = build_projective_design(5, 2, true);
    e = {n, complement(g.structure), gf4_semilinear_action(3), {}, gf4_spread(3)};
    set_params(e, 63, 32, 16);
    e.claims.aut_order = BigInt(20158709760ULL);
    e.claims.primitive = false;
    e.claims.decomposition_rows = {"3 2 1 2 3 16 | 21 16 12 16 21 | 3"};
    e.claims.source = "complements of the hyperplanes of PG(5,2) under GammaL(3,4)";
  } else {
    fail(ErrorCode::invalid_argument, "unknown design name \"" + n + "\"");
  }
  if (!e.claims.primitive)
    e.claims.primitive = true;
  return e;
}

std::vector<CatalogEntry> build_biplanes()
{
  std::vector<CatalogEntry> out;
  // Z16 has no (16,6,2) difference set; Z2 x Z8 is needed for the second design
  std::vector<std::vector<unsigned>> const groups = {{2, 2, 2, 2}, {4, 4}, {2, 2, 4}, {2, 8}};
  for (auto const &moduli : groups) {
    auto const r = make_regular_action(abelian_translations(moduli));
    // every 6-subset through the identity; translates give nothing new
    Block d{0};
    std::function<void(Point)> choose = [&](Point next) {
      if (d.size() == 6) {
        if (!is_difference_set(r, d, 2).is_difference_set)
          return;
        auto dev = develop_difference_set(r, d);
        for (auto const &known : out) {
          if (are_isomorphic(dev, known.design, known.group))
            return;
        }
        auto aut = automorphism_group(dev);
        CatalogEntry e{"biplane-" + std::to_string(out.size() + 1), std::move(dev), std::move(aut), {},
                       std::nullopt};
        set_params(e, 16, 6, 2);
        e.claims.source = "development of a (16,6,2) difference set";
        out.push_back(std::move(e));
        return;
      }
      for (Point p = next; p < 16; ++p) {
        d.push_back(p);
        choose(p + 1);
        d.pop_back();
      }
    };
    choose(1);
  }
  return out;
}

std::vector<std::string> catalog_names()
{
  std::vector<std::string> names = {"d64-1", "d64-2", "s-minus-3"};
  for (auto const &n : classical_names())
    names.push_back(n);
  for (std::size_t i = 1; i <= 2; ++i)
    names.push_back("biplane-" + std::to_string(i));
  return names;
}

CatalogEntry build_entry(std::string_view name)
{
  if (name == "d64-1")
    return build_d64(1);
  if (name == "d64-2")
    return build_d64(2);
  if (name == "s-minus-3")
    return build_s_minus_3();
  if (name.rfind("biplane-", 0) == 0) {
    auto all = build_biplanes();
    for (auto &e : all) {
      if (e.name == name)
        return std::move(e);
    }
    fail(ErrorCode::invalid_argument, "only " + std::to_string(all.size()) + " biplanes were found");
  }
  return build_classical(name);
}

bool ClaimsReport::passed() const
{
  return std::all_of(results.begin(), results.end(), [](ClaimResult const &r) { return r.passed; });
}

std::string ClaimsReport::to_text() const
{
  std::string out;
  for (auto const &r : results)
    out += name + ": " + (r.passed ? "PASS " : "FAIL ") + r.claim + (r.detail.empty() ? "" : " (" + r.detail + ")") + "\n";
  return out;
}

ClaimsReport run_claims(CatalogEntry const &entry, ClaimOptions const &options)
{
  ClaimsReport report{entry.name, {}};
  auto add = [&](std::string claim, bool passed, std::string detail) {
    report.results.push_back({std::move(claim), passed, std::move(detail)});
  };
  auto const &c = entry.claims;
  auto const &s = entry.design;

  auto design = verify_design(s);
  std::string expected = "2-(" + std::to_string(c.v) + "," + std::to_string(c.k) + "," + std::to_string(c.lambda) + ")";
  if (!design) {
    add("parameters " + expected, false, design.violation);
    return report;
  }
  auto const &p = *design.params;
  add("parameters " + expected, p.v == c.v && p.k == c.k && p.lambda == c.lambda, describe(p));

  std::string bad;
  for (auto const &g : entry.group.generators()) {
    if (bad.empty() && !is_automorphism(s, g))
      bad = g.to_cycles();
  }
  add("group preserves the blocks", bad.empty(), bad.empty() ? "" : "generator " + bad);
  if (!bad.empty())
    return report;

  auto const flags = flag_orbit_size(s, entry.group);
  add("flag-transitive", flags == p.b * p.k,
      std::to_string(flags) + " of " + std::to_string(p.b * p.k) + " flags in one orbit");

  if (c.primitive) {
    bool const primitive = entry.group.is_transitive() && minimal_block_systems(entry.group).empty();
    add(*c.primitive ? "point-primitive" : "point-imprimitive", primitive == *c.primitive,
        primitive ? "no nontrivial block system" : "nontrivial block system found");
  }

  if (c.subdegrees) {
    auto const sub = rank_and_subdegrees(entry.group);
    std::string text;
    for (auto x : sub)
      text += (text.empty() ? "" : ",") + std::to_string(x);
    add("subdegrees", sub == *c.subdegrees, text);
  }

  if (c.aut_order && *c.aut_order <= options.aut_limit) {
    try {
      auto const aut = automorphism_group(s, options.search);
      bool contains = true;
      for (auto const &g : entry.group.generators())
        contains = contains && aut.contains(g);
      add("automorphism group order " + c.aut_order->str(), aut.order() == *c.aut_order,
          "computed " + aut.order().str());
      add("group lies in the automorphism group", contains, "");
    } catch (Error const &e) {
      add("automorphism group order " + c.aut_order->str(), false, e.what());
    }
  }

  if (entry.system && !c.decomposition_rows.empty()) {
    try {
      auto const d = decompose(s, entry.group, *entry.system);
      auto const row = format_row(d);
      bool const listed = std::find(c.decomposition_rows.begin(), c.decomposition_rows.end(), row) !=
                          c.decomposition_rows.end();
      add("decomposition row", listed && check_symmetric_consistency(d, s), row);
    } catch (Error const &e) {
      add("decomposition row", false, e.what());
    }
  }
  return report;
}

std::vector<std::string> external_claim_names()
{
  return {"45-12-3", "96-20-4"};
}

ClaimsReport check_external_design(IncidenceStructure const &s, std::string_view claim)
{
  std::size_t v = 0, k = 0, lambda = 0;
  if (claim == "45-12-3") {
    v = 45, k = 12, lambda = 3;
  } else if (claim == "96-20-4") {
    v = 96, k = 20, lambda = 4;
  } else {
    fail(ErrorCode::invalid_argument, "unknown parameter set \"" + std::string(claim) + "\"");
  }
  ClaimsReport report{std::string(claim), {}};
  auto design = verify_design(s);
  if (!design) {
    report.results.push_back({"2-design", false, design.violation});
    return report;
  }
  auto const &p = *design.params;
  report.results.push_back({"parameters", p.v == v && p.k == k && p.lambda == lambda, describe(p)});
  report.results.push_back({"symmetric", p.symmetric(), ""});
  return report;
}

} // namespace ftd

#include "ftdesign.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include <json.hpp>

#include "ftdesign/catalog.hpp"
#include "ftdesign/diffset.hpp"
#include "ftdesign/enumerate.hpp"
#include "ftdesign/error.hpp"
#include "ftdesign/io.hpp"

struct ftd_design
{
  ftd::IncidenceStructure s;
};

struct ftd_group
{
  ftd::PermGroup g;
};

namespace
{

thread_local std::string last_error;
std::atomic<unsigned> thread_cap{0};

template <class F>
ftd_status guarded(F &&f)
{
  try {
    f();
    last_error.clear();
    return FTD_OK;
  } catch (ftd::Error const &e) {
    last_error = e.what();
    return static_cast<ftd_status>(e.code());
  } catch (std::bad_alloc const &) {
    last_error = "out of memory";
    return FTD_INTERNAL;
  } catch (std::exception const &e) {
    last_error = e.what();
    return FTD_INTERNAL;
  }
}

char *dup(std::string const &s)
{
  auto *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, char const *what)
{
  if (!condition)
    ftd::fail(ftd::ErrorCode::invalid_argument, what);
}

std::string json_row(ftd::CZDecomposition const &d)
{
  nlohmann::json j;
  auto opt = [](std::optional<std::size_t> const &x) -> nlohmann::json {
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
  };
  j["v0"] = d.v0;
  j["k0"] = d.k0;
  j["lambda0"] = opt(d.lambda0);
  j["b0"] = d.d0.b();
  j["theta"] = opt(d.theta);
  j["v1"] = d.v1;
  j["k1"] = d.k1;
  j["lambda1"] = opt(d.lambda1);
  j["b1"] = d.d1.b();
  j["mu"] = d.mu;
  j["row"] = ftd::format_row(d);
  return j.dump();
}

char const *bounds_name(std::optional<ftd::BoundsCase> c)
{
  if (!c)
    return "none";
  switch (*c) {
  case ftd::BoundsCase::k0_is_two:
    return "k0 = 2";
  case ftd::BoundsCase::middle_with_2_design:
    return "3 <= k0 <= v0 - 2, D0 a 2-design";
  case ftd::BoundsCase::k0_is_v0_minus_1:
    return "k0 = v0 - 1, D0 a 1-design";
  }
  return "none";
}

std::string rational_json(ftd::Rational const &r)
{ return ftd::format_mu(r); }

std::string rows_json(std::vector<ftd::ParamRow> const &rows)
{
  nlohmann::json out = nlohmann::json::array();
  for (auto const &r : rows) {
    nlohmann::json j;
    j["table"] = r.table;
    j["v0"] = r.v0;
    j["k0"] = r.k0;
    j["lambda0"] = r.lambda0;
    j["r0"] = r.r0;
    j["b0"] = r.b0;
    j["theta"] = r.theta ? nlohmann::json(rational_json(*r.theta)) : nlohmann::json(nullptr);
    j["v1"] = r.v1;
    j["k1"] = r.k1;
    j["lambda1"] = r.lambda1;
    j["r1"] = r.r1;
    j["b1"] = r.b1;
    j["v"] = r.v;
    j["k"] = r.k;
    j["lambda"] = rational_json(r.lambda);
    j["r"] = rational_json(r.r);
    j["b"] = rational_json(r.b);
    j["mu_mod"] = r.mu_mod;
    j["mu_s"] = r.mu_s ? nlohmann::json(*r.mu_s) : nlohmann::json(nullptr);
    j["group0"] = r.group0;
    j["group1"] = r.group1;
    out.push_back(std::move(j));
  }
  return out.dump(1) + "\n";
}

std::string rows_json(std::vector<ftd::SymmetricRow> const &rows)
{
  nlohmann::json out = nlohmann::json::array();
  for (auto const &r : rows) {
    out.push_back({{"v0", r.v0},         {"k0", r.k0}, {"lambda0", r.lambda0}, {"r0", r.r0},
                   {"b0", r.b0},         {"theta", r.theta}, {"v1", r.v1}, {"k1", r.k1},
                   {"lambda1", r.lambda1}, {"r1", r.r1}, {"b1", r.b1}, {"mu", r.mu},
                   {"v", r.v},           {"k", r.k}, {"lambda", r.lambda},
                   {"group0", r.group0}, {"group1", r.group1}});
  }
  return out.dump(1) + "\n";
}

ftd::RegularAction regular(ftd_group const *g)
{ return ftd::make_regular_action(g->g); }

} // namespace

extern "C" {

const char *ftd_last_error(void)
{ return last_error.c_str(); }

const char *ftd_version(void)
{ return FTD_VERSION; }

void ftd_string_free(char *s)
{ std::free(s); }

uint64_t ftd_checksum(const char *bytes, size_t length)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < length; ++i) {
    h ^= static_cast<unsigned char>(bytes[i]);
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t ftd_embedded_data_checksum(void)
{ return ftd::table1_checksum(); }

ftd_status ftd_set_threads(unsigned threads)
{
  thread_cap = threads;
  return FTD_OK;
}

ftd_status ftd_read_file(const char *path, char **text)
{
  return guarded([&] {
    require(path && text, "null argument");
    *text = dup(ftd::read_text(path));
  });
}

ftd_status ftd_design_from_json(const char *json, ftd_design **out)
{
  return guarded([&] {
    require(json && out, "null argument");
    *out = new ftd_design{ftd::design_from_json(json)};
  });
}

ftd_status ftd_design_to_json(const ftd_design *d, char **json)
{
  return guarded([&] {
    require(d && json, "null argument");
    *json = dup(ftd::design_to_json(d->s));
  });
}

void ftd_design_free(ftd_design *d)
{ delete d; }

size_t ftd_design_points(const ftd_design *d)
{ return d ? d->s.v() : 0; }

size_t ftd_design_blocks(const ftd_design *d)
{ return d ? d->s.b() : 0; }

ftd_status ftd_design_verify(const ftd_design *d, int *is_design, ftd_params *params, char **message)
{
  return guarded([&] {
    require(d && is_design && params && message, "null argument");
    auto report = ftd::verify_design(d->s);
    *is_design = report ? 1 : 0;
    if (report) {
      auto const &p = *report.params;
      *params = {p.v, p.b, p.k, p.r, p.lambda, p.symmetric() ? 1 : 0};
      *message = dup(ftd::describe(p));
    } else {
      *params = {};
      *message = dup(report.violation);
    }
  });
}

ftd_status ftd_design_complement(const ftd_design *d, ftd_design **out)
{
  return guarded([&] {
    require(d && out, "null argument");
    *out = new ftd_design{ftd::complement(d->s)};
  });
}

ftd_status ftd_group_from_text(const char *text, ftd_group **out)
{
  return guarded([&] {
    require(text && out, "null argument");
    auto gens = ftd::parse_generators(text);
    auto const degree = gens.front().degree();
    *out = new ftd_group{ftd::PermGroup(degree, std::move(gens))};
  });
}

ftd_status ftd_group_to_text(const ftd_group *g, char **text)
{
  return guarded([&] {
    require(g && text, "null argument");
    *text = dup(ftd::format_generators(g->g.degree(), g->g.generators()));
  });
}

void ftd_group_free(ftd_group *g)
{ delete g; }

ftd_status ftd_group_order(const ftd_group *g, char **order)
{
  return guarded([&] {
    require(g && order, "null argument");
    *order = dup(g->g.order().str());
  });
}

ftd_status ftd_group_is_flag_transitive(const ftd_group *g, const ftd_design *d, int *result)
{
  return guarded([&] {
    require(g && d && result, "null argument");
    require(g->g.degree() == d->s.v(), "group and design differ in point count");
    *result = ftd::is_flag_transitive(d->s, g->g) ? 1 : 0;
  });
}

ftd_status ftd_automorphism_group(const ftd_design *d, size_t node_limit, ftd_group **out)
{
  return guarded([&] {
    require(d && out, "null argument");
    *out = new ftd_group{ftd::automorphism_group(d->s, {node_limit})};
  });
}

ftd_status ftd_are_isomorphic(const ftd_design *a, const ftd_design *b, size_t node_limit,
                              int *isomorphic, char **witness)
{
  return guarded([&] {
    require(a && b && isomorphic && witness, "null argument");
    auto result = ftd::are_isomorphic(a->s, b->s, {node_limit});
    *isomorphic = result ? 1 : 0;
    *witness = result ? dup(result->to_cycles()) : nullptr;
  });
}

ftd_status ftd_block_system_count(const ftd_group *g, size_t *count)
{
  return guarded([&] {
    require(g && count, "null argument");
    *count = g->g.is_transitive() ? ftd::minimal_block_systems(g->g).size() : 0;
  });
}

ftd_status ftd_decompose(const ftd_design *d, const ftd_group *g, size_t system, ftd_format format,
                         char **report)
{
  return guarded([&] {
    require(d && g && report, "null argument");
    require(g->g.is_transitive(), "group is not transitive");
    auto systems = ftd::minimal_block_systems(g->g);
    if (systems.empty())
      ftd::fail(ftd::ErrorCode::invalid_argument, "group is primitive: no block system to decompose along");
    if (system >= systems.size())
      ftd::fail(ftd::ErrorCode::invalid_argument, "only " + std::to_string(systems.size()) +
                                                  " minimal block systems");
    auto const dec = ftd::decompose(d->s, g->g, systems[system]);
    std::string out;
    switch (format) {
    case FTD_FORMAT_JSON:
      out = json_row(dec) + "\n";
      break;
    case FTD_FORMAT_CSV: {
      auto row = ftd::format_row(dec);
      std::string csv;
      for (char c : row) {
        if (c == ' ')
          csv += ',';
        else if (c != '|')
          csv += c;
      }
      std::string squeezed;
      for (char c : csv) {
        if (!(c == ',' && !squeezed.empty() && squeezed.back() == ','))
          squeezed += c;
      }
      out = "v0,k0,lambda0,r0,b0,theta,v1,k1,lambda1,r1,b1,mu\n" + squeezed + "\n";
      break;
    }
    default:
      out = ftd::format_row(dec) + "\n";
      out += "classes: " + std::to_string(dec.v1) + " of size " + std::to_string(dec.v0) + "\n";
      out += "trace multiplicity: " + std::to_string(dec.trace_multiplicity) + "\n";
      out += std::string("bounds case: ") + bounds_name(ftd::bounds_case(dec)) + "\n";
      out += std::string("symmetric consistency: ") +
             (ftd::check_symmetric_consistency(dec, d->s) ? "true" : "false") + "\n";
    }
    *report = dup(out);
  });
}

ftd_status ftd_enumerate(int symmetric_only, long vmax, ftd_format format, char **out)
{
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto rows = ftd::enumerate_all(vmax);
    std::string text;
    if (symmetric_only) {
      auto sym = ftd::symmetric_filter(rows);
      text = format == FTD_FORMAT_CSV ? ftd::to_csv(sym) : format == FTD_FORMAT_JSON ? rows_json(sym) : ftd::to_table(sym);
    } else {
      text = format == FTD_FORMAT_CSV ? ftd::to_csv(rows) : format == FTD_FORMAT_JSON ? rows_json(rows) : ftd::to_table(rows);
    }
    *out = dup(text);
  });
}

ftd_status ftd_catalog_names(char **names)
{
  return guarded([&] {
    require(names != nullptr, "null argument");
    std::string text;
    for (auto const &n : ftd::catalog_names())
      text += n + "\n";
    *names = dup(text);
  });
}

ftd_status ftd_construct(const char *name, ftd_design **design, ftd_group **group)
{
  return guarded([&] {
    require(name && design && group, "null argument");
    auto entry = ftd::build_entry(name);
    *design = new ftd_design{std::move(entry.design)};
    *group = new ftd_group{std::move(entry.group)};
  });
}

ftd_status ftd_run_claims(const char *name, size_t node_limit, int *passed, char **report)
{
  return guarded([&] {
    require(name && passed && report, "null argument");
    auto const entry = ftd::build_entry(name);
    ftd::ClaimOptions options;
    options.search.node_limit = node_limit;
    auto const r = ftd::run_claims(entry, options);
    *passed = r.passed() ? 1 : 0;
    *report = dup(r.to_text());
  });
}

ftd_status ftd_check_external(const ftd_design *d, const char *claim, int *passed, char **report)
{
  return guarded([&] {
    require(d && claim && passed && report, "null argument");
    auto const r = ftd::check_external_design(d->s, claim);
    *passed = r.passed() ? 1 : 0;
    *report = dup(r.to_text());
  });
}

ftd_status ftd_diffset_check(const ftd_group *g, const char *subset, size_t lambda, int *is_difference_set,
                             char **report)
{
  return guarded([&] {
    require(g && subset && is_difference_set && report, "null argument");
    auto const r = regular(g);
    auto const d = ftd::parse_point_set(subset, r.degree());
    auto const result = ftd::is_difference_set(r, d, lambda);
    *is_difference_set = result.is_difference_set ? 1 : 0;
    std::string text = result.is_difference_set
                         ? "difference set: every non-identity element is represented " +
                             std::to_string(lambda) + " times\n"
                         : "not a difference set: the element carrying point " +
                             std::to_string(r.base + 1) + " to point " +
                             std::to_string(*result.deviant + 1) + " is represented " +
                             std::to_string(result.counts[*result.deviant]) + " times, expected " +
                             std::to_string(lambda) + "\n";
    *report = dup(text);
  });
}

ftd_status ftd_diffset_develop(const ftd_group *g, const char *subset, ftd_design **out)
{
  return guarded([&] {
    require(g && subset && out, "null argument");
    auto const r = regular(g);
    *out = new ftd_design{ftd::develop_difference_set(r, ftd::parse_point_set(subset, r.degree()))};
  });
}

ftd_status ftd_regular_subgroups(const ftd_group *g, size_t limit, size_t budget, size_t *found,
                                 int *exhausted, char **report)
{
  return guarded([&] {
    require(g && found && exhausted && report, "null argument");
    auto const search = ftd::find_regular_subgroups(g->g, limit, budget);
    *found = search.found.size();
    *exhausted = search.budget_exhausted ? 1 : 0;

    // For the group of the embedded data, say what each base block develops to.
    bool const embedded = g->g.degree() == 64 && g->g.generators() == ftd::table1_group().generators();
    std::string text;
    for (std::size_t i = 0; i < search.found.size(); ++i) {
      auto const &r = search.found[i];
      text += "# regular subgroup " + std::to_string(i + 1) + "\n";
      text += ftd::format_generators(r.degree(), r.group.generators());
      if (!embedded)
        continue;
      for (int h = 1; h <= 2; ++h) {
        auto const block = ftd::table1_base_block(h);
        bool const ds = ftd::is_difference_set(r, block, 12).is_difference_set;
        auto const dev = ftd::develop_difference_set(r, block);
        std::string target = "neither";
        for (int t = 1; t <= 2; ++t) {
          if (ftd::are_isomorphic(dev, ftd::build_d64(t).design))
            target = "d64-" + std::to_string(t);
        }
        text += "# base block " + std::to_string(h) + ": " + (ds ? "difference set" : "not a difference set") +
                ", development isomorphic to " + target + "\n";
      }
    }
    *report = dup(text);
  });
}

} // extern "C"

// ftd: command-line front end over the C API.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ftdesign.h"

namespace
{

enum Exit
{
  exit_ok = 0,
  exit_false = 1,
  exit_usage = 2,
  exit_internal = 3,
};

struct Failure
{
  int code;
};

int exit_for(ftd_status s)
{
  switch (s) {
  case FTD_OK:
    return exit_ok;
  case FTD_INVALID_ARGUMENT:
  case FTD_PARSE_ERROR:
  case FTD_IO_ERROR:
    return exit_usage;
  case FTD_NOT_A_DESIGN:
  case FTD_NOT_AN_AUTOMORPHISM:
    return exit_false;
  default:
    return exit_internal;
  }
}

void check(ftd_status s)
{
  if (s == FTD_OK)
    return;
  std::cerr << "ftd: " << ftd_last_error() << "\n";
  throw Failure{exit_for(s)};
}

// Owned C string.
struct Text
{
  char *p = nullptr;
  ~Text()
  { ftd_string_free(p); }
  char **out()
  { return &p; }
  std::string str() const
  { return p ? p : ""; }
};

using Design = std::unique_ptr<ftd_design, decltype(&ftd_design_free)>;
using Group = std::unique_ptr<ftd_group, decltype(&ftd_group_free)>;

std::string slurp(std::string const &path)
{
  Text t;
  check(ftd_read_file(path.c_str(), t.out()));
  return t.str();
}

Design load_design(std::string const &path)
{
  ftd_design *d = nullptr;
  check(ftd_design_from_json(slurp(path).c_str(), &d));
  return Design(d, ftd_design_free);
}

Group load_group(std::string const &path)
{
  ftd_group *g = nullptr;
  check(ftd_group_from_text(slurp(path).c_str(), &g));
  return Group(g, ftd_group_free);
}

void emit(std::string const &text, std::string const &path)
{
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "ftd: cannot write " << path << "\n";
    throw Failure{exit_usage};
  }
}

std::string quoted(std::string const &s)
{
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string hex(std::uint64_t h)
{
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string file_checksum(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return "missing";
  std::ostringstream buf;
  buf << in.rdbuf();
  auto const bytes = buf.str();
  return hex(ftd_checksum(bytes.data(), bytes.size()));
}

void print_version()
{
  std::cout << "ftd " << ftd_version() << "\n";
  std::cout << "artifact     " << file_checksum("/proc/self/exe") << "  ftd executable\n";
  std::cout << "embedded     " << hex(ftd_embedded_data_checksum()) << "  Table 1 strings\n";
  std::cout << "fixture      " << file_checksum(FTD_DATA_DIR "/table1.txt") << "  data/table1.txt\n";
  for (int t = 2; t <= 5; ++t) {
    auto const name = "table" + std::to_string(t) + ".csv";
    std::cout << "fixture      " << file_checksum(std::string(FTD_TABLES_DIR "/") + name) << "  tables/" << name
              << "\n";
  }
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Flag-transitive point-imprimitive symmetric designs"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string format_name = "table";
  std::size_t node_limit = 0;
  std::size_t threads = 0;
  bool verbose = false;
  bool version = false;
  std::map<std::string, ftd_format> const formats{
    {"table", FTD_FORMAT_TABLE}, {"csv", FTD_FORMAT_CSV}, {"json", FTD_FORMAT_JSON}};
  app.add_option("--format", format_name, "Output format")->transform(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--node-limit", node_limit, "Search-tree node budget for aut/iso (default unlimited)")
    ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Cap on internal parallelism")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", verbose, "Extra diagnostics on stderr");
  app.add_flag("--version", version, "Print version and data checksums");

  std::string path1, path2, name, out_path, subset, claim;

  auto *verify = app.add_subcommand("verify", "Check that a design JSON file is a 2-design");
  verify->add_option("design", path1)->required();

  auto *aut = app.add_subcommand("aut", "Full automorphism group of a design");
  aut->add_option("design", path1)->required();

  auto *iso = app.add_subcommand("iso", "Decide isomorphism of two designs");
  iso->add_option("first", path1)->required();
  iso->add_option("second", path2)->required();

  std::size_t system = 0;
  auto *decompose = app.add_subcommand("decompose", "Camina-Zieschang decomposition along a block system");
  decompose->add_option("design", path1)->required();
  decompose->add_option("group", path2)->required();
  decompose->add_option("--system", system, "Index of the minimal block system (0-based)");

  long vmax = 100;
  bool symmetric = false;
  auto *enumerate = app.add_subcommand("enumerate", "Feasible decomposition parameter sets");
  enumerate->add_option("--vmax", vmax, "Largest v1")->check(CLI::PositiveNumber);
  enumerate->add_flag("--symmetric", symmetric, "Only the symmetric specialisation");

  std::string group_out;
  bool list = false;
  auto *construct = app.add_subcommand("construct", "Build a catalog design");
  construct->add_option("name", name);
  construct->add_option("--out", out_path, "Design JSON destination (default stdout)");
  construct->add_option("--group-out", group_out, "Also write the group's generators");
  construct->add_flag("--list", list, "List catalog names");

  auto *claims = app.add_subcommand("claims", "Check a catalog entry's recorded claims");
  claims->add_option("name", name)->required();

  auto *external = app.add_subcommand("external", "Check a design against a claimed external parameter set");
  external->add_option("design", path1)->required();
  external->add_option("claim", claim, "45-12-3 or 96-20-4")->required();

  std::size_t lambda = 0, limit = 1, budget = 1000000;
  auto *diffset = app.add_subcommand("diffset", "Difference sets in regular permutation groups");
  diffset->require_subcommand(1);
  auto *ds_check = diffset->add_subcommand("check", "Test the difference-set property");
  ds_check->add_option("group", path1)->required();
  ds_check->add_option("subset", subset, "Points as a comma list, or @file")->required();
  ds_check->add_option("--lambda", lambda)->required()->check(CLI::PositiveNumber);
  auto *ds_develop = diffset->add_subcommand("develop", "Develop a subset into a design");
  ds_develop->add_option("group", path1)->required();
  ds_develop->add_option("subset", subset, "Points as a comma list, or @file")->required();
  auto *ds_regular = diffset->add_subcommand("regular", "Search for regular subgroups");
  ds_regular->add_option("group", path1)->required();
  ds_regular->add_option("--limit", limit, "Stop after this many subgroups")->check(CLI::PositiveNumber);
  ds_regular->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return exit_usage;
  }

  if (version) {
    print_version();
    return exit_ok;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return exit_usage;
  }
  ftd_set_threads(static_cast<unsigned>(threads));
  auto const format = formats.at(format_name);
  auto point_list = [&]() { return subset.size() > 1 && subset[0] == '@' ? slurp(subset.substr(1)) : subset; };

  try {
    if (*verify) {
      auto d = load_design(path1);
      int ok = 0;
      ftd_params p{};
      Text msg;
      check(ftd_design_verify(d.get(), &ok, &p, msg.out()));
      if (format == FTD_FORMAT_JSON) {
        std::cout << "{\"is_design\":" << (ok ? "true" : "false");
        if (ok)
          std::cout << ",\"v\":" << p.v << ",\"b\":" << p.b << ",\"k\":" << p.k << ",\"r\":" << p.r
                    << ",\"lambda\":" << p.lambda << ",\"symmetric\":" << (p.symmetric ? "true" : "false");
        std::cout << ",\"message\":" << quoted(msg.str()) << "}\n";
      } else {
        std::cout << msg.str() << "\n";
      }
      return ok ? exit_ok : exit_false;
    }

    if (*aut) {
      auto d = load_design(path1);
      ftd_group *raw = nullptr;
      check(ftd_automorphism_group(d.get(), node_limit, &raw));
      Group g(raw, ftd_group_free);
      Text order, gens;
      check(ftd_group_order(g.get(), order.out()));
      check(ftd_group_to_text(g.get(), gens.out()));
      if (format == FTD_FORMAT_JSON) {
        std::cout << "{\"order\":" << quoted(order.str()) << ",\"generators\":" << quoted(gens.str()) << "}\n";
      } else {
        std::cout << "# order " << order.str() << "\n" << gens.str();
      }
      return exit_ok;
    }

    if (*iso) {
      auto a = load_design(path1);
      auto b = load_design(path2);
      int same = 0;
      Text witness;
      check(ftd_are_isomorphic(a.get(), b.get(), node_limit, &same, witness.out()));
      if (format == FTD_FORMAT_JSON)
        std::cout << "{\"isomorphic\":" << (same ? "true" : "false")
                  << ",\"witness\":" << (same ? quoted(witness.str()) : "null") << "}\n";
      else if (same)
        std::cout << "isomorphic\n" << witness.str() << "\n";
      else
        std::cout << "not isomorphic\n";
      return same ? exit_ok : exit_false;
    }

    if (*decompose) {
      auto d = load_design(path1);
      auto g = load_group(path2);
      if (verbose) {
        std::size_t count = 0;
        check(ftd_block_system_count(g.get(), &count));
        std::cerr << "minimal block systems: " << count << "\n";
      }
      Text report;
      check(ftd_decompose(d.get(), g.get(), system, format, report.out()));
      std::cout << report.str();
      return exit_ok;
    }

    if (*enumerate) {
      Text rows;
      check(ftd_enumerate(symmetric ? 1 : 0, vmax, format, rows.out()));
      std::cout << rows.str();
      return exit_ok;
    }

    if (*construct) {
      if (list) {
        Text names;
        check(ftd_catalog_names(names.out()));
        std::cout << names.str();
        return exit_ok;
      }
      if (name.empty()) {
        std::cerr << "ftd construct: a catalog name is required (see --list)\n";
        return exit_usage;
      }
      ftd_design *d = nullptr;
      ftd_group *g = nullptr;
      check(ftd_construct(name.c_str(), &d, &g));
      Design design(d, ftd_design_free);
      Group group(g, ftd_group_free);
      Text json;
      check(ftd_design_to_json(design.get(), json.out()));
      emit(json.str(), out_path);
      if (!group_out.empty()) {
        Text gens;
        check(ftd_group_to_text(group.get(), gens.out()));
        emit(gens.str(), group_out);
      }
      return exit_ok;
    }

    if (*claims) {
      int passed = 0;
      Text report;
      check(ftd_run_claims(name.c_str(), node_limit, &passed, report.out()));
      std::cout << report.str();
      return passed ? exit_ok : exit_false;
    }

    if (*external) {
      auto d = load_design(path1);
      int passed = 0;
      Text report;
      check(ftd_check_external(d.get(), claim.c_str(), &passed, report.out()));
      std::cout << report.str();
      return passed ? exit_ok : exit_false;
    }

    if (*ds_check) {
      auto g = load_group(path1);
      int ok = 0;
      Text report;
      check(ftd_diffset_check(g.get(), point_list().c_str(), lambda, &ok, report.out()));
      std::cout << report.str();
      return ok ? exit_ok : exit_false;
    }

    if (*ds_develop) {
      auto g = load_group(path1);
      ftd_design *raw = nullptr;
      check(ftd_diffset_develop(g.get(), point_list().c_str(), &raw));
      Design d(raw, ftd_design_free);
      Text json;
      check(ftd_design_to_json(d.get(), json.out()));
      std::cout << json.str();
      return exit_ok;
    }

    if (*ds_regular) {
      auto g = load_group(path1);
      std::size_t found = 0;
      int exhausted = 0;
      Text report;
      check(ftd_regular_subgroups(g.get(), limit, budget, &found, &exhausted, report.out()));
      std::cout << report.str();
      std::cout << "# found " << found << (exhausted ? ", budget exhausted" : "") << "\n";
      return found ? exit_ok : exit_false;
    }
  } catch (Failure const &f) {
    return f.code;
  }
  return exit_usage;
}

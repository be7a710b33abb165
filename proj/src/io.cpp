#include "ftdesign/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ftdesign/error.hpp"

namespace ftd
{

IncidenceStructure design_from_json(std::string_view text)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const &e) {
    fail(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("v") || !doc.contains("blocks"))
    fail(ErrorCode::parse_error, "design JSON needs \"v\" and \"blocks\"");
  if (!doc["v"].is_number_unsigned())
    fail(ErrorCode::parse_error, "\"v\" must be a non-negative integer");
  auto const v = doc["v"].get<std::size_t>();
  if (v > max_degree)
    fail(ErrorCode::invalid_argument, "v = " + std::to_string(v) + " exceeds " + std::to_string(max_degree));
  if (!doc["blocks"].is_array())
    fail(ErrorCode::parse_error, "\"blocks\" must be an array");

  std::vector<Block> blocks;
  for (auto const &jb : doc["blocks"]) {
    if (!jb.is_array())
      fail(ErrorCode::parse_error, "each block must be an array of points");
    Block b;
    for (auto const &jp : jb) {
      if (!jp.is_number_unsigned() || jp.get<std::size_t>() == 0 || jp.get<std::size_t>() > v)
        fail(ErrorCode::parse_error, "block " + std::to_string(blocks.size() + 1) +
                                     " has a point outside 1.." + std::to_string(v));
      b.push_back(static_cast<Point>(jp.get<std::size_t>() - 1));
    }
    blocks.push_back(std::move(b));
  }
  try {
    return IncidenceStructure(v, std::move(blocks));
  } catch (Error const &e) {
    fail(ErrorCode::parse_error, e.what());
  }
}

std::string design_to_json(IncidenceStructure const &s)
{
  std::ostringstream out;
  out << "{\"v\":" << s.v() << ",\"blocks\":[";
  for (std::size_t i = 0; i < s.b(); ++i) {
    out << (i ? "," : "") << '[';
    auto const &blk = s.block(i);
    for (std::size_t j = 0; j < blk.size(); ++j)
      out << (j ? "," : "") << blk[j] + 1;
    out << ']';
  }
  out << "]}\n";
  return out.str();
}

std::vector<Permutation> parse_generators(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (!have_degree) {
      std::istringstream words(line);
      std::string keyword;
      long long n = -1;
      words >> keyword >> n;
      std::string rest;
      if (keyword != "degree" || n <= 0 || static_cast<std::size_t>(n) > max_degree || (words >> rest))
        fail(ErrorCode::parse_error, "line " + std::to_string(lineno) + ": expected \"degree n\"");
      degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(parse_permutation(line, degree));
    } catch (Error const &e) {
      fail(ErrorCode::parse_error, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_degree)
    fail(ErrorCode::parse_error, "missing \"degree n\" line");
  if (gens.empty())
    gens.push_back(Permutation::identity(degree));
  return gens;
}

std::string format_generators(std::size_t degree, std::vector<Permutation> const &gens)
{
  std::string out = "degree " + std::to_string(degree) + "\n";
  for (auto const &g : gens)
    out += g.to_cycles() + "\n";
  return out;
}

std::vector<Point> parse_point_set(std::string_view text, std::size_t degree)
{
  std::vector<Point> out;
  std::string token;
  auto flush = [&]() {
    if (token.empty())
      return;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used != token.size() || value == 0 || value > degree)
      fail(ErrorCode::parse_error, "bad point \"" + token + "\"");
    out.push_back(static_cast<Point>(value - 1));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token += c;
  }
  flush();
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    fail(ErrorCode::parse_error, "repeated point in set");
  return out;
}

std::string read_text(std::string const &path)
{
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::io_error, "cannot open " + path);
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace ftd

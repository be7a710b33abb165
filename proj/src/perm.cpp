#include "ftdesign/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ftdesign/error.hpp"

namespace ftd
{

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  if (degree > max_degree)
    fail(ErrorCode::invalid_argument, "degree " + std::to_string(degree) + " exceeds 256");
  std::iota(_images.begin(), _images.end(), std::uint8_t{0});
}

Permutation::Permutation(std::vector<Point> const &images)
: _images(images.size())
{
  if (images.size() > max_degree)
    fail(ErrorCode::invalid_argument, "degree exceeds 256");

  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    Point q = images[i];
    if (q >= images.size() || seen[q])
      fail(ErrorCode::invalid_argument, "image list is not a bijection");
    seen[q] = true;
    _images[i] = static_cast<std::uint8_t>(q);
  }
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  Permutation res(*this);
  res *= rhs;
  return res;
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  for (auto &x : _images)
    x = rhs._images[x];
  return *this;
}

Permutation Permutation::inverse() const
{
  Permutation res(degree());
  for (std::size_t i = 0; i < _images.size(); ++i)
    res._images[_images[i]] = static_cast<std::uint8_t>(i);
  return res;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Point Permutation::first_moved() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return static_cast<Point>(i);
  }
  return static_cast<Point>(_images.size());
}

std::vector<Point> Permutation::images() const
{ return {_images.begin(), _images.end()}; }

std::size_t Permutation::fixed_points() const
{
  std::size_t n = 0;
  for (std::size_t i = 0; i < _images.size(); ++i)
    n += _images[i] == i;
  return n;
}

std::uint64_t Permutation::order() const
{
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycles() const
{
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      if (j != i)
        out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t Permutation::hash() const
{
  // FNV-1a
  std::size_t h = 1469598103934665603ull;
  for (auto x : _images) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation parse_permutation(std::string_view text, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  auto syntax = [&](std::string const &why) {
    fail(ErrorCode::parse_error, "malformed cycle notation '" + std::string(text) + "': " + why);
  };

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      syntax("expected '('");
    ++i;

    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')' && cycle.empty()) {
        ++i;
        break;
      }
      std::size_t start = i;
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > 100000)
          syntax("point out of range");
        ++i;
      }
      if (i == start)
        syntax("expected a point");
      if (value == 0 || value > degree)
        fail(ErrorCode::parse_error,
             "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      Point p = static_cast<Point>(value - 1);
      if (used[p])
        fail(ErrorCode::parse_error, "point " + std::to_string(value) + " repeated");
      used[p] = true;
      cycle.push_back(p);

      skip_ws();
      if (i >= text.size())
        syntax("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      syntax("expected ',' or ')'");
    }

    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_ws();
  }

  return Permutation(images);
}

std::vector<Point> image_of_set(std::span<Point const> set, Permutation const &p)
{
  std::vector<Point> out;
  out.reserve(set.size());
  for (Point x : set)
    out.push_back(p[x]);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace ftd

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ftd
{

using Point = unsigned;
using BigInt = boost::multiprecision::cpp_int;

/// Largest supported degree; images are stored as bytes.
inline constexpr std::size_t max_degree = 256;

/// A permutation of {0, ..., n-1} acting on the right: p^(ab) = (p^a)^b.
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree);

  /// Throws ErrorCode::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<Point> const &images);

  static Permutation identity(std::size_t degree)
  { return Permutation(degree); }

  std::size_t degree() const
  { return _images.size(); }

  Point operator[](Point p) const
  { return _images[p]; }

  /// Apply this, then rhs.
  Permutation operator*(Permutation const &rhs) const;
  Permutation &operator*=(Permutation const &rhs);

  Permutation inverse() const;

  bool is_identity() const;

  /// Smallest point not fixed, or degree() for the identity.
  Point first_moved() const;

  std::vector<Point> images() const;

  /// Points fixed by this permutation.
  std::size_t fixed_points() const;

  /// Order as an element of the symmetric group.
  std::uint64_t order() const;

  /// Disjoint-cycle notation with 1-based points; "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

  std::size_t hash() const;

private:
  std::vector<std::uint8_t> _images;
};

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const
  { return p.hash(); }
};

/// Parse 1-based disjoint-cycle notation such as "(1,4)(2,3)".
/// Whitespace is ignored and an empty string yields the identity.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Image of a point set, sorted.
std::vector<Point> image_of_set(std::span<Point const> set, Permutation const &p);

} // namespace ftd

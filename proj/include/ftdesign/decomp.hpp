#pragma once

#include <optional>
#include <string>

#include "ftdesign/design.hpp"

namespace ftd
{

/// Decomposition of a flag-transitive 2-design along an invariant partition into the
/// induced structure D0 on one class and the quotient structure D1 on the classes.
struct CZDecomposition
{
  BlockSystem sigma;
  DesignParams design;

  std::size_t v0 = 0, v1 = 0;
  std::size_t k0 = 0, k1 = 0;
  /// Number of blocks sharing one footprint, so b = b1 * mu.
  std::size_t mu = 0;
  /// Number of blocks sharing one nonempty trace on a class.
  std::size_t trace_multiplicity = 0;

  /// Distinct nonempty traces on the first class, points renumbered 0..v0-1 in class order.
  IncidenceStructure d0;
  /// Distinct footprints, as sets of class indices.
  IncidenceStructure d1;

  std::optional<DesignParams> d0_params, d1_params;
  std::optional<std::size_t> lambda0, lambda1, theta;
};

/// Throws ErrorCode::not_a_design, invalid_argument or not_an_automorphism with a witness
/// when an input or a derived relation fails.
CZDecomposition decompose(IncidenceStructure const &s, PermGroup const &g, BlockSystem const &sigma);

/// b = b1 * mu, and s is symmetric exactly when mu = v / b1.
bool check_symmetric_consistency(CZDecomposition const &d, IncidenceStructure const &s);

enum class BoundsCase
{
  k0_is_two,
  middle_with_2_design,
  k0_is_v0_minus_1,
};

/// Which alternative of the k0 trichotomy the decomposition satisfies, if exactly one holds.
std::optional<BoundsCase> bounds_case(CZDecomposition const &d);

/// "v0 k0 lambda0 r0 b0 theta | v1 k1 lambda1 r1 b1 | mu", with "-" for absent values.
std::string format_row(CZDecomposition const &d);

} // namespace ftd

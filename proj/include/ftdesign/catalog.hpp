#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ftdesign/decomp.hpp"
#include "ftdesign/iso.hpp"

namespace ftd
{

namespace table1
{
/// Cycle notation of the nine generators of the group of order 43008, verbatim.
extern std::array<std::string_view, 9> const generators;
/// The two 28-point base blocks, comma separated, 1-based.
extern std::string_view const base_block_1;
extern std::string_view const base_block_2;
} // namespace table1

/// FNV-1a over the embedded generator and base block strings, one per line.
std::uint64_t table1_checksum();

/// Number of order-64 group types known to carry both base blocks as difference sets.
inline constexpr std::size_t regular_subgroup_types = 14;

struct Claims
{
  std::size_t v = 0, k = 0, lambda = 0;
  std::optional<BigInt> aut_order;
  std::optional<bool> primitive;
  /// Orbit lengths of a point stabilizer, sorted, including the fixed point.
  std::optional<std::vector<std::size_t>> subdegrees;
  /// Acceptable decomposition rows along `system`, as printed by format_row.
  std::vector<std::string> decomposition_rows;
  std::string source;
};

struct CatalogEntry
{
  std::string name;
  IncidenceStructure design;
  PermGroup group;
  Claims claims;
  std::optional<BlockSystem> system;
};

PermGroup table1_group();
/// h = 1 or 2, 0-based points.
Block table1_base_block(int h);

/// Development of a base block under the nine generators, with the 8 x 8 system.
CatalogEntry build_d64(int h);

/// Zero set of x1x2 + x3x4 + x5^2 + x5x6 + x6^2 on GF(2)^6 (point = integer value,
/// x1 most significant).
Block elliptic_quadric_zeros();

/// Translations of GF(2)^n, numbered by integer value.
PermGroup translation_group(unsigned n);

/// Translates of the elliptic quadric, with an imprimitive flag-transitive group fixing
/// the cosets of a totally isotropic 3-space.
CatalogEntry build_s_minus_3();

/// The larger group of translations by all of GF(2)^6 and the full stabilizer of the
/// isotropic 3-space in Sp(6,2), order 688128.
PermGroup s_minus_3_parabolic_group();

/// fano, fano_complement, ag2_3, ag2_3_complement, ag2_3_triangles, ag3_2_planes,
/// ag2_4_lines, pg2_3, pg2_3_complement, pg2_4, pg2_4_complement, pg3_2_complement,
/// pg5_2_hyperplanes, pg5_2_complement, or complete(v,k).
/// Throws ErrorCode::invalid_argument on an unknown name.
CatalogEntry build_classical(std::string_view name);

std::vector<std::string> classical_names();

/// The 2-(16,6,2) designs developed from (16,6,2) difference sets in the abelian groups
/// of order 16, one per isomorphism class, each with its full automorphism group.
std::vector<CatalogEntry> build_biplanes();

/// Every name accepted by build_entry.
std::vector<std::string> catalog_names();

/// d64-1, d64-2, s-minus-3, biplane-1, biplane-2, ... or any classical name.
CatalogEntry build_entry(std::string_view name);

struct ClaimResult
{
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct ClaimsReport
{
  std::string name;
  std::vector<ClaimResult> results;

  bool passed() const;
  std::string to_text() const;
};

struct ClaimOptions
{
  /// Automorphism group orders above this are not recomputed.
  BigInt aut_limit = BigInt(100000000000ULL);
  SearchOptions search;
};

ClaimsReport run_claims(CatalogEntry const &entry, ClaimOptions const &options = {});

/// Parameter sets quoted without construction data: "45-12-3" and "96-20-4".
std::vector<std::string> external_claim_names();

/// Verifies a user-supplied design against a quoted parameter set (symmetric, v, k, lambda).
ClaimsReport check_external_design(IncidenceStructure const &s, std::string_view claim);

} // namespace ftd

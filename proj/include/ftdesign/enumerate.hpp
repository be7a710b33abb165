#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace ftd
{

using Rational = boost::rational<long long>;

/// One admissible parameter set for a flag-transitive point-imprimitive 2-design together
/// with its decomposition (D0 on a class, D1 on the classes). Columns lambda, r, b and
/// theta are coefficients of the free multiplicity mu.
struct ParamRow
{
  /// 2 for k0 = 2 or k0 = v0 - 1, 3 for the middle range, 4 for (v0,k0) = (16,4).
  int table = 0;

  long long v0 = 0, k0 = 0, lambda0 = 0, r0 = 0, b0 = 0;
  std::optional<Rational> theta;
  long long v1 = 0, k1 = 0, lambda1 = 0, r1 = 0, b1 = 0;
  long long v = 0, k = 0;
  Rational lambda, r, b;

  /// mu must be a multiple of this.
  long long mu_mod = 1;
  /// The value of mu making the design symmetric, when admissible.
  std::optional<long long> mu_s;

  std::string group0, group1;
};

/// Same numeric columns; group strings are ignored and an absent theta matches any theta.
bool same_numbers(ParamRow const &a, ParamRow const &b);

/// A row of the symmetric case, mu fixed to mu_s.
struct SymmetricRow
{
  long long v0 = 0, k0 = 0, lambda0 = 0, r0 = 0, b0 = 0, theta = 0;
  long long v1 = 0, k1 = 0, lambda1 = 0, r1 = 0, b1 = 0, mu = 0;
  long long v = 0, k = 0, lambda = 0;
  std::string group0, group1;

  bool same_numbers(SymmetricRow const &o) const;
};

/// k0 = 2: v1 = a(v0-1)+1, k1 = a v0/2 + 1 for 3 <= v0 <= 9, 1 <= a <= 16.
std::vector<ParamRow> enumerate_k0_eq_2(long long vmax = 100);

/// k0 = v0 - 1 >= 3: v = l v0 (v0-1)^2 + v0, k = l v0 (v0-1)(v0-2) + v0 - 1.
std::vector<ParamRow> enumerate_k0_eq_v0_minus_1(long long vmax = 100);

/// 3 <= k0 <= v0 - 2, k1 from the two divisibility relations; rows with (v0,k0) = (16,4)
/// are tagged table 4.
std::vector<ParamRow> enumerate_middle_k0(long long vmax = 100);

/// All three enumerators, in canonical order.
std::vector<ParamRow> enumerate_all(long long vmax = 100);

/// Rows with an admissible mu_s, evaluated at mu = mu_s.
std::vector<SymmetricRow> symmetric_filter(std::vector<ParamRow> const &rows);

/// Sort by (v0, k0, lambda0, v1, k1, lambda1, group strings).
void sort_canonical(std::vector<ParamRow> &rows);
void sort_canonical(std::vector<SymmetricRow> &rows);

/// "4mu/3", "mu/2", "36mu", "mu".
std::string format_mu(Rational const &coefficient);
Rational parse_mu(std::string const &text);

/// Numeric columns only, one header line then one line per row.
std::string to_csv(std::vector<ParamRow> const &rows);
std::string to_csv(std::vector<SymmetricRow> const &rows);

/// Aligned text including the group columns.
std::string to_table(std::vector<ParamRow> const &rows);
std::string to_table(std::vector<SymmetricRow> const &rows);

/// Inverse of to_csv. Throws ErrorCode::parse_error on malformed input.
std::vector<ParamRow> parse_param_csv(std::string const &text, int table);
std::vector<SymmetricRow> parse_symmetric_csv(std::string const &text);

} // namespace ftd

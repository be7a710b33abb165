#include "ftdesign/enumerate.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <tuple>

#include "ftdesign/error.hpp"

namespace ftd
{

namespace
{

/// A flag-transitive 2-(v,k,lambda) design known to exist, with the groups that act on it.
struct KnownDesign
{
  long long v, k, lambda;
  char const *groups;
};

// Designs that can occur on a class.
constexpr KnownDesign class_designs[] = {
  {3, 2, 1, "S3"},
  {4, 2, 1, "A4,S4"},
  {5, 2, 1, "AGL1(5),A5,S5"},
  {6, 2, 1, "A5,S5,A6,S6"},
  {7, 2, 1, "AGL1(7),PSL2(7),A7,S7"},
  {8, 2, 1, "AGL1(8),AGammaL1(8),AGL3(2),PSL2(7),PGL2(7),A8,S8"},
  {4, 3, 2, "A4,S4"},
  {5, 4, 3, "AGL1(5),A5,S5"},
  {5, 3, 3, "A5,S5"},
  {6, 3, 2, "A5"},
  {6, 3, 4, "S5,A6,S6"},
  {6, 4, 6, "S5,A6,S6"},
  {7, 3, 1, "7:3,PSL2(7)"},
  {7, 3, 2, "AGL1(7)"},
  {7, 3, 4, "PSL2(7)"},
  {7, 3, 5, "A7,S7"},
  {7, 4, 2, "PSL2(7)"},
  {7, 4, 10, "A7,S7"},
  {8, 4, 3, "AGL1(8),AGammaL1(8),AGL3(2),PSL2(7)"},
  {8, 4, 6, "PGL2(7)"},
  {8, 4, 9, "PSL2(7),PGL2(7)"},
  {8, 4, 12, "AGL3(2)"},
  {8, 4, 15, "A8,S8"},
  {9, 3, 1, "<=AGL2(3)"},
  {9, 3, 6, "ASL2(3),AGL2(3)"},
  {9, 3, 7, "PSL2(8),PGammaL2(8),A9,S9"},
  {9, 5, 35, "A9,S9"},
  {10, 4, 2, "S5,A6,S6"},
  {10, 4, 4, "M10,PGL2(9),PGammaL2(9)"},
  {10, 4, 24, "M10,PGL2(9),PGammaL2(9)"},
  {10, 4, 28, "A10,S10"},
  {16, 4, 1, "2^4:5<=G<=AGammaL2(4)"},
  {16, 4, 2, "2^4:(5:4),ASL2(4),ASigmaL2(4)"},
  {16, 4, 3, "AGL1(16),AGL1(16):2"},
  {16, 4, 3, "ASL2(4),ASigmaL2(4),ASp4(2),AGammaSp4(2)"},
  {16, 4, 4, "ASp4(2)"},
  {16, 4, 6, "2^4:(15:4),AGL2(4),AGammaL2(4)"},
  {16, 4, 7, "2^4:A7,AGL4(2)"},
  {16, 4, 12, "2^4:(15:4)"},
  {16, 4, 12, "ASigmaL2(4),ASp4(2)"},
  {16, 4, 36, "AGammaL2(4)"},
  {16, 4, 84, "2^4:A7,AGL4(2)"},
  {16, 4, 91, "A16,S16"},
};

// Designs that can occur on the set of classes.
constexpr KnownDesign quotient_designs[] = {
  {5, 4, 3, "AGL1(5),A5,S5"},
  {9, 7, 21, "PSL2(8),PGammaL2(8),A9,S9"},
  {13, 10, 165, "A13,S13"},
  {17, 13, 1365, "A17,S17"},
  {21, 16, 12, "PSL3(4):e,e|6"},
  {21, 16, 11628, "A21,S21"},
  {25, 19, 100947, "A25,S25"},
  {29, 22, 888030, "A29,S29"},
  {33, 25, 7888725, "A33,S33"},
  {4, 3, 2, "A4,S4"},
  {7, 5, 10, "A7,S7"},
  {10, 7, 56, "A10,S10"},
  {13, 9, 6, "PSL3(3)"},
  {13, 9, 330, "A13,S13"},
  {16, 11, 2002, "A16,S16"},
  {19, 13, 12376, "A19,S19"},
  {22, 15, 77520, "A22,S22"},
  {22, 15, 80, "M22"},
  {22, 15, 160, "M22:2"},
  {22, 15, 560, "M22,M22:2,A22,S22"},
  {9, 6, 5, "<=AGL2(3)"},
  {9, 6, 30, "ASL2(3),AGL2(3)"},
  {9, 6, 35, "PSL2(8),PGammaL2(8),A9,S9"},
  {17, 11, 5005, "A17,S17"},
  {6, 4, 6, "S5,A6,S6"},
  {11, 7, 126, "A11,S11"},
  {16, 10, 3003, "A16,S16"},
  {13, 8, 42, "PSL3(3)"},
  {13, 8, 462, "A13,S13"},
  {8, 5, 20, "A8,S8"},
  {10, 9, 8, "PSL2(9),PGL2(9),PSigmaL2(9),M10,PGammaL2(9),A10,S10"},
  {19, 17, 136, "A19,S19"},
  {17, 16, 15, "AGL1(17),A17,S17,PSL2(16):2^e,0<=e<=2"},
  {7, 6, 5, "AGL1(7),PSL2(7),A7,S7"},
  {13, 11, 55, "A13,S13"},
  {19, 16, 680, "A19,S19"},
  {11, 9, 36, "M11,A11,S11"},
  {16, 13, 364, "A16,S16"},
  {11, 10, 9, "AGL1(11),PSL2(11),M11,A11,S11"},
  {10, 8, 28, "PGL2(9),M10,PGammaL2(9),A10,S10"},
  {9, 8, 7, "PSL2(8),PGammaL2(8),A9,S9,<=AGL2(3)"},
  {6, 5, 4, "A5,S5,A6,S6"},
  {8, 7, 6, "AGL1(8),AGammaL1(8),AGL2(3),PSL2(7),PGL2(7),A8,S8"},
};

template<std::size_t N>
std::vector<KnownDesign> known(KnownDesign const (&table)[N], long long v, long long k)
{
  std::vector<KnownDesign> out;
  for (auto const &d : table) {
    if (d.v == v && d.k == k)
      out.push_back(d);
  }
  return out;
}

void check_vmax(long long vmax)
{
  if (vmax < 2 || vmax > 100)
    fail(ErrorCode::invalid_argument, "vmax must lie in 2..100");
}

/// Fill in the derived columns from (v0,k0,lambda0,v1,k1,lambda1).
ParamRow derive(int table, KnownDesign const &d0, KnownDesign const &d1)
{
  ParamRow row;
  row.table = table;
  row.v0 = d0.v;
  row.k0 = d0.k;
  row.lambda0 = d0.lambda;
  row.r0 = d0.lambda * (d0.v - 1) / (d0.k - 1);
  row.b0 = row.r0 * d0.v / d0.k;
  row.group0 = d0.groups;

  row.v1 = d1.v;
  row.k1 = d1.k;
  row.lambda1 = d1.lambda;
  row.r1 = d1.lambda * (d1.v - 1) / (d1.k - 1);
  row.b1 = row.r1 * d1.v / d1.k;
  row.group1 = d1.groups;

  row.v = row.v0 * row.v1;
  row.k = row.k0 * row.k1;
  row.lambda = Rational(row.lambda1 * row.k0 * row.k0, row.v0 * row.v0);
  row.r = row.lambda * Rational(row.v - 1, row.k - 1);
  row.b = Rational(row.b1);
  row.theta = row.lambda / row.lambda0;

  if (row.b * row.k != row.r * row.v)
    fail(ErrorCode::internal, "bk differs from vr");

  row.mu_mod = std::lcm(std::lcm(row.theta->denominator(), row.lambda.denominator()),
                        row.r.denominator());
  if (row.v % row.b1 == 0 && (row.v / row.b1) % row.mu_mod == 0)
    row.mu_s = row.v / row.b1;
  return row;
}

void join(std::vector<ParamRow> &out, int table, long long v0, long long k0, long long v1,
          long long k1)
{
  for (auto const &d0 : known(class_designs, v0, k0)) {
    for (auto const &d1 : known(quotient_designs, v1, k1))
      out.push_back(derive(table, d0, d1));
  }
}

} // namespace

bool same_numbers(ParamRow const &a, ParamRow const &b)
{
  auto key = [](ParamRow const &x) {
    return std::tuple(x.v0, x.k0, x.lambda0, x.r0, x.b0, x.v1, x.k1, x.lambda1, x.r1, x.b1, x.v,
                      x.k, x.lambda, x.r, x.b, x.mu_mod, x.mu_s);
  };
  if (key(a) != key(b))
    return false;
  return !a.theta || !b.theta || *a.theta == *b.theta;
}

bool SymmetricRow::same_numbers(SymmetricRow const &o) const
{
  auto key = [](SymmetricRow const &x) {
    return std::tuple(x.v0, x.k0, x.lambda0, x.r0, x.b0, x.theta, x.v1, x.k1, x.lambda1, x.r1,
                      x.b1, x.mu, x.v, x.k, x.lambda);
  };
  return key(*this) == key(o);
}

std::vector<ParamRow> enumerate_k0_eq_2(long long vmax)
{
  check_vmax(vmax);
  std::vector<ParamRow> out;
  for (long long v0 = 3; v0 <= 9; ++v0) {
    for (long long a = 1; a <= 16; ++a) {
      if (a * v0 % 2 != 0)
        continue;
      long long v1 = a * (v0 - 1) + 1;
      long long k1 = a * v0 / 2 + 1;
      if (v0 * v1 >= vmax)
        continue;
      join(out, 2, v0, 2, v1, k1);
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<ParamRow> enumerate_k0_eq_v0_minus_1(long long vmax)
{
  check_vmax(vmax);
  std::vector<ParamRow> out;
  for (long long v0 = 4; v0 * v0 < vmax; ++v0) {
    for (long long l = 1; l * v0 * (v0 - 1) * (v0 - 1) + v0 < vmax; ++l) {
      long long v1 = l * (v0 - 1) * (v0 - 1) + 1;
      long long k1 = l * v0 * (v0 - 2) + 1;
      join(out, 2, v0, v0 - 1, v1, k1);
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<ParamRow> enumerate_middle_k0(long long vmax)
{
  check_vmax(vmax);
  std::vector<ParamRow> out;
  for (long long v0 = 5; v0 < vmax; ++v0) {
    for (long long k0 = 3; k0 + 2 <= v0; ++k0) {
      bool const coprime = std::gcd(v0, k0) == 1;
      for (long long v1 = 2; v0 * v1 < vmax; ++v1) {
        long long num = -k0 + v0 - v0 * v1 + k0 * v0 * v1;
        long long den = k0 * (v0 - 1);
        if (num <= 0 || num % den != 0)
          continue;
        long long k1 = num / den;
        if (k1 < 2 || k1 >= v1)
          continue;

        bool admissible;
        if (coprime)
          admissible = v0 < v1;
        else if (v0 < v1)
          admissible = true;
        else
          admissible = k0 < k1 && v1 >= 5 && v1 <= 9;
        if (!admissible)
          continue;

        join(out, v0 == 16 && k0 == 4 ? 4 : 3, v0, k0, v1, k1);
      }
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<ParamRow> enumerate_all(long long vmax)
{
  auto out = enumerate_k0_eq_2(vmax);
  for (auto &&part : {enumerate_k0_eq_v0_minus_1(vmax), enumerate_middle_k0(vmax)})
    out.insert(out.end(), part.begin(), part.end());
  sort_canonical(out);
  return out;
}

std::vector<SymmetricRow> symmetric_filter(std::vector<ParamRow> const &rows)
{
  std::vector<SymmetricRow> out;
  for (auto const &row : rows) {
    if (!row.mu_s)
      continue;
    long long mu = *row.mu_s;
    auto at = [&](Rational const &c) {
      Rational x = c * mu;
      if (x.denominator() != 1)
        fail(ErrorCode::internal, "mu_s leaves a fractional parameter");
      return x.numerator();
    };

    SymmetricRow s;
    s.v0 = row.v0;
    s.k0 = row.k0;
    s.lambda0 = row.lambda0;
    s.r0 = row.r0;
    s.b0 = row.b0;
    s.theta = at(row.theta.value_or(row.lambda / row.lambda0));
    s.v1 = row.v1;
    s.k1 = row.k1;
    s.lambda1 = row.lambda1;
    s.r1 = row.r1;
    s.b1 = row.b1;
    s.mu = mu;
    s.v = row.v;
    s.k = row.k;
    s.lambda = at(row.lambda);
    s.group0 = row.group0;
    s.group1 = row.group1;

    if (at(row.b) != row.v || at(row.r) != row.k)
      fail(ErrorCode::internal, "symmetric row with b != v");
    out.push_back(std::move(s));
  }
  sort_canonical(out);
  return out;
}

void sort_canonical(std::vector<ParamRow> &rows)
{
  std::stable_sort(rows.begin(), rows.end(), [](ParamRow const &a, ParamRow const &b) {
    return std::tie(a.v0, a.k0, a.lambda0, a.v1, a.k1, a.lambda1, a.group0, a.group1) <
           std::tie(b.v0, b.k0, b.lambda0, b.v1, b.k1, b.lambda1, b.group0, b.group1);
  });
}

void sort_canonical(std::vector<SymmetricRow> &rows)
{
  std::stable_sort(rows.begin(), rows.end(), [](SymmetricRow const &a, SymmetricRow const &b) {
    return std::tie(a.v0, a.k0, a.lambda0, a.v1, a.k1, a.lambda1, a.group0, a.group1) <
           std::tie(b.v0, b.k0, b.lambda0, b.v1, b.k1, b.lambda1, b.group0, b.group1);
  });
}

std::string format_mu(Rational const &c)
{
  std::string out;
  if (c.numerator() != 1)
    out += std::to_string(c.numerator());
  out += "mu";
  if (c.denominator() != 1)
    out += "/" + std::to_string(c.denominator());
  return out;
}

Rational parse_mu(std::string const &text)
{
  auto pos = text.find("mu");
  if (pos == std::string::npos)
    fail(ErrorCode::parse_error, "expected a multiple of mu: '" + text + "'");
  try {
    long long num = pos == 0 ? 1 : std::stoll(text.substr(0, pos));
    long long den = 1;
    auto rest = text.substr(pos + 2);
    if (!rest.empty()) {
      if (rest.front() != '/')
        fail(ErrorCode::parse_error, "expected '/' in '" + text + "'");
      den = std::stoll(rest.substr(1));
    }
    return Rational(num, den);
  } catch (std::logic_error const &) {
    fail(ErrorCode::parse_error, "malformed multiple of mu: '" + text + "'");
  }
}

namespace
{

char const param_header[] = "v0,k0,lambda0,r0,b0,theta,v1,k1,lambda1,r1,b1,v,k,lambda,r,b,mu_mod,mu_s";
char const symmetric_header[] = "v0,k0,lambda0,r0,b0,theta,v1,k1,lambda1,r1,b1,mu,v,k,lambda";

std::vector<std::string> split(std::string const &line, char sep)
{
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep))
    out.push_back(field);
  if (!line.empty() && line.back() == sep)
    out.emplace_back();
  return out;
}

std::vector<std::vector<std::string>> csv_records(std::string const &text, char const *header,
                                                  std::size_t columns)
{
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != header)
    fail(ErrorCode::parse_error, std::string("expected header '") + header + "'");
  std::vector<std::vector<std::string>> out;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    auto fields = split(line, ',');
    if (fields.size() != columns)
      fail(ErrorCode::parse_error, "expected " + std::to_string(columns) + " fields in '" + line +
                                   "'");
    out.push_back(std::move(fields));
  }
  return out;
}

long long integer(std::string const &s)
{
  try {
    std::size_t used = 0;
    long long x = std::stoll(s, &used);
    if (used != s.size())
      throw std::invalid_argument(s);
    return x;
  } catch (std::logic_error const &) {
    fail(ErrorCode::parse_error, "expected an integer, got '" + s + "'");
  }
}

} // namespace

std::string to_csv(std::vector<ParamRow> const &rows)
{
  std::ostringstream out;
  out << param_header << '\n';
  for (auto const &r : rows) {
    out << r.v0 << ',' << r.k0 << ',' << r.lambda0 << ',' << r.r0 << ',' << r.b0 << ','
        << (r.theta ? format_mu(*r.theta) : "") << ',' << r.v1 << ',' << r.k1 << ',' << r.lambda1
        << ',' << r.r1 << ',' << r.b1 << ',' << r.v << ',' << r.k << ',' << format_mu(r.lambda)
        << ',' << format_mu(r.r) << ',' << format_mu(r.b) << ',' << r.mu_mod << ','
        << (r.mu_s ? std::to_string(*r.mu_s) : "-") << '\n';
  }
  return out.str();
}

std::string to_csv(std::vector<SymmetricRow> const &rows)
{
  std::ostringstream out;
  out << symmetric_header << '\n';
  for (auto const &r : rows) {
    out << r.v0 << ',' << r.k0 << ',' << r.lambda0 << ',' << r.r0 << ',' << r.b0 << ',' << r.theta
        << ',' << r.v1 << ',' << r.k1 << ',' << r.lambda1 << ',' << r.r1 << ',' << r.b1 << ','
        << r.mu << ',' << r.v << ',' << r.k << ',' << r.lambda << '\n';
  }
  return out.str();
}

std::vector<ParamRow> parse_param_csv(std::string const &text, int table)
{
  std::vector<ParamRow> rows;
  for (auto const &f : csv_records(text, param_header, 18)) {
    ParamRow r;
    r.table = table;
    r.v0 = integer(f[0]);
    r.k0 = integer(f[1]);
    r.lambda0 = integer(f[2]);
    r.r0 = integer(f[3]);
    r.b0 = integer(f[4]);
    if (!f[5].empty())
      r.theta = parse_mu(f[5]);
    r.v1 = integer(f[6]);
    r.k1 = integer(f[7]);
    r.lambda1 = integer(f[8]);
    r.r1 = integer(f[9]);
    r.b1 = integer(f[10]);
    r.v = integer(f[11]);
    r.k = integer(f[12]);
    r.lambda = parse_mu(f[13]);
    r.r = parse_mu(f[14]);
    r.b = parse_mu(f[15]);
    r.mu_mod = integer(f[16]);
    if (f[17] != "-")
      r.mu_s = integer(f[17]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SymmetricRow> parse_symmetric_csv(std::string const &text)
{
  std::vector<SymmetricRow> rows;
  for (auto const &f : csv_records(text, symmetric_header, 15)) {
    SymmetricRow r;
    long long *cols[] = {&r.v0, &r.k0, &r.lambda0, &r.r0, &r.b0, &r.theta, &r.v1, &r.k1,
                         &r.lambda1, &r.r1, &r.b1, &r.mu, &r.v, &r.k, &r.lambda};
    for (std::size_t i = 0; i < 15; ++i)
      *cols[i] = integer(f[i]);
    rows.push_back(r);
  }
  return rows;
}

std::string to_table(std::vector<ParamRow> const &rows)
{
  std::ostringstream out;
  out << std::left << std::setw(5) << "tab" << std::setw(24) << "D0 (v0 k0 l0 r0 b0)"
      << std::setw(10) << "theta" << std::setw(32) << "D1 (v1 k1 l1 r1 b1)" << std::setw(8)
      << "v k" << std::setw(14) << "lambda" << std::setw(14) << "r" << std::setw(12) << "b"
      << std::setw(8) << "mu%" << std::setw(6) << "mu_S" << "groups\n";
  for (auto const &r : rows) {
    std::ostringstream d0, d1, vk;
    d0 << r.v0 << ' ' << r.k0 << ' ' << r.lambda0 << ' ' << r.r0 << ' ' << r.b0;
    d1 << r.v1 << ' ' << r.k1 << ' ' << r.lambda1 << ' ' << r.r1 << ' ' << r.b1;
    vk << r.v << ' ' << r.k;
    out << std::setw(5) << r.table << std::setw(24) << d0.str() << std::setw(10)
        << (r.theta ? format_mu(*r.theta) : "") << std::setw(32) << d1.str() << std::setw(8)
        << vk.str() << std::setw(14) << format_mu(r.lambda) << std::setw(14) << format_mu(r.r)
        << std::setw(12) << format_mu(r.b) << std::setw(8) << r.mu_mod << std::setw(6)
        << (r.mu_s ? std::to_string(*r.mu_s) : "-") << r.group0 << " | " << r.group1 << '\n';
  }
  return out.str();
}

std::string to_table(std::vector<SymmetricRow> const &rows)
{
  std::ostringstream out;
  out << std::left << std::setw(24) << "D0 (v0 k0 l0 r0 b0)" << std::setw(7) << "theta"
      << std::setw(24) << "D1 (v1 k1 l1 r1 b1)" << std::setw(5) << "mu" << std::setw(14)
      << "(v,k,lambda)" << "groups\n";
  for (auto const &r : rows) {
    std::ostringstream d0, d1, vkl;
    d0 << r.v0 << ' ' << r.k0 << ' ' << r.lambda0 << ' ' << r.r0 << ' ' << r.b0;
    d1 << r.v1 << ' ' << r.k1 << ' ' << r.lambda1 << ' ' << r.r1 << ' ' << r.b1;
    vkl << '(' << r.v << ',' << r.k << ',' << r.lambda << ')';
    out << std::setw(24) << d0.str() << std::setw(7) << r.theta << std::setw(24) << d1.str()
        << std::setw(5) << r.mu << std::setw(14) << vkl.str() << r.group0 << " | " << r.group1
        << '\n';
  }
  return out.str();
}

} // namespace ftd

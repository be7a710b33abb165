#include "ftdesign/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ftdesign/error.hpp"

namespace ftd
{

namespace
{

constexpr std::size_t max_geometry_points = 100;

using Vec = std::vector<unsigned>;

std::size_t ipow(std::size_t base, unsigned e)
{
  std::size_t r = 1;
  while (e-- > 0)
    r *= base;
  return r;
}

void check_field(unsigned q)
{
  if (q < 2 || q > 4)
    fail(ErrorCode::invalid_argument, "field order " + std::to_string(q) + " is not 2, 3 or 4");
}

Vec add(Field const &f, Vec a, Vec const &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = f.add(a[i], b[i]);
  return a;
}

Vec scale(Field const &f, unsigned c, Vec a)
{
  for (auto &x : a)
    x = f.mul(c, x);
  return a;
}

Vec times(Field const &f, Vec const &x, Matrix const &a)
{
  Vec y(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < x.size(); ++j)
      y[j] = f.add(y[j], f.mul(x[i], a[i][j]));
  }
  return y;
}

Vec normalized(Field const &f, Vec x)
{
  for (unsigned c : x) {
    if (c != 0)
      return scale(f, f.inv(c), std::move(x));
  }
  return x;
}

/// All vectors of the span, as encoded indices.
std::set<std::size_t> span(Field const &f, std::vector<Vec> const &basis, unsigned n)
{
  std::set<std::size_t> out{0};
  for (auto const &b : basis) {
    std::set<std::size_t> next;
    for (std::size_t s : out) {
      Vec x = decode_vector(s, n, f.order());
      for (unsigned c = 0; c < f.order(); ++c)
        next.insert(encode_vector(add(f, x, scale(f, c, b)), f.order()));
    }
    out = std::move(next);
  }
  return out;
}

/// Every d-dimensional subspace of GF(q)^n.
std::set<std::vector<std::size_t>> subspaces(Field const &f, unsigned n, unsigned d)
{
  std::size_t const total = ipow(f.order(), n);
  std::size_t const want = ipow(f.order(), d);
  std::set<std::vector<std::size_t>> out;

  std::vector<Vec> basis;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (basis.size() == d) {
      auto s = span(f, basis, n);
      if (s.size() == want)
        out.insert({s.begin(), s.end()});
      return;
    }
    for (std::size_t i = from; i < total; ++i) {
      basis.push_back(decode_vector(i, n, f.order()));
      rec(i + 1);
      basis.pop_back();
    }
  };
  rec(1);
  return out;
}

Matrix identity_matrix(unsigned n)
{
  Matrix m(n, std::vector<unsigned>(n, 0));
  for (unsigned i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

} // namespace

Field const &Field::get(unsigned q)
{
  check_field(q);
  static Field const fields[] = {Field(2), Field(3), Field(4)};
  return fields[q - 2];
}

Field::Field(unsigned q)
: _q(q)
{
  // GF(4) multiplication via logarithms: 1 = w^0, 2 = w^1, 3 = w^2.
  unsigned const log4[] = {0, 0, 1, 2};
  unsigned const exp4[] = {1, 2, 3};
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (q == 3) {
        _add[a][b] = (a + b) % 3;
        _mul[a][b] = (a * b) % 3;
      } else {
        _add[a][b] = a ^ b;
        if (q == 2 || a == 0 || b == 0)
          _mul[a][b] = q == 2 ? (a & b) : 0;
        else
          _mul[a][b] = exp4[(log4[a] + log4[b]) % 3];
      }
    }
  }
}

unsigned Field::neg(unsigned a) const
{
  for (unsigned b = 0; b < _q; ++b) {
    if (_add[a][b] == 0)
      return b;
  }
  fail(ErrorCode::internal, "field element without negative");
}

unsigned Field::inv(unsigned a) const
{
  for (unsigned b = 1; b < _q; ++b) {
    if (_mul[a][b] == 1)
      return b;
  }
  fail(ErrorCode::invalid_argument, "zero has no inverse");
}

std::vector<unsigned> decode_vector(std::size_t index, unsigned n, unsigned q)
{
  Vec x(n);
  for (unsigned i = n; i-- > 0;) {
    x[i] = static_cast<unsigned>(index % q);
    index /= q;
  }
  return x;
}

std::size_t encode_vector(std::vector<unsigned> const &x, unsigned q)
{
  std::size_t index = 0;
  for (unsigned c : x)
    index = index * q + c;
  return index;
}

std::vector<Matrix> general_linear_generators(unsigned n, unsigned q)
{
  Field const &f = Field::get(q);
  std::vector<Matrix> gens;

  Matrix shift(n, std::vector<unsigned>(n, 0));
  for (unsigned i = 0; i < n; ++i)
    shift[i][(i + 1) % n] = 1;
  gens.push_back(shift);

  if (n >= 2) {
    Matrix t = identity_matrix(n);
    t[0][1] = 1;
    gens.push_back(t);
  }

  if (q > 2) {
    Matrix d = identity_matrix(n);
    d[0][0] = f.primitive();
    gens.push_back(d);
  }
  return gens;
}

BigInt general_linear_order(unsigned n, unsigned q)
{
  BigInt qn = 1;
  for (unsigned i = 0; i < n; ++i)
    qn *= q;
  BigInt order = 1, qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

GeometryDesign build_affine_design(unsigned dim, unsigned q, unsigned block_dim)
{
  check_field(q);
  if (block_dim < 1 || block_dim >= dim)
    fail(ErrorCode::invalid_argument, "block dimension must lie in 1..dim-1");
  if (q == 2 && block_dim == 1)
    fail(ErrorCode::invalid_argument, "affine lines over GF(2) have two points");
  std::size_t const v = ipow(q, dim);
  if (v > max_geometry_points)
    fail(ErrorCode::invalid_argument, "affine space has more than 100 points");

  Field const &f = Field::get(q);

  std::set<Block> blocks;
  for (auto const &sub : subspaces(f, dim, block_dim)) {
    for (std::size_t a = 0; a < v; ++a) {
      Vec av = decode_vector(a, dim, q);
      Block coset;
      for (std::size_t s : sub)
        coset.push_back(static_cast<Point>(encode_vector(add(f, decode_vector(s, dim, q), av), q)));
      std::sort(coset.begin(), coset.end());
      blocks.insert(std::move(coset));
    }
  }

  std::vector<Permutation> gens;
  auto make = [&](auto const &map) {
    std::vector<Point> images(v);
    for (std::size_t x = 0; x < v; ++x)
      images[x] = static_cast<Point>(encode_vector(map(decode_vector(x, dim, q)), q));
    gens.emplace_back(images);
  };

  for (unsigned i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    make([&](Vec const &x) { return add(f, x, e); });
  }
  for (auto const &a : general_linear_generators(dim, q))
    make([&](Vec const &x) { return times(f, x, a); });
  if (q == 4) {
    make([&](Vec x) {
      for (auto &c : x)
        c = f.frobenius(c);
      return x;
    });
  }

  return {block_dim == 1 ? "AG-lines" : "AG-planes",
          dim, q, IncidenceStructure(v, {blocks.begin(), blocks.end()}),
          PermGroup(v, std::move(gens))};
}

GeometryDesign build_projective_design(unsigned dim, unsigned q, bool hyperplanes)
{
  check_field(q);
  if (dim < 2)
    fail(ErrorCode::invalid_argument, "projective dimension must be at least 2");
  unsigned const n = dim + 1;
  std::size_t const total = ipow(q, n);
  if ((total - 1) / (q - 1) > max_geometry_points)
    fail(ErrorCode::invalid_argument, "projective space has more than 100 points");

  Field const &f = Field::get(q);

  std::vector<Vec> points;
  std::vector<long> point_of(total, -1);
  for (std::size_t i = 1; i < total; ++i) {
    Vec x = decode_vector(i, n, q);
    if (normalized(f, x) == x) {
      point_of[i] = static_cast<long>(points.size());
      points.push_back(std::move(x));
    }
  }
  auto index_of = [&](Vec const &x) {
    return static_cast<Point>(point_of[encode_vector(normalized(f, x), q)]);
  };
  std::size_t const v = points.size();

  std::set<Block> blocks;
  if (hyperplanes) {
    for (auto const &a : points) {
      Block h;
      for (std::size_t p = 0; p < v; ++p) {
        unsigned dot = 0;
        for (unsigned i = 0; i < n; ++i)
          dot = f.add(dot, f.mul(a[i], points[p][i]));
        if (dot == 0)
          h.push_back(static_cast<Point>(p));
      }
      blocks.insert(std::move(h));
    }
  } else {
    for (std::size_t a = 0; a < v; ++a) {
      for (std::size_t b = a + 1; b < v; ++b) {
        std::set<Point> line;
        for (std::size_t s : span(f, {points[a], points[b]}, n)) {
          if (s != 0)
            line.insert(index_of(decode_vector(s, n, q)));
        }
        blocks.insert({line.begin(), line.end()});
      }
    }
  }

  std::vector<Permutation> gens;
  auto make = [&](auto const &map) {
    std::vector<Point> images(v);
    for (std::size_t x = 0; x < v; ++x)
      images[x] = index_of(map(points[x]));
    gens.emplace_back(images);
  };
  for (auto const &a : general_linear_generators(n, q))
    make([&](Vec const &x) { return times(f, x, a); });
  if (q == 4) {
    make([&](Vec x) {
      for (auto &c : x)
        c = f.frobenius(c);
      return x;
    });
  }

  return {hyperplanes ? "PG-hyperplanes" : "PG-lines", dim, q,
          IncidenceStructure(v, {blocks.begin(), blocks.end()}), PermGroup(v, std::move(gens))};
}

namespace
{

/// GF(2)^(2n) vector value -> GF(4)^n coordinates, and back.
Vec to_gf4(std::size_t value, unsigned n)
{
  Vec bits = decode_vector(value, 2 * n, 2);
  Vec y(n);
  for (unsigned i = 0; i < n; ++i)
    y[i] = bits[2 * i] ^ (bits[2 * i + 1] << 1);
  return y;
}

std::size_t from_gf4(Vec const &y)
{
  Vec bits;
  for (unsigned c : y) {
    bits.push_back(c & 1u);
    bits.push_back(c >> 1);
  }
  return encode_vector(bits, 2);
}

} // namespace

PermGroup gf4_semilinear_action(unsigned n)
{
  if (n < 1 || n > 3)
    fail(ErrorCode::invalid_argument, "semilinear action supported for n = 1, 2, 3");
  Field const &f = Field::get(4);
  std::size_t const v = ipow(4, n) - 1;

  std::vector<Permutation> gens;
  auto make = [&](auto const &map) {
    std::vector<Point> images(v);
    for (std::size_t x = 0; x < v; ++x)
      images[x] = static_cast<Point>(from_gf4(map(to_gf4(x + 1, n))) - 1);
    gens.emplace_back(images);
  };
  for (auto const &a : general_linear_generators(n, 4))
    make([&](Vec const &y) { return times(f, y, a); });
  make([&](Vec y) {
    for (auto &c : y)
      c = f.frobenius(c);
    return y;
  });
  return PermGroup(v, std::move(gens));
}

BlockSystem gf4_spread(unsigned n)
{
  if (n < 1 || n > 3)
    fail(ErrorCode::invalid_argument, "spread supported for n = 1, 2, 3");
  Field const &f = Field::get(4);
  std::size_t const v = ipow(4, n) - 1;
  std::set<std::vector<Point>> classes;
  for (std::size_t x = 0; x < v; ++x) {
    Vec y = to_gf4(x + 1, n);
    std::vector<Point> cls;
    for (unsigned c = 1; c < 4; ++c)
      cls.push_back(static_cast<Point>(from_gf4(scale(f, c, y)) - 1));
    std::sort(cls.begin(), cls.end());
    classes.insert(std::move(cls));
  }
  return BlockSystem::from_classes({classes.begin(), classes.end()}, v);
}

} // namespace ftd

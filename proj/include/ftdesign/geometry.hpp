#pragma once

#include <array>
#include <string>
#include <vector>

#include "ftdesign/design.hpp"

namespace ftd
{

/// Addition and multiplication tables of GF(q), q in {2,3,4}.
/// For GF(4) the elements are 0, 1, w, w^2 = w + 1 with w a root of x^2 + x + 1.
class Field
{
public:
  static Field const &get(unsigned q);

  unsigned order() const
  { return _q; }

  unsigned add(unsigned a, unsigned b) const
  { return _add[a][b]; }

  unsigned mul(unsigned a, unsigned b) const
  { return _mul[a][b]; }

  unsigned neg(unsigned a) const;
  unsigned inv(unsigned a) const;

  /// A generator of the multiplicative group.
  unsigned primitive() const
  { return _q == 2 ? 1 : 2; }

  /// x -> x^2 for q = 4, identity otherwise.
  unsigned frobenius(unsigned a) const
  { return _q == 4 && a >= 2 ? 5 - a : a; }

private:
  explicit Field(unsigned q);

  unsigned _q;
  std::array<std::array<unsigned, 4>, 4> _add{}, _mul{};
};

/// n x n matrix over GF(q), row major.
using Matrix = std::vector<std::vector<unsigned>>;

struct GeometryDesign
{
  std::string kind;
  unsigned dim;
  unsigned q;
  IncidenceStructure structure;
  PermGroup group;
};

/// Vectors of GF(q)^n numbered in lexicographic order, coordinate 0 most significant.
std::vector<unsigned> decode_vector(std::size_t index, unsigned n, unsigned q);
std::size_t encode_vector(std::vector<unsigned> const &x, unsigned q);

/// Generators of GL(n,q): cyclic coordinate shift, the transvection e0 -> e0 + e1,
/// and diag(w,1,...,1) when q > 2.
std::vector<Matrix> general_linear_generators(unsigned n, unsigned q);

/// Order of GL(n,q) from the product formula.
BigInt general_linear_order(unsigned n, unsigned q);

/// Points are the vectors of GF(q)^dim; blocks are the cosets of block_dim-subspaces.
/// The group is generated by unit translations, GL(dim,q) and the Frobenius map for q = 4.
GeometryDesign build_affine_design(unsigned dim, unsigned q, unsigned block_dim);

/// Points are the 1-subspaces of GF(q)^(dim+1), each represented by its vector whose first
/// nonzero coordinate is 1; blocks are lines or hyperplanes.
GeometryDesign build_projective_design(unsigned dim, unsigned q, bool hyperplanes);

/// GammaL(n,4) acting on the nonzero vectors of GF(2)^(2n), numbered as in
/// build_projective_design(2n-1, 2, ...): point i is the vector with integer value i + 1.
/// Coordinates (x_{2i}, x_{2i+1}) are read as the GF(4) coordinate x_{2i} + w x_{2i+1}.
PermGroup gf4_semilinear_action(unsigned n);

/// The F4-scalar classes {y, wy, w^2 y} of the action above, a G-invariant partition.
BlockSystem gf4_spread(unsigned n);

} // namespace ftd

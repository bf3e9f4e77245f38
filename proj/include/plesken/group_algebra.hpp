#ifndef PLESKEN_GROUP_ALGEBRA_HPP
#define PLESKEN_GROUP_ALGEBRA_HPP

#include "plesken/group.hpp"
#include "plesken/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace plesken {

/// Element of the rational group algebra QG: a dense coefficient vector
/// indexed by group element index.
struct GroupAlgebraElement {
  const FiniteGroup* group = nullptr;
  std::vector<Rational> coeffs;

  static GroupAlgebraElement zero(const FiniteGroup& g);
  /// The basis element for group element i (coefficient 1 there, 0 elsewhere).
  static GroupAlgebraElement basis(const FiniteGroup& g, std::size_t i);
  /// The hat element g - g^{-1}; zero when i is an involution or the identity.
  static GroupAlgebraElement hat(const FiniteGroup& g, std::size_t i);

  bool is_zero() const;
  bool operator==(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement operator+(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement operator*(const Rational& scalar) const;

  /// Human-readable form like "(1 2 3) - (1 3 2)"; "0" for the zero element.
  std::string str() const;
};

/// Convolution product: c_k = sum over cayley[i][j] = k of a_i b_j.
GroupAlgebraElement fg_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// Commutator [x, y] = xy - yx.
GroupAlgebraElement lie_bracket(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// Linear map QG -> QH recorded by its images of the group basis elements.
struct AlgebraHom {
  const FiniteGroup* domain = nullptr;
  const FiniteGroup* codomain = nullptr;
  std::vector<GroupAlgebraElement> basis_images;  // one per domain element

  GroupAlgebraElement apply(const GroupAlgebraElement& x) const;
};

/// Linear extension of a verified group homomorphism to the group algebras.
AlgebraHom induce_algebra_hom(const GroupHom& f);

/// Exhaustive multiplicativity check phi(g_i g_j) = phi(g_i) phi(g_j) over
/// all basis pairs; reports the first offending pair.
struct AlgebraHomCheck {
  bool ok = true;
  std::size_t bad_a = 0;
  std::size_t bad_b = 0;
};
AlgebraHomCheck verify_algebra_hom(const AlgebraHom& phi);

/// True iff every group basis element maps to a single group basis element
/// with coefficient 1 (the shape every induced homomorphism has).
bool is_induced_from_group_hom(const AlgebraHom& phi);

} // namespace plesken

#endif

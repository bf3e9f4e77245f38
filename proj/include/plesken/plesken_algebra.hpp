#ifndef PLESKEN_PLESKEN_ALGEBRA_HPP
#define PLESKEN_PLESKEN_ALGEBRA_HPP

#include "plesken/group_algebra.hpp"
#include "plesken/matrix.hpp"

#include <cstddef>
#include <vector>

namespace plesken {

/// Hat basis of the Plesken Lie algebra L(G): one representative per pair
/// {g, g^{-1}} with g not self-inverse, chosen as the smaller element index.
class PleskenBasis {
public:
  explicit PleskenBasis(const FiniteGroup& g);

  const FiniteGroup& group() const { return *group_; }
  std::size_t dim() const { return reps_.size(); }
  /// Element index of the k-th basis representative.
  std::size_t rep(std::size_t k) const;
  const std::vector<std::size_t>& reps() const { return reps_; }

  /// Basis position of element index i together with the sign of its hat
  /// relative to the representative: (k, +1) for representatives, (k, -1)
  /// for their inverses. Involutions and the identity have no position.
  bool has_position(std::size_t i) const;
  std::size_t position(std::size_t i) const;
  int sign(std::size_t i) const;

private:
  const FiniteGroup* group_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> position_;  // kNone for hatless elements
  std::vector<int> sign_;
};

PleskenBasis plesken_basis(const FiniteGroup& g);

/// Element of L(G) in hat coordinates.
struct PleskenElement {
  const PleskenBasis* basis = nullptr;
  std::vector<Rational> coords;

  static PleskenElement zero(const PleskenBasis& b);
  static PleskenElement unit(const PleskenBasis& b, std::size_t k);
  bool operator==(const PleskenElement& rhs) const;
  bool is_zero() const;
  PleskenElement operator+(const PleskenElement& rhs) const;
  PleskenElement operator-(const PleskenElement& rhs) const;
  PleskenElement operator*(const Rational& scalar) const;
};

/// Sum of coords_k * (g_k - g_k^{-1}) as a group algebra element.
GroupAlgebraElement embed(const PleskenElement& x);

/// Coordinates of a group algebra element lying in the hat span; elements
/// outside the span raise NotInSpanError naming the violating group element.
PleskenElement project(const PleskenBasis& b, const GroupAlgebraElement& x);

/// [x, y] computed through the group algebra and projected back; always
/// lands in the hat span.
PleskenElement plesken_bracket(const PleskenElement& x, const PleskenElement& y);

/// c[i][j] = coordinates of [ghat_i, ghat_j] in the hat basis.
struct StructureConstants {
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<Rational>>> c;

  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c[i][j][k]; }
  bool all_zero() const;
};

StructureConstants structure_constants(const PleskenBasis& b);

/// Independent identity for the bracket: checks, over all ordered basis
/// pairs, that the convolution bracket equals
/// (gh)^ + (g^{-1}h^{-1})^ - (gh^{-1})^ - (g^{-1}h)^ assembled from Cayley
/// lookups alone.
bool closed_form_bracket_check(const PleskenBasis& b);

/// Linear map L(G) -> L(H) in hat coordinates (codomain dim x domain dim).
struct PleskenMap {
  const PleskenBasis* domain = nullptr;
  const PleskenBasis* codomain = nullptr;
  RationalMatrix matrix;

  PleskenElement apply(const PleskenElement& x) const;
};

/// Induced map on hats: ghat_i -> (f(g_i))^ in L(H) coordinates. The bases
/// must be over the homomorphism's groups and outlive the map.
PleskenMap induce_plesken_hom(const GroupHom& f, const PleskenBasis& domain_basis,
                              const PleskenBasis& codomain_basis);

/// Bracket-preservation check over all ordered pairs of domain basis
/// elements; reports the first offending pair.
struct PleskenMapCheck {
  bool ok = true;
  std::size_t bad_i = 0;
  std::size_t bad_j = 0;
};
PleskenMapCheck verify_plesken_map(const PleskenMap& m);

/// Elementary Lie-structure report read off the structure constants.
struct LieAnalysis {
  bool abelian = false;
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;
};

LieAnalysis lie_analysis(const StructureConstants& s);

} // namespace plesken

#endif

#ifndef PLESKEN_GROUP_HPP
#define PLESKEN_GROUP_HPP

#include "plesken/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace plesken {

/// A finite permutation group, materialized as an element list plus complete
/// Cayley and inverse tables. Element 0 is the identity; the rest are
/// numbered in breadth-first discovery order over right multiplication by
/// the generators, so the numbering is reproducible for a fixed generator
/// sequence. All downstream arithmetic works on indices; the permutations
/// are retained for input and echo.
class FiniteGroup {
public:
  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Permutation& element(std::size_t i) const;
  const std::vector<Permutation>& elements() const { return elements_; }
  /// Indices (into elements()) of the generators the group was built from.
  const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

  bool contains(const Permutation& p) const;
  std::size_t index_of(const Permutation& p) const;  // PreconditionError if absent

  std::size_t product(std::size_t i, std::size_t j) const {
    return cayley_[check(i) * elements_.size() + check(j)];
  }
  std::size_t inverse(std::size_t i) const { return inverse_[check(i)]; }
  std::size_t order_of(std::size_t i) const;
  /// Full-table symmetry scan.
  bool is_abelian() const;
  /// Number of solutions of g^2 = e, identity included.
  std::size_t involution_type_count() const;

  friend FiniteGroup group_from_generators(const std::vector<Permutation>& generators,
                                           std::size_t max_elements);

private:
  std::size_t check(std::size_t i) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::uint32_t> cayley_;  // row-major size() x size()
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generator_indices_;
};

/// Closes the generators under composition by breadth-first search from the
/// identity and fills in the Cayley table. The generator list must be
/// nonempty and share one degree; exceeding max_elements raises
/// ResourceError naming the cap.
FiniteGroup group_from_generators(const std::vector<Permutation>& generators,
                                  std::size_t max_elements = 5000);

/// Group homomorphism recorded as the full index map domain -> codomain.
struct GroupHom {
  const FiniteGroup* domain = nullptr;
  const FiniteGroup* codomain = nullptr;
  std::vector<std::size_t> images;

  std::size_t apply(std::size_t i) const { return images.at(i); }
};

/// Extends generator images to the whole group, then checks multiplicativity
/// on every pair through both Cayley tables. Inconsistent or
/// non-multiplicative images raise NotAHomomorphismError with a
/// counterexample.
GroupHom induce_group_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                          const std::vector<Permutation>& generator_images);

/// Exhaustive check of phi(ab) = phi(a)phi(b); reports the first offending
/// pair on failure.
struct HomCheck {
  bool ok = true;
  std::size_t bad_a = 0;
  std::size_t bad_b = 0;
};
HomCheck verify_group_hom(const GroupHom& hom);

} // namespace plesken

#endif

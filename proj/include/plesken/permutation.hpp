#ifndef PLESKEN_PERMUTATION_HPP
#define PLESKEN_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace plesken {

/// Permutation of {0, ..., n-1}, stored as the image table. Composition is
/// left to right: (a * b)(x) = b(a(x)), matching the usual convention for
/// permutation groups acting on points from the right.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  /// Cycles use 1-based points; points not mentioned are fixed.
  static Permutation from_cycles(const std::vector<std::vector<std::size_t>>& cycles, std::size_t n);

  std::size_t degree() const { return images_.size(); }
  std::size_t apply(std::size_t x) const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Permutation& rhs) const { return images_ != rhs.images_; }
  bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }
  bool is_identity() const;
  std::size_t order() const;

  /// Canonical disjoint-cycle form, 1-based, e.g. "(1 2 3)(4 5)"; the
  /// identity prints as "()".
  std::string cycle_string() const;

private:
  std::vector<std::size_t> images_;
};

/// Parses 1-based disjoint cycles, e.g. "(1 2 3)(4 5)" or "()". Repeated
/// points and malformed syntax raise InputError. Points mentioned must not
/// exceed n; pass n = 0 to size the result by the largest point seen.
Permutation parse_permutation(const std::string& text, std::size_t n = 0);

} // namespace plesken

#endif

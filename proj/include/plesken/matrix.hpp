#ifndef PLESKEN_MATRIX_HPP
#define PLESKEN_MATRIX_HPP

#include "plesken/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace plesken {

using RationalVector = std::vector<Rational>;

/// Dense matrix over the rationals, row major. All arithmetic is exact.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols);
  /// Builds from nested initializer-style data (rows of equal length).
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator*(const Rational& scalar) const;
  bool operator==(const RationalMatrix& rhs) const;

  RationalMatrix transpose() const;
  RationalVector apply(const RationalVector& v) const;
  Rational trace() const;
  bool is_zero() const;
  /// Flattens row major into a single coordinate vector of length rows*cols.
  RationalVector vectorize() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// A subspace of Q^n held as a reduced-echelon basis. The canonical form
/// (leftmost pivots, pivot entries 1, pivot columns cleared, rows sorted by
/// pivot) makes equality and membership syntactic checks.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  static Subspace span_of(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<RationalVector>& basis() const { return rows_; }

  /// Reduces v against the basis and adjoins the remainder if nonzero.
  /// Returns true when the subspace grew.
  bool insert(RationalVector v);
  bool contains(const RationalVector& v) const;
  bool operator==(const Subspace& rhs) const;
  bool is_full() const { return dim() == ambient_; }

private:
  std::size_t ambient_;
  std::vector<RationalVector> rows_;   // reduced echelon, pivots increasing
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form with exact pivots; returns the form and its rank.
std::pair<RationalMatrix, std::size_t> rref(const RationalMatrix& m);

/// Basis of the right null space {v : M v = 0}, echelon-reduced.
Subspace kernel_basis(const RationalMatrix& m);

/// Least subspace containing v that is closed under every matrix in gens.
Subspace spin(const RationalVector& v, const std::vector<RationalMatrix>& gens);

bool subspace_contains(const Subspace& s, const RationalVector& v);
bool subspace_equal(const Subspace& s, const Subspace& t);

} // namespace plesken

#endif

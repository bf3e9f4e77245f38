#include "plesken/matrix.hpp"

#include "plesken/error.hpp"

#include <algorithm>

namespace plesken {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw PreconditionError("matrix entry count does not match rows*cols");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, cols);
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return RationalMatrix();
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw PreconditionError("ragged rows in matrix literal");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw PreconditionError("matrix shape mismatch in addition");
  }
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw PreconditionError("matrix shape mismatch in subtraction");
  }
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw PreconditionError("matrix shape mismatch in product");
  }
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& scalar) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * scalar;
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) {
    throw PreconditionError("vector length does not match matrix columns");
  }
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c) != 0 && v[c] != 0) acc += at(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Rational RationalMatrix::trace() const {
  Rational acc = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += at(i, i);
  return acc;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

RationalVector RationalMatrix::vectorize() const { return entries_; }

namespace {

std::size_t pivot_of(const RationalVector& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) return c;
  }
  return row.size();
}

} // namespace

Subspace Subspace::span_of(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

bool Subspace::insert(RationalVector v) {
  if (v.size() != ambient_) {
    throw PreconditionError("vector dimension does not match ambient dimension");
  }
  // Reduce against existing rows.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& coeff = v[pivots_[r]];
    if (coeff == 0) continue;
    const Rational factor = coeff;  // rows have pivot entry 1
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (rows_[r][c] != 0) v[c] -= factor * rows_[r][c];
    }
  }
  const std::size_t piv = pivot_of(v);
  if (piv == ambient_) return false;

  const Rational inv = 1 / v[piv];
  for (auto& x : v) x *= inv;
  // Clear the new pivot column in the old rows, then keep rows pivot-sorted.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational coeff = rows_[r][piv];
    if (coeff == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (v[c] != 0) rows_[r][c] -= coeff * v[c];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) {
    throw PreconditionError("vector dimension does not match ambient dimension");
  }
  RationalVector residue = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational coeff = residue[pivots_[r]];
    if (coeff == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (rows_[r][c] != 0) residue[c] -= coeff * rows_[r][c];
    }
  }
  return pivot_of(residue) == ambient_;
}

bool Subspace::operator==(const Subspace& rhs) const {
  return ambient_ == rhs.ambient_ && rows_ == rhs.rows_;
}

std::pair<RationalMatrix, std::size_t> rref(const RationalMatrix& m) {
  RationalMatrix r = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < r.cols() && rank < r.rows(); ++col) {
    // First nonzero row at or below the current rank row.
    std::size_t sel = rank;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != rank) {
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(sel, c), r.at(rank, c));
    }
    const Rational inv = 1 / r.at(rank, col);
    for (std::size_t c = 0; c < r.cols(); ++c) r.at(rank, c) *= inv;
    for (std::size_t row = 0; row < r.rows(); ++row) {
      if (row == rank) continue;
      const Rational factor = r.at(row, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < r.cols(); ++c) {
        if (r.at(rank, c) != 0) r.at(row, c) -= factor * r.at(rank, c);
      }
    }
    ++rank;
  }
  return {std::move(r), rank};
}

Subspace kernel_basis(const RationalMatrix& m) {
  auto [r, rank] = rref(m);
  const std::size_t n = m.cols();

  std::vector<std::size_t> pivot_col_of_row(rank);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t row = 0; row < rank; ++row) {
    std::size_t c = 0;
    while (c < n && r.at(row, c) == 0) ++c;
    pivot_col_of_row[row] = c;
    is_pivot[c] = true;
  }

  Subspace kernel(n);
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(n, Rational(0));
    v[free_col] = 1;
    for (std::size_t row = 0; row < rank; ++row) {
      v[pivot_col_of_row[row]] = -r.at(row, free_col);
    }
    kernel.insert(std::move(v));
  }
  return kernel;
}

Subspace spin(const RationalVector& v, const std::vector<RationalMatrix>& gens) {
  if (pivot_of(v) == v.size()) {
    throw PreconditionError("spin requires a nonzero seed vector");
  }
  for (const auto& g : gens) {
    if (g.rows() != v.size() || g.cols() != v.size()) {
      throw PreconditionError("spin generators must be square of the ambient dimension");
    }
  }
  Subspace s(v.size());
  s.insert(v);
  std::vector<RationalVector> frontier = s.basis();
  while (!frontier.empty()) {
    std::vector<RationalVector> next;
    for (const auto& b : frontier) {
      for (const auto& g : gens) {
        RationalVector image = g.apply(b);
        if (s.insert(image)) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return s;
}

bool subspace_contains(const Subspace& s, const RationalVector& v) { return s.contains(v); }

bool subspace_equal(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) {
    throw PreconditionError("subspace ambient dimension mismatch");
  }
  return s == t;
}

} // namespace plesken

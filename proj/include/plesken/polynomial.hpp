#ifndef PLESKEN_POLYNOMIAL_HPP
#define PLESKEN_POLYNOMIAL_HPP

#include "plesken/matrix.hpp"
#include "plesken/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plesken {

/// Univariate polynomial over the rationals, coefficients low to high.
/// The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial x();

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& scalar) const;
  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Rational eval(const Rational& at) const;
  /// Evaluates the polynomial at a square matrix (Horner).
  RationalMatrix eval(const RationalMatrix& at) const;

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd via the Euclidean algorithm.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Monic characteristic polynomial det(xI - M), computed exactly by the
/// Faddeev-LeVerrier recurrence.
Polynomial char_poly(const RationalMatrix& m);

struct Factorization {
  Rational unit;                                    // leading coefficient of the input
  std::vector<std::pair<Polynomial, int>> factors;  // monic irreducible, multiplicity

  /// unit * product(factor^multiplicity); used by tests to round-trip.
  Polynomial expand() const;
};

/// Complete factorization into monic irreducibles over Q. Squarefree parts
/// with no rational root and degree above max_residual_degree raise
/// UnsupportedDegreeError; degrees 4..max_residual_degree go through
/// Kronecker interpolation.
Factorization factor_over_Q(const Polynomial& p, int max_residual_degree = 8);

/// b^2 - 4ac of a degree-2 polynomial.
Rational quadratic_discriminant(const Polynomial& p);

} // namespace plesken

#endif

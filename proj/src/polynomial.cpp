#include "plesken/polynomial.hpp"

#include "plesken/error.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>

namespace plesken {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const Rational lead = divisor.leading();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw PreconditionError("monic form of the zero polynomial");
  return *this * (Rational(1) / leading());
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

RationalMatrix Polynomial::eval(const RationalMatrix& at) const {
  if (at.rows() != at.cols()) throw PreconditionError("polynomial evaluation needs a square matrix");
  RationalMatrix acc = RationalMatrix::zero(at.rows(), at.cols());
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * at;
    for (std::size_t d = 0; d < at.rows(); ++d) acc.at(d, d) += coeffs_[i];
  }
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const Rational a = abs(c);
    if (i == 0 || a != 1) out << to_string(a);
    if (i >= 1) {
      if (a != 1) out << "*";
      out << var;
      if (i >= 2) out << "^" << i;
    }
  }
  return out.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Polynomial char_poly(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk = RationalMatrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t d = 0; d < n; ++d) mk.at(d, d) += c[n - k + 1];
    mk = m * mk;
    c[n - k] = -mk.trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

Polynomial Factorization::expand() const {
  Polynomial p = Polynomial::constant(unit);
  for (const auto& [factor, mult] : factors)
    for (int i = 0; i < mult; ++i) p = p * factor;
  return p;
}

namespace {

// Scale a rational polynomial to a primitive integer coefficient vector with
// positive leading coefficient (content and sign divided out).
std::vector<mpz_class> primitive_integer_coeffs(const Polynomial& p) {
  mpz_class denom_lcm(1);
  for (const auto& c : p.coeffs()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    denom_lcm = denom_lcm / g * c.get_den();
  }
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(denom_lcm);
    out.push_back(scaled.get_num());
  }
  mpz_class content(0);
  for (const auto& z : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content == 0) content = 1;
  if (out.back() < 0) content = -content;
  for (auto& z : out) z /= content;
  return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> out;
  for (mpz_class d(1); d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational eval_integer_poly(const std::vector<mpz_class>& coeffs, long at) {
  Rational acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * Rational(at) + Rational(coeffs[i]);
  return acc;
}

// Lagrange interpolation through (points[i], values[i]).
Polynomial interpolate(const std::vector<long>& points, const std::vector<Rational>& values) {
  Polynomial acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial term = Polynomial::constant(values[i]);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      term = term * Polynomial({Rational(-points[j]), Rational(1)});
      term = term * (Rational(1) / Rational(points[i] - points[j]));
    }
    acc = acc + term;
  }
  return acc;
}

constexpr long kKroneckerTupleBudget = 4'000'000;

// Kronecker's method: p is monic, squarefree, without rational roots, and of
// degree >= 4. Returns a proper monic factor, or the zero polynomial when p
// is irreducible.
Polynomial kronecker_split(const Polynomial& p) {
  const std::vector<mpz_class> ip = primitive_integer_coeffs(p);
  const int deg = p.degree();

  // Sample more points than needed and keep the ones with the fewest
  // divisors; the tuple count is the product of the divisor counts.
  struct Sample {
    long point;
    std::vector<mpz_class> divisors;
  };
  std::vector<Sample> samples;
  for (long x : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L}) {
    Rational v = eval_integer_poly(ip, x);
    samples.push_back({x, positive_divisors(v.get_num())});
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& a, const Sample& b) { return a.divisors.size() < b.divisors.size(); });

  for (int m = 2; m <= deg / 2; ++m) {
    const std::size_t npts = static_cast<std::size_t>(m) + 1;
    std::vector<long> points(npts);
    std::vector<const std::vector<mpz_class>*> divs(npts);
    long tuples = 1;
    for (std::size_t i = 0; i < npts; ++i) {
      points[i] = samples[i].point;
      divs[i] = &samples[i].divisors;
      // Candidate values take both signs except at the first point, where the
      // overall sign of the factor is normalized away.
      const long options = static_cast<long>(divs[i]->size()) * (i == 0 ? 1 : 2);
      if (tuples > kKroneckerTupleBudget / std::max(options, 1L))
        throw UnsupportedDegreeError("factor search budget exceeded at degree " + std::to_string(deg));
      tuples *= options;
    }

    std::vector<std::size_t> index(npts, 0);  // enumerates divisor choice + sign
    std::vector<Rational> values(npts);
    while (true) {
      for (std::size_t i = 0; i < npts; ++i) {
        const std::size_t di = i == 0 ? index[i] : index[i] / 2;
        Rational v((*divs[i])[di]);
        if (i != 0 && (index[i] & 1)) v = -v;
        values[i] = v;
      }
      Polynomial g = interpolate(points, values);
      if (g.degree() == m) {
        bool integral = true;
        for (const auto& c : g.coeffs())
          if (c.get_den() != 1) {
            integral = false;
            break;
          }
        if (integral) {
          Polynomial candidate = g.monic();
          auto [quot, rem] = p.divmod(candidate);
          (void)quot;
          if (rem.is_zero()) return candidate;
        }
      }
      std::size_t pos = 0;
      while (pos < npts) {
        const std::size_t limit = pos == 0 ? divs[pos]->size() : divs[pos]->size() * 2;
        if (++index[pos] < limit) break;
        index[pos] = 0;
        ++pos;
      }
      if (pos == npts) break;
    }
  }
  return Polynomial();
}

// Factor a monic squarefree polynomial into monic irreducibles.
void factor_squarefree(const Polynomial& input, int max_residual_degree,
                       std::vector<Polynomial>& out) {
  Polynomial p = input;
  if (p.degree() == 0) return;
  if (p.coeff(0) == 0) {  // roots at zero come straight off
    out.push_back(Polynomial::x());
    p = p.divmod(Polynomial::x()).first;
  }
  if (p.degree() >= 1) {
    // Rational root candidates num/den with num | constant, den | leading.
    const std::vector<mpz_class> ip = primitive_integer_coeffs(p);
    if (ip.front() != 0) {
      for (const mpz_class& num : positive_divisors(ip.front())) {
        if (p.degree() < 1) break;
        for (const mpz_class& den : positive_divisors(ip.back())) {
          for (int sign : {1, -1}) {
            Rational root(sign * num, den);
            root.canonicalize();
            if (p.eval(root) == 0) {
              out.push_back(Polynomial({-root, Rational(1)}));
              p = p.divmod(out.back()).first;
            }
          }
        }
      }
    }
  }
  const int deg = p.degree();
  if (deg <= 0) return;
  if (deg > max_residual_degree)
    throw UnsupportedDegreeError("no rational root and degree " + std::to_string(deg) +
                                 " exceeds the factor degree bound " +
                                 std::to_string(max_residual_degree));
  if (deg <= 3) {  // root-free of degree 2 or 3 (or linear) is irreducible
    out.push_back(p);
    return;
  }
  Polynomial factor = kronecker_split(p);
  if (factor.is_zero()) {
    out.push_back(p);
    return;
  }
  factor_squarefree(factor, max_residual_degree, out);
  factor_squarefree(p.divmod(factor).first, max_residual_degree, out);
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = static_cast<std::size_t>(a.degree()) + 1; i-- > 0;) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

} // namespace

Factorization factor_over_Q(const Polynomial& p, int max_residual_degree) {
  if (p.degree() < 1) throw PreconditionError("factorization needs degree >= 1");
  Factorization result;
  result.unit = p.leading();
  Polynomial f = p.monic();

  // Yun's squarefree decomposition: f = prod s_i^i with the s_i coprime and
  // squarefree.
  std::vector<std::pair<Polynomial, int>> squarefree_parts;
  Polynomial a = poly_gcd(f, f.derivative());
  Polynomial b = f.divmod(a).first;
  Polynomial c = f.derivative().divmod(a).first;
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    Polynomial s = poly_gcd(b, d);
    b = b.divmod(s).first;
    c = d.divmod(s).first;
    d = c - b.derivative();
    if (s.degree() >= 1) squarefree_parts.emplace_back(s, i);
    ++i;
  }

  for (const auto& [part, mult] : squarefree_parts) {
    std::vector<Polynomial> irreducibles;
    factor_squarefree(part, max_residual_degree, irreducibles);
    for (auto& q : irreducibles) result.factors.emplace_back(std::move(q), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return result;
}

Rational quadratic_discriminant(const Polynomial& p) {
  if (p.degree() != 2) throw PreconditionError("discriminant is only taken of a quadratic");
  return p.coeff(1) * p.coeff(1) - Rational(4) * p.coeff(2) * p.coeff(0);
}

} // namespace plesken

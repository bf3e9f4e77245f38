#include "plesken/plesken_algebra.hpp"

#include "plesken/error.hpp"

namespace plesken {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

PleskenBasis::PleskenBasis(const FiniteGroup& g) : group_(&g) {
  position_.assign(g.size(), kNone);
  sign_.assign(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::size_t inv = g.inverse(i);
    if (inv == i || inv < i) continue;  // self-inverse, or already covered
    position_[i] = reps_.size();
    sign_[i] = 1;
    position_[inv] = reps_.size();
    sign_[inv] = -1;
    reps_.push_back(i);
  }
}

std::size_t PleskenBasis::rep(std::size_t k) const {
  if (k >= reps_.size()) throw PreconditionError("basis position out of range");
  return reps_[k];
}

bool PleskenBasis::has_position(std::size_t i) const {
  if (i >= position_.size()) throw PreconditionError("element index out of range");
  return position_[i] != kNone;
}

std::size_t PleskenBasis::position(std::size_t i) const {
  if (!has_position(i)) throw PreconditionError("element has a zero hat");
  return position_[i];
}

int PleskenBasis::sign(std::size_t i) const {
  if (!has_position(i)) throw PreconditionError("element has a zero hat");
  return sign_[i];
}

PleskenBasis plesken_basis(const FiniteGroup& g) { return PleskenBasis(g); }

PleskenElement PleskenElement::zero(const PleskenBasis& b) {
  return {&b, std::vector<Rational>(b.dim(), Rational(0))};
}

PleskenElement PleskenElement::unit(const PleskenBasis& b, std::size_t k) {
  PleskenElement x = zero(b);
  if (k >= b.dim()) throw PreconditionError("basis position out of range");
  x.coords[k] = 1;
  return x;
}

bool PleskenElement::operator==(const PleskenElement& rhs) const {
  return basis == rhs.basis && coords == rhs.coords;
}

bool PleskenElement::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

PleskenElement PleskenElement::operator+(const PleskenElement& rhs) const {
  if (basis != rhs.basis) throw PreconditionError("elements of different Plesken bases");
  PleskenElement out = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) out.coords[k] += rhs.coords[k];
  return out;
}

PleskenElement PleskenElement::operator-(const PleskenElement& rhs) const {
  if (basis != rhs.basis) throw PreconditionError("elements of different Plesken bases");
  PleskenElement out = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) out.coords[k] -= rhs.coords[k];
  return out;
}

PleskenElement PleskenElement::operator*(const Rational& scalar) const {
  PleskenElement out = *this;
  for (auto& c : out.coords) c *= scalar;
  return out;
}

GroupAlgebraElement embed(const PleskenElement& x) {
  const PleskenBasis& b = *x.basis;
  GroupAlgebraElement out = GroupAlgebraElement::zero(b.group());
  for (std::size_t k = 0; k < b.dim(); ++k) {
    if (x.coords[k] == 0) continue;
    const std::size_t g = b.rep(k);
    out.coeffs[g] += x.coords[k];
    out.coeffs[b.group().inverse(g)] -= x.coords[k];
  }
  return out;
}

PleskenElement project(const PleskenBasis& b, const GroupAlgebraElement& x) {
  if (x.group != &b.group()) throw PreconditionError("element belongs to a different group");
  PleskenElement out = PleskenElement::zero(b);
  const FiniteGroup& g = b.group();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::size_t inv = g.inverse(i);
    if (inv == i) {
      if (x.coeffs[i] != 0)
        throw NotInSpanError("nonzero coefficient on self-inverse element " +
                             g.element(i).cycle_string());
      continue;
    }
    if (x.coeffs[i] != -x.coeffs[inv])
      throw NotInSpanError("coefficients on " + g.element(i).cycle_string() + " and " +
                           g.element(inv).cycle_string() + " are not opposite");
    if (b.sign(i) == 1) out.coords[b.position(i)] = x.coeffs[i];
  }
  return out;
}

PleskenElement plesken_bracket(const PleskenElement& x, const PleskenElement& y) {
  if (x.basis != y.basis) throw PreconditionError("elements of different Plesken bases");
  return project(*x.basis, lie_bracket(embed(x), embed(y)));
}

bool StructureConstants::all_zero() const {
  for (const auto& plane : c)
    for (const auto& row : plane)
      for (const auto& entry : row)
        if (entry != 0) return false;
  return true;
}

StructureConstants structure_constants(const PleskenBasis& b) {
  StructureConstants s;
  s.dim = b.dim();
  s.c.assign(s.dim, std::vector<std::vector<Rational>>(s.dim));
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j)
      s.c[i][j] = plesken_bracket(PleskenElement::unit(b, i), PleskenElement::unit(b, j)).coords;
  return s;
}

bool closed_form_bracket_check(const PleskenBasis& b) {
  const FiniteGroup& grp = b.group();
  const auto hat = [&](std::size_t i) { return GroupAlgebraElement::hat(grp, i); };
  for (std::size_t ki = 0; ki < b.dim(); ++ki)
    for (std::size_t kj = 0; kj < b.dim(); ++kj) {
      const std::size_t g = b.rep(ki);
      const std::size_t h = b.rep(kj);
      const std::size_t gi = grp.inverse(g);
      const std::size_t hi = grp.inverse(h);
      const GroupAlgebraElement closed = hat(grp.product(g, h)) + hat(grp.product(gi, hi)) -
                                         hat(grp.product(g, hi)) - hat(grp.product(gi, h));
      const GroupAlgebraElement convolution = lie_bracket(hat(g), hat(h));
      if (!(closed == convolution)) return false;
    }
  return true;
}

PleskenElement PleskenMap::apply(const PleskenElement& x) const {
  if (x.basis != domain) throw PreconditionError("element is not in the domain");
  PleskenElement out = PleskenElement::zero(*codomain);
  out.coords = matrix.apply(x.coords);
  return out;
}

PleskenMap induce_plesken_hom(const GroupHom& f, const PleskenBasis& domain_basis,
                              const PleskenBasis& codomain_basis) {
  if (&domain_basis.group() != f.domain || &codomain_basis.group() != f.codomain)
    throw PreconditionError("bases do not match the homomorphism's groups");
  PleskenMap m;
  m.domain = &domain_basis;
  m.codomain = &codomain_basis;
  m.matrix = RationalMatrix::zero(codomain_basis.dim(), domain_basis.dim());
  for (std::size_t k = 0; k < domain_basis.dim(); ++k) {
    const std::size_t image = f.images[domain_basis.rep(k)];
    if (!codomain_basis.has_position(image)) continue;  // image hat collapses to zero
    m.matrix.at(codomain_basis.position(image), k) = codomain_basis.sign(image);
  }
  return m;
}

PleskenMapCheck verify_plesken_map(const PleskenMap& m) {
  const PleskenBasis& dom = *m.domain;
  for (std::size_t i = 0; i < dom.dim(); ++i)
    for (std::size_t j = 0; j < dom.dim(); ++j) {
      const PleskenElement bi = PleskenElement::unit(dom, i);
      const PleskenElement bj = PleskenElement::unit(dom, j);
      const PleskenElement lhs = m.apply(plesken_bracket(bi, bj));
      const PleskenElement rhs = plesken_bracket(m.apply(bi), m.apply(bj));
      if (!(lhs == rhs)) return {false, i, j};
    }
  return {true, 0, 0};
}

LieAnalysis lie_analysis(const StructureConstants& s) {
  LieAnalysis report;
  report.abelian = s.all_zero();
  const std::size_t d = s.dim;
  if (d == 0) {
    report.center_dim = 0;
    report.derived_dim = 0;
    return report;
  }
  // Center: x with sum_i x_i c[i][j][k] = 0 for all j, k.
  RationalMatrix constraints(d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) constraints.at(j * d + k, i) = s.c[i][j][k];
  report.center_dim = kernel_basis(constraints).dim();
  // Derived algebra: span of all bracket images.
  Subspace derived(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) derived.insert(s.c[i][j]);
  report.derived_dim = derived.dim();
  return report;
}

} // namespace plesken

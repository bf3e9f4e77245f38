#include "plesken/group_algebra.hpp"

#include "plesken/error.hpp"

#include <sstream>

namespace plesken {

namespace {
void require_same_group(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (x.group == nullptr || x.group != y.group)
    throw PreconditionError("group algebra elements belong to different groups");
}
} // namespace

GroupAlgebraElement GroupAlgebraElement::zero(const FiniteGroup& g) {
  return {&g, std::vector<Rational>(g.size(), Rational(0))};
}

GroupAlgebraElement GroupAlgebraElement::basis(const FiniteGroup& g, std::size_t i) {
  GroupAlgebraElement x = zero(g);
  if (i >= g.size()) throw PreconditionError("element index out of range");
  x.coeffs[i] = 1;
  return x;
}

GroupAlgebraElement GroupAlgebraElement::hat(const FiniteGroup& g, std::size_t i) {
  GroupAlgebraElement x = zero(g);
  if (i >= g.size()) throw PreconditionError("element index out of range");
  const std::size_t inv = g.inverse(i);
  if (inv == i) return x;  // involutions and the identity hat to zero
  x.coeffs[i] = 1;
  x.coeffs[inv] = -1;
  return x;
}

bool GroupAlgebraElement::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& rhs) const {
  return group == rhs.group && coeffs == rhs.coeffs;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& rhs) const {
  require_same_group(*this, rhs);
  GroupAlgebraElement out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += rhs.coeffs[i];
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& rhs) const {
  require_same_group(*this, rhs);
  GroupAlgebraElement out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] -= rhs.coeffs[i];
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rational& scalar) const {
  GroupAlgebraElement out = *this;
  for (auto& c : out.coeffs) c *= scalar;
  return out;
}

std::string GroupAlgebraElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const Rational a = abs(c);
    if (a != 1) out << to_string(a) << "*";
    out << group->element(i).cycle_string();
  }
  if (first) return "0";
  return out.str();
}

GroupAlgebraElement fg_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  require_same_group(x, y);
  const FiniteGroup& g = *x.group;
  GroupAlgebraElement out = GroupAlgebraElement::zero(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (y.coeffs[j] == 0) continue;
      out.coeffs[g.product(i, j)] += x.coeffs[i] * y.coeffs[j];
    }
  }
  return out;
}

GroupAlgebraElement lie_bracket(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  return fg_multiply(x, y) - fg_multiply(y, x);
}

GroupAlgebraElement AlgebraHom::apply(const GroupAlgebraElement& x) const {
  if (x.group != domain) throw PreconditionError("element is not in the domain algebra");
  GroupAlgebraElement out = GroupAlgebraElement::zero(*codomain);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t k = 0; k < out.coeffs.size(); ++k)
      out.coeffs[k] += x.coeffs[i] * basis_images[i].coeffs[k];
  }
  return out;
}

AlgebraHom induce_algebra_hom(const GroupHom& f) {
  AlgebraHom phi;
  phi.domain = f.domain;
  phi.codomain = f.codomain;
  phi.basis_images.reserve(f.domain->size());
  for (std::size_t i = 0; i < f.domain->size(); ++i)
    phi.basis_images.push_back(GroupAlgebraElement::basis(*f.codomain, f.images[i]));
  return phi;
}

AlgebraHomCheck verify_algebra_hom(const AlgebraHom& phi) {
  const FiniteGroup& d = *phi.domain;
  if (phi.basis_images.size() != d.size())
    throw PreconditionError("need an image for every basis element");
  for (const auto& img : phi.basis_images)
    if (img.group != phi.codomain) throw PreconditionError("basis image in the wrong algebra");
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b) {
      const GroupAlgebraElement lhs = phi.basis_images[d.product(a, b)];
      const GroupAlgebraElement rhs = fg_multiply(phi.basis_images[a], phi.basis_images[b]);
      if (!(lhs == rhs)) return {false, a, b};
    }
  return {true, 0, 0};
}

bool is_induced_from_group_hom(const AlgebraHom& phi) {
  for (const auto& img : phi.basis_images) {
    std::size_t support = 0;
    bool unit = true;
    for (const auto& c : img.coeffs) {
      if (c == 0) continue;
      ++support;
      if (c != 1) unit = false;
    }
    if (support != 1 || !unit) return false;
  }
  return true;
}

} // namespace plesken

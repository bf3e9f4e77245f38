#include "plesken/representation.hpp"

#include "plesken/error.hpp"

#include <deque>
#include <random>
#include <utility>

namespace plesken {

GroupRepresentation rep_from_generators(const FiniteGroup& g,
                                        const std::vector<RationalMatrix>& gen_images) {
  const auto& gens = g.generator_indices();
  if (gen_images.size() != gens.size())
    throw PreconditionError("expected " + std::to_string(gens.size()) + " generator images, got " +
                            std::to_string(gen_images.size()));
  if (gen_images.empty()) throw PreconditionError("need at least one generator image");
  const std::size_t degree = gen_images.front().rows();
  if (degree == 0) throw PreconditionError("representation degree must be positive");
  for (const auto& m : gen_images)
    if (m.rows() != degree || m.cols() != degree)
      throw PreconditionError("generator images must be square of one common degree");

  GroupRepresentation rho;
  rho.group = &g;
  rho.degree = degree;
  rho.images.assign(g.size(), RationalMatrix());
  std::vector<bool> set(g.size(), false);
  rho.images[0] = RationalMatrix::identity(degree);
  set[0] = true;
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t j = g.product(i, gens[k]);
      if (set[j]) continue;
      rho.images[j] = rho.images[i] * gen_images[k];
      set[j] = true;
      frontier.push_back(j);
    }
  }

  // The extension silently skips generators that repeat or equal the
  // identity; insist their given images agree with the extension.
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!(rho.images[gens[k]] == gen_images[k]))
      throw InvalidRepresentationError("image of generator " +
                                       g.element(gens[k]).cycle_string() +
                                       " conflicts with the extension");
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!(rho.images[g.product(i, j)] == rho.images[i] * rho.images[j]))
        throw InvalidRepresentationError("images are not multiplicative on the pair (" +
                                         g.element(i).cycle_string() + ", " +
                                         g.element(j).cycle_string() + ")");
  return rho;
}

RationalMatrix perm_matrix(const Permutation& p) {
  RationalMatrix m(p.degree(), p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) m.at(x, p.apply(x)) = 1;
  return m;
}

GroupRepresentation natural_permutation_rep(const FiniteGroup& g) {
  if (g.degree() == 0) throw PreconditionError("group acts on no points");
  std::vector<RationalMatrix> gen_images;
  for (std::size_t k : g.generator_indices()) gen_images.push_back(perm_matrix(g.element(k)));
  return rep_from_generators(g, gen_images);
}

GroupRepresentation regular_representation(const FiniteGroup& g) {
  GroupRepresentation rho;
  rho.group = &g;
  rho.degree = g.size();
  rho.images.reserve(g.size());
  // Column h of the image of g is e_{gh}; multiplicativity is the
  // associativity of the Cayley table.
  for (std::size_t i = 0; i < g.size(); ++i) {
    RationalMatrix m(g.size(), g.size());
    for (std::size_t h = 0; h < g.size(); ++h) m.at(g.product(i, h), h) = 1;
    rho.images.push_back(std::move(m));
  }
  return rho;
}

GroupRepresentation direct_sum(const GroupRepresentation& a, const GroupRepresentation& b) {
  if (a.group != b.group) throw PreconditionError("direct sum needs one common group");
  GroupRepresentation out;
  out.group = a.group;
  out.degree = a.degree + b.degree;
  out.images.reserve(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i) {
    RationalMatrix m(out.degree, out.degree);
    for (std::size_t r = 0; r < a.degree; ++r)
      for (std::size_t c = 0; c < a.degree; ++c) m.at(r, c) = a.images[i].at(r, c);
    for (std::size_t r = 0; r < b.degree; ++r)
      for (std::size_t c = 0; c < b.degree; ++c)
        m.at(a.degree + r, a.degree + c) = b.images[i].at(r, c);
    out.images.push_back(std::move(m));
  }
  return out;
}

RationalMatrix apply_rep(const GroupRepresentation& rho, const GroupAlgebraElement& x) {
  if (x.group != rho.group) throw PreconditionError("element is not over the representation's group");
  RationalMatrix acc = RationalMatrix::zero(rho.degree, rho.degree);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    acc = acc + rho.images[i] * x.coeffs[i];
  }
  return acc;
}

RationalMatrix LieRepresentation::apply(const PleskenElement& x) const {
  if (x.basis != basis) throw PreconditionError("element is not over the representation's basis");
  RationalMatrix acc = RationalMatrix::zero(degree, degree);
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    if (x.coords[k] == 0) continue;
    acc = acc + hat_images[k] * x.coords[k];
  }
  return acc;
}

LieRepresentation induce_plesken_rep(const GroupRepresentation& rho, const PleskenBasis& basis) {
  if (&basis.group() != rho.group) throw PreconditionError("basis is over a different group");
  LieRepresentation psi;
  psi.basis = &basis;
  psi.degree = rho.degree;
  psi.hat_images.reserve(basis.dim());
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    const std::size_t g = basis.rep(k);
    psi.hat_images.push_back(rho.images[g] - rho.images[rho.group->inverse(g)]);
  }
  return psi;
}

BracketCheck verify_lie_representation(const LieRepresentation& psi) {
  const PleskenBasis& b = *psi.basis;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const PleskenElement bracket =
          plesken_bracket(PleskenElement::unit(b, i), PleskenElement::unit(b, j));
      const RationalMatrix lhs = psi.apply(bracket);
      const RationalMatrix rhs =
          psi.hat_images[i] * psi.hat_images[j] - psi.hat_images[j] * psi.hat_images[i];
      if (!(lhs == rhs)) return {false, i, j};
    }
  return {true, 0, 0};
}

namespace {

void require_square(const std::vector<RationalMatrix>& mats, std::size_t degree) {
  for (const auto& m : mats)
    if (m.rows() != degree || m.cols() != degree)
      throw PreconditionError("acting matrices must be square of the stated degree");
}

RationalMatrix unvectorize(const RationalVector& v, std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = v[r * n + c];
  return m;
}

} // namespace

std::vector<RationalMatrix> commutant(const std::vector<RationalMatrix>& mats,
                                      std::size_t degree) {
  require_square(mats, degree);
  const std::size_t n = degree;
  // Unknowns X_{kl} flattened row major; one equation per (matrix, i, j):
  // (XA - AX)_{ij} = sum_k X_{ik} A_{kj} - A_{ik} X_{kj} = 0.
  RationalMatrix constraints(mats.size() * n * n, n * n);
  for (std::size_t m = 0; m < mats.size(); ++m) {
    const RationalMatrix& a = mats[m];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = (m * n + i) * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          constraints.at(row, i * n + k) += a.at(k, j);
          constraints.at(row, k * n + j) -= a.at(i, k);
        }
      }
  }
  Subspace solutions = kernel_basis(constraints);
  std::vector<RationalMatrix> basis;
  basis.reserve(solutions.dim());
  for (const auto& v : solutions.basis()) basis.push_back(unvectorize(v, n));
  return basis;
}

Subspace envelope(const std::vector<RationalMatrix>& mats, std::size_t degree) {
  require_square(mats, degree);
  Subspace span(degree * degree);
  const RationalMatrix id = RationalMatrix::identity(degree);
  span.insert(id.vectorize());
  std::deque<RationalMatrix> frontier{id};
  // Right-multiplication closure from the identity reaches every word in the
  // generators, and the span of all words is the unital algebra they generate.
  while (!frontier.empty()) {
    const RationalMatrix x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& a : mats) {
      RationalMatrix next = x * a;
      if (span.insert(next.vectorize())) frontier.push_back(std::move(next));
    }
  }
  return span;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::absolutely_irreducible: return "absolutely_irreducible";
    case Classification::irreducible_over_Q: return "irreducible_over_Q";
    case Classification::reducible_over_Q: return "reducible_over_Q";
    case Classification::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::string to_string(RealStatus s) {
  switch (s) {
    case RealStatus::irreducible_over_R: return "irreducible_over_R";
    case RealStatus::reducible_over_R: return "reducible_over_R";
    case RealStatus::undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

// A witness is only ever emitted after passing this check.
void require_sound_witness(const Subspace& w, const std::vector<RationalMatrix>& mats,
                           std::size_t degree) {
  if (w.dim() == 0 || w.dim() >= degree)
    throw Error("internal: witness subspace is not proper and nonzero");
  for (const auto& a : mats)
    for (const auto& b : w.basis())
      if (!w.contains(a.apply(b))) throw Error("internal: witness subspace is not invariant");
}

std::vector<RationalMatrix> probe_set(const std::vector<RationalMatrix>& mats, std::size_t degree,
                                      const IrreducibilityOptions& options) {
  std::vector<RationalMatrix> probes;
  if (mats.empty()) {
    // A degree >= 2 space with nothing acting decomposes into coordinate
    // lines; one zero probe routes that through the ordinary witness search.
    probes.push_back(RationalMatrix::zero(degree, degree));
    return probes;
  }
  for (const auto& m : mats) probes.push_back(m);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) probes.push_back(mats[i] + mats[j]);
  // Seeded random rational combinations; raw engine output keeps the stream
  // identical across platforms.
  std::mt19937_64 rng(options.seed);
  for (std::size_t t = 0; t < options.random_probes; ++t) {
    RationalMatrix probe = RationalMatrix::zero(degree, degree);
    for (const auto& m : mats) {
      const long c = static_cast<long>(rng() % 19) - 9;
      if (c != 0) probe = probe + m * Rational(c);
    }
    probes.push_back(std::move(probe));
  }
  return probes;
}

} // namespace

IrreducibilityReport irreducibility(const std::vector<RationalMatrix>& mats, std::size_t degree,
                                    const IrreducibilityOptions& options) {
  if (degree == 0) throw PreconditionError("degree must be positive");
  require_square(mats, degree);

  IrreducibilityReport report;
  report.degree = degree;
  report.commutant_basis = commutant(mats, degree);
  report.commutant_dim = report.commutant_basis.size();
  report.envelope_dim = envelope(mats, degree).dim();

  if (degree == 1 || report.envelope_dim == degree * degree) {
    report.classification = Classification::absolutely_irreducible;
    report.real_status = RealStatus::irreducible_over_R;
    return report;
  }

  std::vector<RationalMatrix> transposed;
  transposed.reserve(mats.size());
  for (const auto& m : mats) transposed.push_back(m.transpose());

  std::string failure_reason;
  for (const RationalMatrix& probe : probe_set(mats, degree, options)) {
    Factorization factors;
    try {
      factors = factor_over_Q(char_poly(probe), options.max_factor_degree);
    } catch (const UnsupportedDegreeError& e) {
      if (failure_reason.empty()) failure_reason = e.what();
      continue;
    }
    for (const auto& [p, mult] : factors.factors) {
      const RationalMatrix pa = p.eval(probe);
      const Subspace kernel = kernel_basis(pa);
      for (const auto& v : kernel.basis()) {
        Subspace span = spin(v, mats);
        if (!span.is_full()) {
          require_sound_witness(span, mats, degree);
          report.classification = Classification::reducible_over_Q;
          report.witness = std::move(span);
          report.real_status = RealStatus::reducible_over_R;
          return report;
        }
      }
      // Completeness safeguard, sound exactly when the kernel is one
      // irreducible F[x]/(p)-line: then any invariant subspace either meets
      // the kernel (caught above, since every kernel vector generates the
      // whole kernel) or is annihilated by the transpose-side kernel.
      if (kernel.dim() != static_cast<std::size_t>(p.degree())) continue;
      const Subspace dual_kernel = kernel_basis(pa.transpose());
      Subspace dual_span = spin(dual_kernel.basis().front(), transposed);
      if (dual_span.is_full()) {
        report.classification = Classification::irreducible_over_Q;
        if (degree == 2 && p.degree() == 2) {
          report.real_status = quadratic_discriminant(p) < 0 ? RealStatus::irreducible_over_R
                                                             : RealStatus::reducible_over_R;
        }
        return report;
      }
      // A proper transpose-side spin annihilates a proper invariant subspace
      // on the original side.
      Subspace annihilator =
          kernel_basis(RationalMatrix::from_rows(dual_span.basis()));
      require_sound_witness(annihilator, mats, degree);
      report.classification = Classification::reducible_over_Q;
      report.witness = std::move(annihilator);
      report.real_status = RealStatus::reducible_over_R;
      return report;
    }
  }

  report.classification = Classification::undetermined;
  report.reason = failure_reason.empty()
                      ? "probe budget exhausted without meeting the completeness safeguard"
                      : failure_reason;
  return report;
}

bool check_reducibility_inheritance(const GroupRepresentation& rho, const PleskenBasis& basis,
                                    const Subspace& w) {
  if (w.ambient_dim() != rho.degree)
    throw PreconditionError("subspace ambient dimension does not match the degree");
  for (std::size_t i = 0; i < rho.images.size(); ++i)
    for (const auto& b : w.basis())
      if (!w.contains(rho.images[i].apply(b)))
        throw PreconditionError("subspace is not invariant under the image of " +
                                rho.group->element(i).cycle_string());
  const LieRepresentation psi = induce_plesken_rep(rho, basis);
  for (const auto& hat : psi.hat_images)
    for (const auto& b : w.basis())
      if (!w.contains(hat.apply(b))) return false;
  return true;
}

ModuleReport module_axioms_check(const ModuleActionTable& t, const PleskenBasis& b) {
  if (t.group == nullptr || &b.group() != t.group)
    throw PreconditionError("basis is over a different group");
  const FiniteGroup& g = *t.group;
  if (t.action.size() != g.size())
    throw PreconditionError("need one action matrix per group element");
  for (const auto& m : t.action)
    if (m.rows() != t.dim || m.cols() != t.dim)
      throw PreconditionError("action matrices must be dim x dim");

  ModuleReport report;
  report.fg_module = true;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!(t.action[g.product(i, j)] == t.action[i] * t.action[j])) {
        report.fg_module = false;
        report.counterexamples.push_back({"fg", i, j});
      }

  // Hat action x^ -> action[x] - action[x^{-1}]. Linearity axioms are
  // structural; the bracket axiom is the substantive one.
  std::vector<RationalMatrix> hats;
  hats.reserve(b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k)
    hats.push_back(t.action[b.rep(k)] - t.action[g.inverse(b.rep(k))]);
  const StructureConstants sc = structure_constants(b);
  report.lg_module = true;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      RationalMatrix lhs = RationalMatrix::zero(t.dim, t.dim);
      for (std::size_t k = 0; k < b.dim(); ++k) {
        if (sc.at(i, j, k) == 0) continue;
        lhs = lhs + hats[k] * sc.at(i, j, k);
      }
      const RationalMatrix rhs = hats[i] * hats[j] - hats[j] * hats[i];
      if (!(lhs == rhs)) {
        report.lg_module = false;
        report.counterexamples.push_back({"lie", i, j});
      }
    }
  return report;
}

SubmoduleReport submodule_check(const ModuleActionTable& t, const PleskenBasis& b,
                                const Subspace& u) {
  if (t.group == nullptr || &b.group() != t.group)
    throw PreconditionError("basis is over a different group");
  if (u.ambient_dim() != t.dim)
    throw PreconditionError("subspace ambient dimension does not match the table");
  const FiniteGroup& g = *t.group;
  SubmoduleReport report;
  report.fg_submodule = true;
  for (const auto& m : t.action)
    for (const auto& v : u.basis())
      if (!u.contains(m.apply(v))) {
        report.fg_submodule = false;
        break;
      }
  report.lg_submodule = true;
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const RationalMatrix hat = t.action[b.rep(k)] - t.action[g.inverse(b.rep(k))];
    for (const auto& v : u.basis())
      if (!u.contains(hat.apply(v))) {
        report.lg_submodule = false;
        break;
      }
  }
  return report;
}

bool schur_check(const std::vector<RationalMatrix>& mats, const IrreducibilityReport& report) {
  (void)mats;
  if (report.classification != Classification::absolutely_irreducible) return true;
  return report.commutant_dim == 1 && report.commutant_basis.size() == 1 &&
         report.commutant_basis.front() == RationalMatrix::identity(report.degree);
}

} // namespace plesken

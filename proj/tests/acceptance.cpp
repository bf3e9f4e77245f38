// Acceptance gate: twelve exact checks over the shipped corpus, one verdict
// line each. Groups and representations are constructed in code; expected
// values are cross-checked against the independent oracles in
// support/oracles.hpp wherever a figure could drift.

#include "plesken/error.hpp"
#include "plesken/group.hpp"
#include "plesken/group_algebra.hpp"
#include "plesken/io.hpp"
#include "plesken/plesken_algebra.hpp"
#include "plesken/representation.hpp"

#include "support/oracles.hpp"

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace plesken;

namespace {

void require(bool ok, const std::string& detail) {
  if (!ok) throw std::runtime_error(detail);
}

FiniteGroup build(const std::vector<std::string>& words) {
  std::vector<Permutation> gens;
  std::size_t degree = 0;
  for (const auto& w : words) degree = std::max(degree, parse_permutation(w).degree());
  for (const auto& w : words) gens.push_back(parse_permutation(w, degree));
  return group_from_generators(gens);
}

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

std::vector<NamedGroup> corpus() {
  std::vector<NamedGroup> out;
  out.push_back({"S3", build({"(1 2 3)", "(1 2)"})});
  out.push_back({"S4", build({"(1 2 3 4)", "(1 2)"})});
  out.push_back({"D4", build({"(1 2 3 4)", "(1 3)"})});
  out.push_back({"Q8", build({"(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"})});
  for (std::size_t k = 2; k <= 8; ++k) {
    std::vector<std::size_t> cycle;
    for (std::size_t i = 1; i <= k; ++i) cycle.push_back(i);
    out.push_back({"C" + std::to_string(k),
                   group_from_generators({Permutation::from_cycles({cycle}, k)})});
  }
  out.push_back({"A4", build({"(1 2 3)", "(2 3 4)"})});
  return out;
}

RationalMatrix m2(int a, int b, int c, int d) {
  return RationalMatrix::from_rows({{Rational(a), Rational(b)}, {Rational(c), Rational(d)}});
}

GroupRepresentation s3_standard(const FiniteGroup& s3) {
  return rep_from_generators(s3, {m2(0, -1, 1, -1), m2(0, 1, 1, 0)});
}

GroupRepresentation d4_rotation(const FiniteGroup& d4) {
  return rep_from_generators(d4, {m2(0, -1, 1, 0), m2(0, 1, 1, 0)});
}

// all degree-1 representations of g: sign assignments to the generators
// that extend multiplicatively
std::vector<GroupRepresentation> degree_one_reps(const FiniteGroup& g) {
  std::vector<GroupRepresentation> out;
  const std::size_t gens = g.generator_indices().size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens); ++mask) {
    std::vector<RationalMatrix> images;
    for (std::size_t k = 0; k < gens; ++k)
      images.push_back(RationalMatrix::from_rows(
          {{Rational((mask >> k) & 1 ? -1 : 1)}}));
    try {
      out.push_back(rep_from_generators(g, images));
    } catch (const plesken::Error&) {
      // this sign pattern does not extend; skip it
    }
  }
  return out;
}

void criterion_1() {
  const auto s3 = build({"(1 2 3)", "(1 2)"});
  const PleskenBasis b(s3);
  require(b.dim() == 1, "expected a one-dimensional algebra");
  require(s3.element(b.rep(0)).cycle_string() == "(1 2 3)",
          "expected the 3-cycle as the basis representative");
  require(structure_constants(b).all_zero(), "expected every bracket to vanish");
  // the bracket of arbitrary elements, not just basis lines
  const auto x = PleskenElement::unit(b, 0) * Rational(3, 2);
  const auto y = PleskenElement::unit(b, 0) * Rational(-5);
  require(plesken_bracket(x, y).is_zero(), "bracket of two elements must vanish");
}

void criterion_2() {
  const auto d4 = build({"(1 2 3 4)", "(1 3)"});
  const PleskenBasis b(d4);
  require(b.dim() == 1, "expected a one-dimensional algebra");
  const std::size_t a = d4.index_of(parse_permutation("(1 2 3 4)"));
  require(b.rep(0) == a, "expected the rotation as the basis representative");
  const auto hat = embed(PleskenElement::unit(b, 0));
  const std::size_t a3 = d4.index_of(parse_permutation("(1 4 3 2)"));
  for (std::size_t i = 0; i < d4.size(); ++i) {
    const Rational expected = i == a ? 1 : (i == a3 ? -1 : 0);
    require(hat.coeffs[i] == expected, "hat must equal the rotation minus its cube");
  }
}

void criterion_3() {
  const auto d4 = build({"(1 2 3 4)", "(1 3)"});
  const PleskenBasis b(d4);
  const auto psi = induce_plesken_rep(d4_rotation(d4), b);
  require(psi.hat_images.size() == 1, "expected one hat image");
  require(psi.hat_images[0] == m2(0, -2, 2, 0), "hat image must be [[0,-2],[2,0]]");
  const auto ones = degree_one_reps(d4);
  require(ones.size() == 4, "expected four degree-one representations");
  for (const auto& rho : ones) {
    const auto zero_psi = induce_plesken_rep(rho, b);
    for (const auto& h : zero_psi.hat_images)
      require(h.is_zero(), "degree-one representations must induce the zero map");
  }
}

void criterion_4() {
  const auto hat = m2(0, -2, 2, 0);
  const auto report = irreducibility({hat}, 2);
  require(report.classification == Classification::irreducible_over_Q,
          "expected irreducibility over the rationals");
  require(report.real_status == RealStatus::irreducible_over_R,
          "expected irreducibility over the reals");
  require(report.envelope_dim == 2, "expected envelope dimension 2");
  require(report.commutant_dim == 2, "expected commutant dimension 2");
  require(!report.witness.has_value(), "no witness may accompany an irreducible verdict");
  require(oracle::envelope_dim_naive({hat}, 2) == 2, "oracle envelope dimension must agree");
  require(oracle::commutant_dim_naive({hat}, 2) == 2, "oracle commutant dimension must agree");
  require(!oracle::deg2_invariant_line({hat}).has_value(),
          "the line-search oracle must find no rational invariant line");
  require(!oracle::deg2_single_real_reducible(hat),
          "the conic discriminant must rule out real invariant lines");
}

void criterion_5() {
  const auto s3 = build({"(1 2 3)", "(1 2)"});
  const auto rho = s3_standard(s3);
  std::vector<RationalMatrix> mats;
  for (std::size_t k : s3.generator_indices()) mats.push_back(rho.image(k));
  const auto report = irreducibility(mats, 2);
  require(report.classification == Classification::absolutely_irreducible,
          "expected absolute irreducibility");
  require(report.envelope_dim == 4, "expected the full matrix algebra as envelope");
  require(oracle::envelope_dim_naive(mats, 2) == 4, "oracle envelope dimension must agree");
  require(report.commutant_dim == 1, "expected a scalar commutant");
  require(report.commutant_basis.size() == 1 &&
              report.commutant_basis[0] == RationalMatrix::identity(2),
          "expected the identity as the commutant basis");
  require(oracle::commutant_dim_naive(mats, 2) == 1, "oracle commutant dimension must agree");
  require(schur_check(mats, report), "the Schur consequence must hold");
  require(!oracle::deg2_invariant_line(mats).has_value(),
          "the line-search oracle must find no rational invariant line");
}

void criterion_6() {
  const auto groups = corpus();
  // per-group block pools: every degree-one representation plus the natural
  // permutation representation
  struct Pool {
    const FiniteGroup* group;
    std::vector<GroupRepresentation> blocks;
  };
  std::vector<Pool> pools;
  for (const auto& ng : groups) {
    Pool p;
    p.group = &ng.group;
    p.blocks = degree_one_reps(ng.group);
    p.blocks.push_back(natural_permutation_rep(ng.group));
    pools.push_back(std::move(p));
  }

  std::mt19937_64 rng(20240814);
  int done = 0;
  while (done < 50) {
    const Pool& pool = pools[rng() % pools.size()];
    const std::size_t count = 2 + rng() % 2;
    std::vector<const GroupRepresentation*> blocks;
    std::size_t total = 0;
    for (std::size_t k = 0; k < count; ++k) {
      const auto& blk = pool.blocks[rng() % pool.blocks.size()];
      blocks.push_back(&blk);
      total += blk.degree;
    }
    if (total > 8) continue;  // redraw: keep the acting degree at desk scale

    GroupRepresentation rho = *blocks[0];
    for (std::size_t k = 1; k < blocks.size(); ++k) rho = direct_sum(rho, *blocks[k]);
    const PleskenBasis basis(*pool.group);

    Subspace w(rho.degree);
    for (std::size_t i = 0; i < blocks[0]->degree; ++i) {
      RationalVector e(rho.degree, Rational(0));
      e[i] = 1;
      w.insert(std::move(e));
    }
    require(check_reducibility_inheritance(rho, basis, w),
            "an invariant block must stay invariant under the hats");

    const auto psi = induce_plesken_rep(rho, basis);
    const auto report = irreducibility(psi.hat_images, rho.degree);
    require(report.classification == Classification::reducible_over_Q,
            "a direct sum must be classified reducible");
    require(report.witness.has_value(), "a reducible verdict must carry a witness");
    const auto& witness = *report.witness;
    require(witness.dim() > 0 && witness.dim() < rho.degree,
            "the witness must be proper and nonzero");
    require(oracle::invariant(psi.hat_images, witness.basis()),
            "the witness must be invariant under every hat image");
    ++done;
  }
}

void criterion_7() {
  for (const auto& ng : corpus()) {
    const PleskenBasis b(ng.group);
    std::size_t t = 0;
    for (std::size_t i = 0; i < ng.group.size(); ++i)
      if ((ng.group.element(i) * ng.group.element(i)).is_identity()) ++t;
    require(b.dim() == (ng.group.size() - t) / 2,
            ng.name + ": dimension formula violated");
    require(b.dim() == oracle::hat_rank(ng.group),
            ng.name + ": hat-span rank disagrees with the basis size");
  }
}

void criterion_8() {
  for (const auto& ng : corpus()) {
    const PleskenBasis b(ng.group);
    const auto sc = structure_constants(b);
    const std::size_t d = sc.dim;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          require(sc.at(i, j, k) == -sc.at(j, i, k), ng.name + ": antisymmetry violated");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) {
            Rational sum(0);
            for (std::size_t m = 0; m < d; ++m)
              sum += sc.at(i, j, m) * sc.at(m, k, l) + sc.at(j, k, m) * sc.at(m, i, l) +
                     sc.at(k, i, m) * sc.at(m, j, l);
            require(sum == 0, ng.name + ": Jacobi identity violated");
          }
    require(closed_form_bracket_check(b), ng.name + ": closed-form bracket identity violated");
  }
}

void criterion_9() {
  const auto c2 = build({"(1 2)"});
  struct Case {
    std::string name;
    FiniteGroup dom;
  };
  std::vector<Case> cases;
  cases.push_back({"sign map", build({"(1 2 3)", "(1 2)"})});
  cases.push_back({"dihedral quotient", build({"(1 2 3 4)", "(1 3)"})});
  for (const auto& c : cases) {
    const auto f = induce_group_hom(
        c.dom, c2, {parse_permutation("()", 2), parse_permutation("(1 2)")});
    const auto phi = induce_algebra_hom(f);
    const PleskenBasis db(c.dom), cb(c2);
    const auto lambda = induce_plesken_hom(f, db, cb);
    require(verify_plesken_map(lambda).ok, c.name + ": induced map must preserve brackets");
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = PleskenElement::zero(db);
      for (auto& coord : x.coords) coord = Rational(static_cast<long>(rng() % 9) - 4);
      require(embed(lambda.apply(x)) == phi.apply(embed(x)),
              c.name + ": the hat map must restrict the algebra map");
    }
    for (std::size_t k = 0; k < db.dim(); ++k) {
      const auto unit = PleskenElement::unit(db, k);
      require(embed(lambda.apply(unit)) == phi.apply(embed(unit)),
              c.name + ": the hat map must restrict the algebra map on basis lines");
    }
  }
}

void criterion_10() {
  const auto c2 = build({"(1 2)"});
  AlgebraHom phi;
  phi.domain = &c2;
  phi.codomain = &c2;
  phi.basis_images = {GroupAlgebraElement::basis(c2, 0),
                      GroupAlgebraElement::basis(c2, 1) * Rational(-1)};
  require(verify_algebra_hom(phi).ok, "the sign twist must be multiplicative");
  require(!is_induced_from_group_hom(phi),
          "the sign twist must not look like an induced group map");
}

void criterion_11() {
  const auto c3 = build({"(1 2 3)"});
  ModuleActionTable t;
  t.group = &c3;
  t.dim = 3;
  t.action = {RationalMatrix::identity(3),
              RationalMatrix::from_rows({{Rational(0), Rational(0), Rational(1)},
                                         {Rational(1), Rational(0), Rational(0)},
                                         {Rational(0), Rational(1), Rational(0)}}),
              RationalMatrix::from_rows({{Rational(0), Rational(-1), Rational(0)},
                                         {Rational(0), Rational(0), Rational(1)},
                                         {Rational(1), Rational(0), Rational(0)}})};
  const PleskenBasis b(c3);

  Subspace u(3);
  u.insert({Rational(1), Rational(1), Rational(0)});
  const auto sub = submodule_check(t, b, u);
  require(sub.lg_submodule, "U must be closed under the hat action");
  require(!sub.fg_submodule, "U must not be closed under the group action");
  // the group action leaves U: a(v1 + v2) = v2 + v3
  const auto moved = t.action[1].apply({Rational(1), Rational(1), Rational(0)});
  require(moved == RationalVector{Rational(0), Rational(1), Rational(1)},
          "a(v1 + v2) must be v2 + v3");
  require(!u.contains(moved), "v2 + v3 must lie outside U");

  const auto report = module_axioms_check(t, b);
  require(!report.fg_module, "the table must fail the algebra-module law");
  require(report.lg_module, "the table must satisfy the Lie-module law");
  require(!report.counterexamples.empty(), "the failure must come with a counterexample");
  // a(a v2) = v1 while the table's a^2 sends v2 to -v1
  const RationalVector v2{Rational(0), Rational(1), Rational(0)};
  require(t.action[1].apply(t.action[1].apply(v2)) ==
              RationalVector{Rational(1), Rational(0), Rational(0)},
          "a(a v2) must be v1");
  require(t.action[2].apply(v2) == RationalVector{Rational(-1), Rational(0), Rational(0)},
          "the table's a^2 must send v2 to -v1");
}

void criterion_12() {
  // companion matrices of the minimal polynomials of primitive n-th roots
  auto companion = [](const std::vector<int>& monic_coeffs) {
    const std::size_t n = monic_coeffs.size();
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r + 1 < n; ++r) m.at(r + 1, r) = 1;
    for (std::size_t r = 0; r < n; ++r) m.at(r, n - 1) = Rational(-monic_coeffs[r]);
    return m;
  };
  std::vector<std::pair<std::size_t, RationalMatrix>> companions;
  companions.emplace_back(3, companion({1, 1}));
  companions.emplace_back(4, companion({1, 0}));
  companions.emplace_back(5, companion({1, 1, 1, 1}));
  companions.emplace_back(6, companion({1, -1}));
  companions.emplace_back(7, companion({1, 1, 1, 1, 1, 1}));
  companions.emplace_back(8, companion({1, 0, 0, 0}));

  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<std::size_t> cycle;
    for (std::size_t i = 1; i <= n; ++i) cycle.push_back(i);
    const auto g = group_from_generators({Permutation::from_cycles({cycle}, n)});
    const PleskenBasis b(g);
    require(structure_constants(b).all_zero(),
            "C" + std::to_string(n) + ": structure constants must vanish");

    std::vector<GroupRepresentation> reps;
    reps.push_back(natural_permutation_rep(g));
    const auto trivial = rep_from_generators(g, {RationalMatrix::identity(1)});
    reps.push_back(direct_sum(trivial, trivial));
    for (const auto& [order, mat] : companions)
      if (order == n) reps.push_back(rep_from_generators(g, {mat}));

    for (const auto& rho : reps) {
      require(rho.degree >= 2, "test representations must have degree at least two");
      std::vector<RationalMatrix> mats;
      for (std::size_t k : g.generator_indices()) mats.push_back(rho.image(k));
      const auto fg_report = irreducibility(mats, rho.degree);
      require(fg_report.classification != Classification::absolutely_irreducible,
              "C" + std::to_string(n) + ": no abelian action may be absolutely irreducible");
      require(fg_report.envelope_dim < rho.degree * rho.degree,
              "C" + std::to_string(n) + ": the envelope must stay proper");

      const auto psi = induce_plesken_rep(rho, b);
      const auto lie_report = irreducibility(psi.hat_images, rho.degree);
      require(lie_report.classification != Classification::absolutely_irreducible,
              "C" + std::to_string(n) + ": no induced hat action may be absolutely irreducible");
    }
  }
}

} // namespace

int main() {
  struct Criterion {
    std::string label;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"C01 one hat line for the symmetric group on three points, all brackets zero", criterion_1},
      {"C02 one hat line for the dihedral group, spanned by rotation minus its cube", criterion_2},
      {"C03 rotation representation induces [[0,-2],[2,0]]; degree-one maps vanish", criterion_3},
      {"C04 rotation hat image: irreducible over Q and R, envelope 2, commutant 2", criterion_4},
      {"C05 standard representation: absolutely irreducible with scalar commutant", criterion_5},
      {"C06 fifty random direct sums: inherited invariance and sound reducible verdicts", criterion_6},
      {"C07 dimension formula matches the hat-span rank across the corpus", criterion_7},
      {"C08 antisymmetry, Jacobi, and the closed-form bracket across the corpus", criterion_8},
      {"C09 induced hat maps restrict the induced algebra maps", criterion_9},
      {"C10 the sign twist is an algebra map but not induced from a group map", criterion_10},
      {"C11 twisted cyclic table: Lie submodule, no algebra submodule, product counterexample",
       criterion_11},
      {"C12 cyclic groups: vanishing constants, no absolute irreducibility above degree one",
       criterion_12},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    try {
      c.run();
      std::printf("PASS %s\n", c.label.c_str());
    } catch (const std::exception& e) {
      std::printf("FAIL %s: %s\n", c.label.c_str(), e.what());
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return 1;
}

#ifndef PLESKEN_REPRESENTATION_HPP
#define PLESKEN_REPRESENTATION_HPP

#include "plesken/group_algebra.hpp"
#include "plesken/matrix.hpp"
#include "plesken/plesken_algebra.hpp"
#include "plesken/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plesken {

/// Matrix representation of a finite group over the rationals, stored as one
/// image per group element. Multiplicativity images[ij] = images[i]*images[j]
/// is verified exhaustively at construction.
struct GroupRepresentation {
  const FiniteGroup* group = nullptr;
  std::size_t degree = 0;
  std::vector<RationalMatrix> images;

  const RationalMatrix& image(std::size_t i) const { return images.at(i); }
};

/// Extends one matrix per generator along the Cayley table, then checks
/// every product pair. Failures raise InvalidRepresentationError naming a
/// witness pair.
GroupRepresentation rep_from_generators(const FiniteGroup& g,
                                        const std::vector<RationalMatrix>& gen_images);

/// Permutation matrix with entry (x, p(x)) = 1, so that matrices multiply in
/// the same order as the left-to-right permutation product.
RationalMatrix perm_matrix(const Permutation& p);

/// The group acting on its own points by permutation matrices.
GroupRepresentation natural_permutation_rep(const FiniteGroup& g);

/// Degree-N regular representation: column h of the image of g is the basis
/// vector at index g*h.
GroupRepresentation regular_representation(const FiniteGroup& g);

/// Block-diagonal direct sum.
GroupRepresentation direct_sum(const GroupRepresentation& a, const GroupRepresentation& b);

/// The induced linear map QG -> matrices: x -> sum x_i rho(g_i). This is the
/// group-algebra representation attached to rho.
RationalMatrix apply_rep(const GroupRepresentation& rho, const GroupAlgebraElement& x);

/// Representation of the Plesken Lie algebra in hat coordinates.
struct LieRepresentation {
  const PleskenBasis* basis = nullptr;
  std::size_t degree = 0;
  std::vector<RationalMatrix> hat_images;  // one per basis representative

  RationalMatrix apply(const PleskenElement& x) const;
};

/// hat_images[k] = rho(g_k) - rho(g_k^{-1}); preserves brackets.
LieRepresentation induce_plesken_rep(const GroupRepresentation& rho, const PleskenBasis& basis);

/// Exhaustive bracket-preservation check for a Lie representation; reports
/// the first offending basis pair.
struct BracketCheck {
  bool ok = true;
  std::size_t bad_i = 0;
  std::size_t bad_j = 0;
};
BracketCheck verify_lie_representation(const LieRepresentation& psi);

/// Echelon basis of {X : XA = AX for every A in mats}; the full matrix space
/// when mats is empty.
std::vector<RationalMatrix> commutant(const std::vector<RationalMatrix>& mats,
                                      std::size_t degree);

/// The unital associative algebra generated by mats, as a subspace of the
/// degree^2-dimensional matrix space.
Subspace envelope(const std::vector<RationalMatrix>& mats, std::size_t degree);

enum class Classification : std::uint8_t {
  absolutely_irreducible,
  irreducible_over_Q,
  reducible_over_Q,
  undetermined,
};

enum class RealStatus : std::uint8_t {
  irreducible_over_R,
  reducible_over_R,
  undetermined,
};

std::string to_string(Classification c);
std::string to_string(RealStatus s);

struct IrreducibilityReport {
  std::size_t degree = 0;
  std::size_t commutant_dim = 0;
  std::vector<RationalMatrix> commutant_basis;
  std::size_t envelope_dim = 0;
  Classification classification = Classification::undetermined;
  std::optional<Subspace> witness;  // invariant, proper, nonzero; reducible only
  RealStatus real_status = RealStatus::undetermined;
  std::string reason;  // set when classification is undetermined
};

struct IrreducibilityOptions {
  std::uint64_t seed = 0;
  int max_factor_degree = 8;
  std::size_t random_probes = 32;
};

/// Decides reducibility of the common invariant-subspace problem for mats
/// acting on Q^degree. Witness subspaces are verified invariant, proper and
/// nonzero before the report is returned; an exhausted probe budget or a
/// factor-degree overflow yields the undetermined classification with the
/// reason recorded, never a wrong verdict.
IrreducibilityReport irreducibility(const std::vector<RationalMatrix>& mats, std::size_t degree,
                                    const IrreducibilityOptions& options = {});

/// Inheritance law: a subspace invariant under every rho(g) is invariant
/// under every induced hat image. The precondition (rho-invariance) is
/// checked first and raises PreconditionError when violated.
bool check_reducibility_inheritance(const GroupRepresentation& rho, const PleskenBasis& basis,
                                    const Subspace& w);

/// Raw per-element action table; nothing about it is assumed, the checkers
/// below report which module laws it satisfies.
struct ModuleActionTable {
  const FiniteGroup* group = nullptr;
  std::size_t dim = 0;
  std::vector<RationalMatrix> action;  // one per group element
};

struct ModuleCounterexample {
  std::string law;  // "fg" or "lie"
  std::size_t i = 0;
  std::size_t j = 0;
};

struct ModuleReport {
  bool fg_module = false;
  bool lg_module = false;
  std::vector<ModuleCounterexample> counterexamples;
};

/// fg_module: action[ij] = action[i]action[j] over all pairs. lg_module: the
/// induced hat action x^ -> action[x] - action[x^{-1}] satisfies
/// [x^,y^]v = x^(y^v) - y^(x^v) over all basis pairs; linearity in both
/// arguments is structural for matrix actions.
ModuleReport module_axioms_check(const ModuleActionTable& t, const PleskenBasis& b);

struct SubmoduleReport {
  bool fg_submodule = false;
  bool lg_submodule = false;
};

/// Closure of U under every group action matrix / every hat action matrix.
SubmoduleReport submodule_check(const ModuleActionTable& t, const PleskenBasis& b,
                                const Subspace& u);

/// Schur consequence: an absolutely irreducible acting set must have the
/// scalar line as its commutant; vacuously true otherwise.
bool schur_check(const std::vector<RationalMatrix>& mats, const IrreducibilityReport& report);

} // namespace plesken

#endif

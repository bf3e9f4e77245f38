#include "plesken/group.hpp"

#include "plesken/error.hpp"

#include <deque>
#include <utility>

namespace plesken {

std::size_t FiniteGroup::check(std::size_t i) const {
  if (i >= elements_.size()) throw PreconditionError("element index out of range");
  return i;
}

const Permutation& FiniteGroup::element(std::size_t i) const { return elements_[check(i)]; }

bool FiniteGroup::contains(const Permutation& p) const { return index_.count(p) != 0; }

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw PreconditionError("permutation is not a group element");
  return it->second;
}

std::size_t FiniteGroup::order_of(std::size_t i) const {
  check(i);
  std::size_t power = i;
  std::size_t n = 1;
  while (power != 0) {
    power = product(power, i);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

std::size_t FiniteGroup::involution_type_count() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (product(i, i) == 0) ++t;
  return t;
}

FiniteGroup group_from_generators(const std::vector<Permutation>& generators,
                                  std::size_t max_elements) {
  if (generators.empty()) throw PreconditionError("need at least one generator");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw PreconditionError("generators act on different point sets");

  FiniteGroup group;
  group.degree_ = degree;
  const Permutation id = Permutation::identity(degree);
  group.elements_.push_back(id);
  group.index_[id] = 0;

  // Breadth-first closure; each newly discovered element remembers the
  // (earlier element, generator) pair that produced it, which later lets the
  // Cayley table fill column by column without composing permutations.
  std::vector<std::pair<std::size_t, std::size_t>> definition{{0, 0}};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Permutation next = group.elements_[i] * generators[k];
      if (group.index_.count(next)) continue;
      if (group.elements_.size() >= max_elements)
        throw ResourceError("group exceeds the element cap of " + std::to_string(max_elements));
      group.index_[next] = group.elements_.size();
      group.elements_.push_back(std::move(next));
      definition.emplace_back(i, k);
      frontier.push_back(group.elements_.size() - 1);
    }
  }

  const std::size_t n = group.elements_.size();
  group.cayley_.assign(n * n, 0);
  // Generator columns by direct composition, the rest by the definition
  // recurrence x(p*g) = (xp)g.
  std::vector<std::vector<std::uint32_t>> gen_col(generators.size());
  for (std::size_t k = 0; k < generators.size(); ++k) {
    gen_col[k].resize(n);
    for (std::size_t i = 0; i < n; ++i)
      gen_col[k][i] = static_cast<std::uint32_t>(group.index_.at(group.elements_[i] * generators[k]));
  }
  for (std::size_t i = 0; i < n; ++i) group.cayley_[i * n + 0] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 1; j < n; ++j) {
    const auto [parent, k] = definition[j];
    for (std::size_t i = 0; i < n; ++i)
      group.cayley_[i * n + j] = gen_col[k][group.cayley_[i * n + parent]];
  }

  for (const auto& g : generators) group.generator_indices_.push_back(group.index_.at(g));
  group.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) group.inverse_[i] = group.index_.at(group.elements_[i].inverse());
  return group;
}

GroupHom induce_group_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                          const std::vector<Permutation>& generator_images) {
  const auto& gens = domain.generator_indices();
  if (generator_images.size() != gens.size())
    throw PreconditionError("expected " + std::to_string(gens.size()) +
                            " generator images, got " + std::to_string(generator_images.size()));
  std::vector<std::size_t> image_index(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!codomain.contains(generator_images[k]))
      throw NotAHomomorphismError("generator image " + generator_images[k].cycle_string() +
                                  " lies outside the codomain");
    image_index[k] = codomain.index_of(generator_images[k]);
  }

  // Propagate images along words; a clash on any element means the
  // assignment does not extend to a map at all.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  GroupHom hom;
  hom.domain = &domain;
  hom.codomain = &codomain;
  hom.images.assign(domain.size(), kUnset);
  hom.images[0] = 0;
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t j = domain.product(i, gens[k]);
      const std::size_t expected = codomain.product(hom.images[i], image_index[k]);
      if (hom.images[j] == kUnset) {
        hom.images[j] = expected;
        frontier.push_back(j);
      } else if (hom.images[j] != expected) {
        throw NotAHomomorphismError("generator images are inconsistent at " +
                                    domain.element(j).cycle_string());
      }
    }
  }

  HomCheck check = verify_group_hom(hom);
  if (!check.ok)
    throw NotAHomomorphismError("multiplicativity fails on the pair (" +
                                domain.element(check.bad_a).cycle_string() + ", " +
                                domain.element(check.bad_b).cycle_string() + ")");
  return hom;
}

HomCheck verify_group_hom(const GroupHom& hom) {
  const FiniteGroup& d = *hom.domain;
  const FiniteGroup& c = *hom.codomain;
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b)
      if (hom.images[d.product(a, b)] != c.product(hom.images[a], hom.images[b]))
        return {false, a, b};
  return {true, 0, 0};
}

} // namespace plesken

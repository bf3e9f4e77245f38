#ifndef PLESKEN_IO_HPP
#define PLESKEN_IO_HPP

#include "plesken/group.hpp"
#include "plesken/group_algebra.hpp"
#include "plesken/matrix.hpp"
#include "plesken/plesken_algebra.hpp"
#include "plesken/representation.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace plesken::io {

using json = nlohmann::ordered_json;

/// Group file: one permutation per line in 1-based disjoint-cycle notation;
/// blank lines and '#' comments ignored; the point count is the largest
/// point mentioned.
FiniteGroup load_group_file(const std::string& path, std::size_t max_elements = 5000);

/// Representation file: {"degree": n, "generators": [{"perm": word,
/// "matrix": rows of rational strings}, ...]} with one entry per group-file
/// generator, in the same order.
GroupRepresentation load_rep_file(const std::string& path, const FiniteGroup& g);

/// Module table file: {"dim": n, "action": [{"perm": word, "matrix": ...},
/// ...]} covering every group element exactly once.
ModuleActionTable load_module_table(const std::string& path, const FiniteGroup& g);

/// Subspace file: {"ambient_dim": n, "vectors": [[rational strings], ...]}.
Subspace load_subspace(const std::string& path);

enum class MapKind { group, algebra, plesken };

/// Map file, dispatched on "kind":
///   group:   {"kind":"group","generator_images":[word, ...]}
///   algebra: {"kind":"algebra","images":[{"element":word,
///             "image":[[coeff,word],...]}, ...]} covering every element
///   plesken: {"kind":"plesken","images":[{"element":word,
///             "coords":[rationals]}, ...]} covering every hat basis line
struct MapFileData {
  MapKind kind = MapKind::group;
  std::vector<Permutation> generator_images;
  std::vector<GroupAlgebraElement> algebra_images;   // per domain element index
  std::vector<std::vector<Rational>> plesken_columns;  // per domain basis position
};

MapFileData load_map_file(const std::string& path, const FiniteGroup& domain,
                          const FiniteGroup& codomain, const PleskenBasis& domain_basis,
                          const PleskenBasis& codomain_basis);

json matrix_to_json(const RationalMatrix& m);
json vector_to_json(const std::vector<Rational>& v);
json subspace_to_json(const Subspace& s);
json algebra_element_to_json(const GroupAlgebraElement& x);
RationalMatrix matrix_from_json(const json& j, const std::string& where);

} // namespace plesken::io

#endif

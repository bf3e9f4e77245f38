#include "plesken/io.hpp"

#include "plesken/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace plesken::io {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing key \"" + key + "\"");
  return *it;
}

std::string string_field(const json& j, const std::string& key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) throw InputError(where + ": key \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t size_field(const json& j, const std::string& key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
    throw InputError(where + ": key \"" + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

std::string trimmed(const std::string& line) {
  const auto from = line.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) return "";
  const auto to = line.find_last_not_of(" \t\r\n");
  return line.substr(from, to - from + 1);
}

} // namespace

FiniteGroup load_group_file(const std::string& path, std::size_t max_elements) {
  std::istringstream in(read_file(path));
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (!line.empty()) words.push_back(line);
  }
  if (words.empty()) throw InputError(path + ": no permutations found");

  std::size_t degree = 0;
  for (const auto& w : words) {
    try {
      degree = std::max(degree, parse_permutation(w).degree());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  std::vector<Permutation> generators;
  generators.reserve(words.size());
  for (const auto& w : words) generators.push_back(parse_permutation(w, degree));
  return group_from_generators(generators, max_elements);
}

RationalMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": matrix must be a nonempty array of rows");
  std::vector<RationalVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError(where + ": matrix rows must be arrays");
    RationalVector r;
    for (const auto& entry : row) {
      if (!entry.is_string()) throw InputError(where + ": matrix entries must be rational strings");
      try {
        r.push_back(parse_rational(entry.get<std::string>()));
      } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
      }
    }
    rows.push_back(std::move(r));
  }
  try {
    return RationalMatrix::from_rows(rows);
  } catch (const Error& e) {
    throw InputError(where + ": " + e.what());
  }
}

GroupRepresentation load_rep_file(const std::string& path, const FiniteGroup& g) {
  const json j = parse_json_file(path);
  const std::size_t degree = size_field(j, "degree", path);
  const json& gens = field(j, "generators", path);
  if (!gens.is_array()) throw InputError(path + ": \"generators\" must be an array");
  const auto& gen_indices = g.generator_indices();
  if (gens.size() != gen_indices.size())
    throw InputError(path + ": expected " + std::to_string(gen_indices.size()) +
                     " generator entries, found " + std::to_string(gens.size()));

  std::vector<RationalMatrix> images;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string word = string_field(gens[k], "perm", path);
    Permutation p;
    try {
      p = parse_permutation(word, g.degree());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
    if (!(p == g.element(gen_indices[k])))
      throw InputError(path + ": generator " + word + " does not match group generator " +
                       g.element(gen_indices[k]).cycle_string());
    RationalMatrix m = matrix_from_json(field(gens[k], "matrix", path), path);
    if (m.rows() != degree || m.cols() != degree)
      throw InputError(path + ": matrix for " + word + " is not " + std::to_string(degree) + "x" +
                       std::to_string(degree));
    images.push_back(std::move(m));
  }
  try {
    return rep_from_generators(g, images);
  } catch (const Error& e) {
    throw InvalidRepresentationError(path + ": " + e.what());
  }
}

ModuleActionTable load_module_table(const std::string& path, const FiniteGroup& g) {
  const json j = parse_json_file(path);
  ModuleActionTable table;
  table.group = &g;
  table.dim = size_field(j, "dim", path);
  const json& action = field(j, "action", path);
  if (!action.is_array()) throw InputError(path + ": \"action\" must be an array");
  table.action.assign(g.size(), RationalMatrix());
  std::vector<bool> seen(g.size(), false);
  for (const auto& entry : action) {
    const std::string word = string_field(entry, "perm", path);
    std::size_t index = 0;
    try {
      index = g.index_of(parse_permutation(word, g.degree()));
    } catch (const Error& e) {
      throw InputError(path + ": " + e.what());
    }
    if (seen[index]) throw InputError(path + ": duplicate action entry for " + word);
    seen[index] = true;
    RationalMatrix m = matrix_from_json(field(entry, "matrix", path), path);
    if (m.rows() != table.dim || m.cols() != table.dim)
      throw InputError(path + ": matrix for " + word + " is not " + std::to_string(table.dim) +
                       "x" + std::to_string(table.dim));
    table.action[index] = std::move(m);
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!seen[i])
      throw InputError(path + ": no action entry for " + g.element(i).cycle_string());
  return table;
}

Subspace load_subspace(const std::string& path) {
  const json j = parse_json_file(path);
  const std::size_t ambient = size_field(j, "ambient_dim", path);
  const json& vectors = field(j, "vectors", path);
  if (!vectors.is_array()) throw InputError(path + ": \"vectors\" must be an array");
  Subspace s(ambient);
  for (const auto& vec : vectors) {
    if (!vec.is_array()) throw InputError(path + ": vectors must be arrays of rational strings");
    RationalVector v;
    for (const auto& entry : vec) {
      if (!entry.is_string()) throw InputError(path + ": vector entries must be rational strings");
      try {
        v.push_back(parse_rational(entry.get<std::string>()));
      } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
      }
    }
    if (v.size() != ambient)
      throw InputError(path + ": vector length does not match ambient_dim");
    s.insert(std::move(v));
  }
  return s;
}

namespace {

GroupAlgebraElement algebra_element_from_json(const json& j, const FiniteGroup& g,
                                              const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": element must be a list of [coeff, word] pairs");
  GroupAlgebraElement x = GroupAlgebraElement::zero(g);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw InputError(where + ": element terms must be [coeff, word] string pairs");
    try {
      const Rational c = parse_rational(pair[0].get<std::string>());
      const std::size_t i = g.index_of(parse_permutation(pair[1].get<std::string>(), g.degree()));
      x.coeffs[i] += c;
    } catch (const Error& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return x;
}

} // namespace

MapFileData load_map_file(const std::string& path, const FiniteGroup& domain,
                          const FiniteGroup& codomain, const PleskenBasis& domain_basis,
                          const PleskenBasis& codomain_basis) {
  const json j = parse_json_file(path);
  const std::string kind = string_field(j, "kind", path);
  MapFileData data;
  if (kind == "group") {
    data.kind = MapKind::group;
    const json& images = field(j, "generator_images", path);
    if (!images.is_array()) throw InputError(path + ": \"generator_images\" must be an array");
    for (const auto& word : images) {
      if (!word.is_string()) throw InputError(path + ": generator images must be cycle words");
      try {
        data.generator_images.push_back(
            parse_permutation(word.get<std::string>(), codomain.degree()));
      } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
      }
    }
    return data;
  }
  if (kind == "algebra") {
    data.kind = MapKind::algebra;
    const json& images = field(j, "images", path);
    if (!images.is_array()) throw InputError(path + ": \"images\" must be an array");
    data.algebra_images.assign(domain.size(), GroupAlgebraElement::zero(codomain));
    std::vector<bool> seen(domain.size(), false);
    for (const auto& entry : images) {
      const std::string word = string_field(entry, "element", path);
      std::size_t index = 0;
      try {
        index = domain.index_of(parse_permutation(word, domain.degree()));
      } catch (const Error& e) {
        throw InputError(path + ": " + e.what());
      }
      if (seen[index]) throw InputError(path + ": duplicate image for " + word);
      seen[index] = true;
      data.algebra_images[index] =
          algebra_element_from_json(field(entry, "image", path), codomain, path);
    }
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (!seen[i]) throw InputError(path + ": no image for " + domain.element(i).cycle_string());
    return data;
  }
  if (kind == "plesken") {
    data.kind = MapKind::plesken;
    const json& images = field(j, "images", path);
    if (!images.is_array()) throw InputError(path + ": \"images\" must be an array");
    data.plesken_columns.assign(domain_basis.dim(),
                                std::vector<Rational>(codomain_basis.dim(), Rational(0)));
    std::vector<bool> seen(domain_basis.dim(), false);
    for (const auto& entry : images) {
      const std::string word = string_field(entry, "element", path);
      std::size_t element = 0;
      try {
        element = domain.index_of(parse_permutation(word, domain.degree()));
      } catch (const Error& e) {
        throw InputError(path + ": " + e.what());
      }
      if (!domain_basis.has_position(element))
        throw InputError(path + ": " + word + " has a zero hat and spans no basis line");
      const std::size_t position = domain_basis.position(element);
      if (seen[position]) throw InputError(path + ": duplicate image for the hat line of " + word);
      seen[position] = true;
      const json& coords = field(entry, "coords", path);
      if (!coords.is_array() || coords.size() != codomain_basis.dim())
        throw InputError(path + ": \"coords\" must list " +
                         std::to_string(codomain_basis.dim()) + " rationals");
      std::vector<Rational> column(codomain_basis.dim());
      for (std::size_t k = 0; k < column.size(); ++k) {
        if (!coords[k].is_string()) throw InputError(path + ": coords must be rational strings");
        try {
          column[k] = parse_rational(coords[k].get<std::string>());
        } catch (const InputError& e) {
          throw InputError(path + ": " + e.what());
        }
      }
      // The file names an arbitrary pair member; normalize to the canonical
      // representative's column.
      if (domain_basis.sign(element) == -1)
        for (auto& c : column) c = -c;
      data.plesken_columns[position] = std::move(column);
    }
    for (std::size_t k = 0; k < domain_basis.dim(); ++k)
      if (!seen[k])
        throw InputError(path + ": no image for the hat line of " +
                         domain.element(domain_basis.rep(k)).cycle_string());
    return data;
  }
  throw InputError(path + ": unknown map kind \"" + kind + "\"");
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json subspace_to_json(const Subspace& s) {
  json out;
  out["ambient_dim"] = s.ambient_dim();
  out["dim"] = s.dim();
  json basis = json::array();
  for (const auto& row : s.basis()) basis.push_back(vector_to_json(row));
  out["basis"] = basis;
  return out;
}

json algebra_element_to_json(const GroupAlgebraElement& x) {
  json out = json::array();
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    out.push_back(json::array({to_string(x.coeffs[i]), x.group->element(i).cycle_string()}));
  }
  return out;
}

} // namespace plesken::io

// plg: Plesken Lie algebra toolkit front end.

#include "plesken/error.hpp"
#include "plesken/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using plesken::io::json;

struct Config {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t max_elements = 5000;
  int max_factor_degree = 8;
};

void emit(const Config& cfg, const json& report, const std::vector<std::string>& text_lines) {
  if (cfg.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& line : text_lines) std::cout << line << "\n";
  }
}

std::string matrix_line(const plesken::RationalMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += " ";
      out += plesken::to_string(m.at(r, c));
    }
  }
  return out + "]";
}

std::string vector_line(const std::vector<plesken::Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += plesken::to_string(v[i]);
  }
  return out + ")";
}

int cmd_group_analyze(const Config& cfg, const std::string& group_path) {
  const auto g = plesken::io::load_group_file(group_path, cfg.max_elements);
  json report;
  report["command"] = "group analyze";
  report["order"] = g.size();
  report["degree"] = g.degree();
  report["abelian"] = g.is_abelian();
  report["involution_type_count"] = g.involution_type_count();
  emit(cfg, report,
       {"order " + std::to_string(g.size()), "degree " + std::to_string(g.degree()),
        std::string("abelian ") + (g.is_abelian() ? "yes" : "no"),
        "involution_type_count " + std::to_string(g.involution_type_count())});
  return 0;
}

int cmd_plesken_basis(const Config& cfg, const std::string& group_path) {
  const auto g = plesken::io::load_group_file(group_path, cfg.max_elements);
  const plesken::PleskenBasis basis(g);
  json report;
  report["command"] = "plesken basis";
  report["order"] = g.size();
  report["dim"] = basis.dim();
  json lines = json::array();
  std::vector<std::string> text{"dim " + std::to_string(basis.dim())};
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    const std::size_t r = basis.rep(k);
    const std::string word = g.element(r).cycle_string();
    const std::string inverse = g.element(g.inverse(r)).cycle_string();
    lines.push_back({{"word", word}, {"inverse", inverse}});
    text.push_back("[" + std::to_string(k) + "] " + word + " - " + inverse);
  }
  report["basis"] = lines;
  emit(cfg, report, text);
  return 0;
}

int cmd_plesken_constants(const Config& cfg, const std::string& group_path) {
  const auto g = plesken::io::load_group_file(group_path, cfg.max_elements);
  const plesken::PleskenBasis basis(g);
  const auto sc = plesken::structure_constants(basis);
  json report;
  report["command"] = "plesken constants";
  report["dim"] = basis.dim();
  json words = json::array();
  for (std::size_t k = 0; k < basis.dim(); ++k)
    words.push_back(g.element(basis.rep(k)).cycle_string());
  report["basis"] = words;
  json nonzero = json::array();
  std::vector<std::string> text{"dim " + std::to_string(basis.dim())};
  for (std::size_t i = 0; i < sc.dim; ++i)
    for (std::size_t j = 0; j < sc.dim; ++j)
      for (std::size_t k = 0; k < sc.dim; ++k) {
        if (sc.at(i, j, k) == 0) continue;
        nonzero.push_back(
            {{"i", i}, {"j", j}, {"k", k}, {"c", plesken::to_string(sc.at(i, j, k))}});
        text.push_back("c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                       std::to_string(k) + "] = " + plesken::to_string(sc.at(i, j, k)));
      }
  report["nonzero"] = nonzero;
  if (text.size() == 1) text.push_back("all structure constants vanish");
  emit(cfg, report, text);
  return 0;
}

int cmd_plesken_analyze(const Config& cfg, const std::string& group_path) {
  const auto g = plesken::io::load_group_file(group_path, cfg.max_elements);
  const plesken::PleskenBasis basis(g);
  const auto sc = plesken::structure_constants(basis);
  const auto analysis = plesken::lie_analysis(sc);
  const bool closed_form = plesken::closed_form_bracket_check(basis);
  json report;
  report["command"] = "plesken analyze";
  report["dim"] = basis.dim();
  report["abelian"] = analysis.abelian;
  report["center_dim"] = analysis.center_dim;
  report["derived_dim"] = analysis.derived_dim;
  report["closed_form_bracket_check"] = closed_form;
  emit(cfg, report,
       {"dim " + std::to_string(basis.dim()),
        std::string("abelian ") + (analysis.abelian ? "yes" : "no"),
        "center_dim " + std::to_string(analysis.center_dim),
        "derived_dim " + std::to_string(analysis.derived_dim),
        std::string("closed_form_bracket_check ") + (closed_form ? "pass" : "FAIL")});
  return 0;
}

int cmd_rep_induce(const Config& cfg, const std::string& group_path, const std::string& rep_path) {
  const auto g = plesken::io::load_group_file(group_path, cfg.max_elements);
  const auto rho = plesken::io::load_rep_file(rep_path, g);
  const plesken::PleskenBasis basis(g);
  const auto psi = plesken::induce_plesken_rep(rho, basis);
  json report;
  report["command"] = "rep induce";
  report["degree"] = psi.degree;
  report["dim"] = basis.dim();
  json images = json::array();
  std::vector<std::string> text{"degree " + std::to_string(psi.degree),
                                "dim " + std::to_string(basis.dim())};
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    const std::string word = g.element(basis.rep(k)).cycle_string();
    images.push_back(
        {{"word", word}, {"matrix", plesken::io::matrix_to_json(psi.hat_images[k])}});
    text.push_back("psi(hat " + word + ") = " + matrix_line(psi.hat_images[k]));
  }
  report["hat_images"] = images;
  emit(cfg, report, text);
  return 0;
}

int cmd_rep_check(const Config& cfg, const std::string& group_path, const std::string& rep_path,
                  const std::string& acting_as) {
  const auto g = plesken::io::load_group_file(group_path, cfg.max_elements);
  const auto rho = plesken::io::load_rep_file(rep_path, g);
  std::vector<plesken::RationalMatrix> mats;
  if (acting_as == "fg") {
    for (std::size_t k : g.generator_indices()) mats.push_back(rho.image(k));
  } else {
    const plesken::PleskenBasis basis(g);
    const auto psi = plesken::induce_plesken_rep(rho, basis);
    mats = psi.hat_images;
  }
  plesken::IrreducibilityOptions options;
  options.seed = cfg.seed;
  options.max_factor_degree = cfg.max_factor_degree;
  const auto result = plesken::irreducibility(mats, rho.degree, options);
  const bool schur = plesken::schur_check(mats, result);

  json report;
  report["command"] = "rep check";
  report["acting_as"] = acting_as;
  report["degree"] = result.degree;
  report["envelope_dim"] = result.envelope_dim;
  report["commutant_dim"] = result.commutant_dim;
  json cb = json::array();
  for (const auto& m : result.commutant_basis) cb.push_back(plesken::io::matrix_to_json(m));
  report["commutant_basis"] = cb;
  report["classification"] = plesken::to_string(result.classification);
  report["real_status"] = plesken::to_string(result.real_status);
  report["witness"] =
      result.witness ? plesken::io::subspace_to_json(*result.witness) : json(nullptr);
  report["reason"] = result.reason.empty() ? json(nullptr) : json(result.reason);
  report["schur_check"] = schur;

  std::vector<std::string> text{"acting_as " + acting_as, "degree " + std::to_string(result.degree),
                                "envelope_dim " + std::to_string(result.envelope_dim),
                                "commutant_dim " + std::to_string(result.commutant_dim),
                                "classification " + plesken::to_string(result.classification),
                                "real_status " + plesken::to_string(result.real_status)};
  if (result.witness) {
    text.push_back("witness dim " + std::to_string(result.witness->dim()));
    for (const auto& row : result.witness->basis()) text.push_back("  " + vector_line(row));
  }
  if (!result.reason.empty()) text.push_back("reason " + result.reason);
  text.push_back(std::string("schur_check ") + (schur ? "pass" : "FAIL"));
  emit(cfg, report, text);
  return result.classification == plesken::Classification::undetermined ? 3 : 0;
}

int cmd_module_check(const Config& cfg, const std::string& group_path,
                     const std::string& table_path, const std::string& subspace_path) {
  const auto g = plesken::io::load_group_file(group_path, cfg.max_elements);
  const auto table = plesken::io::load_module_table(table_path, g);
  const plesken::PleskenBasis basis(g);
  const auto axioms = plesken::module_axioms_check(table, basis);

  json report;
  report["command"] = "module check";
  report["dim"] = table.dim;
  report["fg_module"] = axioms.fg_module;
  report["lg_module"] = axioms.lg_module;
  json counters = json::array();
  for (const auto& ce : axioms.counterexamples) {
    if (ce.law == "fg") {
      counters.push_back({{"law", "fg"},
                          {"a", g.element(ce.i).cycle_string()},
                          {"b", g.element(ce.j).cycle_string()}});
    } else {
      counters.push_back({{"law", "lie"},
                          {"a", g.element(basis.rep(ce.i)).cycle_string()},
                          {"b", g.element(basis.rep(ce.j)).cycle_string()}});
    }
  }
  report["counterexamples"] = counters;

  std::vector<std::string> text{"dim " + std::to_string(table.dim),
                                std::string("fg_module ") + (axioms.fg_module ? "yes" : "no"),
                                std::string("lg_module ") + (axioms.lg_module ? "yes" : "no")};
  for (const auto& ce : axioms.counterexamples) {
    const std::string a =
        ce.law == "fg" ? g.element(ce.i).cycle_string() : g.element(basis.rep(ce.i)).cycle_string();
    const std::string b =
        ce.law == "fg" ? g.element(ce.j).cycle_string() : g.element(basis.rep(ce.j)).cycle_string();
    text.push_back("counterexample " + ce.law + " (" + a + ", " + b + ")");
  }

  if (!subspace_path.empty()) {
    const auto u = plesken::io::load_subspace(subspace_path);
    const auto sub = plesken::submodule_check(table, basis, u);
    report["submodule"] = {{"fg_submodule", sub.fg_submodule}, {"lg_submodule", sub.lg_submodule}};
    text.push_back(std::string("fg_submodule ") + (sub.fg_submodule ? "yes" : "no"));
    text.push_back(std::string("lg_submodule ") + (sub.lg_submodule ? "yes" : "no"));
  }
  emit(cfg, report, text);
  return 0;
}

int cmd_hom_induce(const Config& cfg, const std::string& domain_path,
                   const std::string& codomain_path, const std::string& map_path) {
  const auto dom = plesken::io::load_group_file(domain_path, cfg.max_elements);
  const auto cod = plesken::io::load_group_file(codomain_path, cfg.max_elements);
  const plesken::PleskenBasis dom_basis(dom);
  const plesken::PleskenBasis cod_basis(cod);
  const auto data = plesken::io::load_map_file(map_path, dom, cod, dom_basis, cod_basis);
  if (data.kind != plesken::io::MapKind::group)
    throw plesken::InputError(map_path + ": only group maps can be induced");
  const auto hom = plesken::induce_group_hom(dom, cod, data.generator_images);
  const auto lie = plesken::induce_plesken_hom(hom, dom_basis, cod_basis);

  json report;
  report["command"] = "hom induce";
  json images = json::array();
  std::vector<std::string> text;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    images.push_back({{"element", dom.element(i).cycle_string()},
                      {"image", cod.element(hom.images[i]).cycle_string()}});
    text.push_back(dom.element(i).cycle_string() + " -> " +
                   cod.element(hom.images[i]).cycle_string());
  }
  report["group_hom"] = images;
  json basis_words = json::array();
  for (std::size_t k = 0; k < dom_basis.dim(); ++k)
    basis_words.push_back(dom.element(dom_basis.rep(k)).cycle_string());
  json cod_words = json::array();
  for (std::size_t k = 0; k < cod_basis.dim(); ++k)
    cod_words.push_back(cod.element(cod_basis.rep(k)).cycle_string());
  report["plesken"] = {{"domain_basis", basis_words},
                       {"codomain_basis", cod_words},
                       {"matrix", plesken::io::matrix_to_json(lie.matrix)}};
  text.push_back("plesken matrix " + matrix_line(lie.matrix));
  emit(cfg, report, text);
  return 0;
}

int cmd_hom_verify(const Config& cfg, const std::string& domain_path,
                   const std::string& codomain_path, const std::string& map_path) {
  const auto dom = plesken::io::load_group_file(domain_path, cfg.max_elements);
  const auto cod = plesken::io::load_group_file(codomain_path, cfg.max_elements);
  const plesken::PleskenBasis dom_basis(dom);
  const plesken::PleskenBasis cod_basis(cod);
  const auto data = plesken::io::load_map_file(map_path, dom, cod, dom_basis, cod_basis);

  json report;
  report["command"] = "hom verify";
  std::vector<std::string> text;
  if (data.kind == plesken::io::MapKind::group) {
    report["kind"] = "group";
    try {
      plesken::induce_group_hom(dom, cod, data.generator_images);
      report["valid"] = true;
      report["reason"] = json(nullptr);
      text.push_back("group_hom yes");
    } catch (const plesken::NotAHomomorphismError& e) {
      report["valid"] = false;
      report["reason"] = e.what();
      text.push_back("group_hom no");
      text.push_back(std::string("reason ") + e.what());
    }
  } else if (data.kind == plesken::io::MapKind::algebra) {
    report["kind"] = "algebra";
    plesken::AlgebraHom phi;
    phi.domain = &dom;
    phi.codomain = &cod;
    phi.basis_images = data.algebra_images;
    const auto check = plesken::verify_algebra_hom(phi);
    report["algebra_hom"] = check.ok;
    report["counterexample"] =
        check.ok ? json(nullptr)
                 : json({{"a", dom.element(check.bad_a).cycle_string()},
                         {"b", dom.element(check.bad_b).cycle_string()}});
    const bool induced = check.ok && plesken::is_induced_from_group_hom(phi);
    report["induced_from_group_hom"] = induced;
    text.push_back(std::string("algebra_hom ") + (check.ok ? "yes" : "no"));
    if (!check.ok)
      text.push_back("counterexample (" + dom.element(check.bad_a).cycle_string() + ", " +
                     dom.element(check.bad_b).cycle_string() + ")");
    text.push_back(std::string("induced_from_group_hom ") + (induced ? "yes" : "no"));
  } else {
    report["kind"] = "plesken";
    plesken::PleskenMap map;
    map.domain = &dom_basis;
    map.codomain = &cod_basis;
    map.matrix = plesken::RationalMatrix::zero(cod_basis.dim(), dom_basis.dim());
    for (std::size_t k = 0; k < dom_basis.dim(); ++k)
      for (std::size_t r = 0; r < cod_basis.dim(); ++r)
        map.matrix.at(r, k) = data.plesken_columns[k][r];
    const auto check = plesken::verify_plesken_map(map);
    report["plesken_hom"] = check.ok;
    report["counterexample"] =
        check.ok ? json(nullptr)
                 : json({{"a", dom.element(dom_basis.rep(check.bad_i)).cycle_string()},
                         {"b", dom.element(dom_basis.rep(check.bad_j)).cycle_string()}});
    text.push_back(std::string("plesken_hom ") + (check.ok ? "yes" : "no"));
    if (!check.ok)
      text.push_back("counterexample (" + dom.element(dom_basis.rep(check.bad_i)).cycle_string() +
                     ", " + dom.element(dom_basis.rep(check.bad_j)).cycle_string() + ")");
  }
  emit(cfg, report, text);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Plesken Lie algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Probe seed")->capture_default_str();
  app.add_option("--max-elements", cfg.max_elements, "Group element cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-factor-degree", cfg.max_factor_degree, "Factorization degree bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string group_path, rep_path, table_path, subspace_path, domain_path, codomain_path,
      map_path;
  std::string acting_as = "fg";
  int exit_code = 0;

  auto* group = app.add_subcommand("group", "Group construction and metadata");
  group->require_subcommand(1);
  auto* group_analyze = group->add_subcommand("analyze", "Order, abelianness, involution count");
  group_analyze->add_option("group", group_path, "Group file")->required();
  group_analyze->callback([&] { exit_code = cmd_group_analyze(cfg, group_path); });

  auto* plk = app.add_subcommand("plesken", "The Plesken Lie algebra of a group");
  plk->require_subcommand(1);
  auto* plk_basis = plk->add_subcommand("basis", "Hat basis");
  plk_basis->add_option("group", group_path, "Group file")->required();
  plk_basis->callback([&] { exit_code = cmd_plesken_basis(cfg, group_path); });
  auto* plk_constants = plk->add_subcommand("constants", "Structure constants");
  plk_constants->add_option("group", group_path, "Group file")->required();
  plk_constants->callback([&] { exit_code = cmd_plesken_constants(cfg, group_path); });
  auto* plk_analyze = plk->add_subcommand("analyze", "Abelianness, center, derived algebra");
  plk_analyze->add_option("group", group_path, "Group file")->required();
  plk_analyze->callback([&] { exit_code = cmd_plesken_analyze(cfg, group_path); });

  auto* rep = app.add_subcommand("rep", "Group and Lie representations");
  rep->require_subcommand(1);
  auto* rep_induce = rep->add_subcommand("induce", "Induce the Plesken Lie representation");
  rep_induce->add_option("group", group_path, "Group file")->required();
  rep_induce->add_option("rep", rep_path, "Representation file")->required();
  rep_induce->callback([&] { exit_code = cmd_rep_induce(cfg, group_path, rep_path); });
  auto* rep_check = rep->add_subcommand("check", "Irreducibility report");
  rep_check->add_option("group", group_path, "Group file")->required();
  rep_check->add_option("rep", rep_path, "Representation file")->required();
  rep_check->add_option("--as", acting_as, "Acting set: the group images or the hat images")
      ->check(CLI::IsMember({"fg", "plesken"}))
      ->capture_default_str();
  rep_check->callback([&] { exit_code = cmd_rep_check(cfg, group_path, rep_path, acting_as); });

  auto* module = app.add_subcommand("module", "Module action tables");
  module->require_subcommand(1);
  auto* module_check = module->add_subcommand("check", "FG-module and Lie-module axioms");
  module_check->add_option("group", group_path, "Group file")->required();
  module_check->add_option("table", table_path, "Action table file")->required();
  module_check->add_option("--subspace", subspace_path, "Candidate submodule file");
  module_check->callback(
      [&] { exit_code = cmd_module_check(cfg, group_path, table_path, subspace_path); });

  auto* hom = app.add_subcommand("hom", "Homomorphisms and induced maps");
  hom->require_subcommand(1);
  auto* hom_induce = hom->add_subcommand("induce", "Induce algebra and Plesken maps");
  hom_induce->add_option("domain", domain_path, "Domain group file")->required();
  hom_induce->add_option("codomain", codomain_path, "Codomain group file")->required();
  hom_induce->add_option("map", map_path, "Map file")->required();
  hom_induce->callback(
      [&] { exit_code = cmd_hom_induce(cfg, domain_path, codomain_path, map_path); });
  auto* hom_verify = hom->add_subcommand("verify", "Verify a group, algebra, or Plesken map");
  hom_verify->add_option("domain", domain_path, "Domain group file")->required();
  hom_verify->add_option("codomain", codomain_path, "Codomain group file")->required();
  hom_verify->add_option("map", map_path, "Map file")->required();
  hom_verify->callback(
      [&] { exit_code = cmd_hom_verify(cfg, domain_path, codomain_path, map_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const plesken::ResourceError& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return 3;
  } catch (const plesken::UnsupportedDegreeError& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return 3;
  } catch (const plesken::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

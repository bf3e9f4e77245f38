#include "plesken/error.hpp"
#include "plesken/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using plesken::FiniteGroup;
using plesken::Rational;
using plesken::RationalMatrix;
namespace io = plesken::io;

namespace {

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR "/") + name; }

// writes a scratch file and removes it when the scope ends
class TempFile {
public:
  explicit TempFile(const std::string& contents) {
    path_ = (std::filesystem::temp_directory_path() /
             ("plesken-test-" + std::to_string(counter_++) + ".tmp"))
                .string();
    std::ofstream out(path_);
    out << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

private:
  static inline int counter_ = 0;
  std::string path_;
};

} // namespace

TEST_CASE("group files: comments, blanks, and degree inference") {
  const auto s3 = io::load_group_file(data("s3.grp"));
  CHECK(s3.size() == 6);
  CHECK(s3.degree() == 3);

  TempFile mixed("# leading comment\n\n(1 2) # trailing comment\n   (3 4)  \n");
  const auto g = io::load_group_file(mixed.path());
  CHECK(g.degree() == 4);
  CHECK(g.size() == 4);

  TempFile empty("# nothing here\n\n");
  CHECK_THROWS_AS(io::load_group_file(empty.path()), plesken::InputError);
  CHECK_THROWS_AS(io::load_group_file("no-such-file.grp"), plesken::InputError);

  TempFile big("(1 2 3 4 5)\n(1 2)\n");
  CHECK_THROWS_AS(io::load_group_file(big.path(), 10), plesken::ResourceError);
}

TEST_CASE("representation files load and validate") {
  const auto d4 = io::load_group_file(data("d4.grp"));
  const auto rho = io::load_rep_file(data("d4_standard.rep"), d4);
  CHECK(rho.degree == 2);
  CHECK(rho.images.size() == 8);

  // generator entry must match the group's generator, in order
  TempFile wrong_perm(R"json({
    "degree": 2,
    "generators": [
      {"perm": "(1 3)", "matrix": [["0", "-1"], ["1", "0"]]},
      {"perm": "(1 2 3 4)", "matrix": [["0", "1"], ["1", "0"]]}
    ]
  })json");
  CHECK_THROWS_AS(io::load_rep_file(wrong_perm.path(), d4), plesken::InputError);

  TempFile bad_shape(R"json({
    "degree": 2,
    "generators": [
      {"perm": "(1 2 3 4)", "matrix": [["0", "-1"]]},
      {"perm": "(1 3)", "matrix": [["0", "1"], ["1", "0"]]}
    ]
  })json");
  CHECK_THROWS_AS(io::load_rep_file(bad_shape.path(), d4), plesken::InputError);

  // matrices that fail to extend multiplicatively are rejected with the path
  TempFile not_a_rep(R"json({
    "degree": 1,
    "generators": [
      {"perm": "(1 2 3 4)", "matrix": [["2"]]},
      {"perm": "(1 3)", "matrix": [["1"]]}
    ]
  })json");
  try {
    io::load_rep_file(not_a_rep.path(), d4);
    FAIL("expected InvalidRepresentationError");
  } catch (const plesken::InvalidRepresentationError& e) {
    CHECK(std::string(e.what()).find(not_a_rep.path()) != std::string::npos);
  }
}

TEST_CASE("module tables demand full single coverage") {
  const auto c3 = io::load_group_file(data("c3.grp"));
  const auto table = io::load_module_table(data("c3_module.json"), c3);
  CHECK(table.dim == 3);
  CHECK(table.action.size() == 3);
  CHECK(table.action[0] == RationalMatrix::identity(3));

  TempFile missing(R"json({
    "dim": 1,
    "action": [
      {"perm": "()", "matrix": [["1"]]},
      {"perm": "(1 2 3)", "matrix": [["1"]]}
    ]
  })json");
  CHECK_THROWS_AS(io::load_module_table(missing.path(), c3), plesken::InputError);

  TempFile duplicate(R"json({
    "dim": 1,
    "action": [
      {"perm": "()", "matrix": [["1"]]},
      {"perm": "(1 2 3)", "matrix": [["1"]]},
      {"perm": "(2 3 1)", "matrix": [["1"]]}
    ]
  })json");
  CHECK_THROWS_AS(io::load_module_table(duplicate.path(), c3), plesken::InputError);
}

TEST_CASE("subspace files") {
  const auto u = io::load_subspace(data("c3_u.json"));
  CHECK(u.ambient_dim() == 3);
  CHECK(u.dim() == 1);
  CHECK(u.contains({Rational(2), Rational(2), Rational(0)}));

  TempFile ragged(R"json({"ambient_dim": 2, "vectors": [["1", "0", "0"]]})json");
  CHECK_THROWS_AS(io::load_subspace(ragged.path()), plesken::InputError);
}

TEST_CASE("map files: group kind") {
  const auto s3 = io::load_group_file(data("s3.grp"));
  const auto c2 = io::load_group_file(data("c2.grp"));
  const plesken::PleskenBasis sb(s3), cb(c2);
  const auto map = io::load_map_file(data("s3_to_c2_sign.json"), s3, c2, sb, cb);
  CHECK(map.kind == io::MapKind::group);
  REQUIRE(map.generator_images.size() == 2);
  CHECK(map.generator_images[0].is_identity());
  CHECK(map.generator_images[1].cycle_string() == "(1 2)");
}

TEST_CASE("map files: algebra kind covers every element once") {
  const auto c2 = io::load_group_file(data("c2.grp"));
  const plesken::PleskenBasis cb(c2);
  const auto map = io::load_map_file(data("c2_negsigma.json"), c2, c2, cb, cb);
  CHECK(map.kind == io::MapKind::algebra);
  REQUIRE(map.algebra_images.size() == 2);
  CHECK(map.algebra_images[0].coeffs[0] == 1);
  CHECK(map.algebra_images[1].coeffs[1] == -1);

  TempFile partial(R"json({
    "kind": "algebra",
    "images": [{"element": "()", "image": [["1", "()"]]}]
  })json");
  CHECK_THROWS_AS(io::load_map_file(partial.path(), c2, c2, cb, cb), plesken::InputError);
}

TEST_CASE("map files: plesken kind normalizes the named pair member") {
  const auto s3 = io::load_group_file(data("s3.grp"));
  const auto d4 = io::load_group_file(data("d4.grp"));
  const plesken::PleskenBasis sb(s3), db(d4);
  const auto map = io::load_map_file(data("s3_to_d4_lie.json"), s3, d4, sb, db);
  CHECK(map.kind == io::MapKind::plesken);
  REQUIRE(map.plesken_columns.size() == 1);
  CHECK(map.plesken_columns[0][0] == 2);

  // naming the inverse member flips the stored column
  TempFile inverse_named(R"json({
    "kind": "plesken",
    "images": [{"element": "(1 3 2)", "coords": ["2"]}]
  })json");
  const auto flipped = io::load_map_file(inverse_named.path(), s3, d4, sb, db);
  CHECK(flipped.plesken_columns[0][0] == -2);

  // a self-inverse element spans no hat line
  TempFile involution(R"json({
    "kind": "plesken",
    "images": [{"element": "(1 2)", "coords": ["1"]}]
  })json");
  CHECK_THROWS_AS(io::load_map_file(involution.path(), s3, d4, sb, db), plesken::InputError);

  TempFile bad_kind(R"json({"kind": "mystery", "images": []})json");
  CHECK_THROWS_AS(io::load_map_file(bad_kind.path(), s3, d4, sb, db), plesken::InputError);
}

TEST_CASE("json emitters round-trip matrices") {
  const auto m = RationalMatrix::from_rows(
      {{Rational(1, 2), Rational(-3)}, {Rational(0), Rational(5, 7)}});
  const auto j = io::matrix_to_json(m);
  CHECK(io::matrix_from_json(j, "test") == m);
  CHECK(j[0][0] == "1/2");
  CHECK(j[1][1] == "5/7");

  plesken::Subspace s(3);
  s.insert({Rational(1), Rational(2), Rational(0)});
  const auto sj = io::subspace_to_json(s);
  CHECK(sj["ambient_dim"] == 3);
  CHECK(sj["dim"] == 1);
  CHECK(sj["basis"].size() == 1);
}

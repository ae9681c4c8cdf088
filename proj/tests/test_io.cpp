#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "hqft/io.hpp"
#include "support.hpp"

using namespace hqft;
namespace fs = std::filesystem;

TEST_CASE("algebra files round trip byte for byte") {
  for (const auto& rel : {"cocycle_z5_t2_a4.json", "cocycle_z_t1_a1.json", "mutations/D2.8.1.json",
                          "mutations/D2.8.6.json", "mutations/D2.8.11.json"}) {
    const std::string text = read_text_file(testing::data_path(rel));
    CHECK(dump_algebra(parse_algebra(text)) == text);
  }
}

TEST_CASE("generated algebras round trip") {
  std::vector<AlgebraData> list = testing::census(3, 1, {1, 1});
  list.push_back(testing::group_ring_z2(RingDesc::rationals()));
  list.push_back(make_ground_ring(RingDesc::integers(), RingDesc::integers().one()));
  for (const auto& A : list) {
    const std::string text = dump_algebra(A);
    const AlgebraData B = parse_algebra(text);
    CHECK(B == A);
    CHECK(dump_algebra(B) == text);
    CHECK(parse_algebra(dump_algebra_compact(A)) == A);
  }
}

TEST_CASE("malformed algebra text is rejected") {
  CHECK_THROWS_AS(parse_algebra(read_text_file(testing::data_path("garbage.json"))), InputError);
  CHECK_THROWS_AS(parse_algebra("{"), InputError);
  CHECK_THROWS_AS(parse_algebra("[]"), InputError);
  CHECK_THROWS_AS(read_text_file(testing::data_path("missing.json")), InputError);

  auto j = nlohmann::json::parse(dump_algebra(testing::cocycle_z5()));
  nlohmann::json bad = j;
  bad["ranks"] = nlohmann::json::array({1});
  CHECK_THROWS_AS(parse_algebra(bad.dump()), InputError);
  bad = j;
  bad["ring"] = "Z/0";
  CHECK_THROWS_AS(parse_algebra(bad.dump()), InputError);
  bad = j;
  bad.erase("unit");
  CHECK_THROWS_AS(parse_algebra(bad.dump()), InputError);
}

TEST_CASE("words parse, type check and round trip") {
  const CobordismWord w = parse_word(read_text_file(testing::data_path("words/moebius_1.json")), 1);
  REQUIRE(w.layers.size() >= 1);
  CHECK(w.layers[0][0].kind == GenKind::Moebius);
  CHECK(parse_word(dump_word(w), 1).layers.size() == w.layers.size());
  CHECK(dump_word(parse_word(dump_word(w), 1)) == dump_word(w));

  const CobordismWord s = parse_word(read_text_file(testing::data_path("words/sphere.json")), 1);
  CHECK(evaluate(testing::cocycle_z5(), s).matrix == Matrix::identity(testing::z5(), 1));

  CHECK_THROWS_AS(parse_word(R"([[{"gen": "Twist", "labels": []}]])", 1), InputError);
  CHECK_THROWS_AS(parse_word(R"([[{"gen": "Mult", "labels": ["0"]}]])", 1), InputError);
  CHECK_THROWS_AS(parse_word(R"([[{"gen": "Id", "labels": ["01"]}]])", 1), InputError);
  CHECK_THROWS_AS(parse_word("{}", 1), InputError);
  // Well formed but ill typed: parsing succeeds, type checking does not.
  const CobordismWord bad = parse_word(read_text_file(testing::data_path("words/ill_typed.json")), 1);
  CHECK_THROWS_AS(typecheck(bad), SignatureMismatch);
}

TEST_CASE("surfaces parse and round trip") {
  const SurfaceSpec k = parse_surface(read_text_file(testing::data_path("surfaces/klein.json")), 1);
  CHECK(k.handles.empty());
  CHECK(k.crosscaps.size() == 2);
  CHECK(parse_surface(dump_surface(k), 1) == k);
  const SurfaceSpec t = parse_surface(read_text_file(testing::data_path("surfaces/torus.json")), 1);
  CHECK(t.handles.size() == 1);
  CHECK_THROWS_AS(parse_surface(R"({"handles": [["0"]], "crosscaps": []})", 1), InputError);
  CHECK_THROWS_AS(parse_surface(R"({"handles": [], "crosscaps": ["2"]})", 1), InputError);
}

TEST_CASE("report json") {
  const auto ok = nlohmann::json::parse(report_to_json(verify_extended(testing::cocycle_z5())));
  CHECK(ok["passed"] == true);
  CHECK(ok["tier"] == "extended");
  CHECK(ok["violations"].empty());
  const auto bad = nlohmann::json::parse(report_to_json(verify_extended(testing::load("mutations/D2.8.11.json"))));
  CHECK(bad["passed"] == false);
  CHECK(bad["failed"].size() >= 1);
  CHECK(bad["violations"][0].contains("axiom"));
}

TEST_CASE("write_text_file replaces atomically") {
  const fs::path dir = fs::temp_directory_path() / "hqft_io_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_text_file(dir / "a.json", "one\n");
  write_text_file(dir / "a.json", "two\n");
  CHECK(read_text_file(dir / "a.json") == "two\n");
  CHECK(!fs::exists(dir / "a.json.tmp"));
  fs::remove_all(dir);
}

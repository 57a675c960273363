#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "test_support.hpp"
#include "paralg/catalog.hpp"
#include "paralg/errors.hpp"
#include "paralg/json_io.hpp"

using namespace paralg;
using paralg::testing::paralg_binary;
using paralg::testing::run_command;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("/tmp/paralg_test_") + std::to_string(getpid()) + "_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("algebra specs round-trip through JSON") {
  SUBCASE("su(1,1) extension at the paraboson point") {
    AlgebraSpec spec =
        build_su11_extension({Scalar::gaussian(Rational(0), Rational(-1)), Scalar(0), Scalar(2)});
    AlgebraSpec back = algebra_from_json(algebra_to_json(spec));
    CHECK(back == spec);
    CHECK(back.exact());
  }
  SUBCASE("kind overrides survive") {
    AlgebraSpec spec = build_su11_extension({Scalar(1), Scalar(1), Scalar(1)},
                                            QaBracketConvention::DisplayedAnticommutator);
    AlgebraSpec back = algebra_from_json(algebra_to_json(spec));
    CHECK(back == spec);
    CHECK(back.kind(Degree{0, 1}, Degree{1, 0}) == BracketKind::Anticommutator);
  }
  SUBCASE("involutions and antisymmetric families survive") {
    AlgebraSpec spec = build_para_lie_super(1, 2);
    AlgebraSpec back = algebra_from_json(algebra_to_json(spec));
    CHECK(back == spec);
  }
}

TEST_CASE("loader derives the reversed bracket order from the sign rule") {
  Json j;
  j["basis"] = Json::array({Json{{"name", "x"}, {"degree", Json::array({1, 0})}},
                            Json{{"name", "y"}, {"degree", Json::array({1, 0})}},
                            Json{{"name", "z"}, {"degree", Json::array({0, 0})}}});
  j["brackets"] = Json::array(
      {Json{{"left", "x"},
            {"right", "y"},
            {"result", Json::array({Json{{"coeff", Json{{"re", "2"}, {"im", "0"}}},
                                         {"elem", "z"}}})}}});
  AlgebraSpec spec = algebra_from_json(j);
  // (1,0).(1,0) is odd: anticommutator, so {y,x} = +{x,y}.
  const Combo& rev = spec.bracket(spec.require_index("y"), spec.require_index("x"));
  REQUIRE(rev.size() == 1);
  CHECK(rev[0].second.equals(Scalar(2)));
}

TEST_CASE("loader flags stored pairs that conflict with the sign rule") {
  Json j;
  j["basis"] = Json::array({Json{{"name", "x"}, {"degree", Json::array({0, 0})}},
                            Json{{"name", "y"}, {"degree", Json::array({0, 0})}},
                            Json{{"name", "z"}, {"degree", Json::array({0, 0})}}});
  auto entry = [](const char* l, const char* r, const char* coeff) {
    return Json{{"left", l},
                {"right", r},
                {"result", Json::array({Json{{"coeff", Json{{"re", coeff}, {"im", "0"}}},
                                             {"elem", "z"}}})}};
  };
  j["brackets"] = Json::array({entry("x", "y", "1"), entry("y", "x", "1")});
  std::vector<std::string> warnings;
  AlgebraSpec spec = algebra_from_json(j, &warnings);
  CHECK_FALSE(warnings.empty());
  CHECK_FALSE(check_supersymmetrization(spec).passed);
}

TEST_CASE("loader rejects malformed input") {
  Json basis_only{{"basis", Json::array({Json{{"name", "x"}, {"degree", Json::array({1, 0})}}})}};
  SUBCASE("unknown element in bracket") {
    Json j = basis_only;
    j["brackets"] = Json::array(
        {Json{{"left", "x"}, {"right", "nope"}, {"result", Json::array()}}});
    CHECK_THROWS_AS(algebra_from_json(j), structural_error);
  }
  SUBCASE("bad degree") {
    Json j{{"basis", Json::array({Json{{"name", "x"}, {"degree", Json::array({2, 0})}}})}};
    CHECK_THROWS_AS(algebra_from_json(j), structural_error);
  }
  SUBCASE("bad rational") {
    Json j = basis_only;
    j["brackets"] = Json::array(
        {Json{{"left", "x"},
              {"right", "x"},
              {"result",
               Json::array({Json{{"coeff", Json{{"re", "x/y"}, {"im", "0"}}}, {"elem", "x"}}})}}});
    CHECK_THROWS_AS(algebra_from_json(j), structural_error);
  }
  SUBCASE("duplicate bracket") {
    Json j = basis_only;
    Json entry{{"left", "x"},
               {"right", "x"},
               {"result", Json::array({Json{{"coeff", Json{{"re", "1"}, {"im", "0"}}},
                                            {"elem", "x"}}})}};
    j["brackets"] = Json::array({entry, entry});
    CHECK_THROWS_AS(algebra_from_json(j), structural_error);
  }
}

TEST_CASE("representation manifests round-trip") {
  GreenRep rep = build_green_rep({1, 1, 2, 4});
  GreenRep back = rep_from_json(rep_to_json(rep));
  CHECK(back.dim() == rep.dim());
  for (const auto& [name, op] : rep.generators()) {
    CHECK(max_abs_diff(op, back.op(name)) < 1e-15);
  }
  // bilinears are recomputed from the imported generators
  CHECK(max_abs_diff(rep.op("Q_1_1"), back.op("Q_1_1")) < 1e-15);
  CHECK(max_abs_diff(rep.op("Bf_1_1"), back.op("Bf_1_1")) < 1e-15);
}

TEST_CASE("relation sets load from JSON") {
  Json j;
  j["name"] = "custom";
  Json rel;
  rel["name"] = "number_op";
  // {adag, a} - 2 Ma = 0, written with a two-term lhs and a delta-weighted rhs
  rel["lhs"] = Json::array(
      {Json{{"coeff", "1"},
            {"tree", Json{{"kind", "anticomm"},
                          {"args", Json::array({Json{{"gen", "adag"}, {"indices", {"k"}}},
                                                Json{{"gen", "a"}, {"indices", {"l"}}}})}}}}});
  rel["rhs"] = Json::array({Json{{"coeff", "2"},
                                 {"delta", Json::array({Json::array({"k", "l"})})},
                                 {"gen", "Ma"},
                                 {"indices", {"k", "l"}}}});
  rel["ranges"] = Json{{"k", 1}, {"l", 1}};
  j["relations"] = Json::array({rel});

  RelationSet set = relation_set_from_json(j);
  REQUIRE(set.relations.size() == 1);
  CHECK(relation_word_len(set.relations[0]) == 2);
  GreenRep rep = build_green_rep({1, 0, 2, 5});
  ResidualReport report = run_relation_set(rep, set, 1e-10);
  CHECK(report.passed);
  CHECK(report.instances_total == 1);
}

TEST_CASE("coefficient grammar accepts imaginary rationals") {
  Json j;
  j["name"] = "imag";
  Json rel;
  rel["name"] = "i_scaled";
  // i*[a, adag] = i on the safe subspace at order 1
  rel["lhs"] = Json::array(
      {Json{{"coeff", "i"},
            {"tree", Json{{"kind", "comm"},
                          {"args", Json::array({Json{{"gen", "a"}, {"indices", {"k"}}},
                                                Json{{"gen", "adag"}, {"indices", {"k"}}}})}}}}});
  rel["rhs"] = Json::array({Json{{"coeff", Json{{"re", "0"}, {"im", "1"}}}, {"gen", "one"}}});
  rel["ranges"] = Json{{"k", 1}};
  j["relations"] = Json::array({rel});
  GreenRep rep = build_green_rep({1, 0, 1, 5});
  CHECK(run_relation_set(rep, relation_set_from_json(j), 1e-12).passed);
}

TEST_CASE("reports serialize deterministically in-process") {
  GreenRep rep = build_green_rep({1, 1, 1, 4});
  ResidualReport report = suite_eq12(rep, 1e-9);
  CHECK(report_to_json(report).dump(2) == report_to_json(report).dump(2));
  AlgebraSpec spec = build_para_lie_super(1, 1);
  CHECK(algebra_to_json(spec).dump(2) == algebra_to_json(spec).dump(2));
}

TEST_CASE("command line interface" * doctest::skip(paralg_binary().empty())) {
  const std::string bin = paralg_binary();
  REQUIRE_FALSE(bin.empty());

  SUBCASE("catalog export and check round-trip") {
    std::string path = temp_path("su11.json");
    auto [code, out] = run_command(bin + " catalog export --id su11_ext --out " + path);
    CHECK(code == 0);
    std::string content = slurp(path);
    // lambda1 = -i is recorded exactly
    CHECK(content.find("\"im\": \"-1\"") != std::string::npos);
    auto [check_code, check_out] = run_command(bin + " check " + path);
    CHECK(check_code == 0);
    std::remove(path.c_str());
  }

  SUBCASE("check exits 1 on a violating spec") {
    std::string path = temp_path("broken.json");
    Json j;
    j["basis"] = Json::array({Json{{"name", "e"}, {"degree", Json::array({1, 0})}}});
    j["brackets"] = Json::array(
        {Json{{"left", "e"},
              {"right", "e"},
              {"result", Json::array({Json{{"coeff", Json{{"re", "1"}, {"im", "0"}}},
                                           {"elem", "e"}}})}}});
    write_json_file(path, j);
    auto [code, out] = run_command(bin + " check " + path);
    CHECK(code == 1);
    std::remove(path.c_str());
  }

  SUBCASE("verify small system exits 0") {
    auto [code, out] = run_command(
        bin + " verify --parabosons 1 --parafermions 1 --order 1 --cutoff 4 --set eq12");
    CHECK(code == 0);
  }

  SUBCASE("cutoff too small exits 3") {
    auto [code, out] = run_command(
        bin + " verify --parabosons 1 --parafermions 1 --order 2 --cutoff 2 --set eq12");
    CHECK(code == 3);
    CHECK(out.find("cutoff") != std::string::npos);
  }

  SUBCASE("unknown catalog id exits 2") {
    auto [code, out] =
        run_command(bin + " catalog export --id nope --out " + temp_path("x.json"));
    CHECK(code == 2);
  }

  SUBCASE("unwritable output path exits 2") {
    auto [code, out] =
        run_command(bin + " catalog export --id paraboson --out /nonexistent/dir/x.json");
    CHECK(code == 2);
  }

  SUBCASE("rep build writes a loadable manifest") {
    std::string path = temp_path("rep.json");
    auto [code, out] = run_command(
        bin + " rep build --parabosons 1 --parafermions 0 --order 2 --cutoff 4 --out " + path);
    CHECK(code == 0);
    GreenRep rep = rep_from_json(load_json_file(path));
    CHECK(rep.dim() == 25);
    std::remove(path.c_str());
  }

  SUBCASE("json reports are byte-stable modulo timing") {
    std::string cmd = bin +
                      " verify --parabosons 1 --parafermions 1 --order 1 --cutoff 4"
                      " --set eq12 --format json";
    auto [code1, out1] = run_command(cmd);
    auto [code2, out2] = run_command(cmd);
    REQUIRE(code1 == 0);
    REQUIRE(code2 == 0);
    Json j1 = Json::parse(out1);
    Json j2 = Json::parse(out2);
    j1.erase("timing_ms");
    j2.erase("timing_ms");
    CHECK(j1.dump(2) == j2.dump(2));
  }

  SUBCASE("exported catalog files are byte-identical across runs") {
    std::string p1 = temp_path("e1.json");
    std::string p2 = temp_path("e2.json");
    run_command(bin + " catalog export --id para_lie_super_1_1 --out " + p1);
    run_command(bin + " catalog export --id para_lie_super_1_1 --out " + p2);
    CHECK(slurp(p1) == slurp(p2));
    CHECK_FALSE(slurp(p1).empty());
    std::remove(p1.c_str());
    std::remove(p2.c_str());
  }
}

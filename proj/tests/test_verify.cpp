#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "paralg/catalog.hpp"
#include "paralg/errors.hpp"
#include "paralg/verify.hpp"

using namespace paralg;
using paralg::testing::random_degree;
using paralg::testing::random_sparse;

namespace {

RelationExpr single_mode_ccr() {
  // [a, adag] = 1
  RelationExpr rel;
  rel.name = "ccr";
  rel.lhs.push_back({Scalar(1), RelationTree::bracket(BracketKind::Commutator,
                                                      RelationTree::leaf("a", {"k"}),
                                                      RelationTree::leaf("adag", {"k"}))});
  rel.rhs.push_back({Scalar(1), {}, "one", {}});
  rel.ranges = {{"k", 1}};
  return rel;
}

}  // namespace

TEST_CASE("paraboson trilinear relations hold at order 2") {
  GreenRep rep = build_green_rep({1, 0, 2, 6});
  ResidualReport report =
      run_relation_set(rep, builtin_relation_set("eq11", 1, 0), 1e-10);
  CHECK(report.passed);
  CHECK(report.max_rel_residual < 1e-10);
  CHECK(report.instances_total == 6);  // three relations plus conjugates
}

TEST_CASE("canonical commutator holds at order 1 and fails at order 2") {
  SUBCASE("order 1") {
    GreenRep rep = build_green_rep({1, 0, 1, 6});
    ResidualReport report = eval_relation(rep, single_mode_ccr(), 1e-12);
    CHECK(report.passed);
    CHECK(report.max_rel_residual < 1e-12);
  }
  SUBCASE("order 2 fails with residual 1 at the vacuum element") {
    GreenRep rep = build_green_rep({1, 0, 2, 6});
    ResidualReport report = eval_relation(rep, single_mode_ccr(), 1e-9);
    CHECK_FALSE(report.passed);
    // <0|[a, adag]|0> = p = 2 against the claimed 1
    const auto& a = rep.op("a_1");
    const auto& ad = rep.op("adag_1");
    SparseOperator diff =
        op_bracket(a, ad, BracketKind::Commutator) - SparseOperator::identity(rep.dim());
    std::vector<Complex> e0(rep.dim(), Complex{0, 0});
    e0[rep.vacuum()] = 1.0;
    CHECK(std::abs(diff.apply(e0)[rep.vacuum()] - 1.0) < 1e-12);
  }
}

TEST_CASE("empty safe subspace raises a cutoff error") {
  GreenRep rep = build_green_rep({1, 1, 2, 2});
  CHECK_THROWS_AS(suite_eq12(rep), resource_error);
  try {
    suite_eq12(rep);
  } catch (const resource_error& e) {
    CHECK(std::string(e.what()).find("cutoff") != std::string::npos);
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("trilinear suite passes including cross-mode instances") {
  GreenRep rep = build_green_rep({2, 1, 1, 4});
  ResidualReport report = suite_eq12(rep, 1e-9, 2);
  CHECK(report.passed);
  CHECK(report.max_rel_residual < 1e-12);
  // k != l instances are present: eq12_1 runs over all of k,l,m
  for (const auto& rel : report.relations) {
    if (rel.relation == "eq12_1") CHECK(rel.instances == 8);
  }
}

TEST_CASE("conjugate relations land at the same residual up to rounding") {
  GreenRep rep = build_green_rep({1, 1, 2, 5});
  ResidualReport report = suite_eq12(rep, 1e-9);
  std::map<std::string, double> by_name;
  for (const auto& rel : report.relations) by_name[rel.relation] = rel.max_abs;
  for (const auto& rel : report.relations) {
    if (rel.relation.size() > 5 && rel.relation.substr(rel.relation.size() - 5) == "_conj") {
      std::string base = rel.relation.substr(0, rel.relation.size() - 5);
      REQUIRE(by_name.count(base));
      CHECK(std::abs(by_name[base] - rel.max_abs) < 1e-12);
    }
  }
}

TEST_CASE("doubling the cutoff does not inflate residuals") {
  GreenRep small = build_green_rep({1, 1, 2, 4});
  GreenRep large = build_green_rep({1, 1, 2, 8});
  double r_small = suite_eq12(small, 1e-9).max_rel_residual;
  double r_large = suite_eq12(large, 1e-9).max_rel_residual;
  CHECK(r_large <= 10.0 * r_small + 1e-14);
}

TEST_CASE("workers produce identical reports") {
  GreenRep rep = build_green_rep({1, 1, 2, 5});
  ResidualReport serial = suite_eq12(rep, 1e-9, 1);
  ResidualReport parallel = suite_eq12(rep, 1e-9, 4);
  REQUIRE(serial.relations.size() == parallel.relations.size());
  CHECK(serial.max_rel_residual == parallel.max_rel_residual);
  for (std::size_t i = 0; i < serial.relations.size(); ++i) {
    CHECK(serial.relations[i].max_abs == parallel.relations[i].max_abs);
    CHECK(serial.relations[i].instances == parallel.relations[i].instances);
  }
}

TEST_CASE("closure suite on a small mixed system") {
  GreenRep rep = build_green_rep({1, 1, 2, 5});
  ResidualReport report = suite_closure(rep, 1e-9, 2);
  CHECK(report.passed);
  CHECK(report.max_rel_residual < 1e-10);
}

TEST_CASE("degenerate antisymmetric instances evaluate as 0 = 0 and are counted") {
  GreenRep rep = build_green_rep({1, 2, 2, 5});
  RelationSet set = builtin_relation_set("closure15_19", 1, 2);
  ResidualReport report = run_relation_set(rep, set, 1e-9, 2);
  CHECK(report.passed);
  for (const auto& rel : report.relations) {
    if (rel.relation == "eq16_3") CHECK(rel.instances == 16);  // all alpha,beta,sigma,rho
  }
}

TEST_CASE("structure-constant extraction") {
  SUBCASE("M(a) family alone reproduces the gl pattern") {
    GreenRep rep = build_green_rep({2, 0, 2, 6});
    std::vector<std::string> ids = {"Ma_1_1", "Ma_1_2", "Ma_2_1", "Ma_2_2"};
    ExtractionResult res = extract_structure_constants(rep, ids, 1e-8);
    CHECK(res.passed);
    // [M_kl, M_mn] = d_ml M_kn - d_kn M_ml; e.g. [M_11, M_12] = M_12
    const Combo& c = res.spec.bracket(res.spec.require_index("Ma_1_1"),
                                      res.spec.require_index("Ma_1_2"));
    REQUIRE(c.size() == 1);
    CHECK(res.spec.element(c[0].first).name == "Ma_1_2");
    CHECK(c[0].second.equals(Scalar(1)));
  }
  SUBCASE("a duplicated operator is a rank-deficiency error") {
    GreenRep rep = build_green_rep({1, 0, 2, 6});
    CHECK_THROWS_AS(
        extract_structure_constants(rep, {"a_1", "adag_1", "a_1"}, 1e-8),
        structural_error);
  }
}

TEST_CASE("extraction agrees with the abstract catalog") {
  GreenRep rep = build_green_rep({1, 1, 2, 6});
  ExtractionResult res =
      extract_structure_constants(rep, para_lie_super_basis_names(1, 1), 1e-8);
  CHECK(res.passed);
  CHECK(res.max_span_residual < 1e-8);
  CHECK(res.max_lattice_distance < 1e-8);
  CHECK(res.spec == build_para_lie_super(1, 1));
  CheckReport checks = run_all_checks(res.spec);
  CHECK(checks.passed);
  CHECK(res.spec.exact());
}

TEST_CASE("oracle equivalence: trilinear suites imply axiom-clean extracted specs") {
  for (auto [M, N, p] : {std::array{1, 1, 1}, {1, 1, 2}, {2, 1, 2}}) {
    CAPTURE(M);
    CAPTURE(N);
    CAPTURE(p);
    GreenRep rep = build_green_rep({M, N, p, 6});
    CHECK(suite_eq12(rep, 1e-9, 2).passed);
    ExtractionResult res =
        extract_structure_constants(rep, para_lie_super_basis_names(M, N), 1e-8);
    CHECK(res.passed);
    CHECK(run_all_checks(res.spec).passed);
    CHECK(res.spec == build_para_lie_super(M, N));
  }
}

TEST_CASE("classification dimensions and closure") {
  GreenRep rep = build_green_rep({2, 1, 2, 6});
  ClassificationReport report = classify_subalgebras(rep, 1e-8);
  CHECK(report.passed);
  std::map<std::string, SubalgebraResult> by_name;
  for (const auto& e : report.entries) by_name[e.name] = e;
  CHECK(by_name["parabose_bilinears"].dimension == 10);   // M(2M+1), M = 2
  CHECK(by_name["parafermi_bilinears"].dimension == 1);   // N(2N-1), N = 1
  CHECK(by_name["parabose_statistics"].dimension == 14);  // M(2M+1) + 2M
  CHECK(by_name["parafermi_statistics"].dimension == 3);  // N(2N+1)
  for (const auto& [name, e] : by_name) {
    CAPTURE(name);
    CHECK(e.closed);
  }
}

TEST_CASE("supercharge spectra") {
  GreenRep rep = build_green_rep({1, 1, 1, 6});
  SpectralReport report = supercharge_spectra(rep);
  CHECK(report.hq_hermiticity < 1e-12);
  CHECK(report.hf_hermiticity < 1e-12);
  CHECK(report.hq_psd);
  CHECK(std::abs(report.hq_min) < 1e-10);  // vacuum sector
  CHECK(report.dim == 6);
}

TEST_CASE("reduction check guards the order") {
  CHECK(reduction_check_p1(build_green_rep({1, 1, 1, 6})).passed);
  CHECK_THROWS_AS(reduction_check_p1(build_green_rep({1, 0, 2, 6})), structural_error);
}

TEST_CASE("reduction includes the mixed commutators at order 1") {
  GreenRep rep = build_green_rep({2, 2, 1, 5});
  ResidualReport report = reduction_check_p1(rep);
  CHECK(report.passed);
  bool saw_mixed = false;
  for (const auto& rel : report.relations) {
    if (rel.relation == "p1_mixed_comm") {
      saw_mixed = true;
      CHECK(rel.instances == 4);
    }
  }
  CHECK(saw_mixed);
}

TEST_CASE("double-bracket identities hold for arbitrary operators") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Index dim = 8 + rng() % 17;
    SparseOperator x = random_sparse(dim, random_degree(rng), rng);
    SparseOperator y = random_sparse(dim, random_degree(rng), rng);
    SparseOperator z = random_sparse(dim, random_degree(rng), rng);
    for (int which = 0; which < 4; ++which) {
      CHECK(bracket_identity_residual(which, x, y, z) < 1e-10);
    }
    CHECK(graded_jacobi_residual(x, y, z) < 1e-10);
  }
}

TEST_CASE("jacobi8 built-in set runs over the operator pool") {
  GreenRep rep = build_green_rep({1, 1, 1, 4});
  RelationSet set = builtin_relation_set("jacobi8", 1, 1);
  ResidualReport report = run_relation_set(rep, set, 1e-10, 2);
  CHECK(report.passed);
  CHECK(report.instances_total == 4u * 12 * 12 * 12);
}

TEST_CASE("graded product rule selects the anticommutator for (1,0)x(1,1)") {
  GreenRep rep = build_green_rep({1, 1, 1, 4});
  const auto& a = rep.op("a_1");
  const auto& f = rep.op("f_1");
  SparseOperator graded = op_graded_bracket(a, f);
  SparseOperator anti = op_bracket(a, f, BracketKind::Anticommutator);
  CHECK(max_abs_diff(graded, anti) < 1e-15);
  CHECK(graded.degree() == Degree{0, 1});
  CHECK(graded.word_len() == 2);
}

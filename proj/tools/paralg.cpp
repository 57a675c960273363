#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paralg/catalog.hpp"
#include "paralg/errors.hpp"
#include "paralg/json_io.hpp"
#include "paralg/verify.hpp"

namespace {

using namespace paralg;

constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitPassed = 0,
  kExitViolations = 1,
  kExitStructural = 2,
  kExitResource = 3,
};

struct CommonOpts {
  double tol = 1e-9;
  std::string format = "text";
  int workers = 1;
  std::string out;
};

struct LayoutOpts {
  int parabosons = 0;
  int parafermions = 0;
  int order = 1;
  int cutoff = 4;

  ModeLayout layout() const { return {parabosons, parafermions, order, cutoff}; }
  Json config() const {
    return Json{{"parabosons", parabosons},
                {"parafermions", parafermions},
                {"order", order},
                {"cutoff", cutoff}};
  }
};

void add_layout_flags(CLI::App* cmd, LayoutOpts& layout) {
  cmd->add_option("--parabosons,-M", layout.parabosons, "paraboson mode count");
  cmd->add_option("--parafermions,-N", layout.parafermions, "parafermion mode count");
  cmd->add_option("--order,-p", layout.order, "parastatistics order");
  cmd->add_option("--cutoff,-c", layout.cutoff, "per-boson-factor occupancy cap");
}

void add_common_flags(CLI::App* cmd, CommonOpts& common, bool with_workers = true) {
  cmd->add_option("--tol", common.tol, "relative verification tolerance");
  cmd->add_option("--format", common.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  if (with_workers) {
    cmd->add_option("--workers", common.workers, "parallel relation workers")
        ->check(CLI::PositiveNumber);
  }
  cmd->add_option("--out", common.out, "write the JSON report to this path");
}

int emit(const CommonOpts& common, const std::string& command, const Json& config,
         const Json& result, bool passed, const std::string& text_summary,
         std::chrono::steady_clock::time_point start) {
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  Json report{{"tool", "paralg"},   {"version", kVersion},  {"command", command},
              {"config", config},   {"result", result},     {"passed", passed},
              {"exit_code", passed ? kExitPassed : kExitViolations},
              {"timing_ms", elapsed}};
  if (!common.out.empty()) write_json_file(common.out, report);
  if (common.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text_summary;
    std::cout << (passed ? "PASSED" : "FAILED") << " (" << elapsed << " ms)\n";
  }
  return passed ? kExitPassed : kExitViolations;
}

std::string residual_text(const ResidualReport& r) {
  std::ostringstream os;
  os << "set " << r.set_name << ": " << r.instances_total << " instances, max relative residual "
     << r.max_rel_residual << " (tol " << r.tol << ")\n";
  for (const auto& rel : r.relations) {
    os << "  " << (rel.passed ? "ok  " : "FAIL") << " " << rel.relation << "  instances "
       << rel.instances << "  max_abs " << rel.max_abs << "  max_rel " << rel.max_rel << "\n";
    if (!rel.passed) {
      os << "        worst at";
      for (const auto& [sym, v] : rel.worst.assignment) os << " " << sym << "=" << v;
      os << " entry (" << rel.worst.worst_row << "," << rel.worst.worst_col << ") abs "
         << rel.worst.abs_residual << "\n";
    }
  }
  return os.str();
}

std::string check_text(const CheckReport& r, const AlgebraSpec& spec) {
  std::ostringstream os;
  os << "violations: " << r.violation_count << "\n";
  for (const auto& v : r.violations) {
    os << "  [" << v.axiom << "] " << v.detail << "\n";
  }
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  (void)spec;
  return os.str();
}

Scalar parse_scalar_arg(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    return Scalar(GaussianRational(Rational::parse(text)));
  return Scalar::gaussian(Rational::parse(text.substr(0, comma)),
                          Rational::parse(text.substr(comma + 1)));
}

Json scalar_meta(const Scalar& s) {
  const auto& q = s.exact_value();
  return Json{{"re", q.re.str()}, {"im", q.im.str()}};
}

AlgebraSpec build_catalog_spec(const std::string& id, const std::string& l1, const std::string& l2,
                               const std::string& l3, const std::string& kinds, Json* meta) {
  if (id == "su11_ext") {
    SU11ExtensionParams params{parse_scalar_arg(l1), parse_scalar_arg(l2), parse_scalar_arg(l3)};
    auto convention = kinds == "displayed" ? QaBracketConvention::DisplayedAnticommutator
                                           : QaBracketConvention::DotRule;
    *meta = Json{{"catalog_id", id},
                 {"params", Json{{"lambda1", scalar_meta(params.lambda1)},
                                 {"lambda2", scalar_meta(params.lambda2)},
                                 {"lambda3", scalar_meta(params.lambda3)}}},
                 {"qa_bracket", kinds}};
    return build_su11_extension(params, convention);
  }
  if (id == "paraboson") {
    *meta = Json{{"catalog_id", id}};
    return build_paraboson_algebra();
  }
  int M = 0, N = 0;
  if (parse_para_lie_super_id(id, &M, &N)) {
    *meta = Json{{"catalog_id", id}};
    return build_para_lie_super(M, N);
  }
  throw structural_error("unknown catalog id: '" + id + "'");
}

int run_cli(int argc, char** argv) {
  CLI::App app{"paralg: Z_{2,2} graded Lie algebra and parastatistics verification"};
  app.require_subcommand(1);
  auto start = std::chrono::steady_clock::now();

  // check
  auto* check = app.add_subcommand("check", "run the axiom checkers on an algebra spec file");
  std::string check_path;
  CommonOpts check_opts;
  check->add_option("file", check_path, "algebra spec JSON")->required();
  add_common_flags(check, check_opts, false);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "built-in algebra instances");
  auto* catalog_list = catalog->add_subcommand("list", "list catalog ids");
  auto* catalog_export = catalog->add_subcommand("export", "export a catalog instance");
  std::string cat_id, cat_out;
  std::string lambda1 = "0,-1", lambda2 = "0", lambda3 = "2", su11_kinds = "dot";
  catalog_export->add_option("--id", cat_id, "catalog id")->required();
  catalog_export->add_option("--out", cat_out, "output path")->required();
  catalog_export->add_option("--lambda1", lambda1, "su11_ext lambda1 as 're[,im]' rationals");
  catalog_export->add_option("--lambda2", lambda2, "su11_ext lambda2");
  catalog_export->add_option("--lambda3", lambda3, "su11_ext lambda3");
  catalog_export->add_option("--su11-kinds", su11_kinds, "Qa bracket reading: dot or displayed")
      ->check(CLI::IsMember({"dot", "displayed"}));

  // rep build
  auto* rep = app.add_subcommand("rep", "Green-ansatz representations");
  auto* rep_build = rep->add_subcommand("build", "build a representation and export its manifest");
  LayoutOpts rep_layout;
  std::string rep_out;
  add_layout_flags(rep_build, rep_layout);
  rep_build->add_option("--out", rep_out, "manifest output path")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "evaluate relation sets on a representation");
  LayoutOpts verify_layout;
  CommonOpts verify_opts;
  std::string set_name = "eq12", relations_path;
  add_layout_flags(verify, verify_layout);
  verify->add_option("--set", set_name,
                     "built-in set (eq11, eq12, eq14, closure15_19, closure, canonical_p1, "
                     "reduction_p1, jacobi8)");
  verify->add_option("--relations", relations_path, "custom relation-set JSON file");
  add_common_flags(verify, verify_opts);

  // extract
  auto* extract = app.add_subcommand(
      "extract", "extract structure constants and run the algebra checkers on them");
  LayoutOpts extract_layout;
  CommonOpts extract_opts;
  extract_opts.tol = 1e-8;
  std::string basis_csv, extract_spec_out;
  add_layout_flags(extract, extract_layout);
  extract->add_option("--basis", basis_csv, "comma-separated operator ids (default: all families)");
  extract->add_option("--spec-out", extract_spec_out, "write the recovered algebra spec here");
  add_common_flags(extract, extract_opts, false);

  // classify
  auto* classify = app.add_subcommand("classify", "subalgebra closure and dimension report");
  LayoutOpts classify_layout;
  CommonOpts classify_opts;
  classify_opts.tol = 1e-8;
  add_layout_flags(classify, classify_layout);
  add_common_flags(classify, classify_opts, false);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "supercharge Hamiltonian spectra");
  LayoutOpts spectrum_layout;
  CommonOpts spectrum_opts;
  add_layout_flags(spectrum, spectrum_layout);
  add_common_flags(spectrum, spectrum_opts, false);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    std::vector<std::string> warnings;
    AlgebraSpec spec = algebra_from_json(load_json_file(check_path), &warnings);
    CheckReport report = run_all_checks(spec, check_opts.tol);
    for (const auto& w : warnings) report.notes.push_back(w);
    Json config{{"file", check_path}, {"tol", check_opts.tol}};
    return emit(check_opts, "check", config, report_to_json(report, spec), report.passed,
                check_text(report, spec), start);
  }

  if (catalog_list->parsed()) {
    for (const auto& id : catalog_ids()) std::cout << id << "\n";
    return kExitPassed;
  }
  if (catalog_export->parsed()) {
    Json meta;
    AlgebraSpec spec = build_catalog_spec(cat_id, lambda1, lambda2, lambda3, su11_kinds, &meta);
    write_json_file(cat_out, algebra_to_json(spec, meta));
    std::cout << "wrote " << cat_out << "\n";
    return kExitPassed;
  }
  if (catalog->parsed()) {
    std::cerr << "catalog requires a subcommand (list, export)\n";
    return kExitStructural;
  }

  if (rep_build->parsed()) {
    GreenRep green = build_green_rep(rep_layout.layout());
    write_json_file(rep_out, rep_to_json(green));
    std::cout << "wrote " << rep_out << "\n";
    return kExitPassed;
  }
  if (rep->parsed()) {
    std::cerr << "rep requires a subcommand (build)\n";
    return kExitStructural;
  }

  if (verify->parsed()) {
    GreenRep green = build_green_rep(verify_layout.layout());
    ResidualReport report;
    if (!relations_path.empty()) {
      report = run_relation_set(green, relation_set_from_json(load_json_file(relations_path)),
                                verify_opts.tol, verify_opts.workers);
    } else if (set_name == "reduction_p1") {
      report = reduction_check_p1(green, verify_opts.tol, verify_opts.workers);
    } else {
      report = run_relation_set(
          green,
          builtin_relation_set(set_name, verify_layout.parabosons, verify_layout.parafermions),
          verify_opts.tol, verify_opts.workers);
    }
    Json config = verify_layout.config();
    config["set"] = relations_path.empty() ? set_name : relations_path;
    config["tol"] = verify_opts.tol;
    config["workers"] = verify_opts.workers;
    return emit(verify_opts, "verify", config, report_to_json(report), report.passed,
                residual_text(report), start);
  }

  if (extract->parsed()) {
    GreenRep green = build_green_rep(extract_layout.layout());
    std::vector<std::string> basis;
    if (basis_csv.empty()) {
      basis = para_lie_super_basis_names(extract_layout.parabosons, extract_layout.parafermions);
    } else {
      std::stringstream ss(basis_csv);
      std::string id;
      while (std::getline(ss, id, ',')) {
        if (!id.empty()) basis.push_back(id);
      }
    }
    ExtractionResult result = extract_structure_constants(green, basis, extract_opts.tol);
    CheckReport checks = run_all_checks(result.spec, extract_opts.tol);
    if (!extract_spec_out.empty()) {
      write_json_file(extract_spec_out,
                      algebra_to_json(result.spec, Json{{"extracted_from", extract_layout.config()}}));
    }
    bool passed = result.passed && checks.passed;
    Json out{{"extraction", report_to_json(result)},
             {"axiom_checks", report_to_json(checks, result.spec)}};
    Json config = extract_layout.config();
    config["tol"] = extract_opts.tol;
    std::ostringstream text;
    text << "extraction: pairs " << result.pairs << ", max span residual "
         << result.max_span_residual << ", max lattice distance " << result.max_lattice_distance
         << "\n"
         << check_text(checks, result.spec);
    return emit(extract_opts, "extract", config, out, passed, text.str(), start);
  }

  if (classify->parsed()) {
    GreenRep green = build_green_rep(classify_layout.layout());
    ClassificationReport report = classify_subalgebras(green, classify_opts.tol);
    Json config = classify_layout.config();
    config["tol"] = classify_opts.tol;
    std::ostringstream text;
    for (const auto& e : report.entries) {
      text << "  " << e.name << ": dim " << e.dimension << ", "
           << (e.closed ? "closed" : "NOT closed") << ", max residual " << e.max_residual << "\n";
    }
    return emit(classify_opts, "classify", config, report_to_json(report), report.passed,
                text.str(), start);
  }

  if (spectrum->parsed()) {
    GreenRep green = build_green_rep(spectrum_layout.layout());
    SpectralReport report = supercharge_spectra(green);
    std::ostringstream text;
    text << "  safe dim " << report.dim << "\n  H_Q spectrum [" << report.hq_min << ", "
         << report.hq_max << "], PSD: " << (report.hq_psd ? "yes" : "no") << "\n  H_F spectrum ["
         << report.hf_min << ", " << report.hf_max << "]\n";
    return emit(spectrum_opts, "spectrum", spectrum_layout.config(), report_to_json(report),
                report.hq_psd, text.str(), start);
  }

  std::cerr << "no subcommand\n";
  return kExitStructural;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStructural;
  }
}

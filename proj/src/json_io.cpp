#include "paralg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "paralg/errors.hpp"

namespace paralg {

namespace {

Json scalar_to_json(const Scalar& s) {
  if (s.exact()) {
    const auto& q = s.exact_value();
    return Json{{"re", q.re.str()}, {"im", q.im.str()}};
  }
  return Json{{"re", s.to_complex().real()}, {"im", s.to_complex().imag()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw structural_error("expected rational string, got: " + j.dump());
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number()) return Scalar::inexact({j.get<double>(), 0.0});
  if (j.is_string()) return Scalar(GaussianRational(Rational::parse(j.get<std::string>())));
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw structural_error("malformed coefficient: " + j.dump());
  const Json& re = j.at("re");
  const Json& im = j.at("im");
  if (re.is_number_float() || im.is_number_float()) {
    return Scalar::inexact({re.get<double>(), im.get<double>()});
  }
  return Scalar(GaussianRational(rational_from_json(re), rational_from_json(im)));
}

Degree degree_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw structural_error("degree must be [i, j]: " + j.dump());
  int i = j.at(0).get<int>();
  int jj = j.at(1).get<int>();
  if ((i != 0 && i != 1) || (jj != 0 && jj != 1))
    throw structural_error("degree bits must be 0 or 1: " + j.dump());
  return {std::uint8_t(i), std::uint8_t(jj)};
}

Json degree_to_json(Degree d) { return Json::array({int(d.i), int(d.j)}); }

}  // namespace

Json algebra_to_json(const AlgebraSpec& spec, Json meta) {
  Json j;
  if (!meta.empty()) j["meta"] = std::move(meta);
  Json basis = Json::array();
  for (const auto& e : spec.basis()) {
    basis.push_back(Json{{"name", e.name}, {"degree", degree_to_json(e.degree)}});
  }
  j["basis"] = std::move(basis);
  Json brackets = Json::array();
  for (const auto& [key, combo] : spec.table()) {
    Json result = Json::array();
    for (const auto& [k, s] : combo) {
      result.push_back(Json{{"coeff", scalar_to_json(s)}, {"elem", spec.element(k).name}});
    }
    brackets.push_back(Json{{"left", spec.element(key.first).name},
                            {"right", spec.element(key.second).name},
                            {"result", std::move(result)}});
  }
  j["brackets"] = std::move(brackets);
  if (spec.has_involution()) {
    Json inv = Json::array();
    const auto& images = spec.involution().images;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i].first < 0) continue;
      inv.push_back(Json::array({spec.element(int(i)).name,
                                 spec.element(images[i].first).name,
                                 scalar_to_json(images[i].second)}));
    }
    j["involution"] = std::move(inv);
  }
  if (!spec.kind_overrides().empty()) {
    Json overrides = Json::array();
    for (const auto& [key, kind] : spec.kind_overrides()) {
      if (key.first > key.second) continue;  // stored symmetrically, emit once
      overrides.push_back(Json::array(
          {degree_to_json(key.first), degree_to_json(key.second), to_string(kind)}));
    }
    j["kind_overrides"] = std::move(overrides);
  }
  return j;
}

AlgebraSpec algebra_from_json(const Json& j, std::vector<std::string>* warnings) {
  AlgebraSpec spec;
  if (!j.contains("basis")) throw structural_error("algebra file lacks 'basis'");
  for (const auto& e : j.at("basis")) {
    spec.add_element(e.at("name").get<std::string>(), degree_from_json(e.at("degree")));
  }
  if (j.contains("kind_overrides")) {
    for (const auto& o : j.at("kind_overrides")) {
      if (!o.is_array() || o.size() != 3) throw structural_error("malformed kind override");
      std::string kind = o.at(2).get<std::string>();
      if (kind != "comm" && kind != "anticomm")
        throw structural_error("kind override must be 'comm' or 'anticomm'");
      spec.set_kind_override(degree_from_json(o.at(0)), degree_from_json(o.at(1)),
                             kind == "comm" ? BracketKind::Commutator
                                            : BracketKind::Anticommutator);
    }
  }
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      int left = spec.require_index(b.at("left").get<std::string>());
      int right = spec.require_index(b.at("right").get<std::string>());
      std::map<int, Scalar> accum;
      for (const auto& term : b.at("result")) {
        accum[spec.require_index(term.at("elem").get<std::string>())] +=
            scalar_from_json(term.at("coeff"));
      }
      if (spec.has_bracket(left, right))
        throw structural_error("duplicate bracket entry for (" +
                               spec.element(left).name + ", " + spec.element(right).name + ")");
      spec.set_bracket(left, right, combo_normalize(std::move(accum)));
    }
  }
  // Derive missing reversed orders from the sign rule; flag stored conflicts.
  const int n = int(spec.size());
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      if (!spec.has_bracket(i, l)) continue;
      int eps = spec.epsilon(spec.element(i).degree, spec.element(l).degree);
      Combo rev;
      for (const auto& [k, s] : spec.bracket(i, l)) rev.emplace_back(k, eps > 0 ? -s : s);
      if (!spec.has_bracket(l, i)) {
        spec.set_bracket(l, i, std::move(rev));
      } else {
        const Combo& stored = spec.bracket(l, i);
        bool same = stored.size() == rev.size();
        if (same) {
          for (std::size_t t = 0; t < rev.size(); ++t) {
            if (stored[t].first != rev[t].first || !stored[t].second.equals(rev[t].second, 0.0))
              same = false;
          }
        }
        if (!same && warnings) {
          warnings->push_back("brackets (" + spec.element(i).name + ", " +
                              spec.element(l).name + ") and (" + spec.element(l).name + ", " +
                              spec.element(i).name + ") conflict with the sign rule");
        }
      }
    }
  }
  if (j.contains("involution")) {
    for (const auto& entry : j.at("involution")) {
      if (!entry.is_array() || entry.size() != 3)
        throw structural_error("involution entries must be [name, name, scalar]");
      int from = spec.require_index(entry.at(0).get<std::string>());
      int to = spec.require_index(entry.at(1).get<std::string>());
      spec.set_involution_entry(from, to, scalar_from_json(entry.at(2)));
    }
  }
  return spec;
}

Json rep_to_json(const GreenRep& rep) {
  Json j;
  j["layout"] = Json{{"parabosons", rep.layout().parabosons},
                     {"parafermions", rep.layout().parafermions},
                     {"order", rep.layout().order},
                     {"cutoff", rep.layout().cutoff}};
  Json gens = Json::object();
  for (const auto& [name, op] : rep.generators()) {
    Json triplets = Json::array();
    for (const auto& t : op.triplets()) {
      triplets.push_back(Json::array({t.row, t.col, t.value.real(), t.value.imag()}));
    }
    gens[name] = Json{{"dim", op.dim()}, {"triplets", std::move(triplets)}};
  }
  j["generators"] = std::move(gens);
  return j;
}

GreenRep rep_from_json(const Json& j) {
  const Json& l = j.at("layout");
  ModeLayout layout{l.at("parabosons").get<int>(), l.at("parafermions").get<int>(),
                    l.at("order").get<int>(), l.at("cutoff").get<int>()};
  std::map<std::string, SparseOperator> generators;
  for (const auto& [name, g] : j.at("generators").items()) {
    Index dim = g.at("dim").get<Index>();
    std::vector<Triplet> triplets;
    for (const auto& t : g.at("triplets")) {
      triplets.push_back(
          {t.at(0).get<Index>(), t.at(1).get<Index>(), {t.at(2).get<double>(), t.at(3).get<double>()}});
    }
    Degree degree{1, 0};
    if (name.rfind("f", 0) == 0) degree = Degree{1, 1};
    generators[name] = SparseOperator::from_triplets(dim, degree, 1, std::move(triplets));
  }
  return assemble_green_rep(layout, std::move(generators));
}

namespace {

// Coefficient grammar for relation files: rational or "i"-suffixed rational,
// e.g. "2", "-1/2", "i", "-2i".
Scalar coeff_from_json(const Json& j) {
  if (j.is_string()) {
    std::string text = j.get<std::string>();
    if (!text.empty() && text.back() == 'i') {
      std::string head = text.substr(0, text.size() - 1);
      if (head.empty() || head == "-" || head == "+") head += "1";
      return Scalar::gaussian(Rational(0), Rational::parse(head));
    }
    return Scalar(GaussianRational(Rational::parse(text)));
  }
  return scalar_from_json(j);
}

RelationTree tree_from_json(const Json& j) {
  if (j.contains("gen")) {
    std::vector<std::string> indices;
    if (j.contains("indices")) {
      for (const auto& s : j.at("indices")) indices.push_back(s.get<std::string>());
    }
    return RelationTree::leaf(j.at("gen").get<std::string>(), std::move(indices));
  }
  if (!j.contains("kind") || !j.contains("args"))
    throw structural_error("relation tree node needs 'kind' and 'args': " + j.dump());
  std::string kind = j.at("kind").get<std::string>();
  if (kind != "comm" && kind != "anticomm")
    throw structural_error("bracket kind must be 'comm' or 'anticomm'");
  const Json& args = j.at("args");
  if (!args.is_array() || args.size() != 2)
    throw structural_error("bracket node needs exactly two args");
  return RelationTree::bracket(
      kind == "comm" ? BracketKind::Commutator : BracketKind::Anticommutator,
      tree_from_json(args.at(0)), tree_from_json(args.at(1)));
}

}  // namespace

RelationSet relation_set_from_json(const Json& j) {
  RelationSet set;
  set.name = j.value("name", "custom");
  for (const auto& r : j.at("relations")) {
    RelationExpr rel;
    rel.name = r.at("name").get<std::string>();
    const Json& lhs = r.at("lhs");
    if (lhs.is_array()) {
      for (const auto& term : lhs) {
        rel.lhs.push_back({term.contains("coeff") ? coeff_from_json(term.at("coeff")) : Scalar(1),
                           tree_from_json(term.at("tree"))});
      }
    } else {
      rel.lhs.push_back({Scalar(1), tree_from_json(lhs)});
    }
    if (r.contains("rhs")) {
      for (const auto& term : r.at("rhs")) {
        RhsTerm t;
        t.coeff = term.contains("coeff") ? coeff_from_json(term.at("coeff")) : Scalar(1);
        if (term.contains("delta")) {
          for (const auto& d : term.at("delta")) {
            t.deltas.emplace_back(d.at(0).get<std::string>(), d.at(1).get<std::string>());
          }
        }
        t.gen = term.at("gen").get<std::string>();
        if (term.contains("indices")) {
          for (const auto& s : term.at("indices")) t.indices.push_back(s.get<std::string>());
        }
        rel.rhs.push_back(std::move(t));
      }
    }
    if (r.contains("ranges")) {
      for (const auto& [sym, count] : r.at("ranges").items()) {
        rel.ranges.emplace_back(sym, count.get<int>());
      }
    }
    set.relations.push_back(std::move(rel));
  }
  return set;
}

Json report_to_json(const ResidualReport& report) {
  Json j;
  j["set"] = report.set_name;
  j["tol"] = report.tol;
  j["passed"] = report.passed;
  j["max_rel_residual"] = report.max_rel_residual;
  j["instances"] = report.instances_total;
  Json relations = Json::array();
  for (const auto& r : report.relations) {
    Json worst = Json::object();
    if (r.instances > 0) {
      Json assign = Json::object();
      for (const auto& [sym, v] : r.worst.assignment) assign[sym] = v;
      worst = Json{{"assignment", std::move(assign)},
                   {"abs_residual", r.worst.abs_residual},
                   {"scale", r.worst.scale},
                   {"row", r.worst.worst_row},
                   {"col", r.worst.worst_col}};
    }
    relations.push_back(Json{{"name", r.relation},
                             {"instances", r.instances},
                             {"max_abs_residual", r.max_abs},
                             {"max_rel_residual", r.max_rel},
                             {"passed", r.passed},
                             {"worst", std::move(worst)}});
  }
  j["relations"] = std::move(relations);
  return j;
}

Json report_to_json(const CheckReport& report, const AlgebraSpec& spec) {
  Json j;
  j["passed"] = report.passed;
  j["violation_count"] = report.violation_count;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json names = Json::array();
    for (int idx : v.indices) names.push_back(spec.element(idx).name);
    violations.push_back(Json{{"axiom", v.axiom},
                              {"elements", std::move(names)},
                              {"residual", Json::array({v.residual.real(), v.residual.imag()})},
                              {"detail", v.detail}});
  }
  j["violations"] = std::move(violations);
  if (!report.notes.empty()) j["notes"] = report.notes;
  if (!report.jacobi_classes.empty()) {
    Json classes = Json::object();
    for (const auto& [key, counts] : report.jacobi_classes) {
      classes[key] = Json{{"triples", counts.first}, {"violating", counts.second}};
    }
    j["jacobi_classes"] = std::move(classes);
  }
  return j;
}

Json report_to_json(const ExtractionResult& result) {
  return Json{{"passed", result.passed},
              {"pairs", result.pairs},
              {"basis_size", result.spec.size()},
              {"max_span_residual", result.max_span_residual},
              {"max_lattice_distance", result.max_lattice_distance},
              {"notes", result.notes}};
}

Json report_to_json(const ClassificationReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"name", e.name},
                           {"dimension", e.dimension},
                           {"closed", e.closed},
                           {"max_residual", e.max_residual}});
  }
  return Json{{"passed", report.passed}, {"subalgebras", std::move(entries)}};
}

Json report_to_json(const SpectralReport& report) {
  Json j{{"dim", report.dim},
         {"hq", Json{{"min", report.hq_min},
                     {"max", report.hq_max},
                     {"hermiticity_residual", report.hq_hermiticity},
                     {"positive_semidefinite", report.hq_psd}}},
         {"hf", Json{{"min", report.hf_min},
                     {"max", report.hf_max},
                     {"hermiticity_residual", report.hf_hermiticity}}}};
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw structural_error("parse error in " + path + " at byte " + std::to_string(e.byte) +
                           ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw structural_error("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw structural_error("failed writing file: " + path);
}

}  // namespace paralg

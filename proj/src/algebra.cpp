#include "paralg/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "paralg/errors.hpp"

namespace paralg {

Combo combo_normalize(std::map<int, Scalar> accum, double tol) {
  Combo out;
  for (auto& [idx, s] : accum) {
    if (!s.is_zero(tol)) out.emplace_back(idx, s);
  }
  return out;
}

Combo combo_scale(const Combo& c, const Scalar& s) {
  Combo out;
  out.reserve(c.size());
  for (const auto& [idx, coeff] : c) {
    Scalar v = coeff * s;
    if (!v.is_zero()) out.emplace_back(idx, v);
  }
  return out;
}

int AlgebraSpec::add_element(const std::string& name, Degree degree) {
  if (index_.count(name)) throw structural_error("duplicate basis name: " + name);
  int idx = static_cast<int>(basis_.size());
  basis_.push_back({name, degree});
  index_[name] = idx;
  return idx;
}

int AlgebraSpec::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int AlgebraSpec::require_index(const std::string& name) const {
  int idx = index_of(name);
  if (idx < 0) throw structural_error("unknown basis element: " + name);
  return idx;
}

void AlgebraSpec::set_bracket(int left, int right, Combo combo) {
  if (left < 0 || right < 0 || left >= int(size()) || right >= int(size()))
    throw structural_error("bracket index out of range");
  for (const auto& [k, s] : combo) {
    if (k < 0 || k >= int(size())) throw structural_error("bracket target index out of range");
    (void)s;
  }
  std::sort(combo.begin(), combo.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (combo.empty()) {
    table_.erase({left, right});
  } else {
    table_[{left, right}] = std::move(combo);
  }
}

void AlgebraSpec::set_bracket_both(int left, int right, const Combo& combo) {
  set_bracket(left, right, combo);
  if (left == right) return;
  // u o v = -eps(u,v) v o u
  int eps = epsilon(basis_[left].degree, basis_[right].degree);
  Combo rev;
  rev.reserve(combo.size());
  for (const auto& [k, s] : combo) rev.emplace_back(k, eps > 0 ? -s : s);
  set_bracket(right, left, std::move(rev));
}

const Combo& AlgebraSpec::bracket(int left, int right) const {
  static const Combo kEmpty;
  auto it = table_.find({left, right});
  return it == table_.end() ? kEmpty : it->second;
}

bool AlgebraSpec::has_bracket(int left, int right) const { return table_.count({left, right}); }

void AlgebraSpec::set_kind_override(Degree a, Degree b, BracketKind k) {
  kind_overrides_[{a, b}] = k;
  kind_overrides_[{b, a}] = k;
}

BracketKind AlgebraSpec::kind(Degree a, Degree b) const {
  auto it = kind_overrides_.find({a, b});
  if (it != kind_overrides_.end()) return it->second;
  return bracket_kind(a, b);
}

void AlgebraSpec::set_involution_entry(int idx, int target, const Scalar& s) {
  if (idx < 0 || idx >= int(size()) || target < 0 || target >= int(size()))
    throw structural_error("involution index out of range");
  if (!involution_) {
    involution_ = Involution{};
    involution_->images.assign(size(), {-1, Scalar()});
  }
  if (int(involution_->images.size()) < int(size()))
    involution_->images.resize(size(), {-1, Scalar()});
  involution_->images[idx] = {target, s};
}

const Involution& AlgebraSpec::involution() const {
  if (!involution_) throw structural_error("spec has no involution");
  return *involution_;
}

bool AlgebraSpec::exact() const {
  for (const auto& [key, combo] : table_) {
    (void)key;
    for (const auto& [idx, s] : combo) {
      (void)idx;
      if (!s.exact()) return false;
    }
  }
  if (involution_) {
    for (const auto& [tgt, s] : involution_->images) {
      if (tgt >= 0 && !s.exact()) return false;
    }
  }
  return true;
}

std::vector<int> AlgebraSpec::canonical_order() const {
  std::vector<int> order(basis_.size());
  for (std::size_t n = 0; n < order.size(); ++n) order[n] = int(n);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ea = basis_[a];
    const auto& eb = basis_[b];
    if (ea.degree != eb.degree) return ea.degree < eb.degree;
    return ea.name < eb.name;
  });
  return order;
}

std::vector<Degree> AlgebraSpec::occupied_degrees() const {
  std::set<Degree> seen;
  for (const auto& e : basis_) seen.insert(e.degree);
  return {seen.begin(), seen.end()};
}

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t n = 0; n < a.basis_.size(); ++n) {
    if (a.basis_[n].name != b.basis_[n].name || a.basis_[n].degree != b.basis_[n].degree)
      return false;
  }
  if (a.kind_overrides_ != b.kind_overrides_) return false;
  // Missing entries are zero, so compare the union of keys.
  auto combos_equal = [](const Combo& x, const Combo& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t n = 0; n < x.size(); ++n) {
      if (x[n].first != y[n].first || !x[n].second.equals(y[n].second)) return false;
    }
    return true;
  };
  for (const auto& [key, combo] : a.table_) {
    if (!combos_equal(combo, b.bracket(key.first, key.second))) return false;
  }
  for (const auto& [key, combo] : b.table_) {
    if (!combos_equal(combo, a.bracket(key.first, key.second))) return false;
  }
  bool ia = a.involution_.has_value(), ib = b.involution_.has_value();
  if (ia != ib) return false;
  if (ia) {
    const auto& va = a.involution_->images;
    const auto& vb = b.involution_->images;
    if (va.size() != vb.size()) return false;
    for (std::size_t n = 0; n < va.size(); ++n) {
      if (va[n].first != vb[n].first || !va[n].second.equals(vb[n].second)) return false;
    }
  }
  return true;
}

void CheckReport::add(Violation v) {
  passed = false;
  ++violation_count;
  std::size_t same_axiom = 0;
  for (const auto& w : violations) {
    if (w.axiom == v.axiom) ++same_axiom;
  }
  if (same_axiom < kMaxViolationsPerAxiom) violations.push_back(std::move(v));
}

void CheckReport::merge(const CheckReport& other) {
  passed = passed && other.passed;
  violation_count += other.violation_count;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  for (const auto& [k, v] : other.jacobi_classes) {
    auto& slot = jacobi_classes[k];
    slot.first += v.first;
    slot.second += v.second;
  }
}

namespace {

std::string triple_detail(const AlgebraSpec& spec, const std::vector<int>& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t n = 0; n < idx.size(); ++n) {
    if (n) os << ", ";
    os << spec.element(idx[n]).name;
  }
  os << ")";
  return os.str();
}

std::string class_key(Degree a, Degree b, Degree c) {
  std::array<Degree, 3> d{a, b, c};
  std::sort(d.begin(), d.end());
  std::string key;
  for (auto g : d) {
    key += std::to_string(int(g.i));
    key += std::to_string(int(g.j));
    key += ' ';
  }
  key.pop_back();
  return key;
}

}  // namespace

CheckReport check_grading(const AlgebraSpec& spec) {
  CheckReport report;
  auto order = spec.canonical_order();
  for (int i : order) {
    for (int j : order) {
      Degree want = degree_add(spec.element(i).degree, spec.element(j).degree);
      for (const auto& [k, c] : spec.bracket(i, j)) {
        if (spec.element(k).degree != want) {
          report.add({"grading",
                      {i, j, k},
                      c.to_complex(),
                      triple_detail(spec, {i, j, k}) + " lands in " +
                          to_string(spec.element(k).degree) + ", expected " + to_string(want)});
        }
      }
    }
  }
  return report;
}

CheckReport check_supersymmetrization(const AlgebraSpec& spec, double tol) {
  CheckReport report;
  bool exact = spec.exact();
  auto order = spec.canonical_order();
  for (int i : order) {
    for (int j : order) {
      int eps = spec.epsilon(spec.element(i).degree, spec.element(j).degree);
      // C_ij^k + eps * C_ji^k must vanish.
      std::map<int, Scalar> accum;
      for (const auto& [k, c] : spec.bracket(i, j)) accum[k] += c;
      for (const auto& [k, c] : spec.bracket(j, i)) accum[k] += (eps > 0 ? c : -c);
      for (auto& [k, r] : accum) {
        if (!r.is_zero(exact ? 0.0 : tol)) {
          report.add({"supersymmetrization",
                      {i, j, k},
                      r.to_complex(),
                      triple_detail(spec, {i, j, k}) + " violates the sign rule"});
        }
      }
    }
  }
  return report;
}

int count_jacobi_classes(const AlgebraSpec& spec) {
  std::size_t n = spec.occupied_degrees().size();
  // multisets of size 3 over n symbols
  return static_cast<int>(n * (n + 1) * (n + 2) / 6);
}

CheckReport check_jacobi(const AlgebraSpec& spec, double tol) {
  {
    CheckReport pre = check_grading(spec);
    pre.merge(check_supersymmetrization(spec, tol));
    if (!pre.passed) {
      throw structural_error(
          "check_jacobi precondition failed: spec violates grading or the sign rule (" +
          std::to_string(pre.violation_count) + " violations); Jacobi residuals are meaningless");
    }
  }
  CheckReport report;
  bool exact = spec.exact();
  auto order = spec.canonical_order();
  const int n = int(spec.size());
  for (int a = 0; a < n; ++a) {
    int i = order[a];
    Degree gi = spec.element(i).degree;
    for (int b = 0; b < n; ++b) {
      int j = order[b];
      Degree gj = spec.element(j).degree;
      for (int c = 0; c < n; ++c) {
        int k = order[c];
        Degree gk = spec.element(k).degree;
        // eps(i,k) e_i o (e_j o e_k) + eps(j,i) e_j o (e_k o e_i)
        //   + eps(k,j) e_k o (e_i o e_j) = 0
        std::map<int, Scalar> accum;
        auto add_term = [&](int sign, int u, const Combo& inner) {
          for (const auto& [m, c1] : inner) {
            for (const auto& [t, c2] : spec.bracket(u, m)) {
              Scalar v = c1 * c2;
              accum[t] += (sign > 0 ? v : -v);
            }
          }
        };
        add_term(spec.epsilon(gi, gk), i, spec.bracket(j, k));
        add_term(spec.epsilon(gj, gi), j, spec.bracket(k, i));
        add_term(spec.epsilon(gk, gj), k, spec.bracket(i, j));

        auto& slot = report.jacobi_classes[class_key(gi, gj, gk)];
        ++slot.first;
        bool violated = false;
        for (auto& [t, r] : accum) {
          if (!r.is_zero(exact ? 0.0 : tol)) {
            violated = true;
            report.add({"jacobi",
                        {i, j, k, t},
                        r.to_complex(),
                        "generalized Jacobi fails on " + triple_detail(spec, {i, j, k}) +
                            " along " + spec.element(t).name});
          }
        }
        if (violated) ++slot.second;
      }
    }
  }
  return report;
}

CheckReport check_involution(const AlgebraSpec& spec, double tol) {
  CheckReport report;
  if (!spec.has_involution()) {
    report.notes.push_back("no involution declared; check skipped");
    return report;
  }
  bool exact = spec.exact();
  double cmp_tol = exact ? 0.0 : tol;
  const auto& inv = spec.involution();
  auto theta_idx = [&](int idx) -> const std::pair<int, Scalar>& { return inv.images.at(idx); };

  for (int i : spec.canonical_order()) {
    const auto& [tgt, s] = theta_idx(i);
    if (tgt < 0) {
      report.add({"involution", {i}, {0, 0}, spec.element(i).name + " has no involution image"});
      continue;
    }
    if (spec.element(tgt).degree != spec.element(i).degree) {
      report.add({"involution",
                  {i, tgt},
                  {0, 0},
                  "involution maps " + spec.element(i).name + " across degrees"});
    }
    // theta(theta(e_i)) = conj(s_i) s_{sigma(i)} e_{sigma(sigma(i))} must equal e_i.
    const auto& [tgt2, s2] = theta_idx(tgt);
    if (tgt2 < 0) continue;
    Scalar round_trip = s.conj() * s2;
    if (tgt2 != i || !round_trip.equals(Scalar(1), cmp_tol)) {
      report.add({"involution",
                  {i, tgt, tgt2},
                  (round_trip - Scalar(1)).to_complex(),
                  "involution does not square to identity on " + spec.element(i).name});
    }
  }
  if (!report.passed) return report;

  // Anti-automorphism: theta(e_i o e_j) = theta(e_j) o theta(e_i).
  for (int i : spec.canonical_order()) {
    for (int j : spec.canonical_order()) {
      const auto& [ti, si] = theta_idx(i);
      const auto& [tj, sj] = theta_idx(j);
      std::map<int, Scalar> accum;
      for (const auto& [k, c] : spec.bracket(i, j)) {
        const auto& [tk, sk] = theta_idx(k);
        accum[tk] += c.conj() * sk;
      }
      Scalar factor = sj * si;
      for (const auto& [k, c] : spec.bracket(tj, ti)) accum[k] += -(c * factor);
      for (auto& [k, r] : accum) {
        if (!r.is_zero(cmp_tol)) {
          report.add({"involution",
                      {i, j, k},
                      r.to_complex(),
                      "involution is not an anti-automorphism on " + triple_detail(spec, {i, j}) +
                          " along " + spec.element(k).name});
        }
      }
    }
  }
  return report;
}

CheckReport run_all_checks(const AlgebraSpec& spec, double tol) {
  CheckReport report = check_grading(spec);
  report.merge(check_supersymmetrization(spec, tol));
  if (report.passed) {
    report.merge(check_jacobi(spec, tol));
  } else {
    report.notes.push_back("check_jacobi skipped: grading or sign rule already violated");
  }
  report.merge(check_involution(spec, tol));
  return report;
}

Combo spec_bracket(const AlgebraSpec& spec, const Combo& u, const Combo& v) {
  std::map<int, Scalar> accum;
  for (const auto& [m, cu] : u) {
    for (const auto& [n, cv] : v) {
      Scalar f = cu * cv;
      for (const auto& [k, c] : spec.bracket(m, n)) accum[k] += f * c;
    }
  }
  return combo_normalize(std::move(accum));
}

CheckReport verify_homomorphism(const LinearMap& map, double tol) {
  CheckReport report;
  const auto& src = map.source;
  const auto& tgt = map.target;
  if (map.images.size() != src.size())
    throw structural_error("linear map image count does not match source basis");
  bool exact = src.exact() && tgt.exact();
  for (const auto& img : map.images) {
    for (const auto& [k, c] : img) {
      if (k < 0 || k >= int(tgt.size()))
        throw structural_error("linear map image index out of target range");
      (void)c;
    }
  }
  double cmp_tol = exact ? 0.0 : tol;

  // Degree preservation is checked, not assumed.
  for (int i : src.canonical_order()) {
    for (const auto& [k, c] : map.images[i]) {
      if (tgt.element(k).degree != src.element(i).degree) {
        report.add({"degree",
                    {i, k},
                    c.to_complex(),
                    "image of " + src.element(i).name + " meets " + tgt.element(k).name +
                        " of different degree"});
      }
    }
  }

  for (int i : src.canonical_order()) {
    for (int j : src.canonical_order()) {
      // phi(e_i o e_j) - phi(e_i) o phi(e_j), expanded in the target basis.
      std::map<int, Scalar> accum;
      for (const auto& [k, c] : src.bracket(i, j)) {
        for (const auto& [t, s] : map.images[k]) accum[t] += c * s;
      }
      for (const auto& [t, s] : spec_bracket(tgt, map.images[i], map.images[j])) accum[t] += -s;
      for (auto& [t, r] : accum) {
        if (!r.is_zero(cmp_tol)) {
          report.add({"homomorphism",
                      {i, j, t},
                      r.to_complex(),
                      "phi(" + src.element(i).name + " o " + src.element(j).name +
                          ") mismatch along " + tgt.element(t).name});
        }
      }
    }
  }
  return report;
}

std::pair<bool, int> subalgebra_closure(const AlgebraSpec& spec,
                                        const std::vector<std::string>& subset) {
  std::set<int> members;
  for (const auto& name : subset) members.insert(spec.require_index(name));
  bool closed = true;
  for (int i : members) {
    for (int j : members) {
      for (const auto& [k, c] : spec.bracket(i, j)) {
        (void)c;
        if (!members.count(k)) closed = false;
      }
    }
  }
  return {closed, int(members.size())};
}

}  // namespace paralg

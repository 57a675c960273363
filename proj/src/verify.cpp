#include "paralg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "paralg/catalog.hpp"
#include "paralg/eig.hpp"
#include "paralg/errors.hpp"

namespace paralg {

namespace {

using Assignment = std::vector<std::pair<std::string, int>>;

int assigned(const Assignment& assign, const std::string& sym) {
  for (const auto& [s, v] : assign) {
    if (s == sym) return v;
  }
  throw structural_error("relation references unbound index symbol '" + sym + "'");
}

std::string leaf_op_name(const RelationExpr& rel, const RelationTree& leaf,
                         const Assignment& assign, const std::vector<std::string>& pool) {
  if (leaf.gen == "one") return "one";
  if (leaf.gen == "pool") {
    int v = assigned(assign, leaf.indices.at(0));
    if (v < 1 || v > int(pool.size()))
      throw structural_error("pool index out of range in relation " + rel.name);
    return pool[v - 1];
  }
  std::string name = leaf.gen;
  for (const auto& sym : leaf.indices) name += "_" + std::to_string(assigned(assign, sym));
  return name;
}

SparseOperator eval_tree(const GreenRep& rep, const RelationExpr& rel, const RelationTree& tree,
                         const Assignment& assign, const std::vector<std::string>& pool) {
  if (tree.is_leaf()) return rep.op(leaf_op_name(rel, tree, assign, pool));
  SparseOperator left = eval_tree(rep, rel, tree.children[0], assign, pool);
  SparseOperator right = eval_tree(rep, rel, tree.children[1], assign, pool);
  return op_bracket(left, right, tree.kind);
}

InstanceResult eval_instance(const GreenRep& rep, const RelationExpr& rel,
                             const Assignment& assign, const std::vector<Index>& safe,
                             const std::vector<std::string>& pool) {
  SparseOperator lhs = SparseOperator::zero(rep.dim());
  for (const auto& term : rel.lhs) {
    lhs = lhs + eval_tree(rep, rel, term.tree, assign, pool).scaled(term.coeff.to_complex());
  }
  SparseOperator rhs = SparseOperator::zero(rep.dim());
  for (const auto& term : rel.rhs) {
    bool alive = true;
    for (const auto& [si, sj] : term.deltas) {
      if (assigned(assign, si) != assigned(assign, sj)) {
        alive = false;
        break;
      }
    }
    if (!alive) continue;
    RelationTree leaf = RelationTree::leaf(term.gen, term.indices);
    rhs = rhs + rep.op(leaf_op_name(rel, leaf, assign, pool)).scaled(term.coeff.to_complex());
  }
  InstanceResult out;
  out.assignment = assign;
  SparseOperator diff = lhs - rhs;
  out.abs_residual = diff.max_abs_on(safe, &out.worst_row, &out.worst_col);
  out.scale = std::max({1.0, lhs.max_abs_on(safe), rhs.max_abs_on(safe)});
  return out;
}

std::vector<Assignment> enumerate_assignments(const RelationExpr& rel) {
  std::vector<Assignment> out;
  for (const auto& [sym, count] : rel.ranges) {
    (void)sym;
    if (count <= 0) return {};
  }
  Assignment current;
  for (const auto& [sym, count] : rel.ranges) {
    (void)count;
    current.emplace_back(sym, 1);
  }
  while (true) {
    out.push_back(current);
    std::size_t pos = 0;
    while (pos < current.size()) {
      if (current[pos].second < rel.ranges[pos].second) {
        ++current[pos].second;
        break;
      }
      current[pos].second = 1;
      ++pos;
    }
    if (pos == current.size()) break;
  }
  return out;
}

struct Task {
  std::size_t relation;
  Assignment assignment;
  const std::vector<Index>* safe;
};

}  // namespace

ResidualReport eval_relation(const GreenRep& rep, const RelationExpr& rel, double tol,
                             int workers) {
  RelationSet set;
  set.name = rel.name;
  set.relations.push_back(rel);
  return run_relation_set(rep, set, tol, workers);
}

ResidualReport run_relation_set(const GreenRep& rep, const RelationSet& set, double tol,
                                int workers) {
  ResidualReport report;
  report.set_name = set.name;
  report.tol = tol;
  const std::vector<std::string> pool =
      para_lie_super_basis_names(rep.layout().parabosons, rep.layout().parafermions);

  // One safe subspace per distinct word length in the set.
  std::map<int, std::vector<Index>> safe_by_word;
  std::vector<Task> tasks;
  std::vector<std::vector<Assignment>> per_relation(set.relations.size());
  for (std::size_t r = 0; r < set.relations.size(); ++r) {
    per_relation[r] = enumerate_assignments(set.relations[r]);
    if (per_relation[r].empty()) continue;
    int word = relation_word_len(set.relations[r]);
    auto it = safe_by_word.find(word);
    if (it == safe_by_word.end()) {
      auto safe = rep.safe_projector(word);
      if (safe.empty()) {
        throw resource_error("cutoff too small: relation '" + set.relations[r].name +
                             "' has word length " + std::to_string(word) + ", need cutoff >= " +
                             std::to_string(word) + " (have " +
                             std::to_string(rep.layout().cutoff) + ")");
      }
      it = safe_by_word.emplace(word, std::move(safe)).first;
    }
    for (auto& assign : per_relation[r]) tasks.push_back({r, assign, &it->second});
  }

  std::vector<InstanceResult> results(tasks.size());
  workers = std::max(1, workers);
  if (workers == 1 || tasks.size() < 2) {
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      results[t] = eval_instance(rep, set.relations[tasks[t].relation], tasks[t].assignment,
                                 *tasks[t].safe, pool);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      std::size_t t;
      while ((t = next.fetch_add(1)) < tasks.size()) {
        try {
          results[t] = eval_instance(rep, set.relations[tasks[t].relation], tasks[t].assignment,
                                     *tasks[t].safe, pool);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  report.relations.resize(set.relations.size());
  for (std::size_t r = 0; r < set.relations.size(); ++r) {
    report.relations[r].relation = set.relations[r].name;
  }
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto& slot = report.relations[tasks[t].relation];
    const auto& inst = results[t];
    ++slot.instances;
    ++report.instances_total;
    double rel_res = inst.abs_residual / inst.scale;
    if (inst.abs_residual > slot.max_abs) {
      slot.max_abs = inst.abs_residual;
      slot.worst = inst;
    }
    slot.max_rel = std::max(slot.max_rel, rel_res);
    if (inst.abs_residual > tol * inst.scale) slot.passed = false;
    report.max_rel_residual = std::max(report.max_rel_residual, rel_res);
  }
  for (const auto& slot : report.relations) report.passed = report.passed && slot.passed;
  return report;
}

ResidualReport suite_eq12(const GreenRep& rep, double tol, int workers) {
  return run_relation_set(
      rep, builtin_relation_set("eq12", rep.layout().parabosons, rep.layout().parafermions), tol,
      workers);
}

ResidualReport suite_closure(const GreenRep& rep, double tol, int workers) {
  return run_relation_set(
      rep, builtin_relation_set("closure", rep.layout().parabosons, rep.layout().parafermions),
      tol, workers);
}

ResidualReport reduction_check_p1(const GreenRep& rep, double tol, int workers) {
  if (rep.layout().order != 1) {
    throw structural_error("reduction_check_p1 requires a representation built with order 1, got " +
                           std::to_string(rep.layout().order));
  }
  return run_relation_set(
      rep,
      builtin_relation_set("canonical_p1", rep.layout().parabosons, rep.layout().parafermions),
      tol, workers);
}

namespace {

// Least-squares expansion of operators in a fixed operator basis, using matrix
// elements <u|X|v> with v restricted to the safe subspace (exact under
// truncation for words within the safe margin).
class SpanSolver {
 public:
  SpanSolver(const GreenRep& rep, std::vector<std::string> ids, int pair_word)
      : ids_(std::move(ids)) {
    for (const auto& id : ids_) ops_.push_back(rep.op(id));
    for (const auto& op : ops_) adjoints_.push_back(op.adjoint());
    auto safe = rep.safe_projector(pair_word);
    if (safe.empty()) {
      throw resource_error("cutoff too small for operator extraction: need cutoff >= " +
                           std::to_string(pair_word) + " (have " +
                           std::to_string(rep.layout().cutoff) + ")");
    }
    mask_.assign(rep.dim(), 0);
    for (Index v : safe) mask_[v] = 1;
    safe_ = std::move(safe);
    factorize();
  }

  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<SparseOperator>& ops() const { return ops_; }
  const std::vector<Index>& safe() const { return safe_; }

  // <vec(E_i), vec(X)> over entries with safe column index.
  Complex inner_with_basis(std::size_t i, const SparseOperator& x_adj) const {
    return masked_inner(adjoints_[i], x_adj);
  }

  std::vector<Complex> solve(const SparseOperator& bracket) const {
    SparseOperator br_adj = bracket.adjoint();
    std::vector<Complex> b(n());
    for (std::size_t i = 0; i < n(); ++i) b[i] = inner_with_basis(i, br_adj);
    return solve_gram(b);
  }

  std::size_t n() const { return ops_.size(); }

 private:
  Complex masked_inner(const SparseOperator& a_adj, const SparseOperator& b_adj) const {
    // sum_{v safe, u} A[v,u] conj(B[v,u]) with A = E^dag, B = X^dag equals
    // sum conj(E[u,v]) X[u,v].
    Complex total{0.0, 0.0};
    for (Index v : safe_) {
      auto ra = a_adj.row(v);
      auto rb = b_adj.row(v);
      std::size_t ia = 0, ib = 0;
      while (ia < ra.count && ib < rb.count) {
        if (ra.cols[ia] < rb.cols[ib]) {
          ++ia;
        } else if (ra.cols[ia] > rb.cols[ib]) {
          ++ib;
        } else {
          total += ra.vals[ia] * std::conj(rb.vals[ib]);
          ++ia;
          ++ib;
        }
      }
    }
    return total;
  }

  void factorize() {
    const std::size_t m = n();
    gram_.assign(m * m, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        // masked_inner(E_i^dag, E_j^dag) = sum conj(E_i[u,v]) E_j[u,v] = <E_i, E_j>
        Complex g = masked_inner(adjoints_[i], adjoints_[j]);
        gram_[i * m + j] = g;
        gram_[j * m + i] = std::conj(g);
      }
    }
    // Pivoted Cholesky with rank detection.
    perm_.resize(m);
    for (std::size_t i = 0; i < m; ++i) perm_[i] = i;
    low_ = gram_;
    double max_diag = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      max_diag = std::max(max_diag, low_[i * m + i].real());
    const double pivot_tol = 1e-10 * std::max(max_diag, 1.0);
    auto at = [&](std::size_t r, std::size_t c) -> Complex& { return low_[r * m + c]; };
    for (std::size_t t = 0; t < m; ++t) {
      std::size_t best = t;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (at(r, r).real() > at(best, best).real()) best = r;
      }
      if (at(best, best).real() <= pivot_tol) {
        std::ostringstream os;
        os << "linearly dependent operators in extraction basis:";
        for (std::size_t r = t; r < m; ++r) os << " " << ids_[perm_[r]];
        throw structural_error(os.str());
      }
      if (best != t) {
        std::swap(perm_[t], perm_[best]);
        for (std::size_t c = 0; c < m; ++c) std::swap(at(t, c), at(best, c));
        for (std::size_t r = 0; r < m; ++r) std::swap(at(r, t), at(r, best));
      }
      double d = std::sqrt(at(t, t).real());
      at(t, t) = Complex{d, 0.0};
      for (std::size_t r = t + 1; r < m; ++r) at(r, t) /= d;
      for (std::size_t r = t + 1; r < m; ++r) {
        for (std::size_t c = t + 1; c <= r; ++c) {
          at(r, c) -= at(r, t) * std::conj(at(c, t));
          if (c != r) at(c, r) = std::conj(at(r, c));
        }
      }
    }
  }

  std::vector<Complex> solve_gram(const std::vector<Complex>& b) const {
    const std::size_t m = n();
    std::vector<Complex> y(m), x(m);
    auto at = [&](std::size_t r, std::size_t c) { return low_[r * m + c]; };
    for (std::size_t r = 0; r < m; ++r) {
      Complex s = b[perm_[r]];
      for (std::size_t c = 0; c < r; ++c) s -= at(r, c) * y[c];
      y[r] = s / at(r, r);
    }
    for (std::size_t rr = m; rr-- > 0;) {
      Complex s = y[rr];
      for (std::size_t c = rr + 1; c < m; ++c) s -= std::conj(at(c, rr)) * x[c];
      x[rr] = s / at(rr, rr);
    }
    std::vector<Complex> out(m);
    for (std::size_t r = 0; r < m; ++r) out[perm_[r]] = x[r];
    return out;
  }

  std::vector<std::string> ids_;
  std::vector<SparseOperator> ops_;
  std::vector<SparseOperator> adjoints_;
  std::vector<Index> safe_;
  std::vector<char> mask_;
  std::vector<Complex> gram_;
  std::vector<Complex> low_;
  std::vector<std::size_t> perm_;

 public:
  // Largest |entry| of X - sum coeff_i E_i over safe columns.
  double span_residual(const SparseOperator& x, const std::vector<Complex>& coeff) const {
    SparseOperator rem = x;
    for (std::size_t i = 0; i < n(); ++i) {
      if (std::abs(coeff[i]) > 0.0) rem = rem - ops_[i].scaled(coeff[i]);
    }
    return rem.max_abs_cols_masked(mask_);
  }
  double scale_of(const SparseOperator& x) const {
    return std::max(1.0, x.max_abs_cols_masked(mask_));
  }
};

bool snap_half_gaussian(Complex x, double tol, Scalar* out, double* dist) {
  double re2 = std::round(2.0 * x.real());
  double im2 = std::round(2.0 * x.imag());
  Complex snapped{re2 / 2.0, im2 / 2.0};
  *dist = std::abs(x - snapped);
  *out = Scalar::gaussian(Rational(static_cast<long long>(re2), 2),
                          Rational(static_cast<long long>(im2), 2));
  return *dist <= tol;
}

std::string dagger_id(const std::string& id) {
  auto split = id.find('_');
  std::string fam = id.substr(0, split);
  std::string rest = split == std::string::npos ? "" : id.substr(split);
  static const std::vector<std::pair<std::string, std::string>> kSwap = {
      {"a", "adag"},   {"adag", "a"},   {"f", "fdag"},   {"fdag", "f"},
      {"F", "Fdag"},   {"Fdag", "F"},   {"Q", "Qdag"},   {"Qdag", "Q"},
      {"Ba", "Badag"}, {"Badag", "Ba"}, {"Bf", "Bfdag"}, {"Bfdag", "Bf"}};
  if (fam == "Ma" || fam == "Mf") {
    auto second = rest.rfind('_');
    return fam + rest.substr(second) + rest.substr(0, second);
  }
  for (const auto& [from, to] : kSwap) {
    if (fam == from) return to + rest;
  }
  return id;
}

int max_word(const std::vector<SparseOperator>& ops) {
  int w = 0;
  for (const auto& op : ops) w = std::max(w, op.word_len());
  return w;
}

}  // namespace

ExtractionResult extract_structure_constants(const GreenRep& rep,
                                             const std::vector<std::string>& basis_ids,
                                             double tol) {
  ExtractionResult result;
  std::vector<SparseOperator> ops;
  for (const auto& id : basis_ids) ops.push_back(rep.op(id));
  const int pair_word = 2 * max_word(ops);
  SpanSolver solver(rep, basis_ids, pair_word);

  for (std::size_t i = 0; i < basis_ids.size(); ++i) {
    result.spec.add_element(basis_ids[i], ops[i].degree());
  }
  for (std::size_t i = 0; i < basis_ids.size(); ++i) {
    for (std::size_t j = 0; j < basis_ids.size(); ++j) {
      BracketKind kind = bracket_kind(ops[i].degree(), ops[j].degree());
      SparseOperator br = op_bracket(ops[i], ops[j], kind);
      std::vector<Complex> coeff = solver.solve(br);
      Combo combo;
      std::vector<Complex> snapped_coeff(coeff.size(), Complex{0.0, 0.0});
      for (std::size_t t = 0; t < coeff.size(); ++t) {
        Scalar s;
        double dist = 0.0;
        bool on_lattice = snap_half_gaussian(coeff[t], tol, &s, &dist);
        result.max_lattice_distance = std::max(result.max_lattice_distance, dist);
        if (!on_lattice) {
          result.passed = false;
          result.notes.push_back("coefficient of " + basis_ids[t] + " in [" + basis_ids[i] +
                                 ", " + basis_ids[j] + "] is " + std::to_string(coeff[t].real()) +
                                 "+" + std::to_string(coeff[t].imag()) +
                                 "i, off the (1/2)Z[i] lattice");
          combo.emplace_back(int(t), Scalar::inexact(coeff[t]));
          snapped_coeff[t] = coeff[t];
          continue;
        }
        if (!s.is_zero()) {
          combo.emplace_back(int(t), s);
          snapped_coeff[t] = s.to_complex();
        }
      }
      double residual = solver.span_residual(br, snapped_coeff) / solver.scale_of(br);
      result.max_span_residual = std::max(result.max_span_residual, residual);
      if (residual > tol) result.passed = false;
      result.spec.set_bracket(int(i), int(j), std::move(combo));
      ++result.pairs;
    }
  }

  // Registry adjoint pairs induce the dagger involution when the basis is
  // closed under daggering.
  bool closed_under_dagger = true;
  for (const auto& id : basis_ids) {
    if (result.spec.index_of(dagger_id(id)) < 0) closed_under_dagger = false;
  }
  if (closed_under_dagger) {
    for (const auto& id : basis_ids) {
      result.spec.set_involution_entry(result.spec.index_of(id),
                                       result.spec.index_of(dagger_id(id)), Scalar(1));
    }
  } else {
    result.notes.push_back("basis not closed under adjoints; involution omitted");
  }
  return result;
}

ClassificationReport classify_subalgebras(const GreenRep& rep, double tol) {
  const int M = rep.layout().parabosons;
  const int N = rep.layout().parafermions;
  auto id2 = [](const std::string& fam, int i, int j) {
    return fam + "_" + std::to_string(i) + "_" + std::to_string(j);
  };

  std::vector<std::string> bose_a, bose_f, odd;
  for (int k = 1; k <= M; ++k)
    for (int l = 1; l <= M; ++l) bose_a.push_back(id2("Ma", k, l));
  for (int k = 1; k <= M; ++k)
    for (int l = k; l <= M; ++l) {
      bose_a.push_back(id2("Ba", k, l));
      bose_a.push_back(id2("Badag", k, l));
    }
  for (int al = 1; al <= N; ++al)
    for (int be = 1; be <= N; ++be) bose_f.push_back(id2("Mf", al, be));
  for (int al = 1; al <= N; ++al)
    for (int be = al + 1; be <= N; ++be) {
      bose_f.push_back(id2("Bf", al, be));
      bose_f.push_back(id2("Bfdag", al, be));
    }
  for (int k = 1; k <= M; ++k)
    for (int al = 1; al <= N; ++al) {
      odd.push_back(id2("F", k, al));
      odd.push_back(id2("Fdag", k, al));
      odd.push_back(id2("Q", k, al));
      odd.push_back(id2("Qdag", k, al));
    }

  std::vector<std::string> stat_a = bose_a, stat_f = bose_f;
  for (int k = 1; k <= M; ++k) {
    stat_a.push_back("a_" + std::to_string(k));
    stat_a.push_back("adag_" + std::to_string(k));
  }
  for (int al = 1; al <= N; ++al) {
    stat_f.push_back("f_" + std::to_string(al));
    stat_f.push_back("fdag_" + std::to_string(al));
  }
  std::vector<std::string> all_bilinears = bose_a;
  all_bilinears.insert(all_bilinears.end(), bose_f.begin(), bose_f.end());
  all_bilinears.insert(all_bilinears.end(), odd.begin(), odd.end());

  ClassificationReport report;
  auto run = [&](const std::string& name, const std::vector<std::string>& ids) {
    SubalgebraResult entry;
    entry.name = name;
    entry.dimension = int(ids.size());
    if (ids.empty()) {
      entry.closed = true;
      report.entries.push_back(entry);
      return;
    }
    std::vector<SparseOperator> ops;
    for (const auto& id : ids) ops.push_back(rep.op(id));
    SpanSolver solver(rep, ids, 2 * max_word(ops));
    entry.closed = true;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = 0; j < ids.size(); ++j) {
        SparseOperator br = op_graded_bracket(ops[i], ops[j]);
        std::vector<Complex> coeff = solver.solve(br);
        double residual = solver.span_residual(br, coeff) / solver.scale_of(br);
        entry.max_residual = std::max(entry.max_residual, residual);
        if (residual > tol) entry.closed = false;
      }
    }
    report.entries.push_back(entry);
  };

  run("parabose_bilinears", bose_a);       // sp(2M,R), dim M(2M+1)
  run("parafermi_bilinears", bose_f);      // so(2N,R), dim N(2N-1)
  run("parabose_statistics", stat_a);      // osp(1|2M), dim M(2M+1) + 2M
  run("parafermi_statistics", stat_f);     // so(2N+1,R), dim N(2N+1)
  run("even_odd_bilinears", all_bilinears);
  for (const auto& entry : report.entries) report.passed = report.passed && entry.closed;
  return report;
}

SpectralReport supercharge_spectra(const GreenRep& rep, double psd_tol) {
  const int M = rep.layout().parabosons;
  const int N = rep.layout().parafermions;
  SpectralReport report;
  SparseOperator hq = SparseOperator::zero(rep.dim());
  SparseOperator hf = SparseOperator::zero(rep.dim());
  for (int k = 1; k <= M; ++k) {
    for (int al = 1; al <= N; ++al) {
      const auto& q = rep.bilinear("Q", k, al);
      const auto& qd = rep.bilinear("Qdag", k, al);
      const auto& f = rep.bilinear("F", k, al);
      const auto& fd = rep.bilinear("Fdag", k, al);
      hq = hq + op_bracket(q, qd, BracketKind::Anticommutator);
      hf = hf + op_bracket(f, fd, BracketKind::Anticommutator);
    }
  }
  if (M == 0 || N == 0) report.notes.push_back("no supercharges: one species is absent");
  hq.set_word_len(4);
  hf.set_word_len(4);

  auto safe = rep.safe_projector(4);
  if (safe.empty()) {
    throw resource_error("cutoff too small for supercharge spectra: need cutoff >= 4 (have " +
                         std::to_string(rep.layout().cutoff) + ")");
  }
  if (Index(safe.size()) > kEigensolveCap) {
    throw resource_error("safe subspace dimension " + std::to_string(safe.size()) +
                         " exceeds dense eigensolver cap " + std::to_string(kEigensolveCap));
  }
  report.dim = int(safe.size());
  report.hq_hermiticity = max_abs_diff(hq, hq.adjoint());
  report.hf_hermiticity = max_abs_diff(hf, hf.adjoint());

  auto eig_q = hermitian_eigenvalues(hq.dense_on(safe), int(safe.size()));
  auto eig_f = hermitian_eigenvalues(hf.dense_on(safe), int(safe.size()));
  report.hq_min = eig_q.front();
  report.hq_max = eig_q.back();
  report.hf_min = eig_f.front();
  report.hf_max = eig_f.back();
  double hq_norm = std::max(std::abs(report.hq_min), std::abs(report.hq_max));
  report.hq_psd = report.hq_min >= -psd_tol * std::max(hq_norm, 1.0);
  return report;
}

double bracket_identity_residual(int which, const SparseOperator& x, const SparseOperator& y,
                                 const SparseOperator& z) {
  const auto C = BracketKind::Commutator;
  const auto A = BracketKind::Anticommutator;
  auto term = [&](BracketKind outer, BracketKind inner, const SparseOperator& u,
                  const SparseOperator& v, const SparseOperator& w) {
    return op_bracket(u, op_bracket(v, w, inner), outer);
  };
  SparseOperator t1, t2, t3;
  double sign3 = 1.0;
  switch (which) {
    case 0:  // [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
      t1 = term(C, C, x, y, z);
      t2 = term(C, C, y, z, x);
      t3 = term(C, C, z, x, y);
      break;
    case 1:  // [x,{y,z}] + [y,{z,x}] + [z,{x,y}]
      t1 = term(C, A, x, y, z);
      t2 = term(C, A, y, z, x);
      t3 = term(C, A, z, x, y);
      break;
    case 2:  // [x,{y,z}] + {y,[z,x]} - {z,[x,y]}
      t1 = term(C, A, x, y, z);
      t2 = term(A, C, y, z, x);
      t3 = term(A, C, z, x, y);
      sign3 = -1.0;
      break;
    case 3:  // [x,[y,z]] + {y,{z,x}} - {z,{x,y}}
      t1 = term(C, C, x, y, z);
      t2 = term(A, A, y, z, x);
      t3 = term(A, A, z, x, y);
      sign3 = -1.0;
      break;
    default:
      throw structural_error("bracket identity index must be 0..3");
  }
  SparseOperator sum = t1 + t2 + t3.scaled(sign3);
  double scale = std::max({1.0, t1.max_abs(), t2.max_abs(), t3.max_abs()});
  return sum.max_abs() / scale;
}

double graded_jacobi_residual(const SparseOperator& x, const SparseOperator& y,
                              const SparseOperator& z) {
  auto eps = [](const SparseOperator& u, const SparseOperator& v) {
    return double(epsilon_sign(u.degree(), v.degree()));
  };
  SparseOperator t1 = op_graded_bracket(x, op_graded_bracket(y, z)).scaled(eps(x, z));
  SparseOperator t2 = op_graded_bracket(y, op_graded_bracket(z, x)).scaled(eps(y, x));
  SparseOperator t3 = op_graded_bracket(z, op_graded_bracket(x, y)).scaled(eps(z, y));
  SparseOperator sum = t1 + t2 + t3;
  double scale = std::max({1.0, t1.max_abs(), t2.max_abs(), t3.max_abs()});
  return sum.max_abs() / scale;
}

}  // namespace paralg

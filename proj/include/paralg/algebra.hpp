#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paralg/grading.hpp"
#include "paralg/scalar.hpp"

namespace paralg {

inline constexpr double kDefaultTol = 1e-9;

struct BasisElement {
  std::string name;
  Degree degree;
};

// Linear combination of basis elements, sorted by index, zero coefficients pruned.
using Combo = std::vector<std::pair<int, Scalar>>;

Combo combo_normalize(std::map<int, Scalar> accum, double tol = 0.0);
Combo combo_scale(const Combo& c, const Scalar& s);

// Antilinear involution given per basis ray: theta(e_i) = scalar_i * e_{target_i}.
struct Involution {
  // index -> (target index, scalar); -1 target means "not specified".
  std::vector<std::pair<int, Scalar>> images;
};

// Finite-dimensional Z_{2,2} graded algebra presented by structure constants:
// e_i o e_j = sum_k C_ij^k e_k. Missing pairs are zero. kind_overrides force a
// bracket kind for a degree pair, replacing the dot-product rule.
class AlgebraSpec {
 public:
  int add_element(const std::string& name, Degree degree);
  int index_of(const std::string& name) const;  // -1 when absent
  int require_index(const std::string& name) const;

  std::size_t size() const { return basis_.size(); }
  const BasisElement& element(int idx) const { return basis_.at(idx); }
  const std::vector<BasisElement>& basis() const { return basis_; }

  void set_bracket(int left, int right, Combo combo);
  // Sets (left, right) and fills (right, left) from the sign rule.
  void set_bracket_both(int left, int right, const Combo& combo);
  const Combo& bracket(int left, int right) const;
  bool has_bracket(int left, int right) const;
  const std::map<std::pair<int, int>, Combo>& table() const { return table_; }

  void set_kind_override(Degree a, Degree b, BracketKind k);
  const std::map<std::pair<Degree, Degree>, BracketKind>& kind_overrides() const {
    return kind_overrides_;
  }
  BracketKind kind(Degree a, Degree b) const;
  int epsilon(Degree a, Degree b) const { return epsilon_of(kind(a, b)); }

  void set_involution_entry(int idx, int target, const Scalar& s);
  bool has_involution() const { return involution_.has_value(); }
  const Involution& involution() const;

  bool exact() const;

  // Basis indices sorted lexicographically by (degree, name): the iteration
  // order of every checker and report.
  std::vector<int> canonical_order() const;

  std::vector<Degree> occupied_degrees() const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);

 private:
  std::vector<BasisElement> basis_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, Combo> table_;
  std::map<std::pair<Degree, Degree>, BracketKind> kind_overrides_;
  std::optional<Involution> involution_;
};

// Degree-preserving-by-contract linear map between specs; images expand each
// source basis element in the target basis (empty combo = zero).
struct LinearMap {
  AlgebraSpec source;
  AlgebraSpec target;
  std::vector<Combo> images;
};

struct Violation {
  std::string axiom;
  std::vector<int> indices;
  std::complex<double> residual{0.0, 0.0};
  std::string detail;
};

inline constexpr std::size_t kMaxViolationsPerAxiom = 100;

struct CheckReport {
  bool passed = true;
  std::vector<Violation> violations;  // capped at kMaxViolationsPerAxiom per axiom
  std::size_t violation_count = 0;    // uncapped total
  std::vector<std::string> notes;
  // check_jacobi only: degree-multiset class -> (triples checked, violating triples)
  std::map<std::string, std::pair<std::size_t, std::size_t>> jacobi_classes;

  void add(Violation v);
  void merge(const CheckReport& other);
};

CheckReport check_grading(const AlgebraSpec& spec);
CheckReport check_supersymmetrization(const AlgebraSpec& spec, double tol = kDefaultTol);
// Requires grading and supersymmetrization to hold; throws structural_error otherwise.
CheckReport check_jacobi(const AlgebraSpec& spec, double tol = kDefaultTol);
int count_jacobi_classes(const AlgebraSpec& spec);
CheckReport check_involution(const AlgebraSpec& spec, double tol = kDefaultTol);
CheckReport run_all_checks(const AlgebraSpec& spec, double tol = kDefaultTol);

CheckReport verify_homomorphism(const LinearMap& map, double tol = kDefaultTol);

std::pair<bool, int> subalgebra_closure(const AlgebraSpec& spec,
                                        const std::vector<std::string>& subset);

// Expands a bracket of two linear combinations through the structure constants.
Combo spec_bracket(const AlgebraSpec& spec, const Combo& u, const Combo& v);

}  // namespace paralg

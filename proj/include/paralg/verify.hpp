#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paralg/algebra.hpp"
#include "paralg/fock.hpp"
#include "paralg/relations.hpp"

namespace paralg {

struct InstanceResult {
  std::vector<std::pair<std::string, int>> assignment;
  double abs_residual = 0.0;
  double scale = 1.0;
  Index worst_row = -1;
  Index worst_col = -1;
};

struct RelationResult {
  std::string relation;
  std::size_t instances = 0;
  double max_abs = 0.0;
  double max_rel = 0.0;
  InstanceResult worst;
  bool passed = true;
};

struct ResidualReport {
  std::string set_name;
  double tol = kDefaultTol;
  bool passed = true;
  double max_rel_residual = 0.0;
  std::size_t instances_total = 0;
  std::vector<RelationResult> relations;
};

// Evaluates every index assignment of the relation on the representation,
// restricted to the safe subspace for the relation's word length. Throws
// resource_error naming the required cutoff when that subspace is empty.
ResidualReport eval_relation(const GreenRep& rep, const RelationExpr& rel,
                             double tol = kDefaultTol, int workers = 1);
ResidualReport run_relation_set(const GreenRep& rep, const RelationSet& set,
                                double tol = kDefaultTol, int workers = 1);

// The 12 trilinear families and their Hermitian conjugates.
ResidualReport suite_eq12(const GreenRep& rep, double tol = kDefaultTol, int workers = 1);
// The rewritten mixed relations and the closed bilinear algebra (and conjugates).
ResidualReport suite_closure(const GreenRep& rep, double tol = kDefaultTol, int workers = 1);
// Canonical Bose/Fermi relations; only meaningful at order 1 (guarded).
ResidualReport reduction_check_p1(const GreenRep& rep, double tol = kDefaultTol, int workers = 1);

struct ExtractionResult {
  AlgebraSpec spec;
  bool passed = true;
  double max_span_residual = 0.0;
  double max_lattice_distance = 0.0;
  std::size_t pairs = 0;
  std::vector<std::string> notes;
};

// Computes the graded bracket of every ordered pair of the named operators and
// solves the least-squares expansion in that operator basis over safe matrix
// elements. Coefficients must land on the (1/2)Z[i] lattice; the returned spec
// carries them exactly, ready for the algebra checkers.
ExtractionResult extract_structure_constants(const GreenRep& rep,
                                             const std::vector<std::string>& basis_ids,
                                             double tol = 1e-8);

struct SubalgebraResult {
  std::string name;
  int dimension = 0;
  bool closed = false;
  double max_residual = 0.0;
};

struct ClassificationReport {
  std::vector<SubalgebraResult> entries;
  bool passed = true;
};

// Closure and dimension of the dynamical-symmetry subsets: pure parabose and
// parafermi bilinears, the two statistics algebras with generators adjoined,
// and the full even/odd bilinear system.
ClassificationReport classify_subalgebras(const GreenRep& rep, double tol = 1e-8);

struct SpectralReport {
  int dim = 0;
  double hq_min = 0.0, hq_max = 0.0;
  double hf_min = 0.0, hf_max = 0.0;
  double hq_hermiticity = 0.0, hf_hermiticity = 0.0;
  bool hq_psd = true;
  std::vector<std::string> notes;
};

inline constexpr Index kEigensolveCap = 4096;

// Spectra of H_Q = sum {Q, Qdag} and H_F = sum {F, Fdag} on the safe
// subspace. Asserts nothing about H_F; reports whether H_Q is positive
// semidefinite within -psd_tol * ||H||.
SpectralReport supercharge_spectra(const GreenRep& rep, double psd_tol = 1e-10);

// Residual of one of the four double-bracket identities (index 0..3) for
// arbitrary equal-dimension operators; exact zero up to rounding.
double bracket_identity_residual(int which, const SparseOperator& x, const SparseOperator& y,
                                 const SparseOperator& z);
// Residual of the generalized Jacobi identity under the graded product rule,
// with signs and bracket kinds taken from the operands' degree tags. Relative
// to the magnitude of the individual terms.
double graded_jacobi_residual(const SparseOperator& x, const SparseOperator& y,
                              const SparseOperator& z);

}  // namespace paralg

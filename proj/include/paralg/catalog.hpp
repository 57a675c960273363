#pragma once

#include <array>
#include <string>
#include <vector>

#include "paralg/algebra.hpp"

namespace paralg {

struct SU11ExtensionParams {
  Scalar lambda1;
  Scalar lambda2;
  Scalar lambda3;
};

// The bracket displays for the su(1,1) extension write {Q_a, a_m} as an
// anticommutator while the degree dot product assigns that pair a commutator.
// Both readings are constructible; the Jacobi checker decides between them.
enum class QaBracketConvention {
  DotRule,                  // commutator for the ((0,1),(1,0)) pair, no overrides
  DisplayedAnticommutator,  // kind override forcing the anticommutator
};

// 2x2 Pauli matrices and the identity with exact Gaussian-rational entries.
struct PauliConstants {
  using Mat2 = std::array<std::array<GaussianRational, 2>, 2>;
  Mat2 sigma1, sigma2, sigma3, identity;
};
const PauliConstants& pauli_constants();

// 8-element Z_{2,2} extension of su(1,1): tau1..tau3 in L00, Q1,Q2 in L01,
// a1,a2 in L10, f in L11.
AlgebraSpec build_su11_extension(const SU11ExtensionParams& params,
                                 QaBracketConvention convention = QaBracketConvention::DotRule);

// Single-mode paraboson algebra {M(a), B, Bdag, a, adag} with involution.
AlgebraSpec build_paraboson_algebra();

// The specialization lambda = (-i, 0, 2) mapped onto the paraboson algebra;
// the Q sector and f map to zero.
LinearMap build_su11_to_paraboson_map();

// Abstract para-Lie superalgebra of M paraboson and N parafermion modes:
// generators, the ten bilinear families, and the full structure-constant
// table with Hermitian-conjugate relations, plus the dagger involution.
AlgebraSpec build_para_lie_super(int bosons, int fermions);

// Basis names of build_para_lie_super in construction order; also the operator
// ids the Green-representation registry exposes.
std::vector<std::string> para_lie_super_basis_names(int bosons, int fermions);

struct DegreeAssignment {
  Degree gen_boson;     // a_k sector
  Degree gen_fermion;   // f_alpha sector
  Degree odd_bilinear;  // F/Q sector
  Degree even_bilinear; // M/B sector
};

// Exhaustively enumerates degree assignments of the four operator sectors and
// keeps those consistent with every displayed bracket kind and the grading
// closure. Exactly two mirror assignments survive; the first (a in L10) is
// the one the builders use.
std::vector<DegreeAssignment> consistent_degree_assignments();

std::vector<std::string> catalog_ids();
bool parse_para_lie_super_id(const std::string& id, int* bosons, int* fermions);

}  // namespace paralg

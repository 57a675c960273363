#pragma once

#include <string>
#include <vector>

#include "paralg/grading.hpp"
#include "paralg/scalar.hpp"

namespace paralg {

// Bracket word over registry operator ids. A node carries an explicit bracket
// kind and exactly two children; a leaf names an operator family with symbolic
// indices ("a" with ["k"], "Ma" with ["k","l"], or the special ids "one" and
// "pool").
struct RelationTree {
  std::string gen;
  std::vector<std::string> indices;
  BracketKind kind = BracketKind::Commutator;
  std::vector<RelationTree> children;  // empty for leaves, two otherwise

  bool is_leaf() const { return children.empty(); }

  static RelationTree leaf(std::string gen, std::vector<std::string> indices = {});
  static RelationTree bracket(BracketKind kind, RelationTree left, RelationTree right);
};

struct LhsTerm {
  Scalar coeff;
  RelationTree tree;
};

// coeff * prod(delta_{i,j}) * gen(indices); "one" as gen is the identity.
struct RhsTerm {
  Scalar coeff;
  std::vector<std::pair<std::string, std::string>> deltas;
  std::string gen;
  std::vector<std::string> indices;
};

struct RelationExpr {
  std::string name;
  std::vector<LhsTerm> lhs;
  std::vector<RhsTerm> rhs;
  // Symbol ranges, in instantiation order; each symbol runs 1..count.
  std::vector<std::pair<std::string, int>> ranges;
};

struct RelationSet {
  std::string name;
  std::vector<RelationExpr> relations;
};

// Word length of the longest lhs term (generators count 1, bilinears 2).
int relation_word_len(const RelationExpr& rel);

// Mechanical adjoint: dagger each leaf, reverse bracket operands, conjugate
// coefficients. M-type bilinears dagger into themselves with swapped indices.
RelationExpr hermitian_conjugate(const RelationExpr& rel);

// Built-in sets, instantiated for a representation with M boson and N fermion
// modes: "eq11", "eq12", "eq14", "closure15_19", "closure" (eq14 + closure15_19),
// "canonical_p1", "jacobi8". Names listed by builtin_set_names().
RelationSet builtin_relation_set(const std::string& name, int bosons, int fermions);
std::vector<std::string> builtin_set_names();

}  // namespace paralg

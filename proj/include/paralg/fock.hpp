#pragma once

#include <map>
#include <string>
#include <vector>

#include "paralg/sparse.hpp"

namespace paralg {

// One tensor-product factor: a Green-index copy of a boson or fermion mode.
struct Site {
  int green;      // 0-based Green index
  bool fermion;
  int mode;       // 0-based mode within its species
  Index local_dim;
};

// Layout of the truncated Fock space for M paraboson and N parafermion modes
// of order p. Sites are Green-index-major, bosons before fermions within each
// index; basis enumeration is mixed-radix little-endian over that order, so
// the vacuum is index 0.
struct ModeLayout {
  int parabosons = 0;   // M
  int parafermions = 0; // N
  int order = 1;        // p
  int cutoff = 4;       // per-boson-factor occupancy cap

  void validate() const;  // throws structural_error / resource_error
  Index hilbert_dim() const;
  std::vector<Site> sites() const;
};

// Dimension cap for representation builds: 2^20 unless the PARALG_MAX_DIM
// environment variable overrides it.
Index dimension_cap();

// Green-ansatz matrix representation: generator registry (a_k, adag_k, f_a,
// fdag_a), the ten bilinear families of all index combinations, and the
// vacuum. Immutable after construction.
class GreenRep {
 public:
  const ModeLayout& layout() const { return layout_; }
  Index dim() const { return dim_; }
  Index vacuum() const { return 0; }

  // Resolvable ids: "one", generators like "a_1", bilinears like "Ma_1_2".
  const SparseOperator& op(const std::string& name) const;
  bool has_op(const std::string& name) const;
  const SparseOperator& generator(const std::string& name) const { return op(name); }
  const SparseOperator& bilinear(const std::string& family, int i, int j) const;

  const std::map<std::string, SparseOperator>& generators() const { return generators_; }
  const std::map<std::string, SparseOperator>& bilinears() const { return bilinears_; }

  // Basis states whose boson-site occupancies all stay at or below
  // cutoff - word_len; matrix elements of any word of that length between two
  // such states are unaffected by the truncation. Empty when cutoff < word_len.
  std::vector<Index> safe_projector(int word_len) const;

  friend GreenRep build_green_rep(const ModeLayout& layout);
  // Rebuild from imported generators; bilinears are recomputed.
  friend GreenRep assemble_green_rep(const ModeLayout& layout,
                                     std::map<std::string, SparseOperator> generators);

 private:
  void build_bilinears();

  ModeLayout layout_;
  Index dim_ = 0;
  std::map<std::string, SparseOperator> generators_;
  std::map<std::string, SparseOperator> bilinears_;
  SparseOperator one_;
};

GreenRep build_green_rep(const ModeLayout& layout);
GreenRep assemble_green_rep(const ModeLayout& layout,
                            std::map<std::string, SparseOperator> generators);

// Checks the mixed-sign convention against a few defining trilinear relations
// on a small two-Green-index system; throws structural_error on failure.
// Debug builds run this once before the first representation is assembled.
void validate_green_convention();

}  // namespace paralg

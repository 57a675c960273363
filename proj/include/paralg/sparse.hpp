#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "paralg/grading.hpp"

namespace paralg {

using Index = std::int64_t;
using Complex = std::complex<double>;

// Entries with magnitude below this are dropped on construction and after
// every arithmetic operation.
inline constexpr double kSparseDropTol = 1e-15;

struct Triplet {
  Index row;
  Index col;
  Complex value;
};

// Immutable complex sparse matrix in CSR form, tagged with the Z_{2,2} degree
// of the operator it represents and the maximal number of single-particle
// generator factors in any of its terms (word length).
class SparseOperator {
 public:
  SparseOperator() = default;
  static SparseOperator zero(Index dim, Degree degree = {0, 0}, int word_len = 0);
  static SparseOperator identity(Index dim);
  static SparseOperator from_triplets(Index dim, Degree degree, int word_len,
                                      std::vector<Triplet> triplets);

  Index dim() const { return dim_; }
  Degree degree() const { return degree_; }
  int word_len() const { return word_len_; }
  std::size_t nnz() const { return col_.size(); }
  bool is_zero() const { return col_.empty(); }

  SparseOperator adjoint() const;
  SparseOperator scaled(Complex factor) const;

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

  // y = A x for a dense vector x.
  std::vector<Complex> apply(const std::vector<Complex>& x) const;

  double max_abs() const;
  // Largest |entry| over rows and columns restricted to the given sorted
  // index subset; also reports where it occurs.
  double max_abs_on(const std::vector<Index>& subset, Index* worst_row = nullptr,
                    Index* worst_col = nullptr) const;

  // Dense row-major principal submatrix on the given sorted index subset.
  std::vector<Complex> dense_on(const std::vector<Index>& subset) const;

  struct RowView {
    const Index* cols = nullptr;
    const Complex* vals = nullptr;
    std::size_t count = 0;
  };
  RowView row(Index r) const;

  // Largest |entry| over columns selected by the mask, any row.
  double max_abs_cols_masked(const std::vector<char>& col_mask) const;

  // Largest entrywise difference |A - B|.
  friend double max_abs_diff(const SparseOperator& a, const SparseOperator& b);

  std::vector<Triplet> triplets() const;  // sorted by (row, col)

  void set_degree(Degree d) { degree_ = d; }
  void set_word_len(int w) { word_len_ = w; }

 private:
  Index dim_ = 0;
  Degree degree_{0, 0};
  int word_len_ = 0;
  std::vector<Index> row_ptr_;  // size dim_+1
  std::vector<Index> col_;
  std::vector<Complex> val_;
};

// Graded product rule: xy - yx or xy + yx. Result degree is the degree sum,
// word length is the sum of word lengths.
SparseOperator op_bracket(const SparseOperator& x, const SparseOperator& y, BracketKind kind);
// Kind selected from the operand degrees.
SparseOperator op_graded_bracket(const SparseOperator& x, const SparseOperator& y);

}  // namespace paralg

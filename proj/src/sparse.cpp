#include "paralg/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "paralg/errors.hpp"

namespace paralg {

SparseOperator SparseOperator::zero(Index dim, Degree degree, int word_len) {
  SparseOperator op;
  op.dim_ = dim;
  op.degree_ = degree;
  op.word_len_ = word_len;
  op.row_ptr_.assign(dim + 1, 0);
  return op;
}

SparseOperator SparseOperator::identity(Index dim) {
  std::vector<Triplet> t;
  t.reserve(dim);
  for (Index i = 0; i < dim; ++i) t.push_back({i, i, {1.0, 0.0}});
  return from_triplets(dim, {0, 0}, 0, std::move(t));
}

SparseOperator SparseOperator::from_triplets(Index dim, Degree degree, int word_len,
                                             std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row < 0 || t.row >= dim || t.col < 0 || t.col >= dim)
      throw structural_error("sparse triplet index out of range");
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseOperator op;
  op.dim_ = dim;
  op.degree_ = degree;
  op.word_len_ = word_len;
  op.row_ptr_.assign(dim + 1, 0);
  std::size_t n = 0;
  while (n < triplets.size()) {
    std::size_t m = n;
    Complex sum = 0.0;
    while (m < triplets.size() && triplets[m].row == triplets[n].row &&
           triplets[m].col == triplets[n].col) {
      sum += triplets[m].value;
      ++m;
    }
    if (std::abs(sum) >= kSparseDropTol) {
      op.col_.push_back(triplets[n].col);
      op.val_.push_back(sum);
      ++op.row_ptr_[triplets[n].row + 1];
    }
    n = m;
  }
  for (Index r = 0; r < dim; ++r) op.row_ptr_[r + 1] += op.row_ptr_[r];
  return op;
}

SparseOperator SparseOperator::adjoint() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (Index r = 0; r < dim_; ++r) {
    for (Index n = row_ptr_[r]; n < row_ptr_[r + 1]; ++n) {
      t.push_back({col_[n], r, std::conj(val_[n])});
    }
  }
  return from_triplets(dim_, degree_, word_len_, std::move(t));
}

SparseOperator SparseOperator::scaled(Complex factor) const {
  SparseOperator op = *this;
  for (auto& v : op.val_) v *= factor;
  if (std::abs(factor) < kSparseDropTol) return zero(dim_, degree_, word_len_);
  return op;
}

namespace {

SparseOperator add_impl(const SparseOperator& a, const SparseOperator& b, double sign) {
  if (a.dim() != b.dim()) throw structural_error("sparse dimension mismatch in add");
  auto ta = a.triplets();
  for (const auto& t : b.triplets()) ta.push_back({t.row, t.col, sign * t.value});
  Degree d = a.is_zero() ? b.degree() : a.degree();
  int w = std::max(a.word_len(), b.word_len());
  return SparseOperator::from_triplets(a.dim(), d, w, std::move(ta));
}

}  // namespace

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  return add_impl(a, b, 1.0);
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  return add_impl(a, b, -1.0);
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim_ != b.dim_) throw structural_error("sparse dimension mismatch in multiply");
  const Index dim = a.dim_;
  SparseOperator out;
  out.dim_ = dim;
  out.degree_ = degree_add(a.degree_, b.degree_);
  out.word_len_ = a.word_len_ + b.word_len_;
  out.row_ptr_.assign(dim + 1, 0);

  std::vector<Complex> scratch(dim, Complex{0.0, 0.0});
  std::vector<Index> touched;
  for (Index r = 0; r < dim; ++r) {
    touched.clear();
    for (Index n = a.row_ptr_[r]; n < a.row_ptr_[r + 1]; ++n) {
      const Index k = a.col_[n];
      const Complex av = a.val_[n];
      for (Index m = b.row_ptr_[k]; m < b.row_ptr_[k + 1]; ++m) {
        const Index c = b.col_[m];
        if (scratch[c] == Complex{0.0, 0.0}) touched.push_back(c);
        scratch[c] += av * b.val_[m];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Index c : touched) {
      if (std::abs(scratch[c]) >= kSparseDropTol) {
        out.col_.push_back(c);
        out.val_.push_back(scratch[c]);
        ++out.row_ptr_[r + 1];
      }
      scratch[c] = {0.0, 0.0};
    }
  }
  for (Index r = 0; r < dim; ++r) out.row_ptr_[r + 1] += out.row_ptr_[r];
  return out;
}

std::vector<Complex> SparseOperator::apply(const std::vector<Complex>& x) const {
  if (Index(x.size()) != dim_) throw structural_error("vector dimension mismatch in apply");
  std::vector<Complex> y(dim_, Complex{0.0, 0.0});
  for (Index r = 0; r < dim_; ++r) {
    for (Index n = row_ptr_[r]; n < row_ptr_[r + 1]; ++n) y[r] += val_[n] * x[col_[n]];
  }
  return y;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& v : val_) m = std::max(m, std::abs(v));
  return m;
}

double SparseOperator::max_abs_on(const std::vector<Index>& subset, Index* worst_row,
                                  Index* worst_col) const {
  std::vector<char> in(dim_, 0);
  for (Index i : subset) in[i] = 1;
  double m = 0.0;
  for (Index r = 0; r < dim_; ++r) {
    if (!in[r]) continue;
    for (Index n = row_ptr_[r]; n < row_ptr_[r + 1]; ++n) {
      if (!in[col_[n]]) continue;
      double a = std::abs(val_[n]);
      if (a > m) {
        m = a;
        if (worst_row) *worst_row = r;
        if (worst_col) *worst_col = col_[n];
      }
    }
  }
  return m;
}

std::vector<Complex> SparseOperator::dense_on(const std::vector<Index>& subset) const {
  const std::size_t n = subset.size();
  std::vector<Index> pos(dim_, -1);
  for (std::size_t i = 0; i < n; ++i) pos[subset[i]] = Index(i);
  std::vector<Complex> dense(n * n, Complex{0.0, 0.0});
  for (Index r = 0; r < dim_; ++r) {
    if (pos[r] < 0) continue;
    for (Index m = row_ptr_[r]; m < row_ptr_[r + 1]; ++m) {
      if (pos[col_[m]] < 0) continue;
      dense[std::size_t(pos[r]) * n + std::size_t(pos[col_[m]])] = val_[m];
    }
  }
  return dense;
}

SparseOperator::RowView SparseOperator::row(Index r) const {
  RowView view;
  if (r < 0 || r >= dim_) throw structural_error("row index out of range");
  Index begin = row_ptr_[r];
  view.cols = col_.data() + begin;
  view.vals = val_.data() + begin;
  view.count = std::size_t(row_ptr_[r + 1] - begin);
  return view;
}

double SparseOperator::max_abs_cols_masked(const std::vector<char>& col_mask) const {
  double m = 0.0;
  for (std::size_t n = 0; n < col_.size(); ++n) {
    if (col_mask[col_[n]]) m = std::max(m, std::abs(val_[n]));
  }
  return m;
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator d = a - b;
  return d.max_abs();
}

std::vector<Triplet> SparseOperator::triplets() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (Index r = 0; r < dim_; ++r) {
    for (Index n = row_ptr_[r]; n < row_ptr_[r + 1]; ++n) t.push_back({r, col_[n], val_[n]});
  }
  return t;
}

SparseOperator op_bracket(const SparseOperator& x, const SparseOperator& y, BracketKind kind) {
  SparseOperator xy = x * y;
  SparseOperator yx = y * x;
  SparseOperator out = kind == BracketKind::Commutator ? xy - yx : xy + yx;
  out.set_degree(degree_add(x.degree(), y.degree()));
  out.set_word_len(x.word_len() + y.word_len());
  return out;
}

SparseOperator op_graded_bracket(const SparseOperator& x, const SparseOperator& y) {
  return op_bracket(x, y, bracket_kind(x.degree(), y.degree()));
}

}  // namespace paralg

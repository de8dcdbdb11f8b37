#ifndef IDO_MATRIX_HPP
#define IDO_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "ido/gauss_rational.hpp"

namespace ido {

/// Dense matrix over the Gaussian rationals. All arithmetic is exact.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = GaussRational(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussRational& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const GaussRational& operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  GaussRational trace() const {
    GaussRational t;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    require_same_shape(a, b);
    Mat m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    require_same_shape(a, b);
    Mat m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
      for (int k = 0; k < a.cols_; ++k) {
        const GaussRational& x = a(r, k);
        if (x.is_zero()) continue;
        for (int c = 0; c < b.cols_; ++c) {
          if (b(k, c).is_zero()) continue;
          m(r, c) += x * b(k, c);
        }
      }
    return m;
  }
  friend Mat operator*(const GaussRational& s, const Mat& a) {
    Mat m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = s * a.a_[i];
    return m;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::vector<GaussRational> apply(const std::vector<GaussRational>& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<GaussRational> out(rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  static void require_same_shape(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<GaussRational> a_;
};

/// In-place reduced row echelon form; returns pivot column indices.
/// Pivot choice is the first nonzero entry scanning down each column, so the
/// result is deterministic.
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pr, c));
    GaussRational inv = GaussRational(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) = inv * m(row, c);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussRational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the null space, returned as the rows of a reduced echelon matrix
/// (leading coefficient 1, zeros above and below every pivot).
inline std::vector<std::vector<GaussRational>> kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<std::vector<GaussRational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussRational> v(m.cols());
    v[f] = GaussRational(1);
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(int(row), f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;

  Mat b(int(basis.size()), m.cols());
  for (int i = 0; i < b.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) b(i, c) = basis[std::size_t(i)][c];
  rref(b);
  for (int i = 0; i < b.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) basis[std::size_t(i)][c] = b(i, c);
  return basis;
}

inline Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = GaussRational(1);
  }
  std::vector<int> pivots = rref(aug);
  if (int(pivots.size()) != n) throw std::domain_error("singular matrix");
  Mat inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

/// Solves sum_j x_j * cols[j] = target exactly. Returns nullopt when the
/// target lies outside the column span; throws if the columns are dependent.
inline std::optional<std::vector<GaussRational>> solve_in_span(
    const std::vector<std::vector<GaussRational>>& cols,
    const std::vector<GaussRational>& target) {
  if (cols.empty()) throw std::invalid_argument("solve_in_span: no columns");
  int rows = int(target.size());
  int n = int(cols.size());
  Mat aug(rows, n + 1);
  for (int c = 0; c < n; ++c) {
    if (int(cols[std::size_t(c)].size()) != rows)
      throw std::invalid_argument("solve_in_span: column length mismatch");
    for (int r = 0; r < rows; ++r) aug(r, c) = cols[std::size_t(c)][std::size_t(r)];
  }
  for (int r = 0; r < rows; ++r) aug(r, n) = target[std::size_t(r)];
  std::vector<int> pivots = rref(aug);
  bool target_pivot = !pivots.empty() && pivots.back() == n;
  int rank = int(pivots.size()) - (target_pivot ? 1 : 0);
  if (rank != n) throw std::invalid_argument("solve_in_span: dependent columns");
  if (target_pivot) return std::nullopt;
  std::vector<GaussRational> x(static_cast<std::size_t>(n));
  for (int r = 0; r < rank; ++r) x[std::size_t(pivots[std::size_t(r)])] = aug(r, n);
  return x;
}

}  // namespace ido

#endif

#ifndef WREP_MATRIX_HPP
#define WREP_MATRIX_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "wrep/laurent.hpp"

namespace wrep {

// ring adapters shared by the exact and the numeric lane
inline Laurent ring_zero_like(const Laurent& s) { return Laurent::constant(s.vars(), CycRat(0)); }
inline Laurent ring_one_like(const Laurent& s) { return Laurent::constant(s.vars(), CycRat(1)); }
inline CD ring_zero_like(const CD&) { return CD(0, 0); }
inline CD ring_one_like(const CD&) { return CD(1, 0); }

inline bool scalar_is_zero(const Laurent& s, double /*eps*/) { return s.is_zero(); }
inline bool scalar_is_zero(const CD& s, double eps) { return std::abs(s) <= eps; }
inline double scalar_abs(const CD& s) { return std::abs(s); }

// Dense row-major matrix over one scalar ring.  Values are immutable in
// practice: every operation returns a fresh matrix.
template <class S>
class Mat {
 public:
  Mat(int rows, int cols, const S& fill) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 1 || cols < 1) throw ShapeMismatch("matrix dimensions must be positive");
  }

  static Mat identity(int n, const S& one) {
    Mat m(n, n, ring_zero_like(one));
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  const S& proto() const { return e_[0]; }

  friend Mat operator+(const Mat& a, const Mat& b) {
    check_same_shape(a, b);
    Mat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    check_same_shape(a, b);
    Mat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_, ring_zero_like(a.e_[0]));
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }

  Mat scaled(const S& c) const {
    Mat r = *this;
    for (auto& v : r.e_) v = v * c;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_, ring_zero_like(e_[0]));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat pow(long k) const {
    if (!square()) throw NotSquare("matrix power of non-square matrix");
    Mat acc = identity(rows_, ring_one_like(e_[0]));
    Mat base = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) acc = acc * base;
      base = base * base;
    }
    return acc;
  }

 private:
  int rows_, cols_;
  std::vector<S> e_;

  static void check_same_shape(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix shape mismatch");
  }
};

using LMat = Mat<Laurent>;
using CMat = Mat<CD>;

// entrywise max deviation; the numeric ring's equality measure
double max_abs_diff(const CMat& a, const CMat& b);
double max_abs(const CMat& a);
CMat to_complex(const LMat& a);

// determinant: fraction-free Bareiss elimination (exact ring)
Laurent det(const LMat& a);
// determinant: partial-pivot LU (numeric ring)
CD det(const CMat& a);

// exact inverse via adjugate over det; det must be a unit of the ring
LMat inverse(const LMat& a);
// numeric inverse via Gauss-Jordan with partial pivoting
CMat inverse(const CMat& a, double eps = 1e-12);

// Field-level elimination.  The exact versions require an evaluated ring
// (no free variables); symbolic input is rejected.
void require_field(const LMat& a);

std::vector<LMat> kernel_basis(const LMat& a);
std::vector<CMat> kernel_basis(const CMat& a, double eps);
int rank(const LMat& a);
int rank(const CMat& a, double eps);

template <class S>
struct SolveResult {
  bool solvable = false;
  std::optional<Mat<S>> particular;  // one solution of A x = b
  std::vector<Mat<S>> kernel;        // basis of the homogeneous solutions
};

SolveResult<Laurent> solve_linear(const LMat& a, const LMat& b);
SolveResult<CD> solve_linear(const CMat& a, const CMat& b, double eps);

// stacks matrices vertically (equal column counts)
template <class S>
Mat<S> vstack(const std::vector<Mat<S>>& blocks) {
  if (blocks.empty()) throw ShapeMismatch("vstack of nothing");
  int cols = blocks[0].cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeMismatch("vstack column mismatch");
    rows += b.rows();
  }
  Mat<S> r(rows, cols, ring_zero_like(blocks[0].proto()));
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < cols; ++j) r(off + i, j) = b(i, j);
    off += b.rows();
  }
  return r;
}

template <class S>
Mat<S> hstack(const std::vector<Mat<S>>& blocks) {
  if (blocks.empty()) throw ShapeMismatch("hstack of nothing");
  int rows = blocks[0].rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw ShapeMismatch("hstack row mismatch");
    cols += b.cols();
  }
  Mat<S> r(rows, cols, ring_zero_like(blocks[0].proto()));
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < b.cols(); ++j) r(i, off + j) = b(i, j);
    off += b.cols();
  }
  return r;
}

}  // namespace wrep

#endif

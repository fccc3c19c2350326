#include "wrep/matrix.hpp"

#include <algorithm>
#include <type_traits>

namespace wrep {

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("max_abs_diff shape mismatch");
  double m = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double max_abs(const CMat& a) {
  double m = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

CMat to_complex(const LMat& a) {
  CMat r(a.rows(), a.cols(), CD(0, 0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).to_complex();
  return r;
}

Laurent det(const LMat& a) {
  if (!a.square()) throw NotSquare("det of non-square matrix");
  const int n = a.rows();
  LMat m = a;
  Laurent prev = ring_one_like(a.proto());
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) { r = i; break; }
      if (r < 0) return ring_zero_like(a.proto());
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m(i, j) = Laurent::div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = ring_zero_like(a.proto());
    }
    prev = m(k, k);
  }
  Laurent d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

CD det(const CMat& a) {
  if (!a.square()) throw NotSquare("det of non-square matrix");
  const int n = a.rows();
  CMat m = a;
  CD d(1, 0);
  for (int k = 0; k < n; ++k) {
    int best = k;
    double mag = std::abs(m(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > mag) { mag = std::abs(m(i, k)); best = i; }
    if (mag == 0.0) return CD(0, 0);
    if (best != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(best, j));
      d = -d;
    }
    d *= m(k, k);
    for (int i = k + 1; i < n; ++i) {
      CD f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

namespace {

Laurent minor_det(const LMat& a, int skip_row, int skip_col) {
  const int n = a.rows();
  if (n == 1) return ring_one_like(a.proto());
  LMat sub(n - 1, n - 1, ring_zero_like(a.proto()));
  for (int i = 0, si = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (int j = 0, sj = 0; j < n; ++j) {
      if (j == skip_col) continue;
      sub(si, sj) = a(i, j);
      ++sj;
    }
    ++si;
  }
  return det(sub);
}

}  // namespace

LMat inverse(const LMat& a) {
  if (!a.square()) throw NotSquare("inverse of non-square matrix");
  Laurent d = det(a);
  if (d.is_zero()) throw Singular("matrix is singular");
  if (!d.is_monomial())
    throw NonUnitDeterminant("determinant is not a unit of the Laurent ring");
  const int n = a.rows();
  Laurent dinv = d.inverse();
  LMat r(n, n, ring_zero_like(a.proto()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Laurent c = minor_det(a, i, j) * dinv;
      r(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  return r;
}

CMat inverse(const CMat& a, double eps) {
  if (!a.square()) throw NotSquare("inverse of non-square matrix");
  const int n = a.rows();
  double scale = std::max(1.0, max_abs(a));
  CMat m = a;
  CMat r = CMat::identity(n, CD(1, 0));
  for (int k = 0; k < n; ++k) {
    int best = k;
    double mag = std::abs(m(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > mag) { mag = std::abs(m(i, k)); best = i; }
    if (mag <= eps * scale) throw Singular("matrix is numerically singular");
    if (best != k)
      for (int j = 0; j < n; ++j) {
        std::swap(m(k, j), m(best, j));
        std::swap(r(k, j), r(best, j));
      }
    CD p = m(k, k);
    for (int j = 0; j < n; ++j) {
      m(k, j) /= p;
      r(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      CD f = m(i, k);
      if (f == CD(0, 0)) continue;
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        r(i, j) -= f * r(k, j);
      }
    }
  }
  return r;
}

void require_field(const LMat& a) {
  if (!a.proto().vars().empty())
    throw SymbolicInput("operation needs an evaluated ring; specialize first");
}

namespace {

// reduced row echelon form; returns pivot columns.  For the numeric ring the
// rows are pre-normalized by their max entry, so a pivot below eps counts as
// zero (scale-aware threshold).
template <class S>
std::vector<int> rref(Mat<S>& m, double eps) {
  const int R = m.rows(), C = m.cols();
  if constexpr (std::is_same_v<S, CD>) {
    for (int i = 0; i < R; ++i) {
      double norm = 0;
      for (int j = 0; j < C; ++j) norm = std::max(norm, std::abs(m(i, j)));
      if (norm > 0)
        for (int j = 0; j < C; ++j) m(i, j) /= norm;
    }
  }
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    int best = -1;
    if constexpr (std::is_same_v<S, CD>) {
      double mag = eps;
      for (int i = row; i < R; ++i)
        if (std::abs(m(i, col)) > mag) { mag = std::abs(m(i, col)); best = i; }
    } else {
      for (int i = row; i < R; ++i)
        if (!m(i, col).is_zero()) { best = i; break; }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < C; ++j) std::swap(m(row, j), m(best, j));
    S p = m(row, col);
    for (int j = col; j < C; ++j) m(row, j) = m(row, j) / p;
    for (int i = 0; i < R; ++i) {
      if (i == row) continue;
      S f = m(i, col);
      if (scalar_is_zero(f, 0.0)) continue;
      for (int j = col; j < C; ++j) m(i, j) = m(i, j) - f * m(row, j);
      m(i, col) = ring_zero_like(m.proto());
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
std::vector<Mat<S>> kernel_from_rref(const Mat<S>& m, const std::vector<int>& pivots) {
  const int C = m.cols();
  std::vector<char> is_pivot(C, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Mat<S>> basis;
  const S zero = ring_zero_like(m.proto());
  const S one = ring_one_like(m.proto());
  for (int free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    Mat<S> v(C, 1, zero);
    v(free, 0) = one;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v(pivots[r], 0) = zero - m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<LMat> kernel_basis(const LMat& a) {
  require_field(a);
  LMat m = a;
  auto pivots = rref(m, 0.0);
  return kernel_from_rref(m, pivots);
}

std::vector<CMat> kernel_basis(const CMat& a, double eps) {
  CMat m = a;
  auto pivots = rref(m, eps);
  return kernel_from_rref(m, pivots);
}

int rank(const LMat& a) {
  require_field(a);
  LMat m = a;
  return static_cast<int>(rref(m, 0.0).size());
}

int rank(const CMat& a, double eps) {
  CMat m = a;
  return static_cast<int>(rref(m, eps).size());
}

namespace {

template <class S>
SolveResult<S> solve_impl(const Mat<S>& a, const Mat<S>& b, double eps) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve_linear shape mismatch");
  Mat<S> aug = hstack<S>({a, b});
  auto pivots = rref(aug, eps);
  SolveResult<S> res;
  for (int c : pivots)
    if (c >= a.cols()) return res;  // inconsistent system
  res.solvable = true;
  const S zero = ring_zero_like(a.proto());
  Mat<S> x(a.cols(), b.cols(), zero);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(static_cast<int>(r), a.cols() + j);
  res.particular = x;
  Mat<S> ma = a;
  auto pa = rref(ma, eps);
  res.kernel = kernel_from_rref(ma, pa);
  return res;
}

}  // namespace

SolveResult<Laurent> solve_linear(const LMat& a, const LMat& b) {
  require_field(a);
  require_field(b);
  return solve_impl(a, b, 0.0);
}

SolveResult<CD> solve_linear(const CMat& a, const CMat& b, double eps) {
  return solve_impl(a, b, eps);
}

}  // namespace wrep

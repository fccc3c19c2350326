#include "wrep/numeric.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace wrep {

namespace {

Eigen::MatrixXcd to_eigen(const CMat& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

CMat from_eigen(const Eigen::MatrixXcd& m) {
  CMat r(static_cast<int>(m.rows()), static_cast<int>(m.cols()), CD(0, 0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

}  // namespace

CD parse_complex(const std::string& text) {
  // forms: "2", "-1.5", "i", "-i", "2i", "1+2i", "0.7-0.2i", "1e-3+2e4i"
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty complex literal");
  auto read_num = [&](std::size_t& pos) -> double {
    const char* start = s.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start) throw ParseError("bad complex literal: " + text);
    pos += static_cast<std::size_t>(end - start);
    return v;
  };
  double re = 0, im = 0;
  std::size_t pos = 0;
  bool have_re = false;
  // leading bare "i" / "+i" / "-i"
  auto bare_i = [&](std::size_t p) {
    return p < s.size() && s[p] == 'i' && p + 1 == s.size();
  };
  if (bare_i(pos) || ((s[pos] == '+' || s[pos] == '-') && bare_i(pos + 1))) {
    im = (s[pos] == '-') ? -1.0 : 1.0;
    return CD(0, im);
  }
  double first = read_num(pos);
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    im = first;
  } else {
    re = first;
    have_re = true;
  }
  if (pos == s.size()) return CD(re, im);
  if (!have_re) throw ParseError("bad complex literal: " + text);
  if (s[pos] == '+' && bare_i(pos + 1)) return CD(re, 1.0);
  if (s[pos] == '-' && bare_i(pos + 1)) return CD(re, -1.0);
  double second = read_num(pos);
  if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size())
    throw ParseError("bad complex literal: " + text);
  return CD(re, second);
}

std::string format_complex(const CD& z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real();
  if (z.imag() >= 0 || std::isnan(z.imag()))
    os << "+" << z.imag() << "i";
  else
    os << "-" << -z.imag() << "i";
  return os.str();
}

std::vector<CD> eigenvalues(const CMat& a) {
  if (!a.square()) throw NotSquare("eigenvalues of non-square matrix");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(a), /*computeEigenvectors=*/false);
  std::vector<CD> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

std::vector<EigenCluster> eigenvalue_clusters(const CMat& a, double reltol) {
  std::vector<CD> ev = eigenvalues(a);
  double scale = 0;
  for (const CD& v : ev) scale = std::max(scale, std::abs(v));
  double tol = reltol * std::max(scale, 1e-300);
  std::vector<char> used(ev.size(), 0);
  std::vector<EigenCluster> clusters;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (used[i]) continue;
    CD sum = ev[i];
    int count = 1;
    used[i] = 1;
    for (std::size_t j = i + 1; j < ev.size(); ++j) {
      if (!used[j] && std::abs(ev[j] - ev[i]) <= tol) {
        sum += ev[j];
        ++count;
        used[j] = 1;
      }
    }
    clusters.push_back({sum / static_cast<double>(count), count});
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const EigenCluster& x, const EigenCluster& y) {
              return x.multiplicity > y.multiplicity;
            });
  return clusters;
}

std::vector<CMat> eigenvector_candidates(const CMat& a, double eps) {
  std::vector<CMat> out;
  for (const auto& cl : eigenvalue_clusters(a)) {
    CMat shifted = a;
    for (int i = 0; i < a.rows(); ++i) shifted(i, i) -= cl.value;
    // widen the kernel threshold: the eigenvalue is only cluster-accurate
    for (const auto& v : kernel_basis(shifted, std::max(eps, 1e-8))) out.push_back(v);
  }
  return out;
}

CMat lstsq(const CMat& a, const CMat& b) {
  Eigen::MatrixXcd A = to_eigen(a), B = to_eigen(b);
  Eigen::MatrixXcd x = A.colPivHouseholderQr().solve(B);
  return from_eigen(x);
}

std::vector<double> singular_values(const CMat& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
  std::vector<double> out;
  for (int i = 0; i < svd.singularValues().size(); ++i) out.push_back(svd.singularValues()(i));
  return out;
}

std::vector<CD> cube_roots(const CD& w) {
  double r = std::cbrt(std::abs(w));
  double phi = std::arg(w);
  std::vector<CD> roots;
  for (int k = 0; k < 3; ++k)
    roots.push_back(std::polar(r, (phi + 2.0 * M_PI * k) / 3.0));
  std::sort(roots.begin(), roots.end(),
            [](const CD& x, const CD& y) { return std::arg(x) < std::arg(y); });
  return roots;
}

}  // namespace wrep

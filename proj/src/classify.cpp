#include "wrep/classify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include "wrep/numeric.hpp"

namespace wrep {

namespace {

template <class S>
void require_evaluated_rep(const RepT<S>& rep) {
  if constexpr (std::is_same_v<S, Laurent>) {
    if (!rep.sigma.empty()) require_field(rep.sigma[0]);
  }
  (void)rep;
}

template <class S>
S trace_of(const Mat<S>& m) {
  S acc = ring_zero_like(m.proto());
  for (int i = 0; i < m.rows(); ++i) acc = acc + m(i, i);
  return acc;
}

// ---------- exact univariate polynomials over Q(w) ----------

using QwPoly = std::vector<CycRat>;  // coefficient of x^i at index i

int poly_degree(const QwPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

void poly_trim(QwPoly& p) { p.resize(static_cast<std::size_t>(poly_degree(p) + 1)); }

QwPoly poly_monic(QwPoly p) {
  int d = poly_degree(p);
  if (d < 0) return p;
  CycRat lead = p[static_cast<std::size_t>(d)];
  for (auto& c : p) c = c / lead;
  poly_trim(p);
  return p;
}

QwPoly poly_derivative(const QwPoly& p) {
  QwPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * CycRat(static_cast<long>(i)));
  return d;
}

QwPoly poly_mod(QwPoly a, const QwPoly& b) {
  int db = poly_degree(b);
  if (db < 0) throw DivisionByZero("polynomial modulo zero");
  const CycRat lead = b[static_cast<std::size_t>(db)];
  while (poly_degree(a) >= db) {
    int da = poly_degree(a);
    CycRat f = a[static_cast<std::size_t>(da)] / lead;
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
    poly_trim(a);
    if (poly_degree(a) == da) throw Error("polynomial division failed to reduce degree");
  }
  return a;
}

QwPoly poly_gcd(QwPoly a, QwPoly b) {
  a = poly_monic(std::move(a));
  b = poly_monic(std::move(b));
  while (poly_degree(b) >= 0) {
    QwPoly r = poly_mod(a, b);
    a = std::move(b);
    b = poly_monic(std::move(r));
  }
  return poly_monic(std::move(a));
}

// characteristic polynomial of an evaluated exact matrix (trace recursion)
QwPoly charpoly_exact(const LMat& a) {
  const int r = a.rows();
  std::vector<std::vector<CycRat>> m(static_cast<std::size_t>(r),
                                     std::vector<CycRat>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        a(i, j).constant_value();
  QwPoly chi(static_cast<std::size_t>(r + 1));
  chi[static_cast<std::size_t>(r)] = CycRat(1);
  auto mat_mul = [&](const auto& x, const auto& y) {
    std::vector<std::vector<CycRat>> z(static_cast<std::size_t>(r),
                                       std::vector<CycRat>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
      for (int l = 0; l < r; ++l) {
        const CycRat& xil = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        if (xil.is_zero()) continue;
        for (int j = 0; j < r; ++j)
          z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              xil * y[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
      }
    return z;
  };
  auto mk = m;
  CycRat ck = -[&] {
    CycRat t(0);
    for (int i = 0; i < r; ++i) t += mk[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return t;
  }();
  chi[static_cast<std::size_t>(r - 1)] = ck;
  for (int k = 2; k <= r; ++k) {
    for (int i = 0; i < r; ++i) mk[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += ck;
    mk = mat_mul(m, mk);
    CycRat tr(0);
    for (int i = 0; i < r; ++i) tr += mk[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    ck = -(tr / CycRat(static_cast<long>(k)));
    chi[static_cast<std::size_t>(r - k)] = ck;
  }
  return chi;
}

// the root of maximal multiplicity, found by repeated gcd with the derivative
CycRat dominant_root_exact(QwPoly chi) {
  QwPoly g = poly_monic(std::move(chi));
  while (poly_degree(g) > 1) {
    QwPoly next = poly_gcd(g, poly_derivative(g));
    if (poly_degree(next) < 1)
      throw NotAnExtension("braid image has no repeated eigenvalue");
    if (poly_degree(next) == poly_degree(g))
      throw NotAnExtension("eigenvalue extraction failed");
    g = std::move(next);
  }
  if (poly_degree(g) != 1) throw NotAnExtension("braid image has no repeated eigenvalue");
  return -(g[0] / g[1]);
}

// ---------- ring-generic small helpers ----------

template <class S>
bool scalar_close(const S& a, const S& b, double tol) {
  if constexpr (std::is_same_v<S, CD>)
    return std::abs(a - b) <= tol;
  else
    return a == b;
}

template <class S>
Mat<S> inverse_of(const Mat<S>& m) {
  if constexpr (std::is_same_v<S, CD>)
    return inverse(m, 1e-13);
  else
    return inverse(m);
}

template <class S>
std::vector<Mat<S>> kernel_of(const Mat<S>& m, double eps) {
  if constexpr (std::is_same_v<S, CD>)
    return kernel_basis(m, eps);
  else
    return kernel_basis(m);
}

template <class S>
S scalar_from_int(long v, const S& proto) {
  if constexpr (std::is_same_v<S, CD>)
    return CD(static_cast<double>(v), 0);
  else
    return Laurent::constant(proto.vars(), CycRat(v));
}

template <class S>
S scalar_pow(const S& v, long e) {
  if constexpr (std::is_same_v<S, CD>)
    return std::pow(v, static_cast<double>(e));
  else
    return v.pow(e);
}

}  // namespace

template <class S>
RepT<S> conjugate_rep(const RepT<S>& rep, const Mat<S>& p) {
  Mat<S> pinv = inverse_of(p);
  RepT<S> out = rep;
  for (auto& g : out.sigma) g = p * g * pinv;
  for (auto& a : out.alpha) a = p * a * pinv;
  out.label.params["conjugated"] = "yes";
  return out;
}

CMat random_invertible_complex(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  for (int attempt = 0; attempt < 64; ++attempt) {
    CMat m(dim, dim, CD(0, 0));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = CD(dist(rng), dist(rng));
    auto sv = singular_values(m);
    if (sv.back() > 1e-3 * sv.front()) return m;
  }
  throw Error("failed to sample a well-conditioned matrix");
}

LMat random_unimodular_exact(int dim, std::mt19937_64& rng) {
  const Laurent one = Laurent::constant({}, CycRat(1));
  LMat m = LMat::identity(dim, one);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int step = 0; step < 3 * dim; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Laurent c = Laurent::constant({}, CycRat(coeff(rng)));
    for (int col = 0; col < dim; ++col) m(i, col) = m(i, col) + c * m(j, col);
  }
  return m;
}

// ---------- identification ----------

namespace {

template <class S>
double mat_scale(const Mat<S>& m) {
  if constexpr (std::is_same_v<S, CD>)
    return std::max(1.0, max_abs(m));
  else
    return 1.0;
  (void)m;
}

template <class S>
bool mats_close(const Mat<S>& a, const Mat<S>& b, double tol) {
  if constexpr (std::is_same_v<S, CD>)
    return max_abs_diff(a, b) <= tol * std::max(mat_scale(a), mat_scale(b));
  else
    return a == b;
}

// the swap-with-weights pattern of the standard-family alpha_1 image;
// returns lambda when it matches
template <class S>
std::optional<S> match_standard_alpha1(const Mat<S>& b, double tol) {
  const int dim = b.rows();
  const S zero = ring_zero_like(b.proto());
  const S one = ring_one_like(b.proto());
  double scale = mat_scale(b);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      S expect = (i == j && i >= 2) ? one : zero;
      if ((i < 2 && j < 2 && i != j)) continue;  // the lambda block
      if (i < 2 && j < 2 && i == j) expect = zero;
      if (!scalar_close(b(i, j), expect, tol * scale)) return std::nullopt;
    }
  const S lam = b(1, 0);
  if (scalar_is_zero(lam, tol * scale)) return std::nullopt;
  const S prod = b(0, 1) * lam;
  if (!scalar_close(prod, one, tol * scale * 10)) return std::nullopt;
  return lam;
}

template <class S>
Mat<S> psi3_alpha1_form(const S& a, const S& b, const S& c, const S& x) {
  const S zero = ring_zero_like(x);
  Mat<S> m(3, 3, zero);
  const S xinv = ring_one_like(x) / x;
  m(0, 0) = a;
  m(0, 1) = b * xinv;
  m(0, 2) = c * xinv * xinv;
  m(1, 0) = x * b;
  m(1, 1) = c;
  m(1, 2) = a * xinv;
  m(2, 0) = x * x * c;
  m(2, 1) = x * a;
  m(2, 2) = b;
  return m;
}

template <class S>
ParamValue to_param(const S& v) {
  if constexpr (std::is_same_v<S, CD>)
    return ParamValue::of(v);
  else
    return ParamValue::of(v.constant_value());
}

}  // namespace

template <class S>
ClassificationT<S> identify_extension(const RepT<S>& rep, double eps) {
  const int n = rep.n, dim = rep.dim;
  if (!rep.has_alpha()) throw NotAnExtension("no alpha images to classify");
  require_evaluated_rep(rep);
  bool is_standard;
  if (dim == n)
    is_standard = true;
  else if (dim == n - 1)
    is_standard = false;
  else
    throw NotAnExtension("dimension must be n or n-1");
  if (!is_standard && (n == 3 || n == 4 || n == 6))
    throw OutOfClassifiedRange("corank-1 extensions are not classified for n = 3, 4, 6");
  if (is_standard && n == 8)
    throw OutOfClassifiedRange("dimension-n extensions are not classified for n = 8");
  if (!check_relations(rep, std::max(eps, 1e-9)).ok())
    throw NotAnExtension("defining relations fail");
  if (!burnside_irreducible(rep, GenSelect::SigmaOnly, eps))
    throw NotAnExtension("braid restriction is not irreducible");

  const S one = ring_one_like(rep.sigma[0].proto());
  const double tol = std::max(eps, 1e-8);

  // (y, z) from the spectrum and determinant of the first braid image
  const Mat<S>& s1 = rep.sigma[0];
  S det1 = det(s1);
  S y = [&]() -> S {
    if (is_standard) return trace_of(s1) / scalar_from_int(n - 2, one);
    if constexpr (std::is_same_v<S, CD>) {
      auto clusters = eigenvalue_clusters(s1);
      if (clusters.empty() || clusters.front().multiplicity < dim - 2)
        throw NotAnExtension("braid image lacks the high-multiplicity eigenvalue");
      return clusters.front().value;
    } else {
      return Laurent::constant(s1.proto().vars(), dominant_root_exact(charpoly_exact(s1)));
    }
  }();
  if (scalar_is_zero(y, 1e-12)) throw NotAnExtension("degenerate character scale");
  S z = (ring_zero_like(one) - det1) / scalar_pow(y, dim);
  if (scalar_is_zero(z, 1e-12)) throw NotAnExtension("degenerate braid parameter");

  // strip the character: braid images by 1/y, alpha images by k
  RepT<S> hat = tensor_with_character(rep, one / y, 1);
  S ktrace = trace_of(hat.alpha[0]) / scalar_from_int(is_standard ? n - 2 : n - 3, one);
  int k;
  if (scalar_close(ktrace, one, 1e-6))
    k = 1;
  else if (scalar_close(ktrace, ring_zero_like(one) - one, 1e-6))
    k = -1;
  else
    throw NotAnExtension("alpha trace is not +-(dim - corank)");
  if (k == -1) hat = tensor_with_character(hat, one, -1);

  auto [tmat, tmat_inv] = theta_matrix(hat);
  (void)tmat_inv;
  Mat<S> id = Mat<S>::identity(dim, one);

  // canonical basis, written in the input coordinates
  std::optional<Mat<S>> basis;
  Family family = Family::TildeTau;
  if (is_standard) {
    std::vector<Mat<S>> cs;
    for (int i = 2; i <= n - 1; ++i) cs.push_back(hat.sigma[static_cast<std::size_t>(i - 1)] - id);
    auto ker = kernel_of(vstack(cs), tol);
    if (ker.size() != 1)
      throw Indeterminate("common kernel of the shifted braid images is not a line");
    Mat<S> u = ker[0];
    Mat<S> s(dim, dim, ring_zero_like(one));
    for (int j = 0; j < dim; ++j) {
      for (int i = 0; i < dim; ++i) s(i, j) = u(i, 0);
      if (j + 1 < dim) u = tmat * u;
    }
    basis = s;
  } else {
    Mat<S> c1 = hat.sigma[0] - id;
    // the image of c1 is a line; take its best column as the first basis vector
    int best_col = 0;
    if constexpr (std::is_same_v<S, CD>) {
      double best = -1;
      for (int j = 0; j < dim; ++j) {
        double norm = 0;
        for (int i = 0; i < dim; ++i) norm += std::norm(c1(i, j));
        if (norm > best) { best = norm; best_col = j; }
      }
    } else {
      best_col = -1;
      for (int j = 0; j < dim && best_col < 0; ++j)
        for (int i = 0; i < dim; ++i)
          if (!c1(i, j).is_zero()) { best_col = j; break; }
      if (best_col < 0) throw NotAnExtension("first braid image equals the identity");
    }
    Mat<S> v(dim, 1, ring_zero_like(one));
    for (int i = 0; i < dim; ++i) v(i, 0) = c1(i, best_col);
    Mat<S> s(dim, dim, ring_zero_like(one));
    for (int j = 0; j < dim; ++j) {
      for (int i = 0; i < dim; ++i) s(i, j) = v(i, 0);
      if (j + 1 < dim) {
        v = tmat * v;
        for (int i = 0; i < dim; ++i) v(i, 0) = v(i, 0) / z;
      }
    }
    // image-of-C1 versus image-of-D1 decides between the two families
    Mat<S> d1 = hat.alpha[0] - id;
    Mat<S> pair(dim, 2, ring_zero_like(one));
    for (int i = 0; i < dim; ++i) pair(i, 0) = s(i, 0);
    int d_col = 0;
    if constexpr (std::is_same_v<S, CD>) {
      double best = -1;
      for (int j = 0; j < dim; ++j) {
        double norm = 0;
        for (int i = 0; i < dim; ++i) norm += std::norm(d1(i, j));
        if (norm > best) { best = norm; d_col = j; }
      }
    } else {
      d_col = -1;
      for (int j = 0; j < dim && d_col < 0; ++j)
        for (int i = 0; i < dim; ++i)
          if (!d1(i, j).is_zero()) { d_col = j; break; }
      if (d_col < 0) throw NotAnExtension("first alpha image equals the identity");
    }
    for (int i = 0; i < dim; ++i) pair(i, 1) = d1(i, d_col);
    int pair_rank;
    if constexpr (std::is_same_v<S, CD>) {
      auto sv = singular_values(pair);
      pair_rank = (sv[1] > 1e-6 * sv[0]) ? 2 : 1;
    } else {
      pair_rank = rank(pair);
    }
    if (pair_rank == 1) {
      family = Family::TildeBeta;
      basis = s;
    } else {
      family = Family::HatBeta;
      basis = s * inverse_of(q_change_of_basis<S>(n, z));
    }
  }

  Mat<S> binv = inverse_of(*basis);
  Mat<S> b_alpha1 = binv * hat.alpha[0] * *basis;

  std::optional<S> lambda, x;
  if (is_standard) {
    lambda = match_standard_alpha1(b_alpha1, tol);
    if (lambda) {
      family = Family::TildeTau;
    } else if (n == 3) {
      family = Family::Psi3;
      const S a_val = b_alpha1(0, 0), c_val = b_alpha1(1, 1), b_val = b_alpha1(2, 2);
      S x_val = ring_zero_like(one);
      if constexpr (std::is_same_v<S, CD>) {
        double best = 1e300;
        for (const CD& cand : cube_roots(CD(1, 0) / (z * z))) {
          double dev = max_abs_diff(psi3_alpha1_form<S>(a_val, b_val, c_val, cand), b_alpha1);
          if (dev < best) { best = dev; x_val = cand; }
        }
        if (best > tol * 100 * mat_scale(b_alpha1))
          throw Indeterminate("alpha image matches no known three-strand pattern");
      } else {
        if (!a_val.is_zero())
          x_val = b_alpha1(2, 1) / a_val;
        else if (!b_val.is_zero())
          x_val = b_alpha1(1, 0) / b_val;
        else
          x_val = (one / (z * z)) * c_val / b_alpha1(2, 0);
        if (!(x_val * x_val * x_val * z * z == one))
          throw Indeterminate("cube-root parameter is not exactly representable");
        if (!(psi3_alpha1_form<S>(a_val, b_val, c_val, x_val) == b_alpha1))
          throw NotAnExtension("alpha image matches no known three-strand pattern");
      }
      x = x_val;
      // invert the curve parametrization: lambda = w^2 a + b + w c
      const S w = [&]() -> S {
        if constexpr (std::is_same_v<S, CD>)
          return CycRat::omega().to_complex();
        else
          return Laurent::constant(one.vars(), CycRat::omega());
      }();
      lambda = w * w * a_val + b_val + w * c_val;
      if (scalar_is_zero(*lambda, 1e-12)) throw Indeterminate("curve parameter is zero");
    } else {
      throw NotAnExtension("alpha image does not extend the standard pattern");
    }
  }

  // assemble the model and verify every generator against the certificate
  FamilyParams fp;
  fp.family = family;
  fp.n = n;
  fp.assign[family == Family::Psi3 ? "z" : "t"] = to_param(z);
  if (family == Family::TildeTau) fp.assign["q"] = to_param(*lambda);
  if (family == Family::Psi3) {
    fp.assign["lambda"] = to_param(*lambda);
    fp.assign["x"] = to_param(*x);
  }
  Representation model_any = make_family(fp);
  RepT<S> model = std::get<RepT<S>>(model_any);
  model = tensor_with_character(model, y, k);

  Mat<S> cert = *basis;
  Mat<S> cert_inv = binv;
  for (int i = 0; i < n - 1; ++i) {
    if (!mats_close(rep.sigma[static_cast<std::size_t>(i)],
                    cert * model.sigma[static_cast<std::size_t>(i)] * cert_inv, tol * 100))
      throw NotAnExtension("braid images do not match the identified model");
    if (!mats_close(rep.alpha[static_cast<std::size_t>(i)],
                    cert * model.alpha[static_cast<std::size_t>(i)] * cert_inv, tol * 100))
      throw NotAnExtension("alpha images do not match the identified model");
  }

  ClassificationT<S> result;
  bool y_one = scalar_close(y, one, 1e-9);
  if (is_standard) {
    result.kind = family == Family::Psi3
                      ? "standard-extension-exceptional"
                      : (y_one ? "standard-extension" : "standard-extension-scaled");
  } else {
    result.kind = y_one ? "burau-extension" : "burau-extension-scaled";
  }
  result.family = family;
  result.y = y;
  result.k = k;
  result.z = z;
  result.lambda = lambda;
  result.x = x;
  result.certificate = cert;
  result.model = std::move(model);
  return result;
}

template ClassificationL identify_extension(const LRep&, double);
template ClassificationC identify_extension(const CRep&, double);

// ---------- multi-start search over alpha_1 ----------

namespace {

struct Factor {
  int alpha = 0;  // 1..n-1 when this factor is an alpha image
  int sigma = 0;  // 1..n-1 when this factor is a fixed braid image
};

struct Equation {
  std::vector<Factor> lhs, rhs;  // residual = prod(lhs) - prod(rhs); empty = identity
};

std::vector<Equation> build_equations(int n) {
  std::vector<Equation> eqs;
  eqs.push_back({{{1, 0}, {1, 0}}, {}});  // involution
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      eqs.push_back({{{i, 0}, {j, 0}}, {{j, 0}, {i, 0}}});
  for (int i = 1; i <= n - 2; ++i)
    eqs.push_back({{{i, 0}, {i + 1, 0}, {i, 0}}, {{i + 1, 0}, {i, 0}, {i + 1, 0}}});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        eqs.push_back({{{i, 0}, {0, j}}, {{0, j}, {i, 0}}});
  for (int i = 1; i <= n - 2; ++i)
    eqs.push_back({{{i, 0}, {i + 1, 0}, {0, i}}, {{0, i + 1}, {i, 0}, {i + 1, 0}}});
  for (int i = 1; i <= n - 2; ++i)
    eqs.push_back({{{0, i}, {0, i + 1}, {i, 0}}, {{i + 1, 0}, {0, i}, {0, i + 1}}});
  return eqs;
}

struct SearchContext {
  int n, r;
  std::vector<CMat> sigma;           // fixed braid images
  std::vector<CMat> tpow, tpow_inv;  // T^(i-1) and its inverse, i = 1..n-1
  std::vector<Equation> eqs;
  int rows;  // residual length

  Eigen::MatrixXcd to_e(const CMat& m) const {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
  }
};

SearchContext make_context(int n, Family restriction, CD z) {
  SearchContext ctx;
  ctx.n = n;
  FamilyParams fp;
  fp.family = restriction;
  fp.n = n;
  fp.assign["t"] = ParamValue::of(z);
  CRep rep = std::get<CRep>(make_family(fp));
  ctx.r = rep.dim;
  ctx.sigma = rep.sigma;
  CMat t = rep.sigma[0];
  for (std::size_t i = 1; i < rep.sigma.size(); ++i) t = t * rep.sigma[i];
  CMat tp = CMat::identity(ctx.r, CD(1, 0));
  CMat tinv = inverse(t, 1e-13);
  CMat tpinv = CMat::identity(ctx.r, CD(1, 0));
  for (int i = 1; i <= n - 1; ++i) {
    ctx.tpow.push_back(tp);
    ctx.tpow_inv.push_back(tpinv);
    tp = t * tp;
    tpinv = tpinv * tinv;
  }
  ctx.eqs = build_equations(n);
  ctx.rows = static_cast<int>(ctx.eqs.size()) * ctx.r * ctx.r;
  return ctx;
}

std::vector<CMat> alpha_images(const SearchContext& ctx, const CMat& a1) {
  std::vector<CMat> as;
  as.reserve(static_cast<std::size_t>(ctx.n - 1));
  for (int i = 1; i <= ctx.n - 1; ++i)
    as.push_back(ctx.tpow[static_cast<std::size_t>(i - 1)] * a1 *
                 ctx.tpow_inv[static_cast<std::size_t>(i - 1)]);
  return as;
}

const CMat& factor_mat(const SearchContext& ctx, const std::vector<CMat>& as, const Factor& f) {
  return f.alpha > 0 ? as[static_cast<std::size_t>(f.alpha - 1)]
                     : ctx.sigma[static_cast<std::size_t>(f.sigma - 1)];
}

CMat side_product(const SearchContext& ctx, const std::vector<CMat>& as,
                  const std::vector<Factor>& side) {
  CMat acc = CMat::identity(ctx.r, CD(1, 0));
  for (const Factor& f : side) acc = acc * factor_mat(ctx, as, f);
  return acc;
}

Eigen::VectorXcd residual_vec(const SearchContext& ctx, const CMat& a1) {
  auto as = alpha_images(ctx, a1);
  Eigen::VectorXcd f(ctx.rows);
  int off = 0;
  const int r = ctx.r;
  for (const Equation& eq : ctx.eqs) {
    CMat lhs = side_product(ctx, as, eq.lhs);
    CMat rhs = side_product(ctx, as, eq.rhs);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) f(off + i + r * j) = lhs(i, j) - rhs(i, j);
    off += r * r;
  }
  return f;
}

// holomorphic Jacobian of the residual in the entries of a1 (column-major)
Eigen::MatrixXcd jacobian(const SearchContext& ctx, const CMat& a1) {
  auto as = alpha_images(ctx, a1);
  const int r = ctx.r;
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(ctx.rows, r * r);
  int off = 0;
  auto accumulate_side = [&](const std::vector<Factor>& side, double sign, int base) {
    const std::size_t m = side.size();
    std::vector<CMat> prefix, suffix;
    prefix.reserve(m + 1);
    suffix.assign(m + 1, CMat::identity(r, CD(1, 0)));
    prefix.push_back(CMat::identity(r, CD(1, 0)));
    for (std::size_t idx = 0; idx < m; ++idx)
      prefix.push_back(prefix.back() * factor_mat(ctx, as, side[idx]));
    for (std::size_t idx = m; idx-- > 0;)
      suffix[idx] = factor_mat(ctx, as, side[idx]) * suffix[idx + 1];
    for (std::size_t idx = 0; idx < m; ++idx) {
      const Factor& fct = side[idx];
      if (fct.alpha == 0) continue;
      // d(prod)/dA1 in direction E_pq: L E_pq R with
      // L = prefix * T^(i-1), R = T^(1-i) * suffix
      CMat l = prefix[idx] * ctx.tpow[static_cast<std::size_t>(fct.alpha - 1)];
      CMat rr = ctx.tpow_inv[static_cast<std::size_t>(fct.alpha - 1)] * suffix[idx + 1];
      for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q) {
          const int col = p + r * q;
          for (int v = 0; v < r; ++v) {
            const CD rqv = rr(q, v) * sign;
            if (rqv == CD(0, 0)) continue;
            for (int u = 0; u < r; ++u) jac(base + u + r * v, col) += l(u, p) * rqv;
          }
        }
    }
  };
  for (const Equation& eq : ctx.eqs) {
    accumulate_side(eq.lhs, 1.0, off);
    accumulate_side(eq.rhs, -1.0, off);
    off += r * r;
  }
  return jac;
}

struct RawSolution {
  CMat a1;
  double residual;
};

std::optional<RawSolution> run_start(const SearchContext& ctx, std::uint64_t subseed) {
  std::mt19937_64 rng(subseed);
  std::normal_distribution<double> dist;
  const int r = ctx.r;
  CMat a1(r, r, CD(0, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a1(i, j) = CD(dist(rng), dist(rng));
  double fnorm = residual_vec(ctx, a1).lpNorm<Eigen::Infinity>();
  for (int iter = 0; iter < 200; ++iter) {
    if (fnorm <= 1e-12) break;
    if (fnorm > 1e8) return std::nullopt;
    Eigen::VectorXcd f = residual_vec(ctx, a1);
    Eigen::MatrixXcd j = jacobian(ctx, a1);
    Eigen::VectorXcd delta = j.colPivHouseholderQr().solve(-f);
    double step = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 12 && !accepted; ++bt, step *= 0.5) {
      CMat trial = a1;
      for (int q = 0; q < r; ++q)
        for (int p = 0; p < r; ++p) trial(p, q) += step * delta(p + r * q);
      double tnorm = residual_vec(ctx, trial).lpNorm<Eigen::Infinity>();
      if (tnorm < fnorm * (1.0 - 1e-4 * step) || tnorm <= 1e-12) {
        a1 = trial;
        fnorm = tnorm;
        accepted = true;
      }
    }
    if (!accepted) break;
  }
  if (fnorm > 1e-10) return std::nullopt;
  // polish: full Newton steps push the residual to the machine floor, which
  // matters at parameter values where solution branches collide (the root is
  // then multiple and the error scales like sqrt(residual))
  for (int polish = 0; polish < 4; ++polish) {
    Eigen::VectorXcd f = residual_vec(ctx, a1);
    Eigen::MatrixXcd j = jacobian(ctx, a1);
    Eigen::VectorXcd delta = j.colPivHouseholderQr().solve(-f);
    CMat trial = a1;
    for (int q = 0; q < r; ++q)
      for (int p = 0; p < r; ++p) trial(p, q) += delta(p + r * q);
    double tnorm = residual_vec(ctx, trial).lpNorm<Eigen::Infinity>();
    if (tnorm < fnorm) {
      a1 = trial;
      fnorm = tnorm;
    } else {
      break;
    }
  }
  return RawSolution{a1, fnorm};
}

}  // namespace

SearchReport extension_search(int n, Family restriction, CD z, int starts, std::uint64_t seed,
                              const Config& cfg) {
  if (restriction != Family::Tau && restriction != Family::BurauW &&
      restriction != Family::BurauV)
    throw BadParams("search restriction must be tau or burau-w/burau-v");
  if (starts < 1) throw BadParams("need at least one start");
  if (restriction == Family::Tau && std::abs(z - CD(1, 0)) < 1e-12)
    throw BadParams("standard restriction needs z != 1");
  if (restriction != Family::Tau) {
    CD p(0, 0), zp(1, 0);
    for (int i = 0; i < n; ++i) { p += zp; zp *= z; }
    if (std::abs(p) < 1e-9) throw BadParams("Burau restriction needs 1 + z + ... + z^(n-1) != 0");
  }
  SearchContext ctx = make_context(n, restriction, z);

  std::vector<std::optional<RawSolution>> raw(static_cast<std::size_t>(starts));
  int threads = std::max(1, cfg.threads);
  auto worker = [&](int tid) {
    for (int s = tid; s < starts; s += threads)
      raw[static_cast<std::size_t>(s)] =
          run_start(ctx, seed * 1000003ULL + static_cast<std::uint64_t>(s) * 7919ULL + 1);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::vector<RawSolution> sols;
  for (auto& r : raw)
    if (r) sols.push_back(std::move(*r));

  // cluster by Frobenius distance
  const double cluster_tol = 1e-6;
  std::vector<int> parent(sols.size());
  for (std::size_t i = 0; i < sols.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  auto frob = [&](const CMat& a, const CMat& b) {
    double s = 0;
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
    return std::sqrt(s);
  };
  for (std::size_t i = 0; i < sols.size(); ++i)
    for (std::size_t j = i + 1; j < sols.size(); ++j)
      if (frob(sols[i].a1, sols[j].a1) <= cluster_tol)
        parent[static_cast<std::size_t>(find(static_cast<int>(j)))] =
            find(static_cast<int>(i));

  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < sols.size(); ++i)
    groups[find(static_cast<int>(i))].push_back(i);

  SearchReport report;
  report.n = n;
  report.restriction = restriction;
  report.z = z;
  report.starts = starts;
  report.converged = static_cast<int>(sols.size());
  report.seed = seed;

  for (const auto& [root, members] : groups) {
    std::size_t best = members[0];
    for (std::size_t m : members)
      if (sols[m].residual < sols[best].residual) best = m;
    SearchSolution out{sols[best].a1, sols[best].residual, 0,
                       static_cast<int>(members.size()), std::nullopt};
    // local solution-manifold dimension from the Jacobian null space
    Eigen::MatrixXcd j = jacobian(ctx, out.a1);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(j);
    const auto& sv = svd.singularValues();
    int nullity = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) <= std::max(1e-8 * sv(0), 1e-12)) ++nullity;
    out.manifold_dim = 2 * nullity;
    // hand the assembled representation to the identifier
    CRep rep;
    rep.n = n;
    rep.dim = ctx.r;
    rep.sigma = ctx.sigma;
    rep.alpha = alpha_images(ctx, out.a1);
    try {
      out.family = identify_extension(rep, 1e-8);
    } catch (const Error&) {
      out.family = std::nullopt;
    }
    report.clusters.push_back(std::move(out));
  }

  std::sort(report.clusters.begin(), report.clusters.end(),
            [](const SearchSolution& a, const SearchSolution& b) {
              if (a.residual != b.residual) return a.residual < b.residual;
              for (int i = 0; i < a.a1.rows(); ++i)
                for (int j = 0; j < a.a1.cols(); ++j) {
                  const CD &x = a.a1(i, j), &y = b.a1(i, j);
                  if (x.real() != y.real()) return x.real() < y.real();
                  if (x.imag() != y.imag()) return x.imag() < y.imag();
                }
              return false;
            });
  return report;
}

// ---------- pairwise distinctness over a grid ----------

namespace {

CD param_as_complex(const FamilyParams& p, const std::string& key) {
  auto get = [&](const std::string& k) -> std::optional<CD> {
    auto it = p.assign.find(k);
    if (it == p.assign.end()) return std::nullopt;
    if (it->second.kind == ParamValue::Sym) throw BadParams("grid parameters must be evaluated");
    return it->second.kind == ParamValue::Exact ? it->second.exact.to_complex()
                                                : it->second.complex;
  };
  if (key == "z") {
    if (auto v = get("z")) return *v;
    if (auto v = get("t")) return *v;
    throw BadParams("missing z parameter");
  }
  if (key == "x" && p.x_root) {
    CD z = param_as_complex(p, "z");
    return cube_roots(CD(1, 0) / (z * z))[static_cast<std::size_t>(*p.x_root)];
  }
  auto v = get(key);
  if (!v) throw BadParams("missing parameter: " + key);
  return *v;
}

bool expected_equivalent(const FamilyParams& a, const FamilyParams& b) {
  auto close = [](CD x, CD y) { return std::abs(x - y) <= 1e-9; };
  if (a.n != b.n) return false;
  Family fa = a.family, fb = b.family;
  if (fa == fb) {
    switch (fa) {
      case Family::TildeBeta:
      case Family::HatBeta:
        return close(param_as_complex(a, "z"), param_as_complex(b, "z"));
      case Family::TildeTau:
        return close(param_as_complex(a, "z"), param_as_complex(b, "z")) &&
               close(param_as_complex(a, "q"), param_as_complex(b, "q"));
      case Family::Psi3:
        return close(param_as_complex(a, "z"), param_as_complex(b, "z")) &&
               close(param_as_complex(a, "lambda"), param_as_complex(b, "lambda")) &&
               close(param_as_complex(a, "x"), param_as_complex(b, "x"));
      default:
        return close(param_as_complex(a, "z"), param_as_complex(b, "z"));
    }
  }
  auto is_beta = [](Family f) { return f == Family::TildeBeta || f == Family::HatBeta; };
  if (is_beta(fa) && is_beta(fb)) {
    CD za = param_as_complex(a, "z"), zb = param_as_complex(b, "z");
    return close(za, zb) && close(za, CD(1, 0));  // the z = 1 collapse
  }
  auto is_std3 = [](Family f) { return f == Family::TildeTau || f == Family::Psi3; };
  if (is_std3(fa) && is_std3(fb)) {
    const FamilyParams& psi = fa == Family::Psi3 ? a : b;
    const FamilyParams& tt = fa == Family::Psi3 ? b : a;
    if (tt.family != Family::TildeTau || psi.family != Family::Psi3) return false;
    return close(param_as_complex(psi, "z"), param_as_complex(tt, "z")) &&
           close(param_as_complex(psi, "lambda"), CD(1, 0)) &&
           close(param_as_complex(psi, "x"), param_as_complex(tt, "q"));
  }
  return false;
}

CRep to_complex_rep(const LRep& rep) {
  CRep out;
  out.n = rep.n;
  out.dim = rep.dim;
  out.label = rep.label;
  for (const auto& g : rep.sigma) out.sigma.push_back(to_complex(g));
  for (const auto& a : rep.alpha) out.alpha.push_back(to_complex(a));
  return out;
}

}  // namespace

DistinctnessReport verify_pairwise_distinctness(const std::vector<FamilyParams>& grid,
                                                double eps, std::uint64_t seed) {
  std::vector<Representation> reps;
  reps.reserve(grid.size());
  for (const auto& p : grid) reps.push_back(make_family(p));
  DistinctnessReport report;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      DistinctnessEntry e;
      e.i = i;
      e.j = j;
      e.expected_equivalent = expected_equivalent(grid[i], grid[j]);
      if (rep_n(reps[i]) != rep_n(reps[j]) || rep_dim(reps[i]) != rep_dim(reps[j])) {
        e.got = Tristate::No;
      } else if (std::holds_alternative<LRep>(reps[i]) &&
                 std::holds_alternative<LRep>(reps[j])) {
        e.got = are_equivalent(std::get<LRep>(reps[i]), std::get<LRep>(reps[j]), eps, seed)
                    .equivalent;
      } else {
        CRep a = std::holds_alternative<CRep>(reps[i])
                     ? std::get<CRep>(reps[i])
                     : to_complex_rep(std::get<LRep>(reps[i]));
        CRep b = std::holds_alternative<CRep>(reps[j])
                     ? std::get<CRep>(reps[j])
                     : to_complex_rep(std::get<LRep>(reps[j]));
        e.got = are_equivalent(a, b, eps, seed).equivalent;
      }
      e.ok = (e.got == Tristate::Yes) == e.expected_equivalent && e.got != Tristate::Maybe;
      report.ok = report.ok && e.ok;
      report.entries.push_back(e);
    }
  }
  return report;
}

template LRep conjugate_rep(const LRep&, const LMat&);
template CRep conjugate_rep(const CRep&, const CMat&);

}  // namespace wrep

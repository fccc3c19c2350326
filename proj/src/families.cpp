#include "wrep/families.hpp"

#include <algorithm>
#include <array>

#include "wrep/numeric.hpp"

namespace wrep {

std::string family_name(Family f) {
  switch (f) {
    case Family::Chi: return "chi";
    case Family::X: return "X";
    case Family::BurauW: return "burau-w";
    case Family::BurauV: return "burau-v";
    case Family::Tau: return "tau";
    case Family::TildeBeta: return "tilde-beta";
    case Family::HatBeta: return "hat-beta";
    case Family::TildeTau: return "tilde-tau";
    case Family::Psi3: return "psi3";
  }
  throw BadParams("unknown family");
}

Family family_from_name(const std::string& s) {
  static const std::map<std::string, Family> m = {
      {"chi", Family::Chi},           {"X", Family::X},
      {"x", Family::X},               {"burau-w", Family::BurauW},
      {"burau-v", Family::BurauV},    {"tau", Family::Tau},
      {"tilde-beta", Family::TildeBeta}, {"hat-beta", Family::HatBeta},
      {"tilde-tau", Family::TildeTau},   {"psi3", Family::Psi3}};
  auto it = m.find(s);
  if (it == m.end()) throw BadParams("unknown family: " + s);
  return it->second;
}

int rep_n(const Representation& r) {
  return std::visit([](const auto& rep) { return rep.n; }, r);
}
int rep_dim(const Representation& r) {
  return std::visit([](const auto& rep) { return rep.dim; }, r);
}
bool rep_has_alpha(const Representation& r) {
  return std::visit([](const auto& rep) { return rep.has_alpha(); }, r);
}

std::string ParamValue::to_string() const {
  switch (kind) {
    case Sym: return "sym";
    case Exact: return exact.to_string();
    case Complex: return format_complex(complex);
  }
  return "?";
}

ParamValue ParamValue::parse(const std::string& text) {
  if (text == "sym") return sym();
  if (text.find('w') != std::string::npos) return of(CycRat::from_string(text));
  bool complex_form = text.find('i') != std::string::npos ||
                      text.find('.') != std::string::npos ||
                      text.find('e') != std::string::npos ||
                      text.find('E') != std::string::npos;
  if (complex_form && text.find('/') == std::string::npos) return of(parse_complex(text));
  return of(CycRat(rat_from_string(text)));
}

namespace {

// ---- generic matrix builders, shared by the exact and the numeric ring ----

template <class S>
Mat<S> ident(int dim, const S& one) {
  return Mat<S>::identity(dim, one);
}

// deviates from the identity in column i-1: t above the diagonal, -t on it,
// `below` under it
template <class S>
Mat<S> burau_w_gen(int n, int i, const S& t, const S& below, const S& one) {
  Mat<S> m = ident(n - 1, one);
  int c = i - 1;
  m(c, c) = ring_zero_like(one) - t;
  if (c > 0) m(c - 1, c) = t;
  if (c + 1 < n - 1) m(c + 1, c) = below;
  return m;
}

// deviates from the identity in row i-1: t to the left, -t on the diagonal,
// 1 to the right
template <class S>
Mat<S> burau_v_gen(int n, int i, const S& t, const S& one) {
  Mat<S> m = ident(n - 1, one);
  int r = i - 1;
  m(r, r) = ring_zero_like(one) - t;
  if (r > 0) m(r, r - 1) = t;
  if (r + 1 < n - 1) m(r, r + 1) = one;
  return m;
}

// 2x2 block [[0, up], [down, 0]] at rows/cols (i-1, i) of the identity
template <class S>
Mat<S> swap_block_gen(int n, int i, const S& up, const S& down, const S& one) {
  Mat<S> m = ident(n, one);
  const S zero = ring_zero_like(one);
  m(i - 1, i - 1) = zero;
  m(i, i) = zero;
  m(i - 1, i) = up;
  m(i, i - 1) = down;
  return m;
}

template <class S>
Mat<S> psi3_alpha(const S& a, const S& b, const S& c, const S& x, bool second) {
  const S zero = ring_zero_like(x);
  Mat<S> m(3, 3, zero);
  const S xinv = ring_one_like(x) / x;
  const S p = second ? b : a, q = second ? c : b, r = second ? a : c;
  m(0, 0) = p;
  m(0, 1) = q * xinv;
  m(0, 2) = r * xinv * xinv;
  m(1, 0) = x * q;
  m(1, 1) = r;
  m(1, 2) = p * xinv;
  m(2, 0) = x * x * r;
  m(2, 1) = x * p;
  m(2, 2) = q;
  return m;
}

struct ParamSpec {
  std::vector<std::string> names;  // canonical order
  bool symbolic_ok;
};

ParamSpec param_spec(Family f) {
  switch (f) {
    case Family::Chi: return {{"t"}, true};
    case Family::X: return {{"y", "k"}, true};
    case Family::BurauW: return {{"t"}, true};
    case Family::BurauV: return {{"t"}, true};
    case Family::Tau: return {{"t"}, true};
    case Family::TildeBeta: return {{"t"}, true};
    case Family::HatBeta: return {{"t"}, true};
    case Family::TildeTau: return {{"t", "q"}, true};
    case Family::Psi3: return {{"z", "lambda", "x"}, false};
  }
  throw BadParams("unknown family");
}

// families written with t accept z as an alias, matching the usual notation
// for specializations
std::string canonical_key(Family f, const std::string& key) {
  if (key == "z" && f != Family::Psi3) return "t";
  if (key == "t" && f == Family::Psi3) return "z";
  return key;
}

template <class S>
std::vector<Mat<S>> build_sigmas(Family f, int n, const S& t, const S& one) {
  std::vector<Mat<S>> out;
  switch (f) {
    case Family::Chi:
    case Family::X: {
      for (int i = 1; i <= n - 1; ++i) out.push_back(Mat<S>(1, 1, t));
      break;
    }
    case Family::BurauW:
    case Family::HatBeta:
      for (int i = 1; i <= n - 1; ++i) out.push_back(burau_w_gen(n, i, t, one, one));
      break;
    case Family::BurauV:
    case Family::TildeBeta:
      for (int i = 1; i <= n - 1; ++i) out.push_back(burau_v_gen(n, i, t, one));
      break;
    case Family::Tau:
    case Family::TildeTau:
    case Family::Psi3:
      for (int i = 1; i <= n - 1; ++i) out.push_back(swap_block_gen(n, i, t, one, one));
      break;
  }
  return out;
}

template <class S>
RepT<S> build_family(Family f, int n, const std::map<std::string, S>& v, const S& one,
                     FamilyLabel label) {
  RepT<S> rep;
  rep.n = n;
  rep.label = std::move(label);
  const S zero = ring_zero_like(one);
  auto at = [&](const std::string& key) -> const S& {
    auto it = v.find(key);
    if (it == v.end()) throw BadParams("missing parameter: " + key);
    return it->second;
  };
  switch (f) {
    case Family::Chi:
      rep.dim = 1;
      rep.sigma = build_sigmas(f, n, at("t"), one);
      break;
    case Family::X: {
      rep.dim = 1;
      rep.sigma = build_sigmas(f, n, at("y"), one);
      for (int i = 1; i <= n - 1; ++i) rep.alpha.push_back(Mat<S>(1, 1, at("k")));
      break;
    }
    case Family::BurauW:
    case Family::BurauV:
      rep.dim = n - 1;
      rep.sigma = build_sigmas(f, n, at("t"), one);
      break;
    case Family::Tau:
      rep.dim = n;
      rep.sigma = build_sigmas(f, n, at("t"), one);
      break;
    case Family::TildeBeta: {
      rep.dim = n - 1;
      rep.sigma = build_sigmas(f, n, at("t"), one);
      for (int i = 1; i <= n - 1; ++i) rep.alpha.push_back(burau_v_gen(n, i, one, one));
      break;
    }
    case Family::HatBeta: {
      rep.dim = n - 1;
      rep.sigma = build_sigmas(f, n, at("t"), one);
      const S tinv = one / at("t");
      for (int i = 1; i <= n - 1; ++i)
        rep.alpha.push_back(burau_w_gen(n, i, at("t"), tinv, one));
      // the alpha images carry -1 on the diagonal, not -t
      for (int i = 1; i <= n - 1; ++i) rep.alpha[i - 1](i - 1, i - 1) = zero - one;
      break;
    }
    case Family::TildeTau: {
      rep.dim = n;
      rep.sigma = build_sigmas(f, n, at("t"), one);
      const S qinv = one / at("q");
      for (int i = 1; i <= n - 1; ++i)
        rep.alpha.push_back(swap_block_gen(n, i, qinv, at("q"), one));
      break;
    }
    case Family::Psi3: {
      rep.dim = 3;
      rep.sigma = build_sigmas(f, n, at("z"), one);
      rep.alpha.push_back(psi3_alpha(at("a"), at("b"), at("c"), at("x"), false));
      rep.alpha.push_back(psi3_alpha(at("a"), at("b"), at("c"), at("x"), true));
      break;
    }
  }
  return rep;
}

int read_k(const ParamValue& pv) {
  if (pv.kind == ParamValue::Exact) {
    if (pv.exact == CycRat(1)) return 1;
    if (pv.exact == CycRat(-1)) return -1;
  } else if (pv.kind == ParamValue::Complex) {
    if (std::abs(pv.complex - CD(1, 0)) < 1e-12) return 1;
    if (std::abs(pv.complex + CD(1, 0)) < 1e-12) return -1;
  }
  throw BadParams("k must be +1 or -1");
}

}  // namespace

Representation make_family(const FamilyParams& p) {
  Family f = p.family;
  int n = p.n;
  if (n < 3) throw BadStrandCount("families need n >= 3");
  if (f == Family::Psi3 && n != 3) throw BadParams("psi3 exists only for n = 3");

  ParamSpec spec = param_spec(f);
  std::map<std::string, ParamValue> assign;
  for (const auto& [key, pv] : p.assign) assign[canonical_key(f, key)] = pv;

  FamilyLabel label;
  label.family = f;
  for (const auto& name : spec.names) {
    auto it = assign.find(name);
    if (it == assign.end()) {
      if (name == "x" && p.x_root) continue;  // resolved below
      throw BadParams("missing parameter: " + name);
    }
    label.params[name] = it->second.to_string();
  }
  if (p.x_root) label.params["x-root"] = std::to_string(*p.x_root);

  bool any_complex = false, any_sym = false;
  for (const auto& name : spec.names) {
    auto it = assign.find(name);
    if (it == assign.end()) continue;
    any_complex |= it->second.kind == ParamValue::Complex;
    any_sym |= it->second.kind == ParamValue::Sym;
  }
  if (f == Family::Psi3 && any_sym) throw BadParams("psi3 parameters cannot stay symbolic");
  if (any_complex && any_sym)
    throw BadParams("cannot mix symbolic and complex parameters");

  if (f == Family::X || f == Family::Psi3) {
    // k and lambda constraints checked up front
    if (f == Family::X) read_k(assign.at("k"));
  }

  if (any_complex || (f == Family::Psi3 && p.x_root)) {
    std::map<std::string, CD> vals;
    for (const auto& name : spec.names) {
      auto it = assign.find(name);
      if (it == assign.end()) continue;
      vals[name] = it->second.kind == ParamValue::Complex ? it->second.complex
                                                          : it->second.exact.to_complex();
      if (vals[name] == CD(0, 0) && name != "k")
        throw BadParams("parameter must be non-zero: " + name);
    }
    if (f == Family::Psi3) {
      CD z = vals.at("z");
      CD x;
      if (p.x_root) {
        if (*p.x_root < 0 || *p.x_root > 2) throw BadParams("x-root must be 0, 1 or 2");
        x = cube_roots(CD(1, 0) / (z * z))[static_cast<std::size_t>(*p.x_root)];
        label.params["x"] = format_complex(x);
      } else {
        auto it = assign.find("x");
        if (it == assign.end()) throw BadParams("psi3 needs x or x-root");
        x = vals.at("x");
        if (std::abs(x * x * x * z * z - CD(1, 0)) > 1e-9)
          throw BadParams("psi3 side relation x^3 z^2 = 1 violated");
      }
      auto abc = psi3_curve_point(vals.at("lambda"));
      vals["a"] = abc[0];
      vals["b"] = abc[1];
      vals["c"] = abc[2];
      vals["x"] = x;
    }
    return build_family<CD>(f, n, vals, CD(1, 0), std::move(label));
  }

  // exact ring: symbolic parameters become variables, in canonical order
  std::vector<std::string> vars;
  for (const auto& name : spec.names) {
    auto it = assign.find(name);
    if (it != assign.end() && it->second.kind == ParamValue::Sym) vars.push_back(name);
  }
  const Laurent one = Laurent::constant(vars, CycRat(1));
  std::map<std::string, Laurent> vals;
  for (const auto& name : spec.names) {
    auto it = assign.find(name);
    if (it == assign.end()) continue;
    if (it->second.kind == ParamValue::Sym)
      vals[name] = Laurent::variable(vars, name);
    else {
      if (it->second.exact.is_zero() && name != "k")
        throw BadParams("parameter must be non-zero: " + name);
      vals[name] = Laurent::constant(vars, it->second.exact);
    }
  }
  if (f == Family::Psi3) {
    const Laurent& z = vals.at("z");
    const Laurent& x = vals.at("x");
    if (x * x * x * z * z != one) throw BadParams("psi3 side relation x^3 z^2 = 1 violated");
    CurvePoint cp = psi3_curve_point(vals.at("lambda").constant_value());
    vals["a"] = Laurent::constant(vars, cp.a);
    vals["b"] = Laurent::constant(vars, cp.b);
    vals["c"] = Laurent::constant(vars, cp.c);
  }
  LRep rep = build_family<Laurent>(f, n, vals, one, std::move(label));
  // involution invariant: every alpha image squares to the identity
  if (rep.has_alpha()) {
    LMat id = LMat::identity(rep.dim, one);
    for (const auto& a : rep.alpha)
      if (!(a * a == id)) throw BadParams("alpha image does not square to the identity");
  }
  return rep;
}

template <class S>
Mat<S> q_change_of_basis(int n, const S& t) {
  if (n < 3) throw BadStrandCount("change of basis needs n >= 3");
  const S one = ring_one_like(t);
  const S zero = ring_zero_like(t);
  Mat<S> q(n - 1, n - 1, zero);
  auto tpow = [&](int e) {
    S r = one;
    for (int i = 0; i < e; ++i) r = r * t;
    return r;
  };
  for (int i = 1; i <= n - 1; ++i) {
    q(i - 1, i - 1) = zero - tpow(n - 1 - i) * (t + one);
    if (i <= n - 2) {
      q(i - 1, i) = tpow(n - 1 - i);
      q(i, i - 1) = tpow(n - 1 - i);
    }
  }
  return q;
}

template <class S>
std::pair<Mat<S>, Mat<S>> theta_matrix(const RepT<S>& rep) {
  if (rep.sigma.empty()) throw BadParams("representation has no braid images");
  Mat<S> t = rep.sigma[0];
  for (std::size_t i = 1; i < rep.sigma.size(); ++i) t = t * rep.sigma[i];
  if constexpr (std::is_same_v<S, Laurent>) {
    return {t, inverse(t)};
  } else {
    return {t, inverse(t, 1e-13)};
  }
}

namespace {
std::string scalar_to_string(const Laurent& s) { return s.to_string(); }
std::string scalar_to_string(const CD& s) { return format_complex(s); }
}  // namespace

template <class S>
RepT<S> tensor_with_character(const RepT<S>& rep, const S& y, int k) {
  if (k != 1 && k != -1) throw BadParams("k must be +1 or -1");
  if (scalar_is_zero(y, 1e-300)) throw BadParams("y must be a unit");
  if constexpr (std::is_same_v<S, Laurent>) {
    if (!y.is_monomial()) throw BadParams("y must be a unit of the Laurent ring");
  }
  RepT<S> out = rep;
  for (auto& g : out.sigma) g = g.scaled(y);
  if (k == -1) {
    const S mone = ring_zero_like(y) - ring_one_like(y);
    for (auto& a : out.alpha) a = a.scaled(mone);
  }
  out.label.params["tensor-y"] = scalar_to_string(y);
  out.label.params["tensor-k"] = std::to_string(k);
  return out;
}

namespace {

// a(l) = (w l + 1 + w^2 / l)/3, b(l) = (l + 1 + 1/l)/3, c(l) = (w^2 l + 1 + w/l)/3
template <class S>
std::array<S, 3> curve_point_generic(const S& lam, const S& w, const S& one, const S& third) {
  const S w2 = w * w;
  const S linv = one / lam;
  return {third * (w * lam + one + w2 * linv), third * (lam + one + linv),
          third * (w2 * lam + one + w * linv)};
}

}  // namespace

CurvePoint psi3_curve_point(const CycRat& lambda) {
  if (lambda.is_zero()) throw BadParams("lambda must be non-zero");
  auto abc = curve_point_generic<CycRat>(lambda, CycRat::omega(), CycRat(1),
                                         CycRat(Rat(1, 3)));
  return {abc[0], abc[1], abc[2]};
}

std::array<CD, 3> psi3_curve_point(const CD& lambda) {
  if (lambda == CD(0, 0)) throw BadParams("lambda must be non-zero");
  return curve_point_generic<CD>(lambda, CycRat::omega().to_complex(), CD(1, 0),
                                 CD(1.0 / 3.0, 0));
}

std::array<Laurent, 3> psi3_curve_point_symbolic() {
  std::vector<std::string> vars{"lambda"};
  Laurent lam = Laurent::variable(vars, "lambda");
  Laurent w = Laurent::constant(vars, CycRat::omega());
  Laurent one = Laurent::constant(vars, CycRat(1));
  Laurent third = Laurent::constant(vars, CycRat(Rat(1, 3)));
  return curve_point_generic<Laurent>(lam, w, one, third);
}

CycRat psi3_lambda_from_point(const CurvePoint& p) {
  CycRat w = CycRat::omega();
  return w * w * p.a + p.b + w * p.c;
}

CRep specialize_rep_complex(const LRep& rep, const std::map<std::string, CD>& assign) {
  CRep out;
  out.n = rep.n;
  out.dim = rep.dim;
  out.label = rep.label;
  auto conv = [&](const LMat& m) {
    CMat r(m.rows(), m.cols(), CD(0, 0));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).specialize_complex(assign);
    return r;
  };
  for (const auto& g : rep.sigma) out.sigma.push_back(conv(g));
  for (const auto& a : rep.alpha) out.alpha.push_back(conv(a));
  for (const auto& [key, val] : assign) out.label.params[key] = format_complex(val);
  return out;
}

LRep specialize_rep_exact(const LRep& rep, const std::map<std::string, CycRat>& assign) {
  LRep out;
  out.n = rep.n;
  out.dim = rep.dim;
  out.label = rep.label;
  const Laurent zero = Laurent::constant({}, CycRat(0));
  auto conv = [&](const LMat& m) {
    LMat r(m.rows(), m.cols(), zero);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        r(i, j) = Laurent::constant({}, m(i, j).specialize_exact(assign));
    return r;
  };
  for (const auto& g : rep.sigma) out.sigma.push_back(conv(g));
  for (const auto& a : rep.alpha) out.alpha.push_back(conv(a));
  for (const auto& [key, val] : assign) out.label.params[key] = val.to_string();
  return out;
}

template Mat<Laurent> q_change_of_basis(int, const Laurent&);
template Mat<CD> q_change_of_basis(int, const CD&);
template std::pair<LMat, LMat> theta_matrix(const LRep&);
template std::pair<CMat, CMat> theta_matrix(const CRep&);
template LRep tensor_with_character(const LRep&, const Laurent&, int);
template CRep tensor_with_character(const CRep&, const CD&, int);

}  // namespace wrep

#include "wrep/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace wrep {

namespace {

int checked_add(int a, int b) {
  long s = static_cast<long>(a) + static_cast<long>(b);
  if (s > 1000000000L || s < -1000000000L)
    throw ExponentOverflow("Laurent exponent out of range");
  return static_cast<int>(s);
}

}  // namespace

Laurent Laurent::constant(std::vector<std::string> vars, CycRat c) {
  Laurent r(std::move(vars));
  if (!c.is_zero()) r.terms_[Exp(r.vars_.size(), 0)] = std::move(c);
  return r;
}

Laurent Laurent::variable(const std::vector<std::string>& vars, const std::string& name,
                          int power) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw RingMismatch("variable not in ring: " + name);
  Laurent r(vars);
  Exp e(vars.size(), 0);
  e[static_cast<std::size_t>(it - vars.begin())] = power;
  r.terms_[e] = CycRat(1);
  return r;
}

Laurent Laurent::from_terms(std::vector<std::string> vars, std::map<Exp, CycRat> terms) {
  Laurent r(std::move(vars));
  for (auto& [e, c] : terms) {
    if (e.size() != r.vars_.size()) throw RingMismatch("exponent arity mismatch");
    if (!c.is_zero()) r.terms_.emplace(e, std::move(c));
  }
  return r;
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exp& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

CycRat Laurent::constant_value() const {
  if (terms_.empty()) return CycRat(0);
  if (!is_constant()) throw SymbolicInput("Laurent value is not constant");
  return terms_.begin()->second;
}

void Laurent::check_same_ring(const Laurent& y) const {
  if (vars_ != y.vars_) throw RingMismatch("Laurent rings differ");
}

void Laurent::add_term(const Exp& e, const CycRat& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Laurent operator+(const Laurent& x, const Laurent& y) {
  x.check_same_ring(y);
  Laurent r = x;
  for (const auto& [e, c] : y.terms_) r.add_term(e, c);
  return r;
}

Laurent operator-(const Laurent& x, const Laurent& y) {
  x.check_same_ring(y);
  Laurent r = x;
  for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
  return r;
}

Laurent operator-(const Laurent& x) {
  Laurent r(x.vars_);
  for (const auto& [e, c] : x.terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent operator*(const Laurent& x, const Laurent& y) {
  x.check_same_ring(y);
  Laurent r(x.vars_);
  Laurent::Exp e(x.vars_.size());
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ex[i], ey[i]);
      r.add_term(e, cx * cy);
    }
  }
  return r;
}

Laurent operator/(const Laurent& x, const Laurent& unit) {
  x.check_same_ring(unit);
  if (unit.is_zero()) throw DivisionByZero("Laurent: division by zero");
  if (!unit.is_monomial())
    throw NonUnitDivisor("Laurent: divisor is not a single-term unit");
  return x * unit.inverse();
}

Laurent Laurent::inverse() const {
  if (is_zero()) throw DivisionByZero("Laurent: inverse of zero");
  if (!is_monomial()) throw NonUnitDivisor("Laurent: inverse of a non-unit");
  const auto& [e, c] = *terms_.begin();
  Exp inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  Laurent r(vars_);
  r.terms_.emplace(std::move(inv), c.inverse());
  return r;
}

Laurent Laurent::div_exact(const Laurent& x, const Laurent& y) {
  x.check_same_ring(y);
  if (y.is_zero()) throw DivisionByZero("Laurent: exact division by zero");
  if (y.is_monomial()) return x * y.inverse();
  // leading-term reduction; terminates after #terms(quotient) steps when the
  // division is exact (the remainder stays a multiple of y throughout)
  Laurent rem = x, quot(x.vars_);
  const auto& ylead = *y.terms_.rbegin();
  std::size_t guard = x.terms_.size() * y.terms_.size() + x.terms_.size() + 16;
  while (!rem.is_zero()) {
    if (guard-- == 0) throw Error("Laurent::div_exact: inexact division");
    const auto& rlead = *rem.terms_.rbegin();
    Exp e(rlead.first.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(rlead.first[i], -ylead.first[i]);
    CycRat c = rlead.second / ylead.second;
    Laurent t(x.vars_);
    t.terms_.emplace(std::move(e), std::move(c));
    quot += t;
    rem -= t * y;
  }
  return quot;
}

Laurent Laurent::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Laurent acc = Laurent::constant(vars_, CycRat(1));
  Laurent base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

CycRat Laurent::specialize_exact(const std::map<std::string, CycRat>& assign) const {
  std::vector<CycRat> vals;
  std::vector<char> inverted(vars_.size(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0) inverted[i] = 1;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assign.find(vars_[i]);
    if (it == assign.end()) throw UnassignedVariable("unassigned variable: " + vars_[i]);
    if (it->second.is_zero() && inverted[i])
      throw ZeroAssignedToInvertedVariable("zero assigned to inverted variable: " + vars_[i]);
    vals.push_back(it->second);
  }
  CycRat acc(0);
  for (const auto& [e, c] : terms_) {
    CycRat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= vals[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

CD Laurent::specialize_complex(const std::map<std::string, CD>& assign) const {
  std::vector<CD> vals;
  std::vector<char> inverted(vars_.size(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0) inverted[i] = 1;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assign.find(vars_[i]);
    if (it == assign.end()) throw UnassignedVariable("unassigned variable: " + vars_[i]);
    if (it->second == CD(0, 0) && inverted[i])
      throw ZeroAssignedToInvertedVariable("zero assigned to inverted variable: " + vars_[i]);
    vals.push_back(it->second);
  }
  CD acc(0, 0);
  for (const auto& [e, c] : terms_) {
    CD t = c.to_complex();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= std::pow(vals[i], e[i]);
    acc += t;
  }
  return acc;
}

Laurent Laurent::substitute(const std::map<std::string, CycRat>& assign) const {
  std::vector<std::string> kept;
  std::vector<int> kept_idx;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (!assign.count(vars_[i])) {
      kept.push_back(vars_[i]);
      kept_idx.push_back(static_cast<int>(i));
    }
  Laurent r(kept);
  for (const auto& [e, c] : terms_) {
    CycRat coeff = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto it = assign.find(vars_[i]);
      if (it == assign.end()) continue;
      if (it->second.is_zero() && e[i] < 0)
        throw ZeroAssignedToInvertedVariable("zero assigned to inverted variable: " + vars_[i]);
      if (e[i] != 0) coeff *= it->second.pow(e[i]);
    }
    Exp ke(kept.size());
    for (std::size_t j = 0; j < kept_idx.size(); ++j) ke[j] = e[kept_idx[j]];
    r.add_term(ke, coeff);
  }
  return r;
}

CD Laurent::to_complex() const { return constant_value().to_complex(); }

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Laurent poly_p(int deg, const std::string& var) {
  if (deg < 2) throw BadDegree("poly_p: degree must be at least 2");
  std::vector<std::string> vars{var};
  Laurent r(vars);
  std::map<Laurent::Exp, CycRat> terms;
  for (int k = 0; k < deg; ++k) terms[{k}] = CycRat(1);
  return Laurent::from_terms(vars, std::move(terms));
}

}  // namespace wrep

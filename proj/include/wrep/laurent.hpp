#ifndef WREP_LAURENT_HPP
#define WREP_LAURENT_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wrep/cyclotomic.hpp"
#include "wrep/errors.hpp"

namespace wrep {

using CD = std::complex<double>;

// Multivariate Laurent polynomial over Q(w).  The variable list is the ring
// tag: two values interoperate only if their lists agree.  Stored in canonical
// form (no zero coefficients), so structural equality is ring equality.
// An empty variable list makes the ring the field Q(w) itself.
class Laurent {
 public:
  using Exp = std::vector<int>;

  Laurent() = default;
  explicit Laurent(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Laurent constant(std::vector<std::string> vars, CycRat c);
  static Laurent variable(const std::vector<std::string>& vars, const std::string& name,
                          int power = 1);
  static Laurent from_terms(std::vector<std::string> vars,
                            std::map<Exp, CycRat> terms);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exp, CycRat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // single term with invertible coefficient: the units of the Laurent ring
  bool is_monomial() const { return terms_.size() == 1; }
  CycRat constant_value() const;  // requires is_constant()

  friend Laurent operator+(const Laurent& x, const Laurent& y);
  friend Laurent operator-(const Laurent& x, const Laurent& y);
  friend Laurent operator-(const Laurent& x);
  friend Laurent operator*(const Laurent& x, const Laurent& y);
  Laurent& operator+=(const Laurent& y) { *this = *this + y; return *this; }
  Laurent& operator-=(const Laurent& y) { *this = *this - y; return *this; }
  Laurent& operator*=(const Laurent& y) { *this = *this * y; return *this; }

  // division by a unit (single-term) divisor
  friend Laurent operator/(const Laurent& x, const Laurent& unit);
  Laurent inverse() const;  // requires is_monomial()

  // exact quotient x/y when y divides x in the ring (used by fraction-free
  // elimination, where divisibility is guaranteed); throws otherwise
  static Laurent div_exact(const Laurent& x, const Laurent& y);

  Laurent pow(long e) const;

  friend bool operator==(const Laurent& x, const Laurent& y) {
    return x.vars_ == y.vars_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const Laurent& x, const Laurent& y) { return !(x == y); }

  // evaluation; every variable must be assigned
  CycRat specialize_exact(const std::map<std::string, CycRat>& assign) const;
  CD specialize_complex(const std::map<std::string, CD>& assign) const;
  // partial assignment: substitutes exact values for a subset of variables,
  // result lives in the ring on the remaining variables
  Laurent substitute(const std::map<std::string, CycRat>& assign) const;

  CD to_complex() const;  // requires is_constant()

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exp, CycRat> terms_;

  void check_same_ring(const Laurent& y) const;
  void add_term(const Exp& e, const CycRat& c);
};

// 1 + t + ... + t^(deg-1); deg >= 2
Laurent poly_p(int deg, const std::string& var);

}  // namespace wrep

#endif

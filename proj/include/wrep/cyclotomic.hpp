#ifndef WREP_CYCLOTOMIC_HPP
#define WREP_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <complex>
#include <string>

#include "wrep/errors.hpp"

namespace wrep {

using Rat = mpq_class;

Rat rat_from_string(const std::string& s);  // "p/q" or "p", optional sign
std::string rat_to_string(const Rat& r);

// Element a + b*w of the field Q(w), where w is a primitive cube root of
// unity: w^2 = -1 - w.  Exact arithmetic, decidable equality.
class CycRat {
 public:
  CycRat() : a_(0), b_(0) {}
  CycRat(long v) : a_(v), b_(0) {}  // NOLINT: implicit on purpose
  CycRat(const Rat& a) : a_(a), b_(0) { a_.canonicalize(); }
  CycRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static CycRat omega() { return CycRat(Rat(0), Rat(1)); }

  const Rat& re_part() const { return a_; }   // coefficient of 1
  const Rat& om_part() const { return b_; }   // coefficient of w

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  friend CycRat operator+(const CycRat& x, const CycRat& y) {
    return CycRat(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend CycRat operator-(const CycRat& x, const CycRat& y) {
    return CycRat(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend CycRat operator-(const CycRat& x) { return CycRat(-x.a_, -x.b_); }
  friend CycRat operator*(const CycRat& x, const CycRat& y) {
    // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
    Rat ww = x.b_ * y.b_;
    return CycRat(x.a_ * y.a_ - ww, x.a_ * y.b_ + x.b_ * y.a_ - ww);
  }
  CycRat inverse() const {
    // conjugate is a + b*w^2 = (a - b) - b*w; norm = a^2 - a*b + b^2
    Rat n = a_ * a_ - a_ * b_ + b_ * b_;
    if (n == 0) throw DivisionByZero("CycRat: division by zero");
    return CycRat((a_ - b_) / n, -b_ / n);
  }
  friend CycRat operator/(const CycRat& x, const CycRat& y) { return x * y.inverse(); }

  CycRat& operator+=(const CycRat& y) { a_ += y.a_; b_ += y.b_; return *this; }
  CycRat& operator-=(const CycRat& y) { a_ -= y.a_; b_ -= y.b_; return *this; }
  CycRat& operator*=(const CycRat& y) { *this = *this * y; return *this; }

  friend bool operator==(const CycRat& x, const CycRat& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const CycRat& x, const CycRat& y) { return !(x == y); }
  friend bool operator<(const CycRat& x, const CycRat& y) {  // ordering for canonical maps
    int c = cmp(x.a_, y.a_);
    if (c != 0) return c < 0;
    return cmp(x.b_, y.b_) < 0;
  }

  CycRat pow(long e) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;               // e.g. "2/3", "w", "1-2w"
  static CycRat from_string(const std::string& s);

 private:
  Rat a_, b_;
};

}  // namespace wrep

#endif

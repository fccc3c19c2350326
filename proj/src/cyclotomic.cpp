#include "wrep/cyclotomic.hpp"

#include <cmath>
#include <cstdlib>

namespace wrep {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw ParseError("bad rational literal: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

CycRat CycRat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycRat acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::complex<double> CycRat::to_complex() const {
  static const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
  return std::complex<double>(a_.get_d(), 0.0) + std::complex<double>(b_.get_d(), 0.0) * w;
}

std::string CycRat::to_string() const {
  if (b_ == 0) return rat_to_string(a_);
  std::string wpart = (b_ == 1) ? "w" : (b_ == -1 ? "-w" : rat_to_string(b_) + "w");
  if (a_ == 0) return wpart;
  if (sgn(b_) > 0) return rat_to_string(a_) + "+" + wpart;
  return rat_to_string(a_) + wpart;
}

CycRat CycRat::from_string(const std::string& s) {
  // accepts the output of to_string(): "a", "bw", "a+bw", "a-bw", "w", "-w"
  auto wpos = s.find('w');
  if (wpos == std::string::npos) return CycRat(rat_from_string(s));
  // split off the w coefficient: scan back from 'w' to the sign separating a
  std::string head = s.substr(0, wpos);
  if (head.empty() || head == "-" || head == "+")
    return CycRat(Rat(0), head == "-" ? Rat(-1) : Rat(1));
  // find the last top-level +/- that separates the rational part
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size() - 1; i > 0; --i) {
    char c = head[i];
    if ((c == '+' || c == '-') && head[i - 1] != '/' && head[i - 1] != '+' && head[i - 1] != '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return CycRat(Rat(0), rat_from_string(head));
  std::string bpart = head.substr(split);
  if (bpart == "+") bpart = "1";
  if (bpart == "-") bpart = "-1";
  return CycRat(rat_from_string(head.substr(0, split)), rat_from_string(bpart));
}

}  // namespace wrep

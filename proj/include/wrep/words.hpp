#ifndef WREP_WORDS_HPP
#define WREP_WORDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "wrep/errors.hpp"

namespace wrep {

// Generators of the welded braid group on n strands: braid letters s1..s(n-1)
// and permutation letters a1..a(n-1).  Permutation letters are involutions,
// so their power is always normalized to +1.
struct Generator {
  enum Kind { Sigma, Alpha };
  Kind kind = Sigma;
  int index = 1;   // 1..n-1
  int power = 1;   // +1 or -1; Alpha always +1

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.index == b.index && a.power == b.power;
  }
};

inline Generator sigma(int i, int power = 1) { return {Generator::Sigma, i, power}; }
inline Generator alpha(int i) { return {Generator::Alpha, i, 1}; }

// Word in the group generators, freely reduced: adjacent s_i s_i^-1 and
// a_i a_i pairs cancel.  Multiplication reads left to right.
class GroupWord {
 public:
  explicit GroupWord(int n) : n_(n) { check_n(n); }
  GroupWord(int n, std::vector<Generator> letters);

  // bypasses reduction; used only to spell out defining relations verbatim
  static GroupWord raw(int n, std::vector<Generator> letters);

  int strands() const { return n_; }
  const std::vector<Generator>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  GroupWord concat(const GroupWord& other) const;
  GroupWord inverted() const;
  GroupWord commutator(const GroupWord& other) const;  // w * o * w^-1 * o^-1
  GroupWord power(int k) const;

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.n_ == b.n_ && a.letters_ == b.letters_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::vector<Generator> letters_;

  static void check_n(int n);
  void check_letter(const Generator& g) const;
  void reduce();
};

GroupWord theta(int n);        // s1 s2 ... s(n-1)
GroupWord sigma_zero(int n);   // theta s(n-1) theta^-1, the redundant braid generator

struct RelationPair {
  std::string id;  // e.g. "(7)@i=2"
  GroupWord lhs, rhs;
};

// The defining relations, as equal-word pairs:
//   (1) a_i^2 = 1
//   (2) a_i a_j = a_j a_i          |i-j| >= 2
//   (3) a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1}
//   (4) s_i s_j = s_j s_i          |i-j| >= 2
//   (5) s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
//   (6) a_i s_j = s_j a_i          |i-j| >= 2 (one pair per unordered {i,j})
//   (7) a_i a_{i+1} s_i = s_{i+1} a_i a_{i+1}
//   (8) s_i s_{i+1} a_i = a_{i+1} s_i s_{i+1}
// Count: (n-1) + 3(n-2)(n-3)/2 + 4(n-2).
std::vector<RelationPair> relators(int n);

// Consequences of the defining relations, kept as an extra checklist:
//   (a) s_i a_{i+1} a_i = a_{i+1} a_i s_{i+1}
//   (b) s_{i+1} = theta s_i theta^-1
//   (c) a_{i+1} = theta a_i theta^-1
//   (d) (a_i a_{i+1})^3 = 1
std::vector<RelationPair> derived_identities(int n);

std::vector<RelationPair> braid_only_relators(int n);  // (4) and (5)

// Text grammar: whitespace-separated tokens s<i>, S<i> (inverse), a<i>,
// theta, THETA (inverse); '#' starts a comment.
GroupWord parse_word(const std::string& text, int n);

}  // namespace wrep

#endif

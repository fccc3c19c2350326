#ifndef WREP_FAMILIES_HPP
#define WREP_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wrep/matrix.hpp"

namespace wrep {

enum class Family { Chi, X, BurauW, BurauV, Tau, TildeBeta, HatBeta, TildeTau, Psi3 };

std::string family_name(Family f);          // "tilde-beta", "psi3", ...
Family family_from_name(const std::string&);

struct FamilyLabel {
  std::optional<Family> family;
  std::map<std::string, std::string> params;  // printable parameter record
};

// A welded braid group representation: generator images for s_1..s_{n-1} and
// (when present) a_1..a_{n-1}.  Braid-only families leave alpha empty.
template <class S>
struct RepT {
  int n = 0;
  int dim = 0;
  std::vector<Mat<S>> sigma;
  std::vector<Mat<S>> alpha;
  FamilyLabel label;

  bool has_alpha() const { return !alpha.empty(); }
};

using LRep = RepT<Laurent>;
using CRep = RepT<CD>;
using Representation = std::variant<LRep, CRep>;

int rep_n(const Representation& r);
int rep_dim(const Representation& r);
bool rep_has_alpha(const Representation& r);

struct ParamValue {
  enum Kind { Sym, Exact, Complex } kind = Sym;
  CycRat exact;
  CD complex{0, 0};

  static ParamValue sym() { return {}; }
  static ParamValue of(CycRat v) { return {Exact, std::move(v), CD(0, 0)}; }
  static ParamValue of(CD v) { return {Complex, CycRat(0), v}; }
  // "sym", rationals ("3/2"), Q(w) values ("1-2w"), complex ("0.7+0.2i", "1e-3")
  static ParamValue parse(const std::string& text);
  std::string to_string() const;
};

struct FamilyParams {
  Family family = Family::TildeTau;
  int n = 3;
  std::map<std::string, ParamValue> assign;  // keys among t,q,y,k,z,lambda,x
  std::optional<int> x_root;                 // cube-root pick for psi3 (0..2)
};

Representation make_family(const FamilyParams& p);

// tridiagonal change of basis between the two Burau bases; columns are the
// second basis written in the first
template <class S>
Mat<S> q_change_of_basis(int n, const S& t);

// image of the full twist root theta = s_1...s_{n-1} and its inverse
template <class S>
std::pair<Mat<S>, Mat<S>> theta_matrix(const RepT<S>& rep);

// tensor with the one-dimensional representation sending every s to y and
// every a to k
template <class S>
RepT<S> tensor_with_character(const RepT<S>& rep, const S& y, int k);

// point (a, b, c) on the curve a+b+c = 1, a^2+b^2+c^2 = 1 that parametrizes
// the exceptional three-strand extensions; exact over Q(w)
struct CurvePoint {
  CycRat a, b, c;
};
CurvePoint psi3_curve_point(const CycRat& lambda);
std::array<CD, 3> psi3_curve_point(const CD& lambda);
std::array<Laurent, 3> psi3_curve_point_symbolic();  // in the ring Q(w)[lambda^(+-1)]
// inverse of the parametrization: lambda = w^2 a + b + w c
CycRat psi3_lambda_from_point(const CurvePoint& p);

// evaluate every entry of a symbolic representation
CRep specialize_rep_complex(const LRep& rep, const std::map<std::string, CD>& assign);
LRep specialize_rep_exact(const LRep& rep, const std::map<std::string, CycRat>& assign);

extern template Mat<Laurent> q_change_of_basis(int, const Laurent&);
extern template Mat<CD> q_change_of_basis(int, const CD&);
extern template std::pair<LMat, LMat> theta_matrix(const LRep&);
extern template std::pair<CMat, CMat> theta_matrix(const CRep&);
extern template LRep tensor_with_character(const LRep&, const Laurent&, int);
extern template CRep tensor_with_character(const CRep&, const CD&, int);

}  // namespace wrep

#endif

#ifndef WREP_CLASSIFY_HPP
#define WREP_CLASSIFY_HPP

#include <random>

#include "wrep/analysis.hpp"
#include "wrep/config.hpp"

namespace wrep {

// Which classification case an extension falls under:
//   burau-extension            restriction is a reduced Burau specialization
//   burau-extension-scaled     same, after removing a character twist y != 1
//   standard-extension         restriction is a standard (Tong-Yang-Ma)
//                              specialization
//   standard-extension-scaled  same, with a character twist y != 1
//   standard-extension-exceptional  the three-strand family outside the
//                              standard pattern
template <class S>
struct ClassificationT {
  std::string kind;
  Family family = Family::TildeTau;  // TildeBeta, HatBeta, TildeTau or Psi3
  S y{};
  int k = 1;
  S z{};
  std::optional<S> lambda;  // TildeTau and Psi3
  std::optional<S> x;       // Psi3 cube-root parameter
  // input(g) = C * model(g) * C^-1 for every generator g
  std::optional<Mat<S>> certificate;
  std::optional<RepT<S>> model;  // X(y,k) tensor family at the recovered parameters
};

using ClassificationC = ClassificationT<CD>;
using ClassificationL = ClassificationT<Laurent>;

// Recovers (y, k, z, family, extra parameters) and an invertible certificate
// from an extension whose braid restriction is irreducible.  Throws
// NotAnExtension / OutOfClassifiedRange / Indeterminate.
template <class S>
ClassificationT<S> identify_extension(const RepT<S>& rep, double eps);

extern template ClassificationL identify_extension(const LRep&, double);
extern template ClassificationC identify_extension(const CRep&, double);

struct SearchSolution {
  CMat a1;
  double residual = 0;
  int manifold_dim = 0;  // real dimension of the local solution manifold
  int cluster_size = 1;
  std::optional<ClassificationC> family;
};

struct SearchReport {
  int n = 0;
  Family restriction = Family::Tau;
  CD z{0, 0};
  int starts = 0;
  int converged = 0;
  std::uint64_t seed = 0;
  std::vector<SearchSolution> clusters;
};

// Finds every alpha_1 image compatible with the fixed braid images: the
// remaining alpha images are forced by conjugation with the full twist root.
// Damped Gauss-Newton from seeded random starts; converged solutions are
// clustered and identified.
SearchReport extension_search(int n, Family restriction, CD z, int starts,
                              std::uint64_t seed, const Config& cfg = Config{});

struct DistinctnessEntry {
  std::size_t i = 0, j = 0;
  bool expected_equivalent = false;
  Tristate got = Tristate::No;
  bool ok = false;
};

struct DistinctnessReport {
  std::vector<DistinctnessEntry> entries;
  bool ok = true;
};

// Pairwise equivalence over a parameter grid, checked against the expected
// table (equal parameters match; the z = 1 Burau collapse and the lambda = 1
// exceptional collapse are the only cross-family equivalences).
DistinctnessReport verify_pairwise_distinctness(const std::vector<FamilyParams>& grid,
                                                double eps, std::uint64_t seed = 0);

// helpers shared with the tests and the search
template <class S>
RepT<S> conjugate_rep(const RepT<S>& rep, const Mat<S>& p);
extern template LRep conjugate_rep(const LRep&, const LMat&);
extern template CRep conjugate_rep(const CRep&, const CMat&);

CMat random_invertible_complex(int dim, std::mt19937_64& rng);
LMat random_unimodular_exact(int dim, std::mt19937_64& rng);

}  // namespace wrep

#endif

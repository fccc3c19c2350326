#ifndef WREP_ANALYSIS_HPP
#define WREP_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrep/families.hpp"
#include "wrep/words.hpp"

namespace wrep {

enum class GenSelect { All, SigmaOnly, AlphaOnly };

struct RelationFailure {
  std::string id;
  double deviation;  // entrywise max |difference|, cast to complex for exact rings
};

struct VerificationReport {
  int total_relations = 0;
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
};

template <class S>
Mat<S> image_of_word(const RepT<S>& rep, const GroupWord& w);

// evaluates every defining relation; failures are data, not errors.
// Braid-only representations are checked against the braid relations alone.
template <class S>
VerificationReport check_relations(const RepT<S>& rep, double eps);

// defining relations plus the derived checklist (index-shift conjugations etc.)
template <class S>
VerificationReport check_relations_extended(const RepT<S>& rep, double eps);

// dimension of the matrix algebra generated by the selected images
template <class S>
int algebra_dimension(const RepT<S>& rep, GenSelect sel, double eps);

// a complex representation is irreducible iff its images generate the full
// matrix algebra (span dimension dim^2)
template <class S>
bool burnside_irreducible(const RepT<S>& rep, GenSelect sel, double eps);

// proper nonzero invariant subspace (columns of the returned matrix), or
// nullopt exactly when the Burnside test reports irreducible
template <class S>
std::optional<Mat<S>> find_invariant_subspace(const RepT<S>& rep, GenSelect sel, double eps,
                                              std::uint64_t seed = 0);

template <class S>
struct IntertwinerSpace {
  int dim = 0;
  std::vector<Mat<S>> basis;  // each P satisfies P r1(g) = r2(g) P for all g
};

template <class S>
IntertwinerSpace<S> intertwiners(const RepT<S>& r1, const RepT<S>& r2,
                                 GenSelect sel, double eps);

enum class Tristate { Yes, No, Maybe };

template <class S>
struct EquivalenceResult {
  Tristate equivalent = Tristate::No;
  std::optional<Mat<S>> witness;  // invertible P with P r1 P^-1 = r2
  int intertwiner_dim = 0;
};

template <class S>
EquivalenceResult<S> are_equivalent(const RepT<S>& r1, const RepT<S>& r2, double eps,
                                    std::uint64_t seed = 0);

struct EigenStructure {
  int mult_plus = 0;
  int mult_minus = 0;
};

// eigenvalue multiplicities of an involution image a_i (eigenvalues +-1)
template <class S>
EigenStructure alpha_eigen_structure(const RepT<S>& rep, int i, double eps);

// c when theta^n maps to c*I; nullopt when the image is not scalar
template <class S>
std::optional<S> center_image(const RepT<S>& rep, double eps);

// word w != 1 in the group (checked against the free-group action) whose
// image is the identity matrix; certifies non-faithfulness
template <class S>
GroupWord nonfaithful_witness(const RepT<S>& rep, double eps,
                              std::size_t max_letters = 1000000);

#define WREP_ANALYSIS_EXTERN(S)                                                        \
  extern template Mat<S> image_of_word(const RepT<S>&, const GroupWord&);              \
  extern template VerificationReport check_relations(const RepT<S>&, double);          \
  extern template VerificationReport check_relations_extended(const RepT<S>&, double); \
  extern template int algebra_dimension(const RepT<S>&, GenSelect, double);            \
  extern template bool burnside_irreducible(const RepT<S>&, GenSelect, double);        \
  extern template std::optional<Mat<S>> find_invariant_subspace(                       \
      const RepT<S>&, GenSelect, double, std::uint64_t);                               \
  extern template IntertwinerSpace<S> intertwiners(const RepT<S>&, const RepT<S>&,     \
                                                   GenSelect, double);                 \
  extern template EquivalenceResult<S> are_equivalent(const RepT<S>&, const RepT<S>&,  \
                                                      double, std::uint64_t);          \
  extern template EigenStructure alpha_eigen_structure(const RepT<S>&, int, double);   \
  extern template std::optional<S> center_image(const RepT<S>&, double);               \
  extern template GroupWord nonfaithful_witness(const RepT<S>&, double, std::size_t)

WREP_ANALYSIS_EXTERN(Laurent);
WREP_ANALYSIS_EXTERN(CD);
#undef WREP_ANALYSIS_EXTERN

}  // namespace wrep

#endif

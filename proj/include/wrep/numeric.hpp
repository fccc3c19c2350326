#ifndef WREP_NUMERIC_HPP
#define WREP_NUMERIC_HPP

#include <string>
#include <vector>

#include "wrep/matrix.hpp"

namespace wrep {

// "a+bi" complex literals used on the command line and in JSON parameters
CD parse_complex(const std::string& text);
std::string format_complex(const CD& z);

std::vector<CD> eigenvalues(const CMat& a);

// eigenvalues grouped within reltol of each other, each with its multiplicity
// and the cluster mean (accurate for semisimple multiple eigenvalues)
struct EigenCluster {
  CD value;
  int multiplicity;
};
std::vector<EigenCluster> eigenvalue_clusters(const CMat& a, double reltol = 1e-6);

// right eigenvector candidates of a (one per eigenvalue cluster)
std::vector<CMat> eigenvector_candidates(const CMat& a, double eps);

// minimum-norm-ish least squares solve of A x = b (complex, dense)
CMat lstsq(const CMat& a, const CMat& b);

// singular values, descending
std::vector<double> singular_values(const CMat& a);

// three cube roots of w, ordered by principal argument
std::vector<CD> cube_roots(const CD& w);

}  // namespace wrep

#endif

#include "wrep/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wrep/fn_action.hpp"
#include "wrep/numeric.hpp"

namespace wrep {

namespace {

template <class S>
double deviation_of(const Mat<S>& a, const Mat<S>& b) {
  if constexpr (std::is_same_v<S, CD>) {
    return max_abs_diff(a, b);
  } else {
    return max_abs_diff(to_complex(a), to_complex(b));
  }
}

template <class S>
bool mats_equal(const Mat<S>& a, const Mat<S>& b, double eps) {
  if constexpr (std::is_same_v<S, CD>)
    return max_abs_diff(a, b) <= eps;
  else
    return a == b;
}

template <class S>
std::vector<const Mat<S>*> selected_images(const RepT<S>& rep, GenSelect sel) {
  std::vector<const Mat<S>*> out;
  if (sel != GenSelect::AlphaOnly)
    for (const auto& g : rep.sigma) out.push_back(&g);
  if (sel != GenSelect::SigmaOnly) {
    if (!rep.has_alpha()) throw MissingAlphaImages("representation has no alpha images");
    for (const auto& a : rep.alpha) out.push_back(&a);
  }
  return out;
}

template <class S>
void require_evaluated(const RepT<S>& rep) {
  if constexpr (std::is_same_v<S, Laurent>) {
    if (!rep.sigma.empty()) require_field(rep.sigma[0]);
  }
  (void)rep;
}

// incremental span of vectors over the scalar field: exact echelon rows for
// the evaluated Laurent ring, modified Gram-Schmidt for the numeric ring
template <class S>
class SpanBuilder {
 public:
  explicit SpanBuilder(double eps) : eps_(eps) {}

  bool add(std::vector<S> v) {
    reduce(v);
    if (is_zero_vec(v)) return false;
    normalize(v);
    rows_.push_back(std::move(v));
    if constexpr (!std::is_same_v<S, CD>) {
      std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) {
        return pivot_of(a) < pivot_of(b);
      });
    }
    return true;
  }

  bool contains(std::vector<S> v) const {
    reduce(v);
    return is_zero_vec(v);
  }

  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<S>>& rows() const { return rows_; }

 private:
  double eps_;
  std::vector<std::vector<S>> rows_;

  static std::size_t pivot_of(const std::vector<S>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!scalar_is_zero(v[i], 0.0)) return i;
    return v.size();
  }

  bool is_zero_vec(const std::vector<S>& v) const {
    if constexpr (std::is_same_v<S, CD>) {
      double norm = 0;
      for (const auto& x : v) norm = std::max(norm, std::abs(x));
      return norm <= eps_;
    } else {
      return std::all_of(v.begin(), v.end(), [](const S& x) { return x.is_zero(); });
    }
  }

  void normalize(std::vector<S>& v) const {
    if constexpr (std::is_same_v<S, CD>) {
      double norm = 0;
      for (const auto& x : v) norm += std::norm(x);
      norm = std::sqrt(norm);
      for (auto& x : v) x /= norm;
    } else {
      const S p = v[pivot_of(v)];
      for (auto& x : v) x = x / p;
    }
  }

  void reduce(std::vector<S>& v) const {
    if constexpr (std::is_same_v<S, CD>) {
      double orig = 0;
      for (const auto& x : v) orig += std::norm(x);
      orig = std::sqrt(orig);
      if (orig == 0) return;
      for (auto& x : v) x /= orig;
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& row : rows_) {
          CD proj(0, 0);
          for (std::size_t i = 0; i < v.size(); ++i) proj += std::conj(row[i]) * v[i];
          for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * row[i];
        }
      }
    } else {
      for (const auto& row : rows_) {
        std::size_t p = pivot_of(row);
        if (p >= v.size() || scalar_is_zero(v[p], 0.0)) continue;
        const S f = v[p];
        for (std::size_t i = p; i < v.size(); ++i) v[i] = v[i] - f * row[i];
      }
    }
  }
};

template <class S>
std::vector<S> vectorize(const Mat<S>& m) {
  std::vector<S> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
  return v;
}

template <class S>
std::vector<S> column_of(const Mat<S>& m, int j) {
  std::vector<S> v;
  for (int i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
  return v;
}

template <class S>
Mat<S> columns_to_mat(const std::vector<std::vector<S>>& cols, const S& proto_zero) {
  Mat<S> m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()), proto_zero);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i)
      m(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
  return m;
}

}  // namespace

template <class S>
Mat<S> image_of_word(const RepT<S>& rep, const GroupWord& w) {
  if (w.strands() != rep.n) throw StrandMismatch("word strand count differs from representation");
  const S one = ring_one_like(rep.sigma.at(0).proto());
  Mat<S> acc = Mat<S>::identity(rep.dim, one);
  std::vector<std::optional<Mat<S>>> sigma_inv(rep.sigma.size());
  for (const Generator& g : w.letters()) {
    if (g.kind == Generator::Alpha) {
      if (!rep.has_alpha()) throw MissingAlphaImages("word uses alpha letters");
      acc = acc * rep.alpha[static_cast<std::size_t>(g.index - 1)];
    } else if (g.power > 0) {
      acc = acc * rep.sigma[static_cast<std::size_t>(g.index - 1)];
    } else {
      auto& slot = sigma_inv[static_cast<std::size_t>(g.index - 1)];
      if (!slot) {
        if constexpr (std::is_same_v<S, CD>)
          slot = inverse(rep.sigma[static_cast<std::size_t>(g.index - 1)], 1e-13);
        else
          slot = inverse(rep.sigma[static_cast<std::size_t>(g.index - 1)]);
      }
      acc = acc * *slot;
    }
  }
  return acc;
}

namespace {

template <class S>
VerificationReport check_pairs(const RepT<S>& rep, const std::vector<RelationPair>& pairs,
                               double eps) {
  VerificationReport report;
  report.total_relations = static_cast<int>(pairs.size());
  for (const auto& rel : pairs) {
    Mat<S> lhs = image_of_word(rep, rel.lhs);
    Mat<S> rhs = image_of_word(rep, rel.rhs);
    if (!mats_equal(lhs, rhs, eps))
      report.failures.push_back({rel.id, deviation_of(lhs, rhs)});
  }
  return report;
}

}  // namespace

template <class S>
VerificationReport check_relations(const RepT<S>& rep, double eps) {
  auto pairs = rep.has_alpha() ? relators(rep.n) : braid_only_relators(rep.n);
  return check_pairs(rep, pairs, eps);
}

template <class S>
VerificationReport check_relations_extended(const RepT<S>& rep, double eps) {
  std::vector<RelationPair> pairs =
      rep.has_alpha() ? relators(rep.n) : braid_only_relators(rep.n);
  if (rep.has_alpha()) {
    auto extra = derived_identities(rep.n);
    pairs.insert(pairs.end(), extra.begin(), extra.end());
  } else {
    for (auto& rel : derived_identities(rep.n))
      if (rel.id[1] == 'b') pairs.push_back(std::move(rel));
  }
  return check_pairs(rep, pairs, eps);
}

template <class S>
int algebra_dimension(const RepT<S>& rep, GenSelect sel, double eps) {
  require_evaluated(rep);
  auto gens = selected_images(rep, sel);
  const int r = rep.dim;
  const S one = ring_one_like(rep.sigma.at(0).proto());
  SpanBuilder<S> span(eps);
  std::vector<Mat<S>> frontier{Mat<S>::identity(r, one)};
  span.add(vectorize(frontier[0]));
  while (!frontier.empty() && span.dim() < r * r) {
    std::vector<Mat<S>> next;
    for (const auto& f : frontier) {
      for (const auto* g : gens) {
        Mat<S> prod = (*g) * f;
        if (span.add(vectorize(prod))) next.push_back(std::move(prod));
        if (span.dim() == r * r) return span.dim();
      }
    }
    frontier = std::move(next);
  }
  return span.dim();
}

template <class S>
bool burnside_irreducible(const RepT<S>& rep, GenSelect sel, double eps) {
  return algebra_dimension(rep, sel, eps) == rep.dim * rep.dim;
}

namespace {

// smallest invariant subspace containing v: closure of span{v} under the images
template <class S>
std::optional<Mat<S>> spin_vector(const std::vector<const Mat<S>*>& gens,
                                  const std::vector<S>& v, int dim, double eps,
                                  const S& proto_zero) {
  SpanBuilder<S> span(eps);
  if (!span.add(v)) return std::nullopt;  // zero vector
  std::vector<std::vector<S>> frontier{v};
  while (!frontier.empty() && span.dim() < dim) {
    std::vector<std::vector<S>> next;
    for (const auto& f : frontier) {
      for (const auto* g : gens) {
        std::vector<S> w(static_cast<std::size_t>(dim), proto_zero);
        for (int i = 0; i < dim; ++i) {
          S acc = proto_zero;
          for (int j = 0; j < dim; ++j) acc = acc + (*g)(i, j) * f[static_cast<std::size_t>(j)];
          w[static_cast<std::size_t>(i)] = acc;
        }
        if (span.add(w)) next.push_back(std::move(w));
        if (span.dim() == dim) return std::nullopt;  // spun up to everything
      }
    }
    frontier = std::move(next);
  }
  if (span.dim() == 0 || span.dim() >= dim) return std::nullopt;
  std::vector<std::vector<S>> cols;
  for (const auto& row : span.rows()) cols.push_back(row);
  return columns_to_mat(cols, proto_zero);
}

template <class S>
std::vector<std::vector<S>> invariant_candidates(const std::vector<const Mat<S>*>& gens,
                                                 int dim, double eps, std::uint64_t seed) {
  std::vector<std::vector<S>> cands;
  const S proto = gens[0]->proto();
  const S one = ring_one_like(proto);
  Mat<S> id = Mat<S>::identity(dim, one);
  std::vector<Mat<S>> sing;
  for (const auto* g : gens) {
    sing.push_back(*g - id);
    sing.push_back(*g + id);
  }
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      sing.push_back((*gens[a]) * (*gens[b]) - (*gens[b]) * (*gens[a]));
      sing.push_back(*gens[a] - *gens[b]);
    }
  if constexpr (std::is_same_v<S, CD>) {
    // eigenvectors of random algebra elements: generic invariant-subspace probes
    std::mt19937_64 rng(seed * 7919ULL + 17);
    std::normal_distribution<double> dist;
    for (int trial = 0; trial < 3; ++trial) {
      Mat<S> r(dim, dim, CD(0, 0));
      for (const auto* g : gens) {
        CD c(dist(rng), dist(rng));
        r = r + g->scaled(c);
      }
      for (std::size_t a = 0; a < gens.size(); ++a) {
        CD c(dist(rng), dist(rng));
        r = r + ((*gens[a]) * (*gens[(a + 1) % gens.size()])).scaled(c);
      }
      for (const auto& v : eigenvector_candidates(r, eps)) cands.push_back(column_of(v, 0));
    }
    for (const auto* g : gens)
      for (const auto& v : eigenvector_candidates(*g, eps)) cands.push_back(column_of(v, 0));
    for (const auto& m : sing)
      for (const auto& v : kernel_basis(m, std::max(eps, 1e-10)))
        cands.push_back(column_of(v, 0));
  } else {
    std::mt19937_64 rng(seed * 7919ULL + 17);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 4; ++trial) {
      Mat<S> r = id.scaled(Laurent::constant(proto.vars(), CycRat(dist(rng))));
      for (const auto* g : gens)
        r = r + g->scaled(Laurent::constant(proto.vars(), CycRat(dist(rng))));
      if (det(r).is_zero()) sing.push_back(r);
    }
    for (const auto& m : sing)
      for (const auto& v : kernel_basis(m)) cands.push_back(column_of(v, 0));
  }
  return cands;
}

template <class S>
std::optional<Mat<S>> search_invariant(const std::vector<const Mat<S>*>& gens, int dim,
                                       double eps, std::uint64_t seed, const S& proto_zero) {
  std::optional<Mat<S>> best;
  auto consider = [&](std::optional<Mat<S>> sub) {
    if (!sub) return;
    if (!best || sub->cols() < best->cols()) best = std::move(sub);
  };
  for (const auto& v : invariant_candidates(gens, dim, eps, seed))
    consider(spin_vector(gens, v, dim, eps, proto_zero));
  if (best && best->cols() == 1) return best;

  // transposed module: an invariant subspace there yields one here as the
  // annihilator (with respect to the plain bilinear pairing)
  std::vector<Mat<S>> tr;
  tr.reserve(gens.size());
  for (const auto* g : gens) tr.push_back(g->transpose());
  std::vector<const Mat<S>*> trp;
  for (const auto& t : tr) trp.push_back(&t);
  std::optional<Mat<S>> best_t;
  for (const auto& v : invariant_candidates(trp, dim, eps, seed + 1)) {
    auto sub = spin_vector(trp, v, dim, eps, proto_zero);
    if (sub && (!best_t || sub->cols() < best_t->cols())) best_t = std::move(sub);
  }
  if (best_t) {
    Mat<S> rows = best_t->transpose();
    std::vector<Mat<S>> perp;
    if constexpr (std::is_same_v<S, CD>)
      perp = kernel_basis(rows, std::max(eps, 1e-10));
    else
      perp = kernel_basis(rows);
    if (!perp.empty() && static_cast<int>(perp.size()) < dim) {
      std::vector<std::vector<S>> cols;
      for (const auto& p : perp) cols.push_back(column_of(p, 0));
      consider(columns_to_mat(cols, proto_zero));
    }
  }
  return best;
}

}  // namespace

template <class S>
std::optional<Mat<S>> find_invariant_subspace(const RepT<S>& rep, GenSelect sel, double eps,
                                              std::uint64_t seed) {
  require_evaluated(rep);
  if (burnside_irreducible(rep, sel, eps)) return std::nullopt;
  auto gens = selected_images(rep, sel);
  const S proto_zero = ring_zero_like(rep.sigma.at(0).proto());
  auto found = search_invariant(gens, rep.dim, eps, seed, proto_zero);
  if (!found)
    throw Indeterminate("reducible by the algebra test, but no invariant subspace located");
  return found;
}

template <class S>
IntertwinerSpace<S> intertwiners(const RepT<S>& r1, const RepT<S>& r2, GenSelect sel,
                                 double eps) {
  if (r1.n != r2.n) throw StrandMismatch("strand counts differ");
  if (r1.dim != r2.dim) throw ShapeMismatch("dimensions differ");
  require_evaluated(r1);
  require_evaluated(r2);
  auto g1 = selected_images(r1, sel);
  auto g2 = selected_images(r2, sel);
  const int r = r1.dim;
  const S zero = ring_zero_like(r1.sigma.at(0).proto());
  // unknowns: vec(P), column-major; equations: P r1(g) - r2(g) P = 0
  std::vector<Mat<S>> blocks;
  for (std::size_t gi = 0; gi < g1.size(); ++gi) {
    const Mat<S>& m1 = *g1[gi];
    const Mat<S>& m2 = *g2[gi];
    Mat<S> block(r * r, r * r, zero);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const int row = i + r * j;
        for (int l = 0; l < r; ++l) {
          block(row, i + r * l) = block(row, i + r * l) + m1(l, j);
          block(row, l + r * j) = block(row, l + r * j) - m2(i, l);
        }
      }
    blocks.push_back(std::move(block));
  }
  Mat<S> system = vstack(blocks);
  std::vector<Mat<S>> kernel;
  if constexpr (std::is_same_v<S, CD>)
    kernel = kernel_basis(system, eps);
  else
    kernel = kernel_basis(system);
  IntertwinerSpace<S> out;
  out.dim = static_cast<int>(kernel.size());
  for (const auto& vec : kernel) {
    Mat<S> p(r, r, zero);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) p(i, j) = vec(i + r * j, 0);
    out.basis.push_back(std::move(p));
  }
  return out;
}

template <class S>
EquivalenceResult<S> are_equivalent(const RepT<S>& r1, const RepT<S>& r2, double eps,
                                    std::uint64_t seed) {
  if (r1.has_alpha() != r2.has_alpha())
    throw ShapeMismatch("one representation has alpha images, the other does not");
  GenSelect sel = r1.has_alpha() ? GenSelect::All : GenSelect::SigmaOnly;
  auto space = intertwiners(r1, r2, sel, eps);
  EquivalenceResult<S> res;
  res.intertwiner_dim = space.dim;
  if (space.dim == 0) return res;

  auto try_candidate = [&](const Mat<S>& p) -> bool {
    if constexpr (std::is_same_v<S, CD>) {
      auto sv = singular_values(p);
      if (sv.front() <= 0) return false;
      if (sv.back() / sv.front() <= 1e-8) return false;
      // re-verify the witness at twice tighter tolerance before reporting
      auto g1 = selected_images(r1, sel);
      auto g2 = selected_images(r2, sel);
      double worst = 0;
      for (std::size_t gi = 0; gi < g1.size(); ++gi)
        worst = std::max(worst, max_abs_diff(p * (*g1[gi]), (*g2[gi]) * p));
      double scale = sv.front() * std::max(1.0, max_abs(*g1[0]));
      if (worst > 0.5 * eps * scale) {
        res.equivalent = Tristate::Maybe;
        res.witness = p;
        return true;
      }
      res.equivalent = Tristate::Yes;
      res.witness = p;
      return true;
    } else {
      if (det(p).is_zero()) return false;
      res.equivalent = Tristate::Yes;
      res.witness = p;
      return true;
    }
  };

  for (const auto& p : space.basis)
    if (try_candidate(p)) return res;
  std::mt19937_64 rng(seed * 40487ULL + 3);
  std::uniform_int_distribution<int> coeff(1, 7);
  for (int trial = 0; trial < 12; ++trial) {
    Mat<S> combo = space.basis[0].scaled([&] {
      if constexpr (std::is_same_v<S, CD>)
        return CD(coeff(rng), coeff(rng));
      else
        return Laurent::constant(space.basis[0].proto().vars(), CycRat(coeff(rng)));
    }());
    for (std::size_t b = 1; b < space.basis.size(); ++b) {
      if constexpr (std::is_same_v<S, CD>)
        combo = combo + space.basis[b].scaled(CD(coeff(rng), coeff(rng)));
      else
        combo = combo +
                space.basis[b].scaled(Laurent::constant(space.basis[b].proto().vars(),
                                                        CycRat(coeff(rng))));
    }
    if (try_candidate(combo)) return res;
  }
  // a nonzero space whose random elements all look singular: for the exact
  // ring this is conclusive up to the sampled combinations only
  if constexpr (std::is_same_v<S, CD>) {
    auto sv = singular_values(space.basis[0]);
    if (space.basis.size() == 1 && sv.back() / sv.front() > 1e-12) {
      res.equivalent = Tristate::Maybe;
      return res;
    }
  }
  res.equivalent = Tristate::No;
  return res;
}

template <class S>
EigenStructure alpha_eigen_structure(const RepT<S>& rep, int i, double eps) {
  if (!rep.has_alpha()) throw MissingAlphaImages("no alpha images");
  if (i < 1 || i > rep.n - 1) throw IndexOutOfRange("alpha index out of range");
  require_evaluated(rep);
  const Mat<S>& a = rep.alpha[static_cast<std::size_t>(i - 1)];
  const S one = ring_one_like(a.proto());
  Mat<S> id = Mat<S>::identity(rep.dim, one);
  if (!mats_equal(a * a, id, eps * 10))
    throw NotInvolution("alpha image does not square to the identity");
  EigenStructure es;
  if constexpr (std::is_same_v<S, CD>) {
    es.mult_plus = rep.dim - rank(a - id, eps);
    es.mult_minus = rep.dim - rank(a + id, eps);
  } else {
    es.mult_plus = rep.dim - rank(a - id);
    es.mult_minus = rep.dim - rank(a + id);
  }
  if (es.mult_plus + es.mult_minus != rep.dim)
    throw NotInvolution("eigenvalue multiplicities do not fill the dimension");
  return es;
}

template <class S>
std::optional<S> center_image(const RepT<S>& rep, double eps) {
  auto [t, tinv] = theta_matrix(rep);
  (void)tinv;
  Mat<S> m = t.pow(rep.n);
  const S c = m(0, 0);
  Mat<S> scaled = Mat<S>::identity(rep.dim, ring_one_like(c)).scaled(c);
  if (mats_equal(m, scaled, eps * std::max(1.0, [&] {
        if constexpr (std::is_same_v<S, CD>) return max_abs(m);
        else return 1.0;
      }())))
    return c;
  return std::nullopt;
}

template <class S>
GroupWord nonfaithful_witness(const RepT<S>& rep, double eps, std::size_t max_letters) {
  auto c = center_image(rep, eps);
  if (!c)
    throw ImageNotIdentity("theta^n does not map to a scalar; restriction not irreducible");
  const int n = rep.n;
  GroupWord th_n = theta(n).power(n);
  GroupWord empty(n);
  for (int i = 1; i <= n - 1; ++i) {
    GroupWord w = th_n.commutator(GroupWord(n, {alpha(i)}));
    if (words_equal_in_wbn(w, empty, max_letters)) continue;
    if (!rep.has_alpha()) throw MissingAlphaImages("witness needs alpha images");
    Mat<S> img = image_of_word(rep, w);
    Mat<S> id = Mat<S>::identity(rep.dim, ring_one_like(img.proto()));
    if (!mats_equal(img, id, eps * 100))
      throw ImageNotIdentity("commutator image is not the identity");
    return w;
  }
  throw NoWitnessFound("no nontrivial commutator of theta^n with an alpha generator");
}

#define WREP_ANALYSIS_INST(S)                                                   \
  template Mat<S> image_of_word(const RepT<S>&, const GroupWord&);              \
  template VerificationReport check_relations(const RepT<S>&, double);          \
  template VerificationReport check_relations_extended(const RepT<S>&, double); \
  template int algebra_dimension(const RepT<S>&, GenSelect, double);            \
  template bool burnside_irreducible(const RepT<S>&, GenSelect, double);        \
  template std::optional<Mat<S>> find_invariant_subspace(const RepT<S>&, GenSelect, \
                                                         double, std::uint64_t);    \
  template IntertwinerSpace<S> intertwiners(const RepT<S>&, const RepT<S>&,     \
                                            GenSelect, double);                 \
  template EquivalenceResult<S> are_equivalent(const RepT<S>&, const RepT<S>&,  \
                                               double, std::uint64_t);          \
  template EigenStructure alpha_eigen_structure(const RepT<S>&, int, double);   \
  template std::optional<S> center_image(const RepT<S>&, double);               \
  template GroupWord nonfaithful_witness(const RepT<S>&, double, std::size_t)

WREP_ANALYSIS_INST(Laurent);
WREP_ANALYSIS_INST(CD);
#undef WREP_ANALYSIS_INST

}  // namespace wrep

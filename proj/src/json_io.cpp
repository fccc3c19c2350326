#include "wrep/json_io.hpp"

#include "wrep/numeric.hpp"

namespace wrep {

Json scalar_to_json(const Laurent& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) {
    Json term;
    term["exp"] = e;
    term["c0"] = rat_to_string(c.re_part());
    term["c1"] = rat_to_string(c.om_part());
    terms.push_back(std::move(term));
  }
  return terms;
}

Json scalar_to_json(const CD& s) { return Json::array({s.real(), s.imag()}); }

Laurent scalar_from_json(const Json& j, const std::vector<std::string>& vars) {
  if (!j.is_array()) throw ParseError("Laurent scalar JSON must be an array of terms");
  std::map<Laurent::Exp, CycRat> terms;
  for (const auto& term : j) {
    Laurent::Exp e = term.at("exp").get<std::vector<int>>();
    if (e.size() != vars.size()) throw ParseError("term exponent arity mismatch");
    CycRat c(rat_from_string(term.at("c0").get<std::string>()),
             rat_from_string(term.value("c1", std::string("0"))));
    terms[e] = c;
  }
  return Laurent::from_terms(vars, std::move(terms));
}

CD complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex scalar JSON must be [re, im]");
  return CD(j[0].get<double>(), j[1].get<double>());
}

Json matrix_to_json(const LMat& m) {
  Json out;
  out["ring"] = "laurent";
  out["vars"] = m.proto().vars();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json matrix_to_json(const CMat& m) {
  Json out;
  out["ring"] = "complex";
  out["vars"] = Json::array();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

MatAny matrix_from_json(const Json& j) {
  const std::string ring = j.at("ring").get<std::string>();
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const Json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) throw ParseError("matrix row count mismatch");
  if (ring == "laurent") {
    std::vector<std::string> vars = j.value("vars", std::vector<std::string>{});
    LMat m(rows, cols, Laurent::constant(vars, CycRat(0)));
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != cols)
        throw ParseError("matrix column count mismatch");
      for (int c = 0; c < cols; ++c)
        m(i, c) = scalar_from_json(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)], vars);
    }
    return m;
  }
  if (ring == "complex") {
    CMat m(rows, cols, CD(0, 0));
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != cols)
        throw ParseError("matrix column count mismatch");
      for (int c = 0; c < cols; ++c)
        m(i, c) = complex_from_json(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
    }
    return m;
  }
  throw ParseError("unknown ring tag: " + ring);
}

namespace {

Json label_to_json(const FamilyLabel& label) {
  Json out;
  if (label.family) out["name"] = family_name(*label.family);
  out["params"] = label.params;
  return out;
}

FamilyLabel label_from_json(const Json& j) {
  FamilyLabel label;
  if (j.contains("name")) label.family = family_from_name(j.at("name").get<std::string>());
  if (j.contains("params"))
    label.params = j.at("params").get<std::map<std::string, std::string>>();
  return label;
}

template <class S>
Json rep_to_json_impl(const RepT<S>& rep, const std::string& ring) {
  Json out;
  out["n"] = rep.n;
  out["dim"] = rep.dim;
  out["ring"] = ring;
  if constexpr (std::is_same_v<S, Laurent>)
    out["vars"] = rep.sigma.at(0).proto().vars();
  else
    out["vars"] = Json::array();
  Json sigmas = Json::array(), alphas = Json::array();
  for (const auto& g : rep.sigma) sigmas.push_back(matrix_to_json(g));
  for (const auto& a : rep.alpha) alphas.push_back(matrix_to_json(a));
  out["sigma"] = std::move(sigmas);
  out["alpha"] = std::move(alphas);
  out["family"] = label_to_json(rep.label);
  return out;
}

}  // namespace

Json rep_to_json(const Representation& rep) {
  if (std::holds_alternative<LRep>(rep))
    return rep_to_json_impl(std::get<LRep>(rep), "laurent");
  return rep_to_json_impl(std::get<CRep>(rep), "complex");
}

Representation rep_from_json(const Json& j) {
  const std::string ring = j.at("ring").get<std::string>();
  const int n = j.at("n").get<int>();
  const int dim = j.at("dim").get<int>();
  auto read_mats = [&](const Json& arr, auto& dest) {
    for (const auto& mj : arr) {
      MatAny m = matrix_from_json(mj);
      using MatT = typename std::decay_t<decltype(dest)>::value_type;
      if (!std::holds_alternative<MatT>(m)) throw ParseError("mixed rings inside one representation");
      MatT mat = std::get<MatT>(std::move(m));
      if (mat.rows() != dim || mat.cols() != dim)
        throw ParseError("generator image is not dim x dim");
      dest.push_back(std::move(mat));
    }
  };
  FamilyLabel label = j.contains("family") ? label_from_json(j.at("family")) : FamilyLabel{};
  if (ring == "laurent") {
    LRep rep;
    rep.n = n;
    rep.dim = dim;
    rep.label = label;
    read_mats(j.at("sigma"), rep.sigma);
    read_mats(j.at("alpha"), rep.alpha);
    if (static_cast<int>(rep.sigma.size()) != n - 1)
      throw ParseError("expected n-1 braid images");
    if (!rep.alpha.empty() && static_cast<int>(rep.alpha.size()) != n - 1)
      throw ParseError("expected zero or n-1 alpha images");
    return rep;
  }
  if (ring == "complex") {
    CRep rep;
    rep.n = n;
    rep.dim = dim;
    rep.label = label;
    read_mats(j.at("sigma"), rep.sigma);
    read_mats(j.at("alpha"), rep.alpha);
    if (static_cast<int>(rep.sigma.size()) != n - 1)
      throw ParseError("expected n-1 braid images");
    if (!rep.alpha.empty() && static_cast<int>(rep.alpha.size()) != n - 1)
      throw ParseError("expected zero or n-1 alpha images");
    return rep;
  }
  throw ParseError("unknown ring tag: " + ring);
}

Json report_to_json(const VerificationReport& report) {
  Json out;
  out["relations"] = report.total_relations;
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"id", f.id}, {"deviation", f.deviation}});
  out["failures"] = std::move(failures);
  return out;
}

namespace {

template <class S>
Json classification_to_json_impl(const ClassificationT<S>& c) {
  Json out;
  out["kind"] = c.kind;
  out["family"] = family_name(c.family);
  out["k"] = c.k;
  if constexpr (std::is_same_v<S, CD>) {
    out["y"] = scalar_to_json(c.y);
    out["z"] = scalar_to_json(c.z);
    if (c.lambda) out["lambda"] = scalar_to_json(*c.lambda);
    if (c.x) out["x"] = scalar_to_json(*c.x);
  } else {
    out["y"] = c.y.to_string();
    out["z"] = c.z.to_string();
    if (c.lambda) out["lambda"] = c.lambda->to_string();
    if (c.x) out["x"] = c.x->to_string();
  }
  if (c.certificate) out["certificate"] = matrix_to_json(*c.certificate);
  return out;
}

}  // namespace

Json classification_to_json(const ClassificationC& c) { return classification_to_json_impl(c); }
Json classification_to_json(const ClassificationL& c) { return classification_to_json_impl(c); }

Json search_report_to_json(const SearchReport& report) {
  Json out;
  out["n"] = report.n;
  out["restriction"] = family_name(report.restriction);
  out["z"] = scalar_to_json(report.z);
  out["starts"] = report.starts;
  out["converged"] = report.converged;
  out["seed"] = report.seed;
  Json clusters = Json::array();
  for (const auto& c : report.clusters) {
    Json cj;
    cj["A1"] = matrix_to_json(c.a1);
    cj["residual"] = c.residual;
    cj["manifold_dim"] = c.manifold_dim;
    cj["cluster_size"] = c.cluster_size;
    if (c.family)
      cj["family"] = classification_to_json(*c.family);
    else
      cj["family"] = nullptr;
    clusters.push_back(std::move(cj));
  }
  out["clusters"] = std::move(clusters);
  return out;
}

Json distinctness_to_json(const DistinctnessReport& report) {
  Json out;
  out["ok"] = report.ok;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    const char* got = e.got == Tristate::Yes ? "equivalent"
                      : e.got == Tristate::No ? "not-equivalent"
                                              : "indeterminate";
    entries.push_back({{"i", e.i},
                       {"j", e.j},
                       {"expected_equivalent", e.expected_equivalent},
                       {"got", got},
                       {"ok", e.ok}});
  }
  out["pairs"] = std::move(entries);
  return out;
}

FamilyParams family_params_from_json(const Json& j) {
  FamilyParams p;
  p.family = family_from_name(j.at("family").get<std::string>());
  p.n = j.at("n").get<int>();
  if (j.contains("x-root")) p.x_root = j.at("x-root").get<int>();
  if (j.contains("params")) {
    for (const auto& [key, val] : j.at("params").items()) {
      if (val.is_string()) {
        p.assign[key] = ParamValue::parse(val.get<std::string>());
      } else if (val.is_number()) {
        double d = val.get<double>();
        if (d == static_cast<long>(d))
          p.assign[key] = ParamValue::of(CycRat(static_cast<long>(d)));
        else
          p.assign[key] = ParamValue::of(CD(d, 0));
      } else if (val.is_array()) {
        p.assign[key] = ParamValue::of(complex_from_json(val));
      } else {
        throw ParseError("bad parameter value for " + key);
      }
    }
  }
  return p;
}

}  // namespace wrep

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wrep/fn_action.hpp"
#include "wrep/json_io.hpp"
#include "wrep/numeric.hpp"

namespace py = pybind11;
using namespace wrep;

namespace {

ParamValue param_from_object(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return ParamValue::parse(obj.cast<std::string>());
  if (py::isinstance<py::int_>(obj)) return ParamValue::of(CycRat(obj.cast<long>()));
  return ParamValue::of(obj.cast<CD>());
}

Representation rep_from_str(const std::string& rep_json) {
  return rep_from_json(Json::parse(rep_json));
}

std::string gen(const std::string& family, int n, const py::dict& params,
                py::object x_root) {
  FamilyParams p;
  p.family = family_from_name(family);
  p.n = n;
  for (const auto& item : params)
    p.assign[item.first.cast<std::string>()] = param_from_object(
        py::reinterpret_borrow<py::object>(item.second));
  if (!x_root.is_none()) p.x_root = x_root.cast<int>();
  return rep_to_json(make_family(p)).dump();
}

std::string verify(const std::string& rep_json, double tol) {
  Representation rep = rep_from_str(rep_json);
  VerificationReport report =
      std::visit([&](const auto& r) { return check_relations(r, tol); }, rep);
  return report_to_json(report).dump();
}

bool irreducible(const std::string& rep_json, const std::string& restrict_to, double tol) {
  Representation rep = rep_from_str(rep_json);
  GenSelect sel = restrict_to == "sigma" ? GenSelect::SigmaOnly
                  : restrict_to == "alpha" ? GenSelect::AlphaOnly
                                           : GenSelect::All;
  return std::visit([&](const auto& r) { return burnside_irreducible(r, sel, tol); }, rep);
}

std::string equivalent(const std::string& a_json, const std::string& b_json, double tol) {
  Representation a = rep_from_str(a_json), b = rep_from_str(b_json);
  if (std::holds_alternative<LRep>(a) != std::holds_alternative<LRep>(b))
    throw BadParams("representations live in different rings");
  Tristate got = std::holds_alternative<LRep>(a)
                     ? are_equivalent(std::get<LRep>(a), std::get<LRep>(b), tol).equivalent
                     : are_equivalent(std::get<CRep>(a), std::get<CRep>(b), tol).equivalent;
  return got == Tristate::Yes ? "yes" : got == Tristate::No ? "no" : "maybe";
}

std::string identify(const std::string& rep_json, double tol) {
  Representation rep = rep_from_str(rep_json);
  return std::visit(
             [&](const auto& r) { return classification_to_json(identify_extension(r, tol)); },
             rep)
      .dump();
}

std::string search(int n, const std::string& restriction, CD z, int starts,
                   std::uint64_t seed) {
  Family f = restriction == "tau" ? Family::Tau : Family::BurauW;
  return search_report_to_json(extension_search(n, f, z, starts, seed)).dump();
}

std::string witness(const std::string& rep_json, double tol) {
  Representation rep = rep_from_str(rep_json);
  GroupWord w =
      std::visit([&](const auto& r) { return nonfaithful_witness(r, tol); }, rep);
  return w.to_string();
}

std::string specialize(const std::string& rep_json, const std::map<std::string, CD>& assign) {
  Representation rep = rep_from_str(rep_json);
  if (!std::holds_alternative<LRep>(rep))
    throw BadParams("specialize expects a symbolic representation");
  return rep_to_json(specialize_rep_complex(std::get<LRep>(rep), assign)).dump();
}

bool words_equal(const std::string& w1, const std::string& w2, int n) {
  return words_equal_in_wbn(parse_word(w1, n), parse_word(w2, n));
}

std::string normalize_word(const std::string& text, int n) {
  return parse_word(text, n).to_string();
}

int relator_count(int n) { return static_cast<int>(relators(n).size()); }

}  // namespace

PYBIND11_MODULE(_wrep, m) {
  m.doc() = "welded braid group representation workbench";
  m.def("gen", &gen, py::arg("family"), py::arg("n"), py::arg("params") = py::dict(),
        py::arg("x_root") = py::none(),
        "construct a representation family; returns the representation JSON");
  m.def("verify", &verify, py::arg("rep_json"), py::arg("tol") = 1e-9,
        "check the defining relations; returns a report JSON");
  m.def("irreducible", &irreducible, py::arg("rep_json"), py::arg("restrict_to") = "all",
        py::arg("tol") = 1e-9);
  m.def("equivalent", &equivalent, py::arg("a_json"), py::arg("b_json"),
        py::arg("tol") = 1e-9, "returns 'yes', 'no' or 'maybe'");
  m.def("identify", &identify, py::arg("rep_json"), py::arg("tol") = 1e-9,
        "classify an extension; returns a classification JSON");
  m.def("search", &search, py::arg("n"), py::arg("restriction"), py::arg("z"),
        py::arg("starts") = 100, py::arg("seed") = 0,
        "multi-start search for alpha images; returns a report JSON");
  m.def("witness", &witness, py::arg("rep_json"), py::arg("tol") = 1e-9,
        "non-faithfulness witness word");
  m.def("specialize", &specialize, py::arg("rep_json"), py::arg("assign"),
        "evaluate a symbolic representation at complex parameter values");
  m.def("words_equal", &words_equal, py::arg("w1"), py::arg("w2"), py::arg("n"),
        "exact equality in the welded braid group");
  m.def("normalize_word", &normalize_word, py::arg("text"), py::arg("n"));
  m.def("relator_count", &relator_count, py::arg("n"));

  // translators run newest-first, so the base class goes in first
  py::register_exception<Error>(m, "WrepError");
  py::register_exception<NotAnExtension>(m, "NotAnExtension");
  py::register_exception<OutOfClassifiedRange>(m, "OutOfClassifiedRange");
  py::register_exception<Indeterminate>(m, "IndeterminateError");
}

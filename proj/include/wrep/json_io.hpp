#ifndef WREP_JSON_IO_HPP
#define WREP_JSON_IO_HPP

#include <json.hpp>

#include "wrep/classify.hpp"

namespace wrep {

using Json = nlohmann::json;

// Laurent scalar: array of terms {"exp":[e1,...,ek], "c0":"p/q", "c1":"r/s"};
// complex scalar: [re, im]
Json scalar_to_json(const Laurent& s);
Json scalar_to_json(const CD& s);
Laurent scalar_from_json(const Json& j, const std::vector<std::string>& vars);
CD complex_from_json(const Json& j);

// {"ring":"laurent"|"complex", "vars":[...], "rows":r, "cols":c, "entries":[[...],...]}
Json matrix_to_json(const LMat& m);
Json matrix_to_json(const CMat& m);
using MatAny = std::variant<LMat, CMat>;
MatAny matrix_from_json(const Json& j);

Json rep_to_json(const Representation& rep);
Representation rep_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
Json classification_to_json(const ClassificationC& c);
Json classification_to_json(const ClassificationL& c);
Json search_report_to_json(const SearchReport& report);
Json distinctness_to_json(const DistinctnessReport& report);

FamilyParams family_params_from_json(const Json& j);

}  // namespace wrep

#endif

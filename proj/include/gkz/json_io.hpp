#pragma once

#include "gkz/mgm.hpp"

#include "json.hpp"

#include <istream>

namespace gkz {

using json = nlohmann::ordered_json;

struct ParsedInput {
    IntMatrix A;
    std::vector<QVec> betas;
    ClassifierConfig config;
};

// {"A": [[..]], "beta": [["1","1/2"], ...], "beta_box": {"lo": [..], "hi": [..]},
//  "config": {"budget": n, "kmax": n, "box_radius": n}}
ParsedInput parse_input(std::istream& in);
ParsedInput parse_input_json(const json& j);

QVec parse_beta_csv(const std::string& csv, int dim);
std::vector<int> parse_face_arg(const std::string& arg, const GkzDatum& datum);

json coset_set_to_json(const GkzDatum& datum, const CosetSet& s);
json support_to_json(const GkzDatum& datum, const OrbitSupport& s);
json report_to_json(const GkzDatum& datum, const ClassificationReport& rep);
ClassificationReport report_from_json(const GkzDatum& datum, const json& j);

json datum_to_json(const GkzDatum& datum);

} // namespace gkz

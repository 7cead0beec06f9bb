#pragma once

#include "filtadm/linalg.hpp"
#include "filtadm/model.hpp"

#include <json.hpp>

#include <string>

namespace filtadm {

using Json = nlohmann::json;

// Input errors (malformed JSON, missing fields) surface as InputError.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rat rational_from_json(const Json& j);
Json to_json(const Rat& q);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);

ModuleSpec spec_from_json(const Json& j);
Json to_json(const ModuleSpec& spec);

// Accepts either {"weights": [[...]]} or a bare [[...]].
WeightProfile profile_from_json(const Json& j);
Json to_json(const WeightProfile& w);

Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace filtadm

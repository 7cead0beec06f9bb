#include "filtadm/json_io.hpp"

namespace filtadm {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    return j.at(key);
}

long integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    return j.get<long>();
}

}  // namespace

Rat rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    throw InputError("expected a rational as \"num/den\" or an integer");
}

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

Json to_json(const Subspace& s) {
    Json rows = Json::array();
    for (const auto& v : s.basis()) rows.push_back(to_json(v));
    return rows;
}

ModuleSpec spec_from_json(const Json& j) {
    ModuleSpec s;
    s.config.p = integer(field(j, "p", "spec"), "spec.p");
    s.config.degKQp = integer(field(j, "degKQp", "spec"), "spec.degKQp");
    s.config.degLQp = integer(field(j, "degLQp", "spec"), "spec.degLQp");
    s.config.degKL = integer(field(j, "degKL", "spec"), "spec.degKL");
    s.config.fPrime = j.contains("fPrime") ? integer(j.at("fPrime"), "spec.fPrime") : 1;
    const auto& fams = field(j, "families", "spec");
    if (!fams.is_array()) throw InputError("spec.families: expected an array");
    for (std::size_t i = 0; i < fams.size(); ++i) {
        std::string where = "spec.families[" + std::to_string(i) + "]";
        const auto& f = fams[i];
        const auto& id = field(f, "id", where);
        if (!id.is_string()) throw InputError(where + ".id: expected a string");
        Family fam;
        fam.id = id.get<std::string>();
        fam.h = f.contains("h") ? integer(f.at("h"), where + ".h") : 1;
        fam.tBase = f.contains("tBase") ? rational_from_json(f.at("tBase")) : Rat(0);
        s.families.push_back(std::move(fam));
    }
    const auto& sums = field(j, "summands", "spec");
    if (!sums.is_array()) throw InputError("spec.summands: expected an array");
    for (std::size_t i = 0; i < sums.size(); ++i) {
        std::string where = "spec.summands[" + std::to_string(i) + "]";
        const auto& x = sums[i];
        const auto& fam = field(x, "family", where);
        if (!fam.is_string()) throw InputError(where + ".family: expected a string");
        s.summands.push_back(
            {fam.get<std::string>(), integer(field(x, "l", where), where + ".l"), integer(field(x, "b", where), where + ".b")});
    }
    return s;
}

Json to_json(const ModuleSpec& spec) {
    Json j;
    j["p"] = spec.config.p;
    j["degKQp"] = spec.config.degKQp;
    j["degLQp"] = spec.config.degLQp;
    j["degKL"] = spec.config.degKL;
    j["fPrime"] = spec.config.fPrime;
    j["families"] = Json::array();
    for (const auto& f : spec.families) j["families"].push_back({{"id", f.id}, {"h", f.h}, {"tBase", to_json(f.tBase)}});
    j["summands"] = Json::array();
    for (const auto& s : spec.summands) j["summands"].push_back({{"family", s.family}, {"l", s.l}, {"b", s.b}});
    return j;
}

WeightProfile profile_from_json(const Json& j) {
    const Json& w = j.is_object() ? field(j, "weights", "weights file") : j;
    if (!w.is_array()) throw InputError("weights: expected an array of arrays");
    WeightProfile p;
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (!w[s].is_array()) throw InputError("weights[" + std::to_string(s) + "]: expected an array");
        std::vector<long> row;
        for (const auto& x : w[s]) row.push_back(integer(x, "weights[" + std::to_string(s) + "]"));
        p.weights.push_back(std::move(row));
    }
    return p;
}

Json to_json(const WeightProfile& w) { return Json{{"weights", w.weights}}; }

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(what + ": malformed JSON (" + e.what() + ")");
    }
}

}  // namespace filtadm

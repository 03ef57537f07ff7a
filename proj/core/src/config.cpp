#include "pmp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pmp/errors.hpp"

namespace pmp {

void RunConfig::validate() const {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("radius must be positive and finite");
    Resolution{n_radial, n_angular}.validate();
    if (contour_n < 8) throw ResolutionTooLow("contour_n must be at least 8");
    for (const auto& [name, value] : tolerances) {
        if (!(value > 0.0)) throw DomainError("tolerance '" + name + "' must be positive");
    }
}

OperatorOptions RunConfig::operator_options() const {
    OperatorOptions options;
    options.area = {n_radial, n_angular};
    options.contour_count = contour_n;
    return options;
}

double RunConfig::tolerance(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

std::string RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["radius"] = radius;
    j["n_radial"] = n_radial;
    j["n_angular"] = n_angular;
    j["contour_n"] = contour_n;
    j["tolerances"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : tolerances) j["tolerances"][name] = value;
    j["output"] = output;
    j["seed"] = seed;
    return j.dump(2);
}

RunConfig RunConfig::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("config must be a JSON object");

    static const std::set<std::string> known = {"radius", "n_radial",   "n_angular", "contour_n",
                                                "tolerances", "output", "seed"};
    for (const auto& item : j.items()) {
        if (!known.count(item.key())) throw DomainError("unknown config key '" + item.key() + "'");
    }

    RunConfig config;
    try {
        if (j.contains("radius")) config.radius = j.at("radius").get<double>();
        if (j.contains("n_radial")) config.n_radial = j.at("n_radial").get<int>();
        if (j.contains("n_angular")) config.n_angular = j.at("n_angular").get<int>();
        if (j.contains("contour_n")) config.contour_n = j.at("contour_n").get<int>();
        if (j.contains("tolerances")) config.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
        if (j.contains("output")) config.output = j.at("output").get<std::string>();
        if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config has a field of the wrong type: ") + e.what());
    }
    config.validate();
    return config;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

}  // namespace pmp

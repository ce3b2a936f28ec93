#include "pqpoly/serialization.hpp"

#include <stdexcept>

namespace pqpoly {

nlohmann::json to_json(const XPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

XPoly xpoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("XPoly JSON must be an array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (!c.is_string()) throw std::invalid_argument("XPoly JSON coefficients must be strings");
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return XPoly(std::move(coeffs));
}

std::string to_csv_cell(const XPoly& p) {
    std::string out;
    for (const auto& c : p.coeffs()) {
        if (!out.empty()) out += ';';
        out += c.to_string();
    }
    return out;
}

nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json j{{"id", r.id}, {"cells_total", r.cells_total}, {"cells_passed", r.cells_passed}};
    if (r.first_failure) {
        auto cell = nlohmann::json::object();
        for (const auto& [key, value] : r.first_failure->cell) cell[key] = value;
        nlohmann::json failure{{"cell", cell}, {"lhs", to_json(r.first_failure->lhs)},
                               {"rhs", to_json(r.first_failure->rhs)}};
        if (!r.first_failure->error.empty()) failure["error"] = r.first_failure->error;
        j["first_failure"] = std::move(failure);
    }
    return j;
}

nlohmann::json to_json(std::span<const IdentityReport> reports) {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

}  // namespace pqpoly

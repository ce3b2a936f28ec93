#ifndef PQPOLY_SERIALIZATION_HPP
#define PQPOLY_SERIALIZATION_HPP

#include <span>
#include <string>

#include <json.hpp>

#include "pqpoly/identity_suite.hpp"
#include "pqpoly/xpoly.hpp"

namespace pqpoly {

/// ["c0", "c1", ...] with every coefficient in "num/den" form.
nlohmann::json to_json(const XPoly& p);
/// Inverse of to_json(XPoly); throws std::invalid_argument on bad input.
XPoly xpoly_from_json(const nlohmann::json& j);

/// Semicolon-joined "num/den" coefficients; empty for the zero polynomial.
std::string to_csv_cell(const XPoly& p);

/// {id, cells_total, cells_passed, first_failure?}.
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(std::span<const IdentityReport> reports);

}  // namespace pqpoly

#endif  // PQPOLY_SERIALIZATION_HPP

#pragma once

#include <string>

#include <json.hpp>

#include "seifert/moduli.hpp"

namespace seifert::report {

using Json = nlohmann::ordered_json;

/// Integral rationals become JSON numbers when they fit, otherwise "p/q".
Json rational_json(const Rational& r);
Json integer_json(const Integer& n);
/// [e, eps_1, ..., eps_n]
Json data_json(const BundleData& e);

Json floer_json(const FloerTable& table);
std::string floer_text(const FloerTable& table);
std::string floer_csv(const FloerTable& table);

Json components_json(const SeifertFibration& y, const CriticalSet& set);
std::string components_text(const SeifertFibration& y, const CriticalSet& set);
std::string components_csv(const SeifertFibration& y, const CriticalSet& set);

}  // namespace seifert::report

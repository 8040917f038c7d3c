#pragma once

#include <string>

#include <json.hpp>

#include "kary/core.hpp"

namespace kary {

/// Parses the custom algebra document
/// {"arity":k, "dim":n, "labels":[...], "brackets":[{"args":[...], "value":[[coeff,index],...]}], "weights":[...]}.
/// Coefficients may be integers or "p/q" strings; each bracket is scaled by the
/// LCM of its denominators. Throws InputError on any malformed field.
KaryAlgebra algebra_from_json(const nlohmann::json& doc);
KaryAlgebra load_algebra(const std::string& path);

nlohmann::json algebra_to_json(const KaryAlgebra& alg);

}  // namespace kary

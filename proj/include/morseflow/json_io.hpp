#pragma once

#include <string>

#include <json.hpp>

#include "morseflow/matrix.hpp"

namespace morseflow {

// Matrix schema: {"field":"R"|"C"|"H","rows":n,"cols":m,"data":[[...]]}
// with entries a number (R), [re,im] (C) or [a,b,c,d] (H).
// Parsing rejects NaN/Inf and shape mismatches with ParseError.
Mat mat_from_json(const nlohmann::json& j);
nlohmann::json mat_to_json(const Mat& m);

// Accepts a matrix literal, a path to a JSON file, or the shorthand
// "diag:a1,a2,..." for a real diagonal matrix in the given field.
Mat parse_matrix_arg(const std::string& arg, Field diag_field = Field::R);

std::string format_real(double v);  // fixed 17-significant-digit decimal

}  // namespace morseflow

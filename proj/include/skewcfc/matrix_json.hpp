#pragma once

#include "skewcfc/matrix.hpp"

#include <json.hpp>

#include <string>

namespace skewcfc {

/// {"rows": r, "cols": c, "entries": [[re, im], ...]}, entries row-major,
/// each component a "p/q" string in lowest terms.
nlohmann::json matrix_to_json(const Matrix& m);

/// Inverse of matrix_to_json. Throws ParseError on malformed input and
/// DimensionMismatch when the entry count disagrees with rows*cols.
Matrix matrix_from_json(const nlohmann::json& j);

Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);

} // namespace skewcfc

#pragma once

// JSON and CSV serialisation shared by the CLI reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "brach/matcore.hpp"

namespace brach {

inline constexpr const char* kSchemaVersion = "1";

/// {"dim": n, "re": [...], "im": [...]} with row-major entries.
nlohmann::json to_json(const ComplexMat& m);
ComplexMat matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Spinor& v);

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double x);

/// Comma-joined row of format_double values.
std::string csv_row(const std::vector<double>& values);

/// Writes text to path, creating parent directories. Throws std::runtime_error on failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace brach

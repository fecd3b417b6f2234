#pragma once

#include <cstddef>
#include <filesystem>

#include <nlohmann/json.hpp>

#include "equik/int_matrix.hpp"

namespace equik {

// Accepts a decimal string or a JSON integer.
Integer json_integer(const nlohmann::json& v, const char* what);
std::size_t json_size(const nlohmann::json& v, const char* what);

nlohmann::json integer_to_json(const Integer& value);  // decimal string
nlohmann::json vector_to_json(const IntVector& v);
IntVector vector_from_json(const nlohmann::json& j, const char* what);

// {"rows": r, "cols": c, "entries": [row-major decimal strings]}
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path, const char* what);

}  // namespace equik

#include "equik/json_io.hpp"

#include <fstream>

#include "equik/error.hpp"

namespace equik {

Integer json_integer(const nlohmann::json& v, const char* what) {
  if (v.is_string()) return parse_integer(v.get<std::string>());
  if (v.is_number_integer()) return Integer(v.get<long>());
  throw InvalidArgument(std::string("expected an integer (decimal string or number) for ") + what);
}

std::size_t json_size(const nlohmann::json& v, const char* what) {
  const Integer x = json_integer(v, what);
  if (x < 0 || !x.fits_ulong_p()) throw InvalidArgument(std::string("negative or oversized value for ") + what);
  return x.get_ui();
}

nlohmann::json integer_to_json(const Integer& value) { return value.get_str(); }

nlohmann::json vector_to_json(const IntVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

IntVector vector_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string("expected an array for ") + what);
  IntVector out;
  for (const auto& x : j) out.push_back(json_integer(x, what));
  return out;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).get_str());
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw InvalidArgument("matrix needs fields 'rows', 'cols', 'entries'");
  }
  const std::size_t rows = json_size(j.at("rows"), "rows");
  const std::size_t cols = json_size(j.at("cols"), "cols");
  return IntMatrix(rows, cols, vector_from_json(j.at("entries"), "matrix entries"));
}

nlohmann::json read_json_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument(std::string("cannot open ") + what + " " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string(what) + " " + path.string() + " does not parse: " + e.what());
  }
}

}  // namespace equik

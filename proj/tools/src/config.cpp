#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "padic_frames_cli/cli.hpp"

namespace padic_frames::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

Config load_config_file(const std::string& path) {
  Config c;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("config " + path + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) throw Error("config " + path + ": expected object");
  try {
    if (doc.contains("tol_rel")) c.tol_rel = doc.at("tol_rel").get<double>();
    if (doc.contains("max_level")) c.max_level = doc.at("max_level").get<int>();
    if (doc.contains("matrix_cap")) c.matrix_cap = doc.at("matrix_cap").get<std::int64_t>();
  } catch (const nlohmann::json::type_error& e) {
    throw Error("config " + path + ": " + e.what());
  }
  if (!(c.tol_rel > 0.0)) throw Error("config " + path + ": tol_rel must be positive");
  if (c.max_level < 0) throw Error("config " + path + ": max_level must be nonnegative");
  if (c.matrix_cap < 1) throw Error("config " + path + ": matrix_cap must be positive");
  return c;
}

Config load_config() {
  const char* path = std::getenv("PADIC_FRAMES_CONFIG");
  if (path == nullptr || *path == '\0') return {};
  return load_config_file(path);
}

}  // namespace padic_frames::cli

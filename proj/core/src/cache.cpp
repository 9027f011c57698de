#include "gqca/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "gqca/json_io.hpp"

namespace gqca {

std::filesystem::path resolve_cache_path(const std::optional<std::string>& explicit_path) {
  if (explicit_path && !explicit_path->empty()) return *explicit_path;
  if (const char* env = std::getenv("GQCA_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "gqca" / "variables.json";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".local" / "share" / "gqca" / "variables.json";
  }
  return {};
}

bool load_cache(const std::filesystem::path& path, KroneckerAlgebra& alg) {
  if (path.empty()) return false;
  std::ifstream in(path);
  if (!in) return false;
  try {
    const Json doc = Json::parse(in);
    if (doc.at("version").get<int>() != kCacheFormatVersion) return false;
    if (!(matrix_from_json(doc.at("lambda")) == alg.form().matrix())) return false;
    std::map<int, TorusElement> vars;
    for (const auto& [key, value] : doc.at("variables").items()) {
      vars.emplace(std::stoi(key), torus_from_json(value, alg.form()));
    }
    return alg.preload(vars);
  } catch (const std::exception&) {
    return false;
  }
}

bool save_cache(const std::filesystem::path& path, const KroneckerAlgebra& alg,
                const std::string& tool_version) {
  if (path.empty()) return false;
  Json vars = Json::object();
  for (const auto& [k, x] : alg.cached_variables()) vars[std::to_string(k)] = to_json(x);
  const Json doc = {{"version", kCacheFormatVersion},
                    {"tool", tool_version},
                    {"lambda", to_json(alg.form().matrix())},
                    {"variables", std::move(vars)}};
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << doc.dump() << '\n';
    if (!out) return false;
  }
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

}  // namespace gqca

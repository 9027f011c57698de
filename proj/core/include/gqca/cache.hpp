#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "gqca/kronecker.hpp"

namespace gqca {

inline constexpr int kCacheFormatVersion = 1;

/// Explicit path, else $GQCA_CACHE, else $XDG_DATA_HOME/gqca/variables.json,
/// else ~/.local/share/gqca/variables.json. Empty if none can be formed.
std::filesystem::path resolve_cache_path(const std::optional<std::string>& explicit_path);

/// Loads cached cluster variables into alg. The cache is advisory: a missing,
/// unreadable, mismatched or invalid file yields false and leaves alg as is.
bool load_cache(const std::filesystem::path& path, KroneckerAlgebra& alg);

/// Writes every memoized variable of alg. Returns false on I/O failure.
bool save_cache(const std::filesystem::path& path, const KroneckerAlgebra& alg,
                const std::string& tool_version);

}  // namespace gqca

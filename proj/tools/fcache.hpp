#pragma once

#include <cstdint>
#include <string>

#include "hypermap/fseries.hpp"

namespace hypermap::cli {

inline constexpr std::uint32_t kFCacheVersion = 1;

/// Warm-loads grid entries from a cache file.
///
/// Layout: 4 magic bytes "HMFC", uint32 LE version, then length-prefixed
/// records (k, m, n, lambda as uint32 LE; numerator sign byte, uint32 LE
/// byte count, magnitude bytes; denominator uint32 LE byte count, bytes).
/// A missing file, wrong magic or version mismatch silently loads nothing;
/// a truncated tail keeps the records before it.
///
/// Returns the number of records loaded.
std::size_t load_fcache(const std::string& path, FGrid& grid);

/// Persists every cached F value. Writes to a temp file, then renames.
void save_fcache(const std::string& path, const FGrid& grid);

}  // namespace hypermap::cli

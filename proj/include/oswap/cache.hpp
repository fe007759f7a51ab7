#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "oswap/processes.hpp"

namespace oswap {

inline constexpr int kCacheVersion = 1;

struct CacheHeader {
    int version = kCacheVersion;
    std::string kind;
    int n = 0;
    long long count = 0;
};

void write_enumeration_cache(const std::filesystem::path& path, const std::string& kind, int n,
                             const std::vector<std::string>& lines);

// Header of an existing cache file; nullopt if missing or unparsable.
std::optional<CacheHeader> read_cache_header(const std::filesystem::path& path);

// Body lines; validates the header (version, kind, n, stored count).
std::vector<std::string> read_cache_lines(const std::filesystem::path& path,
                                          const std::string& kind, int n);

// Loads a valid cache or re-enumerates and rewrites it; returns the lines.
std::vector<std::string> cached_enumeration(const std::filesystem::path& cache_dir,
                                            const std::string& kind, int n);

std::vector<std::string> enumeration_lines(const std::string& kind, int n);

// CSV with a header row and 17 significant digits per value.
void write_csv(const std::filesystem::path& path, const SampleMatrix& mat);
SampleMatrix read_csv(const std::filesystem::path& path);

}  // namespace oswap

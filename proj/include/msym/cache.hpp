#pragma once

#include <string>
#include <vector>

namespace msym {

std::string cache_file_path(const std::string& dir);

// Loads <dir>/msym.cache into the in-process plethysm and rewrite tables.
// Returns warnings for stderr; a bad checksum drops the whole file, a bad
// line under a good checksum drops just that line.
std::vector<std::string> cache_load(const std::string& dir);

// Atomically rewrites <dir>/msym.cache from the in-process tables.
void cache_save(const std::string& dir);

}  // namespace msym

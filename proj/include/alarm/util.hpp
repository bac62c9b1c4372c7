#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace alarm::util {

// --- hashing / encoding -----------------------------------------------------

std::string sha256_hex(const std::string& bytes);
std::string base64_encode(const std::string& bytes);

// --- strings ----------------------------------------------------------------

std::string trim(const std::string& s);
std::string to_lower(std::string s);
std::string to_upper(std::string s);

// --- filesystem -------------------------------------------------------------

std::string read_file(const std::filesystem::path& path);          // throws on failure
bool try_read_file(const std::filesystem::path& path, std::string& out);
// Publish via write-to-temp-then-rename so concurrent readers never observe
// a partial file.
void atomic_write_file(const std::filesystem::path& path, const std::string& bytes);

// --- jsonl ------------------------------------------------------------------

// Parses one JSON object per non-empty line; callback gets (1-based line, object).
void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(std::size_t, const nlohmann::json&)>& fn);

std::string jsonl_dump(const std::vector<nlohmann::json>& records);

// --- parallel map -----------------------------------------------------------

// Runs fn(i) for i in [0, n) on at most `parallelism` worker threads.
// fn must not throw; wrap per-item exceptions on the caller side.
void parallel_for(std::size_t n, int parallelism, const std::function<void(std::size_t)>& fn);

// --- misc -------------------------------------------------------------------

// MIME type for image bytes, sniffed from magic bytes with an extension fallback.
std::string image_mime(const std::string& path, const std::string& bytes);

} // namespace alarm::util

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace swarmlab::harness {

// Shortest round-trip decimal representation (std::to_chars).
std::string fmt_double(double v);

// Median with mid-pair averaging; throws on empty input.
double median(std::vector<double> values);

// Writes the whole content in one pass (outputs are byte-deterministic).
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

// Runs fn(0..count-1) on up to `jobs` threads (0 = hardware concurrency).
// The first exception thrown by any task is rethrown after all tasks finish.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace swarmlab::harness

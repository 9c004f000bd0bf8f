#pragma once

#include "fracwave/grid.hpp"

#include <filesystem>
#include <string>

namespace fracwave {

// Field snapshot format: little-endian, magic "FRW1", uint32 dim,
// uint32 n_per_axis, float64 box_length, then interleaved (re, im)
// float64 pairs in row-major order.
void save_field(const Field& u, const std::filesystem::path& path);
Field load_field(const std::filesystem::path& path);

// Floating point text with 17 significant digits.
std::string fmt17(double x);

// FNV-1a 64-bit content hash of a file, as a hex string.
std::string file_hash(const std::filesystem::path& path);

} // namespace fracwave

#pragma once

#include <filesystem>

#include "emhd/state.hpp"

namespace emhd {

/// Binary dump: magic "EMHDCKPT", format version, n, L, t, then samples and
/// coefficients of a and b in native little-endian doubles. Round trips bit-exactly.
void save_checkpoint(const std::filesystem::path& path, const State& state);
State load_checkpoint(const std::filesystem::path& path);

}  // namespace emhd

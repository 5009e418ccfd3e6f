#include "emhd/checkpoint.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "emhd/errors.hpp"

namespace emhd {
namespace {

static_assert(std::endian::native == std::endian::little, "checkpoint format is little-endian");

constexpr std::array<char, 8> kMagic{'E', 'M', 'H', 'D', 'C', 'K', 'P', 'T'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw NumericError("checkpoint: truncated file");
  return v;
}

void put_field(std::ofstream& os, const Field& f) {
  const auto v = f.values();
  const auto c = f.coefficients();
  os.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size_bytes()));
  os.write(reinterpret_cast<const char*>(c.data()), static_cast<std::streamsize>(c.size_bytes()));
}

Field get_field(std::ifstream& is, const Grid& grid) {
  std::vector<double> v(grid.size());
  Spectrum c(grid.spectral_size());
  is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
  is.read(reinterpret_cast<char*>(c.data()), static_cast<std::streamsize>(c.size() * sizeof(Complex)));
  if (!is) throw NumericError("checkpoint: truncated field data");
  return Field::restore(grid, std::move(v), std::move(c));
}

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const State& state) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw ConfigError("checkpoint: cannot open " + path.string() + " for writing");
  os.write(kMagic.data(), kMagic.size());
  put(os, kVersion);
  put(os, static_cast<std::uint64_t>(state.grid().n()));
  put(os, state.grid().box_half_width());
  put(os, state.t);
  put_field(os, state.a);
  put_field(os, state.b);
  if (!os) throw NumericError("checkpoint: write failed for " + path.string());
}

State load_checkpoint(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("checkpoint: cannot open " + path.string());
  std::array<char, 8> magic{};
  is.read(magic.data(), magic.size());
  if (!is || magic != kMagic) throw NumericError("checkpoint: bad magic in " + path.string());
  if (get<std::uint32_t>(is) != kVersion) throw NumericError("checkpoint: unsupported version");
  const auto n = get<std::uint64_t>(is);
  const auto L = get<double>(is);
  const auto t = get<double>(is);
  const Grid grid(static_cast<std::size_t>(n), L);
  Field a = get_field(is, grid);
  Field b = get_field(is, grid);
  return State(std::move(a), std::move(b), t);
}

}  // namespace emhd

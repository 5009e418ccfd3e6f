#include "emhd/grid.hpp"

#include <string>

#include "emhd/errors.hpp"

namespace emhd {

Grid::Grid(std::size_t n, double box_half_width) : n_(n), half_width_(box_half_width) {
  if (n < 16 || (n & (n - 1)) != 0) {
    throw ConfigError("grid size must be a power of two >= 16, got " + std::to_string(n));
  }
  if (!(box_half_width > 0.0) || !std::isfinite(box_half_width)) {
    throw ConfigError("box half-width must be positive and finite");
  }
}

}  // namespace emhd

#pragma once

#include "emhd/field.hpp"

namespace emhd {

/// The pair (a, b) at time t. u = grad^perp b is derived on demand.
struct State {
  Field a;
  Field b;
  double t = 0.0;

  State(Field a_field, Field b_field, double time);
  const Grid& grid() const { return a.grid(); }
  bool finite() const { return a.all_finite() && b.all_finite(); }
};

}  // namespace emhd

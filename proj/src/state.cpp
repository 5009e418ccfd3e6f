#include "emhd/state.hpp"

#include "emhd/errors.hpp"

namespace emhd {

State::State(Field a_field, Field b_field, double time)
    : a(std::move(a_field)), b(std::move(b_field)), t(time) {
  if (!(a.grid() == b.grid())) throw GridMismatch("state fields live on different grids");
}

}  // namespace emhd

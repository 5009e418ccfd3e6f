#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "emhd/checkpoint.hpp"
#include "emhd/errors.hpp"
#include "emhd/initial_data.hpp"

using namespace emhd;
namespace fs = std::filesystem;

TEST_CASE("checkpoint round trip is bit-exact") {
  const ParamSet p = ParamSet::make(8.0, 3.5, 1.2, 1.485);
  const Grid g(128, 1.0);
  const InitialData d = make_initial_data(p, g);
  State s = d.state;
  s.t = 0.0123456789;
  const fs::path dir = fs::temp_directory_path() / "emhd_ckpt_test";
  fs::create_directories(dir);
  const fs::path file = dir / "state.ckpt";
  save_checkpoint(file, s);
  const State r = load_checkpoint(file);
  CHECK(r.t == s.t);
  CHECK(r.grid() == s.grid());
  for (std::size_t k = 0; k < s.a.values().size(); ++k) {
    CHECK(r.a.values()[k] == s.a.values()[k]);
    CHECK(r.b.values()[k] == s.b.values()[k]);
  }
  for (std::size_t k = 0; k < s.a.coefficients().size(); ++k) {
    CHECK(r.a.coefficients()[k] == s.a.coefficients()[k]);
    CHECK(r.b.coefficients()[k] == s.b.coefficients()[k]);
  }
  fs::remove_all(dir);
}

TEST_CASE("corrupt checkpoints are rejected") {
  const fs::path dir = fs::temp_directory_path() / "emhd_ckpt_bad";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "magic.ckpt", std::ios::binary) << "NOTACKPTxxxxxxxxxxxxxxxxxxxxxxx";
  }
  CHECK_THROWS_AS(load_checkpoint(dir / "magic.ckpt"), NumericError);
  CHECK_THROWS_AS(load_checkpoint(dir / "missing.ckpt"), ConfigError);

  const State s(Field(Grid(16, 1.0)), Field(Grid(16, 1.0)), 0.0);
  save_checkpoint(dir / "short.ckpt", s);
  fs::resize_file(dir / "short.ckpt", fs::file_size(dir / "short.ckpt") - 8);
  CHECK_THROWS_AS(load_checkpoint(dir / "short.ckpt"), NumericError);
  fs::remove_all(dir);
}

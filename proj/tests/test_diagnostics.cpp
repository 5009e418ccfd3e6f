#include <doctest.h>

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "emhd/diagnostics.hpp"
#include "emhd/errors.hpp"
#include "emhd/initial_data.hpp"
#include "emhd/spectral.hpp"

using namespace emhd;

namespace {

const ParamSet kP8 = ParamSet::make(8.0, 3.5, 1.2, 1.485);

}  // namespace

TEST_CASE("norm column names round trip") {
  const NormKey a{"a", 3.5, true}, du{"du", 1.5, false}, neg{"A", -1.0, true}, odd{"ubar", 0.1, false};
  CHECK(a.column() == "a_dH3.5");
  CHECK(du.column() == "du_H1.5");
  CHECK(neg.column() == "A_dH-1");
  for (const NormKey& k : {a, du, neg, odd}) CHECK(NormKey::parse(k.column()) == k);
  CHECK_FALSE(NormKey::parse("energy").has_value());
  CHECK_FALSE(NormKey::parse("a_X2").has_value());
}

TEST_CASE("record set/get/at") {
  DiagnosticsRecord r;
  r.set({"a", 1.0, true}, 2.0);
  r.set({"a", 1.0, true}, 3.0);
  r.set({"b", 0.0, false}, 4.0);
  CHECK(r.norms.size() == 2);
  CHECK(r.get({"a", 1.0, true}) == 3.0);
  CHECK_FALSE(r.get({"a", 1.0, false}).has_value());
  CHECK(r.at("b", 0.0, false) == 4.0);
  CHECK_THROWS_AS(r.at("c", 0.0, false), std::out_of_range);
}

TEST_CASE("default orders") {
  CHECK(default_orders(3.5) == std::vector<double>{-1, 0, 1, 2, 1.5, 2.5, 3.5});
  CHECK(default_orders(4.0) == std::vector<double>{-1, 0, 1, 2, 3, 4});
}

TEST_CASE("physical and spectral energy routes agree") {
  const Grid g(512, default_box_half_width(kP8));
  const InitialData d = make_initial_data(kP8, g);
  CHECK(energy(d.state) == doctest::Approx(energy_spectral(d.state)).epsilon(1e-12));
}

TEST_CASE("perturbation of the dealiased initial state vanishes") {
  const Grid g(512, default_box_half_width(kP8));
  const ApproxSolution sol(kP8, g);
  const InitialData d = make_initial_data(kP8, g);
  const State s(dealias(d.state.a), dealias(d.state.b), 0.0);
  const VectorField u0 = reference_velocity(d.state, true);
  const Perturbation p = perturbation(s, sol, u0, {0.0, kP8.beta});
  for (const auto& [k, v] : p.norms) CHECK(v < 1e-14);
  CHECK(p.norms.size() == 4);
  CHECK(p.norms[0].first == NormKey{"A", 0.0, true});
  CHECK(p.norms[2].first == NormKey{"du", 0.0, false});
  // Without projection A is the truncated tail of a0, small but non-zero.
  const Perturbation q = perturbation(s, sol, u0, {0.0}, false);
  CHECK(q.norms[0].second > 0.0);
  CHECK(q.norms[0].second < 1e-5 * sobolev_norm(d.state.a, 0.0, true));
  const ApproxSolution other(kP8, Grid(256, g.box_half_width()));
  CHECK_THROWS_AS(perturbation(s, other, u0, {0.0}), GridMismatch);
}

TEST_CASE("standard probe columns and carrier horizon") {
  const Grid g(512, default_box_half_width(kP8));
  const auto sol = std::make_shared<const ApproxSolution>(kP8, g);
  const InitialData d = make_initial_data(kP8, g);
  ProbeConfig pc;
  pc.orders = {-1.0, 0.0, kP8.beta};
  pc.approx = sol;
  pc.u0 = reference_velocity(d.state, true);
  const Probe probe = standard_probe(pc);
  const DiagnosticsRecord r = probe(d.state, StepInfo{});
  CHECK(r.get({"a", -1.0, true}).has_value());
  CHECK_FALSE(r.get({"b", -1.0, true}).has_value());
  CHECK(r.get({"b", 0.0, true}).has_value());
  CHECK(r.get({"abar", kP8.beta, true}).has_value());
  CHECK(r.get({"A", kP8.beta, true}).has_value());
  CHECK(r.get({"du", 0.0, false}).has_value());
  CHECK(r.energy == doctest::Approx(energy(d.state)));

  State late = d.state;
  late.t = 2.0 * sol->resolution_horizon();
  const DiagnosticsRecord q = probe(late, StepInfo{});
  CHECK(q.get({"a", 0.0, true}).has_value());
  CHECK_FALSE(q.get({"abar", 0.0, true}).has_value());
  CHECK_FALSE(q.get({"A", 0.0, true}).has_value());

  ProbeConfig bad;
  CHECK_THROWS_AS(standard_probe(bad), ConfigError);
  bad.orders = {0.0};
  bad.approx = sol;
  CHECK_THROWS_AS(standard_probe(bad), ConfigError);
}

TEST_CASE("inflation report") {
  std::vector<DiagnosticsRecord> recs(3);
  const double vals[3][2] = {{1.0, 1.0}, {3.0, 2.0}, {2.0, 2.0}};
  for (int i = 0; i < 3; ++i) {
    recs[i].t = 0.1 * i;
    recs[i].set({"a", kP8.beta, true}, vals[i][0]);
    recs[i].set({"b", kP8.beta - 1.0, true}, vals[i][1]);
  }
  recs.back().status = "completed";
  const InflationReport rep = inflation_report(recs, kP8);
  CHECK(rep.ratios == std::vector<double>{1.0, 2.5, 2.0});
  CHECK(rep.max_ratio == 2.5);
  CHECK(rep.t_max == doctest::Approx(0.1));
  CHECK(rep.ended_by == "t_end");
  CHECK(rep.t_final == doctest::Approx(0.2));
  recs.back().status = "resolution";
  CHECK(inflation_report(recs, kP8).ended_by == "resolution");
  CHECK_THROWS_AS(inflation_report({}, kP8), ConfigError);
}

TEST_CASE("CSV round trip is exact and keeps missing cells") {
  std::vector<DiagnosticsRecord> recs(2);
  recs[0].t = 0.0;
  recs[0].energy = 1.0 / 3.0;
  recs[0].set({"a", 3.5, true}, std::nextafter(1.0, 2.0));
  recs[0].set({"abar", -1.0, true}, 1e-300);
  recs[1].t = 1e-5;
  recs[1].energy = 0.1;
  recs[1].realized_dt = 2.5e-7;
  recs[1].resolution_fraction = 3e-9;
  recs[1].status = "resolution";
  recs[1].set({"a", 3.5, true}, 7.0);
  recs[1].set({"du", 1.5, false}, 0.25);

  std::stringstream ss;
  write_csv(ss, recs);
  const std::string text = ss.str();
  CHECK(text.substr(0, text.find('\n')) ==
        "t,energy,resolution_fraction,realized_dt,status,a_dH3.5,abar_dH-1,du_H1.5");
  const auto back = read_csv(ss);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].t == recs[i].t);
    CHECK(back[i].energy == recs[i].energy);
    CHECK(back[i].realized_dt == recs[i].realized_dt);
    CHECK(back[i].resolution_fraction == recs[i].resolution_fraction);
    CHECK(back[i].status == recs[i].status);
    CHECK(back[i].norms.size() == recs[i].norms.size());
    for (const auto& [k, v] : recs[i].norms) CHECK(back[i].get(k) == v);
  }
  CHECK_FALSE(back[1].get({"abar", -1.0, true}).has_value());
}

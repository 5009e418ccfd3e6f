#include "emhd/region.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

#include "emhd/errors.hpp"

namespace emhd {
namespace {

using boost::multiprecision::cpp_int;

Rational r(long p, long q = 1) { return Rational(cpp_int(p), cpp_int(q)); }

void require_beta(const Rational& beta) {
  if (!(beta > 3 && beta < 4)) throw ConfigError("beta must satisfy 3 < beta < 4");
}

cpp_int parse_digits(const std::string& s, const std::string& text) {
  if (s.empty()) return 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ConfigError("not a rational number: '" + text + "'");
    }
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = s.find_first_not_of('0');
  return first == std::string::npos ? cpp_int(0) : cpp_int(s.substr(first));
}

Rational parse_decimal(const std::string& body, const std::string& text) {
  std::string mant = body;
  long exponent = 0;
  if (const auto e = body.find_first_of("eE"); e != std::string::npos) {
    mant = body.substr(0, e);
    std::string ex = body.substr(e + 1);
    bool neg = false;
    if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
      neg = ex[0] == '-';
      ex = ex.substr(1);
    }
    if (ex.empty() || ex.size() > 6) throw ConfigError("bad exponent in '" + text + "'");
    exponent = static_cast<long>(parse_digits(ex, text));
    if (neg) exponent = -exponent;
  }
  std::string ip = mant, fp;
  if (const auto dot = mant.find('.'); dot != std::string::npos) {
    ip = mant.substr(0, dot);
    fp = mant.substr(dot + 1);
  }
  if (ip.empty() && fp.empty()) throw ConfigError("not a rational number: '" + text + "'");
  const cpp_int digits = parse_digits(ip + fp, text);
  exponent -= static_cast<long>(fp.size());
  cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(std::labs(exponent)));
  return exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw ConfigError("empty rational");
  bool negative = false;
  std::string body = text;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const Rational num = parse_decimal(body.substr(0, slash), text);
    const Rational den = parse_decimal(body.substr(slash + 1), text);
    if (den == 0) throw ConfigError("zero denominator in '" + text + "'");
    value = num / den;
  } else {
    value = parse_decimal(body, text);
  }
  return negative ? Rational(-value) : value;
}

std::string fraction_string(const Rational& q) {
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::vector<ConstraintCheck> base_constraints(const Rational& beta, const Rational& gamma,
                                              const Rational& zeta) {
  return {{"beta_range", beta > 3 && beta < 4},
          {"gamma_gt_1", gamma > 1},
          {"zeta_range", zeta > 0 && zeta < 5 - beta}};
}

Rational zeta_lb_baru(const Rational& beta, const Rational& gamma) {
  require_beta(beta);
  return ((5 - beta) * (4 + beta) + (4 - beta) * gamma) / (5 + beta);
}

Rational zeta_lb_perturb(const Rational& beta, const Rational& gamma) {
  require_beta(beta);
  return (10 * gamma * (4 - beta) + 36 * (5 - beta)) / 41;
}

Rational zeta_lb_combined(const Rational& beta, const Rational& gamma) {
  require_beta(beta);
  const Rational a = r(36, 41);
  const Rational b = (4 + beta) / (5 + beta);
  return r(10, 41) * gamma * (4 - beta) + (a > b ? a : b) * (5 - beta);
}

GammaWindows gamma_windows(const Rational& beta) {
  require_beta(beta);
  GammaWindows w;
  w.baru = (5 - beta) / (4 - beta);
  w.perturb = (5 - beta) / (2 * (4 - beta));
  w.balance = 41 * (5 - beta) / (10 * (5 + beta) * (4 - beta));
  w.combined = w.perturb < w.balance ? w.perturb : w.balance;
  return w;
}

std::optional<Rational> RegionVerdict::value(const std::string& name) const {
  for (const auto& [k, v] : values) {
    if (k == name) return v;
  }
  return std::nullopt;
}

RegionVerdict admissible(const Rational& beta, const Rational& gamma) {
  RegionVerdict v;
  if (!(beta > 3 && beta < 4)) {
    v.binding_constraints.push_back("beta_range");
    if (!(gamma > 1)) v.binding_constraints.push_back("gamma_gt_1");
    return v;
  }
  const GammaWindows w = gamma_windows(beta);
  const Rational lb_baru = zeta_lb_baru(beta, gamma);
  const Rational lb_pert = zeta_lb_perturb(beta, gamma);
  const Rational lb_comb = zeta_lb_combined(beta, gamma);
  const Rational upper = 5 - beta;
  v.values = {{"gamma_window_baru", w.baru},       {"gamma_window_perturb", w.perturb},
              {"gamma_window_balance", w.balance}, {"gamma_window_combined", w.combined},
              {"zeta_lb_baru", lb_baru},           {"zeta_lb_perturb", lb_pert},
              {"zeta_lb_combined", lb_comb},       {"zeta_ub", upper}};

  if (!(gamma > 1)) v.binding_constraints.push_back("gamma_gt_1");
  if (!(gamma < w.baru)) v.binding_constraints.push_back("gamma_window_baru");
  if (!(gamma < w.perturb)) v.binding_constraints.push_back("gamma_window_perturb");
  if (!(gamma < w.balance)) v.binding_constraints.push_back("gamma_window_balance");
  if (!(gamma < w.combined)) v.binding_constraints.push_back("gamma_window_combined");

  // Largest lower bound; ties favour the strict bounds.
  Rational lower = lb_comb;
  std::string active = "zeta_lb_combined";
  bool inclusive = false;
  if (lb_pert > lower) {
    lower = lb_pert;
    active = "zeta_lb_perturb";
  }
  if (lb_baru > lower) {
    lower = lb_baru;
    active = "zeta_lb_baru";
    inclusive = true;
  }
  if (!(lower < upper)) v.binding_constraints.push_back(active + "_vs_zeta_ub");

  v.admissible = v.binding_constraints.empty();
  if (v.admissible) {
    v.zeta_interval = std::make_pair(lower, upper);
    v.lower_inclusive = inclusive;
    v.binding_constraints.push_back(active);
  }
  return v;
}

bool zeta_passes_all(const Rational& beta, const Rational& gamma, const Rational& zeta) {
  for (const auto& c : base_constraints(beta, gamma, zeta)) {
    if (!c.satisfied) return false;
  }
  return zeta >= zeta_lb_baru(beta, gamma) && zeta > zeta_lb_perturb(beta, gamma);
}

std::vector<RegionRow> region_sweep(const std::vector<Rational>& betas,
                                    const std::vector<Rational>& gammas) {
  std::vector<RegionRow> rows;
  rows.reserve(betas.size() * gammas.size());
  for (const auto& b : betas) {
    for (const auto& g : gammas) rows.push_back({b, g, admissible(b, g)});
  }
  return rows;
}

void write_region_csv(std::ostream& os, const std::vector<RegionRow>& rows) {
  os << "beta,gamma,beta_frac,gamma_frac,admissible,zeta_lo,zeta_lo_frac,zeta_hi,zeta_hi_frac,"
        "lower_inclusive,binding\n";
  auto num = [](const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", to_double(q));
    return std::string(buf);
  };
  for (const auto& row : rows) {
    const auto& v = row.verdict;
    os << num(row.beta) << ',' << num(row.gamma) << ',' << fraction_string(row.beta) << ','
       << fraction_string(row.gamma) << ',' << (v.admissible ? 1 : 0) << ',';
    std::optional<Rational> lo, hi;
    if (v.zeta_interval) {
      lo = v.zeta_interval->first;
      hi = v.zeta_interval->second;
    } else if (auto ub = v.value("zeta_ub")) {
      const Rational a = *v.value("zeta_lb_combined"), b = *v.value("zeta_lb_perturb"),
                     c = *v.value("zeta_lb_baru");
      Rational m = a > b ? a : b;
      lo = m > c ? m : c;
      hi = *ub;
    }
    if (lo) {
      os << num(*lo) << ',' << fraction_string(*lo) << ',' << num(*hi) << ','
         << fraction_string(*hi) << ',';
    } else {
      os << ",,,,";
    }
    os << (v.lower_inclusive ? 1 : 0) << ',';
    for (std::size_t i = 0; i < v.binding_constraints.size(); ++i) {
      os << (i ? ";" : "") << v.binding_constraints[i];
    }
    os << '\n';
  }
}

ImplicationReport check_combined_implication(int nb, int ng) {
  if (nb < 1 || ng < 1) throw ConfigError("implication grid needs positive sizes");
  ImplicationReport rep;
  for (int i = 1; i <= nb; ++i) {
    const Rational beta = 3 + r(i, nb + 1);
    for (int j = 1; j <= ng; ++j) {
      const Rational gamma = 1 + r(2 * j, ng + 1);
      ++rep.cells;
      const Rational comb = zeta_lb_combined(beta, gamma);
      if (comb < zeta_lb_baru(beta, gamma) || comb < zeta_lb_perturb(beta, gamma)) {
        ++rep.violations;
        if (rep.counterexamples.size() < 10) rep.counterexamples.emplace_back(beta, gamma);
      }
    }
  }
  return rep;
}

}  // namespace emhd

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace emhd {

/// Identifies one norm column: quantity name, order s, homogeneous flag.
struct NormKey {
  std::string quantity;  // a, b, abar, A, du, ubar, ...
  double s = 0.0;
  bool homogeneous = true;

  /// CSV column name, e.g. "a_dH3.5" (homogeneous) or "du_H1.5".
  std::string column() const;
  /// Inverse of column(); nullopt for non-norm columns.
  static std::optional<NormKey> parse(const std::string& column);

  friend bool operator==(const NormKey&, const NormKey&) = default;
};

/// One timestamped row of a trajectory.
struct DiagnosticsRecord {
  double t = 0.0;
  double energy = 0.0;
  double resolution_fraction = 0.0;
  double realized_dt = 0.0;
  /// "ok" on interior rows; the last row carries the run's terminal status.
  std::string status = "ok";
  /// Norm entries in insertion order (this order becomes the CSV column order).
  std::vector<std::pair<NormKey, double>> norms;

  void set(const NormKey& key, double value);
  std::optional<double> get(const NormKey& key) const;
  /// Throws std::out_of_range when absent.
  double at(const std::string& quantity, double s, bool homogeneous) const;
};

}  // namespace emhd
